#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cdi/diagram.hpp"
#include "cdi/rootsys.hpp"

namespace cdi {

/// Non-increasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws invalid_argument on a non-positive part.
  explicit Partition(std::vector<int> parts);

  /// Accepts "3,1^2" and "3,1,1" (optional surrounding parentheses, braces
  /// around exponents tolerated). No very-even tag; see OrbitLabel::parse.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;  // sum of the parts
  int multiplicity(int part) const noexcept;
  /// Canonical exponent form, descending: "3^2,1".
  std::string render() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition transpose_partition(const Partition& p);

enum class VeryEvenTag { I, II };

struct ClassicalOrbit {
  Partition partition;
  std::optional<VeryEvenTag> tag;

  friend bool operator==(const ClassicalOrbit&, const ClassicalOrbit&) = default;
};

/// Exceptional orbits (and anything given only by its diagram) are named by
/// their weighted Dynkin diagram; `index` is the position in the embedded list.
struct DiagramOrbit {
  std::optional<std::size_t> index;
  WeightedDynkinDiagram diagram;

  friend bool operator==(const DiagramOrbit& a, const DiagramOrbit& b) {
    return a.diagram == b.diagram;
  }
};

class OrbitLabel {
 public:
  OrbitLabel() = default;
  OrbitLabel(ClassicalOrbit c) : value_(std::move(c)) {}
  OrbitLabel(DiagramOrbit d) : value_(std::move(d)) {}

  /// Partition grammar with optional trailing "_1"/"_2" (tag I/II).
  static OrbitLabel parse_classical(std::string_view text);

  bool is_classical() const noexcept { return std::holds_alternative<ClassicalOrbit>(value_); }
  const ClassicalOrbit& classical() const { return std::get<ClassicalOrbit>(value_); }
  const DiagramOrbit& by_diagram() const { return std::get<DiagramOrbit>(value_); }

  /// "3,1^2", "4^2_1", or the diagram digits.
  std::string render() const;
  /// "I", "II" or empty.
  std::string tag_name() const;

  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;

 private:
  std::variant<ClassicalOrbit, DiagramOrbit> value_;
};

struct Orbit {
  OrbitLabel label;
  WeightedDynkinDiagram diagram;
};

bool is_admissible(const Partition& p, CartanType type);
bool is_very_even(const Partition& p, CartanType type);

/// Classical families only; order is reverse lexicographic on parts (a
/// linear extension of the dominance order, largest first), tag I before II.
std::vector<OrbitLabel> enumerate_orbits(CartanType type);

WeightedDynkinDiagram diagram_from_partition(const Partition& p, CartanType type,
                                             std::optional<VeryEvenTag> tag = std::nullopt);

/// Embedded table of exceptional orbit diagrams in reference order.
std::vector<WeightedDynkinDiagram> exceptional_orbit_diagrams(CartanType type);

/// Every orbit of the type with its diagram, classical or exceptional.
std::vector<Orbit> orbits_with_diagrams(CartanType type);

Orbit orbit_from_label(const OrbitLabel& label, CartanType type);

}  // namespace cdi
