#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdi/coords.hpp"

namespace cdi {

/// Parses "2,0,1" or, when every entry is a single digit, the compact "201".
/// A leading '-' is accepted in the comma form only.
std::vector<int> parse_int_list(std::string_view text);

/// Compact digit string when every value is in [0,9], comma-separated otherwise.
std::string render_int_list(std::span<const int> values);

std::string render_weight(const Weight& w);

/// Per-node labels alpha_i(h) in {0,1,2}, Bourbaki node order.
class WeightedDynkinDiagram {
 public:
  WeightedDynkinDiagram() = default;
  explicit WeightedDynkinDiagram(std::vector<int> labels);

  static WeightedDynkinDiagram parse(std::string_view text);

  int rank() const noexcept { return static_cast<int>(labels_.size()); }
  int operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }
  std::span<const int> labels() const noexcept { return labels_; }

  /// The diagram read as a vector in the fundamental-weight basis (a coweight
  /// of G is a weight of the dual group).
  Weight as_weight() const;
  std::string render() const { return render_int_list(labels_); }

  friend bool operator==(const WeightedDynkinDiagram&, const WeightedDynkinDiagram&) = default;
  friend auto operator<=>(const WeightedDynkinDiagram&, const WeightedDynkinDiagram&) = default;

 private:
  std::vector<int> labels_;
};

bool is_even(const WeightedDynkinDiagram& h);

}  // namespace cdi
