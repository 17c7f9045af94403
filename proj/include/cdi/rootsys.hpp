#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "cdi/coords.hpp"
#include "cdi/diagram.hpp"

namespace cdi {

using Rational = boost::rational<std::int64_t>;

/// A subset of Dynkin nodes (0-based Bourbaki indices).
using NodeSet = std::bitset<kMaxRank>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Throws invalid_rank unless A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2
  /// (and rank <= kMaxRank).
  void validate() const;
  /// "B2", "E6", ...
  std::string name() const;
  static CartanType parse(std::string_view name);
  static CartanType make(Family f, int rank);

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

bool is_classical(Family f);
Family parse_family(std::string_view text);

/// Immutable root datum of a simple Lie algebra in Bourbaki numbering.
///
/// Conventions: cartan(i,j) = <alpha_j, alpha_i^vee>, so the simple root
/// alpha_j in the fundamental-weight basis is column j of the Cartan matrix.
/// The invariant form is scaled so that short roots have squared length 2.
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }

  int cartan(int i, int j) const { return cartan_[i][j]; }
  Rational inv_cartan(int i, int j) const { return inv_cartan_[i][j]; }
  /// d_i = (alpha_i, alpha_i) / 2, min over nodes equal to 1.
  Rational symmetrizer(int i) const { return Rational(form_[i][i], 2); }
  /// (omega_i, omega_j).
  Rational gram_fundamental(int i, int j) const { return gram_[i][j]; }
  /// (alpha_i, alpha_j) with short roots of squared length 2.
  int simple_form(int i, int j) const { return form_[i][j]; }

  /// Ordered by (height, coordinates descending lexicographically).
  std::span<const Root> positive_roots() const noexcept { return positive_roots_; }
  const Weight& simple_root_weight(int i) const { return simple_weights_[i]; }

  Weight root_as_weight(const Root& r) const;
  Weight dominant_representative(Weight w) const;
  bool dominance_leq(const Weight& mu, const Weight& lam) const;
  Rational norm_sq(const Weight& w) const;

  /// Simple-root coordinates of w multiplied by inverse_denominator(); exact.
  std::array<std::int64_t, kMaxRank> scaled_root_coords(const Weight& w) const;
  std::int64_t scaled_height(const Weight& w) const;
  std::int64_t inverse_denominator() const noexcept { return inv_den_; }

  std::vector<Root> levi_positive_roots(NodeSet nodes) const;
  Weight two_rho_levi(NodeSet nodes) const;
  /// |W_L| for the standard Levi on `nodes`.
  std::uint64_t levi_weyl_order(NodeSet nodes) const;
  NodeSet all_nodes() const;

 private:
  void build_positive_roots();

  CartanType type_;
  std::array<std::array<int, kMaxRank>, kMaxRank> form_{};
  std::array<std::array<int, kMaxRank>, kMaxRank> cartan_{};
  std::array<std::array<Rational, kMaxRank>, kMaxRank> inv_cartan_{};
  std::array<std::array<Rational, kMaxRank>, kMaxRank> gram_{};
  std::array<std::array<std::int64_t, kMaxRank>, kMaxRank> inv_scaled_{};
  std::int64_t inv_den_ = 1;
  std::array<Weight, kMaxRank> simple_weights_{};
  std::vector<Root> positive_roots_;
};

RootSystem build_root_system(CartanType type);

/// alpha(h) = sum_i m_i * label_i.
int pairing_with_diagram(const Root& r, const WeightedDynkinDiagram& h);

}  // namespace cdi
