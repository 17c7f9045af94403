#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "cdi/rootsys.hpp"

namespace cdi {

/// Coefficients of a product of k binomials are bounded by 2^k, and k never
/// exceeds 120 (E8), so 128 bits cannot overflow; additions are still checked.
using Coeff = __int128;

std::string coeff_to_string(Coeff c);

/// Hash-map key: a weight squeezed into 16-bit coordinates.
struct PackedWeight {
  std::array<std::int16_t, kMaxRank> c{};
  friend bool operator==(const PackedWeight&, const PackedWeight&) = default;
};

struct PackedWeightHash {
  std::size_t operator()(const PackedWeight& k) const noexcept;
};

PackedWeight pack(const Weight& w);
Weight unpack(const PackedWeight& k, int rank);

/// Finite sum  sum_lambda c_lambda e^lambda  in the group ring of the weight
/// lattice. No stored coefficient is zero.
class ExponentialSum {
 public:
  using Map = absl::flat_hash_map<PackedWeight, Coeff, PackedWeightHash>;

  explicit ExponentialSum(int rank = 0) : rank_(rank) {}
  static ExponentialSum one(int rank);

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  Coeff coefficient(const Weight& w) const;
  void add(const Weight& w, Coeff c);
  /// Evaluation at e^lambda -> 1.
  Coeff coefficient_sum() const;

  /// Terms ordered by (height of exponent, coordinates).
  std::vector<std::pair<Weight, Coeff>> sorted_terms(const RootSystem& rs) const;
  std::string debug_string(const RootSystem& rs) const;

  const Map& terms() const noexcept { return terms_; }
  Map& terms() noexcept { return terms_; }

  friend bool operator==(const ExponentialSum& a, const ExponentialSum& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  int rank_ = 0;
  Map terms_;
};

/// Adds c at key, erasing the entry when it cancels to zero.
void accumulate(ExponentialSum::Map& map, const PackedWeight& key, Coeff c);

enum class MultiplicationOrder { as_given, increasing_height };

struct ProductOptions {
  std::size_t term_cap = 100'000'000;
  MultiplicationOrder order = MultiplicationOrder::increasing_height;
};

struct ProductStats {
  std::size_t peak_terms = 0;
};

/// Term count at which the two maps live during one multiplication step
/// would fill half of the memory available to the process (physical memory
/// or the cgroup limit, whichever is smaller). Every term cap is clamped to
/// this so an oversized expansion ends in resource_limit rather than the OOM
/// killer.
std::size_t memory_term_ceiling();

/// P * (1 - e^alpha).
ExponentialSum mul_binomial(const ExponentialSum& p, const Weight& alpha);

/// prod_{alpha in roots} (1 - e^alpha), fully expanded. Throws resource_limit
/// once the number of stored terms passes options.term_cap (clamped to
/// memory_term_ceiling()).
ExponentialSum product_over_roots(const RootSystem& rs, std::span<const Root> roots,
                                  const ProductOptions& options = {},
                                  ProductStats* stats = nullptr);

/// Replaces every exponent by its dominant W-conjugate and collects terms.
ExponentialSum symmetrize_dominant(const ExponentialSum& p, const RootSystem& rs);

struct LeadingTerm {
  Weight weight;
  Coeff coefficient = 0;
};

/// The unique exponent that dominates every other exponent of p. All
/// exponents must be dominant. Throws empty_sum or no_leading_term.
LeadingTerm leading_term(const ExponentialSum& p, const RootSystem& rs);

/// W_L for the standard Levi on a node set, stored as a breadth-first
/// spanning tree of the regular orbit of sum_{j in J} omega_j. Element k is
/// s_{generator(k)} * element(parent(k)); its length is its tree depth.
class LeviWeylGroup {
 public:
  /// Throws resource_limit if |W_L| exceeds cap.
  LeviWeylGroup(const RootSystem& rs, NodeSet nodes, std::size_t cap);

  std::size_t order() const noexcept { return parent_.size(); }
  NodeSet nodes() const noexcept { return nodes_; }

  /// Calls visit(w * lambda, det(w)) for every w in W_L.
  template <class Visit>
  void for_each_image(const Weight& lambda, Visit&& visit) const {
    std::vector<Weight>& images = scratch_;
    images.resize(order());
    images[0] = lambda;
    visit(images[0], 1);
    for (std::size_t k = 1; k < order(); ++k) {
      Weight w = images[parent_[k]];
      const int j = generator_[k];
      const int a = w[j];
      if (a != 0) {
        const Weight& root = rs_->simple_root_weight(j);
        for (int i = 0; i < w.rank(); ++i) w[i] -= a * root[i];
      }
      images[k] = w;
      visit(images[k], (length_[k] % 2 == 0) ? 1 : -1);
    }
  }

 private:
  const RootSystem* rs_;
  NodeSet nodes_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> generator_;
  std::vector<std::uint16_t> length_;
  mutable std::vector<Weight> scratch_;
};

/// sum_{w in W_L} det(w) e^{rho_L - w rho_L}, which equals the product of
/// (1 - e^alpha) over the positive roots of the Levi.
ExponentialSum weyl_denominator_levi(const RootSystem& rs, NodeSet nodes,
                                     std::size_t cap = 10'000'000);

struct LeviProductLimits {
  std::size_t term_cap = 100'000'000;
  std::size_t levi_cap = 10'000'000;
  /// Bound on (number of L-irreducible pieces) * |W_L| exponents streamed
  /// into the symmetrization.
  std::uint64_t work_cap = 20'000'000'000ULL;
};

/// symmetrize_dominant(invariant * weyl_denominator_levi(nodes)) without
/// materializing the product. `invariant` must be W_L-invariant (the product
/// over roots with alpha(h) = 1 is). The Levi denominator is folded in as
///   D_L * F = e^{rho_L} sum_f c_f A_L(f - rho_L),
/// each alternant A_L is straightened to an L-dominant regular weight, and
/// only the surviving alternants are expanded over W_L.
ExponentialSum symmetrized_levi_product(const RootSystem& rs, NodeSet nodes,
                                        const ExponentialSum& invariant,
                                        const LeviProductLimits& limits = {},
                                        ProductStats* stats = nullptr);

}  // namespace cdi
