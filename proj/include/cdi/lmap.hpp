#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdi/groupring.hpp"
#include "cdi/orbits.hpp"
#include "cdi/rootsys.hpp"

namespace cdi {

enum class Strategy {
  automatic,     // hybrid_levi when |W_L| fits levi_cap, else full_product
  full_product,  // expand every binomial, then symmetrize
  hybrid_levi,   // Levi factor via the Weyl denominator, rest by binomials
  richardson,    // dominant conjugate of 2 rho_L; even orbits only
  gl_transpose,  // type A only: diagram of the transposed partition
};

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

struct LMapOptions {
  Strategy strategy = Strategy::automatic;
  std::size_t term_cap = 100'000'000;
  std::size_t levi_cap = 10'000'000;
  std::uint64_t work_cap = 20'000'000'000ULL;
};

struct LMapStats {
  std::size_t terms_peak = 0;
  std::int64_t ms = 0;
};

struct LMapResult {
  OrbitLabel orbit;
  WeightedDynkinDiagram diagram;
  Weight weight;  // L(O), dominant
  Rational norm_sq;
  int leading_sign = 1;
  Strategy strategy = Strategy::full_product;
  LMapStats stats;
};

/// Positive roots with alpha(h) = 0 and alpha(h) = 1.
struct RootSplit {
  std::vector<Root> zero;
  std::vector<Root> one;
};

RootSplit roots_le_one(const RootSystem& rs, const WeightedDynkinDiagram& h);

/// Nodes with label 0: the Levi whose positive roots are exactly the roots
/// with alpha(h) = 0.
NodeSet zero_nodes(const WeightedDynkinDiagram& h);

/// L(O) from the weighted Dynkin diagram. The result's orbit label is the
/// diagram itself. gl_transpose needs a partition: use compute_orbit.
LMapResult compute_L(const RootSystem& rs, const WeightedDynkinDiagram& h,
                     const LMapOptions& options = {});

LMapResult compute_orbit(const RootSystem& rs, const Orbit& orbit, const LMapOptions& options = {});

Weight richardson_weight(const RootSystem& rs, NodeSet nodes);

/// Diagram of the transposed partition in A_{n-1}, read as a weight.
Weight gl_dual_weight(const Partition& p);

/// Outcome of one orbit in a batch: a result, or the reason it was skipped.
struct OrbitComputation {
  Orbit orbit;
  std::optional<LMapResult> result;
  std::string skipped;  // resource-limit message when !result
};

/// Computes every orbit on a bounded pool of `threads` workers. Output order
/// equals input order regardless of scheduling. Only resource_limit is
/// turned into a skip; other errors propagate.
std::vector<OrbitComputation> compute_all(const RootSystem& rs, const std::vector<Orbit>& orbits,
                                          const LMapOptions& options, unsigned threads = 1);

/// Langlands dual type: B_n <-> C_n, other types map to themselves.
CartanType langlands_dual(CartanType t);

/// Position in the dual's Bourbaki numbering of each node of t. Identity for
/// A-E; reversed for F4 and G2, whose Bourbaki numbering puts the long nodes
/// first (F4) or last (G2) on both sides.
std::vector<int> dual_node_map(CartanType t);

struct ReciprocityCheck {
  std::string orbit;        // O, even with L(O) divisible by 2
  std::string weight;       // L(O)
  std::string dual_orbit;   // O' with diagram L(O), empty when missing
  std::string dual_weight;  // L(O')
  bool ok = false;
};

struct ReciprocityReport {
  CartanType type;
  CartanType dual;
  std::vector<ReciprocityCheck> checks;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// For every even O with L(O) divisible by 2: L(O), mapped to the dual's
/// nodes, must be the diagram of some O' of the dual, and L(O') must be the
/// diagram of O. A missing O' is reported as a MissingDualOrbit failure.
ReciprocityReport check_reciprocity(const std::vector<LMapResult>& results, CartanType dual,
                                    const std::vector<LMapResult>& dual_results);

}  // namespace cdi
