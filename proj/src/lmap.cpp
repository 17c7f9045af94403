#include "cdi/lmap.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "cdi/error.hpp"

namespace cdi {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::automatic: return "auto";
    case Strategy::full_product: return "full_product";
    case Strategy::hybrid_levi: return "hybrid_levi";
    case Strategy::richardson: return "richardson";
    case Strategy::gl_transpose: return "gl_transpose";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "auto") return Strategy::automatic;
  if (text == "full" || text == "full_product") return Strategy::full_product;
  if (text == "hybrid" || text == "hybrid_levi") return Strategy::hybrid_levi;
  if (text == "richardson") return Strategy::richardson;
  if (text == "gl" || text == "gl_transpose") return Strategy::gl_transpose;
  throw Error(Errc::parse_error, "unknown strategy '" + std::string(text) + "'");
}

RootSplit roots_le_one(const RootSystem& rs, const WeightedDynkinDiagram& h) {
  if (h.rank() != rs.rank()) {
    throw Error(Errc::rank_mismatch, "diagram " + h.render() + " for " + rs.type().name());
  }
  RootSplit split;
  for (const Root& r : rs.positive_roots()) {
    const int v = pairing_with_diagram(r, h);
    if (v == 0) split.zero.push_back(r);
    else if (v == 1) split.one.push_back(r);
  }
  return split;
}

NodeSet zero_nodes(const WeightedDynkinDiagram& h) {
  NodeSet s;
  for (int i = 0; i < h.rank(); ++i)
    if (h[i] == 0) s.set(i);
  return s;
}

Weight richardson_weight(const RootSystem& rs, NodeSet nodes) {
  return rs.dominant_representative(rs.two_rho_levi(nodes));
}

Weight gl_dual_weight(const Partition& p) {
  if (p.size() < 2) throw Error(Errc::invalid_rank, "GL_n shortcut needs n >= 2");
  const CartanType a = CartanType::make(Family::A, p.size() - 1);
  return diagram_from_partition(transpose_partition(p), a).as_weight();
}

namespace {

using Clock = std::chrono::steady_clock;

LMapResult finish(const RootSystem& rs, const WeightedDynkinDiagram& h, Weight weight, int sign,
                  Strategy used, std::size_t peak, Clock::time_point start) {
  LMapResult r;
  r.orbit = DiagramOrbit{std::nullopt, h};
  r.diagram = h;
  r.norm_sq = rs.norm_sq(weight);
  r.weight = std::move(weight);
  r.leading_sign = sign;
  r.strategy = used;
  r.stats.terms_peak = peak;
  r.stats.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return r;
}

int sign_of(const LeadingTerm& t) {
  // Every verified case has a unit leading coefficient; anything else is
  // still reported through its sign.
  return t.coefficient > 0 ? 1 : -1;
}

}  // namespace

LMapResult compute_L(const RootSystem& rs, const WeightedDynkinDiagram& h, const LMapOptions& options) {
  const auto start = Clock::now();
  const RootSplit split = roots_le_one(rs, h);
  const NodeSet levi = zero_nodes(h);

  switch (options.strategy) {
    case Strategy::gl_transpose:
      throw Error(Errc::invalid_argument, "gl_transpose needs a partition label; use compute_orbit");
    case Strategy::richardson: {
      if (!is_even(h)) {
        throw Error(Errc::invalid_argument, "richardson strategy applies to even orbits only");
      }
      return finish(rs, h, richardson_weight(rs, levi), 1, Strategy::richardson, 0, start);
    }
    default: break;
  }

  Strategy used = options.strategy;
  if (used == Strategy::automatic || used == Strategy::hybrid_levi) {
    used = rs.levi_weyl_order(levi) <= options.levi_cap ? Strategy::hybrid_levi : Strategy::full_product;
  }

  ProductStats stats;
  ExponentialSum symmetric(rs.rank());
  ProductOptions product_options;
  product_options.term_cap = options.term_cap;
  if (used == Strategy::hybrid_levi) {
    const ExponentialSum invariant = product_over_roots(rs, split.one, product_options, &stats);
    LeviProductLimits limits;
    limits.term_cap = options.term_cap;
    limits.levi_cap = options.levi_cap;
    limits.work_cap = options.work_cap;
    symmetric = symmetrized_levi_product(rs, levi, invariant, limits, &stats);
  } else {
    std::vector<Root> roots = split.zero;
    roots.insert(roots.end(), split.one.begin(), split.one.end());
    const ExponentialSum product = product_over_roots(rs, roots, product_options, &stats);
    symmetric = symmetrize_dominant(product, rs);
    stats.peak_terms = std::max(stats.peak_terms, symmetric.size());
  }
  const LeadingTerm lead = leading_term(symmetric, rs);
  return finish(rs, h, lead.weight, sign_of(lead), used, stats.peak_terms, start);
}

LMapResult compute_orbit(const RootSystem& rs, const Orbit& orbit, const LMapOptions& options) {
  if (options.strategy == Strategy::gl_transpose) {
    if (rs.type().family != Family::A || !orbit.label.is_classical()) {
      throw Error(Errc::invalid_argument, "gl_transpose applies to type A partitions only");
    }
    const auto start = Clock::now();
    LMapResult r = finish(rs, orbit.diagram, gl_dual_weight(orbit.label.classical().partition), 1,
                          Strategy::gl_transpose, 0, start);
    r.orbit = orbit.label;
    return r;
  }
  LMapResult r = compute_L(rs, orbit.diagram, options);
  r.orbit = orbit.label;
  return r;
}

std::vector<OrbitComputation> compute_all(const RootSystem& rs, const std::vector<Orbit>& orbits,
                                          const LMapOptions& options, unsigned threads) {
  std::vector<OrbitComputation> out(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) out[i].orbit = orbits[i];

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= orbits.size()) return;
      try {
        out[i].result = compute_orbit(rs, orbits[i], options);
      } catch (const Error& e) {
        if (e.code() == Errc::resource_limit) {
          out[i].skipped = e.what();
        } else {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(orbits.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

CartanType langlands_dual(CartanType t) {
  if (t.family == Family::B) return CartanType::make(Family::C, t.rank);
  if (t.family == Family::C) return CartanType::make(Family::B, t.rank);
  return t;
}

std::vector<int> dual_node_map(CartanType t) {
  std::vector<int> map(static_cast<std::size_t>(t.rank));
  std::iota(map.begin(), map.end(), 0);
  if (t.family == Family::F || t.family == Family::G) std::reverse(map.begin(), map.end());
  return map;
}

ReciprocityReport check_reciprocity(const std::vector<LMapResult>& results, CartanType dual,
                                    const std::vector<LMapResult>& dual_results) {
  ReciprocityReport report{langlands_dual(dual), dual, {}, {}};
  const std::vector<int> to_dual = dual_node_map(report.type);
  const std::vector<int> back = dual_node_map(dual);

  auto move_nodes = [](std::span<const int> v, const std::vector<int>& map) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[map[i]] = v[i];
    return out;
  };

  for (const auto& r : results) {
    if (!is_even(r.diagram)) continue;
    if (std::any_of(r.weight.begin(), r.weight.end(), [](int v) { return v % 2 != 0; })) continue;
    ReciprocityCheck check;
    check.orbit = r.orbit.render();
    check.weight = render_weight(r.weight);
    const std::vector<int> target =
        move_nodes(std::span<const int>(r.weight.begin(), r.weight.end()), to_dual);
    const LMapResult* partner = nullptr;
    for (const auto& d : dual_results) {
      if (std::equal(d.diagram.labels().begin(), d.diagram.labels().end(), target.begin(), target.end())) {
        partner = &d;
        break;
      }
    }
    if (!partner) {
      report.failures.push_back("MissingDualOrbit: no orbit of " + dual.name() + " has diagram " +
                                render_int_list(target) + " = L(" + check.orbit + ")");
      report.checks.push_back(check);
      continue;
    }
    check.dual_orbit = partner->orbit.render();
    check.dual_weight = render_weight(partner->weight);
    const std::vector<int> back_weight =
        move_nodes(std::span<const int>(partner->weight.begin(), partner->weight.end()), back);
    check.ok = std::equal(back_weight.begin(), back_weight.end(), r.diagram.labels().begin(),
                          r.diagram.labels().end());
    if (!check.ok) {
      report.failures.push_back("L(" + check.dual_orbit + ") = " + check.dual_weight +
                                " is not the diagram " + r.diagram.render() + " of " + check.orbit);
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace cdi
