#include "cdi/groupring.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <limits>

#include <unistd.h>

#include "cdi/diagram.hpp"
#include "cdi/error.hpp"

namespace cdi {

std::string coeff_to_string(Coeff c) {
  if (c == 0) return "0";
  const bool negative = c < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(c + 1)) + 1
                                 : static_cast<unsigned __int128>(c);
  std::string out;
  while (u > 0) {
    out += static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  if (negative) out += '-';
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t PackedWeightHash::operator()(const PackedWeight& k) const noexcept {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  static_assert(sizeof(k.c) == 2 * sizeof(std::uint64_t));
  std::memcpy(&a, k.c.data(), sizeof a);
  std::memcpy(&b, k.c.data() + 4, sizeof b);
  std::uint64_t h = a * 0x9E3779B97F4A7C15ULL;
  h ^= (h >> 29) ^ (b + 0x632BE59BD9B4E019ULL);
  h *= 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 31;
  return static_cast<std::size_t>(h);
}

namespace {

constexpr int kPackMin = std::numeric_limits<std::int16_t>::min();
constexpr int kPackMax = std::numeric_limits<std::int16_t>::max();

std::int16_t narrow(std::int64_t v) {
  if (v < kPackMin || v > kPackMax) {
    throw Error(Errc::arithmetic_overflow, "weight coordinate " + std::to_string(v) +
                                               " does not fit the packed lattice key");
  }
  return static_cast<std::int16_t>(v);
}

// Dominant W-conjugate of a packed key, in place.
class DominantReducer {
 public:
  explicit DominantReducer(const RootSystem& rs) : n_(rs.rank()) {
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i) column_[j][i] = rs.cartan(i, j);
  }

  PackedWeight operator()(const PackedWeight& key) const {
    std::array<std::int32_t, kMaxRank> w{};
    for (int i = 0; i < n_; ++i) w[i] = key.c[i];
    for (;;) {
      int i = 0;
      while (i < n_ && w[i] >= 0) ++i;
      if (i == n_) break;
      const std::int32_t k = w[i];
      const auto& col = column_[i];
      for (int j = 0; j < n_; ++j) w[j] -= k * col[j];
    }
    PackedWeight out;
    for (int i = 0; i < n_; ++i) out.c[i] = narrow(w[i]);
    return out;
  }

 private:
  int n_;
  std::array<std::array<std::int32_t, kMaxRank>, kMaxRank> column_{};
};

PackedWeight shifted(const PackedWeight& k, const PackedWeight& by, int rank) {
  PackedWeight out;
  for (int i = 0; i < rank; ++i) out.c[i] = narrow(static_cast<std::int32_t>(k.c[i]) + by.c[i]);
  return out;
}

void check_rank(const RootSystem& rs, int rank) {
  if (rs.rank() != rank) {
    throw Error(Errc::rank_mismatch, "sum of rank " + std::to_string(rank) + " for " + rs.type().name());
  }
}

}  // namespace

PackedWeight pack(const Weight& w) {
  PackedWeight k;
  for (int i = 0; i < w.rank(); ++i) k.c[i] = narrow(w[i]);
  return k;
}

Weight unpack(const PackedWeight& k, int rank) {
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w[i] = k.c[i];
  return w;
}

void accumulate(ExponentialSum::Map& map, const PackedWeight& key, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = map.try_emplace(key, c);
  if (inserted) return;
  Coeff sum = 0;
  if (__builtin_add_overflow(it->second, c, &sum)) {
    throw Error(Errc::arithmetic_overflow, "coefficient exceeds 128 bits");
  }
  if (sum == 0) {
    map.erase(it);
  } else {
    it->second = sum;
  }
}

ExponentialSum ExponentialSum::one(int rank) {
  ExponentialSum s(rank);
  s.terms_.emplace(PackedWeight{}, 1);
  return s;
}

Coeff ExponentialSum::coefficient(const Weight& w) const {
  if (w.rank() != rank_) throw Error(Errc::rank_mismatch, "weight rank differs from sum rank");
  auto it = terms_.find(pack(w));
  return it == terms_.end() ? 0 : it->second;
}

void ExponentialSum::add(const Weight& w, Coeff c) {
  if (w.rank() != rank_) throw Error(Errc::rank_mismatch, "weight rank differs from sum rank");
  accumulate(terms_, pack(w), c);
}

Coeff ExponentialSum::coefficient_sum() const {
  Coeff s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

std::vector<std::pair<Weight, Coeff>> ExponentialSum::sorted_terms(const RootSystem& rs) const {
  check_rank(rs, rank_);
  std::vector<std::pair<std::int64_t, std::pair<Weight, Coeff>>> keyed;
  keyed.reserve(terms_.size());
  for (const auto& [k, c] : terms_) {
    Weight w = unpack(k, rank_);
    keyed.push_back({rs.scaled_height(w), {w, c}});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.first < b.second.first;
  });
  std::vector<std::pair<Weight, Coeff>> out;
  out.reserve(keyed.size());
  for (auto& e : keyed) out.push_back(std::move(e.second));
  return out;
}

std::string ExponentialSum::debug_string(const RootSystem& rs) const {
  std::string out;
  for (const auto& [w, c] : sorted_terms(rs)) {
    if (!out.empty()) out += ' ';
    out += (c > 0 ? "+" : "") + coeff_to_string(c) + "e(" + render_weight(w) + ")";
  }
  return out.empty() ? "0" : out;
}

ExponentialSum mul_binomial(const ExponentialSum& p, const Weight& alpha) {
  if (alpha.rank() != p.rank()) throw Error(Errc::rank_mismatch, "binomial rank differs from sum rank");
  const PackedWeight shift = pack(alpha);
  ExponentialSum out(p.rank());
  auto& map = out.terms();
  map.reserve(2 * p.size());
  for (const auto& [k, c] : p.terms()) {
    accumulate(map, k, c);
    accumulate(map, shifted(k, shift, p.rank()), -c);
  }
  return out;
}

std::size_t memory_term_ceiling() {
  static const std::size_t ceiling = [] {
    std::uint64_t bytes = static_cast<std::uint64_t>(sysconf(_SC_PHYS_PAGES)) *
                          static_cast<std::uint64_t>(sysconf(_SC_PAGE_SIZE));
    for (const char* path : {"/sys/fs/cgroup/memory.max", "/sys/fs/cgroup/memory/memory.limit_in_bytes"}) {
      std::ifstream in(path);
      std::uint64_t limit = 0;
      if (in >> limit && limit > 0) bytes = std::min(bytes, limit);
    }
    // Slot payload plus control byte, at most half full after a resize,
    // source and destination map alive together.
    constexpr std::uint64_t per_term = 2 * 2 * (sizeof(PackedWeight) + sizeof(Coeff) + 1);
    return static_cast<std::size_t>(std::max<std::uint64_t>(bytes / 2 / per_term, 1'000'000));
  }();
  return ceiling;
}

ExponentialSum product_over_roots(const RootSystem& rs, std::span<const Root> roots,
                                  const ProductOptions& options, ProductStats* stats) {
  std::vector<Root> order(roots.begin(), roots.end());
  if (options.order == MultiplicationOrder::increasing_height) {
    std::stable_sort(order.begin(), order.end(),
                     [](const Root& a, const Root& b) { return height(a) < height(b); });
  }
  const std::size_t cap = std::min(options.term_cap, memory_term_ceiling());
  ExponentialSum acc = ExponentialSum::one(rs.rank());
  std::size_t peak = acc.size();
  for (const Root& r : order) {
    const PackedWeight shift = pack(rs.root_as_weight(r));
    ExponentialSum next(rs.rank());
    auto& map = next.terms();
    map.reserve(std::min(2 * acc.size(), cap + 1));
    for (const auto& [k, c] : acc.terms()) {
      accumulate(map, k, c);
      accumulate(map, shifted(k, shift, rs.rank()), -c);
      if (map.size() > cap) {
        throw Error(Errc::resource_limit, "expansion passed " + std::to_string(cap) + " terms");
      }
    }
    acc = std::move(next);
    peak = std::max(peak, acc.size());
  }
  if (stats) stats->peak_terms = std::max(stats->peak_terms, peak);
  return acc;
}

ExponentialSum symmetrize_dominant(const ExponentialSum& p, const RootSystem& rs) {
  check_rank(rs, p.rank());
  const DominantReducer reduce(rs);
  ExponentialSum out(p.rank());
  for (const auto& [k, c] : p.terms()) accumulate(out.terms(), reduce(k), c);
  return out;
}

LeadingTerm leading_term(const ExponentialSum& p, const RootSystem& rs) {
  check_rank(rs, p.rank());
  if (p.empty()) throw Error(Errc::empty_sum, "no terms to choose a leading term from");
  const Weight* best = nullptr;
  Coeff best_c = 0;
  std::int64_t best_h = 0;
  bool tie = false;
  std::vector<Weight> keys;
  keys.reserve(p.size());
  for (const auto& [k, c] : p.terms()) {
    keys.push_back(unpack(k, p.rank()));
    if (!is_dominant(keys.back())) {
      throw Error(Errc::invalid_argument, "exponent " + render_weight(keys.back()) + " is not dominant");
    }
  }
  std::size_t idx = 0;
  for (const auto& [k, c] : p.terms()) {
    const Weight& w = keys[idx++];
    const std::int64_t h = rs.scaled_height(w);
    if (best == nullptr || h > best_h) {
      best = &w;
      best_c = c;
      best_h = h;
      tie = false;
    } else if (h == best_h) {
      tie = true;
    }
  }
  if (tie) throw Error(Errc::no_leading_term, "two exponents of maximal height");
  for (const Weight& w : keys) {
    if (!rs.dominance_leq(w, *best)) {
      throw Error(Errc::no_leading_term, render_weight(*best) + " does not dominate " + render_weight(w));
    }
  }
  return LeadingTerm{*best, best_c};
}

LeviWeylGroup::LeviWeylGroup(const RootSystem& rs, NodeSet nodes, std::size_t cap)
    : rs_(&rs), nodes_(nodes) {
  const int n = rs.rank();
  const std::uint64_t expected = rs.levi_weyl_order(nodes);
  if (expected > cap) {
    throw Error(Errc::resource_limit, "|W_L| = " + std::to_string(expected) + " exceeds cap " +
                                          std::to_string(cap));
  }
  Weight start(n);
  for (int j = 0; j < n; ++j)
    if (nodes.test(j)) start[j] = 1;
  absl::flat_hash_map<PackedWeight, std::uint32_t, PackedWeightHash> seen;
  std::vector<Weight> points{start};
  seen.emplace(pack(start), 0);
  parent_.push_back(0);
  generator_.push_back(0);
  length_.push_back(0);
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (int j = 0; j < n; ++j) {
      if (!nodes.test(j)) continue;
      Weight y = points[k];
      const int a = y[j];
      const Weight& root = rs.simple_root_weight(j);
      for (int i = 0; i < n; ++i) y[i] -= a * root[i];
      auto [it, inserted] = seen.emplace(pack(y), static_cast<std::uint32_t>(points.size()));
      if (!inserted) continue;
      points.push_back(y);
      parent_.push_back(static_cast<std::uint32_t>(k));
      generator_.push_back(static_cast<std::uint8_t>(j));
      length_.push_back(static_cast<std::uint16_t>(length_[k] + 1));
    }
  }
  if (points.size() != expected) {
    throw Error(Errc::arithmetic_overflow, "Levi Weyl group enumeration found " +
                                               std::to_string(points.size()) + " elements, expected " +
                                               std::to_string(expected));
  }
}

ExponentialSum weyl_denominator_levi(const RootSystem& rs, NodeSet nodes, std::size_t cap) {
  const LeviWeylGroup group(rs, nodes, cap);
  const Weight two_rho = rs.two_rho_levi(nodes);
  ExponentialSum out(rs.rank());
  group.for_each_image(two_rho, [&](const Weight& image, int sign) {
    Weight e = two_rho - image;  // 2(rho_L - w rho_L)
    for (int i = 0; i < e.rank(); ++i) e[i] /= 2;
    out.add(e, sign);
  });
  return out;
}

ExponentialSum symmetrized_levi_product(const RootSystem& rs, NodeSet nodes,
                                        const ExponentialSum& invariant,
                                        const LeviProductLimits& limits, ProductStats* stats) {
  check_rank(rs, invariant.rank());
  const int n = rs.rank();
  const LeviWeylGroup group(rs, nodes, limits.levi_cap);
  const Weight two_rho = rs.two_rho_levi(nodes);

  // Straighten each alternant A_L(f - rho_L); coordinates are doubled so
  // that rho_L is integral.
  ExponentialSum::Map alternants;
  alternants.reserve(invariant.size() / std::max<std::size_t>(1, group.order()) + 16);
  for (const auto& [k, c] : invariant.terms()) {
    std::array<std::int32_t, kMaxRank> mu{};
    for (int i = 0; i < n; ++i) mu[i] = 2 * k.c[i] - two_rho[i];
    int sign = 1;
    for (;;) {
      int j = 0;
      while (j < n && (!nodes.test(j) || mu[j] >= 0)) ++j;
      if (j == n) break;
      const std::int32_t a = mu[j];
      const Weight& root = rs.simple_root_weight(j);
      for (int i = 0; i < n; ++i) mu[i] -= a * root[i];
      sign = -sign;
    }
    bool singular = false;
    for (int j = 0; j < n; ++j) singular = singular || (nodes.test(j) && mu[j] == 0);
    if (singular) continue;
    PackedWeight key;
    for (int i = 0; i < n; ++i) key.c[i] = narrow(mu[i]);
    accumulate(alternants, key, sign > 0 ? c : -c);
  }

  const std::uint64_t work = static_cast<std::uint64_t>(alternants.size()) * group.order();
  if (work > limits.work_cap) {
    throw Error(Errc::resource_limit, "symmetrization would stream " + std::to_string(work) +
                                          " exponents (cap " + std::to_string(limits.work_cap) + ")");
  }

  const std::size_t cap = std::min(limits.term_cap, memory_term_ceiling());
  const DominantReducer reduce(rs);
  ExponentialSum out(n);
  for (const auto& [k, m] : alternants) {
    group.for_each_image(unpack(k, n), [&](const Weight& image, int sign) {
      PackedWeight e;
      for (int i = 0; i < n; ++i) {
        const std::int32_t doubled = two_rho[i] + image[i];
        if (doubled % 2 != 0) {
          throw Error(Errc::arithmetic_overflow, "non-integral exponent in Levi expansion");
        }
        e.c[i] = narrow(doubled / 2);
      }
      accumulate(out.terms(), reduce(e), sign > 0 ? m : -m);
    });
    if (out.size() > cap) {
      throw Error(Errc::resource_limit, "symmetrized sum passed " + std::to_string(cap) + " terms");
    }
  }
  if (stats) {
    stats->peak_terms = std::max({stats->peak_terms, invariant.size(), alternants.size(), out.size()});
  }
  return out;
}

}  // namespace cdi
