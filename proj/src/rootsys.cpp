#include "cdi/rootsys.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "cdi/error.hpp"

namespace cdi {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_rank: return "InvalidRank";
    case Errc::rank_mismatch: return "RankMismatch";
    case Errc::inadmissible_partition: return "InadmissiblePartition";
    case Errc::unsupported_type: return "UnsupportedType";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::resource_limit: return "ResourceLimit";
    case Errc::empty_sum: return "EmptySum";
    case Errc::no_leading_term: return "NoLeadingTerm";
    case Errc::unknown_table: return "UnknownTable";
    case Errc::fixture_error: return "FixtureError";
    case Errc::arithmetic_overflow: return "ArithmeticOverflow";
  }
  return "Error";
}

bool is_classical(Family f) {
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'C': case 'c': return Family::C;
      case 'D': case 'd': return Family::D;
      case 'E': case 'e': return Family::E;
      case 'F': case 'f': return Family::F;
      case 'G': case 'g': return Family::G;
      default: break;
    }
  }
  throw Error(Errc::parse_error, "unknown Cartan family '" + std::string(text) + "'");
}

void CartanType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok || rank > kMaxRank) {
    throw Error(Errc::invalid_rank, "no simple type " + name());
  }
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanType CartanType::make(Family f, int rank) {
  CartanType t{f, rank};
  t.validate();
  return t;
}

CartanType CartanType::parse(std::string_view name) {
  if (name.size() < 2) throw Error(Errc::parse_error, "bad type name '" + std::string(name) + "'");
  Family f = parse_family(name.substr(0, 1));
  int rank = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') throw Error(Errc::parse_error, "bad type name '" + std::string(name) + "'");
    rank = rank * 10 + (c - '0');
  }
  return make(f, rank);
}

namespace {

using Form = std::array<std::array<int, kMaxRank>, kMaxRank>;

// Symmetric form on simple roots, short roots of squared length 2.
Form simple_root_form(const CartanType& t) {
  Form b{};
  const int n = t.rank;
  auto link = [&b](int i, int j, int v) { b[i][j] = b[j][i] = v; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) b[i][i] = 4;
      b[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) b[i][i] = 2;
      b[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      link(0, 2, -1);
      link(2, 3, -1);
      link(1, 3, -1);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      b[0][0] = b[1][1] = 4;
      b[2][2] = b[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      b[0][0] = 2;
      b[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return b;
}

}  // namespace

RootSystem::RootSystem(CartanType type) : type_(type) {
  type_.validate();
  const int n = rank();
  form_ = simple_root_form(type_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_[i][j] = 2 * form_[i][j] / form_[i][i];

  // Gauss-Jordan over the rationals.
  std::array<std::array<Rational, 2 * kMaxRank>, kMaxRank> aug{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = cartan_[i][j];
    aug[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (aug[pivot][col].numerator() == 0) ++pivot;
    std::swap(aug[pivot], aug[col]);
    const Rational p = aug[col][col];
    for (int j = 0; j < 2 * n; ++j) aug[col][j] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == col || aug[i][col].numerator() == 0) continue;
      const Rational f = aug[i][col];
      for (int j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  inv_den_ = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      inv_cartan_[i][j] = aug[i][n + j];
      inv_den_ = std::lcm(inv_den_, inv_cartan_[i][j].denominator());
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational scaled = inv_cartan_[i][j] * inv_den_;
      inv_scaled_[i][j] = scaled.numerator();
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram_[i][j] = symmetrizer(j) * inv_cartan_[j][i];

  for (int j = 0; j < n; ++j) {
    Weight w(n);
    for (int i = 0; i < n; ++i) w[i] = cartan_[i][j];
    simple_weights_[j] = w;
  }
  build_positive_roots();
}

RootSystem build_root_system(CartanType type) { return RootSystem(type); }

void RootSystem::build_positive_roots() {
  const int n = rank();
  std::set<Root> known;
  std::vector<Root> layer;
  for (int i = 0; i < n; ++i) {
    Root r(n);
    r[i] = 1;
    layer.push_back(r);
    known.insert(r);
  }
  positive_roots_.clear();
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), [](const Root& a, const Root& b) { return b < a; });
    positive_roots_.insert(positive_roots_.end(), layer.begin(), layer.end());
    std::set<Root> next;
    for (const Root& beta : layer) {
      const Weight bw = root_as_weight(beta);
      for (int i = 0; i < n; ++i) {
        // alpha_i-string through beta runs from beta - p alpha_i to
        // beta + q alpha_i with p - q = <beta, alpha_i^vee>.
        int p = 0;
        Root down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        const int q = p - bw[i];
        if (q > 0) {
          Root up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(layer.begin(), layer.end());
  }
}

Weight RootSystem::root_as_weight(const Root& r) const {
  if (r.rank() != rank()) throw Error(Errc::rank_mismatch, "root of rank " + std::to_string(r.rank()));
  Weight w(rank());
  for (int i = 0; i < rank(); ++i) {
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += cartan_[i][j] * r[j];
    w[i] = s;
  }
  return w;
}

Weight RootSystem::dominant_representative(Weight w) const {
  if (w.rank() != rank()) throw Error(Errc::rank_mismatch, "weight of rank " + std::to_string(w.rank()));
  const int n = rank();
  for (;;) {
    int i = 0;
    while (i < n && w[i] >= 0) ++i;
    if (i == n) return w;
    const int k = w[i];
    const Weight& a = simple_weights_[i];
    for (int j = 0; j < n; ++j) w[j] -= k * a[j];
  }
}

std::array<std::int64_t, kMaxRank> RootSystem::scaled_root_coords(const Weight& w) const {
  if (w.rank() != rank()) throw Error(Errc::rank_mismatch, "weight of rank " + std::to_string(w.rank()));
  std::array<std::int64_t, kMaxRank> c{};
  for (int i = 0; i < rank(); ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < rank(); ++j) s += inv_scaled_[i][j] * w[j];
    c[i] = s;
  }
  return c;
}

std::int64_t RootSystem::scaled_height(const Weight& w) const {
  const auto c = scaled_root_coords(w);
  std::int64_t h = 0;
  for (int i = 0; i < rank(); ++i) h += c[i];
  return h;
}

bool RootSystem::dominance_leq(const Weight& mu, const Weight& lam) const {
  const auto c = scaled_root_coords(lam - mu);
  for (int i = 0; i < rank(); ++i)
    if (c[i] < 0 || c[i] % inv_den_ != 0) return false;
  return true;
}

Rational RootSystem::norm_sq(const Weight& w) const {
  if (w.rank() != rank()) throw Error(Errc::rank_mismatch, "weight of rank " + std::to_string(w.rank()));
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (w[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += gram_[i][j] * (static_cast<std::int64_t>(w[i]) * w[j]);
  }
  return s;
}

std::vector<Root> RootSystem::levi_positive_roots(NodeSet nodes) const {
  std::vector<Root> out;
  for (const Root& r : positive_roots_) {
    bool inside = true;
    for (int i = 0; i < rank() && inside; ++i) inside = r[i] == 0 || nodes.test(i);
    if (inside) out.push_back(r);
  }
  return out;
}

Weight RootSystem::two_rho_levi(NodeSet nodes) const {
  Weight w(rank());
  for (const Root& r : levi_positive_roots(nodes)) w += root_as_weight(r);
  return w;
}

std::uint64_t RootSystem::levi_weyl_order(NodeSet nodes) const {
  // Poincare polynomial at t = 1: |W| = prod_{alpha > 0} (ht(alpha) + 1) / ht(alpha).
  long double order = 1.0L;
  for (const Root& r : levi_positive_roots(nodes)) {
    const int h = height(r);
    order *= static_cast<long double>(h + 1) / static_cast<long double>(h);
  }
  return static_cast<std::uint64_t>(std::llround(order));
}

NodeSet RootSystem::all_nodes() const {
  NodeSet s;
  for (int i = 0; i < rank(); ++i) s.set(i);
  return s;
}

int pairing_with_diagram(const Root& r, const WeightedDynkinDiagram& h) {
  if (r.rank() != h.rank()) {
    throw Error(Errc::rank_mismatch, "root of rank " + std::to_string(r.rank()) +
                                         " against diagram of rank " + std::to_string(h.rank()));
  }
  int s = 0;
  for (int i = 0; i < r.rank(); ++i) s += r[i] * h[i];
  return s;
}

}  // namespace cdi
