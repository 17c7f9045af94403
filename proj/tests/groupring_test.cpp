#include <gtest/gtest.h>

#include <algorithm>
#include <deque>
#include <random>

#include "cdi/error.hpp"
#include "cdi/groupring.hpp"
#include "cdi/lmap.hpp"
#include "oracles.hpp"

using namespace cdi;

namespace {

oracle::Poly as_poly(const ExponentialSum& p) {
  oracle::Poly out;
  for (const auto& [k, c] : p.terms()) {
    const Weight w = unpack(k, p.rank());
    out[oracle::Vec(w.begin(), w.end())] = static_cast<long long>(c);
  }
  return out;
}

std::vector<oracle::Vec> as_vecs(std::span<const Root> roots) {
  std::vector<oracle::Vec> out;
  for (const Root& r : roots) out.emplace_back(r.begin(), r.end());
  return out;
}

std::vector<CartanType> small_types() {
  std::vector<CartanType> out;
  for (const char* n : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"}) out.push_back(CartanType::parse(n));
  return out;
}

}  // namespace

TEST(ExponentialSum, Basics) {
  auto one = ExponentialSum::one(2);
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.coefficient(Weight{0, 0}), 1);
  const Weight a{2, -2};
  auto p = mul_binomial(one, a);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.coefficient(a), -1);
  auto q = mul_binomial(p, a);
  EXPECT_EQ(q.coefficient(Weight{0, 0}), 1);
  EXPECT_EQ(q.coefficient(a), -2);
  EXPECT_EQ(q.coefficient(Weight{4, -4}), 1);
  EXPECT_EQ(q.coefficient_sum(), 0);
  q.add(Weight{0, 0}, -1);
  EXPECT_EQ(q.size(), 2u);
  RootSystem b2(CartanType::parse("B2"));
  const auto lt = leading_term(symmetrize_dominant(ExponentialSum::one(2), b2), b2);
  EXPECT_EQ(lt.weight, (Weight{0, 0}));
  EXPECT_EQ(lt.coefficient, 1);
}

TEST(ExponentialSum, Errors) {
  RootSystem b2(CartanType::parse("B2"));
  EXPECT_THROW(leading_term(ExponentialSum(2), b2), Error);
  ExponentialSum p(2);
  p.add(Weight{1, 0}, 1);
  p.add(Weight{0, 1}, 1);
  try {
    leading_term(p, b2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_leading_term);
  }
  EXPECT_THROW(pack(Weight{40000, 0}), Error);
}

TEST(ProductOverRoots, SmallCases) {
  RootSystem b2(CartanType::parse("B2"));
  EXPECT_EQ(product_over_roots(b2, {}), ExponentialSum::one(2));
  const Root r{1, 1};
  const auto single = product_over_roots(b2, std::span<const Root>(&r, 1));
  EXPECT_EQ(single.size(), 2u);
  EXPECT_EQ(single.coefficient(Weight{1, 0}), -1);
}

TEST(ProductOverRoots, B2FullDenominator) {
  RootSystem b2(CartanType::parse("B2"));
  const auto a = oracle::textbook_cartan(b2.type());
  const auto p = product_over_roots(b2, b2.positive_roots());
  EXPECT_EQ(p.size(), 8u);
  for (const auto& [k, c] : p.terms()) EXPECT_TRUE(c == 1 || c == -1);
  EXPECT_EQ(as_poly(p), oracle::signed_subset_sums(a, as_vecs(b2.positive_roots())));
  // rho - w rho over W(B2); rho is regular, so its orbit is a copy of W and
  // each simple reflection flips det(w).
  std::map<oracle::Vec, int> sign{{{1, 1}, 1}};
  std::deque<oracle::Vec> todo{{1, 1}};
  while (!todo.empty()) {
    const oracle::Vec v = todo.front();
    todo.pop_front();
    for (int i = 0; i < 2; ++i) {
      oracle::Vec s = v;
      for (int k = 0; k < 2; ++k) s[k] -= v[i] * a[k][i];
      if (sign.emplace(s, -sign[v]).second) todo.push_back(s);
    }
  }
  EXPECT_EQ(sign.size(), 8u);
  oracle::Poly denom;
  for (const auto& [wr, det] : sign) denom[{1 - wr[0], 1 - wr[1]}] += det;
  EXPECT_EQ(as_poly(p), denom);
}

TEST(ProductOverRoots, MatchesSubsetOracleOnLowerSets) {
  std::mt19937 rng(3);
  for (auto t : small_types()) {
    RootSystem rs(t);
    const auto a = oracle::textbook_cartan(t);
    std::vector<Root> roots(rs.positive_roots().begin(), rs.positive_roots().end());
    for (int k = 0; k < 5; ++k) {
      std::shuffle(roots.begin(), roots.end(), rng);
      const std::size_t m = std::min<std::size_t>(roots.size(), 1 + rng() % 9);
      std::vector<Root> sub(roots.begin(), roots.begin() + static_cast<long>(m));
      EXPECT_EQ(as_poly(product_over_roots(rs, sub)), oracle::signed_subset_sums(a, as_vecs(sub))) << t.name();
    }
  }
}

TEST(ProductOverRoots, OrderIndependent) {
  std::mt19937 rng(5);
  for (const char* name : {"B3", "C3"}) {
    RootSystem rs(CartanType::parse(name));
    std::vector<Root> roots(rs.positive_roots().begin(), rs.positive_roots().end());
    const auto ref = product_over_roots(rs, roots, {.order = MultiplicationOrder::as_given});
    for (int k = 0; k < 6; ++k) {
      std::shuffle(roots.begin(), roots.end(), rng);
      EXPECT_EQ(product_over_roots(rs, roots, {.order = MultiplicationOrder::as_given}), ref) << name;
      EXPECT_EQ(product_over_roots(rs, roots), ref) << name;
    }
  }
}

TEST(ProductOverRoots, EvaluatesToZero) {
  RootSystem c3(CartanType::parse("C3"));
  auto roots = c3.positive_roots();
  for (std::size_t m = 1; m <= roots.size(); ++m) {
    EXPECT_EQ(product_over_roots(c3, roots.subspan(0, m)).coefficient_sum(), 0);
  }
}

TEST(ProductOverRoots, ResourceLimit) {
  RootSystem b3(CartanType::parse("B3"));
  ProductStats stats;
  try {
    product_over_roots(b3, b3.positive_roots(), {.term_cap = 10}, &stats);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::resource_limit);
  }
  product_over_roots(b3, b3.positive_roots(), {}, &stats);
  EXPECT_GE(stats.peak_terms, 48u);
}

TEST(Symmetrize, MatchesOracleAndPreservesMass) {
  for (auto t : small_types()) {
    RootSystem rs(t);
    const auto a = oracle::textbook_cartan(t);
    const auto p = product_over_roots(rs, rs.positive_roots());
    const auto s = symmetrize_dominant(p, rs);
    EXPECT_EQ(as_poly(s), oracle::symmetrize(a, as_poly(p))) << t.name();
    for (const auto& [k, c] : s.terms()) EXPECT_TRUE(is_dominant(unpack(k, t.rank)));
    EXPECT_EQ(s.coefficient_sum(), p.coefficient_sum());
  }
  RootSystem b2(CartanType::parse("B2"));
  ExponentialSum cancel(2);
  cancel.add(Weight{1, -1}, 1);
  cancel.add(Weight{-1, 1}, -1);
  EXPECT_TRUE(symmetrize_dominant(cancel, b2).empty());
}

TEST(Symmetrize, LeadingTermExamples) {
  RootSystem b2(CartanType::parse("B2"));
  const auto full = symmetrize_dominant(product_over_roots(b2, b2.positive_roots()), b2);
  EXPECT_EQ(leading_term(full, b2).weight, (Weight{2, 2}));
  const auto split = roots_le_one(b2, WeightedDynkinDiagram::parse("20"));
  std::vector<Root> roots = split.zero;
  roots.insert(roots.end(), split.one.begin(), split.one.end());
  EXPECT_EQ(leading_term(symmetrize_dominant(product_over_roots(b2, roots), b2), b2).weight, (Weight{1, 0}));
  RootSystem c2(CartanType::parse("C2"));
  const auto s2 = roots_le_one(c2, WeightedDynkinDiagram::parse("10"));
  roots = s2.zero;
  roots.insert(roots.end(), s2.one.begin(), s2.one.end());
  EXPECT_EQ(leading_term(symmetrize_dominant(product_over_roots(c2, roots), c2), c2).weight, (Weight{2, 1}));
}

// Symmetrizing after every binomial instead of once at the end.
TEST(Symmetrize, StepsDoNotCommute) {
  bool differs = false;
  for (const char* name : {"B2", "C2", "G2", "B3", "C3"}) {
    RootSystem rs(CartanType::parse(name));
    for (const auto& o : orbits_with_diagrams(rs.type())) {
      const auto split = roots_le_one(rs, o.diagram);
      std::vector<Root> roots = split.zero;
      roots.insert(roots.end(), split.one.begin(), split.one.end());
      const auto right = symmetrize_dominant(product_over_roots(rs, roots), rs);
      ExponentialSum eager = ExponentialSum::one(rs.rank());
      for (const Root& r : roots) eager = symmetrize_dominant(mul_binomial(eager, rs.root_as_weight(r)), rs);
      if (!(eager == right)) differs = true;
    }
    if (differs) break;
  }
  EXPECT_TRUE(differs);
}

TEST(WeylDenominator, Examples) {
  RootSystem b2(CartanType::parse("B2"));
  EXPECT_EQ(weyl_denominator_levi(b2, NodeSet{}), ExponentialSum::one(2));
  const auto s = weyl_denominator_levi(b2, NodeSet{0b01});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.coefficient(b2.simple_root_weight(0)), -1);
  EXPECT_EQ(weyl_denominator_levi(b2, b2.all_nodes()), product_over_roots(b2, b2.positive_roots()));
  EXPECT_THROW(weyl_denominator_levi(b2, b2.all_nodes(), 4), Error);
}

TEST(WeylDenominator, EqualsLeviProductExhaustively) {
  std::vector<CartanType> types;
  for (const char* n : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2"}) types.push_back(CartanType::parse(n));
  for (auto t : types) {
    RootSystem rs(t);
    for (unsigned mask = 0; mask < (1u << t.rank); ++mask) {
      const NodeSet j(mask);
      EXPECT_EQ(weyl_denominator_levi(rs, j), product_over_roots(rs, rs.levi_positive_roots(j)))
          << t.name() << " " << mask;
      LeviWeylGroup w(rs, j, 1'000'000);
      EXPECT_EQ(w.order(), rs.levi_weyl_order(j));
    }
  }
}

TEST(LeviProduct, MatchesDirectSymmetrization) {
  for (const char* name : {"B3", "C3", "F4", "D4", "A4"}) {
    RootSystem rs(CartanType::parse(name));
    for (const auto& o : orbits_with_diagrams(rs.type())) {
      const auto split = roots_le_one(rs, o.diagram);
      const NodeSet j = zero_nodes(o.diagram);
      if (name == std::string("F4") && rs.levi_weyl_order(j) > 48) continue;
      const auto f = product_over_roots(rs, split.one);
      std::vector<Root> all = split.zero;
      all.insert(all.end(), split.one.begin(), split.one.end());
      const auto direct = symmetrize_dominant(product_over_roots(rs, all), rs);
      EXPECT_EQ(symmetrized_levi_product(rs, j, f), direct) << name << " " << o.diagram.render();
    }
  }
}
