#include <gtest/gtest.h>

#include "cdi/error.hpp"
#include "cdi/orbits.hpp"

using namespace cdi;

namespace {

std::vector<std::string> labels(CartanType t) {
  std::vector<std::string> out;
  for (const auto& l : enumerate_orbits(t)) out.push_back(l.render());
  return out;
}

WeightedDynkinDiagram dd(const char* s) { return WeightedDynkinDiagram::parse(s); }

// Number of partitions of n with the family's parity condition, by recursion
// on the largest part.
long count_partitions(int n, int max_part, Family f) {
  if (n == 0) return 1;
  long total = 0;
  for (int part = std::min(n, max_part); part >= 1; --part) {
    const bool restricted = (f == Family::C) ? part % 2 == 1 : (f != Family::A && part % 2 == 0);
    for (int m = 1; m * part <= n; ++m) {
      if (restricted && m % 2) continue;
      total += count_partitions(n - m * part, part - 1, f);
    }
  }
  return total;
}

}  // namespace

TEST(Partition, ParseAndRender) {
  EXPECT_EQ(Partition::parse("3,1^2").parts(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(Partition::parse("(3,1,1)").render(), "3,1^2");
  EXPECT_EQ(Partition::parse("2^{2},1").render(), "2^2,1");
  EXPECT_EQ(Partition({1, 3, 2}).parts(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(Partition::parse("1^5").size(), 5);
  EXPECT_THROW(Partition::parse("3,0"), Error);
  EXPECT_THROW(Partition::parse("3,x"), Error);
}

TEST(Partition, Transpose) {
  EXPECT_EQ(transpose_partition(Partition({5})), Partition({1, 1, 1, 1, 1}));
  EXPECT_EQ(transpose_partition(Partition({2, 2})), Partition({2, 2}));
  EXPECT_EQ(transpose_partition(Partition({3, 1})), Partition({2, 1, 1}));
  for (int n = 1; n <= 8; ++n) {
    for (const auto& l : enumerate_orbits(CartanType::make(Family::A, std::max(1, n - 1)))) {
      const auto& p = l.classical().partition;
      EXPECT_EQ(transpose_partition(transpose_partition(p)), p);
    }
  }
}

TEST(Orbits, Enumeration) {
  EXPECT_EQ(labels(CartanType::parse("B2")), (std::vector<std::string>{"5", "3,1^2", "2^2,1", "1^5"}));
  const auto d4 = labels(CartanType::parse("D4"));
  EXPECT_EQ(d4.size(), 12u);
  for (const char* tagged : {"4^2_1", "4^2_2", "2^4_1", "2^4_2"})
    EXPECT_NE(std::find(d4.begin(), d4.end(), tagged), d4.end()) << tagged;
  EXPECT_EQ(labels(CartanType::parse("C3")).size(), 8u);
  EXPECT_THROW(enumerate_orbits(CartanType::parse("G2")), Error);
}

TEST(Orbits, CountsMatchIndependentRecursion) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(static_cast<long>(enumerate_orbits(CartanType::make(Family::B, n)).size()),
              count_partitions(2 * n + 1, 2 * n + 1, Family::B));
    EXPECT_EQ(static_cast<long>(enumerate_orbits(CartanType::make(Family::C, n)).size()),
              count_partitions(2 * n, 2 * n, Family::C));
    EXPECT_EQ(static_cast<long>(enumerate_orbits(CartanType::make(Family::A, n)).size()),
              count_partitions(n + 1, n + 1, Family::A));
  }
  // D_n: every very-even partition appears twice.
  EXPECT_EQ(enumerate_orbits(CartanType::parse("D4")).size(), 12u);
  EXPECT_EQ(enumerate_orbits(CartanType::parse("D5")).size(), 16u);
  EXPECT_EQ(enumerate_orbits(CartanType::parse("D6")).size(), 31u);
}

TEST(Orbits, Admissibility) {
  EXPECT_TRUE(is_admissible(Partition({3, 1, 1}), CartanType::parse("B2")));
  EXPECT_FALSE(is_admissible(Partition({4, 1}), CartanType::parse("B2")));
  EXPECT_FALSE(is_admissible(Partition({3, 1}), CartanType::parse("C2")));
  EXPECT_FALSE(is_admissible(Partition({3, 1}), CartanType::parse("B2")));
  EXPECT_TRUE(is_very_even(Partition({4, 4}), CartanType::parse("D4")));
  EXPECT_FALSE(is_very_even(Partition({4, 4}), CartanType::parse("C4")));
  EXPECT_THROW(diagram_from_partition(Partition({4, 1}), CartanType::parse("B2")), Error);
}

TEST(Orbits, DiagramFromPartition) {
  EXPECT_EQ(diagram_from_partition(Partition({3, 1, 1}), CartanType::parse("B2")), dd("20"));
  EXPECT_EQ(diagram_from_partition(Partition({2, 2}), CartanType::parse("C2")), dd("02"));
  EXPECT_EQ(diagram_from_partition(Partition({4, 4}), CartanType::parse("D4"), VeryEvenTag::I), dd("0202"));
  EXPECT_EQ(diagram_from_partition(Partition({4, 4}), CartanType::parse("D4"), VeryEvenTag::II), dd("0220"));
  EXPECT_EQ(diagram_from_partition(Partition({3, 2, 2}), CartanType::parse("B3")), dd("101"));
  EXPECT_EQ(diagram_from_partition(Partition({2, 1}), CartanType::parse("A2")), dd("11"));
  EXPECT_EQ(diagram_from_partition(Partition({3}), CartanType::parse("A2")), dd("22"));
}

TEST(Orbits, LabelsInRangeAndDistinct) {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = (f == Family::D ? 3 : f == Family::A ? 1 : 2); n <= 7; ++n) {
      const auto t = CartanType::make(f, n);
      std::set<WeightedDynkinDiagram> seen;
      for (const auto& o : orbits_with_diagrams(t)) {
        for (int v : o.diagram.labels()) EXPECT_TRUE(v >= 0 && v <= 2) << t.name() << " " << o.label.render();
        EXPECT_TRUE(seen.insert(o.diagram).second) << t.name() << " " << o.label.render();
      }
    }
  }
}

TEST(Orbits, Exceptional) {
  const auto g2 = exceptional_orbit_diagrams(CartanType::parse("G2"));
  EXPECT_EQ(g2, (std::vector{dd("22"), dd("02"), dd("10"), dd("01"), dd("00")}));
  EXPECT_EQ(exceptional_orbit_diagrams(CartanType::parse("F4")).size(), 16u);
  EXPECT_EQ(exceptional_orbit_diagrams(CartanType::parse("E6")).size(), 21u);
  EXPECT_THROW(exceptional_orbit_diagrams(CartanType::parse("B3")), Error);
}

TEST(Orbits, Even) {
  EXPECT_TRUE(is_even(dd("22")));
  EXPECT_FALSE(is_even(dd("10")));
  EXPECT_FALSE(is_even(diagram_from_partition(Partition({3, 2, 2}), CartanType::parse("B3"))));
}

TEST(Orbits, LabelParsing) {
  const auto l = OrbitLabel::parse_classical("4^2_2");
  EXPECT_EQ(l.classical().tag, VeryEvenTag::II);
  EXPECT_EQ(l.render(), "4^2_2");
  EXPECT_EQ(l.tag_name(), "II");
  const auto o = orbit_from_label(OrbitLabel::parse_classical("3,1^2"), CartanType::parse("B2"));
  EXPECT_EQ(o.diagram, dd("20"));
  EXPECT_THROW(orbit_from_label(OrbitLabel::parse_classical("4^2"), CartanType::parse("D4")), Error);
}

TEST(Diagram, Grammar) {
  EXPECT_EQ(parse_int_list("201"), (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(parse_int_list("2,0,1"), (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(parse_int_list("-1,12"), (std::vector<int>{-1, 12}));
  const std::vector<int> wide{1, 12};
  EXPECT_EQ(render_int_list(wide), "1,12");
  EXPECT_THROW(WeightedDynkinDiagram::parse("13"), Error);
  EXPECT_THROW(parse_int_list("2,,1"), Error);
}
