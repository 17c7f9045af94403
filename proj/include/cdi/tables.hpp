#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdi/fixture_format.hpp"
#include "cdi/lmap.hpp"
#include "cdi/orbits.hpp"

namespace cdi {

enum class FixtureFlag { confirmed, question_mark, blank };

struct FixtureRow {
  OrbitLabel orbit;
  std::string printed_label;  // as written in the fixture file
  WeightedDynkinDiagram diagram;
  std::optional<Weight> weight;
  std::optional<long long> norm_sq;
  FixtureFlag flag = FixtureFlag::confirmed;
};

struct FixtureTable {
  std::string name;
  CartanType type;
  std::vector<FixtureRow> rows;
  std::vector<std::string> annotations;
  std::vector<int> node_order;
};

/// Every type with an embedded table.
std::vector<CartanType> tabulated_types();

/// Rows in reference order, diagrams and weights in Bourbaki order. Very-even
/// D rows are bound to tag I or II by their printed diagram. Throws
/// unknown_table.
FixtureTable load_fixtures(CartanType type);

/// Transcription problems: norm of the printed weight differs from the
/// printed norm, or (classical tables) the partition does not produce the
/// printed diagram. Empty when the table is self-consistent.
std::vector<std::string> check_fixture_consistency(const FixtureTable& table);

enum class RowStatus { match, mismatch, gap_filled, question_resolved, skipped };

std::string_view to_string(RowStatus s);

struct RowVerification {
  std::size_t row = 0;  // index into FixtureTable::rows
  RowStatus status = RowStatus::skipped;
  std::optional<LMapResult> computed;
  bool agree = false;  // question_resolved: computed equals the printed guess
  std::string detail;
};

struct VerificationReport {
  CartanType type;
  std::vector<RowVerification> rows;

  std::size_t count(RowStatus s) const;
  std::size_t completed() const { return rows.size() - count(RowStatus::skipped); }
  bool all_match() const { return count(RowStatus::mismatch) == 0; }
};

/// Compares each fixture row with the computation for the same orbit
/// (classical rows by partition and tag, exceptional rows by diagram).
VerificationReport verify(CartanType type, const std::vector<OrbitComputation>& results,
                          const FixtureTable& fixtures);

/// Orbits named by the fixture rows, in fixture order.
std::vector<Orbit> fixture_orbits(const FixtureTable& table);

}  // namespace cdi
