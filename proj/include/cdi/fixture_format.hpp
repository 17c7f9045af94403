#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdi/rootsys.hpp"

namespace cdi {

/// One data line of a fixture file:
///
///   label|diagram|weight|norm
///
/// label is a partition (optionally tagged "_1"/"_2") or "diag:<digits>";
/// weight is digits, digits followed by '?', or '-'; norm is an integer or '-'.
/// Lines starting with '#' are annotations and are kept verbatim.
struct RawFixtureRow {
  std::string label;
  std::vector<int> diagram;
  std::optional<std::vector<int>> weight;
  bool question_mark = false;
  std::optional<long long> norm_sq;
  int line = 0;
};

struct RawFixtureTable {
  std::string name;
  std::vector<RawFixtureRow> rows;
  std::vector<std::string> annotations;
  /// printed position -> Bourbaki node; identity until reconciled.
  std::vector<int> node_order;
};

RawFixtureTable parse_fixture_text(std::string_view name, std::string_view text);
std::string render_fixture_row(const RawFixtureRow& row);

/// Names of the tables compiled into the library ("so5", "sp4", "G2", ...).
std::vector<std::string> embedded_fixture_names();
std::optional<std::string_view> embedded_fixture_text(std::string_view name);

/// Table name for a type: B_n -> so(2n+1), C_n -> sp(2n), D_n -> so(2n),
/// exceptional types by their own name. A_n has no table.
std::optional<std::string> table_name(CartanType type);

/// Tries the documented printed-order candidates (identity, then reversed)
/// and returns the table with diagrams and weights permuted into Bourbaki
/// order. A candidate is accepted when every row carrying both a weight and a
/// norm reproduces the norm exactly. No accepted candidate, or two accepted
/// candidates that disagree on some row, is a fixture_error.
RawFixtureTable reconcile_node_order(RawFixtureTable table, const RootSystem& rs);

/// Parsed, reconciled embedded table; throws unknown_table.
RawFixtureTable load_raw_fixture(CartanType type);

}  // namespace cdi
