#include "cdi/fixture_format.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "cdi/diagram.hpp"
#include "cdi/error.hpp"

namespace cdi {

namespace detail {
// Generated from data/fixtures/*.tbl at build time.
struct EmbeddedFixture {
  const char* name;
  const char* text;
};
extern const EmbeddedFixture kEmbeddedFixtures[];
extern const std::size_t kEmbeddedFixtureCount;
}  // namespace detail

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

std::vector<int> digits(std::string_view s, std::string_view where) {
  std::vector<int> out;
  for (char c : s) {
    if (c < '0' || c > '9') throw Error(Errc::fixture_error, "non-digit in " + std::string(where));
    out.push_back(c - '0');
  }
  if (out.empty()) throw Error(Errc::fixture_error, "empty digit field in " + std::string(where));
  return out;
}

std::vector<int> permute(const std::vector<int>& printed, const std::vector<int>& order) {
  std::vector<int> out(printed.size());
  for (std::size_t pos = 0; pos < printed.size(); ++pos) out[order[pos]] = printed[pos];
  return out;
}

}  // namespace

RawFixtureTable parse_fixture_text(std::string_view name, std::string_view text) {
  RawFixtureTable table;
  table.name = std::string(name);
  int line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      table.annotations.emplace_back(line);
      continue;
    }
    const std::string where = table.name + ":" + std::to_string(line_no);
    const auto fields = split(line, '|');
    if (fields.size() != 4) throw Error(Errc::fixture_error, where + ": expected 4 fields");
    RawFixtureRow row;
    row.line = line_no;
    row.label = std::string(fields[0]);
    row.diagram = digits(fields[1], where);
    std::string_view w = fields[2];
    if (w != "-") {
      if (!w.empty() && w.back() == '?') {
        row.question_mark = true;
        w.remove_suffix(1);
      }
      row.weight = digits(w, where);
      if (row.weight->size() != row.diagram.size()) {
        throw Error(Errc::fixture_error, where + ": weight and diagram lengths differ");
      }
    }
    if (fields[3] != "-") {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), v);
      if (ec != std::errc{} || ptr != fields[3].data() + fields[3].size()) {
        throw Error(Errc::fixture_error, where + ": bad norm field");
      }
      row.norm_sq = v;
    }
    if (row.weight.has_value() != row.norm_sq.has_value()) {
      throw Error(Errc::fixture_error, where + ": weight and norm must be both present or both blank");
    }
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) throw Error(Errc::fixture_error, table.name + ": no rows");
  table.node_order.resize(table.rows.front().diagram.size());
  std::iota(table.node_order.begin(), table.node_order.end(), 0);
  return table;
}

std::string render_fixture_row(const RawFixtureRow& row) {
  std::string out = row.label + "|" + render_int_list(row.diagram) + "|";
  if (row.weight) {
    out += render_int_list(*row.weight);
    if (row.question_mark) out += "?";
  } else {
    out += "-";
  }
  out += "|";
  out += row.norm_sq ? std::to_string(*row.norm_sq) : std::string("-");
  return out;
}

std::vector<std::string> embedded_fixture_names() {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < detail::kEmbeddedFixtureCount; ++i)
    out.emplace_back(detail::kEmbeddedFixtures[i].name);
  return out;
}

std::optional<std::string_view> embedded_fixture_text(std::string_view name) {
  for (std::size_t i = 0; i < detail::kEmbeddedFixtureCount; ++i) {
    if (name == detail::kEmbeddedFixtures[i].name) return detail::kEmbeddedFixtures[i].text;
  }
  return std::nullopt;
}

std::optional<std::string> table_name(CartanType type) {
  const int n = type.rank;
  switch (type.family) {
    case Family::A: return std::nullopt;
    case Family::B: return "so" + std::to_string(2 * n + 1);
    case Family::C: return "sp" + std::to_string(2 * n);
    case Family::D: return "so" + std::to_string(2 * n);
    default: return type.name();
  }
}

RawFixtureTable reconcile_node_order(RawFixtureTable table, const RootSystem& rs) {
  const int n = rs.rank();
  for (const auto& row : table.rows) {
    if (static_cast<int>(row.diagram.size()) != n) {
      throw Error(Errc::fixture_error, table.name + ":" + std::to_string(row.line) +
                                           ": row has wrong number of nodes for " + rs.type().name());
    }
  }
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<int> reversed(identity.rbegin(), identity.rend());

  auto validates = [&](const std::vector<int>& order) {
    for (const auto& row : table.rows) {
      if (!row.weight) continue;
      const Weight w = Weight::from(permute(*row.weight, order));
      if (rs.norm_sq(w) != Rational(*row.norm_sq)) return false;
    }
    return true;
  };

  std::vector<std::vector<int>> accepted;
  for (const auto& order : {identity, reversed}) {
    if (validates(order) &&
        std::find(accepted.begin(), accepted.end(), order) == accepted.end()) {
      accepted.push_back(order);
    }
  }
  if (accepted.empty()) {
    throw Error(Errc::fixture_error, table.name + ": no node order reproduces the printed norms");
  }
  if (accepted.size() > 1) {
    // Both orders pass the norm check. That is harmless when reversal is a
    // diagram symmetry (the two readings agree up to an automorphism of the
    // root system), which is exactly when the form is reversal-invariant.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rs.simple_form(i, j) != rs.simple_form(n - 1 - i, n - 1 - j)) {
          throw Error(Errc::fixture_error, table.name + ": node order is ambiguous");
        }
  }
  table.node_order = accepted.front();
  for (auto& row : table.rows) {
    row.diagram = permute(row.diagram, table.node_order);
    if (row.weight) row.weight = permute(*row.weight, table.node_order);
  }
  return table;
}

RawFixtureTable load_raw_fixture(CartanType type) {
  type.validate();
  const auto name = table_name(type);
  if (!name) throw Error(Errc::unknown_table, "no table for " + type.name());
  const auto text = embedded_fixture_text(*name);
  if (!text) throw Error(Errc::unknown_table, "no table " + *name);
  return reconcile_node_order(parse_fixture_text(*name, *text), RootSystem(type));
}

}  // namespace cdi
