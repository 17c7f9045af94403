#include "cdi/tables.hpp"

#include <algorithm>

#include "cdi/error.hpp"

namespace cdi {

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::match: return "match";
    case RowStatus::mismatch: return "mismatch";
    case RowStatus::gap_filled: return "gap_filled";
    case RowStatus::question_resolved: return "question_resolved";
    case RowStatus::skipped: return "skipped";
  }
  return "?";
}

std::vector<CartanType> tabulated_types() {
  std::vector<CartanType> out;
  for (int n = 2; n <= 7; ++n) out.push_back(CartanType::make(Family::B, n));
  for (int n = 2; n <= 7; ++n) out.push_back(CartanType::make(Family::C, n));
  for (int n = 3; n <= 8; ++n) out.push_back(CartanType::make(Family::D, n));
  out.push_back(CartanType::make(Family::G, 2));
  out.push_back(CartanType::make(Family::F, 4));
  for (int n = 6; n <= 8; ++n) out.push_back(CartanType::make(Family::E, n));
  return out;
}

FixtureTable load_fixtures(CartanType type) {
  RawFixtureTable raw = load_raw_fixture(type);
  FixtureTable table{raw.name, type, {}, raw.annotations, raw.node_order};
  for (const auto& r : raw.rows) {
    FixtureRow row;
    row.printed_label = r.label;
    row.diagram = WeightedDynkinDiagram(r.diagram);
    if (r.weight) row.weight = Weight::from(*r.weight);
    row.norm_sq = r.norm_sq;
    row.flag = !r.weight ? FixtureFlag::blank
               : r.question_mark ? FixtureFlag::question_mark
                                 : FixtureFlag::confirmed;
    if (r.label.rfind("diag:", 0) == 0) {
      const auto printed = WeightedDynkinDiagram::parse(r.label.substr(5));
      if (printed.rank() != row.diagram.rank()) {
        throw Error(Errc::fixture_error, table.name + ":" + std::to_string(r.line) + ": bad diag label");
      }
      row.orbit = DiagramOrbit{table.rows.size(), row.diagram};
    } else {
      if (!is_classical(type.family)) {
        throw Error(Errc::fixture_error, table.name + ": partition label in exceptional table");
      }
      ClassicalOrbit c = OrbitLabel::parse_classical(r.label).classical();
      if (c.tag) {
        // The printed subscript is only a name; the diagram decides the tag.
        c.tag.reset();
        for (VeryEvenTag t : {VeryEvenTag::I, VeryEvenTag::II}) {
          if (is_very_even(c.partition, type) &&
              diagram_from_partition(c.partition, type, t) == row.diagram) {
            c.tag = t;
          }
        }
        if (!c.tag) {
          throw Error(Errc::fixture_error, table.name + ":" + std::to_string(r.line) +
                                               ": diagram matches neither tag of " + r.label);
        }
      }
      row.orbit = c;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<std::string> check_fixture_consistency(const FixtureTable& table) {
  std::vector<std::string> problems;
  const RootSystem rs(table.type);
  for (const auto& row : table.rows) {
    if (row.weight) {
      const Rational n = rs.norm_sq(*row.weight);
      if (n != Rational(*row.norm_sq)) {
        problems.push_back(table.name + " " + row.printed_label + ": |" + render_weight(*row.weight) +
                           "|^2 = " + std::to_string(n.numerator()) + "/" +
                           std::to_string(n.denominator()) + ", printed " + std::to_string(*row.norm_sq));
      }
    }
    if (row.orbit.is_classical()) {
      const auto& c = row.orbit.classical();
      try {
        const auto h = diagram_from_partition(c.partition, table.type, c.tag);
        if (h != row.diagram) {
          problems.push_back(table.name + " " + row.printed_label + ": partition gives " + h.render() +
                             ", printed " + row.diagram.render());
        }
      } catch (const Error& e) {
        problems.push_back(table.name + " " + row.printed_label + ": " + e.what());
      }
    }
  }
  return problems;
}

std::vector<Orbit> fixture_orbits(const FixtureTable& table) {
  std::vector<Orbit> out;
  for (const auto& row : table.rows) out.push_back(Orbit{row.orbit, row.diagram});
  return out;
}

std::size_t VerificationReport::count(RowStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [s](const RowVerification& r) { return r.status == s; }));
}

VerificationReport verify(CartanType type, const std::vector<OrbitComputation>& results,
                          const FixtureTable& fixtures) {
  VerificationReport report{type, {}};
  for (std::size_t i = 0; i < fixtures.rows.size(); ++i) {
    const FixtureRow& row = fixtures.rows[i];
    RowVerification v;
    v.row = i;
    const auto it = std::find_if(results.begin(), results.end(),
                                 [&](const OrbitComputation& c) { return c.orbit.label == row.orbit; });
    if (it == results.end() || !it->result) {
      v.status = RowStatus::skipped;
      v.detail = it == results.end() ? "not computed" : it->skipped;
      report.rows.push_back(std::move(v));
      continue;
    }
    const LMapResult& r = *it->result;
    v.computed = r;
    const bool diagram_ok = r.diagram == row.diagram;
    switch (row.flag) {
      case FixtureFlag::blank:
        v.status = diagram_ok ? RowStatus::gap_filled : RowStatus::mismatch;
        break;
      case FixtureFlag::question_mark:
        v.agree = diagram_ok && r.weight == *row.weight && r.norm_sq == Rational(*row.norm_sq);
        v.status = diagram_ok ? RowStatus::question_resolved : RowStatus::mismatch;
        break;
      case FixtureFlag::confirmed: {
        const bool ok = diagram_ok && r.weight == *row.weight && r.norm_sq == Rational(*row.norm_sq);
        v.status = ok ? RowStatus::match : RowStatus::mismatch;
        break;
      }
    }
    if (v.status == RowStatus::mismatch) {
      v.detail = "computed " + r.diagram.render() + " -> " + render_weight(r.weight) + "; table " +
                 row.diagram.render() + " -> " + (row.weight ? render_weight(*row.weight) : "-");
    }
    report.rows.push_back(std::move(v));
  }
  return report;
}

}  // namespace cdi
