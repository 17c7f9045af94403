#include "cdi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cdi/error.hpp"
#include "cdi/fixture_format.hpp"
#include "cdi/tables.hpp"

namespace cdi::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Row {
  Orbit orbit;
  std::optional<LMapResult> result;
  std::string status;  // computed, match, mismatch, gap_filled, question_resolved, skipped
  std::optional<bool> agree;
  std::string note;
};

struct Output {
  std::vector<Row> rows;
  std::optional<VerificationReport> report;
};

std::string render_norm(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json json_ints(std::span<const int> v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

Json json_weight(const Weight& w) {
  Json a = Json::array();
  for (int x : w) a.push_back(x);
  return a;
}

LMapOptions make_options(const RunConfig& c) {
  LMapOptions o;
  if (c.strategy) o.strategy = *c.strategy;
  if (c.cap) {
    o.term_cap = *c.cap;
  } else if (const char* env = std::getenv("ORBIT_LMAP_CAP"); env && *env) {
    try {
      o.term_cap = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::invalid_argument, std::string("ORBIT_LMAP_CAP: not a number: ") + env);
    }
  }
  return o;
}

Orbit select_orbit(const RunConfig& c) {
  if (c.diagram) {
    auto h = WeightedDynkinDiagram::parse(*c.diagram);
    if (h.rank() != c.type.rank) {
      throw Error(Errc::rank_mismatch, "diagram has " + std::to_string(h.rank()) + " labels, rank is " +
                                           std::to_string(c.type.rank));
    }
    return Orbit{DiagramOrbit{std::nullopt, h}, h};
  }
  return orbit_from_label(OrbitLabel::parse_classical(*c.orbit), c.type);
}

std::optional<FixtureTable> try_fixtures(CartanType t) {
  if (!table_name(t) || !embedded_fixture_text(*table_name(t))) return std::nullopt;
  return load_fixtures(t);
}

void render_text(const RunConfig& c, const Output& o, std::ostream& os) {
  const bool verify = c.command == Command::verify;
  std::size_t w_orbit = 5, w_diag = 7, w_weight = 6;
  for (const auto& r : o.rows) {
    w_orbit = std::max(w_orbit, r.orbit.label.render().size());
    w_diag = std::max(w_diag, r.orbit.diagram.render().size());
    if (r.result) w_weight = std::max(w_weight, render_weight(r.result->weight).size());
  }
  os << c.type.name();
  if (auto n = table_name(c.type); n && *n != c.type.name()) os << " (" << *n << ")";
  os << '\n';
  auto cell = [&os](const std::string& s, std::size_t w) { os << std::left << std::setw(static_cast<int>(w + 2)) << s; };
  cell("orbit", w_orbit);
  cell("diagram", w_diag);
  cell("weight", w_weight);
  os << "norm";
  if (verify) os << "  status";
  os << '\n';
  for (const auto& r : o.rows) {
    cell(r.orbit.label.render(), w_orbit);
    cell(r.orbit.diagram.render(), w_diag);
    cell(r.result ? render_weight(r.result->weight) : "-", w_weight);
    std::string norm = r.result ? render_norm(r.result->norm_sq) : "-";
    if (verify) {
      os << std::left << std::setw(6) << norm;
      os << r.status;
      if (r.agree) os << (*r.agree ? " (agrees)" : " (differs)");
    } else {
      os << norm;
      if (!r.result) os << "  skipped";
    }
    if (!r.note.empty()) os << "  " << r.note;
    os << '\n';
  }
  if (verify && o.report) {
    const auto& rep = *o.report;
    os << rep.count(RowStatus::match) << '/' << rep.rows.size() << " match";
    for (RowStatus s : {RowStatus::mismatch, RowStatus::gap_filled, RowStatus::question_resolved,
                        RowStatus::skipped}) {
      if (auto n = rep.count(s)) os << ", " << n << ' ' << to_string(s);
    }
    os << '\n';
  }
}

void render_csv(const RunConfig& c, const Output& o, std::ostream& os) {
  const bool verify = c.command == Command::verify;
  os << "type;orbit;diagram;weight;norm_sq";
  if (verify) os << ";status";
  os << '\n';
  for (const auto& r : o.rows) {
    os << c.type.name() << ';' << r.orbit.label.render() << ';' << r.orbit.diagram.render() << ';'
       << (r.result ? render_weight(r.result->weight) : "") << ';'
       << (r.result ? render_norm(r.result->norm_sq) : "");
    if (verify) os << ';' << r.status;
    os << '\n';
  }
}

void render_json(const RunConfig& c, const Output& o, std::ostream& os) {
  Json doc;
  doc["type"] = c.type.name();
  doc["command"] = c.command == Command::lmap ? "lmap" : c.command == Command::verify ? "verify" : "table";
  Json rows = Json::array();
  for (const auto& r : o.rows) {
    Json j;
    j["orbit"] = r.orbit.label.render();
    const std::string tag = r.orbit.label.is_classical() ? r.orbit.label.tag_name() : "";
    j["tag"] = tag.empty() ? Json(nullptr) : Json(tag);
    j["diagram"] = json_ints(r.orbit.diagram.labels());
    if (r.result) {
      j["weight"] = json_weight(r.result->weight);
      if (r.result->norm_sq.denominator() == 1) {
        j["norm_sq"] = r.result->norm_sq.numerator();
      } else {
        j["norm_sq"] = render_norm(r.result->norm_sq);
      }
      j["sign"] = r.result->leading_sign;
      j["status"] = r.status;
      j["strategy"] = std::string(to_string(r.result->strategy));
      j["terms_peak"] = r.result->stats.terms_peak;
      j["ms"] = c.timing ? r.result->stats.ms : 0;
    } else {
      j["weight"] = nullptr;
      j["norm_sq"] = nullptr;
      j["sign"] = nullptr;
      j["status"] = r.status;
      j["strategy"] = nullptr;
      j["terms_peak"] = nullptr;
      j["ms"] = 0;
    }
    if (r.agree) j["agree"] = *r.agree;
    if (!r.note.empty()) j["note"] = r.note;
    rows.push_back(std::move(j));
  }
  doc["rows"] = std::move(rows);
  if (o.report) {
    Json s;
    s["rows"] = o.report->rows.size();
    for (RowStatus st : {RowStatus::match, RowStatus::mismatch, RowStatus::gap_filled,
                         RowStatus::question_resolved, RowStatus::skipped}) {
      s[std::string(to_string(st))] = o.report->count(st);
    }
    doc["summary"] = std::move(s);
  }
  os << doc.dump(2) << '\n';
}

void render_orbits(const RunConfig& c, const std::vector<Orbit>& orbits, std::ostream& os) {
  switch (c.format) {
    case Format::text:
      for (const auto& o : orbits) os << o.label.render() << "  " << o.diagram.render() << '\n';
      break;
    case Format::csv:
      os << "type;orbit;diagram\n";
      for (const auto& o : orbits) os << c.type.name() << ';' << o.label.render() << ';' << o.diagram.render() << '\n';
      break;
    case Format::json: {
      Json doc;
      doc["type"] = c.type.name();
      doc["command"] = "orbits";
      Json rows = Json::array();
      for (const auto& o : orbits) {
        Json j;
        j["orbit"] = o.label.render();
        const std::string tag = o.label.is_classical() ? o.label.tag_name() : "";
        j["tag"] = tag.empty() ? Json(nullptr) : Json(tag);
        j["diagram"] = json_ints(o.diagram.labels());
        rows.push_back(std::move(j));
      }
      doc["rows"] = std::move(rows);
      os << doc.dump(2) << '\n';
      break;
    }
  }
}

Row row_from(const OrbitComputation& c) {
  Row r{c.orbit, c.result, c.result ? "computed" : "skipped", std::nullopt, {}};
  if (!c.result) r.note = c.skipped;
  return r;
}

}  // namespace

std::vector<Orbit> table_orbits(CartanType type) {
  std::vector<Orbit> out;
  if (auto fx = try_fixtures(type)) out = fixture_orbits(*fx);
  for (auto& o : orbits_with_diagrams(type)) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Orbit& x) { return x.label == o.label; });
    if (!seen) out.push_back(std::move(o));
  }
  return out;
}

void validate(const RunConfig& c) {
  c.type.validate();
  const bool selector = c.orbit || c.diagram;
  if (c.command == Command::lmap) {
    if (c.orbit.has_value() == c.diagram.has_value()) {
      throw Error(Errc::invalid_argument, "lmap needs exactly one of --orbit and --diagram");
    }
    if (c.orbit && !is_classical(c.type.family)) {
      throw Error(Errc::invalid_argument, "--orbit takes a partition; use --diagram for exceptional types");
    }
  } else if (selector) {
    throw Error(Errc::invalid_argument, "--orbit/--diagram are only valid with lmap");
  }
  if (c.threads == 0) throw Error(Errc::invalid_argument, "--threads must be positive");
  if (c.cap && *c.cap == 0) throw Error(Errc::invalid_argument, "--cap must be positive");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const RunConfig& c = config;
    std::ofstream file;
    if (c.out) {
      file.open(*c.out, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << *c.out << '\n';
        return kExitUsage;
      }
    }
    std::ostream& os = c.out ? static_cast<std::ostream&>(file) : out;

    if (c.command == Command::orbits) {
      render_orbits(c, table_orbits(c.type), os);
      return kExitOk;
    }

    const RootSystem rs(c.type);
    const LMapOptions options = make_options(c);
    Output o;
    int code = kExitOk;

    if (c.command == Command::lmap) {
      const Orbit orbit = select_orbit(c);
      OrbitComputation comp{orbit, std::nullopt, {}};
      try {
        comp.result = compute_orbit(rs, orbit, options);
      } catch (const Error& e) {
        if (e.code() != Errc::resource_limit) throw;
        comp.skipped = e.what();
      }
      o.rows.push_back(row_from(comp));
    } else if (c.command == Command::table) {
      for (const auto& comp : compute_all(rs, table_orbits(c.type), options, c.threads)) {
        o.rows.push_back(row_from(comp));
      }
    } else {
      const FixtureTable fx = load_fixtures(c.type);
      const auto comps = compute_all(rs, fixture_orbits(fx), options, c.threads);
      o.report = verify(c.type, comps, fx);
      for (const auto& v : o.report->rows) {
        Row r = row_from(comps[v.row]);
        r.status = std::string(to_string(v.status));
        if (v.status == RowStatus::question_resolved) r.agree = v.agree;
        if (!v.detail.empty()) r.note = v.detail;
        o.rows.push_back(std::move(r));
      }
      if (o.report->count(RowStatus::mismatch) > 0) code = kExitMismatch;
    }
    const bool skipped = std::any_of(o.rows.begin(), o.rows.end(), [](const Row& r) { return !r.result; });
    if (code == kExitOk && skipped) code = kExitSkipped;

    switch (c.format) {
      case Format::text: render_text(c, o, os); break;
      case Format::csv: render_csv(c, o, os); break;
      case Format::json: render_json(c, o, os); break;
    }
    os.flush();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical distinguished involutions L(O) of nilpotent orbits"};
  app.require_subcommand(1, 1);

  std::string family;
  int rank = 0;
  std::optional<std::string> orbit, diagram, strategy, out_path;
  std::optional<std::size_t> cap;
  unsigned threads = 1;
  std::string format = "text";
  bool timing = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", family, "A, B, C, D, E, F or G")->required()
        ->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
    sub->add_option("--rank", rank, "rank")->required();
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", out_path, "write output to this file");
  };
  auto add_compute = [&](CLI::App* sub) {
    sub->add_option("--strategy", strategy, "full, hybrid, richardson or gl")
        ->check(CLI::IsMember({"full", "hybrid", "richardson", "gl", "auto"}));
    sub->add_option("--cap", cap, "term cap (default ORBIT_LMAP_CAP or 1e8)");
    sub->add_option("--threads", threads, "worker threads");
    sub->add_flag("--timing", timing, "report wall time per row");
  };

  auto* orbits_cmd = app.add_subcommand("orbits", "list orbits and diagrams");
  add_common(orbits_cmd);
  auto* lmap_cmd = app.add_subcommand("lmap", "compute L(O) for one orbit");
  add_common(lmap_cmd);
  add_compute(lmap_cmd);
  lmap_cmd->add_option("--orbit", orbit, "partition, with _1/_2 for very even D orbits");
  lmap_cmd->add_option("--diagram", diagram, "weighted Dynkin diagram");
  auto* table_cmd = app.add_subcommand("table", "compute every orbit");
  add_common(table_cmd);
  add_compute(table_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "compare with the embedded table");
  add_common(verify_cmd);
  add_compute(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  RunConfig c;
  try {
    c.type = CartanType{parse_family(family), rank};
    if (strategy) c.strategy = parse_strategy(*strategy);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  c.command = orbits_cmd->parsed() ? Command::orbits
              : lmap_cmd->parsed() ? Command::lmap
              : table_cmd->parsed() ? Command::table
                                    : Command::verify;
  c.orbit = orbit;
  c.diagram = diagram;
  c.cap = cap;
  c.threads = threads;
  c.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  c.out = out_path;
  c.timing = timing;
  return run(c, out, err);
}

}  // namespace cdi::cli
