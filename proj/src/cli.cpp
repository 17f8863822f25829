#include "lambdalat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lambdalat/checkers.hpp"
#include "lambdalat/dot.hpp"
#include "lambdalat/errors.hpp"
#include "lambdalat/fixtures.hpp"
#include "lambdalat/instance_io.hpp"
#include "lambdalat/report.hpp"
#include "lambdalat/search.hpp"

namespace lambdalat {

namespace {

struct LoadedInstance {
  std::string name;
  ParsedInstance parsed;
};

LoadedInstance load(const std::string& source) {
  if (!source.empty() && source.front() == '@') {
    const Fixture& f = fixture(source.substr(1));
    return {f.name, {f.lattice.poset(), f.lattice}};
  }
  std::ifstream in(source);
  if (!in) throw Error("cannot read `" + source + "`");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return {source, parse_instance(buffer.str())};
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct TableRow {
  ClassTriple triple;
  std::vector<std::string> instances;
};

std::vector<TableRow> table_rows(bool& matches_expected) {
  std::map<ClassTriple, std::vector<std::string>, std::greater<>> groups;
  matches_expected = true;
  for (const Fixture& f : fixture_catalog()) {
    const ClassTriple t{is_semimodular(f.lattice).holds, satisfies_wlcc(f.lattice).holds,
                        satisfies_lcc(f.lattice).holds};
    if (!(t == f.expected)) matches_expected = false;
    groups[t].push_back(f.name);
  }
  std::vector<TableRow> rows;
  for (auto& [t, names] : groups) rows.push_back({t, std::move(names)});
  return rows;
}

int cmd_check(const std::string& file, bool as_json, std::ostream& out) {
  const LoadedInstance inst = load(file);
  const ReportDocument doc = build_report(inst.parsed, inst.name);
  if (as_json) {
    out << json(doc).dump(2) << "\n";
  } else {
    out << render_text(doc);
  }
  return !doc.axioms || doc.axioms->all_pass() ? kExitOk : kExitViolation;
}

int cmd_classify(const std::string& file, bool as_json, std::ostream& out) {
  const LoadedInstance inst = load(file);
  if (!inst.parsed.lattice) {
    from_choice(inst.parsed.poset, ChoiceSpec{});  // names the undetermined pair
    throw IncompleteChoiceError("instance does not determine every join and meet");
  }
  const PropertyReport r = classify(*inst.parsed.lattice);
  const ClassTriple t = r.triple();
  if (as_json) {
    out << json{{"name", inst.name},
                {"sm", t.sm},
                {"wlcc", t.wlcc},
                {"lcc", t.lcc},
                {"properties", r}}
               .dump(2)
        << "\n";
  } else {
    ReportDocument doc;
    doc.labels = inst.parsed.poset.labels();
    auto line = [&](const char* name, const Verdict& v) {
      out << std::left << std::setw(14) << name << (v.holds ? "yes" : "no");
      if (!v.holds) {
        out << "  at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? ", " : "") << doc.labels[v.witness[i]];
        out << ")";
      }
      out << "\n";
    };
    out << "instance: " << inst.name << "\n";
    line("SM", r.semimodular);
    line("WLCC", r.wlcc);
    line("LCC", r.lcc);
    line("cond3", r.cond3);
    line("cond4", r.cond4);
    line("cond5", r.cond5);
    line("DCC", r.dcc);
    line("LU-covering", r.lu_covering);
  }
  return t.sm && t.wlcc && t.lcc ? kExitOk : kExitViolation;
}

int cmd_table(bool as_json, std::ostream& out) {
  bool matches = true;
  const auto rows = table_rows(matches);
  if (as_json) {
    json j{{"rows", json::array()}, {"matches_expected", matches}};
    for (const TableRow& row : rows) {
      j["rows"].push_back({{"sm", row.triple.sm}, {"wlcc", row.triple.wlcc}, {"lcc", row.triple.lcc},
                           {"instances", row.instances}});
    }
    out << j.dump(2) << "\n";
  } else {
    out << "SM   WLCC LCC  instances\n";
    for (const TableRow& row : rows) {
      out << std::left << std::setw(5) << yes_no(row.triple.sm) << std::setw(5) << yes_no(row.triple.wlcc)
          << std::setw(5) << yes_no(row.triple.lcc);
      for (std::size_t i = 0; i < row.instances.size(); ++i) out << (i ? ", " : "") << row.instances[i];
      out << "\n";
    }
  }
  return matches ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& id, std::size_t max_n, std::uint64_t budget, unsigned threads, bool as_json,
               std::ostream& out) {
  VerifyOptions options;
  options.filter.max_elements = max_n;
  options.budget = budget;
  options.threads = threads;
  const VerificationResult r = verify(parse_theorem_id(id), options);
  if (as_json) {
    out << verification_json(r).dump(2) << "\n";
  } else {
    out << "theorem: " << to_string(r.theorem) << " (" << theorem_info(r.theorem).statement << ")\n";
    out << "posets checked: " << r.posets_checked << "\n";
    if (theorem_info(r.theorem).over_completions) out << "λ-lattices checked: " << r.lattices_checked << "\n";
    if (r.posets_skipped) out << "posets skipped: " << r.posets_skipped << "\n";
    if (const Counterexample* cx = r.counterexample()) {
      out << "counterexamples: " << r.counterexample_count << "\n";
      out << "counterexample: " << cx->witness << "\n" << cx->instance_text();
    } else {
      out << "counterexample: none\n";
    }
    out << "scope: " << r.scope() << "\n";
    out << "elapsed: " << r.elapsed.count() << " ms\n";
  }
  return r.clean() ? kExitOk : kExitViolation;
}

int cmd_enumerate(std::size_t n, bool directed, bool bounded, bool unlabeled, bool count_only, bool as_json,
                  std::ostream& out) {
  EnumerationFilter f;
  f.min_elements = n;
  f.max_elements = n;
  f.require_directed = directed;
  f.require_bounded = bounded;
  f.unlabeled = unlabeled;
  if (count_only) {
    const std::uint64_t count = count_posets(f);
    if (as_json) {
      out << json{{"n", n}, {"count", count}}.dump(2) << "\n";
    } else {
      out << count << "\n";
    }
    return kExitOk;
  }
  if (as_json) {
    json j{{"n", n}, {"posets", json::array()}};
    for_each_poset(f, [&](const Poset& p) {
      json covers = json::array();
      for (auto [x, y] : p.cover_pairs()) covers.push_back({x, y});
      j["posets"].push_back({{"covers", covers}});
    });
    j["count"] = j["posets"].size();
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  std::uint64_t index = 0;
  for_each_poset(f, [&](const Poset& p) {
    if (index) out << "\n";
    out << render_poset(p, "poset " + std::to_string(index++));
  });
  return kExitOk;
}

int cmd_export_dot(const std::string& file, bool as_json, std::ostream& out) {
  const LoadedInstance inst = load(file);
  const std::string dot =
      inst.parsed.lattice ? export_dot(*inst.parsed.lattice, inst.name) : export_dot(inst.parsed.poset, inst.name);
  if (as_json) {
    out << json{{"name", inst.name}, {"dot", dot}}.dump(2) << "\n";
  } else {
    out << dot;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite λ-lattices: construction, property checks and exhaustive verification", "lambdalat"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON document");

  std::string file;
  auto* check = app.add_subcommand("check", "Axioms, order data and properties of an instance");
  check->add_option("FILE", file, "Instance file or @FIXTURE")->required();
  check->add_flag("--json", as_json);

  auto* classify_cmd = app.add_subcommand("classify", "SM / WLCC / LCC and side conditions");
  classify_cmd->add_option("FILE", file, "Instance file or @FIXTURE")->required();
  classify_cmd->add_flag("--json", as_json);

  auto* table = app.add_subcommand("table", "Classification of the built-in fixtures");
  table->add_flag("--json", as_json);

  std::string theorem;
  std::size_t max_n = 5;
  std::uint64_t budget = kDefaultCompletionBudget;
  unsigned threads = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Replay a statement over all small instances");
  verify_cmd->add_option("ID", theorem, "Theorem id")->required();
  verify_cmd->add_option("--max-n", max_n, "Largest carrier")->check(CLI::Range(1, 32));
  verify_cmd->add_option("--budget", budget, "Completion budget per poset");
  verify_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
  verify_cmd->add_flag("--json", as_json);

  std::size_t n = 0;
  bool directed = false;
  bool bounded = false;
  bool unlabeled = false;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List labeled posets of a given size");
  enumerate->add_option("--n", n, "Element count")->required()->check(CLI::Range(1, 32));
  enumerate->add_flag("--directed", directed);
  enumerate->add_flag("--bounded", bounded);
  enumerate->add_flag("--unlabeled", unlabeled, "One poset per isomorphism class");
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_flag("--json", as_json);

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in Graphviz format");
  dot->add_option("FILE", file, "Instance file or @FIXTURE")->required();
  dot->add_flag("--json", as_json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_check(file, as_json, out);
    if (*classify_cmd) return cmd_classify(file, as_json, out);
    if (*table) return cmd_table(as_json, out);
    if (*verify_cmd) return cmd_verify(theorem, max_n, budget, threads, as_json, out);
    if (*enumerate) return cmd_enumerate(n, directed, bounded, unlabeled, count_only, as_json, out);
    if (*dot) return cmd_export_dot(file, as_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lambdalat
