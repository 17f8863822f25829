#include "lambdalat/report.hpp"

#include <algorithm>
#include <sstream>

namespace lambdalat {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string witness_text(const ReportDocument& doc, const Verdict& v) {
  if (v.holds) return "holds";
  std::string out = "fails at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i) out += ", ";
    const Element x = v.witness[i];
    out += x < doc.labels.size() ? doc.labels[x] : std::to_string(x);
  }
  out += ")";
  if (!v.note.empty()) out += " " + v.note;
  return out;
}

AcuteClause clause_from_string(const std::string& s) {
  for (AcuteClause c : {AcuteClause::NoAtoms, AcuteClause::UniqueAtomBelowAll, AcuteClause::IsoToMk}) {
    if (s == to_string(c)) return c;
  }
  return AcuteClause::Fails;
}

json set_json(ElementSet s) { return s.to_vector(); }

ElementSet set_from_json(const json& j) {
  ElementSet s;
  for (const auto& x : j) s.insert(x.get<Element>());
  return s;
}

}  // namespace

ReportDocument build_report(const ParsedInstance& instance, std::string_view name) {
  const Poset& p = instance.poset;
  ReportDocument doc;
  doc.name = std::string(name);
  doc.labels = p.labels();
  doc.directed = is_directed(p);
  doc.bounded = bounds(p).has_value();
  doc.lu_covering = has_lu_covering(p);
  if (bottom(p)) doc.heights = heights(p);
  if (top(p)) {
    for (Element a = 0; a < p.size(); ++a) {
      const auto chains = maximal_chains_to_top(p, a);
      ChainSummary s{a, chains.size(), chains.front().length(), chains.front().length()};
      for (const Chain& c : chains) {
        s.min_length = std::min(s.min_length, c.length());
        s.max_length = std::max(s.max_length, c.length());
      }
      doc.chains.push_back(s);
    }
  }
  if (doc.bounded) doc.acute = acute_characterization(p);
  if (instance.lattice) {
    const LambdaLattice& ll = *instance.lattice;
    doc.axioms = check_axioms(ll.join_table(), ll.meet_table());
    doc.properties = classify(ll);
    doc.algebra = AlgebraFlags{is_lattice(ll), is_monotone(ll), is_modular(ll), is_distributive(ll),
                               idempotency_holds(ll)};
  }
  return doc;
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream out;
  out << "instance: " << (doc.name.empty() ? "(unnamed)" : doc.name) << "\n";
  out << "elements: " << doc.labels.size() << "\n";
  out << "directed: " << yes_no(doc.directed) << "  bounded: " << yes_no(doc.bounded) << "\n";
  if (doc.axioms) {
    const AxiomReport& a = *doc.axioms;
    out << "axioms: commutativity " << yes_no(a.commutativity()) << ", weak associativity "
        << yes_no(a.weak_associativity()) << ", absorption " << yes_no(a.absorption()) << "\n";
  }
  if (doc.algebra) {
    const AlgebraFlags& f = *doc.algebra;
    out << "lattice: " << yes_no(f.lattice) << "  monotone: " << yes_no(f.monotone) << "  modular: "
        << yes_no(f.modular) << "  distributive: " << yes_no(f.distributive) << "  idempotent: "
        << yes_no(f.idempotent) << "\n";
  }
  if (doc.properties) {
    const PropertyReport& r = *doc.properties;
    out << "semimodular: " << witness_text(doc, r.semimodular) << "\n";
    out << "WLCC: " << witness_text(doc, r.wlcc) << "\n";
    out << "LCC: " << witness_text(doc, r.lcc) << "\n";
    out << "condition (3): " << witness_text(doc, r.cond3) << "\n";
    out << "condition (4): " << witness_text(doc, r.cond4) << "\n";
    out << "condition (5): " << witness_text(doc, r.cond5) << "\n";
    out << "DCC: " << witness_text(doc, r.dcc) << "\n";
  }
  out << "LU-covering: " << witness_text(doc, doc.lu_covering) << "\n";
  if (doc.heights) {
    out << "heights:";
    for (std::size_t i = 0; i < doc.heights->size(); ++i) out << ' ' << doc.labels[i] << '=' << (*doc.heights)[i];
    out << "\n";
  }
  if (!doc.chains.empty()) {
    out << "maximal chains to top:\n";
    for (const ChainSummary& c : doc.chains) {
      out << "  from " << doc.labels[c.from] << ": " << c.chains << " chain(s), length " << c.min_length;
      if (c.max_length != c.min_length) out << ".." << c.max_length;
      out << "\n";
    }
  }
  if (doc.acute) {
    out << "acute clause: " << to_string(doc.acute->clause);
    if (doc.acute->clause == AcuteClause::IsoToMk) out << "(" << doc.acute->k << ")";
    out << "\n";
  }
  return out.str();
}

void to_json(json& j, const Verdict& v) { j = json{{"holds", v.holds}, {"witness", v.witness}, {"note", v.note}}; }

void from_json(const json& j, Verdict& v) {
  j.at("holds").get_to(v.holds);
  j.at("witness").get_to(v.witness);
  j.at("note").get_to(v.note);
}

void to_json(json& j, const AxiomReport& r) {
  j = json{{"join_commutativity", r.join_commutativity},       {"meet_commutativity", r.meet_commutativity},
           {"join_weak_associativity", r.join_weak_associativity}, {"meet_weak_associativity", r.meet_weak_associativity},
           {"join_absorption", r.join_absorption},             {"meet_absorption", r.meet_absorption},
           {"all_pass", r.all_pass()}};
}

void from_json(const json& j, AxiomReport& r) {
  j.at("join_commutativity").get_to(r.join_commutativity);
  j.at("meet_commutativity").get_to(r.meet_commutativity);
  j.at("join_weak_associativity").get_to(r.join_weak_associativity);
  j.at("meet_weak_associativity").get_to(r.meet_weak_associativity);
  j.at("join_absorption").get_to(r.join_absorption);
  j.at("meet_absorption").get_to(r.meet_absorption);
}

void to_json(json& j, const PropertyReport& r) {
  j = json{{"semimodular", r.semimodular}, {"wlcc", r.wlcc},   {"lcc", r.lcc}, {"cond3", r.cond3},
           {"cond4", r.cond4},             {"cond5", r.cond5}, {"dcc", r.dcc}, {"lu_covering", r.lu_covering}};
}

void from_json(const json& j, PropertyReport& r) {
  j.at("semimodular").get_to(r.semimodular);
  j.at("wlcc").get_to(r.wlcc);
  j.at("lcc").get_to(r.lcc);
  j.at("cond3").get_to(r.cond3);
  j.at("cond4").get_to(r.cond4);
  j.at("cond5").get_to(r.cond5);
  j.at("dcc").get_to(r.dcc);
  j.at("lu_covering").get_to(r.lu_covering);
}

void to_json(json& j, const AcuteCharacterization& a) {
  j = json{{"clause", to_string(a.clause)}, {"k", a.k}, {"atoms", set_json(a.atoms)}, {"coatoms", set_json(a.coatoms)}};
}

void from_json(const json& j, AcuteCharacterization& a) {
  a.clause = clause_from_string(j.at("clause").get<std::string>());
  j.at("k").get_to(a.k);
  a.atoms = set_from_json(j.at("atoms"));
  a.coatoms = set_from_json(j.at("coatoms"));
}

void to_json(json& j, const ReportDocument& doc) {
  j = json{{"name", doc.name},         {"labels", doc.labels},           {"directed", doc.directed},
           {"bounded", doc.bounded},   {"lu_covering", doc.lu_covering}, {"heights", nullptr},
           {"chains", json::array()},  {"acute", nullptr},               {"axioms", nullptr},
           {"properties", nullptr},    {"algebra", nullptr}};
  if (doc.heights) j["heights"] = *doc.heights;
  for (const ChainSummary& c : doc.chains) {
    j["chains"].push_back({{"from", c.from}, {"chains", c.chains}, {"min_length", c.min_length}, {"max_length", c.max_length}});
  }
  if (doc.acute) j["acute"] = *doc.acute;
  if (doc.axioms) j["axioms"] = *doc.axioms;
  if (doc.properties) {
    j["properties"] = *doc.properties;
    j["classification"] = {{"sm", doc.properties->semimodular.holds},
                           {"wlcc", doc.properties->wlcc.holds},
                           {"lcc", doc.properties->lcc.holds}};
  }
  if (doc.algebra) {
    const AlgebraFlags& f = *doc.algebra;
    j["algebra"] = {{"lattice", f.lattice},
                    {"monotone", f.monotone},
                    {"modular", f.modular},
                    {"distributive", f.distributive},
                    {"idempotent", f.idempotent}};
  }
}

void from_json(const json& j, ReportDocument& doc) {
  doc = ReportDocument{};
  j.at("name").get_to(doc.name);
  j.at("labels").get_to(doc.labels);
  j.at("directed").get_to(doc.directed);
  j.at("bounded").get_to(doc.bounded);
  j.at("lu_covering").get_to(doc.lu_covering);
  if (!j.at("heights").is_null()) doc.heights = j.at("heights").get<std::vector<int>>();
  for (const auto& c : j.at("chains")) {
    doc.chains.push_back({c.at("from").get<Element>(), c.at("chains").get<std::size_t>(),
                          c.at("min_length").get<std::size_t>(), c.at("max_length").get<std::size_t>()});
  }
  if (!j.at("acute").is_null()) doc.acute = j.at("acute").get<AcuteCharacterization>();
  if (!j.at("axioms").is_null()) doc.axioms = j.at("axioms").get<AxiomReport>();
  if (!j.at("properties").is_null()) doc.properties = j.at("properties").get<PropertyReport>();
  if (!j.at("algebra").is_null()) {
    const json& a = j.at("algebra");
    doc.algebra = AlgebraFlags{a.at("lattice").get<bool>(), a.at("monotone").get<bool>(), a.at("modular").get<bool>(),
                               a.at("distributive").get<bool>(), a.at("idempotent").get<bool>()};
  }
}

json verification_json(const VerificationResult& r) {
  json j{{"theorem", std::string(to_string(r.theorem))},
         {"statement", std::string(theorem_info(r.theorem).statement)},
         {"max_n", r.max_elements},
         {"posets_checked", r.posets_checked},
         {"lattices_checked", r.lattices_checked},
         {"posets_skipped", r.posets_skipped},
         {"counterexample_count", r.counterexample_count},
         {"counterexample", nullptr},
         {"elapsed_ms", r.elapsed.count()},
         {"scope", r.scope()}};
  if (const Counterexample* cx = r.counterexample()) {
    j["counterexample"] = {{"poset_ordinal", cx->poset_ordinal},
                           {"completion_ordinal", cx->completion_ordinal},
                           {"witness", cx->witness},
                           {"instance", cx->instance_text()}};
  }
  return j;
}

}  // namespace lambdalat
