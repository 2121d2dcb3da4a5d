#include "report.hpp"

#include <sstream>

namespace defectkit::cli {

std::string letter_str(const AlphabetPtr& alphabet, Letter a) { return std::string(1, alphabet->symbol(a)); }

Json letters_json(const AlphabetPtr& alphabet, const std::vector<Letter>& letters) {
  Json out = Json::array();
  for (Letter a : letters) out.push_back(letter_str(alphabet, a));
  return out;
}

Json words_json(const WordSet& words) {
  Json out = Json::array();
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

Json words_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

Json classification_json(const GraphClassification& c) {
  return Json{{"vertices", c.vertex_count}, {"edges", c.edge_count},   {"components", c.components},
              {"connected", c.connected},   {"is_tree", c.is_tree},    {"has_cycle", c.has_cycle}};
}

Json graph_json(const ExtensionGraph& g) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) vertices.push_back(g.vertex_label(v));
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back(Json::array({g.vertex_label(u), g.vertex_label(v)}));
  return Json{{"kind", std::string(to_string(g.kind))},
              {"name", graph_name(g)},
              {"vertices", vertices},
              {"edges", edges},
              {"classification", classification_json(classify(g))}};
}

Json extensions_json(const ExtensionData& e) {
  const AlphabetPtr& alpha = e.word.alphabet();
  Json both = Json::array();
  for (auto [a, b] : e.both) both.push_back(letter_str(alpha, a) + letter_str(alpha, b));
  return Json{{"left", letters_json(alpha, e.left)},
              {"right", letters_json(alpha, e.right)},
              {"both", both},
              {"symmetric", letters_json(alpha, e.symmetric)},
              {"multiplicity", e.multiplicity},
              {"bispecial", e.is_bispecial()}};
}

std::string verdict_label(const DefectVerdict& v) {
  switch (v.kind) {
    case DefectKind::Stable: return "stable(" + std::to_string(v.value) + ")";
    case DefectKind::PeriodicDetected: return "periodic(" + std::to_string(v.value) + ")";
    case DefectKind::Growing: return "growing";
  }
  return "?";
}

Json verdict_json(const DefectVerdict& v) {
  Json cps = Json::array();
  for (auto [n, d] : v.checkpoints) cps.push_back(Json{{"length", n}, {"defect", d}});
  return Json{{"kind", std::string(to_string(v.kind))},
              {"value", v.value},
              {"label", verdict_label(v)},
              {"period", v.period ? Json(*v.period) : Json()},
              {"heuristic", true},
              {"growth_window", v.growth_window},
              {"period_bound", v.period_bound},
              {"checkpoints", cps}};
}

Json witness_json(const WitnessReport& r) {
  Json out{{"statement", r.statement},
           {"outcome", std::string(to_string(r.outcome))},
           {"witness", r.witness ? Json(r.witness->str()) : Json()},
           {"graph", r.graph ? Json(std::string(to_string(*r.graph))) : Json()},
           {"search_bound", r.search_bound},
           {"reverified", r.reverified},
           {"note", r.note}};
  if (r.statement == "thm72") {
    out["all_witnesses"] = words_json(r.all_witnesses);
    out["gamma_cycle_palindromes"] = words_json(r.gamma_cycle_palindromes);
    if (r.letter_returns) {
      const auto& lr = *r.letter_returns;
      out["letter_returns"] = Json{
          {"fired", lr.fired},
          {"letter", lr.letter ? Json(std::string(1, r.witness->alphabet()->symbol(*lr.letter))) : Json()},
          {"return_word", lr.return_word ? Json(lr.return_word->str()) : Json()},
          {"horizon", lr.horizon}};
    } else {
      out["letter_returns"] = nullptr;
    }
  }
  return out;
}

Json audit_json(const AuditReport& r) {
  Json out{{"morphism", r.morphism},
           {"primitive", r.primitive},
           {"acyclic", r.acyclic},
           {"marked", r.marked},
           {"well_marked", r.well_marked},
           {"binary", r.binary},
           {"defect", r.defect ? verdict_json(*r.defect) : Json()},
           {"period", r.period ? Json(*r.period) : Json()},
           {"letter_returns_palindromic", r.letter_returns_palindromic},
           {"nontrivial_conjugate", r.nontrivial_conjugate},
           {"marked_theorem", std::string(to_string(r.marked_theorem))},
           {"binary_theorem", std::string(to_string(r.binary_theorem))},
           {"periodic_marked_screen", std::string(to_string(r.periodic_marked_screen))},
           {"consistent", r.consistent()},
           {"notes", r.notes}};
  if (r.letter_returns && r.letter_returns->fired)
    out["letter_return_witness"] = r.letter_returns->return_word->str();
  return out;
}

Json envelope(const std::string& command, const RunConfig& config, const std::string& verdict, Json witnesses,
              Json report) {
  Json cfg{{"morphism", config.morphism ? Json(*config.morphism) : Json()},
           {"word", config.word ? Json(*config.word) : Json()},
           {"seed", config.seed ? Json(std::string(1, *config.seed)) : Json()},
           {"n_max", config.n_max},
           {"horizon", config.horizon},
           {"growth_window", config.growth_window},
           {"format", config.format == OutputFormat::Json ? "json" : "text"}};
  if (command == "verify") {
    cfg["suite"] = config.suite;
    cfg["n"] = config.n ? Json(*config.n) : Json();
    cfg["threshold"] = config.threshold ? Json(*config.threshold) : Json();
    cfg["sample"] = config.sample;
  }
  return Json{{"tool", "defectkit"},
              {"version", std::string(tool_version())},
              {"command", command},
              {"config", cfg},
              {"n_max", config.n_max},
              {"horizon", config.horizon},
              {"verdict", verdict},
              {"witnesses", std::move(witnesses)},
              {"report", std::move(report)}};
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    return;
  }
  if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string render(const Json& doc, OutputFormat format) {
  if (format == OutputFormat::Json) return doc.dump(2) + "\n";
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

}  // namespace defectkit::cli
