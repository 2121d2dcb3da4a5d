#include "defectkit/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <future>
#include <set>

#include "defectkit/cli/corpus.hpp"
#include "defectkit/cli/morphism_text.hpp"
#include "defectkit/errors.hpp"
#include "defectkit/extension_graph.hpp"
#include "defectkit/language.hpp"
#include "defectkit/pal_index.hpp"
#include "defectkit/verifier.hpp"
#include "report.hpp"

namespace defectkit::cli {

std::string_view tool_version() noexcept { return "0.3.0"; }

void validate(const RunConfig& config) {
  if (config.n_max < 2) throw PreconditionError("n_max must be at least 2");
  if (config.horizon < config.n_max) throw PreconditionError("horizon must be at least n_max");
  if (config.growth_window < 2) throw PreconditionError("growth window must be at least 2");
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"eq1",     "lemma42", "lemma44", "prop54", "thm55",
                                               "lemma61", "thm72",   "phi",     "audit",  "section8"};
  return ids;
}

namespace {

struct Outcome {
  std::string verdict;
  int exit_code = exit_code::kOk;
  Json witnesses = Json::array();
  Json report = Json::object();
  std::vector<OutputFile> files;
};

CommandResult finish(const std::string& command, const RunConfig& config, Outcome o) {
  Json doc = envelope(command, config, o.verdict, std::move(o.witnesses), std::move(o.report));
  return {o.exit_code, render(doc, config.format), std::move(o.files)};
}

CommandResult failure(const std::string& command, const RunConfig& config, int code, const std::string& kind,
                      const std::string& message, Json extra = Json::object()) {
  Json err{{"kind", kind}, {"message", message}};
  for (auto it = extra.begin(); it != extra.end(); ++it) err[it.key()] = it.value();
  Outcome o;
  o.verdict = "error";
  o.exit_code = code;
  o.report = Json{{"error", err}};
  return finish(command, config, std::move(o));
}

CommandResult guarded(const std::string& command, const RunConfig& config,
                      const std::function<Outcome()>& body) {
  try {
    validate(config);
    return finish(command, config, body());
  } catch (const MorphismParseError& e) {
    return failure(command, config, exit_code::kUsage, "parse_error", e.what(),
                   Json{{"rule", e.rule()}, {"column", e.column()}});
  } catch (const NotInLanguage& e) {
    return failure(command, config, exit_code::kOutsideLanguage, "not_in_language", e.what());
  } catch (const PreconditionError& e) {
    return failure(command, config, exit_code::kUsage, "usage_error", e.what());
  } catch (const AlphabetMismatch& e) {
    return failure(command, config, exit_code::kUsage, "usage_error", e.what());
  } catch (const InsufficientHorizon& e) {
    return failure(command, config, exit_code::kFailed, "inconclusive", e.what());
  } catch (const SearchBoundExceeded& e) {
    return failure(command, config, exit_code::kFailed, "inconclusive", e.what());
  }
}

Morphism require_morphism(const RunConfig& config) {
  if (!config.morphism) throw PreconditionError("--morphism is required");
  return parse_morphism(*config.morphism);
}

Letter resolve_seed(const Morphism& m, const RunConfig& config) {
  if (!config.seed) return default_seed(m);
  auto id = m.alphabet()->find(*config.seed);
  if (!id) throw PreconditionError(std::string("seed '") + *config.seed + "' is not a letter of the morphism");
  auto growing = m.growing_fixed_point_letters();
  if (std::find(growing.begin(), growing.end(), *id) == growing.end())
    throw PreconditionError(std::string("seed '") + *config.seed + "' is not a growing fixed-point letter");
  return *id;
}

LanguageSnapshot snapshot(const Morphism& m, const RunConfig& config) {
  if (!is_primitive(m)) throw PreconditionError("morphism " + m.str() + " is not primitive");
  SnapshotOptions opts;
  opts.seed = resolve_seed(m, config);
  return LanguageSnapshot::build(m, config.n_max, opts);
}

VerdictConfig verdict_config(const RunConfig& config) {
  VerdictConfig v;
  v.horizon = config.horizon;
  v.growth_window = config.growth_window;
  return v;
}

Word require_word(const RunConfig& config, const AlphabetPtr& alphabet) {
  if (!config.word) throw PreconditionError("--word is required");
  return Word::parse(alphabet, *config.word);
}

// Alphabet for a bare word: its sorted distinct symbols, "01" for ε.
AlphabetPtr alphabet_of(const std::string& text) {
  std::set<char> symbols(text.begin(), text.end());
  if (symbols.empty()) return make_alphabet("01");
  return make_alphabet(std::string(symbols.begin(), symbols.end()));
}

std::vector<Word> targets(const LanguageSnapshot& lang, const RunConfig& config) {
  if (config.word) {
    Word w = Word::parse(lang.alphabet(), *config.word);
    if (w.size() + 2 > lang.n_max() || !lang.contains(w))
      throw NotInLanguage("'" + w.str() + "' is not a factor within n_max - 2");
    return {w};
  }
  std::vector<Word> out;
  for (std::size_t n = 0; n + 2 <= lang.n_max(); ++n)
    for (const Word& w : lang.factors(n)) out.push_back(w);
  return out;
}

std::vector<OutputFile> graph_files(const LanguageSnapshot& lang, const Word& w, bool reversal_closed,
                                    const std::string& dir, Json* report) {
  std::vector<OutputFile> files;
  const std::string prefix = dir.empty() ? "" : dir + "/";
  ExtensionGraph gamma = gamma_graph(lang, w);
  files.push_back({prefix + graph_name(gamma) + ".dot", to_dot(gamma)});
  Json gj = graph_json(gamma);
  gj["file"] = files.back().path;
  Json tj;
  if (is_palindrome(w) && reversal_closed) {
    ExtensionGraph theta = theta_graph(lang, w, true);
    files.push_back({prefix + graph_name(theta) + ".dot", to_dot(theta)});
    tj = graph_json(theta);
    tj["file"] = files.back().path;
  }
  if (report) {
    (*report)["gamma"] = gj;
    (*report)["theta"] = tj;
  }
  return files;
}

// ---------------------------------------------------------------------------

Outcome verify_eq1(const RunConfig& config) {
  const Morphism m = require_morphism(config);
  const LanguageSnapshot lang = snapshot(m, config);
  std::vector<std::size_t> ns;
  if (config.n) {
    if (*config.n + 2 > lang.n_max()) throw NotInLanguage("n must be at most n_max - 2");
    ns.push_back(*config.n);
  } else {
    for (std::size_t n = 0; n + 2 <= lang.n_max(); ++n) ns.push_back(n);
  }
  Outcome o;
  Json rows = Json::array();
  bool ok = true;
  for (std::size_t n : ns) {
    Eq1Report r = check_eq1(lang, n);
    rows.push_back(Json{{"n", n}, {"lhs", r.second_difference}, {"rhs", r.multiplicity_sum}, {"holds", r.holds}});
    if (!r.holds) {
      ok = false;
      o.witnesses.push_back(rows.back());
    }
  }
  o.report = Json{{"suite", "eq1"}, {"morphism", m.str()}, {"rows", rows}};
  o.verdict = ok ? "pass" : "fail";
  o.exit_code = ok ? exit_code::kOk : exit_code::kFailed;
  return o;
}

Outcome verify_lemmas(const RunConfig& config, bool theta) {
  const Morphism m = require_morphism(config);
  const LanguageSnapshot lang = snapshot(m, config);
  const bool closed = is_closed_under_reversal(lang);
  std::map<std::string, std::size_t> counts;
  for (LemmaOutcome k : {LemmaOutcome::Satisfied, LemmaOutcome::HypothesisUnmet, LemmaOutcome::Violated,
                         LemmaOutcome::NotApplicable})
    counts[std::string(to_string(k))] = 0;
  Outcome o;
  for (const Word& w : targets(lang, config)) {
    MultiplicityLemmaReport r = check_multiplicity_lemmas(lang, w, closed);
    const LemmaOutcome k = theta ? r.theta_lemma : r.gamma_lemma;
    const bool identity = theta ? r.theta_identity : r.gamma_identity;
    ++counts[std::string(to_string(k))];
    if (k == LemmaOutcome::Violated || !identity) {
      o.witnesses.push_back(Json{{"word", w.str()},
                                 {"multiplicity", r.multiplicity},
                                 {"symmetric_minus_one", r.symmetric_minus_one},
                                 {"outcome", std::string(to_string(k))},
                                 {"identity", identity}});
    }
  }
  Json c = Json::object();
  for (const auto& [k, v] : counts) c[k] = v;
  o.report = Json{{"suite", theta ? "lemma44" : "lemma42"},
                  {"morphism", m.str()},
                  {"reversal_closed", closed},
                  {"outcomes", c}};
  o.verdict = o.witnesses.empty() ? "pass" : "fail";
  o.exit_code = o.witnesses.empty() ? exit_code::kOk : exit_code::kFailed;
  return o;
}

Json threshold_json(const std::optional<std::size_t>& t) { return t ? Json(*t) : Json(); }

Outcome verify_prop54(const RunConfig& config) {
  const Morphism m = require_morphism(config);
  const LanguageSnapshot lang = snapshot(m, config);
  Prop54Report r = prop54_check(lang, config.threshold.value_or(lang.n_max() - 2));
  Outcome o;
  Json rows = Json::array();
  for (const Prop54Row& row : r.rows) {
    Json j{{"n", row.n},
           {"second_difference", row.second_difference},
           {"palindromic_difference", row.palindromic_difference},
           {"holds", row.second_difference == row.palindromic_difference}};
    if (!j["holds"].get<bool>()) o.witnesses.push_back(j);
    rows.push_back(j);
  }
  o.report = Json{{"suite", "prop54"},
                  {"morphism", m.str()},
                  {"threshold", r.requested_threshold},
                  {"smallest_threshold", threshold_json(r.smallest_threshold)},
                  {"rows", rows}};
  o.verdict = r.pass ? "pass" : "fail";
  o.exit_code = r.pass ? exit_code::kOk : exit_code::kFailed;
  return o;
}

Outcome verify_thm55(const RunConfig& config) {
  const Morphism m = require_morphism(config);
  const LanguageSnapshot lang = snapshot(m, config);
  if (!is_closed_under_reversal(lang)) throw PreconditionError("language is not closed under reversal");
  ShapeCheckReport r = finite_defect_shape_check(lang, config.threshold.value_or(lang.n_max() - 2));
  Outcome o;
  for (const ShapeFailure& f : r.failures) {
    o.witnesses.push_back(Json{{"word", f.word.str()},
                               {"palindrome", f.palindrome},
                               {"multiplicity", f.multiplicity},
                               {"symmetric_minus_one", f.symmetric_minus_one},
                               {"graph", classification_json(f.graph)}});
  }
  o.report = Json{{"suite", "thm55"},
                  {"morphism", m.str()},
                  {"threshold", r.requested_threshold},
                  {"smallest_threshold", threshold_json(r.smallest_threshold)},
                  {"failure_count", r.failures.size()}};
  o.verdict = r.pass ? "pass" : "fail";
  o.exit_code = r.pass ? exit_code::kOk : exit_code::kFailed;
  return o;
}

// A witness search is consistent with the defect verdict when it finds a
// witness exactly when the defect is not verdicted zero.
Outcome witness_outcome(const std::string& suite, const Morphism& m, const RunConfig& config,
                        const WitnessReport& w) {
  const DefectVerdict v = defect_verdict(m, resolve_seed(m, config), verdict_config(config));
  const bool zero = v.kind == DefectKind::Stable && v.value == 0;
  const bool found = w.outcome == WitnessOutcome::Found;
  const bool consistent = w.outcome != WitnessOutcome::HypothesisFails && found != zero && (!found || w.reverified);
  Outcome o;
  if (found) o.witnesses.push_back(witness_json(w));
  o.report = Json{{"suite", suite}, {"morphism", m.str()}, {"search", witness_json(w)}, {"defect", verdict_json(v)}};
  o.verdict = consistent ? "pass" : "fail";
  o.exit_code = consistent ? exit_code::kOk : exit_code::kFailed;
  return o;
}

Outcome verify_lemma61(const RunConfig& config) {
  const Morphism m = require_morphism(config);
  const LanguageSnapshot lang = snapshot(m, config);
  return witness_outcome("lemma61", m, config, binary_witness(lang));
}

Outcome verify_thm72(const RunConfig& config) {
  const Morphism m = require_morphism(config);
  const LanguageSnapshot lang = snapshot(m, config);
  CycleWitnessOptions opts;
  opts.horizon = std::min<std::size_t>(config.horizon, 20000);
  return witness_outcome("thm72", m, config, cycle_witness(lang, opts));
}

Json property_json(const PropertyResult& p) {
  return Json{{"name", p.name},
              {"checked", p.checked},
              {"failed", p.failed},
              {"witness", p.witness ? Json(p.witness->str()) : Json()}};
}

Outcome verify_phi(const RunConfig& config) {
  const Morphism m = require_morphism(config);
  PhiSuiteOptions opts;
  opts.n_max = config.n_max;
  opts.horizon = std::min<std::size_t>(config.horizon, 20000);
  PhiSuiteReport r = phi_property_suite(m, config.sample, opts);
  Outcome o;
  Json props = Json::array();
  for (const PropertyResult& p : r.properties) {
    props.push_back(property_json(p));
    if (!p.passed()) o.witnesses.push_back(props.back());
  }
  o.report = Json{{"suite", "phi"},
                  {"morphism", m.str()},
                  {"exponent", r.exponent},
                  {"power", r.power},
                  {"conjugacy_word", r.conjugacy_word.str()},
                  {"conjugacy_word_palindrome", r.conjugacy_word_palindrome},
                  {"images_mirrored", r.images_mirrored},
                  {"left_route_agrees", r.left_route_agrees},
                  {"sample", r.sample},
                  {"properties", props}};
  o.verdict = r.passed() ? "pass" : "fail";
  o.exit_code = r.passed() ? exit_code::kOk : exit_code::kFailed;
  return o;
}

Outcome verify_audit(const RunConfig& config) {
  const Morphism m = require_morphism(config);
  AuditOptions opts;
  opts.verdict = verdict_config(config);
  opts.return_horizon = std::min<std::size_t>(config.horizon, 20000);
  AuditReport r = main_theorem_audit(m, opts);
  Outcome o;
  o.report = Json{{"suite", "audit"}, {"audit", audit_json(r)}};
  if (!r.consistent()) o.witnesses.push_back(Json{{"morphism", r.morphism}, {"notes", r.notes}});
  o.verdict = r.consistent() ? "consistent" : "inconsistent";
  o.exit_code = r.consistent() ? exit_code::kOk : exit_code::kFailed;
  return o;
}

Json decomposition_json(const DecompositionReport& r) {
  Json cps = Json::array();
  for (auto [n, d] : r.v_defect_checkpoints) cps.push_back(Json{{"length", n}, {"defect", d}});
  return Json{{"prefix_length", r.prefix_length},
              {"prefix_match", r.prefix_match},
              {"first_mismatch", r.first_mismatch ? Json(*r.first_mismatch) : Json()},
              {"v_defect_checkpoints", cps},
              {"v_zero_defect", r.v_zero_defect},
              {"empty_maps_to_empty", r.empty_maps_to_empty}};
}

Outcome verify_section8(const RunConfig&) {
  DecompositionReport r = section8_decomposition_check();
  Outcome o;
  o.report = Json{{"suite", "section8"},
                  {"mu", section8_mu().str()},
                  {"pi", "a->a,p->abcacba"},
                  {"target", bucci_vaslet_morphism().str()},
                  {"decomposition", decomposition_json(r)}};
  if (!r.passed()) o.witnesses.push_back(o.report["decomposition"]);
  o.verdict = r.passed() ? "pass" : "fail";
  o.exit_code = r.passed() ? exit_code::kOk : exit_code::kFailed;
  return o;
}

// ---------------------------------------------------------------------------

struct CorpusRow {
  Json row;
  std::vector<OutputFile> files;
  bool match = false;
};

CorpusRow run_row(const CorpusEntry& entry, const RunConfig& config) {
  CorpusRow out;
  const Morphism m = parse_morphism(entry.morphism);
  const bool round_trip = format_morphism(parse_morphism(format_morphism(m))) == entry.morphism;

  AuditOptions opts;
  opts.verdict = verdict_config(config);
  opts.return_horizon = std::min<std::size_t>(config.horizon, 20000);
  const AuditReport audit = main_theorem_audit(m, opts);
  const DefectVerdict& v = *audit.defect;
  const bool periodic = audit.period.has_value();

  const CorpusExpectation& e = entry.expected;
  const bool verdict_match = v.kind == e.kind && (v.kind == DefectKind::Growing || v.value == e.value);
  out.match = round_trip && periodic == e.periodic && verdict_match && audit.marked == e.marked && audit.consistent();

  Json expected{{"periodic", e.periodic},
                {"verdict", e.kind == DefectKind::Stable ? "stable(" + std::to_string(e.value) + ")"
                            : e.kind == DefectKind::Growing ? std::string("growing")
                                                            : "periodic(" + std::to_string(e.value) + ")"},
                {"marked", e.marked}};
  Json observed{{"periodic", periodic}, {"verdict", verdict_label(v)}, {"marked", audit.marked}};

  const LanguageSnapshot lang = LanguageSnapshot::build(m, config.n_max);
  const bool closed = is_closed_under_reversal(lang);
  Json graphs = Json::array();
  std::vector<Word> sources{Word(m.alphabet())};
  for (std::size_t a = 0; a < m.alphabet_size(); ++a) sources.emplace_back(m.alphabet(), std::vector<Letter>{static_cast<Letter>(a)});
  for (const Word& w : sources) {
    Json g{{"word", w.str()}, {"multiplicity", extensions(lang, w).multiplicity}};
    auto files = graph_files(lang, w, closed, entry.id, &g);
    out.files.insert(out.files.end(), files.begin(), files.end());
    graphs.push_back(g);
  }

  out.row = Json{{"id", entry.id},
                 {"description", entry.description},
                 {"morphism", entry.morphism},
                 {"round_trip", round_trip},
                 {"expected", expected},
                 {"observed", observed},
                 {"defect", verdict_json(v)},
                 {"audit", audit_json(audit)},
                 {"reversal_closed", closed},
                 {"graphs", graphs}};
  if (entry.decomposition) {
    DecompositionReport d = section8_decomposition_check();
    out.row["decomposition"] = decomposition_json(d);
    out.match = out.match && d.passed();
  }
  out.row["match"] = out.match;
  return out;
}

}  // namespace

CommandResult cmd_defect(const RunConfig& config) {
  return guarded("defect", config, [&] {
    Outcome o;
    if (config.word) {
      AlphabetPtr alphabet = config.morphism ? parse_morphism(*config.morphism).alphabet() : alphabet_of(*config.word);
      const Word w = require_word(config, alphabet);
      const PalIndex idx = PalIndex::build(w);
      const DefectReport r = idx.defect_report();
      o.report = Json{{"word", w.str()},
                      {"alphabet", alphabet->symbols()},
                      {"length", r.word_length},
                      {"palindromic_factors", r.palindrome_count_including_empty},
                      {"defect", r.defect},
                      {"lacunas", r.lacunas},
                      {"palindromes", words_json(idx.palindromes())}};
      o.verdict = "defect(" + std::to_string(r.defect) + ")";
      return o;
    }
    const Morphism m = require_morphism(config);
    if (!is_primitive(m)) throw PreconditionError("morphism " + m.str() + " is not primitive");
    const Letter seed = resolve_seed(m, config);
    const DefectVerdict v = defect_verdict(m, seed, verdict_config(config));
    o.report = Json{{"morphism", m.str()}, {"seed", letter_str(m.alphabet(), seed)}, {"defect", verdict_json(v)}};
    o.verdict = verdict_label(v);
    return o;
  });
}

CommandResult cmd_graphs(const RunConfig& config) {
  return guarded("graphs", config, [&] {
    const Morphism m = require_morphism(config);
    const LanguageSnapshot lang = snapshot(m, config);
    const Word w = require_word(config, m.alphabet());
    if (w.size() + 2 > lang.n_max()) throw NotInLanguage("'" + w.str() + "' is longer than n_max - 2");
    if (!lang.contains(w)) throw NotInLanguage("'" + w.str() + "' is not a factor");
    const bool closed = is_closed_under_reversal(lang);
    const ExtensionData e = extensions(lang, w);
    const MultiplicityLemmaReport lemmas = check_multiplicity_lemmas(lang, w, closed);

    Outcome o;
    o.report = Json{{"morphism", m.str()},
                    {"word", w.str()},
                    {"palindrome", is_palindrome(w)},
                    {"reversal_closed", closed},
                    {"multiplicity", e.multiplicity},
                    {"extensions", extensions_json(e)}};
    o.files = graph_files(lang, w, closed, "", &o.report);
    o.report["lemmas"] = Json{{"gamma", std::string(to_string(lemmas.gamma_lemma))},
                              {"theta", std::string(to_string(lemmas.theta_lemma))},
                              {"gamma_identity", lemmas.gamma_identity},
                              {"theta_identity", lemmas.theta_identity}};
    o.verdict = "pass";
    return o;
  });
}

CommandResult cmd_verify(const RunConfig& config) {
  const auto& ids = suite_ids();
  if (std::find(ids.begin(), ids.end(), config.suite) == ids.end())
    return failure("verify", config, exit_code::kUsage, "usage_error", "unknown suite '" + config.suite + "'");
  return guarded("verify", config, [&] {
    const std::string& s = config.suite;
    if (s == "eq1") return verify_eq1(config);
    if (s == "lemma42") return verify_lemmas(config, false);
    if (s == "lemma44") return verify_lemmas(config, true);
    if (s == "prop54") return verify_prop54(config);
    if (s == "thm55") return verify_thm55(config);
    if (s == "lemma61") return verify_lemma61(config);
    if (s == "thm72") return verify_thm72(config);
    if (s == "phi") return verify_phi(config);
    if (s == "audit") return verify_audit(config);
    return verify_section8(config);
  });
}

CommandResult cmd_corpus(const RunConfig& config) {
  return guarded("corpus", config, [&] {
    const auto& table = corpus();
    std::vector<std::future<CorpusRow>> jobs;
    jobs.reserve(table.size());
    for (const CorpusEntry& entry : table)
      jobs.push_back(std::async(std::launch::async, [&entry, &config] { return run_row(entry, config); }));

    Outcome o;
    Json rows = Json::array();
    bool all = true;
    for (auto& job : jobs) {
      CorpusRow r = job.get();
      all = all && r.match;
      if (!r.match) o.witnesses.push_back(Json{{"id", r.row["id"]}, {"expected", r.row["expected"]},
                                               {"observed", r.row["observed"]}});
      rows.push_back(std::move(r.row));
      o.files.insert(o.files.end(), r.files.begin(), r.files.end());
    }
    o.report = Json{{"rows", rows}};
    o.verdict = all ? "pass" : "fail";
    o.exit_code = all ? exit_code::kOk : exit_code::kFailed;
    return o;
  });
}

void write_files(const CommandResult& result, const std::filesystem::path& dir) {
  for (const OutputFile& f : result.files) {
    const std::filesystem::path p = dir / f.path;
    std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << f.content;
  }
}

}  // namespace defectkit::cli
