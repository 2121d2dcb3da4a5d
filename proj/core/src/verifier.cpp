#include "defectkit/verifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "defectkit/errors.hpp"
#include "defectkit/pal_index.hpp"

namespace defectkit {

std::string_view to_string(DefectKind kind) noexcept {
  switch (kind) {
    case DefectKind::Stable: return "stable";
    case DefectKind::Growing: return "growing";
    case DefectKind::PeriodicDetected: return "periodic";
  }
  return "?";
}

std::string_view to_string(WitnessOutcome outcome) noexcept {
  switch (outcome) {
    case WitnessOutcome::Found: return "found";
    case WitnessOutcome::NotFoundWithinBound: return "not_found_within_bound";
    case WitnessOutcome::HypothesisFails: return "hypothesis_fails";
  }
  return "?";
}

std::string_view to_string(AuditStatus status) noexcept {
  switch (status) {
    case AuditStatus::Consistent: return "consistent";
    case AuditStatus::Inconsistent: return "inconsistent";
    case AuditStatus::Silent: return "silent";
  }
  return "?";
}

std::vector<std::size_t> doubling_checkpoints(std::size_t first, std::size_t horizon) {
  if (first == 0) throw PreconditionError("checkpoints: first checkpoint must be positive");
  std::vector<std::size_t> out;
  for (std::size_t n = first; n < horizon; n *= 2) out.push_back(n);
  out.push_back(horizon);
  return out;
}

Letter default_seed(const Morphism& m) {
  auto seeds = m.growing_fixed_point_letters();
  if (seeds.empty()) throw PreconditionError("morphism " + m.str() + " has no growing fixed-point letter");
  return seeds.front();
}

namespace {

// Smallest power of m with a growing fixed-point letter; the language of a
// primitive morphism does not change under powers.
Morphism with_fixed_point(const Morphism& m) {
  Morphism p = m;
  for (std::size_t k = 1; k <= 64; ++k) {
    if (!p.growing_fixed_point_letters().empty()) return p;
    p = p.compose(m);
  }
  throw SearchBoundExceeded("no power of " + m.str() + " up to 64 has a growing fixed point");
}

std::optional<std::size_t> smallest_period(std::span<const Letter> s, std::size_t bound) {
  for (std::size_t p = 1; p <= bound && p < s.size(); ++p) {
    bool ok = true;
    for (std::size_t i = p; i < s.size() && ok; ++i) ok = s[i] == s[i - p];
    if (ok) return p;
  }
  return std::nullopt;
}

Word concat(Letter a, const Word& w, Letter b) {
  Word out(w.alphabet(), {a});
  out += w;
  out.push_back(b);
  return out;
}

// Independent cycle test straight from membership queries, used to recheck
// search results: a graph has a cycle iff |edges| > |vertices| - components.
bool raw_graph_has_cycle(const LanguageSnapshot& lang, const Word& q, GraphKind kind) {
  const std::size_t k = lang.alphabet()->size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::size_t> vertices;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!lang.contains(concat(static_cast<Letter>(a), q, static_cast<Letter>(b)))) continue;
      if (kind == GraphKind::Gamma) {
        vertices.insert(a);
        vertices.insert(k + b);
        edges.emplace_back(a, k + b);
      } else {
        vertices.insert(a);
        vertices.insert(b);
        if (a < b) edges.emplace_back(a, b);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<std::size_t> seen;
  std::size_t components = 0;
  for (std::size_t v : vertices) {
    if (seen.contains(v)) continue;
    ++components;
    std::vector<std::size_t> stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : adj[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return edges.size() + components > vertices.size();
}

bool in_stream(const Word& stream, const Word& w) { return w.empty() || is_factor(stream, w); }

// Left and right extension letters of w within a stream.
std::pair<std::size_t, std::size_t> stream_extension_counts(const Word& stream, const Word& w) {
  std::set<Letter> left, right;
  if (w.empty()) {
    // every letter both precedes and follows the empty word
    std::set<Letter> letters(stream.letters().begin(), stream.letters().end());
    return {letters.size(), letters.size()};
  }
  for (std::size_t i : occurrences(stream, w)) {
    if (i > 0) left.insert(stream[i - 1]);
    if (i + w.size() < stream.size()) right.insert(stream[i + w.size()]);
  }
  return {left.size(), right.size()};
}

}  // namespace

std::optional<std::size_t> periodicity_heuristic(const Morphism& m, Letter seed, std::size_t bound) {
  if (bound == 0) return std::nullopt;
  Word prefix = fixed_point_prefix(m, seed, 4 * bound);
  return smallest_period(prefix.letters(), bound);
}

DefectVerdict defect_verdict(const Morphism& m, Letter seed, const VerdictConfig& config) {
  if (config.growth_window < 2) throw PreconditionError("defect verdict: growth window must be at least 2");
  if (config.horizon == 0) throw PreconditionError("defect verdict: horizon must be positive");
  DefectVerdict v;
  v.growth_window = config.growth_window;
  v.period_bound = config.period_bound;
  v.checkpoints = defect_stream(m, seed, doubling_checkpoints(config.first_checkpoint, config.horizon));
  v.period = periodicity_heuristic(m, seed, config.period_bound);

  const auto& cps = v.checkpoints;
  if (cps.size() >= config.growth_window) {
    const std::size_t d = cps.back().second;
    bool stable = std::all_of(cps.end() - static_cast<std::ptrdiff_t>(config.growth_window), cps.end(),
                              [d](const auto& c) { return c.second == d; });
    if (stable) {
      v.kind = DefectKind::Stable;
      v.value = d;
      return v;
    }
  }
  if (v.period) {
    v.kind = DefectKind::PeriodicDetected;
    v.value = *v.period;
  } else {
    v.kind = DefectKind::Growing;
  }
  return v;
}

WitnessReport binary_witness(const LanguageSnapshot& lang) {
  if (lang.alphabet()->size() != 2) throw PreconditionError("binary witness: alphabet is not binary");
  WitnessReport r;
  r.statement = "lemma61";
  r.graph = GraphKind::Gamma;
  r.search_bound = lang.n_max() >= 2 ? lang.n_max() - 2 : 0;
  if (!is_closed_under_reversal(lang)) {
    r.outcome = WitnessOutcome::HypothesisFails;
    r.note = "language not closed under reversal";
    return r;
  }
  for (std::size_t n = 0; n <= r.search_bound && !r.witness; ++n) {
    for (const Word& q : lang.factors(n)) {
      if (is_palindrome(q)) continue;
      if (extensions(lang, q).both.size() == 4) {
        r.witness = q;
        break;
      }
    }
  }
  if (!r.witness) return r;
  r.outcome = WitnessOutcome::Found;
  r.reverified = true;
  for (Letter a : {Letter{0}, Letter{1}})
    for (Letter b : {Letter{0}, Letter{1}}) r.reverified = r.reverified && lang.contains(concat(a, *r.witness, b));
  r.reverified = r.reverified && !is_palindrome(*r.witness);
  return r;
}

LetterReturnCheck letter_return_check(const Word& stream) {
  LetterReturnCheck out;
  out.horizon = stream.size();
  if (!stream.alphabet()) return out;
  for (std::size_t a = 0; a < stream.alphabet()->size(); ++a) {
    Word target(stream.alphabet(), {static_cast<Letter>(a)});
    if (occurrences(stream, target).size() < 2) continue;
    for (const Word& r : complete_return_words(stream, target).returns) {
      if (!is_palindrome(r)) {
        out.fired = true;
        out.letter = static_cast<Letter>(a);
        out.return_word = r;
        return out;
      }
    }
  }
  return out;
}

WitnessReport cycle_witness(const LanguageSnapshot& lang, const CycleWitnessOptions& options) {
  WitnessReport r;
  r.statement = "thm72";
  r.search_bound = lang.n_max() >= 2 ? lang.n_max() - 2 : 0;
  if (!is_closed_under_reversal(lang)) {
    r.outcome = WitnessOutcome::HypothesisFails;
    r.note = "language not closed under reversal";
    return r;
  }
  for (std::size_t n = options.min_length; n <= r.search_bound; ++n) {
    for (const Word& q : lang.factors(n)) {
      const bool pal = is_palindrome(q);
      const bool gamma_cycle = classify(gamma_graph(lang, q)).has_cycle;
      if (!pal) {
        if (gamma_cycle) r.all_witnesses.push_back(q);
        continue;
      }
      if (classify(theta_graph(lang, q, true)).has_cycle) {
        r.all_witnesses.push_back(q);
      } else if (gamma_cycle) {
        r.gamma_cycle_palindromes.push_back(q);
      }
    }
  }
  if (r.all_witnesses.empty()) {
    if (!r.gamma_cycle_palindromes.empty())
      r.note = "palindromes with a cycle in the bipartite graph but a tree in the palindromic graph exist";
    return r;
  }
  const Word& q = r.all_witnesses.front();
  r.outcome = WitnessOutcome::Found;
  r.witness = q;
  r.graph = is_palindrome(q) ? GraphKind::Theta : GraphKind::Gamma;
  r.reverified = lang.contains(q) && raw_graph_has_cycle(lang, q, *r.graph);
  if (q.empty()) {
    r.letter_returns = letter_return_check(lang.prefix(options.horizon));
    if (r.all_witnesses.size() == 1) r.note = "only the empty word qualifies within the bound";
  }
  return r;
}

ShapeCheckReport finite_defect_shape_check(const LanguageSnapshot& lang, std::size_t threshold) {
  if (!is_closed_under_reversal(lang)) throw PreconditionError("shape check: language not closed under reversal");
  ShapeCheckReport r;
  r.requested_threshold = threshold;
  r.n_max = lang.n_max();
  if (lang.n_max() < 2) {
    r.smallest_threshold = 0;
    r.pass = true;
    return r;
  }
  const std::size_t top = lang.n_max() - 2;
  std::optional<std::size_t> last_failing;
  for (std::size_t n = 0; n <= top; ++n) {
    for (const Word& w : lang.factors(n)) {
      ExtensionData e = extensions(lang, w);
      const bool pal = is_palindrome(w);
      const long sym = static_cast<long>(e.symmetric.size()) - 1;
      GraphClassification g = pal ? classify(theta_graph(lang, w, true)) : classify(gamma_graph(lang, w));
      const bool ok = g.is_tree && e.multiplicity == (pal ? sym : 0);
      if (ok) continue;
      r.failures.push_back({w, pal, e.multiplicity, sym, g});
      last_failing = n;
    }
  }
  r.smallest_threshold = last_failing ? *last_failing + 1 : 0;
  if (*r.smallest_threshold > top) r.smallest_threshold.reset();
  r.pass = r.smallest_threshold && *r.smallest_threshold <= threshold;
  return r;
}

Prop54Report prop54_check(const LanguageSnapshot& lang, std::size_t threshold) {
  Prop54Report r;
  r.requested_threshold = threshold;
  r.n_max = lang.n_max();
  if (lang.n_max() < 2) {
    r.smallest_threshold = 0;
    r.pass = true;
    return r;
  }
  const std::size_t top = lang.n_max() - 2;
  Complexities c = complexities(lang);
  auto C = [&](std::size_t n) { return static_cast<long>(c.factor[n]); };
  auto P = [&](std::size_t n) { return static_cast<long>(c.palindromic[n]); };
  for (std::size_t n = 0; n <= top; ++n) {
    Prop54Row row{n, C(n + 2) - 2 * C(n + 1) + C(n), P(n + 2) - P(n)};
    if (row.second_difference != row.palindromic_difference) r.failing_lengths.push_back(n);
    r.rows.push_back(row);
  }
  r.smallest_threshold = r.failing_lengths.empty() ? 0 : r.failing_lengths.back() + 1;
  if (*r.smallest_threshold > top) r.smallest_threshold.reset();
  r.pass = r.smallest_threshold && *r.smallest_threshold <= threshold;
  return r;
}

bool PhiSuiteReport::passed() const noexcept {
  return conjugacy_word_palindrome && images_mirrored && left_route_agrees &&
         std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

PhiSuiteReport phi_property_suite(const Morphism& m, std::size_t sample, const PhiSuiteOptions& options) {
  if (!is_primitive(m)) throw PreconditionError("phi suite: morphism is not primitive");
  MarkedProfile profile = marked_profile(m);
  if (!profile.is_marked) throw PreconditionError("phi suite: morphism " + m.str() + " is not marked");
  if (options.n_max < 2) throw PreconditionError("phi suite: n_max must be at least 2");

  WellMarkedPower wmp = well_marked_power(m);
  PhiMap phi(wmp.power);

  PhiSuiteReport r{.conjugacy_word = phi.conjugacy_word()};
  r.exponent = wmp.exponent;
  r.power = wmp.power.str();
  r.conjugacy_word_palindrome = is_palindrome(phi.conjugacy_word());
  r.images_mirrored = true;
  for (std::size_t a = 0; a < m.alphabet_size(); ++a) {
    const auto l = static_cast<Letter>(a);
    r.images_mirrored = r.images_mirrored && reverse(phi.rightmost().image(l)) == phi.leftmost().image(l);
  }
  r.sample = sample;
  r.horizon = options.horizon;
  r.properties = {PropertyResult{"factor_closure"}, PropertyResult{"reversal_equivariance"},
                  PropertyResult{"palindrome_preservation"}, PropertyResult{"extension_transport"},
                  PropertyResult{"bispecial_preservation"}};

  LanguageSnapshot lang = LanguageSnapshot::build(m, options.n_max);
  Morphism gen = with_fixed_point(m);
  const Word stream = fixed_point_prefix(gen, default_seed(gen), options.horizon);

  std::vector<Word> pool;
  for (std::size_t n = 0; n + 2 <= lang.n_max(); ++n)
    for (const Word& w : lang.factors(n)) pool.push_back(w);
  std::mt19937_64 rng(options.rng_seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

  auto record = [](PropertyResult& p, bool ok, const Word& u) {
    ++p.checked;
    if (ok) return;
    ++p.failed;
    if (!p.witness) p.witness = u;
  };

  r.left_route_agrees = true;
  for (std::size_t i = 0; i < sample; ++i) {
    const Word& u = pool[pick(rng)];
    const Word image = phi(u);
    r.left_route_agrees = r.left_route_agrees && image == phi.via_left(u);

    record(r.properties[0], in_stream(stream, image), u);
    record(r.properties[1], reverse(image) == phi(reverse(u)), u);
    record(r.properties[2], is_palindrome(u) == is_palindrome(image), u);

    ExtensionData e = extensions(lang, u);
    bool transported = true;
    for (auto [a, b] : e.both) transported = transported && in_stream(stream, concat(a, image, b));
    record(r.properties[3], transported, u);

    if (e.is_bispecial()) {
      auto [left, right] = stream_extension_counts(stream, image);
      record(r.properties[4], left >= 2 && right >= 2 && is_palindrome(image) == is_palindrome(u), u);
    }
  }
  return r;
}

AuditReport main_theorem_audit(const Morphism& m, const AuditOptions& options) {
  AuditReport r;
  r.morphism = m.str();
  r.binary = m.alphabet_size() == 2;
  r.primitive = is_primitive(m);
  if (!r.primitive) {
    r.notes.push_back("not primitive: no language snapshot or verdict");
    return r;
  }
  MarkedProfile profile = marked_profile(m);
  r.acyclic = profile.is_acyclic;
  r.marked = profile.is_marked;
  r.well_marked = profile.is_well_marked;

  auto fst = m.fst();
  auto lst = m.lst();
  r.nontrivial_conjugate = std::adjacent_find(fst.begin(), fst.end(), std::not_equal_to<>()) == fst.end() ||
                           std::adjacent_find(lst.begin(), lst.end(), std::not_equal_to<>()) == lst.end();

  Morphism gen = with_fixed_point(m);
  const Letter seed = default_seed(gen);
  r.defect = defect_verdict(gen, seed, options.verdict);
  r.period = r.defect->period;
  r.letter_returns = letter_return_check(fixed_point_prefix(gen, seed, options.return_horizon));
  r.letter_returns_palindromic = !r.letter_returns->fired;

  const DefectVerdict& v = *r.defect;
  const bool finite = v.kind == DefectKind::Stable;
  const bool zero = finite && v.value == 0;

  if (r.marked && (r.letter_returns_palindromic || r.nontrivial_conjugate)) {
    r.marked_theorem = (!finite || zero) ? AuditStatus::Consistent : AuditStatus::Inconsistent;
    r.notes.push_back(zero ? "hypotheses hold and the defect is zero"
                           : finite ? "hypotheses hold but the defect is positive"
                                    : "hypotheses hold; defect not finite within the horizon");
  } else {
    r.notes.push_back(r.marked ? "marked, but neither letter returns nor conjugates meet the hypothesis"
                               : "not marked: the marked-morphism statement is silent");
  }

  if (r.binary) {
    r.binary_theorem = (!finite || zero || r.period) ? AuditStatus::Consistent : AuditStatus::Inconsistent;
  }

  if (r.marked && r.period) {
    Word prefix = fixed_point_prefix(gen, seed, 4 * *r.period + 2);
    // A periodic word has infinitely many palindromes iff some palindrome
    // is at least two periods long.
    PalIndex idx = PalIndex::build(prefix);
    std::size_t longest = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i)
      longest = std::max(longest, idx.longest_palindromic_suffix_length(i));
    const bool palindromic = longest >= 2 * *r.period;
    if (!palindromic) {
      r.periodic_marked_screen = AuditStatus::Silent;
    } else {
      const bool alternating = r.binary && *r.period == 2 && prefix[0] != prefix[1];
      r.periodic_marked_screen = alternating ? AuditStatus::Consistent : AuditStatus::Inconsistent;
    }
  }
  return r;
}

Morphism bucci_vaslet_morphism() { return Morphism::from_strings("abc", {"aabcacba", "aa", "a"}); }

Morphism section8_mu() { return Morphism::from_strings("ap", {"ap", "apaaaapaaaap"}); }

Coding section8_pi() {
  AlphabetPtr src = make_alphabet("ap");
  AlphabetPtr dst = make_alphabet("abc");
  return Coding(src, dst, {Word::parse(dst, "a"), Word::parse(dst, "abcacba")});
}

DecompositionReport section8_decomposition_check(std::size_t prefix_length, std::size_t defect_horizon) {
  DecompositionReport r;
  r.prefix_length = prefix_length;
  const Morphism mu = section8_mu();
  const Coding pi = section8_pi();
  const Morphism bv = bucci_vaslet_morphism();

  // Each letter of v codes to at least one letter.
  Word v = fixed_point_prefix(mu, 0, std::max<std::size_t>(prefix_length, 2));
  Word coded = pi.apply(v).prefix(prefix_length);
  Word target = fixed_point_prefix(bv, 0, std::max<std::size_t>(prefix_length, 2)).prefix(prefix_length);
  auto [a, b] = std::mismatch(coded.letters().begin(), coded.letters().end(), target.letters().begin());
  r.prefix_match = coded.size() == target.size() && a == coded.letters().end();
  if (!r.prefix_match) r.first_mismatch = static_cast<std::size_t>(a - coded.letters().begin());

  r.v_defect_checkpoints = defect_stream(mu, 0, doubling_checkpoints(16, defect_horizon));
  r.v_zero_defect = std::all_of(r.v_defect_checkpoints.begin(), r.v_defect_checkpoints.end(),
                                [](const auto& c) { return c.second == 0; });
  r.empty_maps_to_empty = pi.apply(Word(pi.source())).empty();
  return r;
}

}  // namespace defectkit
