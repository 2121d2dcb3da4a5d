#include "defectkit/language.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "defectkit/errors.hpp"

namespace defectkit {

namespace {

using Window = std::vector<Letter>;

struct WindowHash {
  std::size_t operator()(const Window& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto l : w) {
      h ^= l;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

using WindowSet = std::unordered_set<Window, WindowHash>;

void add_windows(std::span<const Letter> text, std::size_t n, WindowSet& out) {
  if (text.size() < n) return;
  for (std::size_t i = 0; i + n <= text.size(); ++i) out.emplace(text.begin() + static_cast<std::ptrdiff_t>(i),
                                                                 text.begin() + static_cast<std::ptrdiff_t>(i + n));
}

std::vector<Letter> apply_letters(const Morphism& m, const Window& w) {
  std::vector<Letter> out;
  for (Letter a : w) {
    const auto img = m.image(a).letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

}  // namespace

LanguageSnapshot LanguageSnapshot::build(const Morphism& m, std::size_t n_max, const SnapshotOptions& options) {
  if (n_max < 1) throw PreconditionError("snapshot needs n_max >= 1");
  if (!is_primitive(m)) throw PreconditionError("language snapshot requires a primitive morphism: " + m.str());
  const auto growing = m.growing_fixed_point_letters();
  if (growing.empty()) throw PreconditionError("morphism " + m.str() + " has no growing fixed-point letter");
  Letter seed = growing.front();
  if (options.seed) {
    if (std::find(growing.begin(), growing.end(), *options.seed) == growing.end()) {
      throw PreconditionError("requested seed is not a growing fixed-point letter");
    }
    seed = *options.seed;
  }

  LanguageSnapshot snap(m, seed);
  const auto seed_prefix = fixed_point_prefix(m, seed, 2 * n_max);

  // Closure of the length-n_max windows, breadth first. round_of records the
  // round in which each window first appeared.
  std::map<Window, std::size_t> round_of;
  WindowSet frontier;
  add_windows(seed_prefix.letters(), n_max, frontier);
  for (const auto& w : frontier) round_of.emplace(w, 0);

  std::size_t round = 0;
  while (!frontier.empty()) {
    if (round >= options.iteration_cap) {
      throw SearchBoundExceeded("factor closure of " + m.str() + " not stable after " +
                                std::to_string(options.iteration_cap) + " rounds (n_max " +
                                std::to_string(n_max) + ")");
    }
    ++round;
    WindowSet produced;
    for (const auto& w : frontier) add_windows(apply_letters(m, w), n_max, produced);
    WindowSet fresh;
    for (auto& w : produced) {
      if (round_of.emplace(w, round).second) fresh.insert(w);
    }
    frontier = std::move(fresh);
  }
  snap.rounds_ = round;

  // Per-length sets, filled in round order so the last growth round of each
  // length is known.
  std::vector<std::pair<std::size_t, const Window*>> by_round;
  by_round.reserve(round_of.size());
  for (const auto& [w, r] : round_of) by_round.emplace_back(r, &w);
  std::stable_sort(by_round.begin(), by_round.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  snap.factors_.assign(n_max + 1, WordSet{});
  snap.stabilized_at_.assign(n_max + 1, 0);
  snap.factors_[0].insert(Word(m.alphabet()));
  for (const auto& [r, w] : by_round) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (std::size_t i = 0; i + n <= w->size(); ++i) {
        Word f(m.alphabet(), Window(w->begin() + static_cast<std::ptrdiff_t>(i),
                                    w->begin() + static_cast<std::ptrdiff_t>(i + n)));
        if (snap.factors_[n].insert(std::move(f)).second) snap.stabilized_at_[n] = r;
      }
    }
  }

  // Independent evidence: scan ever longer fixed-point prefixes until every
  // closure member has been seen, then make sure a prefix twice as long has
  // nothing the closure missed.
  WindowSet seen;
  std::size_t scanned = 0;
  std::size_t len = std::max<std::size_t>(64, 4 * n_max);
  Word stream = fixed_point_prefix(m, seed, len);
  while (true) {
    const auto letters = stream.letters();
    for (; scanned + n_max <= letters.size(); ++scanned) {
      seen.emplace(letters.begin() + static_cast<std::ptrdiff_t>(scanned),
                   letters.begin() + static_cast<std::ptrdiff_t>(scanned + n_max));
      if (seen.size() == round_of.size()) break;
    }
    if (seen.size() == round_of.size()) break;
    if (len >= options.witness_prefix_cap) {
      throw SearchBoundExceeded("factor closure of " + m.str() + " not witnessed within prefix length " +
                                std::to_string(options.witness_prefix_cap));
    }
    len = std::min(2 * len, options.witness_prefix_cap);
    stream = fixed_point_prefix(m, seed, len);
  }
  snap.witness_prefix_ = scanned + n_max;

  const auto check = fixed_point_prefix(m, seed, 2 * snap.witness_prefix_);
  WindowSet doubled;
  add_windows(check.letters(), n_max, doubled);
  for (const auto& w : doubled) {
    if (!round_of.contains(w)) {
      throw SearchBoundExceeded("factor closure of " + m.str() + " missed a window seen in the prefix");
    }
  }
  return snap;
}

const WordSet& LanguageSnapshot::factors(std::size_t n) const {
  if (n > n_max()) {
    throw NotInLanguage("length " + std::to_string(n) + " exceeds snapshot n_max " + std::to_string(n_max()));
  }
  return factors_[n];
}

bool LanguageSnapshot::contains(const Word& w) const {
  require_same_alphabet(alphabet(), w.alphabet(), "language membership");
  if (w.size() > n_max()) return false;
  return factors_[w.size()].contains(w);
}

ExtensionData extensions(const LanguageSnapshot& lang, const Word& w) {
  if (lang.n_max() < 2 || w.size() > lang.n_max() - 2) {
    throw NotInLanguage("'" + w.str() + "' is too long for two-sided extensions at n_max " +
                        std::to_string(lang.n_max()));
  }
  if (!lang.contains(w)) throw NotInLanguage("'" + w.str() + "' is not in the language");

  ExtensionData data{w, {}, {}, {}, {}, 0};
  const auto k = lang.alphabet()->size();
  const auto& alpha = lang.alphabet();
  for (std::size_t x = 0; x < k; ++x) {
    const auto a = static_cast<Letter>(x);
    Word one(alpha, {a});
    if (lang.contains(one + w)) data.left.push_back(a);
    if (lang.contains(w + one)) data.right.push_back(a);
  }
  for (Letter a : data.left) {
    for (Letter b : data.right) {
      Word aw(alpha, {a});
      aw += w;
      aw.push_back(b);
      if (lang.contains(aw)) {
        data.both.emplace_back(a, b);
        if (a == b) data.symmetric.push_back(a);
      }
    }
  }
  data.multiplicity = static_cast<long>(data.both.size()) - static_cast<long>(data.left.size()) -
                      static_cast<long>(data.right.size()) + 1;
  return data;
}

Complexities complexities(const LanguageSnapshot& lang) {
  Complexities out;
  for (std::size_t n = 0; n <= lang.n_max(); ++n) {
    const auto& set = lang.factors(n);
    out.factor.push_back(set.size());
    out.palindromic.push_back(static_cast<std::size_t>(
        std::count_if(set.begin(), set.end(), [](const Word& w) { return is_palindrome(w); })));
  }
  return out;
}

std::string_view to_string(BispecialKind kind) noexcept {
  switch (kind) {
    case BispecialKind::Strong:
      return "strong";
    case BispecialKind::Weak:
      return "weak";
    case BispecialKind::Neutral:
      return "neutral";
  }
  return "?";
}

std::vector<BispecialFactor> bispecial_factors(const LanguageSnapshot& lang, std::size_t n) {
  std::vector<BispecialFactor> out;
  for (const auto& w : lang.factors(n)) {
    auto ext = extensions(lang, w);
    if (!ext.is_bispecial()) continue;
    const auto kind = ext.multiplicity > 0   ? BispecialKind::Strong
                      : ext.multiplicity < 0 ? BispecialKind::Weak
                                             : BispecialKind::Neutral;
    out.push_back(BispecialFactor{w, ext.multiplicity, kind});
  }
  return out;
}

Eq1Report check_eq1(const LanguageSnapshot& lang, std::size_t n) {
  if (lang.n_max() < 2 || n > lang.n_max() - 2) {
    throw PreconditionError("check_eq1 needs n <= n_max - 2");
  }
  Eq1Report report;
  report.n = n;
  const auto c = [&](std::size_t len) { return static_cast<long>(lang.factors(len).size()); };
  report.second_difference = c(n + 2) - 2 * c(n + 1) + c(n);
  for (const auto& w : lang.factors(n)) report.multiplicity_sum += extensions(lang, w).multiplicity;
  report.holds = report.second_difference == report.multiplicity_sum;
  return report;
}

bool is_closed_under_reversal(const LanguageSnapshot& lang) {
  for (std::size_t n = 0; n <= lang.n_max(); ++n) {
    for (const auto& w : lang.factors(n)) {
      if (!lang.contains(reverse(w))) return false;
    }
  }
  return true;
}

}  // namespace defectkit
