#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "defectkit/extension_graph.hpp"
#include "defectkit/language.hpp"
#include "defectkit/morphism.hpp"
#include "defectkit/return_words.hpp"

namespace defectkit {

// ---------------------------------------------------------------------------
// Infinite-word defect verdicts
// ---------------------------------------------------------------------------

struct VerdictConfig {
  std::size_t horizon = 50000;
  std::size_t growth_window = 5;
  std::size_t first_checkpoint = 16;
  std::size_t period_bound = 512;
};

enum class DefectKind { Stable, Growing, PeriodicDetected };

std::string_view to_string(DefectKind kind) noexcept;

/// Heuristic classification of the defect of a fixed point from doubling
/// prefix checkpoints. Stable(d): the last `growth_window` checkpoints all
/// equal d. Otherwise PeriodicDetected(p) when the prefix has a short period,
/// else Growing. `period` is filled whenever a period was detected.
struct DefectVerdict {
  DefectKind kind = DefectKind::Growing;
  std::size_t value = 0;  // d for Stable, p for PeriodicDetected
  std::optional<std::size_t> period;
  std::vector<std::pair<std::size_t, std::size_t>> checkpoints;
  std::size_t growth_window = 0;
  std::size_t period_bound = 0;
};

/// first, 2·first, 4·first, ... below horizon, then horizon itself.
std::vector<std::size_t> doubling_checkpoints(std::size_t first, std::size_t horizon);

/// First growing fixed-point letter of m; throws PreconditionError if none.
Letter default_seed(const Morphism& m);

DefectVerdict defect_verdict(const Morphism& m, Letter seed, const VerdictConfig& config = {});

/// Smallest p <= bound such that the fixed-point prefix of length 4·bound
/// is p-periodic. Heuristic: a finite prefix cannot prove periodicity.
std::optional<std::size_t> periodicity_heuristic(const Morphism& m, Letter seed, std::size_t bound);

// ---------------------------------------------------------------------------
// Witness searches
// ---------------------------------------------------------------------------

enum class WitnessOutcome { Found, NotFoundWithinBound, HypothesisFails };

std::string_view to_string(WitnessOutcome outcome) noexcept;

struct LetterReturnCheck {
  bool fired = false;
  std::optional<Letter> letter;
  std::optional<Word> return_word;
  std::size_t horizon = 0;
};

struct WitnessReport {
  std::string statement;
  WitnessOutcome outcome = WitnessOutcome::NotFoundWithinBound;
  std::optional<Word> witness{};
  std::optional<GraphKind> graph;
  std::size_t search_bound = 0;
  /// The witness property was rechecked from raw membership queries.
  bool reverified = false;
  std::string note;

  // cycle_witness only
  std::vector<Word> all_witnesses;
  std::vector<Word> gamma_cycle_palindromes;
  std::optional<LetterReturnCheck> letter_returns;
};

/// Non-palindromic q with 0q0, 0q1, 1q0, 1q1 all in the language.
/// Throws PreconditionError on a non-binary alphabet.
WitnessReport binary_witness(const LanguageSnapshot& lang);

struct CycleWitnessOptions {
  std::size_t min_length = 0;
  /// Stream length for the letter-return supplement.
  std::size_t horizon = 20000;
};

/// Non-palindrome q with a cycle in Γ(q), or palindrome q with a cycle in
/// Θ(q), scanning by length then shortlex. When the first witness is ε the
/// letter-return supplement runs on a fixed-point prefix.
WitnessReport cycle_witness(const LanguageSnapshot& lang, const CycleWitnessOptions& options = {});

/// Letter with a non-palindromic complete return word in the stream.
LetterReturnCheck letter_return_check(const Word& stream);

// ---------------------------------------------------------------------------
// Finite-defect shape checks
// ---------------------------------------------------------------------------

struct ShapeFailure {
  Word word;
  bool palindrome = false;
  long multiplicity = 0;
  long symmetric_minus_one = 0;
  GraphClassification graph;
};

/// For each length n <= n_max - 2: non-palindromes need Γ(w) a tree and
/// m(w) = 0, palindromes need Θ(w) a tree and m(w) = #E⁼(w) - 1.
struct ShapeCheckReport {
  std::size_t requested_threshold = 0;
  std::size_t n_max = 0;
  std::optional<std::size_t> smallest_threshold;
  bool pass = false;
  std::vector<ShapeFailure> failures;
};

ShapeCheckReport finite_defect_shape_check(const LanguageSnapshot& lang, std::size_t threshold);

struct Prop54Row {
  std::size_t n;
  long second_difference;
  long palindromic_difference;  // P(n+2) - P(n)
};

/// Δ²C(n) = P(n+2) - P(n) for threshold <= n <= n_max - 2.
struct Prop54Report {
  std::size_t requested_threshold = 0;
  std::size_t n_max = 0;
  std::optional<std::size_t> smallest_threshold;
  bool pass = false;
  std::vector<Prop54Row> rows;
  std::vector<std::size_t> failing_lengths;
};

Prop54Report prop54_check(const LanguageSnapshot& lang, std::size_t threshold);

// ---------------------------------------------------------------------------
// Φ-map property suite
// ---------------------------------------------------------------------------

struct PhiSuiteOptions {
  std::size_t n_max = 12;
  std::size_t horizon = 20000;
  std::uint64_t rng_seed = 0x5eed;
};

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<Word> witness{};

  bool passed() const noexcept { return failed == 0; }
};

struct PhiSuiteReport {
  std::size_t exponent = 1;
  std::string power{};
  Word conjugacy_word;
  bool conjugacy_word_palindrome = false;
  bool images_mirrored = false;  // ~p_R(a) = p_L(a) for every a
  bool left_route_agrees = false;  // p_R(u)w = w p_L(u) on every sample
  std::size_t sample = 0;
  std::size_t horizon = 0;
  std::array<PropertyResult, 5> properties{};

  bool passed() const noexcept;
};

/// Lemma-style properties of Φ for the well-marked power of m, on `sample`
/// random factors. Throws PreconditionError if m is not marked.
PhiSuiteReport phi_property_suite(const Morphism& m, std::size_t sample, const PhiSuiteOptions& options = {});

// ---------------------------------------------------------------------------
// Hypothesis audit
// ---------------------------------------------------------------------------

enum class AuditStatus { Consistent, Inconsistent, Silent };

std::string_view to_string(AuditStatus status) noexcept;

struct AuditOptions {
  VerdictConfig verdict;
  std::size_t return_horizon = 20000;
};

struct AuditReport {
  std::string morphism;
  bool primitive = false;
  bool acyclic = false;
  bool marked = false;
  bool well_marked = false;
  std::optional<DefectVerdict> defect;
  std::optional<std::size_t> period;
  bool letter_returns_palindromic = false;
  std::optional<LetterReturnCheck> letter_returns;
  bool nontrivial_conjugate = false;
  bool binary = false;

  /// Marked-morphism theorem: hypotheses hold and the defect verdict agrees.
  AuditStatus marked_theorem = AuditStatus::Silent;
  /// Binary statement: finite defect means zero defect or periodic.
  AuditStatus binary_theorem = AuditStatus::Silent;
  /// Periodic palindromic marked fixed points must be (01)^ω or (10)^ω.
  AuditStatus periodic_marked_screen = AuditStatus::Silent;
  std::vector<std::string> notes;

  bool consistent() const noexcept {
    return marked_theorem != AuditStatus::Inconsistent && binary_theorem != AuditStatus::Inconsistent &&
           periodic_marked_screen != AuditStatus::Inconsistent;
  }
};

AuditReport main_theorem_audit(const Morphism& m, const AuditOptions& options = {});

// ---------------------------------------------------------------------------
// Coding decomposition of the ternary counterexample
// ---------------------------------------------------------------------------

Morphism bucci_vaslet_morphism();
/// a ↦ ap, p ↦ apaaaapaaaap.
Morphism section8_mu();
/// a ↦ a, p ↦ abcacba into the Bucci–Vaslet alphabet.
Coding section8_pi();

struct DecompositionReport {
  std::size_t prefix_length = 0;
  bool prefix_match = false;
  std::optional<std::size_t> first_mismatch;
  std::vector<std::pair<std::size_t, std::size_t>> v_defect_checkpoints;
  bool v_zero_defect = false;
  bool empty_maps_to_empty = false;

  bool passed() const noexcept { return prefix_match && v_zero_defect && empty_maps_to_empty; }
};

DecompositionReport section8_decomposition_check(std::size_t prefix_length = 500, std::size_t defect_horizon = 2000);

}  // namespace defectkit
