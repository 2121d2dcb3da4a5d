#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "defectkit/morphism.hpp"
#include "defectkit/word.hpp"

namespace defectkit {

struct SnapshotOptions {
  /// Maximum refinement rounds before giving up.
  std::size_t iteration_cap = 30;
  /// Longest fixed-point prefix scanned to witness every factor.
  std::size_t witness_prefix_cap = std::size_t{1} << 22;
  /// Fixed-point letter to seed from; defaults to the first growing one.
  std::optional<Letter> seed;
};

/// All factors of length 0..n_max of the fixed point of a primitive
/// morphism.
///
/// Factors of length n_max are the closure of the seed prefix's windows
/// under "apply the morphism, re-cut windows". Shorter lengths are read off
/// those windows. The build also records how long a fixed-point prefix must
/// be to contain every member, and checks that twice that prefix yields
/// nothing outside the closure.
class LanguageSnapshot {
 public:
  static LanguageSnapshot build(const Morphism& m, std::size_t n_max, const SnapshotOptions& options = {});

  const Morphism& morphism() const noexcept { return morphism_; }
  const AlphabetPtr& alphabet() const noexcept { return morphism_.alphabet(); }
  std::size_t n_max() const noexcept { return factors_.size() - 1; }
  Letter seed() const noexcept { return seed_; }

  const WordSet& factors(std::size_t n) const;
  bool contains(const Word& w) const;

  /// Refinement rounds run until no new length-n_max factor appeared.
  std::size_t rounds() const noexcept { return rounds_; }
  /// For each length n, the last round in which factors(n) grew.
  const std::vector<std::size_t>& stabilization_rounds() const noexcept { return stabilized_at_; }
  /// Shortest fixed-point prefix containing every length-n_max factor.
  std::size_t witness_prefix_length() const noexcept { return witness_prefix_; }

  /// Fixed-point prefix used for stream-based checks.
  Word prefix(std::size_t len) const { return fixed_point_prefix(morphism_, seed_, len); }

 private:
  LanguageSnapshot(Morphism m, Letter seed) : morphism_(std::move(m)), seed_(seed) {}

  Morphism morphism_;
  Letter seed_;
  std::vector<WordSet> factors_;
  std::vector<std::size_t> stabilized_at_;
  std::size_t rounds_ = 0;
  std::size_t witness_prefix_ = 0;
};

/// Left, right, two-sided and symmetric extensions of one factor, with its
/// bilateral multiplicity.
struct ExtensionData {
  Word word;
  std::vector<Letter> left;
  std::vector<Letter> right;
  std::vector<std::pair<Letter, Letter>> both;
  std::vector<Letter> symmetric;
  long multiplicity = 0;

  bool is_bispecial() const noexcept { return left.size() >= 2 && right.size() >= 2; }
};

/// Throws NotInLanguage if w is not a factor or |w| > n_max - 2.
ExtensionData extensions(const LanguageSnapshot& lang, const Word& w);

struct Complexities {
  std::vector<std::size_t> factor;       // C(n)
  std::vector<std::size_t> palindromic;  // P(n)
};

Complexities complexities(const LanguageSnapshot& lang);

enum class BispecialKind { Strong, Weak, Neutral };

std::string_view to_string(BispecialKind kind) noexcept;

struct BispecialFactor {
  Word word;
  long multiplicity;
  BispecialKind kind;
};

/// Bispecial factors of length n, in shortlex order.
std::vector<BispecialFactor> bispecial_factors(const LanguageSnapshot& lang, std::size_t n);

/// C(n+2) - 2C(n+1) + C(n) against the sum of m(w) over |w| = n.
struct Eq1Report {
  std::size_t n = 0;
  long second_difference = 0;
  long multiplicity_sum = 0;
  bool holds = false;
};

Eq1Report check_eq1(const LanguageSnapshot& lang, std::size_t n);

bool is_closed_under_reversal(const LanguageSnapshot& lang);

}  // namespace defectkit
