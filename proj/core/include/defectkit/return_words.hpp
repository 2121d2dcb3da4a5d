#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "defectkit/word.hpp"

namespace defectkit {

/// Returns to a target inside a finite stream. A failing check is
/// conclusive; a passing one only means "no counterexample below the
/// horizon".
struct ReturnWordReport {
  Word target;
  std::size_t horizon = 0;
  WordSet returns;
  bool all_palindromic = true;
  /// Mirror variant only: occurrences of w and ~w alternate in the stream.
  bool occurrences_alternate = true;
  /// Start/end offsets of every return in the stream, in stream order.
  std::vector<std::pair<std::size_t, std::size_t>> spans;
};

/// One return per pair of consecutive occurrences of w. Throws
/// InsufficientHorizon if w occurs fewer than twice.
ReturnWordReport complete_return_words(const Word& stream, const Word& w);

/// Factors that start with w (or ~w), end with the other, and contain
/// neither in their interior. For palindromic w these are the complete
/// returns. Throws InsufficientHorizon if w and ~w occur fewer than twice
/// in total.
ReturnWordReport complete_mirror_returns(const Word& stream, const Word& w);

/// Occurrences of w and ~w alternate. Vacuously true for palindromes.
bool occurrences_alternate(const Word& stream, const Word& w);

struct StreamVerdict {
  bool pass = true;
  std::size_t horizon = 0;
  std::optional<Word> target;   // first failing target
  std::optional<Word> witness;  // its offending return
  std::string reason;
};

/// Every palindromic factor of length 1..max_len occurring at least twice
/// has only palindromic complete returns.
StreamVerdict zero_defect_via_returns(const Word& stream, std::size_t max_len);

/// Every factor of length 1..max_len has only palindromic mirror returns.
StreamVerdict mirror_returns_palindromic(const Word& stream, std::size_t max_len);

struct ThresholdScan {
  std::optional<std::size_t> threshold;  // smallest working K
  std::size_t horizon = 0;
  std::size_t max_len = 0;
  /// Per length 1..max_len: first factor failing alternation or mirror
  /// palindromicity, if any.
  std::vector<std::optional<Word>> failures;
};

/// Smallest K <= max_len such that every factor w of the stream with
/// K <= |w| <= max_len has alternating occurrences with ~w and only
/// palindromic mirror returns.
ThresholdScan finite_defect_threshold_scan(const Word& stream, std::size_t max_len);

}  // namespace defectkit
