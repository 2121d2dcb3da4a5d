#include "defectkit/return_words.hpp"

#include <algorithm>

#include "defectkit/errors.hpp"

namespace defectkit {

namespace {

// Occurrences of w and ~w merged in stream order, tagged true for ~w. For a
// palindrome only w is listed.
std::vector<std::pair<std::size_t, bool>> merged_occurrences(const Word& stream, const Word& w) {
  std::vector<std::pair<std::size_t, bool>> merged;
  for (auto i : occurrences(stream, w)) merged.emplace_back(i, false);
  if (!is_palindrome(w)) {
    for (auto i : occurrences(stream, reverse(w))) merged.emplace_back(i, true);
    std::sort(merged.begin(), merged.end());
  }
  return merged;
}

void check_target(const Word& stream, const Word& w) {
  if (w.empty()) throw PreconditionError("return words need a non-empty target");
  require_same_alphabet(stream.alphabet(), w.alphabet(), "return words");
}

}  // namespace

ReturnWordReport complete_return_words(const Word& stream, const Word& w) {
  check_target(stream, w);
  const auto occ = occurrences(stream, w);
  if (occ.size() < 2) {
    throw InsufficientHorizon("'" + w.str() + "' occurs " + std::to_string(occ.size()) +
                              " time(s) within horizon " + std::to_string(stream.size()));
  }
  ReturnWordReport report{w, stream.size(), {}, true, true, {}};
  for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
    const auto begin = occ[k];
    const auto end = occ[k + 1] + w.size();
    report.spans.emplace_back(begin, end);
    auto r = stream.slice(begin, end - begin);
    report.all_palindromic = report.all_palindromic && is_palindrome(r);
    report.returns.insert(std::move(r));
  }
  return report;
}

ReturnWordReport complete_mirror_returns(const Word& stream, const Word& w) {
  check_target(stream, w);
  const auto merged = merged_occurrences(stream, w);
  if (merged.size() < 2) {
    throw InsufficientHorizon("'" + w.str() + "' and its reversal occur " + std::to_string(merged.size()) +
                              " time(s) within horizon " + std::to_string(stream.size()));
  }
  const bool palindrome = is_palindrome(w);
  ReturnWordReport report{w, stream.size(), {}, true, true, {}};
  for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
    const auto& [begin, reversed_first] = merged[k];
    const auto& [next, reversed_second] = merged[k + 1];
    // Consecutive occurrences of the same orientation are not mirror
    // returns; they break alternation.
    if (!palindrome && reversed_first == reversed_second) {
      report.occurrences_alternate = false;
      continue;
    }
    const auto end = next + w.size();
    report.spans.emplace_back(begin, end);
    auto r = stream.slice(begin, end - begin);
    report.all_palindromic = report.all_palindromic && is_palindrome(r);
    report.returns.insert(std::move(r));
  }
  return report;
}

bool occurrences_alternate(const Word& stream, const Word& w) {
  check_target(stream, w);
  if (is_palindrome(w)) return true;
  const auto merged = merged_occurrences(stream, w);
  for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
    if (merged[k].second == merged[k + 1].second) return false;
  }
  return true;
}

StreamVerdict zero_defect_via_returns(const Word& stream, std::size_t max_len) {
  StreamVerdict verdict;
  verdict.horizon = stream.size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& w : factors(stream, len)) {
      if (!is_palindrome(w)) continue;
      if (occurrences(stream, w).size() < 2) continue;
      const auto report = complete_return_words(stream, w);
      if (report.all_palindromic) continue;
      verdict.pass = false;
      verdict.target = w;
      for (const auto& r : report.returns) {
        if (!is_palindrome(r)) {
          verdict.witness = r;
          break;
        }
      }
      verdict.reason = "non-palindromic complete return word";
      return verdict;
    }
  }
  return verdict;
}

StreamVerdict mirror_returns_palindromic(const Word& stream, std::size_t max_len) {
  StreamVerdict verdict;
  verdict.horizon = stream.size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& w : factors(stream, len)) {
      if (occurrences(stream, w).size() + (is_palindrome(w) ? 0 : occurrences(stream, reverse(w)).size()) < 2) {
        continue;
      }
      const auto report = complete_mirror_returns(stream, w);
      if (report.all_palindromic) continue;
      verdict.pass = false;
      verdict.target = w;
      for (const auto& r : report.returns) {
        if (!is_palindrome(r)) {
          verdict.witness = r;
          break;
        }
      }
      verdict.reason = "non-palindromic complete mirror return";
      return verdict;
    }
  }
  return verdict;
}

ThresholdScan finite_defect_threshold_scan(const Word& stream, std::size_t max_len) {
  ThresholdScan scan;
  scan.horizon = stream.size();
  scan.max_len = max_len;
  scan.failures.assign(max_len + 1, std::nullopt);
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& w : factors(stream, len)) {
      const auto merged = merged_occurrences(stream, w);
      if (merged.size() < 2) continue;
      const auto report = complete_mirror_returns(stream, w);
      if (!report.occurrences_alternate || !report.all_palindromic) {
        scan.failures[len] = w;
        break;
      }
    }
  }
  if (max_len == 0) return scan;
  std::optional<std::size_t> k;
  for (std::size_t len = max_len; len >= 1; --len) {
    if (scan.failures[len]) break;
    k = len;
  }
  scan.threshold = k;
  return scan;
}

}  // namespace defectkit
