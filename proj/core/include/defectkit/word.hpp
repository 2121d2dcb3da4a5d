#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace defectkit {

using Letter = std::uint8_t;

/// Ordered set of printable single-character symbols. Letter ids are the
/// positions in that order.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }

  char symbol(Letter id) const;
  std::optional<Letter> find(char symbol) const noexcept;
  /// Throws PreconditionError for a symbol outside the alphabet.
  Letter id(char symbol) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> ids_{};
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::string_view symbols);

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) noexcept;

/// Immutable finite word over a shared alphabet.
///
/// Ordering is shortlex (length first, then lexicographic by letter id), which
/// is the canonical order of every word set this library returns.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet, std::vector<Letter> letters = {});

  /// Parses printable symbols; throws PreconditionError on unknown symbols.
  static Word parse(AlphabetPtr alphabet, std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  std::span<const Letter> letters() const noexcept { return letters_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }

  /// Letters [pos, pos + len). Clamped to the word end.
  Word slice(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return slice(0, len); }
  Word suffix(std::size_t len) const;

  std::string str() const;

  Word& operator+=(const Word& other);
  Word& push_back(Letter letter);

  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.letters_ == b.letters_ && same_alphabet(a.alphabet_, b.alphabet_);
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

using WordSet = std::set<Word>;

/// Throws AlphabetMismatch when the two alphabets differ.
void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, std::string_view context);

Word reverse(const Word& w);
bool is_palindrome(const Word& w) noexcept;
bool is_palindrome(std::span<const Letter> letters) noexcept;

/// Distinct factors of length n; {ε} for n = 0, empty for n > |w|.
WordSet factors(const Word& w, std::size_t n);

/// All (possibly overlapping) occurrences of f in w, increasing.
/// Throws PreconditionError for an empty f.
std::vector<std::size_t> occurrences(const Word& w, const Word& f);

/// True iff f occurs in w at position i.
bool occurs_at(const Word& w, const Word& f, std::size_t i) noexcept;

/// True iff f is a factor of w. The empty word is a factor of every word.
bool is_factor(const Word& w, const Word& f);

inline constexpr std::size_t kBruteOracleBound = 2000;

/// Every non-empty palindromic factor, by exhaustive enumeration. Quadratic;
/// intended as an oracle for PalIndex.
WordSet brute_distinct_palindromes(const Word& w, std::size_t bound = kBruteOracleBound);

}  // namespace defectkit

template <>
struct std::hash<defectkit::Word> {
  std::size_t operator()(const defectkit::Word& w) const noexcept;
};
