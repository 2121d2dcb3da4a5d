#include "defectkit/word.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>

#include "defectkit/errors.hpp"

namespace defectkit {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) throw PreconditionError("alphabet must contain at least one symbol");
  if (symbols_.size() > 256) throw PreconditionError("alphabet larger than 256 symbols");
  ids_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto c = static_cast<unsigned char>(symbols_[i]);
    if (!std::isprint(c) || std::isspace(c)) {
      throw PreconditionError("alphabet symbol at index " + std::to_string(i) + " is not printable");
    }
    if (ids_[c] >= 0) {
      throw PreconditionError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    }
    ids_[c] = static_cast<std::int16_t>(i);
  }
}

char Alphabet::symbol(Letter id) const {
  if (id >= symbols_.size()) throw PreconditionError("letter id out of alphabet range");
  return symbols_[id];
}

std::optional<Letter> Alphabet::find(char symbol) const noexcept {
  const auto id = ids_[static_cast<unsigned char>(symbol)];
  if (id < 0) return std::nullopt;
  return static_cast<Letter>(id);
}

Letter Alphabet::id(char symbol) const {
  if (auto found = find(symbol)) return *found;
  throw PreconditionError(std::string("symbol '") + symbol + "' not in alphabet {" + symbols_ + "}");
}

AlphabetPtr make_alphabet(std::string_view symbols) {
  return std::make_shared<const Alphabet>(symbols);
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, std::string_view context) {
  if (!same_alphabet(a, b)) {
    throw AlphabetMismatch(std::string(context) + ": alphabets {" + (a ? a->symbols() : "") +
                           "} and {" + (b ? b->symbols() : "") + "} differ");
  }
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw PreconditionError("word requires an alphabet");
  const auto k = alphabet_->size();
  for (Letter l : letters_) {
    if (l >= k) throw PreconditionError("letter id out of alphabet range");
  }
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(alphabet->id(c));
  return Word(std::move(alphabet), std::move(letters));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return Word(alphabet_, std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                             letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::suffix(std::size_t len) const {
  len = std::min(len, letters_.size());
  return slice(letters_.size() - len, len);
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(alphabet_->symbols()[l]);
  return out;
}

Word& Word::operator+=(const Word& other) {
  require_same_alphabet(alphabet_, other.alphabet_, "concatenation");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word& Word::push_back(Letter letter) {
  if (letter >= alphabet_->size()) throw PreconditionError("letter id out of alphabet range");
  letters_.push_back(letter);
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
  if (same_alphabet(a.alphabet_, b.alphabet_)) return std::strong_ordering::equal;
  return a.alphabet_->symbols() <=> b.alphabet_->symbols();
}

Word reverse(const Word& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return Word(w.alphabet(), std::move(letters));
}

bool is_palindrome(std::span<const Letter> letters) noexcept {
  return std::equal(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(letters.size() / 2),
                    letters.rbegin());
}

bool is_palindrome(const Word& w) noexcept { return is_palindrome(w.letters()); }

WordSet factors(const Word& w, std::size_t n) {
  WordSet out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.slice(i, n));
  return out;
}

bool occurs_at(const Word& w, const Word& f, std::size_t i) noexcept {
  if (i + f.size() > w.size()) return false;
  const auto hay = w.letters();
  const auto needle = f.letters();
  return std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<std::ptrdiff_t>(i));
}

std::vector<std::size_t> occurrences(const Word& w, const Word& f) {
  if (f.empty()) throw PreconditionError("occurrences of the empty word are not defined");
  require_same_alphabet(w.alphabet(), f.alphabet(), "occurrences");
  std::vector<std::size_t> out;
  const auto hay = w.letters();
  const auto needle = f.letters();
  const std::boyer_moore_horspool_searcher searcher(needle.begin(), needle.end());
  auto it = hay.begin();
  while (true) {
    auto hit = std::search(it, hay.end(), searcher);
    if (hit == hay.end()) break;
    out.push_back(static_cast<std::size_t>(hit - hay.begin()));
    it = hit + 1;
  }
  return out;
}

bool is_factor(const Word& w, const Word& f) {
  require_same_alphabet(w.alphabet(), f.alphabet(), "is_factor");
  if (f.empty()) return true;
  const auto hay = w.letters();
  const auto needle = f.letters();
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

WordSet brute_distinct_palindromes(const Word& w, std::size_t bound) {
  if (w.size() > bound) {
    throw PreconditionError("brute palindrome oracle limited to length " + std::to_string(bound));
  }
  // Every palindromic occurrence is reached by expanding around its centre:
  // 2|w| - 1 centres, each expanded until the first mismatch.
  WordSet out;
  const auto letters = w.letters();
  const auto n = static_cast<std::ptrdiff_t>(letters.size());
  for (std::ptrdiff_t centre = 0; centre < 2 * n - 1; ++centre) {
    std::ptrdiff_t lo = centre / 2;
    std::ptrdiff_t hi = lo + centre % 2;
    while (lo >= 0 && hi < n && letters[static_cast<std::size_t>(lo)] == letters[static_cast<std::size_t>(hi)]) {
      out.insert(w.slice(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi - lo + 1)));
      --lo;
      ++hi;
    }
  }
  return out;
}

}  // namespace defectkit

std::size_t std::hash<defectkit::Word>::operator()(const defectkit::Word& w) const noexcept {
  // FNV-1a over the letter ids.
  std::size_t h = 1469598103934665603ULL;
  for (auto l : w.letters()) {
    h ^= l;
    h *= 1099511628211ULL;
  }
  return h ^ w.size();
}
