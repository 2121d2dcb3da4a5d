#include "defectkit/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "defectkit/errors.hpp"

namespace defectkit {

namespace {

std::vector<Letter> identity_map(std::size_t k) {
  std::vector<Letter> id(k);
  std::iota(id.begin(), id.end(), Letter{0});
  return id;
}

bool is_constant(const std::vector<Letter>& map) {
  return std::adjacent_find(map.begin(), map.end(), std::not_equal_to<>()) == map.end();
}

bool is_injective(const std::vector<Letter>& map) {
  std::set<Letter> seen(map.begin(), map.end());
  return seen.size() == map.size();
}

// Length of the shortest prefix of w whose power is w.
std::size_t primitive_root_length(std::span<const Letter> w) {
  const auto n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return p;
  }
  return n;
}

std::size_t permutation_order(const std::vector<Letter>& perm) {
  std::size_t order = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = perm[x]) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

enum class Side { Left, Right };

// Rotates the shared first (Left) or last (Right) letter of all images to
// the opposite end until that letter map is non-constant. Returns nullopt if
// a state repeats, which happens exactly for cyclic morphisms.
std::optional<std::pair<std::vector<std::vector<Letter>>, std::vector<Letter>>> rotate_until_distinct(
    const Morphism& m, Side side) {
  std::vector<std::vector<Letter>> images;
  for (const auto& img : m.images()) images.emplace_back(img.letters().begin(), img.letters().end());
  std::vector<Letter> moved;
  std::set<std::vector<std::vector<Letter>>> visited;

  const auto cap = m.total_image_length() + 1;
  for (std::size_t step = 0; step <= cap; ++step) {
    std::vector<Letter> ends;
    for (const auto& img : images) ends.push_back(side == Side::Left ? img.front() : img.back());
    if (!is_constant(ends)) return std::make_pair(std::move(images), std::move(moved));
    if (!visited.insert(images).second) return std::nullopt;
    const Letter x = ends.front();
    for (auto& img : images) {
      if (side == Side::Left) {
        std::rotate(img.begin(), img.begin() + 1, img.end());
      } else {
        std::rotate(img.rbegin(), img.rbegin() + 1, img.rend());
      }
    }
    moved.push_back(x);
  }
  // Rotation is periodic with period dividing lcm of image lengths; a state
  // must repeat before this point.
  throw SearchBoundExceeded("conjugate rotation did not terminate");
}

Morphism from_letter_images(const AlphabetPtr& alphabet, std::vector<std::vector<Letter>> images) {
  std::vector<Word> words;
  words.reserve(images.size());
  for (auto& img : images) words.emplace_back(alphabet, std::move(img));
  return Morphism(alphabet, std::move(words));
}

}  // namespace

Morphism::Morphism(AlphabetPtr alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (!alphabet_) throw PreconditionError("morphism requires an alphabet");
  if (images_.size() != alphabet_->size()) {
    throw PreconditionError("morphism needs exactly one image per letter");
  }
  for (std::size_t a = 0; a < images_.size(); ++a) {
    require_same_alphabet(alphabet_, images_[a].alphabet(), "morphism image");
    if (images_[a].empty()) {
      throw PreconditionError(std::string("erasing image for letter '") + alphabet_->symbols()[a] + "'");
    }
  }
}

Morphism Morphism::from_strings(std::string_view alphabet, const std::vector<std::string>& images) {
  auto alpha = make_alphabet(alphabet);
  std::vector<Word> words;
  for (const auto& img : images) words.push_back(Word::parse(alpha, img));
  return Morphism(alpha, std::move(words));
}

std::size_t Morphism::total_image_length() const noexcept {
  std::size_t total = 0;
  for (const auto& img : images_) total += img.size();
  return total;
}

Word Morphism::apply(const Word& w) const {
  require_same_alphabet(alphabet_, w.alphabet(), "morphism application");
  std::vector<Letter> out;
  for (Letter a : w.letters()) {
    const auto img = images_[a].letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(alphabet_, std::move(out));
}

Morphism Morphism::compose(const Morphism& other) const {
  require_same_alphabet(alphabet_, other.alphabet_, "morphism composition");
  std::vector<Word> images;
  images.reserve(images_.size());
  for (const auto& img : other.images_) images.push_back(apply(img));
  return Morphism(alphabet_, std::move(images));
}

Morphism Morphism::power(std::size_t k) const {
  if (k == 0) {
    std::vector<Word> images;
    for (std::size_t a = 0; a < images_.size(); ++a) {
      images.emplace_back(alphabet_, std::vector<Letter>{static_cast<Letter>(a)});
    }
    return Morphism(alphabet_, std::move(images));
  }
  Morphism result = *this;
  for (std::size_t i = 1; i < k; ++i) result = compose(result);
  return result;
}

std::vector<Letter> Morphism::fst() const {
  std::vector<Letter> out;
  for (const auto& img : images_) out.push_back(img.front());
  return out;
}

std::vector<Letter> Morphism::lst() const {
  std::vector<Letter> out;
  for (const auto& img : images_) out.push_back(img.back());
  return out;
}

std::vector<Letter> Morphism::fixed_point_letters() const {
  std::vector<Letter> out;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a].front() == a) out.push_back(static_cast<Letter>(a));
  }
  return out;
}

std::vector<Letter> Morphism::growing_fixed_point_letters() const {
  std::vector<Letter> out;
  for (Letter a : fixed_point_letters()) {
    if (images_[a].size() >= 2) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<std::size_t>> Morphism::incidence_matrix() const {
  const auto k = images_.size();
  std::vector<std::vector<std::size_t>> m(k, std::vector<std::size_t>(k, 0));
  for (std::size_t a = 0; a < k; ++a) {
    for (Letter b : images_[a].letters()) ++m[b][a];
  }
  return m;
}

std::string Morphism::str() const {
  std::string out;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (a) out += ',';
    out += alphabet_->symbols()[a];
    out += "->";
    out += images_[a].str();
  }
  return out;
}

Coding::Coding(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size()) throw PreconditionError("coding needs one image per source letter");
  for (const auto& img : images_) require_same_alphabet(target_, img.alphabet(), "coding image");
}

Word Coding::apply(const Word& w) const {
  require_same_alphabet(source_, w.alphabet(), "coding application");
  std::vector<Letter> out;
  for (Letter a : w.letters()) {
    const auto img = images_[a].letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(target_, std::move(out));
}

Word fixed_point_prefix(const Morphism& m, Letter seed, std::size_t len) {
  if (seed >= m.alphabet_size() || m.image(seed).front() != seed || m.image(seed).size() < 2) {
    throw PreconditionError("letter is not a growing fixed-point letter of " + m.str());
  }
  // u = m(u): the image of u[0..i) is a prefix of u that already covers u[i].
  std::vector<Letter> out(m.image(seed).letters().begin(), m.image(seed).letters().end());
  out.reserve(len + m.total_image_length());
  for (std::size_t idx = 1; out.size() < len; ++idx) {
    const auto img = m.image(out[idx]).letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  out.resize(len);
  return Word(m.alphabet(), std::move(out));
}

bool is_primitive(const Morphism& m) {
  const auto k = m.alphabet_size();
  const auto incidence = m.incidence_matrix();
  std::vector<std::vector<bool>> base(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) base[i][j] = incidence[i][j] > 0;
  }
  auto current = base;
  const auto bound = (k - 1) * (k - 1) + 1;
  for (std::size_t power = 1;; ++power) {
    bool positive = true;
    for (const auto& row : current) {
      for (bool x : row) positive = positive && x;
    }
    if (positive) return true;
    if (power >= bound) return false;
    std::vector<std::vector<bool>> next(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t l = 0; l < k; ++l) {
        if (!current[i][l]) continue;
        for (std::size_t j = 0; j < k; ++j) next[i][j] = next[i][j] || base[l][j];
      }
    }
    current = std::move(next);
  }
}

bool is_cyclic(const Morphism& m) {
  const auto& first = m.image(0).letters();
  const auto root_len = primitive_root_length(first);
  const auto root = first.subspan(0, root_len);
  for (const auto& img : m.images()) {
    const auto letters = img.letters();
    if (primitive_root_length(letters) != root_len) return false;
    if (!std::equal(root.begin(), root.end(), letters.begin())) return false;
  }
  return true;
}

bool is_cyclic_by_rotation(const Morphism& m) { return !rotate_until_distinct(m, Side::Left).has_value(); }

bool ConjugacyCertificate::holds() const {
  if (!same_alphabet(left.alphabet(), right.alphabet())) return false;
  for (std::size_t a = 0; a < left.alphabet_size(); ++a) {
    const auto letter = static_cast<Letter>(a);
    if (right.image(letter) + word != word + left.image(letter)) return false;
  }
  return true;
}

Conjugate leftmost_conjugate(const Morphism& m) {
  auto rotated = rotate_until_distinct(m, Side::Left);
  if (!rotated) throw PreconditionError("cyclic morphism " + m.str() + " has no leftmost conjugate");
  Morphism left = from_letter_images(m.alphabet(), std::move(rotated->first));
  Word word(m.alphabet(), std::move(rotated->second));
  ConjugacyCertificate cert{left, m, word};
  return Conjugate{std::move(left), std::move(word), std::move(cert)};
}

Conjugate rightmost_conjugate(const Morphism& m) {
  auto rotated = rotate_until_distinct(m, Side::Right);
  if (!rotated) throw PreconditionError("cyclic morphism " + m.str() + " has no rightmost conjugate");
  Morphism right = from_letter_images(m.alphabet(), std::move(rotated->first));
  // Letters were moved from the back, so the last one moved leads the word.
  auto moved = std::move(rotated->second);
  std::reverse(moved.begin(), moved.end());
  Word word(m.alphabet(), std::move(moved));
  ConjugacyCertificate cert{m, right, word};
  return Conjugate{std::move(right), std::move(word), std::move(cert)};
}

std::optional<Word> conjugacy_word(const Morphism& left, const Morphism& right) {
  require_same_alphabet(left.alphabet(), right.alphabet(), "conjugacy_word");
  for (std::size_t a = 0; a < left.alphabet_size(); ++a) {
    if (left.images()[a].size() != right.images()[a].size()) return std::nullopt;
  }
  // right(a)·w = w·left(a) forces w to be a prefix of right(a)^ω; test each
  // length in turn against every letter.
  const auto seed = right.image(0).letters();
  const auto bound = right.total_image_length();
  std::vector<Letter> candidate;
  for (std::size_t len = 0; len <= bound; ++len) {
    if (len > 0) candidate.push_back(seed[(len - 1) % seed.size()]);
    ConjugacyCertificate cert{left, right, Word(left.alphabet(), candidate)};
    if (cert.holds()) return cert.word;
  }
  return std::nullopt;
}

MarkedProfile marked_profile(const Morphism& m) {
  MarkedProfile profile;
  if (is_cyclic(m)) return profile;
  profile.is_acyclic = true;
  auto left = leftmost_conjugate(m);
  auto right = rightmost_conjugate(m);
  profile.fst_of_leftmost = left.morphism.fst();
  profile.lst_of_rightmost = right.morphism.lst();
  profile.leftmost = std::move(left.morphism);
  profile.rightmost = std::move(right.morphism);
  profile.is_marked = is_injective(profile.fst_of_leftmost) && is_injective(profile.lst_of_rightmost);
  profile.is_well_marked = profile.is_marked && profile.fst_of_leftmost == profile.lst_of_rightmost;
  return profile;
}

WellMarkedPower well_marked_power(const Morphism& m) {
  const auto profile = marked_profile(m);
  if (!profile.is_marked) throw PreconditionError("morphism " + m.str() + " is not marked");
  const auto bound =
      std::lcm(permutation_order(profile.fst_of_leftmost), permutation_order(profile.lst_of_rightmost));
  const auto id = identity_map(m.alphabet_size());
  Morphism p = m;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (k > 1) p = m.compose(p);
    const auto pk = marked_profile(p);
    if (pk.is_marked && pk.fst_of_leftmost == id && pk.lst_of_rightmost == id) {
      return WellMarkedPower{k, std::move(p)};
    }
  }
  throw SearchBoundExceeded("no power k <= " + std::to_string(bound) + " of " + m.str() +
                            " has identity Fst/Lst maps");
}

PhiMap::PhiMap(const Morphism& p)
    : left_(leftmost_conjugate(p).morphism), right_(rightmost_conjugate(p).morphism), word_(p.alphabet()) {
  const auto id = identity_map(p.alphabet_size());
  if (left_.fst() != id || right_.lst() != id) {
    throw PreconditionError("Phi requires Fst(p_L) = Lst(p_R) = Id; take well_marked_power first");
  }
  auto w = defectkit::conjugacy_word(left_, right_);
  if (!w) throw SearchBoundExceeded("no conjugacy word between p_L and p_R");
  word_ = std::move(*w);
}

Word PhiMap::operator()(const Word& u) const { return right_.apply(u) + word_; }

Word PhiMap::via_left(const Word& u) const { return word_ + left_.apply(u); }

Word phi_map(const Morphism& p, const Word& u) { return PhiMap(p)(u); }

}  // namespace defectkit
