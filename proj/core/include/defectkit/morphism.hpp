#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "defectkit/word.hpp"

namespace defectkit {

/// Non-erasing endomorphism of A*, given by the image of each letter.
class Morphism {
 public:
  Morphism(AlphabetPtr alphabet, std::vector<Word> images);

  /// Convenience: images given as symbol strings in alphabet order.
  static Morphism from_strings(std::string_view alphabet, const std::vector<std::string>& images);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return images_.size(); }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const noexcept { return images_; }
  std::size_t total_image_length() const noexcept;

  Word apply(const Word& w) const;
  /// this ∘ other, i.e. x ↦ this(other(x)).
  Morphism compose(const Morphism& other) const;
  /// k-fold composition; power(0) is the identity.
  Morphism power(std::size_t k) const;

  /// First / last letter of each image.
  std::vector<Letter> fst() const;
  std::vector<Letter> lst() const;

  /// Letters a with Fst(a) = a.
  std::vector<Letter> fixed_point_letters() const;
  /// Fixed-point letters whose image has length at least 2.
  std::vector<Letter> growing_fixed_point_letters() const;

  /// Entry [b][a] counts occurrences of b in the image of a.
  std::vector<std::vector<std::size_t>> incidence_matrix() const;

  /// `a->img,b->img,...` in alphabet order.
  std::string str() const;

  friend bool operator==(const Morphism& a, const Morphism& b) noexcept {
    return same_alphabet(a.alphabet_, b.alphabet_) && a.images_ == b.images_;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<Word> images_;
};

/// Letter-to-word map between two possibly different alphabets, used for
/// codings such as a ↦ a, p ↦ abcacba.
class Coding {
 public:
  Coding(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images);

  const AlphabetPtr& source() const noexcept { return source_; }
  const AlphabetPtr& target() const noexcept { return target_; }
  Word apply(const Word& w) const;

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<Word> images_;
};

/// Length-`len` prefix of the fixed point of m starting with `seed`.
/// Throws PreconditionError unless Fst(m)(seed) = seed and |m(seed)| >= 2.
Word fixed_point_prefix(const Morphism& m, Letter seed, std::size_t len);

/// Some power k <= (|A|-1)^2 + 1 of the incidence matrix is positive.
bool is_primitive(const Morphism& m);

/// All images are powers of a single word (via primitive roots).
bool is_cyclic(const Morphism& m);
/// Same predicate decided by rotating the images until a state repeats.
bool is_cyclic_by_rotation(const Morphism& m);

/// right(a)·word = word·left(a) for every letter a.
struct ConjugacyCertificate {
  Morphism left;
  Morphism right;
  Word word;

  bool holds() const;
};

struct Conjugate {
  Morphism morphism;
  Word word;
  ConjugacyCertificate certificate;
};

/// Rotates shared first letters to the back until Fst is non-constant.
/// Throws PreconditionError for cyclic morphisms.
Conjugate leftmost_conjugate(const Morphism& m);
/// Rotates shared last letters to the front until Lst is non-constant.
Conjugate rightmost_conjugate(const Morphism& m);

/// Shortest w with right(a)·w = w·left(a) for all a, searched up to the total
/// image length of `right`; nullopt if none.
std::optional<Word> conjugacy_word(const Morphism& left, const Morphism& right);

struct MarkedProfile {
  bool is_acyclic = false;
  std::optional<Morphism> leftmost;
  std::optional<Morphism> rightmost;
  std::vector<Letter> fst_of_leftmost;
  std::vector<Letter> lst_of_rightmost;
  bool is_marked = false;
  bool is_well_marked = false;
};

MarkedProfile marked_profile(const Morphism& m);

struct WellMarkedPower {
  std::size_t exponent;
  Morphism power;
};

/// Smallest k such that Fst((m^k)_L) = Lst((m^k)_R) = Id, searched up to the
/// lcm of the cycle lengths of Fst(m_L) and Lst(m_R).
/// Throws PreconditionError if m is not marked, SearchBoundExceeded if no k
/// is found within the bound.
WellMarkedPower well_marked_power(const Morphism& m);

/// u ↦ p_R(u)·w where w is the conjugacy word of p_L ▷ p_R. Requires
/// Fst(p_L) = Lst(p_R) = Id.
class PhiMap {
 public:
  explicit PhiMap(const Morphism& p);

  Word operator()(const Word& u) const;
  /// w·p_L(u); equal to operator() by the conjugacy relation.
  Word via_left(const Word& u) const;

  const Morphism& leftmost() const noexcept { return left_; }
  const Morphism& rightmost() const noexcept { return right_; }
  const Word& conjugacy_word() const noexcept { return word_; }

 private:
  Morphism left_;
  Morphism right_;
  Word word_;
};

Word phi_map(const Morphism& p, const Word& u);

}  // namespace defectkit
