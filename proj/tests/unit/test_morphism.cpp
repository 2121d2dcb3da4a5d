#include <gtest/gtest.h>

#include <random>

#include "defectkit/errors.hpp"
#include "defectkit/morphism.hpp"
#include "oracles.hpp"

using namespace defectkit;

namespace {

Morphism M(std::string_view alphabet, std::vector<std::string> images) {
  return Morphism::from_strings(alphabet, images);
}

Morphism fib() { return M("01", {"01", "0"}); }
Morphism thue_morse() { return M("01", {"01", "10"}); }
Morphism bv() { return M("abc", {"aabcacba", "aa", "a"}); }

std::vector<std::string> image_strs(const Morphism& m) {
  std::vector<std::string> out;
  for (const Word& w : m.images()) out.push_back(w.str());
  return out;
}

// Random non-erasing morphism whose every image contains every letter, so it
// is primitive by construction.
Morphism random_primitive(std::mt19937& rng, const std::string& alphabet) {
  std::vector<std::string> images;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    std::string img = alphabet;
    std::shuffle(img.begin(), img.end(), rng);
    img += oracle::random_word(rng, alphabet, rng() % 3);
    images.push_back(img);
  }
  return M(alphabet, images);
}

}  // namespace

TEST(Morphism, RejectsErasingAndWrongArity) {
  EXPECT_THROW(M("ab", {"ab", ""}), PreconditionError);
  EXPECT_THROW(M("ab", {"ab"}), PreconditionError);
  EXPECT_THROW(M("ab", {"ab", "c"}), PreconditionError);
}

TEST(Morphism, Apply) {
  const auto a = fib().alphabet();
  EXPECT_EQ(fib().apply(Word::parse(a, "01")).str(), "010");
  EXPECT_EQ(thue_morse().apply(Word::parse(thue_morse().alphabet(), "0110")).str(), "01101001");
  EXPECT_TRUE(bv().apply(Word(bv().alphabet())).empty());
  EXPECT_THROW(fib().apply(Word::parse(bv().alphabet(), "a")), AlphabetMismatch);
}

TEST(Morphism, ApplyLengthIsSumOfImageLengths) {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Morphism m = random_primitive(rng, "abc");
    const Word w = Word::parse(m.alphabet(), oracle::random_word(rng, "abc", rng() % 20));
    std::size_t expected = 0;
    for (Letter l : w.letters()) expected += m.image(l).size();
    EXPECT_EQ(m.apply(w).size(), expected);
  }
}

TEST(Morphism, ComposeAndPower) {
  const Morphism f2 = fib().power(2);
  EXPECT_EQ(image_strs(f2), (std::vector<std::string>{"010", "01"}));
  EXPECT_EQ(fib().compose(fib()), f2);
  EXPECT_EQ(image_strs(fib().power(1)), image_strs(fib()));
  EXPECT_EQ(image_strs(fib().power(0)), (std::vector<std::string>{"0", "1"}));
}

TEST(FixedPointPrefix, Examples) {
  EXPECT_EQ(fixed_point_prefix(fib(), 0, 8).str(), "01001010");
  EXPECT_EQ(fixed_point_prefix(thue_morse(), 0, 16).str(), "0110100110010110");
  EXPECT_EQ(fixed_point_prefix(bv(), 0, 8).str(), "aabcacba");
  EXPECT_EQ(fixed_point_prefix(thue_morse(), 1, 8).str(), "10010110");
  EXPECT_THROW(fixed_point_prefix(fib(), 1, 8), PreconditionError);
  EXPECT_THROW(fixed_point_prefix(M("ab", {"a", "ba"}), 0, 8), PreconditionError);
}

TEST(FixedPointPrefix, LongerExtendsShorterAndMatchesStringOracle) {
  const Word a = fixed_point_prefix(bv(), 0, 300);
  const Word b = fixed_point_prefix(bv(), 0, 1000);
  EXPECT_EQ(b.prefix(300), a);
  EXPECT_EQ(b.str(), oracle::fixed_point({{'a', "aabcacba"}, {'b', "aa"}, {'c', "a"}}, 'a', 1000));
}

TEST(Primitivity, Examples) {
  EXPECT_TRUE(is_primitive(fib()));
  EXPECT_FALSE(is_primitive(M("ab", {"ab", "b"})));
  EXPECT_TRUE(is_primitive(bv()));
  EXPECT_FALSE(is_primitive(M("abc", {"ab", "ba", "c"})));
  // Needs the full Wielandt exponent: a->b, b->c, c->ab.
  EXPECT_TRUE(is_primitive(M("abc", {"b", "c", "ab"})));
}

TEST(Primitivity, AgreesWithLetterReachability) {
  std::mt19937 rng(21);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::string> images;
    for (int i = 0; i < 3; ++i) images.push_back(oracle::random_word(rng, "abc", 1 + rng() % 2));
    const Morphism m = M("abc", images);
    // Oracle: some power k <= 5 has every letter in every image.
    bool expected = false;
    std::map<char, std::string> img{{'a', images[0]}, {'b', images[1]}, {'c', images[2]}};
    std::map<char, std::set<char>> reach;
    for (char x : std::string("abc")) reach[x] = std::set<char>(img[x].begin(), img[x].end());
    for (int k = 1; k <= 5 && !expected; ++k) {
      bool all = true;
      for (char x : std::string("abc")) all = all && reach[x].size() == 3;
      if (all) expected = true;
      std::map<char, std::set<char>> next;
      for (char x : std::string("abc"))
        for (char y : reach[x]) next[x].insert(img[y].begin(), img[y].end());
      reach = next;
    }
    EXPECT_EQ(is_primitive(m), expected) << m.str();
  }
}

TEST(Cyclicity, Examples) {
  EXPECT_TRUE(is_cyclic(M("ab", {"abab", "ab"})));
  EXPECT_FALSE(is_cyclic(M("ab", {"aba", "bab"})));
  EXPECT_FALSE(is_cyclic(fib()));
  const std::string z = "011010010110";
  EXPECT_TRUE(is_cyclic(M("01", {z, z})));
}

TEST(Cyclicity, BothRoutesAgree) {
  std::mt19937 rng(8);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::string> images;
    const std::string base = oracle::random_word(rng, "ab", 1 + rng() % 3);
    for (int i = 0; i < 2; ++i) {
      if (rng() % 2) {
        std::string img;
        for (std::size_t k = 0; k < 1 + rng() % 3; ++k) img += base;
        images.push_back(img);
      } else {
        images.push_back(oracle::random_word(rng, "ab", 1 + rng() % 5));
      }
    }
    const Morphism m = M("ab", images);
    EXPECT_EQ(is_cyclic(m), is_cyclic_by_rotation(m)) << m.str();
  }
}

TEST(Conjugates, AbabAbbExample) {
  const Morphism phi = M("ab", {"abab", "abb"});
  const Conjugate left = leftmost_conjugate(phi);
  EXPECT_EQ(image_strs(left.morphism), (std::vector<std::string>{"abab", "bab"}));
  EXPECT_TRUE(left.certificate.holds());
  const Morphism psi = M("ab", {"baba", "bba"});
  auto w = conjugacy_word(psi, phi);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->str(), "a");
}

TEST(Conjugates, Fibonacci) {
  const Conjugate left = leftmost_conjugate(fib());
  EXPECT_EQ(image_strs(left.morphism), (std::vector<std::string>{"10", "0"}));
  EXPECT_EQ(left.word.str(), "0");
  const Conjugate right = rightmost_conjugate(fib());
  EXPECT_EQ(right.morphism, fib());
  EXPECT_TRUE(right.word.empty());
  auto w = conjugacy_word(left.morphism, right.morphism);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->str(), "0");
}

TEST(Conjugates, BucciVaslet) {
  const Conjugate left = leftmost_conjugate(bv());
  EXPECT_EQ(image_strs(left.morphism), (std::vector<std::string>{"bcacbaaa", "aa", "a"}));
  EXPECT_EQ(left.word.str(), "aa");
  const Conjugate right = rightmost_conjugate(bv());
  EXPECT_EQ(image_strs(right.morphism), (std::vector<std::string>{"aaabcacb", "aa", "a"}));
  auto w = conjugacy_word(left.morphism, right.morphism);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->str(), "aaa");
}

TEST(Conjugates, IdentityAndAbsence) {
  auto w = conjugacy_word(bv(), bv());
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->empty());
  EXPECT_FALSE(conjugacy_word(fib(), thue_morse()).has_value());
  EXPECT_THROW(leftmost_conjugate(M("ab", {"abab", "ab"})), PreconditionError);
  EXPECT_THROW(rightmost_conjugate(M("ab", {"abab", "ab"})), PreconditionError);
}

TEST(Conjugates, RandomCertificatesAndFixpoints) {
  std::mt19937 rng(31);
  for (int t = 0; t < 100; ++t) {
    const Morphism m = random_primitive(rng, "abc");
    if (is_cyclic(m)) continue;
    const Conjugate l = leftmost_conjugate(m);
    const Conjugate r = rightmost_conjugate(m);
    EXPECT_TRUE(l.certificate.holds());
    EXPECT_TRUE(r.certificate.holds());
    EXPECT_TRUE(is_primitive(l.morphism));
    EXPECT_TRUE(is_primitive(r.morphism));
    // Rotation is a fixpoint on its own output.
    EXPECT_EQ(leftmost_conjugate(l.morphism).morphism, l.morphism);
    EXPECT_TRUE(leftmost_conjugate(l.morphism).word.empty());
    EXPECT_EQ(rightmost_conjugate(r.morphism).morphism, r.morphism);
    // Letter-by-letter check of the relation m(a)·w = w·m_L(a).
    for (Letter a = 0; a < 3; ++a) {
      EXPECT_EQ(m.image(a) + l.word, l.word + l.morphism.image(a));
      EXPECT_EQ(r.morphism.image(a) + r.word, r.word + m.image(a));
    }
  }
}

TEST(MarkedProfile, Examples) {
  const MarkedProfile f = marked_profile(fib());
  EXPECT_TRUE(f.is_acyclic);
  EXPECT_TRUE(f.is_marked);
  EXPECT_TRUE(f.is_well_marked);
  EXPECT_EQ(f.fst_of_leftmost, (std::vector<Letter>{1, 0}));
  EXPECT_EQ(f.lst_of_rightmost, (std::vector<Letter>{1, 0}));

  const MarkedProfile b = marked_profile(bv());
  EXPECT_TRUE(b.is_acyclic);
  EXPECT_FALSE(b.is_marked);
  EXPECT_EQ(b.fst_of_leftmost, (std::vector<Letter>{1, 0, 0}));

  // Lst of psi is (a, b, b): not injective.
  EXPECT_FALSE(marked_profile(M("abc", {"aca", "cab", "b"})).is_marked);

  const MarkedProfile c = marked_profile(M("ab", {"abab", "ab"}));
  EXPECT_FALSE(c.is_acyclic);
  EXPECT_FALSE(c.is_marked);
}

TEST(WellMarkedPower, Examples) {
  const WellMarkedPower f = well_marked_power(fib());
  EXPECT_EQ(f.exponent, 2u);
  EXPECT_EQ(f.power, fib().power(2));
  // Thue-Morse is its own conjugate; Fst = Id but Lst swaps 0 and 1.
  EXPECT_EQ(well_marked_power(thue_morse()).exponent, 2u);
  EXPECT_THROW(well_marked_power(bv()), PreconditionError);
}

TEST(WellMarkedPower, RandomMarkedTernaryDividesSix) {
  std::mt19937 rng(77);
  int seen = 0;
  for (int t = 0; t < 400 && seen < 30; ++t) {
    const Morphism m = random_primitive(rng, "abc");
    if (!marked_profile(m).is_marked) continue;
    ++seen;
    const WellMarkedPower p = well_marked_power(m);
    EXPECT_EQ(6 % p.exponent, 0u) << m.str();
    const MarkedProfile pp = marked_profile(p.power);
    EXPECT_EQ(pp.fst_of_leftmost, (std::vector<Letter>{0, 1, 2}));
    EXPECT_EQ(pp.lst_of_rightmost, (std::vector<Letter>{0, 1, 2}));
  }
  EXPECT_GT(seen, 5);
}

TEST(PhiMap, FibonacciSquare) {
  const Morphism p = fib().power(2);
  const PhiMap phi(p);
  auto w = conjugacy_word(leftmost_conjugate(p).morphism, rightmost_conjugate(p).morphism);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(phi(Word(p.alphabet())), *w);
  EXPECT_EQ(phi.conjugacy_word().str(), "010");
  EXPECT_TRUE(is_palindrome(phi.conjugacy_word()));
  for (Letter a = 0; a < 2; ++a) EXPECT_EQ(reverse(phi.rightmost().image(a)), phi.leftmost().image(a));
  EXPECT_THROW(PhiMap{fib()}, PreconditionError);
}

TEST(PhiMap, ReversalAndPalindromes) {
  const PhiMap phi(fib().power(2));
  std::mt19937 rng(4);
  const AlphabetPtr a = fib().alphabet();
  for (int t = 0; t < 100; ++t) {
    const Word u = Word::parse(a, oracle::random_word(rng, "01", rng() % 12));
    EXPECT_EQ(phi(reverse(u)), reverse(phi(u)));
    EXPECT_EQ(phi(u), phi.via_left(u));
    const Word pal = u + reverse(u);
    EXPECT_TRUE(is_palindrome(phi(pal)));
    EXPECT_EQ(phi_map(fib().power(2), u), phi(u));
  }
}

TEST(Coding, AppliesAcrossAlphabets) {
  const AlphabetPtr src = make_alphabet("ap");
  const AlphabetPtr dst = make_alphabet("abc");
  const Coding pi(src, dst, {Word::parse(dst, "a"), Word::parse(dst, "abcacba")});
  EXPECT_EQ(pi.apply(Word::parse(src, "apa")).str(), "aabcacbaa");
  EXPECT_TRUE(pi.apply(Word(src)).empty());
}

TEST(Morphism, StrAndIncidence) {
  EXPECT_EQ(bv().str(), "a->aabcacba,b->aa,c->a");
  const auto inc = bv().incidence_matrix();
  EXPECT_EQ(inc[0][0], 4u);  // a occurs four times in the image of a
  EXPECT_EQ(inc[1][0], 2u);
  EXPECT_EQ(inc[0][1], 2u);
  EXPECT_EQ(inc[2][2], 0u);
  EXPECT_EQ(bv().fixed_point_letters(), (std::vector<Letter>{0}));
  EXPECT_EQ(bv().growing_fixed_point_letters(), (std::vector<Letter>{0}));
  EXPECT_EQ(thue_morse().growing_fixed_point_letters(), (std::vector<Letter>{0, 1}));
}
