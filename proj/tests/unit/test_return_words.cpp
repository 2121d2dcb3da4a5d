#include <gtest/gtest.h>

#include "defectkit/errors.hpp"
#include "defectkit/morphism.hpp"
#include "defectkit/return_words.hpp"
#include "oracles.hpp"

using namespace defectkit;

namespace {

Morphism M(std::string_view alphabet, std::vector<std::string> images) {
  return Morphism::from_strings(alphabet, images);
}

Word fib_stream(std::size_t n) { return fixed_point_prefix(M("01", {"01", "0"}), 0, n); }
Word tm_stream(std::size_t n) { return fixed_point_prefix(M("01", {"01", "10"}), 0, n); }
Word bv_stream(std::size_t n) { return fixed_point_prefix(M("abc", {"aabcacba", "aa", "a"}), 0, n); }

Word W(const Word& like, std::string_view s) { return Word::parse(like.alphabet(), s); }

std::set<std::string> strs(const WordSet& ws) {
  std::set<std::string> out;
  for (const Word& w : ws) out.insert(w.str());
  return out;
}

// Returns by brute force over all pairs of consecutive occurrences.
std::set<std::string> naive_returns(const std::string& s, const std::string& w) {
  std::vector<std::size_t> occ;
  for (std::size_t i = s.find(w); i != std::string::npos; i = s.find(w, i + 1)) occ.push_back(i);
  std::set<std::string> out;
  for (std::size_t k = 1; k < occ.size(); ++k) out.insert(s.substr(occ[k - 1], occ[k] + w.size() - occ[k - 1]));
  return out;
}

}  // namespace

TEST(CompleteReturns, Examples) {
  const Word f = fib_stream(100);
  const auto r = complete_return_words(f, W(f, "0"));
  for (const auto& x : strs(r.returns)) EXPECT_TRUE(x == "00" || x == "010") << x;
  EXPECT_TRUE(r.all_palindromic);
  EXPECT_EQ(r.horizon, 100u);

  const Word aaaa = Word::parse(make_alphabet("a"), "aaaa");
  const auto o = complete_return_words(aaaa, W(aaaa, "aa"));
  EXPECT_EQ(strs(o.returns), (std::set<std::string>{"aaa"}));
  EXPECT_EQ(o.spans.size(), 2u);
}

TEST(CompleteReturns, InsufficientHorizon) {
  const Word f = fib_stream(10);
  EXPECT_THROW(complete_return_words(f, W(f, "11")), InsufficientHorizon);
  EXPECT_THROW(complete_return_words(f, W(f, "0100101001")), InsufficientHorizon);
}

TEST(CompleteReturns, BucciVaslethasNonPalindromicLetterReturn) {
  const Word s = bv_stream(5000);
  bool found = false;
  for (const char* letter : {"a", "b", "c"}) found = found || !complete_return_words(s, W(s, letter)).all_palindromic;
  EXPECT_TRUE(found);
}

TEST(CompleteReturns, MatchNaiveEnumeration) {
  const Word s = tm_stream(512);
  const std::string str = s.str();
  for (const char* w : {"0", "01", "011", "0110", "1001"}) {
    const auto r = complete_return_words(s, W(s, w));
    EXPECT_EQ(strs(r.returns), naive_returns(str, w)) << w;
    for (const Word& x : r.returns) {
      EXPECT_EQ(x.prefix(std::string_view(w).size()).str(), w);
      EXPECT_EQ(x.suffix(std::string_view(w).size()).str(), w);
      EXPECT_EQ(oracle::count_occurrences(x.str(), w), 2u);
    }
  }
}

TEST(MirrorReturns, FibonacciExamples) {
  const Word f = fib_stream(2000);
  EXPECT_TRUE(complete_mirror_returns(f, W(f, "0101")).returns.contains(W(f, "01010")));
  EXPECT_TRUE(complete_mirror_returns(f, W(f, "001")).returns.contains(W(f, "0010100")));
  const auto m00 = complete_mirror_returns(f, W(f, "00"));
  EXPECT_TRUE(m00.returns.contains(W(f, "0010100")));
  EXPECT_EQ(m00.returns, complete_return_words(f, W(f, "00")).returns);
}

TEST(MirrorReturns, ShapeInvariant) {
  const Word s = bv_stream(3000);
  for (const char* w : {"ab", "aab", "bca", "acba"}) {
    const Word target = W(s, w);
    const Word rev = reverse(target);
    const auto r = complete_mirror_returns(s, target);
    for (const Word& x : r.returns) {
      const Word pre = x.prefix(target.size());
      const Word suf = x.suffix(target.size());
      EXPECT_TRUE(pre == target || pre == rev) << x.str();
      EXPECT_TRUE(suf == target || suf == rev) << x.str();
      const std::size_t count = oracle::count_occurrences(x.str(), target.str()) +
                                (is_palindrome(target) ? 0 : oracle::count_occurrences(x.str(), rev.str()));
      EXPECT_EQ(count, 2u) << w << " in " << x.str();
    }
  }
}

TEST(MirrorReturns, PalindromicOnFibonacci) {
  const Word f = fib_stream(10000);
  const StreamVerdict v = mirror_returns_palindromic(f, 8);
  EXPECT_TRUE(v.pass) << (v.witness ? v.witness->str() : "");
}

TEST(Alternation, Examples) {
  const Word f = fib_stream(2000);
  EXPECT_TRUE(occurrences_alternate(f, W(f, "01")));
  EXPECT_TRUE(occurrences_alternate(f, W(f, "010")));
  const Word t = tm_stream(2000);
  bool some_fail = false;
  for (std::size_t n = 1; n <= 6 && !some_fail; ++n)
    for (const Word& w : factors(t, n)) some_fail = some_fail || !occurrences_alternate(t, w);
  EXPECT_TRUE(some_fail);
}

TEST(ZeroDefectViaReturns, Verdicts) {
  EXPECT_TRUE(zero_defect_via_returns(fib_stream(2000), 8).pass);
  const StreamVerdict tm = zero_defect_via_returns(tm_stream(2000), 8);
  EXPECT_FALSE(tm.pass);
  ASSERT_TRUE(tm.witness.has_value());
  EXPECT_FALSE(is_palindrome(*tm.witness));
  const StreamVerdict bv = zero_defect_via_returns(bv_stream(5000), 6);
  EXPECT_FALSE(bv.pass);
  ASSERT_TRUE(bv.target.has_value());
  EXPECT_TRUE(is_palindrome(*bv.target));
}

TEST(ThresholdScan, Examples) {
  const ThresholdScan f = finite_defect_threshold_scan(fib_stream(5000), 10);
  ASSERT_TRUE(f.threshold.has_value());
  EXPECT_EQ(*f.threshold, 1u);

  const ThresholdScan b = finite_defect_threshold_scan(bv_stream(20000), 10);
  ASSERT_TRUE(b.threshold.has_value());
  EXPECT_GE(*b.threshold, 2u);
  EXPECT_LE(*b.threshold, 10u);

  const ThresholdScan t = finite_defect_threshold_scan(tm_stream(20000), 10);
  EXPECT_FALSE(t.threshold.has_value());
}
