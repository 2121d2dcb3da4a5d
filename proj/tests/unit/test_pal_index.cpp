#include <gtest/gtest.h>

#include <random>

#include "defectkit/errors.hpp"
#include "defectkit/morphism.hpp"
#include "defectkit/pal_index.hpp"
#include "oracles.hpp"

using namespace defectkit;

namespace {

Word W(std::string_view alphabet, std::string_view s) { return Word::parse(make_alphabet(alphabet), s); }

}  // namespace

TEST(PalIndex, FibonacciPrefix) {
  const PalIndex idx = PalIndex::build(W("01", "010010100"));
  EXPECT_EQ(idx.node_count(), 9u);
  const DefectReport r = idx.defect_report();
  EXPECT_EQ(r.defect, 0u);
  EXPECT_EQ(r.palindrome_count_including_empty, 10u);
  EXPECT_TRUE(r.lacunas.empty());
  EXPECT_EQ(idx.longest_palindromic_suffix(8).str(), "0010100");
}

TEST(PalIndex, ThueMorsePrefix) {
  const Word w = W("01", "011010011");
  const PalIndex idx = PalIndex::build(w);
  const DefectReport r = idx.defect_report();
  EXPECT_EQ(r.defect, 1u);
  EXPECT_EQ(r.palindrome_count_including_empty, 9u);
  EXPECT_EQ(r.lacunas, (std::vector<std::size_t>{8}));
  const Word lps = idx.longest_palindromic_suffix(8);
  EXPECT_EQ(lps.str(), "11");
  EXPECT_EQ(occurrences(w, lps).size(), 2u);
}

TEST(PalIndex, EmptyAndTiny) {
  const PalIndex e = PalIndex::build(W("01", ""));
  EXPECT_EQ(e.node_count(), 0u);
  EXPECT_EQ(e.defect_report().defect, 0u);
  EXPECT_EQ(e.defect_report().palindrome_count_including_empty, 1u);
  EXPECT_THROW(e.longest_palindromic_suffix(0), PreconditionError);

  const PalIndex ab = PalIndex::build(W("ab", "ab"));
  EXPECT_EQ(ab.longest_palindromic_suffix(1).str(), "b");
  EXPECT_THROW(ab.longest_palindromic_suffix(2), PreconditionError);
}

TEST(PalIndex, MatchesBruteOracleOnRandomWords) {
  std::mt19937 rng(2024);
  const std::string alphabets[] = {"01", "abc", "abcd"};
  for (int t = 0; t < 300; ++t) {
    const std::string& a = alphabets[t % 3];
    const Word w = W(a, oracle::random_word(rng, a, rng() % 301));
    const PalIndex idx = PalIndex::build(w);
    const WordSet brute = brute_distinct_palindromes(w);
    ASSERT_EQ(idx.palindromes(), brute) << w.str();
    const DefectReport r = idx.defect_report();
    EXPECT_EQ(r.defect, w.size() + 1 - r.palindrome_count_including_empty);
    EXPECT_EQ(r.defect, r.lacunas.size());
  }
}

TEST(PalIndex, LongestSuffixAndLacunasAgainstNaiveScan) {
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    const std::string s = oracle::random_word(rng, "ab", 1 + rng() % 30);
    const PalIndex idx = PalIndex::build(W("ab", s));
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string pre = s.substr(0, i + 1);
      std::string lps;
      for (std::size_t start = 0; start <= i && lps.empty(); ++start)
        if (oracle::is_pal(pre.substr(start))) lps = pre.substr(start);
      EXPECT_EQ(idx.longest_palindromic_suffix(i).str(), lps);
      // Lacuna iff the longest palindromic suffix is not unioccurrent.
      EXPECT_EQ(idx.is_lacuna(i), oracle::count_occurrences(pre, lps) > 1) << s << " @" << i;
    }
    EXPECT_EQ(idx.defect_report().defect, oracle::defect(s));
  }
}

TEST(PalIndex, DefectProperties) {
  std::mt19937 rng(17);
  for (int t = 0; t < 150; ++t) {
    const Word w = W("abc", oracle::random_word(rng, "abc", rng() % 60));
    const std::size_t d = defect(w).defect;
    EXPECT_EQ(d, defect(reverse(w)).defect);
    EXPECT_LE(d, w.size());
    for (std::size_t i = 0; i <= w.size(); ++i) EXPECT_LE(defect(w.prefix(i)).defect, d);
    for (int k = 0; k < 10 && !w.empty(); ++k) {
      const std::size_t pos = rng() % w.size();
      const Word v = w.slice(pos, rng() % (w.size() - pos + 1));
      EXPECT_LE(defect(v).defect, d);
    }
  }
}

TEST(PalIndex, TreeStructure) {
  const Word w = W("01", "0110100110010110");
  const PalIndex idx = PalIndex::build(w);
  const Eertree& tree = idx.tree();
  EXPECT_EQ(tree.node_count_with_roots(), idx.node_count() + 2);
  // Every non-root node hangs off its parent by an extension edge.
  std::size_t reached = 0;
  for (Eertree::NodeId v = 0; v < static_cast<Eertree::NodeId>(tree.node_count_with_roots()); ++v)
    for (Letter a = 0; a < 2; ++a)
      if (tree.edge(v, a) != Eertree::kNone) ++reached;
  EXPECT_EQ(reached, idx.node_count());
}

TEST(DefectStream, Fibonacci) {
  const Morphism fib = Morphism::from_strings("01", {"01", "0"});
  std::vector<std::size_t> lengths;
  for (std::size_t n = 10; n <= 2000; n += 10) lengths.push_back(n);
  for (auto [n, d] : defect_stream(fib, 0, lengths)) EXPECT_EQ(d, 0u) << n;
}

TEST(DefectStream, ThueMorseGrows) {
  const Morphism tm = Morphism::from_strings("01", {"01", "10"});
  std::vector<std::size_t> lengths;
  for (std::size_t n = 16; n <= 4096; n *= 2) lengths.push_back(n);
  auto s = defect_stream(tm, 0, lengths);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_GT(s[i].second, s[i - 1].second);
  // Values from a naive prefix scan on the string fixed point.
  const std::string prefix = oracle::fixed_point({{'0', "01"}, {'1', "10"}}, '0', 256);
  EXPECT_EQ(s[0].second, oracle::prefix_defect(prefix.substr(0, 16)));
  EXPECT_EQ(s[2].second, oracle::prefix_defect(prefix.substr(0, 64)));
  EXPECT_EQ(s[4].second, oracle::prefix_defect(prefix));
}

TEST(DefectStream, ZWordStabilizesAtTwo) {
  const std::string z = "011010010110";
  const Morphism m = Morphism::from_strings("01", {z, z});
  auto s = defect_stream(m, 0, {12, 24, 48, 96, 192, 384, 768});
  EXPECT_EQ(s.back().second, 2u);
  EXPECT_EQ(s[s.size() - 2].second, 2u);
  std::string zs;
  for (int i = 0; i < 8; ++i) zs += z;
  EXPECT_EQ(oracle::prefix_defect(zs), 2u);
}

TEST(DefectStream, BucciVasletPositiveAndFlat) {
  const Morphism bv = Morphism::from_strings("abc", {"aabcacba", "aa", "a"});
  auto s = defect_stream(bv, 0, {64, 128, 256, 512, 1024, 2048, 4096});
  for (auto [n, d] : s) EXPECT_EQ(d, 1u) << n;
}

TEST(DefectStream, KeepsRequestOrderAndRejectsBadInput) {
  const Morphism fib = Morphism::from_strings("01", {"01", "0"});
  auto s = defect_stream(fib, 0, {30, 10, 20});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].first, 30u);
  EXPECT_EQ(s[1].first, 10u);
  EXPECT_THROW(defect_stream(fib, 1, {10}), PreconditionError);
  const Morphism nonprim = Morphism::from_strings("ab", {"ab", "b"});
  EXPECT_THROW(defect_stream(nonprim, 0, {10}), PreconditionError);
}
