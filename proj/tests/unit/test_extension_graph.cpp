#include <gtest/gtest.h>

#include "defectkit/errors.hpp"
#include "defectkit/extension_graph.hpp"

using namespace defectkit;

namespace {

Morphism M(std::string_view alphabet, std::vector<std::string> images) {
  return Morphism::from_strings(alphabet, images);
}

const LanguageSnapshot& bv16() {
  static const LanguageSnapshot L = LanguageSnapshot::build(M("abc", {"aabcacba", "aa", "a"}), 16);
  return L;
}

Word W(const LanguageSnapshot& L, std::string_view s) { return Word::parse(L.alphabet(), s); }

std::vector<std::pair<std::string, std::string>> labelled_edges(const ExtensionGraph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges) out.emplace_back(g.vertex_label(u), g.vertex_label(v));
  return out;
}

ExtensionGraph manual(GraphKind kind, std::vector<GraphVertex> vs, std::vector<std::pair<std::size_t, std::size_t>> es) {
  return ExtensionGraph{kind, Word(make_alphabet("abc")), std::move(vs), std::move(es)};
}

}  // namespace

TEST(Classify, SmallGraphs) {
  const auto tri = classify(manual(GraphKind::Theta, {{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(tri.has_cycle);
  EXPECT_FALSE(tri.is_tree);
  EXPECT_TRUE(tri.connected);

  const auto edge = classify(manual(GraphKind::Theta, {{0, 0}, {1, 0}}, {{0, 1}}));
  EXPECT_TRUE(edge.is_tree);
  EXPECT_FALSE(edge.has_cycle);

  const auto split = classify(manual(GraphKind::Theta, {{0, 0}, {1, 0}, {2, 0}}, {{0, 1}}));
  EXPECT_EQ(split.components, 2u);
  EXPECT_FALSE(split.connected);
  EXPECT_FALSE(split.is_tree);
  EXPECT_FALSE(split.has_cycle);
}

TEST(Theta, BucciVasletFigureOne) {
  const auto& L = bv16();
  const ExtensionGraph eps = theta_graph(L, W(L, ""));
  EXPECT_EQ(labelled_edges(eps), (std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"a", "c"}, {"b", "c"}}));
  EXPECT_TRUE(classify(eps).has_cycle);

  const ExtensionGraph a = theta_graph(L, W(L, "a"));
  EXPECT_EQ(a.vertices.size(), 3u);
  EXPECT_EQ(labelled_edges(a), (std::vector<std::pair<std::string, std::string>>{{"a", "b"}}));
  EXPECT_EQ(classify(a).components, 2u);
  EXPECT_FALSE(classify(a).connected);

  const ExtensionGraph b = theta_graph(L, W(L, "b"));
  EXPECT_EQ(labelled_edges(b), (std::vector<std::pair<std::string, std::string>>{{"a", "c"}}));
  EXPECT_TRUE(classify(b).is_tree);
  EXPECT_TRUE(classify(theta_graph(L, W(L, "c"))).is_tree);
}

TEST(Gamma, BucciVaslet) {
  const auto& L = bv16();
  const ExtensionGraph g = gamma_graph(L, W(L, "aaab"));
  EXPECT_EQ(labelled_edges(g), (std::vector<std::pair<std::string, std::string>>{{"a-", "c+"}, {"b-", "c+"}}));
  EXPECT_TRUE(classify(g).is_tree);
  EXPECT_EQ(g.vertices.size(), 3u);

  const ExtensionGraph aaa = gamma_graph(L, W(L, "aaa"));
  EXPECT_TRUE(classify(aaa).has_cycle);
  EXPECT_TRUE(classify(theta_graph(L, W(L, "aaa"))).is_tree);
}

TEST(Gamma, FibonacciLetterIsATree) {
  const auto L = LanguageSnapshot::build(M("01", {"01", "0"}), 10);
  const Word w = W(L, "0");
  EXPECT_TRUE(classify(gamma_graph(L, w)).is_tree);
  EXPECT_TRUE(classify(theta_graph(L, w)).is_tree);
}

TEST(Theta, Preconditions) {
  const auto& L = bv16();
  EXPECT_THROW(theta_graph(L, W(L, "ab")), PreconditionError);
  const auto nc = LanguageSnapshot::build(M("01", {"001", "011"}), 8);
  EXPECT_THROW(theta_graph(nc, Word::parse(nc.alphabet(), "0")), PreconditionError);
  EXPECT_THROW(gamma_graph(L, W(L, "bb")), NotInLanguage);
}

TEST(Dot, ByteStableGolden) {
  const auto& L = bv16();
  const ExtensionGraph eps = theta_graph(L, W(L, ""));
  EXPECT_EQ(graph_name(eps), "theta_");
  EXPECT_EQ(to_dot(eps),
            "graph \"theta_\" {\n"
            "  v0 [label=\"a\"];\n"
            "  v1 [label=\"b\"];\n"
            "  v2 [label=\"c\"];\n"
            "  v0 -- v1;\n"
            "  v0 -- v2;\n"
            "  v1 -- v2;\n"
            "}\n");
  const ExtensionGraph g = gamma_graph(L, W(L, "aaab"));
  EXPECT_EQ(graph_name(g), "gamma_aaab");
  EXPECT_EQ(to_dot(g),
            "graph \"gamma_aaab\" {\n"
            "  v0 [label=\"a-\"];\n"
            "  v1 [label=\"b-\"];\n"
            "  v2 [label=\"c+\"];\n"
            "  v0 -- v2;\n"
            "  v1 -- v2;\n"
            "}\n");
  EXPECT_EQ(to_dot(gamma_graph(L, W(L, "aaab"))), to_dot(g));
}

TEST(Lemmas, BucciVaslet) {
  const auto& L = bv16();
  const auto eps = check_multiplicity_lemmas(L, W(L, ""));
  EXPECT_EQ(eps.multiplicity, 2);
  EXPECT_EQ(eps.symmetric_minus_one, 0);
  EXPECT_EQ(eps.theta_lemma, LemmaOutcome::Satisfied);
  EXPECT_EQ(eps.gamma_lemma, LemmaOutcome::Satisfied);

  const auto b = check_multiplicity_lemmas(L, W(L, "b"));
  EXPECT_EQ(b.multiplicity, -1);
  EXPECT_EQ(b.symmetric_minus_one, -1);
  EXPECT_EQ(b.theta_lemma, LemmaOutcome::Satisfied);

  const auto a = check_multiplicity_lemmas(L, W(L, "a"));
  EXPECT_EQ(a.multiplicity, -1);
  // E=(a) = {a, c} from aaa and cac
  EXPECT_EQ(a.symmetric_minus_one, 1);
  EXPECT_EQ(a.theta_lemma, LemmaOutcome::HypothesisUnmet);
  EXPECT_EQ(a.gamma_lemma, LemmaOutcome::HypothesisUnmet);

  const auto ab = check_multiplicity_lemmas(L, W(L, "ab"));
  EXPECT_EQ(ab.theta_lemma, LemmaOutcome::NotApplicable);
  EXPECT_EQ(to_string(LemmaOutcome::HypothesisUnmet), "hypothesis_unmet");
}

TEST(Lemmas, IdentitiesOnEveryFactor) {
  const std::vector<Morphism> ms = {M("01", {"01", "0"}), M("01", {"01", "10"}), M("abc", {"aabcacba", "aa", "a"}),
                                    M("abc", {"aca", "cab", "b"})};
  for (const Morphism& m : ms) {
    const auto L = LanguageSnapshot::build(m, 12);
    const bool closed = is_closed_under_reversal(L);
    for (std::size_t n = 0; n <= 10; ++n)
      for (const Word& w : L.factors(n)) {
        const auto r = check_multiplicity_lemmas(L, w, closed);
        EXPECT_NE(r.gamma_lemma, LemmaOutcome::Violated) << m.str() << " " << w.str();
        EXPECT_NE(r.theta_lemma, LemmaOutcome::Violated) << m.str() << " " << w.str();
        EXPECT_TRUE(r.gamma_identity);
        EXPECT_TRUE(r.theta_identity);
        const auto c = classify(gamma_graph(L, w));
        EXPECT_EQ(c.is_tree, c.connected && c.edge_count + 1 == c.vertex_count);
        EXPECT_EQ(c.has_cycle, c.edge_count + c.components > c.vertex_count);
      }
  }
}

TEST(Gamma, PalindromeSymmetry) {
  const auto& L = bv16();
  for (std::size_t n = 0; n <= 10; ++n)
    for (const Word& w : L.factors(n)) {
      if (!is_palindrome(w)) continue;
      const ExtensionGraph g = gamma_graph(L, w);
      // Swapping sides and reversing each pair maps the edge set to itself.
      std::set<std::pair<std::string, std::string>> edges, swapped;
      for (auto [u, v] : g.edges) {
        const std::string a = g.vertex_label(u), b = g.vertex_label(v);
        edges.insert({a, b});
        swapped.insert({std::string(1, b[0]) + "-", std::string(1, a[0]) + "+"});
      }
      EXPECT_EQ(edges, swapped) << w.str();
    }
}
