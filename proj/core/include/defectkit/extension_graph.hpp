#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "defectkit/language.hpp"

namespace defectkit {

enum class GraphKind { Gamma, Theta };

std::string_view to_string(GraphKind kind) noexcept;

/// Vertex of an extension graph: side -1 / +1 for Γ, 0 for Θ.
struct GraphVertex {
  Letter letter;
  int side;

  friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
  // Left side first, then by letter.
  friend std::strong_ordering operator<=>(const GraphVertex& a, const GraphVertex& b) {
    if (auto c = a.side <=> b.side; c != 0) return c;
    return a.letter <=> b.letter;
  }
};

/// Γ(w) or Θ(w), stored canonically: vertices sorted (left side first for
/// Γ), edges as sorted pairs of vertex indices with the smaller index first.
struct ExtensionGraph {
  GraphKind kind;
  Word source;
  std::vector<GraphVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::string vertex_label(std::size_t v) const;
};

struct GraphClassification {
  std::size_t components = 0;
  std::size_t edge_count = 0;
  std::size_t vertex_count = 0;
  bool connected = false;
  bool is_tree = false;
  bool has_cycle = false;
};

/// Bipartite graph of left against right extensions, edges E(w).
ExtensionGraph gamma_graph(const LanguageSnapshot& lang, const Word& w);

/// Graph on the extensions of a palindrome with edges the non-diagonal pairs
/// of E(w). Throws PreconditionError unless w is a palindrome and the
/// language is closed under reversal.
ExtensionGraph theta_graph(const LanguageSnapshot& lang, const Word& w);
/// As above, for callers that already know the language is reversal-closed.
ExtensionGraph theta_graph(const LanguageSnapshot& lang, const Word& w, bool reversal_closed);

GraphClassification classify(const ExtensionGraph& g);

/// Undirected DOT text. Byte-stable for a given graph.
std::string to_dot(const ExtensionGraph& g);

/// File-name friendly stem: "gamma_<w>" / "theta_<w>".
std::string graph_name(const ExtensionGraph& g);

enum class LemmaOutcome { Satisfied, HypothesisUnmet, Violated, NotApplicable };

std::string_view to_string(LemmaOutcome outcome) noexcept;

/// Outcome of the two connectivity lemmas for one factor:
///  - Γ(w) connected ⇒ m(w) >= 0, with cycle ⇔ m(w) > 0 and tree ⇔ m(w) = 0;
///  - w palindrome, Θ(w) connected ⇒ m(w) >= #E⁼(w) - 1, with cycle ⇔
///    strict inequality and tree ⇔ equality.
struct MultiplicityLemmaReport {
  Word word;
  long multiplicity = 0;
  long symmetric_minus_one = 0;
  GraphClassification gamma{};
  std::optional<GraphClassification> theta{};
  LemmaOutcome gamma_lemma = LemmaOutcome::NotApplicable;
  LemmaOutcome theta_lemma = LemmaOutcome::NotApplicable;
  /// |U| - |V| + 1 = m(w) for connected Γ(w).
  bool gamma_identity = true;
  /// 2|Θ edges| = |E(w)| - |E⁼(w)|.
  bool theta_identity = true;
};

MultiplicityLemmaReport check_multiplicity_lemmas(const LanguageSnapshot& lang, const Word& w);
MultiplicityLemmaReport check_multiplicity_lemmas(const LanguageSnapshot& lang, const Word& w,
                                                  bool reversal_closed);

}  // namespace defectkit
