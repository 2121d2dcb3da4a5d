#include "defectkit/extension_graph.hpp"

#include <algorithm>
#include <numeric>

#include "defectkit/errors.hpp"

namespace defectkit {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t index_of(const std::vector<GraphVertex>& vertices, GraphVertex v) {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  return static_cast<std::size_t>(it - vertices.begin());
}

void canonicalize(ExtensionGraph& g) {
  for (auto& [a, b] : g.edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
}

}  // namespace

std::string_view to_string(GraphKind kind) noexcept { return kind == GraphKind::Gamma ? "gamma" : "theta"; }

std::string_view to_string(LemmaOutcome outcome) noexcept {
  switch (outcome) {
    case LemmaOutcome::Satisfied:
      return "satisfied";
    case LemmaOutcome::HypothesisUnmet:
      return "hypothesis_unmet";
    case LemmaOutcome::Violated:
      return "violated";
    case LemmaOutcome::NotApplicable:
      return "not_applicable";
  }
  return "?";
}

std::string ExtensionGraph::vertex_label(std::size_t v) const {
  const auto& vertex = vertices.at(v);
  std::string label(1, source.alphabet()->symbol(vertex.letter));
  if (vertex.side < 0) label += '-';
  if (vertex.side > 0) label += '+';
  return label;
}

ExtensionGraph gamma_graph(const LanguageSnapshot& lang, const Word& w) {
  const auto ext = extensions(lang, w);
  ExtensionGraph g{GraphKind::Gamma, w, {}, {}};
  for (Letter a : ext.left) g.vertices.push_back({a, -1});
  for (Letter b : ext.right) g.vertices.push_back({b, +1});
  std::sort(g.vertices.begin(), g.vertices.end());
  for (const auto& [a, b] : ext.both) {
    g.edges.emplace_back(index_of(g.vertices, {a, -1}), index_of(g.vertices, {b, +1}));
  }
  canonicalize(g);
  return g;
}

ExtensionGraph theta_graph(const LanguageSnapshot& lang, const Word& w) {
  return theta_graph(lang, w, is_closed_under_reversal(lang));
}

ExtensionGraph theta_graph(const LanguageSnapshot& lang, const Word& w, bool reversal_closed) {
  if (!is_palindrome(w)) throw PreconditionError("Theta(w) needs a palindrome, got '" + w.str() + "'");
  if (!reversal_closed) throw PreconditionError("Theta(w) needs a language closed under reversal");
  const auto ext = extensions(lang, w);
  ExtensionGraph g{GraphKind::Theta, w, {}, {}};
  for (Letter b : ext.right) g.vertices.push_back({b, 0});
  for (const auto& [a, b] : ext.both) {
    if (a == b) continue;
    g.edges.emplace_back(index_of(g.vertices, {a, 0}), index_of(g.vertices, {b, 0}));
  }
  canonicalize(g);
  return g;
}

GraphClassification classify(const ExtensionGraph& g) {
  GraphClassification c;
  c.vertex_count = g.vertices.size();
  c.edge_count = g.edges.size();
  DisjointSets sets(c.vertex_count);
  c.components = c.vertex_count;
  for (const auto& [a, b] : g.edges) {
    if (sets.unite(a, b)) --c.components;
  }
  c.connected = c.components == 1;
  c.is_tree = c.connected && c.edge_count + 1 == c.vertex_count;
  c.has_cycle = c.edge_count + c.components > c.vertex_count;
  return c;
}

std::string graph_name(const ExtensionGraph& g) {
  return std::string(to_string(g.kind)) + "_" + g.source.str();
}

std::string to_dot(const ExtensionGraph& g) {
  std::string out = "graph \"" + graph_name(g) + "\" {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + g.vertex_label(v) + "\"];\n";
  }
  for (const auto& [a, b] : g.edges) {
    out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  }
  out += "}\n";
  return out;
}

MultiplicityLemmaReport check_multiplicity_lemmas(const LanguageSnapshot& lang, const Word& w) {
  return check_multiplicity_lemmas(lang, w, is_closed_under_reversal(lang));
}

MultiplicityLemmaReport check_multiplicity_lemmas(const LanguageSnapshot& lang, const Word& w,
                                                  bool reversal_closed) {
  const auto ext = extensions(lang, w);
  MultiplicityLemmaReport report{.word = w};
  report.multiplicity = ext.multiplicity;
  report.symmetric_minus_one = static_cast<long>(ext.symmetric.size()) - 1;

  report.gamma = classify(gamma_graph(lang, w));
  if (!report.gamma.connected) {
    report.gamma_lemma = LemmaOutcome::HypothesisUnmet;
  } else {
    const auto excess = static_cast<long>(report.gamma.edge_count) - static_cast<long>(report.gamma.vertex_count) + 1;
    report.gamma_identity = excess == ext.multiplicity;
    const bool ok = ext.multiplicity >= 0 && (report.gamma.has_cycle == (ext.multiplicity > 0)) &&
                    (report.gamma.is_tree == (ext.multiplicity == 0));
    report.gamma_lemma = ok && report.gamma_identity ? LemmaOutcome::Satisfied : LemmaOutcome::Violated;
  }

  if (is_palindrome(w) && reversal_closed) {
    const auto theta = theta_graph(lang, w, true);
    report.theta = classify(theta);
    report.theta_identity =
        2 * static_cast<long>(theta.edges.size()) ==
        static_cast<long>(ext.both.size()) - static_cast<long>(ext.symmetric.size());
    if (!report.theta->connected) {
      report.theta_lemma = LemmaOutcome::HypothesisUnmet;
    } else {
      const auto m = ext.multiplicity;
      const auto floor = report.symmetric_minus_one;
      const bool ok = m >= floor && (report.theta->has_cycle == (m > floor)) && (report.theta->is_tree == (m == floor));
      report.theta_lemma = ok && report.theta_identity ? LemmaOutcome::Satisfied : LemmaOutcome::Violated;
    }
  }
  return report;
}

}  // namespace defectkit
