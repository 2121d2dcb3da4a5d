#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "defectkit/word.hpp"

namespace defectkit {

class Morphism;

/// Online palindromic tree (eertree). One node per distinct non-empty
/// palindromic factor of the letters appended so far, plus the two roots of
/// length -1 and 0.
class Eertree {
 public:
  using NodeId = std::int32_t;
  static constexpr NodeId kNone = -1;
  static constexpr NodeId kImaginaryRoot = 0;  // length -1
  static constexpr NodeId kEmptyRoot = 1;      // length 0

  struct Node {
    std::int32_t length;
    NodeId suffix_link;
    std::size_t first_end;  // end position of the first occurrence
  };

  explicit Eertree(std::size_t alphabet_size);

  /// Appends a letter; returns the node created at this position, or kNone
  /// when the longest palindromic suffix was already present (a lacuna).
  NodeId append(Letter letter);

  std::size_t size() const noexcept { return text_.size(); }
  /// Number of distinct non-empty palindromes.
  std::size_t palindrome_count() const noexcept { return nodes_.size() - 2; }
  std::size_t lacuna_count() const noexcept { return lacunas_; }
  NodeId longest_suffix_node() const noexcept { return last_; }

  const Node& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
  std::size_t node_count_with_roots() const noexcept { return nodes_.size(); }
  NodeId edge(NodeId from, Letter letter) const noexcept {
    return next_[static_cast<std::size_t>(from) * alphabet_size_ + letter];
  }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }

 private:
  NodeId add_node(std::int32_t length, NodeId suffix_link, std::size_t end);
  NodeId climb(NodeId from, std::size_t pos, Letter letter) const;

  std::size_t alphabet_size_;
  std::vector<Node> nodes_;
  std::vector<NodeId> next_;
  std::vector<Letter> text_;
  NodeId last_ = kEmptyRoot;
  std::size_t lacunas_ = 0;
};

/// Palindromic defect summary of a finite word.
struct DefectReport {
  std::size_t word_length = 0;
  std::size_t palindrome_count_including_empty = 0;
  std::size_t defect = 0;
  std::vector<std::size_t> lacunas;
};

/// Read-only palindromic index of one word.
class PalIndex {
 public:
  static PalIndex build(const Word& w);

  const Word& word() const noexcept { return word_; }
  /// Distinct non-empty palindromic factors.
  std::size_t node_count() const noexcept { return tree_.palindrome_count(); }

  /// Longest palindromic suffix of w[0..i]; throws PreconditionError if i >= |w|.
  Word longest_palindromic_suffix(std::size_t i) const;
  std::size_t longest_palindromic_suffix_length(std::size_t i) const;
  /// True iff no new palindrome appeared at position i.
  bool is_lacuna(std::size_t i) const;
  std::vector<std::size_t> lacunas() const;

  WordSet palindromes() const;
  DefectReport defect_report() const;

  const Eertree& tree() const noexcept { return tree_; }

 private:
  PalIndex(Word w, Eertree tree, std::vector<Eertree::NodeId> created, std::vector<Eertree::NodeId> lps);

  Word word_;
  Eertree tree_;
  std::vector<Eertree::NodeId> created_at_;
  std::vector<Eertree::NodeId> lps_;
};

DefectReport defect(const Word& w);

/// (prefix length, defect of that prefix) of the fixed point of m starting
/// with `seed`, one entry per requested length, in the order given.
/// Requires m primitive and seed a growing fixed-point letter.
std::vector<std::pair<std::size_t, std::size_t>> defect_stream(const Morphism& m, Letter seed,
                                                                std::vector<std::size_t> lengths);

}  // namespace defectkit
