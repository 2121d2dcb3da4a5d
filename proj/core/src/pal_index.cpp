#include "defectkit/pal_index.hpp"

#include <algorithm>

#include "defectkit/errors.hpp"
#include "defectkit/morphism.hpp"

namespace defectkit {

Eertree::Eertree(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {
  if (alphabet_size_ == 0) throw PreconditionError("eertree needs a non-empty alphabet");
  add_node(-1, kImaginaryRoot, 0);
  add_node(0, kImaginaryRoot, 0);
}

Eertree::NodeId Eertree::add_node(std::int32_t length, NodeId suffix_link, std::size_t end) {
  nodes_.push_back(Node{length, suffix_link, end});
  next_.resize(nodes_.size() * alphabet_size_, kNone);
  return static_cast<NodeId>(nodes_.size() - 1);
}

// Follows suffix links from `from` until the palindrome can be extended by
// `letter` on both sides at position `pos`.
Eertree::NodeId Eertree::climb(NodeId from, std::size_t pos, Letter letter) const {
  NodeId cur = from;
  while (true) {
    const auto len = nodes_[static_cast<std::size_t>(cur)].length;
    const auto mirror = static_cast<std::ptrdiff_t>(pos) - len - 1;
    if (mirror >= 0 && text_[static_cast<std::size_t>(mirror)] == letter) return cur;
    cur = nodes_[static_cast<std::size_t>(cur)].suffix_link;
  }
}

Eertree::NodeId Eertree::append(Letter letter) {
  if (letter >= alphabet_size_) throw PreconditionError("letter outside eertree alphabet");
  const std::size_t pos = text_.size();
  text_.push_back(letter);

  const NodeId parent = climb(last_, pos, letter);
  const auto slot = static_cast<std::size_t>(parent) * alphabet_size_ + letter;
  if (next_[slot] != kNone) {
    last_ = next_[slot];
    ++lacunas_;
    return kNone;
  }

  const auto length = nodes_[static_cast<std::size_t>(parent)].length + 2;
  NodeId link = kEmptyRoot;
  if (length > 1) {
    const NodeId via = climb(nodes_[static_cast<std::size_t>(parent)].suffix_link, pos, letter);
    link = next_[static_cast<std::size_t>(via) * alphabet_size_ + letter];
  }
  const NodeId created = add_node(length, link, pos);
  next_[slot] = created;
  last_ = created;
  return created;
}

PalIndex::PalIndex(Word w, Eertree tree, std::vector<Eertree::NodeId> created,
                   std::vector<Eertree::NodeId> lps)
    : word_(std::move(w)), tree_(std::move(tree)), created_at_(std::move(created)), lps_(std::move(lps)) {}

PalIndex PalIndex::build(const Word& w) {
  Eertree tree(w.alphabet()->size());
  std::vector<Eertree::NodeId> created;
  std::vector<Eertree::NodeId> lps;
  created.reserve(w.size());
  lps.reserve(w.size());
  for (Letter l : w.letters()) {
    created.push_back(tree.append(l));
    lps.push_back(tree.longest_suffix_node());
  }
  return PalIndex(w, std::move(tree), std::move(created), std::move(lps));
}

std::size_t PalIndex::longest_palindromic_suffix_length(std::size_t i) const {
  if (i >= word_.size()) {
    throw PreconditionError("position " + std::to_string(i) + " outside word of length " +
                            std::to_string(word_.size()));
  }
  return static_cast<std::size_t>(tree_.node(lps_[i]).length);
}

Word PalIndex::longest_palindromic_suffix(std::size_t i) const {
  const auto len = longest_palindromic_suffix_length(i);
  return word_.slice(i + 1 - len, len);
}

bool PalIndex::is_lacuna(std::size_t i) const {
  if (i >= word_.size()) throw PreconditionError("position outside word");
  return created_at_[i] == Eertree::kNone;
}

std::vector<std::size_t> PalIndex::lacunas() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < created_at_.size(); ++i) {
    if (created_at_[i] == Eertree::kNone) out.push_back(i);
  }
  return out;
}

WordSet PalIndex::palindromes() const {
  WordSet out;
  for (std::size_t id = 2; id < tree_.node_count_with_roots(); ++id) {
    const auto& node = tree_.node(static_cast<Eertree::NodeId>(id));
    const auto len = static_cast<std::size_t>(node.length);
    out.insert(word_.slice(node.first_end + 1 - len, len));
  }
  return out;
}

DefectReport PalIndex::defect_report() const {
  DefectReport report;
  report.word_length = word_.size();
  report.palindrome_count_including_empty = node_count() + 1;
  report.lacunas = lacunas();
  report.defect = report.word_length + 1 - report.palindrome_count_including_empty;
  return report;
}

DefectReport defect(const Word& w) { return PalIndex::build(w).defect_report(); }

std::vector<std::pair<std::size_t, std::size_t>> defect_stream(const Morphism& m, Letter seed,
                                                                std::vector<std::size_t> lengths) {
  if (!is_primitive(m)) throw PreconditionError("defect_stream requires a primitive morphism");
  if (lengths.empty()) return {};
  const auto longest = *std::max_element(lengths.begin(), lengths.end());
  const Word prefix = fixed_point_prefix(m, seed, longest);

  std::vector<std::size_t> order(lengths.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });

  std::vector<std::pair<std::size_t, std::size_t>> out(lengths.size());
  Eertree tree(m.alphabet()->size());
  std::size_t fed = 0;
  for (auto idx : order) {
    while (fed < lengths[idx]) tree.append(prefix[fed++]);
    out[idx] = {lengths[idx], tree.lacuna_count()};
  }
  return out;
}

}  // namespace defectkit
