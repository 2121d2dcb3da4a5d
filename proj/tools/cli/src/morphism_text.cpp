#include "defectkit/cli/morphism_text.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace defectkit::cli {

MorphismParseError::MorphismParseError(const std::string& what, std::size_t rule, std::size_t column)
    : PreconditionError("rule " + std::to_string(rule) + ", column " + std::to_string(column) + ": " + what),
      rule_(rule),
      column_(column) {}

namespace {

struct Symbol {
  char c;
  std::size_t column;
};

struct Rule {
  std::size_t index;
  std::size_t column;  // first byte of the rule
  std::vector<Symbol> head;
  std::vector<Symbol> image;
  bool has_arrow = false;
  std::size_t after_arrow = 0;  // column just past '->'
};

}  // namespace

Morphism parse_morphism(std::string_view text) {
  std::vector<Rule> rules;
  rules.push_back({1, 1, {}, {}, false, 0});
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const std::size_t col = i + 1;
    Rule& r = rules.back();
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      rules.push_back({rules.size() + 1, col + 1, {}, {}, false, 0});
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      if (r.has_arrow) throw MorphismParseError("second '->' in one rule", r.index, col);
      r.has_arrow = true;
      r.after_arrow = col + 2;
      ++i;
      continue;
    }
    if (!std::isprint(static_cast<unsigned char>(c)))
      throw MorphismParseError("non-printable symbol", r.index, col);
    (r.has_arrow ? r.image : r.head).push_back({c, col});
  }

  if (rules.size() == 1 && rules[0].head.empty() && !rules[0].has_arrow)
    throw MorphismParseError("empty morphism", 1, 1);

  std::string symbols;
  for (const Rule& r : rules) {
    if (r.head.empty() && !r.has_arrow) throw MorphismParseError("empty rule", r.index, r.column);
    if (!r.has_arrow) throw MorphismParseError("missing '->'", r.index, r.head.back().column + 1);
    if (r.head.empty()) throw MorphismParseError("missing letter before '->'", r.index, r.column);
    if (r.head.size() > 1) throw MorphismParseError("letters must be single symbols", r.index, r.head[1].column);
    if (r.image.empty()) throw MorphismParseError("empty image", r.index, r.after_arrow);
    if (symbols.find(r.head.front().c) != std::string::npos)
      throw MorphismParseError(std::string("duplicate rule for '") + r.head.front().c + "'", r.index,
                               r.head.front().column);
    symbols.push_back(r.head.front().c);
  }

  AlphabetPtr alphabet = make_alphabet(symbols);
  std::vector<Word> images;
  for (const Rule& r : rules) {
    Word w(alphabet);
    for (const Symbol& s : r.image) {
      auto id = alphabet->find(s.c);
      if (!id) throw MorphismParseError(std::string("'") + s.c + "' has no rule", r.index, s.column);
      w.push_back(*id);
    }
    images.push_back(std::move(w));
  }
  return Morphism(alphabet, std::move(images));
}

std::string format_morphism(const Morphism& m) { return m.str(); }

}  // namespace defectkit::cli
