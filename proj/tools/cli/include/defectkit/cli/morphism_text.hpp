#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "defectkit/errors.hpp"
#include "defectkit/morphism.hpp"

namespace defectkit::cli {

/// Malformed morphism text. `rule` and `column` are 1-based; column counts
/// bytes of the whole input.
class MorphismParseError : public PreconditionError {
 public:
  MorphismParseError(const std::string& what, std::size_t rule, std::size_t column);
  std::size_t rule() const noexcept { return rule_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t rule_;
  std::size_t column_;
};

/// Parses `a->aabcacba,b->aa,c->a`. Letters are single printable symbols,
/// whitespace is ignored, and the alphabet is the rule heads in order.
Morphism parse_morphism(std::string_view text);

/// Inverse of parse_morphism.
std::string format_morphism(const Morphism& m);

}  // namespace defectkit::cli
