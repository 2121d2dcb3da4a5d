#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "defectkit/verifier.hpp"

namespace defectkit::cli {

/// Stored triple for the regression table: periodic?, defect verdict, marked?
struct CorpusExpectation {
  bool periodic = false;
  DefectKind kind = DefectKind::Stable;
  std::size_t value = 0;
  bool marked = false;
};

struct CorpusEntry {
  std::string id;
  std::string description;
  std::string morphism;
  CorpusExpectation expected;
  /// Also run the coding decomposition check for this row.
  bool decomposition = false;
};

/// 0 1^k 0 1^(k-1) 0 0 1^(k-1) 0 1^k 0, whose periodic word has defect k.
std::string z_word(std::size_t k);

/// Built-in morphisms in fixed order.
const std::vector<CorpusEntry>& corpus();

}  // namespace defectkit::cli
