#include "defectkit/cli/corpus.hpp"

#include "defectkit/errors.hpp"

namespace defectkit::cli {

std::string z_word(std::size_t k) {
  if (k == 0) throw PreconditionError("z_word: k must be positive");
  const std::string ones(k, '1');
  const std::string fewer(k - 1, '1');
  return "0" + ones + "0" + fewer + "00" + fewer + "0" + ones + "0";
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> table = [] {
    std::vector<CorpusEntry> t;
    t.push_back({"fibonacci", "Fibonacci", "0->01,1->0", {false, DefectKind::Stable, 0, true}, false});
    t.push_back({"thue-morse", "Thue-Morse", "0->01,1->10", {false, DefectKind::Growing, 0, true}, false});
    for (std::size_t k = 2; k <= 5; ++k) {
      const std::string z = z_word(k);
      t.push_back({"z" + std::to_string(k), "periodic z^w with defect " + std::to_string(k), "0->" + z + ",1->" + z,
                   {true, DefectKind::Stable, k, false}, false});
    }
    // The non-marked exception: finite positive defect, aperiodic.
    t.push_back({"bucci-vaslet", "ternary finite positive defect", "a->aabcacba,b->aa,c->a",
                 {false, DefectKind::Stable, 1, false}, false});
    t.push_back({"aba-bab", "acyclic with periodic fixed point", "a->aba,b->bab", {true, DefectKind::Stable, 0, true},
                 false});
    t.push_back({"psi", "ternary coding of a Sturmian word", "a->aca,b->cab,c->b",
                 {false, DefectKind::Stable, 0, false}, false});
    t.push_back({"mu", "binary preimage of the ternary example", "a->ap,p->apaaaapaaaap",
                 {false, DefectKind::Stable, 0, true}, true});
    t.push_back({"conjugacy", "leftmost conjugate a->abab,b->bab", "a->abab,b->abb",
                 {false, DefectKind::Stable, 0, true}, false});
    return t;
  }();
  return table;
}

}  // namespace defectkit::cli
