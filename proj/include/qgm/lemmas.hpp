#ifndef QGM_LEMMAS_HPP
#define QGM_LEMMAS_HPP

#include <string>
#include <vector>

#include "qgm/oracle.hpp"

namespace qgm {

struct LemmaResult {
  std::string name;
  long applicable = 0;  // pairs the lemma's hypotheses apply to
  long violations = 0;
  std::string first_witness;

  std::string to_string() const;
};

struct LemmaSuite {
  std::vector<LemmaResult> results;
  bool all_ok() const;
};

// Checks each structural lemma over the given corpus: weak_pairs must be
// weak frameworks (frameworks included), framework_pairs must be verified
// frameworks (used by the lemmas whose hypotheses need condition (4)).
LemmaSuite check_lemmas(const std::vector<CorpusPair>& weak_pairs,
                        const std::vector<CorpusPair>& framework_pairs);

}  // namespace qgm

#endif  // QGM_LEMMAS_HPP
