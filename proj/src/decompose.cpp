#include "qgm/decompose.hpp"

#include <algorithm>

#include "qgm/matroid.hpp"

namespace qgm {

Decomposition frame_or_lift_decomposition(const PrimeFieldMatrix& a,
                                          const MultiGraph& g) {
  LinearMatroid m(a);
  if (g.edge_labels() != m.elements())
    throw Error("decomposition: graph edges and matrix columns differ");

  Mask full = m.full_mask();
  std::vector<std::vector<std::uint8_t>> rows;
  for (const std::string& v : g.vertices()) {
    Mask star = m.mask_of(g.edges_at(v));
    Mask cstar = full & ~m.closure(full & ~star);
    if (cstar == 0)
      throw Error("decomposition: empty vertex cocircuit at '" + v +
                  "' (is the framework strong?)");
    std::optional<std::vector<std::uint8_t>> w =
        rowspace_vector_with_support(a, m.labels_of(cstar));
    if (!w)
      throw Error("decomposition: no row-space vector supported on the "
                  "cocircuit of '" + v + "' (is the framework strong?)");
    // Cocircuit minimality forces the support to be all of C*.
    for (int c = 0; c < a.cols(); ++c) {
      bool in_cstar = (cstar >> m.index_of(a.col_labels()[c])) & 1;
      if (((*w)[c] != 0) != in_cstar)
        throw Error("decomposition: extracted row support differs from the "
                    "vertex cocircuit at '" + v + "'");
    }
    rows.push_back(std::move(*w));
  }

  std::vector<std::uint8_t> entries;
  for (const std::vector<std::uint8_t>& r : rows)
    entries.insert(entries.end(), r.begin(), r.end());
  PrimeFieldMatrix b = PrimeFieldMatrix::build(a.p(), g.vertices(),
                                               a.col_labels(),
                                               std::move(entries));

  // The incidence pattern of the claim: nonzero exactly at the endpoints.
  for (int c = 0; c < b.cols(); ++c) {
    const Edge& e = g.edge(b.col_labels()[c]);
    if (e.is_loop()) continue;
    for (int r = 0; r < b.rows(); ++r) {
      bool incident = g.vertices()[r] == e.u || g.vertices()[r] == e.v;
      if ((b.at(r, c) != 0) != incident)
        throw Error("decomposition: vertex-row matrix violates the "
                    "incidence pattern at edge '" + e.label + "'");
    }
  }

  int rank_a = gf_rank(a);
  int rank_b = gf_rank(b);
  if (rank_b == rank_a) return {DecompositionTag::kFrame, std::move(b)};
  if (rank_b == rank_a - 1) return {DecompositionTag::kLift, std::move(b)};
  throw Error("decomposition: rank(B) is neither rank(A) nor rank(A)-1");
}

}  // namespace qgm
