#ifndef QGM_DECOMPOSE_HPP
#define QGM_DECOMPOSE_HPP

#include "qgm/gfmatrix.hpp"
#include "qgm/graph.hpp"

namespace qgm {

enum class DecompositionTag { kFrame, kLift };

struct Decomposition {
  DecompositionTag tag;
  PrimeFieldMatrix witness;  // one row per vertex of g
};

// For a matrix a with independent rows whose column matroid has g as a
// strong framework: builds the vertex-row matrix B by extracting, for each
// vertex v, a row-space vector supported on the cocircuit E - cl(E(G-v)).
// B's rows then hit exactly the incident non-loop edges. rank(B) = rank(a)
// means M(a) = M(B) is a frame matroid (FRAME); otherwise rank(B) =
// rank(a) - 1 and M(B) = M(G), so M(a) is a lift of M(G) (LIFT).
Decomposition frame_or_lift_decomposition(const PrimeFieldMatrix& a,
                                          const MultiGraph& g);

}  // namespace qgm

#endif  // QGM_DECOMPOSE_HPP
