#ifndef QGM_FRAMEWORK_HPP
#define QGM_FRAMEWORK_HPP

#include <set>
#include <string>
#include <vector>

#include "qgm/graph.hpp"
#include "qgm/matroid.hpp"

namespace qgm {

// A graph and a matroid sharing their edge/element labels. Whether the pair
// actually is a (weak) framework is established by the checks below; the
// operations further down state which level they expect.
struct FrameworkPair {
  MultiGraph graph;
  MatroidPtr matroid;
};

struct VerifyReport {
  bool ok = true;
  std::string condition;  // "1".."4" or a certify condition "i".."iv"
  std::string witness;

  std::string to_string() const;
};

// Conditions (1)-(3): shared labels, r(E(H)) <= |V(H)| per component, and
// cl(E(G-v)) inside E(G-v) plus the loop-edges at v, for every vertex.
VerifyReport is_weak_framework(const MultiGraph& g, const Matroid& m);

// Conditions (1)-(4); (4) asks every circuit C to induce at most two
// components. Subject to the enumeration cap. The circuit list may be
// supplied when the caller already has it.
VerifyReport is_framework(const MultiGraph& g, const Matroid& m);
VerifyReport is_framework(const MultiGraph& g, const Matroid& m,
                          const std::vector<Mask>& circuit_list);

// Certificate check for 3-connected matroids: E(G) = E(M), G connected,
// r(M) <= |V(G)|, and the vertex-closure condition. Throws when M is not
// 3-connected, since only then does the certificate imply a framework.
VerifyReport certify_quasi_graphic(const MultiGraph& g, const Matroid& m);

// Cycles of G whose edge-set is a circuit of M. Expects a weak framework;
// inconsistencies (a cycle that is dependent but not a circuit, or a theta
// with exactly two balanced cycles) are reported as errors.
std::vector<Cycle> balanced_cycles(const FrameworkPair& p);
std::vector<std::set<std::string>> balanced_cycle_sets(const FrameworkPair& p);

enum class CircuitTag {
  kBalancedCycle,
  kConnectedThetaLike,  // connected, min degree >= 2, |C| = |V(C)| + 1
  kDisjointUnbalancedCycles,
};

struct CircuitClass {
  CircuitTag tag;
  std::set<std::string> witness_edges;
};

// Places a circuit of M in one of the three shapes, validating the shape's
// structural facts. Expects a weak framework.
CircuitClass classify_circuit(const FrameworkPair& p,
                              const std::set<std::string>& c);

// Weak framework with r(M) <= |V(G)| - c, c the number of components; when
// true, M is the cycle matroid of G.
bool is_cycle_matroid(const MultiGraph& g, const Matroid& m);

enum class MinorOp { kDelete, kContract };

// Single-step minor of a framework pair: (G-e, M\e), (G/e, M/e) for non-loop
// e, or (G o e, M/e) for a loop-edge e that is not a loop of M. The result
// is re-verified as a framework.
FrameworkPair framework_minor(const FrameworkPair& p, MinorOp op,
                              const std::string& e);

// For a framework with exactly two components, one of them a loop-component,
// and a connected matroid: a connected framework for the same matroid,
// obtained by adding a bridging coloop and contracting it. Identity when G
// is already connected.
FrameworkPair connectify(const FrameworkPair& p);

// True iff G is connected and r(E(G-v)) = r(M) - 1 for every vertex.
bool is_strong_framework(const MultiGraph& g, const Matroid& m);

// A strong framework for M (3-connected, |M| >= 4), reached by repeatedly
// rerouting the non-loop edges at a deficient vertex into loop-edges; the
// loop-edge count strictly increases, bounding the iteration.
FrameworkPair strengthen(const FrameworkPair& p);

// Exhaustive search for frameworks of M on at most max_vertices vertices
// (no isolated vertices), up to vertex relabelling. Canonical vertex labels
// v1..vk. An empty result is a desk-scale non-witness only.
std::vector<MultiGraph> find_frameworks(const Matroid& m, int max_vertices);

// Same search against conditions (i)-(iv) (connected weak frameworks).
std::vector<MultiGraph> find_certificates(const Matroid& m, int max_vertices);

}  // namespace qgm

#endif  // QGM_FRAMEWORK_HPP
