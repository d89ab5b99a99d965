#ifndef QGM_BIASED_HPP
#define QGM_BIASED_HPP

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qgm/framework.hpp"
#include "qgm/graph.hpp"
#include "qgm/matroid.hpp"

namespace qgm {

// True iff no theta of g has exactly two of its three cycles in b. Members
// of b must be cycle edge-sets of g.
bool has_theta_property(const MultiGraph& g,
                        const std::vector<std::set<std::string>>& b);

// A graph together with a theta-closed set of balanced cycles. Validated on
// construction.
class BiasedGraph {
 public:
  static BiasedGraph build(MultiGraph g,
                           std::vector<std::set<std::string>> balanced);

  const MultiGraph& graph() const { return graph_; }
  const std::vector<std::set<std::string>>& balanced() const {
    return balanced_;
  }
  bool is_balanced(const std::set<std::string>& cycle_edges) const;

 private:
  MultiGraph graph_;
  std::vector<std::set<std::string>> balanced_;  // sorted edge-sets
};

// FM(G,B): independent iff no balanced cycle is contained and every
// component H of G[I] has |E(H)| <= |V(H)|.
MatroidPtr fm_matroid(const BiasedGraph& bg);

// LM(G,B): independent iff no balanced cycle is contained and G[I] has at
// most one cycle.
MatroidPtr lm_matroid(const BiasedGraph& bg);

// FM(G+, B) for G+ = G plus a loop-edge at every vertex; those loops form a
// basis spanning each element by at most two of its members, and the support
// graph reconstructed from the spanning circuits returns G (with matroid
// loops parked at the lowest vertex).
struct FramedWitness {
  MatroidPtr extended;
  std::vector<std::string> basis;  // loop element per vertex, vertex order
  MultiGraph support;
};

FramedWitness framed_extension(const BiasedGraph& bg);

// LM(G+, B) for G+ = G plus one loop-edge at the lowest vertex; deleting the
// new element gives LM(G,B) and contracting it gives M(G).
struct LiftWitness {
  MatroidPtr extended;
  std::string element;
};

LiftWitness lift_extension(const BiasedGraph& bg);

// Every circuit of M induces a connected subgraph; equivalently M is
// FM(G, balanced cycles). Expects a framework; enumeration-capped.
bool is_fm_of(const FrameworkPair& p);

// Every pair of vertex-disjoint cycles of G is dependent in M; then M is
// LM(G, balanced cycles). Expects a framework; enumeration-capped.
bool is_lm_of(const FrameworkPair& p);

enum class LoopEdgeCase { kLift, kFrame };

// For a framework of a 3-connected matroid with a loop-edge e at v:
// LIFT when e lies in cl(E(G-v)), FRAME otherwise.
LoopEdgeCase decide_loop_edge_case(const FrameworkPair& p,
                                   const std::string& loop_edge);

}  // namespace qgm

#endif  // QGM_BIASED_HPP
