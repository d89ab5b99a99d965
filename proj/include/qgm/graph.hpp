#ifndef QGM_GRAPH_HPP
#define QGM_GRAPH_HPP

#include <array>
#include <set>
#include <string>
#include <vector>

#include "qgm/error.hpp"

namespace qgm {

// One edge of a multigraph. Endpoints are stored with u <= v so that equal
// graphs compare equal; u == v encodes a loop-edge.
struct Edge {
  std::string label;
  std::string u;
  std::string v;

  bool is_loop() const { return u == v; }
};

bool operator==(const Edge& a, const Edge& b);

// Finite multigraph with labelled vertices and edges. Loop-edges and parallel
// edges are permitted. Immutable after construction; all operations below
// return new graphs. Vertex and edge labels are opaque strings ordered
// lexicographically, which fixes a canonical form for printing and equality.
class MultiGraph {
 public:
  MultiGraph() = default;

  // Validates that edge endpoints are declared vertices and that edge labels
  // are unique, then canonicalizes (sorted vertices, label-sorted edges).
  static MultiGraph build(std::vector<std::string> vertices,
                          std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(const std::string& v) const;
  bool has_edge(const std::string& e) const;
  const Edge& edge(const std::string& label) const;

  std::vector<std::string> edge_labels() const;
  std::set<std::string> edge_label_set() const;

  // Edges incident with v, loops included (each loop listed once).
  std::set<std::string> edges_at(const std::string& v) const;
  std::set<std::string> loops_at(const std::string& v) const;
  // Loops count twice, as usual.
  int degree(const std::string& v) const;

  bool operator==(const MultiGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> vertices_;  // sorted
  std::vector<Edge> edges_;            // sorted by label, endpoints min-first
};

// Maximal connected subgraphs; isolated vertices form their own components.
// Ordered by smallest vertex label. The graph with no vertices has none.
std::vector<MultiGraph> components(const MultiGraph& g);

int component_count(const MultiGraph& g);

// G[X]: the subgraph with edge-set X and no isolated vertices.
MultiGraph edge_subgraph(const MultiGraph& g, const std::set<std::string>& x);

// G - e (vertices kept) and G - v (incident edges dropped).
MultiGraph delete_edge(const MultiGraph& g, const std::string& e);
MultiGraph delete_vertex(const MultiGraph& g, const std::string& v);

// G / e for a non-loop-edge e: the endpoints are identified (keeping the
// lexicographically smaller label) and e is removed; edges parallel to e
// become loop-edges.
MultiGraph contract_edge(const MultiGraph& g, const std::string& e);

// G o e for a loop-edge e at v: delete v and e, re-attach each non-loop edge
// vw as a loop-edge at w, and re-attach every remaining loop-edge at v as a
// loop-edge at the lowest-labelled remaining vertex. Fails if loops remain
// but no vertex survives.
MultiGraph contract_loop(const MultiGraph& g, const std::string& e);

bool is_connected(const MultiGraph& g);

// G - X is connected for every vertex set X with |X| < k. Convention: the
// graph with no vertices is connected, and |V(G)| > k is not required.
bool is_k_connected(const MultiGraph& g, int k);

// A cycle: connected subgraph in which every vertex has degree exactly two.
// A single loop-edge is a cycle, as is a pair of parallel edges.
struct Cycle {
  std::set<std::string> edges;
  std::set<std::string> vertices;
};

bool operator==(const Cycle& a, const Cycle& b);
bool operator<(const Cycle& a, const Cycle& b);

// True iff X is the edge-set of a cycle of g.
bool is_cycle_edge_set(const MultiGraph& g, const std::set<std::string>& x);

// All distinct cycles of g, ordered by (size, edge labels).
std::vector<Cycle> enumerate_cycles(const MultiGraph& g);

// A theta: 2-connected, loopless, exactly two vertices of degree three and
// all others of degree two. Contains exactly three cycles, which pairwise
// intersect in one of the three internally disjoint paths.
struct Theta {
  std::set<std::string> edges;
  std::array<std::string, 2> branch_vertices;
  std::array<std::set<std::string>, 3> paths;   // path edge-sets
  std::array<std::set<std::string>, 3> cycles;  // cycle edge-sets
};

std::vector<Theta> enumerate_thetas(const MultiGraph& g);

}  // namespace qgm

#endif  // QGM_GRAPH_HPP
