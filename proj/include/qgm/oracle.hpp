#ifndef QGM_ORACLE_HPP
#define QGM_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qgm/biased.hpp"
#include "qgm/framework.hpp"
#include "qgm/matroid.hpp"

namespace qgm {

// Every independent set of a matroid, canonically ordered (ascending masks).
struct IndependenceFamily {
  std::vector<std::string> ground;
  std::vector<Mask> sets;
};

IndependenceFamily enumerate_family(const Matroid& m);

// Pointwise independence equality over all subsets. Ground sets must agree
// as labelled sets.
bool matroids_equal(const Matroid& a, const Matroid& b);

// Truth-table wrapper: one-time full enumeration, then O(1) queries. Equal
// to its source pointwise by construction; used to speed up corpus sweeps.
class FamilyMatroid : public Matroid {
 public:
  explicit FamilyMatroid(const Matroid& source);
  FamilyMatroid(std::vector<std::string> elements, std::vector<Mask> family);
  bool independent(Mask x) const override { return table_[x]; }

 private:
  std::vector<bool> table_;
};

// ---- Instance generation -------------------------------------------------
//
// Corpus graphs are multigraphs up to vertex relabelling (loops and parallel
// edges allowed, no isolated vertices), with canonical labels v1..vk and
// e1..em. Generation is deterministic; sampling is seeded.

struct CorpusOptions {
  int max_vertices = 4;
  int max_edges = 7;
  std::uint64_t seed = 20250809;
  // Biased-graph subsets: exhaustive when a graph has at most this many
  // cycles, otherwise this many seeded random subsets are drawn.
  int exhaustive_cycle_limit = 6;
  int sampled_subsets = 20;
};

std::vector<MultiGraph> all_multigraphs(int max_vertices, int max_edges);
std::vector<MultiGraph> connected_multigraphs(int max_vertices, int max_edges);

// All theta-property biased graphs over the corpus graphs.
std::vector<BiasedGraph> biased_corpus(const CorpusOptions& opt);

struct CorpusPair {
  FrameworkPair pair;
  std::string origin;  // e.g. "fm v3e5#12 B=2", for replaying failures
};

// Framework pairs: (G, FM(G,B)) and (G, LM(G,B)) over the biased corpus,
// plus graphic pairs (G, M(G)). Matroids are wrapped as FamilyMatroid.
std::vector<CorpusPair> framework_corpus(const CorpusOptions& opt);

// Weak-framework pairs that are not frameworks: all-loop graphs paired with
// arbitrary small matroids, and disjoint-cycle graphs paired with single
// circuits U_{m-1,m}.
std::vector<CorpusPair> weak_only_corpus(const CorpusOptions& opt);

// Deterministic seeded sample without replacement.
std::vector<CorpusPair> sample_pairs(const std::vector<CorpusPair>& pairs,
                                     std::size_t count, std::uint64_t seed);

// Canonical key of a graph under vertex relabelling (edge labels fixed).
std::string canonical_graph_key(const MultiGraph& g);

}  // namespace qgm

#endif  // QGM_ORACLE_HPP
