#include "qgm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace qgm {

IndependenceFamily enumerate_family(const Matroid& m) {
  require_enumerable(m, "enumerate_family");
  IndependenceFamily fam;
  fam.ground = m.elements();
  Mask full = m.full_mask();
  for (Mask x = 0;; ++x) {
    if (m.independent(x)) fam.sets.push_back(x);
    if (x == full) break;
  }
  return fam;
}

bool matroids_equal(const Matroid& a, const Matroid& b) {
  if (a.elements() != b.elements())
    throw Error("matroids_equal: ground sets differ");
  require_enumerable(a, "matroids_equal");
  Mask full = a.full_mask();
  for (Mask x = 0;; ++x) {
    if (a.independent(x) != b.independent(x)) return false;
    if (x == full) break;
  }
  return true;
}

FamilyMatroid::FamilyMatroid(const Matroid& source)
    : Matroid(source.elements()) {
  require_enumerable(source, "FamilyMatroid");
  table_.resize(std::size_t{1} << size());
  Mask full = full_mask();
  for (Mask x = 0;; ++x) {
    table_[x] = source.independent(x);
    if (x == full) break;
  }
}

FamilyMatroid::FamilyMatroid(std::vector<std::string> elements,
                             std::vector<Mask> family)
    : Matroid(std::move(elements)) {
  if (size() > kEnumerationCap)
    throw CapError("FamilyMatroid: ground set exceeds the enumeration cap");
  table_.assign(std::size_t{1} << size(), false);
  for (Mask x : family) table_[x] = true;
}

namespace {

int slot_id(int i, int j, int nv) {
  // Pairs (i,j), i <= j < nv, ordered lexicographically.
  int id = 0;
  for (int a = 0; a < i; ++a) id += nv - a;
  return id + (j - i);
}

std::vector<std::pair<int, int>> slot_list(int nv) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < nv; ++i)
    for (int j = i; j < nv; ++j) slots.emplace_back(i, j);
  return slots;
}

// Slot permutations induced by all vertex permutations.
std::vector<std::vector<int>> slot_permutations(int nv) {
  std::vector<int> perm(nv);
  for (int i = 0; i < nv; ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  std::vector<std::pair<int, int>> slots = slot_list(nv);
  do {
    std::vector<int> sp(slots.size());
    for (size_t s = 0; s < slots.size(); ++s) {
      int i = perm[slots[s].first], j = perm[slots[s].second];
      sp[s] = slot_id(std::min(i, j), std::max(i, j), nv);
    }
    out.push_back(std::move(sp));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

MultiGraph graph_from_counts(int nv, const std::vector<int>& counts) {
  std::vector<std::string> verts;
  for (int v = 0; v < nv; ++v) verts.push_back("v" + std::to_string(v + 1));
  std::vector<std::pair<int, int>> slots = slot_list(nv);
  std::vector<Edge> edges;
  int next = 0;
  for (size_t s = 0; s < slots.size(); ++s)
    for (int k = 0; k < counts[s]; ++k)
      edges.push_back({"e" + std::to_string(++next), verts[slots[s].first],
                       verts[slots[s].second]});
  return MultiGraph::build(std::move(verts), std::move(edges));
}

void graphs_on(int nv, int max_edges, std::vector<MultiGraph>* out) {
  if (nv == 0) {
    out->push_back(MultiGraph());
    return;
  }
  std::vector<std::pair<int, int>> slots = slot_list(nv);
  std::vector<std::vector<int>> perms = slot_permutations(nv);
  std::vector<int> counts(slots.size(), 0);

  std::function<void(size_t, int)> rec = [&](size_t s, int budget) {
    if (s == slots.size()) {
      int total = 0;
      std::vector<bool> covered(nv, false);
      for (size_t t = 0; t < slots.size(); ++t) {
        total += counts[t];
        if (counts[t] > 0)
          covered[slots[t].first] = covered[slots[t].second] = true;
      }
      bool all_covered = true;
      for (int v = 0; v < nv; ++v)
        if (!covered[v]) all_covered = false;
      if (!all_covered && !(nv == 1 && total == 0)) return;
      // Canonical representative under vertex relabelling.
      for (const std::vector<int>& sp : perms) {
        std::vector<int> permuted(counts.size());
        for (size_t t = 0; t < counts.size(); ++t)
          permuted[sp[t]] = counts[t];
        if (permuted < counts) return;
      }
      out->push_back(graph_from_counts(nv, counts));
      return;
    }
    for (int c = 0; c <= budget; ++c) {
      counts[s] = c;
      rec(s + 1, budget - c);
    }
    counts[s] = 0;
  };
  rec(0, max_edges);
}

}  // namespace

std::vector<MultiGraph> all_multigraphs(int max_vertices, int max_edges) {
  if (max_vertices > 6) throw Error("all_multigraphs: at most 6 vertices");
  std::vector<MultiGraph> out;
  for (int nv = 0; nv <= max_vertices; ++nv) graphs_on(nv, max_edges, &out);
  return out;
}

std::vector<MultiGraph> connected_multigraphs(int max_vertices,
                                              int max_edges) {
  std::vector<MultiGraph> out;
  for (MultiGraph& g : all_multigraphs(max_vertices, max_edges))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

std::vector<BiasedGraph> biased_corpus(const CorpusOptions& opt) {
  std::vector<BiasedGraph> out;
  std::vector<MultiGraph> graphs =
      all_multigraphs(opt.max_vertices, opt.max_edges);
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    const MultiGraph& g = graphs[gi];
    std::vector<Cycle> cycles = enumerate_cycles(g);
    int nc = static_cast<int>(cycles.size());
    std::vector<std::uint64_t> subsets;
    if (nc <= opt.exhaustive_cycle_limit) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << nc); ++s)
        subsets.push_back(s);
    } else {
      std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * (gi + 1)));
      subsets.push_back(0);
      subsets.push_back((std::uint64_t{1} << nc) - 1);
      for (int k = 0; k < opt.sampled_subsets; ++k)
        subsets.push_back(rng() & ((std::uint64_t{1} << nc) - 1));
      std::sort(subsets.begin(), subsets.end());
      subsets.erase(std::unique(subsets.begin(), subsets.end()),
                    subsets.end());
    }
    for (std::uint64_t s : subsets) {
      std::vector<std::set<std::string>> b;
      for (int c = 0; c < nc; ++c)
        if (s & (std::uint64_t{1} << c)) b.push_back(cycles[c].edges);
      if (!has_theta_property(g, b)) continue;
      out.push_back(BiasedGraph::build(g, std::move(b)));
    }
  }
  return out;
}

std::vector<CorpusPair> framework_corpus(const CorpusOptions& opt) {
  std::vector<CorpusPair> out;
  std::vector<BiasedGraph> corpus = biased_corpus(opt);
  for (size_t i = 0; i < corpus.size(); ++i) {
    const BiasedGraph& bg = corpus[i];
    std::string tag = "#" + std::to_string(i) + " v" +
                      std::to_string(bg.graph().vertex_count()) + "e" +
                      std::to_string(bg.graph().edge_count()) + " |B|=" +
                      std::to_string(bg.balanced().size());
    out.push_back({{bg.graph(), std::make_shared<FamilyMatroid>(
                                    *fm_matroid(bg))},
                   "fm " + tag});
    out.push_back({{bg.graph(), std::make_shared<FamilyMatroid>(
                                    *lm_matroid(bg))},
                   "lm " + tag});
  }
  std::vector<MultiGraph> graphs =
      all_multigraphs(opt.max_vertices, opt.max_edges);
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    out.push_back({{graphs[gi], std::make_shared<FamilyMatroid>(
                                    GraphicMatroid(graphs[gi]))},
                   "graphic #" + std::to_string(gi)});
  }
  return out;
}

namespace {

// G with one loop-edge per element of m, each on its own vertex.
MultiGraph all_loops_graph(const Matroid& m) {
  std::vector<std::string> verts;
  std::vector<Edge> edges;
  int i = 0;
  for (const std::string& e : m.elements()) {
    std::string v = "v" + std::to_string(++i);
    verts.push_back(v);
    edges.push_back({e, v, v});
  }
  return MultiGraph::build(std::move(verts), std::move(edges));
}

// Disjoint cycles with the given part sizes (1 = loop, 2 = parallel pair).
MultiGraph cycle_collection(const std::vector<int>& parts) {
  std::vector<std::string> verts;
  std::vector<Edge> edges;
  int ev = 0, vv = 0;
  for (int len : parts) {
    std::vector<std::string> ring;
    for (int k = 0; k < std::max(1, len == 2 ? 2 : len); ++k)
      ring.push_back("v" + std::to_string(++vv));
    if (len == 1) {
      edges.push_back({"e" + std::to_string(++ev), ring[0], ring[0]});
    } else if (len == 2) {
      edges.push_back({"e" + std::to_string(++ev), ring[0], ring[1]});
      edges.push_back({"e" + std::to_string(++ev), ring[0], ring[1]});
    } else {
      for (int k = 0; k < len; ++k)
        edges.push_back({"e" + std::to_string(++ev), ring[k],
                         ring[(k + 1) % len]});
    }
    verts.insert(verts.end(), ring.begin(), ring.end());
  }
  return MultiGraph::build(std::move(verts), std::move(edges));
}

void partitions_of(int m, std::vector<std::vector<int>>* out) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out->push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
}

MultiGraph k4() {
  return MultiGraph::build(
      {"w", "x", "y", "z"},
      {{"e1", "w", "x"}, {"e2", "w", "y"}, {"e3", "w", "z"},
       {"e4", "x", "y"}, {"e5", "x", "z"}, {"e6", "y", "z"}});
}

}  // namespace

std::vector<CorpusPair> weak_only_corpus(const CorpusOptions& opt) {
  std::vector<CorpusPair> out;

  std::vector<std::pair<MatroidPtr, std::string>> zoo;
  zoo.emplace_back(std::make_shared<UniformMatroid>(1, 3), "U(1,3)");
  zoo.emplace_back(std::make_shared<UniformMatroid>(2, 3), "U(2,3)");
  zoo.emplace_back(std::make_shared<UniformMatroid>(2, 4), "U(2,4)");
  zoo.emplace_back(std::make_shared<UniformMatroid>(3, 5), "U(3,5)");
  zoo.emplace_back(std::make_shared<GraphicMatroid>(k4()), "M(K4)");
  zoo.emplace_back(vamos(), "Vamos");
  for (const auto& [m, name] : zoo) {
    out.push_back({{all_loops_graph(*m), std::make_shared<FamilyMatroid>(*m)},
                   "all-loops " + name});
  }

  for (int m = 2; m <= std::max(3, opt.max_edges); ++m) {
    std::vector<std::vector<int>> parts;
    partitions_of(m, &parts);
    for (size_t pi = 0; pi < parts.size(); ++pi) {
      MultiGraph g = cycle_collection(parts[pi]);
      UniformMatroid circuit(m - 1, g.edge_labels());
      out.push_back({{g, std::make_shared<FamilyMatroid>(circuit)},
                     "cycle-collection m=" + std::to_string(m) + " #" +
                         std::to_string(pi)});
    }
  }
  return out;
}

std::vector<CorpusPair> sample_pairs(const std::vector<CorpusPair>& pairs,
                                     std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> idx(pairs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  std::size_t take = std::min(count, idx.size());
  for (std::size_t i = 0; i < take; ++i) {
    std::size_t j = i + rng() % (idx.size() - i);
    std::swap(idx[i], idx[j]);
  }
  std::vector<CorpusPair> out;
  for (std::size_t i = 0; i < take; ++i) out.push_back(pairs[idx[i]]);
  return out;
}

std::string canonical_graph_key(const MultiGraph& g) {
  int nv = g.vertex_count();
  if (nv > 8) throw Error("canonical_graph_key: too many vertices");
  std::vector<int> perm(nv);
  for (int i = 0; i < nv; ++i) perm[i] = i;
  std::map<std::string, int> vidx;
  for (int i = 0; i < nv; ++i) vidx[g.vertices()[i]] = i;
  std::string best;
  do {
    std::ostringstream key;
    for (const Edge& e : g.edges()) {
      int a = perm[vidx[e.u]], b = perm[vidx[e.v]];
      key << e.label << ":" << std::min(a, b) << "," << std::max(a, b) << ";";
    }
    std::string s = key.str();
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(nv) + "|" + best;
}

}  // namespace qgm
