#include "qgm/lemmas.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace qgm {

std::string LemmaResult::to_string() const {
  std::ostringstream out;
  out << "lemma " << name << ": ";
  if (violations == 0)
    out << "OK (" << applicable << " instances)";
  else
    out << "FAIL (" << violations << "/" << applicable
        << " instances) first: " << first_witness;
  return out.str();
}

bool LemmaSuite::all_ok() const {
  for (const LemmaResult& r : results)
    if (r.violations > 0) return false;
  return true;
}

namespace {

// Index view of a pair: bit i of a Mask is both element i of the matroid and
// edge i of the graph (labels agree since both sides sort them).
struct PairView {
  const FrameworkPair* pair = nullptr;
  const std::string* origin = nullptr;
  const Matroid* m = nullptr;
  int n = 0;
  int nv = 0;
  Mask full = 0;
  std::vector<std::pair<int, int>> ends;
  std::vector<Mask> star;       // per vertex
  std::vector<Mask> loops;      // per vertex
  std::vector<Mask> circuit_list;
  std::vector<Mask> cycle_list;  // edge-sets of cycles of G
  int rank_full = 0;
  bool three_connected = false;
  bool connected = false;
  bool two_vertex_connected = false;
  int graph_components = 0;
};

struct GraphCache {
  std::vector<Mask> cycles;
  std::vector<std::array<Mask, 3>> theta_cycles;
  bool connected = false;
  bool two_vertex_connected = false;
  int components = 0;
};

std::string graph_key(const MultiGraph& g) {
  std::ostringstream key;
  for (const std::string& v : g.vertices()) key << "v" << v << ";";
  for (const Edge& e : g.edges())
    key << e.label << ":" << e.u << "," << e.v << ";";
  return key.str();
}

struct UnionFind {
  std::array<int, 16> parent{};
  std::array<bool, 16> touched{};
  explicit UnionFind(int nv) {
    for (int i = 0; i < nv; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void join(int a, int b) {
    touched[a] = touched[b] = true;
    parent[find(a)] = find(b);
  }
};

// Component decomposition of the subgraph G[x]: per-root edge masks.
std::vector<Mask> mask_components(const PairView& pv, Mask x) {
  UnionFind uf(pv.nv);
  for (int i = 0; i < pv.n; ++i)
    if (x & (Mask{1} << i)) uf.join(pv.ends[i].first, pv.ends[i].second);
  std::map<int, Mask> byroot;
  for (int i = 0; i < pv.n; ++i)
    if (x & (Mask{1} << i)) byroot[uf.find(pv.ends[i].first)] |= Mask{1} << i;
  std::vector<Mask> out;
  for (const auto& [root, mask] : byroot) out.push_back(mask);
  return out;
}

int touched_vertices(const PairView& pv, Mask x) {
  std::array<bool, 16> touched{};
  for (int i = 0; i < pv.n; ++i) {
    if (!(x & (Mask{1} << i))) continue;
    touched[pv.ends[i].first] = touched[pv.ends[i].second] = true;
  }
  int count = 0;
  for (int v = 0; v < pv.nv; ++v)
    if (touched[v]) ++count;
  return count;
}

bool mask_is_forest(const PairView& pv, Mask x) {
  UnionFind uf(pv.nv);
  for (int i = 0; i < pv.n; ++i) {
    if (!(x & (Mask{1} << i))) continue;
    if (uf.find(pv.ends[i].first) == uf.find(pv.ends[i].second)) return false;
    uf.join(pv.ends[i].first, pv.ends[i].second);
  }
  return true;
}

using Verdict = std::optional<std::string>;

Verdict lemma_component(const PairView& pv) {
  for (Mask he : mask_components(pv, pv.full)) {
    // (H, M|E(H)) must be a weak framework; condition (2) for H itself and
    // condition (3) restricted via cl_{M|X}(Y) = cl_M(Y) & X.
    if (pv.m->rank(he) > touched_vertices(pv, he))
      return "component rank exceeds vertex count";
    for (int v = 0; v < pv.nv; ++v) {
      if (!(pv.star[v] & he) && !(he == 0)) continue;
      Mask rest = he & ~pv.star[v];
      Mask allowed = rest | (pv.loops[v] & he);
      if ((pv.m->closure(rest) & he) & ~allowed)
        return "restricted closure escapes vertex " + std::to_string(v);
    }
  }
  return std::nullopt;
}

Verdict lemma_deletevertex(const PairView& pv) {
  for (int v = 0; v < pv.nv; ++v) {
    Mask star = pv.star[v];
    if (star == 0) continue;
    bool has_nonloop = (star & ~pv.loops[v]) != 0;
    if (!has_nonloop) continue;
    int r = pv.m->rank(pv.full & ~star);
    if (r >= pv.rank_full) return "deleting a vertex kept the rank";
    if (popcount(star) == 1 && pv.loops[v] == 0 && r != pv.rank_full - 1)
      return "degree-one vertex dropped rank by more than one";
  }
  return std::nullopt;
}

Verdict lemma_subgraph(const PairView& pv) {
  if (!pv.connected) return std::nullopt;
  int slack = pv.nv - pv.rank_full;
  if (pv.nv > 0 && 1 < slack) return "single-vertex subgraph violates bound";
  for (Mask x = 1; x <= pv.full && pv.full; ++x) {
    if (touched_vertices(pv, x) - pv.m->rank(x) < slack)
      return "edge subset " + std::to_string(x) + " violates bound";
    if (x == pv.full) break;
  }
  return std::nullopt;
}

Verdict lemma_restriction(const PairView& pv) {
  for (Mask x = 0;; ++x) {
    for (Mask he : mask_components(pv, x))
      if (pv.m->rank(he) > touched_vertices(pv, he))
        return "restriction breaks condition (2) on subset " +
               std::to_string(x);
    for (int v = 0; v < pv.nv; ++v) {
      if (!(pv.star[v] & x)) continue;
      Mask rest = x & ~pv.star[v];
      Mask allowed = rest | (pv.loops[v] & x);
      if ((pv.m->closure(rest) & x) & ~allowed)
        return "restriction breaks condition (3) on subset " +
               std::to_string(x);
    }
    if (x == pv.full) break;
  }
  return std::nullopt;
}

Verdict lemma_forest(const PairView& pv) {
  for (Mask x = 0;; ++x) {
    if (mask_is_forest(pv, x) && !pv.m->independent(x))
      return "forest " + std::to_string(x) + " is dependent";
    if (x == pv.full) break;
  }
  return std::nullopt;
}

Verdict lemma_dependentset(const PairView& pv) {
  for (Mask x = 0;; ++x) {
    if (popcount(x) > touched_vertices(pv, x) && pv.m->independent(x))
      return "overfull subset " + std::to_string(x) + " is independent";
    if (x == pv.full) break;
  }
  return std::nullopt;
}

bool mask_graphic_equal(const PairView& pv) {
  for (Mask x = 0;; ++x) {
    if (pv.m->independent(x) != mask_is_forest(pv, x)) return false;
    if (x == pv.full) break;
  }
  return true;
}

Verdict lemma_balanced(const PairView& pv) {
  bool all_balanced = true;
  for (Mask c : pv.cycle_list)
    if (pv.m->independent(c)) all_balanced = false;
  bool equal = mask_graphic_equal(pv);
  if (equal != all_balanced)
    return equal ? "M = M(G) with a non-balanced cycle"
                 : "all cycles balanced but M != M(G)";
  return std::nullopt;
}

Verdict lemma_theta(const PairView& pv,
                    const std::vector<std::array<Mask, 3>>& thetas) {
  for (const std::array<Mask, 3>& t : thetas) {
    int balanced = 0;
    for (Mask c : t)
      if (!pv.m->independent(c)) ++balanced;
    if (balanced == 2) return "theta with exactly two balanced cycles";
  }
  return std::nullopt;
}

Verdict lemma_circuit(const PairView& pv) {
  for (Mask c : pv.circuit_list) {
    std::vector<Mask> comps = mask_components(pv, c);
    std::array<int, 16> degree{};
    for (int i = 0; i < pv.n; ++i) {
      if (!(c & (Mask{1} << i))) continue;
      degree[pv.ends[i].first]++;
      degree[pv.ends[i].second]++;
    }
    bool all_deg2 = true, min_deg2 = true;
    for (int v = 0; v < pv.nv; ++v) {
      if (!(pv.star[v] & c)) continue;
      if (degree[v] != 2) all_deg2 = false;
      if (degree[v] < 2) min_deg2 = false;
    }
    if (all_deg2) {
      if (comps.size() == 1) continue;  // balanced cycle
      for (Mask comp : comps)
        if (!pv.m->independent(comp))
          return "sub-cycle of a circuit is dependent";
      continue;  // vertex-disjoint non-balanced cycles
    }
    if (comps.size() != 1) return "circuit with a non-cycle component";
    if (!min_deg2) return "connected circuit with a degree-one vertex";
    if (popcount(c) != touched_vertices(pv, c) + 1)
      return "connected circuit with |C| != |V(C)|+1";
    for (Mask cyc : pv.cycle_list)
      if ((cyc & c) == cyc && !pv.m->independent(cyc))
        return "balanced cycle inside a non-cycle circuit";
  }
  return std::nullopt;
}

Verdict lemma_conn(const PairView& pv) {
  for (Mask he : mask_components(pv, pv.full))
    if (pv.m->lambda(he) > 1) return "component with lambda above one";
  return std::nullopt;
}

bool is_loop_component_mask(const PairView& pv, Mask comp) {
  return popcount(comp) == 1 && touched_vertices(pv, comp) == 1;
}

Verdict lemma_conn2(const PairView& pv) {
  std::vector<Mask> comps = mask_components(pv, pv.full);
  bool isolated = pv.graph_components > static_cast<int>(comps.size());
  if (isolated) return std::nullopt;  // hypothesis excludes isolated vertices
  if (comps.size() <= 1) return std::nullopt;  // outcome (a)
  int loop_comps = 0;
  for (Mask comp : comps)
    if (is_loop_component_mask(pv, comp)) ++loop_comps;
  if (comps.size() == 2 && loop_comps >= 1) return std::nullopt;  // (b)
  if (loop_comps == static_cast<int>(comps.size())) return std::nullopt;  // (c)
  return "disconnected shape outside outcomes (a)-(c)";
}

Verdict lemma_circuit3(const PairView& pv) {
  for (Mask c : pv.circuit_list)
    if (mask_components(pv, c).size() > 2)
      return "circuit induces more than two components";
  return std::nullopt;
}

Verdict lemma_conn4(const PairView& pv) {
  if (!pv.two_vertex_connected) return "connected weak framework that is not "
                                       "2-connected";
  return std::nullopt;
}

Verdict lemma_strong(const PairView& pv) {
  try {
    FrameworkPair strong = strengthen(*pv.pair);
    if (!is_strong_framework(strong.graph, *strong.matroid))
      return "strengthen returned a non-strong framework";
  } catch (const Error& e) {
    return std::string("strengthen failed: ") + e.what();
  }
  return std::nullopt;
}

struct LemmaRun {
  LemmaResult result;
  std::function<Verdict(const PairView&)> check;
  std::function<bool(const PairView&)> applies;
};

}  // namespace

LemmaSuite check_lemmas(const std::vector<CorpusPair>& weak_pairs,
                        const std::vector<CorpusPair>& framework_pairs) {
  std::map<std::string, GraphCache> cache;
  auto view_of = [&](const CorpusPair& cp) {
    PairView pv;
    pv.pair = &cp.pair;
    pv.origin = &cp.origin;
    pv.m = cp.pair.matroid.get();
    pv.n = pv.m->size();
    pv.nv = cp.pair.graph.vertex_count();
    pv.full = pv.m->full_mask();
    std::map<std::string, int> vidx;
    for (int i = 0; i < pv.nv; ++i) vidx[cp.pair.graph.vertices()[i]] = i;
    pv.star.assign(pv.nv, 0);
    pv.loops.assign(pv.nv, 0);
    for (int i = 0; i < pv.n; ++i) {
      const Edge& e = cp.pair.graph.edge(pv.m->elements()[i]);
      int u = vidx[e.u], v = vidx[e.v];
      pv.ends.emplace_back(u, v);
      pv.star[u] |= Mask{1} << i;
      pv.star[v] |= Mask{1} << i;
      if (u == v) pv.loops[u] |= Mask{1} << i;
    }
    pv.circuit_list = circuits(*pv.m);
    pv.rank_full = pv.m->rank();
    pv.three_connected = is_3_connected(*pv.m);

    std::string key = graph_key(cp.pair.graph);
    auto it = cache.find(key);
    if (it == cache.end()) {
      GraphCache gc;
      for (const Cycle& c : enumerate_cycles(cp.pair.graph))
        gc.cycles.push_back(pv.m->mask_of(c.edges));
      for (const Theta& t : enumerate_thetas(cp.pair.graph))
        gc.theta_cycles.push_back({pv.m->mask_of(t.cycles[0]),
                                   pv.m->mask_of(t.cycles[1]),
                                   pv.m->mask_of(t.cycles[2])});
      gc.connected = is_connected(cp.pair.graph);
      gc.two_vertex_connected = is_k_connected(cp.pair.graph, 2);
      gc.components = component_count(cp.pair.graph);
      it = cache.emplace(key, std::move(gc)).first;
    }
    pv.cycle_list = it->second.cycles;
    pv.connected = it->second.connected;
    pv.two_vertex_connected = it->second.two_vertex_connected;
    pv.graph_components = it->second.components;
    return std::make_pair(pv, &it->second.theta_cycles);
  };

  auto always = [](const PairView&) { return true; };
  auto with_3conn4 = [](const PairView& pv) {
    return pv.three_connected && pv.n >= 4;
  };
  auto connected4 = [](const PairView& pv) {
    return pv.connected && pv.n >= 4;
  };

  std::vector<LemmaRun> runs;
  runs.push_back({{"component"}, lemma_component, always});
  runs.push_back({{"deletevertex"}, lemma_deletevertex, always});
  runs.push_back({{"subgraph"}, lemma_subgraph,
                  [](const PairView& pv) { return pv.connected; }});
  runs.push_back({{"restriction"}, lemma_restriction, always});
  runs.push_back({{"forest"}, lemma_forest, always});
  runs.push_back({{"dependentset"}, lemma_dependentset, always});
  runs.push_back({{"balanced"}, lemma_balanced, always});
  runs.push_back({{"theta"}, nullptr, always});  // handled inline (cache)
  runs.push_back({{"circuit"}, lemma_circuit, always});
  runs.push_back({{"conn"}, lemma_conn, always});
  runs.push_back({{"conn2"}, lemma_conn2, with_3conn4});
  runs.push_back({{"circuit3"}, lemma_circuit3, connected4});
  runs.push_back({{"conn4"}, lemma_conn4, [&](const PairView& pv) {
                    return pv.three_connected && pv.n >= 4 && pv.connected;
                  }});

  for (const CorpusPair& cp : weak_pairs) {
    auto [pv, thetas] = view_of(cp);
    for (LemmaRun& run : runs) {
      if (!run.applies(pv)) continue;
      ++run.result.applicable;
      Verdict v = run.check ? run.check(pv) : lemma_theta(pv, *thetas);
      if (v) {
        ++run.result.violations;
        if (run.result.first_witness.empty())
          run.result.first_witness = *v + " [" + cp.origin + "]";
      }
    }
  }

  LemmaRun strong_run{{"strong"}, lemma_strong, with_3conn4};
  for (const CorpusPair& cp : framework_pairs) {
    auto [pv, thetas] = view_of(cp);
    (void)thetas;
    if (!strong_run.applies(pv)) continue;
    ++strong_run.result.applicable;
    Verdict v = strong_run.check(pv);
    if (v) {
      ++strong_run.result.violations;
      if (strong_run.result.first_witness.empty())
        strong_run.result.first_witness = *v + " [" + cp.origin + "]";
    }
  }

  LemmaSuite suite;
  for (LemmaRun& run : runs) suite.results.push_back(std::move(run.result));
  suite.results.push_back(std::move(strong_run.result));
  return suite;
}

}  // namespace qgm
