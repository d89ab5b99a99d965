#include "qgm/biased.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace qgm {

namespace {

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const std::string& x : s) {
    if (!out.empty()) out += " ";
    out += x;
  }
  return out;
}

}  // namespace

bool has_theta_property(const MultiGraph& g,
                        const std::vector<std::set<std::string>>& b) {
  std::set<std::set<std::string>> members;
  for (const std::set<std::string>& c : b) {
    if (!is_cycle_edge_set(g, c))
      throw Error("has_theta_property: {" + join(c) + "} is not a cycle");
    members.insert(c);
  }
  for (const Theta& t : enumerate_thetas(g)) {
    int count = 0;
    for (const std::set<std::string>& c : t.cycles)
      if (members.count(c)) ++count;
    if (count == 2) return false;
  }
  return true;
}

BiasedGraph BiasedGraph::build(MultiGraph g,
                               std::vector<std::set<std::string>> balanced) {
  std::sort(balanced.begin(), balanced.end());
  balanced.erase(std::unique(balanced.begin(), balanced.end()),
                 balanced.end());
  if (!has_theta_property(g, balanced))
    throw Error("biased graph violates the theta-property");
  BiasedGraph bg;
  bg.graph_ = std::move(g);
  bg.balanced_ = std::move(balanced);
  return bg;
}

bool BiasedGraph::is_balanced(const std::set<std::string>& cycle_edges) const {
  return std::binary_search(balanced_.begin(), balanced_.end(), cycle_edges);
}

namespace {

// Shared skeleton of the two Zaslavsky oracles: balanced cycles as element
// masks plus the edge-endpoint geometry needed for component counting.
class BiasedMatroidBase : public Matroid {
 public:
  explicit BiasedMatroidBase(const BiasedGraph& bg)
      : Matroid(bg.graph().edge_labels()), nv_(bg.graph().vertex_count()) {
    const MultiGraph& g = bg.graph();
    std::map<std::string, int> vidx;
    for (int i = 0; i < nv_; ++i) vidx[g.vertices()[i]] = i;
    for (const std::string& label : elements()) {
      const Edge& e = g.edge(label);
      ends_.emplace_back(vidx[e.u], vidx[e.v]);
    }
    for (const std::set<std::string>& c : bg.balanced())
      balanced_.push_back(mask_of(c));
  }

 protected:
  bool contains_balanced(Mask x) const {
    for (Mask b : balanced_)
      if ((b & x) == b) return true;
    return false;
  }

  int nv_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<Mask> balanced_;
};

class FrameMatroid : public BiasedMatroidBase {
 public:
  using BiasedMatroidBase::BiasedMatroidBase;

  // Independent iff no balanced cycle is contained and every component H of
  // G[I] has |E(H)| <= |V(H)|.
  bool independent(Mask x) const override {
    if (contains_balanced(x)) return false;
    std::array<int, 16> parent{};
    for (int v = 0; v < nv_; ++v) parent[v] = v;
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::array<bool, 16> touched{};
    for (int i = 0; i < size(); ++i) {
      if (!(x & (Mask{1} << i))) continue;
      touched[ends_[i].first] = touched[ends_[i].second] = true;
      parent[find(ends_[i].first)] = find(ends_[i].second);
    }
    std::array<int, 16> edges{}, verts{};
    for (int v = 0; v < nv_; ++v)
      if (touched[v]) ++verts[find(v)];
    for (int i = 0; i < size(); ++i)
      if (x & (Mask{1} << i)) ++edges[find(ends_[i].first)];
    for (int v = 0; v < nv_; ++v)
      if (touched[v] && find(v) == v && edges[v] > verts[v]) return false;
    return true;
  }
};

class LiftMatroid : public BiasedMatroidBase {
 public:
  using BiasedMatroidBase::BiasedMatroidBase;

  // Independent iff no balanced cycle is contained and G[I] has at most one
  // cycle, i.e. |I| - |V(I)| + c(G[I]) <= 1.
  bool independent(Mask x) const override {
    if (contains_balanced(x)) return false;
    std::array<int, 16> parent{};
    for (int v = 0; v < nv_; ++v) parent[v] = v;
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::array<bool, 16> touched{};
    int edges = 0;
    for (int i = 0; i < size(); ++i) {
      if (!(x & (Mask{1} << i))) continue;
      ++edges;
      touched[ends_[i].first] = touched[ends_[i].second] = true;
      parent[find(ends_[i].first)] = find(ends_[i].second);
    }
    int verts = 0, comps = 0;
    for (int v = 0; v < nv_; ++v) {
      if (!touched[v]) continue;
      ++verts;
      if (find(v) == v) ++comps;
    }
    return edges - verts + comps <= 1;
  }
};

}  // namespace

MatroidPtr fm_matroid(const BiasedGraph& bg) {
  if (bg.graph().vertex_count() > 16)
    throw Error("fm_matroid: too many vertices");
  return std::make_shared<FrameMatroid>(bg);
}

MatroidPtr lm_matroid(const BiasedGraph& bg) {
  if (bg.graph().vertex_count() > 16)
    throw Error("lm_matroid: too many vertices");
  return std::make_shared<LiftMatroid>(bg);
}

namespace {

std::string fresh_label(const MultiGraph& g, std::string base) {
  while (g.has_edge(base)) base = "@" + base;
  return base;
}

}  // namespace

FramedWitness framed_extension(const BiasedGraph& bg) {
  const MultiGraph& g = bg.graph();
  std::vector<Edge> edges = g.edges();
  std::vector<std::string> basis;
  for (const std::string& v : g.vertices()) {
    std::string label = fresh_label(g, "@" + v);
    basis.push_back(label);
    edges.push_back({label, v, v});
  }
  MultiGraph gplus = MultiGraph::build(g.vertices(), std::move(edges));
  BiasedGraph bgplus = BiasedGraph::build(gplus, bg.balanced());
  MatroidPtr mplus = fm_matroid(bgplus);

  std::set<std::string> vset(basis.begin(), basis.end());
  Mask vmask = mplus->mask_of(vset);
  if (mplus->rank(vmask) != static_cast<int>(basis.size()) ||
      mplus->rank() != static_cast<int>(basis.size()))
    throw Error("framed_extension: vertex loops do not form a basis");

  // Support graph: each non-basis element is spanned by a unique minimal
  // subset of the basis with at most two members.
  std::vector<Edge> support_edges;
  for (const std::string& e : mplus->elements()) {
    if (vset.count(e)) continue;
    Mask ebit = Mask{1} << mplus->index_of(e);
    if (!mplus->independent(ebit)) {
      // A loop of M+ carries no spanning circuit; park it at the lowest
      // vertex so the support graph stays well-formed.
      support_edges.push_back({e, g.vertices().front(), g.vertices().front()});
      continue;
    }
    std::vector<std::vector<std::string>> spanning;
    for (size_t i = 0; i < basis.size() && spanning.empty(); ++i) {
      Mask w = mplus->mask_of({basis[i]});
      if (mplus->closure(w) & ebit) spanning.push_back({g.vertices()[i]});
    }
    if (spanning.empty()) {
      for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
          Mask w = mplus->mask_of({basis[i], basis[j]});
          if (mplus->closure(w) & ebit)
            spanning.push_back({g.vertices()[i], g.vertices()[j]});
        }
      }
    }
    if (spanning.size() != 1)
      throw Error("framed_extension: element '" + e +
                  "' lacks a unique minimal spanning basis subset");
    if (spanning.front().size() == 1)
      support_edges.push_back({e, spanning.front()[0], spanning.front()[0]});
    else
      support_edges.push_back({e, spanning.front()[0], spanning.front()[1]});
  }
  for (size_t i = 0; i < basis.size(); ++i)
    support_edges.push_back({basis[i], g.vertices()[i], g.vertices()[i]});

  FramedWitness out;
  out.extended = mplus;
  out.basis = basis;
  out.support = MultiGraph::build(g.vertices(), std::move(support_edges));
  return out;
}

LiftWitness lift_extension(const BiasedGraph& bg) {
  const MultiGraph& g = bg.graph();
  if (g.empty()) throw Error("lift_extension: graph has no vertices");
  std::string label = fresh_label(g, "@lift");
  std::vector<Edge> edges = g.edges();
  const std::string& v = g.vertices().front();
  edges.push_back({label, v, v});
  MultiGraph gplus = MultiGraph::build(g.vertices(), std::move(edges));
  BiasedGraph bgplus = BiasedGraph::build(gplus, bg.balanced());
  return {lm_matroid(bgplus), label};
}

bool is_fm_of(const FrameworkPair& p) {
  const Matroid& m = *p.matroid;
  require_enumerable(m, "is_fm_of");
  for (Mask c : circuits(m))
    if (component_count(edge_subgraph(p.graph, m.labels_of(c))) != 1)
      return false;
  return true;
}

bool is_lm_of(const FrameworkPair& p) {
  const Matroid& m = *p.matroid;
  require_enumerable(m, "is_lm_of");
  std::vector<Cycle> cycles = enumerate_cycles(p.graph);
  for (size_t i = 0; i < cycles.size(); ++i) {
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      std::set<std::string> shared;
      std::set_intersection(cycles[i].vertices.begin(),
                            cycles[i].vertices.end(),
                            cycles[j].vertices.begin(),
                            cycles[j].vertices.end(),
                            std::inserter(shared, shared.begin()));
      if (!shared.empty()) continue;
      std::set<std::string> uni = cycles[i].edges;
      uni.insert(cycles[j].edges.begin(), cycles[j].edges.end());
      if (m.independent(m.mask_of(uni))) return false;
    }
  }
  return true;
}

LoopEdgeCase decide_loop_edge_case(const FrameworkPair& p,
                                   const std::string& loop_edge) {
  const Matroid& m = *p.matroid;
  const Edge& e = p.graph.edge(loop_edge);
  if (!e.is_loop())
    throw Error("decide_loop_edge_case: '" + loop_edge +
                "' is not a loop-edge");
  if (m.size() < 4) throw Error("decide_loop_edge_case: |M| < 4");
  if (!is_3_connected(m))
    throw Error("decide_loop_edge_case: matroid is not 3-connected");
  Mask ebit = Mask{1} << m.index_of(loop_edge);
  if (!m.independent(ebit))
    throw Error("decide_loop_edge_case: '" + loop_edge +
                "' is a loop of M, which a 3-connected matroid cannot have");
  Mask rest = m.full_mask() & ~m.mask_of(p.graph.edges_at(e.u));
  return (m.closure(rest) & ebit) ? LoopEdgeCase::kLift : LoopEdgeCase::kFrame;
}

}  // namespace qgm
