#include "qgm/framework.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

namespace qgm {

std::string VerifyReport::to_string() const {
  if (ok) return "OK";
  return "FAIL (" + condition + ") " + witness;
}

namespace {

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const std::string& x : s) {
    if (!out.empty()) out += " ";
    out += x;
  }
  return out;
}

// Endpoint vertex indices per matroid element bit; valid once E(G) = E(M).
std::vector<std::pair<int, int>> bit_endpoints(const MultiGraph& g,
                                               const Matroid& m) {
  std::map<std::string, int> vidx;
  for (int i = 0; i < g.vertex_count(); ++i) vidx[g.vertices()[i]] = i;
  std::vector<std::pair<int, int>> ends;
  ends.reserve(m.size());
  for (const std::string& label : m.elements()) {
    const Edge& e = g.edge(label);
    ends.emplace_back(vidx.at(e.u), vidx.at(e.v));
  }
  return ends;
}

int mask_component_count(Mask x, const std::vector<std::pair<int, int>>& ends,
                         int nv) {
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<bool> touched(nv, false);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; x >> i; ++i) {
    if (!(x & (Mask{1} << i))) continue;
    auto [u, v] = ends[i];
    touched[u] = touched[v] = true;
    parent[find(u)] = find(v);
  }
  int count = 0;
  for (int v = 0; v < nv; ++v)
    if (touched[v] && find(v) == v) ++count;
  return count;
}

}  // namespace

VerifyReport is_weak_framework(const MultiGraph& g, const Matroid& m) {
  if (g.edge_labels() != m.elements())
    return {false, "1", "edge set and ground set differ"};

  for (const MultiGraph& h : components(g)) {
    Mask eh = m.mask_of(h.edge_label_set());
    if (m.rank(eh) > h.vertex_count())
      return {false, "2",
              "component containing vertex " + h.vertices().front() +
                  " has matroid rank above its vertex count"};
  }

  Mask full = m.full_mask();
  for (const std::string& v : g.vertices()) {
    Mask rest = full & ~m.mask_of(g.edges_at(v));
    Mask allowed = rest | m.mask_of(g.loops_at(v));
    Mask escape = m.closure(rest) & ~allowed;
    if (escape)
      return {false, "3",
              "vertex " + v + " captures element " +
                  *m.labels_of(escape).begin()};
  }
  return {};
}

VerifyReport is_framework(const MultiGraph& g, const Matroid& m) {
  require_enumerable(m, "is_framework");
  return is_framework(g, m, circuits(m));
}

VerifyReport is_framework(const MultiGraph& g, const Matroid& m,
                          const std::vector<Mask>& circuit_list) {
  VerifyReport weak = is_weak_framework(g, m);
  if (!weak.ok) return weak;
  std::vector<std::pair<int, int>> ends = bit_endpoints(g, m);
  for (Mask c : circuit_list) {
    if (mask_component_count(c, ends, g.vertex_count()) > 2)
      return {false, "4",
              "circuit " + join(m.labels_of(c)) +
                  " induces more than two components"};
  }
  return {};
}

VerifyReport certify_quasi_graphic(const MultiGraph& g, const Matroid& m) {
  if (!is_3_connected(m))
    throw Error(
        "certify_quasi_graphic: matroid is not 3-connected, certificate "
        "semantics unavailable");
  if (g.edge_labels() != m.elements())
    return {false, "i", "edge set and ground set differ"};
  if (!is_connected(g)) return {false, "ii", "graph is not connected"};
  if (m.rank() > g.vertex_count())
    return {false, "iii", "rank exceeds vertex count"};
  Mask full = m.full_mask();
  for (const std::string& v : g.vertices()) {
    Mask rest = full & ~m.mask_of(g.edges_at(v));
    Mask allowed = rest | m.mask_of(g.loops_at(v));
    Mask escape = m.closure(rest) & ~allowed;
    if (escape)
      return {false, "iv",
              "vertex " + v + " captures element " +
                  *m.labels_of(escape).begin()};
  }
  return {};
}

std::vector<Cycle> balanced_cycles(const FrameworkPair& p) {
  const Matroid& m = *p.matroid;
  std::vector<Cycle> out;
  std::set<std::set<std::string>> balanced_sets;
  for (const Cycle& c : enumerate_cycles(p.graph)) {
    Mask x = m.mask_of(c.edges);
    if (m.independent(x)) continue;
    if (!is_circuit(m, x))
      throw Error("balanced_cycles: cycle {" + join(c.edges) +
                  "} is dependent but not a circuit; the pair is not a weak "
                  "framework");
    balanced_sets.insert(c.edges);
    out.push_back(c);
  }
  for (const Theta& t : enumerate_thetas(p.graph)) {
    int count = 0;
    for (const std::set<std::string>& c : t.cycles)
      if (balanced_sets.count(c)) ++count;
    if (count == 2)
      throw Error("balanced_cycles: theta {" + join(t.edges) +
                  "} has exactly two balanced cycles; the pair is not a weak "
                  "framework");
  }
  return out;
}

std::vector<std::set<std::string>> balanced_cycle_sets(const FrameworkPair& p) {
  std::vector<std::set<std::string>> out;
  for (const Cycle& c : balanced_cycles(p)) out.push_back(c.edges);
  return out;
}

CircuitClass classify_circuit(const FrameworkPair& p,
                              const std::set<std::string>& c) {
  const Matroid& m = *p.matroid;
  Mask x = m.mask_of(c);
  if (!is_circuit(m, x))
    throw Error("classify_circuit: the given set is not a circuit of M");
  MultiGraph sub = edge_subgraph(p.graph, c);
  std::vector<MultiGraph> comps = components(sub);

  bool all_cycles = true;
  for (const MultiGraph& h : comps)
    for (const std::string& v : h.vertices())
      if (h.degree(v) != 2) all_cycles = false;

  if (all_cycles) {
    if (comps.size() == 1) return {CircuitTag::kBalancedCycle, c};
    for (const MultiGraph& h : comps) {
      if (!m.independent(m.mask_of(h.edge_label_set())))
        throw Error(
            "classify_circuit: a proper sub-cycle of a circuit is dependent; "
            "the pair is not a weak framework");
    }
    return {CircuitTag::kDisjointUnbalancedCycles, c};
  }

  if (comps.size() != 1)
    throw Error(
        "classify_circuit: disconnected circuit with a non-cycle component; "
        "the pair is not a weak framework");
  for (const std::string& v : sub.vertices())
    if (sub.degree(v) < 2)
      throw Error(
          "classify_circuit: connected circuit with a vertex of degree one; "
          "the pair is not a weak framework");
  if (static_cast<int>(c.size()) != sub.vertex_count() + 1)
    throw Error("classify_circuit: connected circuit with |C| != |V(C)|+1; "
                "the pair is not a weak framework");
  for (const Cycle& cyc : enumerate_cycles(sub))
    if (!m.independent(m.mask_of(cyc.edges)))
      throw Error("classify_circuit: balanced cycle inside a non-cycle "
                  "circuit; the pair is not a weak framework");
  return {CircuitTag::kConnectedThetaLike, c};
}

bool is_cycle_matroid(const MultiGraph& g, const Matroid& m) {
  if (!is_weak_framework(g, m).ok) return false;
  return m.rank() <= g.vertex_count() - component_count(g);
}

FrameworkPair framework_minor(const FrameworkPair& p, MinorOp op,
                              const std::string& e) {
  FrameworkPair out;
  if (op == MinorOp::kDelete) {
    out.graph = delete_edge(p.graph, e);
    out.matroid = minor(p.matroid, {e}, {});
  } else {
    const Edge& ed = p.graph.edge(e);
    if (ed.is_loop()) {
      if (!p.matroid->independent(std::set<std::string>{e}))
        throw Error("framework_minor: loop-edge '" + e +
                    "' is a loop of M; this contraction is excluded");
      out.graph = contract_loop(p.graph, e);
    } else {
      out.graph = contract_edge(p.graph, e);
    }
    out.matroid = minor(p.matroid, {}, {e});
  }
  VerifyReport rep = is_framework(out.graph, *out.matroid);
  if (!rep.ok)
    throw Error("framework_minor: result fails re-verification: " +
                rep.to_string());
  return out;
}

namespace {

bool is_connected_matroid(const Matroid& m) {
  require_enumerable(m, "connectivity check");
  if (m.size() <= 1) return true;
  Mask full = m.full_mask();
  for (Mask x = 1; x < full; ++x)
    if (m.lambda(x) <= 0) return false;
  return true;
}

bool is_loop_component(const MultiGraph& h) {
  return h.vertex_count() == 1 && h.edge_count() == 1 &&
         h.edges().front().is_loop();
}

MultiGraph strip_isolated(const MultiGraph& g) {
  std::vector<std::string> verts;
  for (const std::string& v : g.vertices())
    if (g.degree(v) > 0) verts.push_back(v);
  return MultiGraph::build(std::move(verts), g.edges());
}

}  // namespace

FrameworkPair connectify(const FrameworkPair& p) {
  if (is_connected(p.graph)) return p;
  std::vector<MultiGraph> comps = components(p.graph);
  if (comps.size() != 2)
    throw Error("connectify: expected exactly two components");
  int loop_idx = is_loop_component(comps[1]) ? 1
                 : is_loop_component(comps[0]) ? 0
                                               : -1;
  if (loop_idx < 0)
    throw Error("connectify: neither component is a loop-component");
  if (!is_connected_matroid(*p.matroid))
    throw Error("connectify: matroid is not connected");

  const MultiGraph& loop_comp = comps[loop_idx];
  const MultiGraph& other = comps[1 - loop_idx];
  const std::string& v = loop_comp.vertices().front();
  const std::string& w = other.vertices().front();

  std::string f = "+bridge";
  while (p.graph.has_edge(f)) f = "+" + f;
  std::vector<Edge> edges = p.graph.edges();
  edges.push_back({f, v, w});
  MultiGraph gplus = MultiGraph::build(p.graph.vertices(), std::move(edges));

  // f is a coloop of the extension, so contracting it gives back M itself.
  FrameworkPair out{contract_edge(gplus, f), p.matroid};
  VerifyReport rep = is_framework(out.graph, *out.matroid);
  if (!rep.ok)
    throw Error("connectify: result fails re-verification: " +
                rep.to_string());
  return out;
}

bool is_strong_framework(const MultiGraph& g, const Matroid& m) {
  if (!is_connected(g)) return false;
  int r = m.rank();
  Mask full = m.full_mask();
  for (const std::string& v : g.vertices())
    if (m.rank(full & ~m.mask_of(g.edges_at(v))) != r - 1) return false;
  return true;
}

FrameworkPair strengthen(const FrameworkPair& p) {
  const MatroidPtr& m = p.matroid;
  require_enumerable(*m, "strengthen");
  if (m->size() < 4) throw Error("strengthen: |M| < 4");
  if (!is_3_connected(*m)) throw Error("strengthen: matroid is not 3-connected");
  VerifyReport pre = is_framework(p.graph, *m);
  if (!pre.ok)
    throw Error("strengthen: input is not a framework: " + pre.to_string());

  MultiGraph g = strip_isolated(p.graph);
  if (!is_connected(g)) g = connectify({g, m}).graph;

  const int full_rank = m->rank();
  const Mask full = m->full_mask();
  long guard = static_cast<long>(g.edge_count()) *
                   std::max(1, g.vertex_count()) + 1;
  while (true) {
    std::string deficient;
    for (const std::string& v : g.vertices()) {
      if (m->rank(full & ~m->mask_of(g.edges_at(v))) < full_rank - 1) {
        deficient = v;
        break;
      }
    }
    if (deficient.empty()) break;
    if (--guard <= 0) throw Error("strengthen: iteration bound exceeded");

    Mask rest = full & ~m->mask_of(g.edges_at(deficient));
    Mask vloops = m->mask_of(g.loops_at(deficient));
    std::vector<Mask> candidates;
    for (Mask cstar : cocircuits(*m))
      if ((cstar & rest) == 0) candidates.push_back(cstar);
    if (candidates.empty())
      throw Error("strengthen: no cocircuit avoids E(G-v)");

    std::vector<Mask> pool;
    for (Mask cstar : candidates)
      if (cstar & vloops) pool.push_back(cstar);
    if (pool.empty()) pool = candidates;
    Mask chosen = pool.front();
    for (Mask cstar : pool) {
      if (popcount(cstar) < popcount(chosen) ||
          (popcount(cstar) == popcount(chosen) &&
           m->labels_of(cstar) < m->labels_of(chosen)))
        chosen = cstar;
    }

    std::set<std::string> reroute;
    for (const std::string& label : g.edges_at(deficient)) {
      const Edge& e = g.edge(label);
      if (!e.is_loop() && !(chosen & (Mask{1} << m->index_of(label))))
        reroute.insert(label);
    }
    if (reroute.empty())
      throw Error("strengthen: rerouting set is empty");

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      if (reroute.count(e.label)) {
        const std::string& w = (e.u == deficient) ? e.v : e.u;
        edges.push_back({e.label, w, w});
      } else {
        edges.push_back(e);
      }
    }
    g = MultiGraph::build(g.vertices(), std::move(edges));
    VerifyReport rep = is_framework(g, *m);
    if (!rep.ok)
      throw Error("strengthen: rerouted graph fails re-verification: " +
                  rep.to_string());
  }

  if (!is_strong_framework(g, *m))
    throw Error("strengthen: postcondition failed");
  return {g, m};
}

namespace {

// Backtracking placement of the elements (in label order) onto vertex pairs
// of an nv-vertex graph. New vertices enter in index order, which makes each
// graph-up-to-relabelling appear exactly once. Partial assignments are
// pruned with consequences of the weak-framework conditions: any subgraph
// has matroid rank at most its vertex count, and forests are independent.
struct PlacementSearch {
  const Matroid& m;
  int nv = 0;
  bool certificate_mode = false;          // leaf = conditions (ii)-(iv)
  const std::vector<Mask>* circuit_list = nullptr;  // leaf condition (4)
  std::vector<std::pair<int, int>> assign;
  std::vector<MultiGraph>* out = nullptr;

  int n() const { return m.size(); }

  bool prune_ok(int placed) {
    std::array<int, 8> parent{};
    std::array<bool, 8> touched{};
    for (int i = 0; i < nv; ++i) parent[i] = i;
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (int i = 0; i < placed; ++i) {
      touched[assign[i].first] = touched[assign[i].second] = true;
      parent[find(assign[i].first)] = find(assign[i].second);
    }
    int root = find(assign[placed - 1].first);
    Mask comp_edges = 0;
    for (int i = 0; i < placed; ++i)
      if (find(assign[i].first) == root) comp_edges |= Mask{1} << i;
    int comp_verts = 0;
    for (int v = 0; v < nv; ++v)
      if (touched[v] && find(v) == root) ++comp_verts;
    int r = m.rank(comp_edges);
    if (r > comp_verts) return false;
    int ecount = popcount(comp_edges);
    if (ecount == comp_verts - 1 && r < ecount) return false;
    return true;
  }

  bool leaf_ok() {
    std::array<int, 8> parent{};
    for (int i = 0; i < nv; ++i) parent[i] = i;
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::vector<Mask> star(nv, 0), loops(nv, 0);
    for (int i = 0; i < n(); ++i) {
      auto [u, v] = assign[i];
      parent[find(u)] = find(v);
      star[u] |= Mask{1} << i;
      star[v] |= Mask{1} << i;
      if (u == v) loops[u] |= Mask{1} << i;
    }
    if (certificate_mode) {
      int roots = 0;
      for (int v = 0; v < nv; ++v)
        if (find(v) == v) ++roots;
      if (roots > 1) return false;
    } else {
      // condition (2) per component
      for (int v = 0; v < nv; ++v) {
        if (find(v) != v) continue;
        Mask comp_edges = 0;
        int comp_verts = 0;
        for (int i = 0; i < n(); ++i)
          if (find(assign[i].first) == v) comp_edges |= Mask{1} << i;
        for (int w = 0; w < nv; ++w)
          if (find(w) == v) ++comp_verts;
        if (m.rank(comp_edges) > comp_verts) return false;
      }
    }
    Mask full = m.full_mask();
    for (int v = 0; v < nv; ++v) {
      Mask rest = full & ~star[v];
      Mask allowed = rest | loops[v];
      if (m.closure(rest) & ~allowed) return false;
    }
    if (!certificate_mode) {
      for (Mask c : *circuit_list) {
        std::array<int, 8> par{};
        std::array<bool, 8> touched{};
        for (int i = 0; i < nv; ++i) par[i] = i;
        auto cfind = [&](int a) {
          while (par[a] != a) a = par[a] = par[par[a]];
          return a;
        };
        for (int i = 0; i < n(); ++i) {
          if (!(c & (Mask{1} << i))) continue;
          touched[assign[i].first] = touched[assign[i].second] = true;
          par[cfind(assign[i].first)] = cfind(assign[i].second);
        }
        int comps = 0;
        for (int v = 0; v < nv; ++v)
          if (touched[v] && cfind(v) == v) ++comps;
        if (comps > 2) return false;
      }
    }
    return true;
  }

  void emit() {
    std::vector<std::string> verts;
    for (int v = 0; v < nv; ++v) verts.push_back("v" + std::to_string(v + 1));
    std::vector<Edge> edges;
    for (int i = 0; i < n(); ++i)
      edges.push_back({m.elements()[i], verts[assign[i].first],
                       verts[assign[i].second]});
    out->push_back(MultiGraph::build(std::move(verts), std::move(edges)));
  }

  void dfs(int k, int max_used) {
    if (k == n()) {
      if (max_used == nv - 1 && leaf_ok()) emit();
      return;
    }
    // Remaining edges can introduce at most two new vertices each.
    if (nv - 1 - max_used > 2 * (n() - k)) return;
    for (int a = 0; a <= std::min(max_used + 1, nv - 1); ++a) {
      int bmax = (a == max_used + 1) ? std::min(a + 1, nv - 1)
                                     : std::min(max_used + 1, nv - 1);
      for (int b = a; b <= bmax; ++b) {
        assign[k] = {a, b};
        int used = std::max(max_used, b);
        if (prune_ok(k + 1)) dfs(k + 1, used);
      }
    }
  }
};

std::vector<MultiGraph> placement_search(const Matroid& m, int max_vertices,
                                         bool certificate_mode) {
  if (max_vertices < 0 || max_vertices > 6)
    throw Error("framework search supports at most 6 vertices");
  require_enumerable(m, "framework search");
  std::vector<Mask> circuit_list;
  if (!certificate_mode) circuit_list = circuits(m);
  std::vector<MultiGraph> out;
  int r = m.rank();
  if (m.size() == 0) {
    out.push_back(MultiGraph());  // the empty graph
    return out;
  }
  for (int nv = std::max(1, r); nv <= max_vertices; ++nv) {
    PlacementSearch s{m, nv, certificate_mode,
                      certificate_mode ? nullptr : &circuit_list,
                      std::vector<std::pair<int, int>>(m.size()), &out};
    s.dfs(0, -1);
  }
  return out;
}

}  // namespace

std::vector<MultiGraph> find_frameworks(const Matroid& m, int max_vertices) {
  return placement_search(m, max_vertices, false);
}

std::vector<MultiGraph> find_certificates(const Matroid& m, int max_vertices) {
  return placement_search(m, max_vertices, true);
}

}  // namespace qgm
