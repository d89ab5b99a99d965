#include "qgm/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace qgm {

bool operator==(const Edge& a, const Edge& b) {
  return a.label == b.label && a.u == b.u && a.v == b.v;
}

MultiGraph MultiGraph::build(std::vector<std::string> vertices,
                             std::vector<Edge> edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw Error("duplicate vertex label");
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!std::binary_search(vertices.begin(), vertices.end(), e.u) ||
        !std::binary_search(vertices.begin(), vertices.end(), e.v))
      throw Error("edge '" + e.label + "' has an undeclared endpoint");
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.label < b.label; });
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i - 1].label == edges[i].label)
      throw Error("duplicate edge label '" + edges[i].label + "'");
  MultiGraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  return g;
}

bool MultiGraph::has_vertex(const std::string& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool MultiGraph::has_edge(const std::string& e) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), e,
      [](const Edge& a, const std::string& l) { return a.label < l; });
  return it != edges_.end() && it->label == e;
}

const Edge& MultiGraph::edge(const std::string& label) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), label,
      [](const Edge& a, const std::string& l) { return a.label < l; });
  if (it == edges_.end() || it->label != label)
    throw Error("unknown edge label '" + label + "'");
  return *it;
}

std::vector<std::string> MultiGraph::edge_labels() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.label);
  return out;
}

std::set<std::string> MultiGraph::edge_label_set() const {
  std::set<std::string> out;
  for (const Edge& e : edges_) out.insert(e.label);
  return out;
}

std::set<std::string> MultiGraph::edges_at(const std::string& v) const {
  std::set<std::string> out;
  for (const Edge& e : edges_)
    if (e.u == v || e.v == v) out.insert(e.label);
  return out;
}

std::set<std::string> MultiGraph::loops_at(const std::string& v) const {
  std::set<std::string> out;
  for (const Edge& e : edges_)
    if (e.is_loop() && e.u == v) out.insert(e.label);
  return out;
}

int MultiGraph::degree(const std::string& v) const {
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

namespace {

// Vertex partition into connected pieces; returns component id per vertex.
std::map<std::string, int> component_ids(const MultiGraph& g, int* count) {
  std::map<std::string, int> id;
  std::map<std::string, std::vector<std::string>> adj;
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int next = 0;
  for (const std::string& root : g.vertices()) {
    if (id.count(root)) continue;
    id[root] = next;
    std::queue<std::string> q;
    q.push(root);
    while (!q.empty()) {
      std::string v = q.front();
      q.pop();
      for (const std::string& w : adj[v]) {
        if (!id.count(w)) {
          id[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  *count = next;
  return id;
}

}  // namespace

std::vector<MultiGraph> components(const MultiGraph& g) {
  int count = 0;
  std::map<std::string, int> id = component_ids(g, &count);
  std::vector<std::vector<std::string>> verts(count);
  std::vector<std::vector<Edge>> edges(count);
  for (const std::string& v : g.vertices()) verts[id[v]].push_back(v);
  for (const Edge& e : g.edges()) edges[id[e.u]].push_back(e);
  std::vector<MultiGraph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(MultiGraph::build(verts[i], edges[i]));
  return out;
}

int component_count(const MultiGraph& g) {
  int count = 0;
  component_ids(g, &count);
  return count;
}

MultiGraph edge_subgraph(const MultiGraph& g, const std::set<std::string>& x) {
  std::vector<Edge> edges;
  std::set<std::string> verts;
  for (const std::string& label : x) {
    const Edge& e = g.edge(label);
    edges.push_back(e);
    verts.insert(e.u);
    verts.insert(e.v);
  }
  return MultiGraph::build({verts.begin(), verts.end()}, std::move(edges));
}

MultiGraph delete_edge(const MultiGraph& g, const std::string& e) {
  g.edge(e);  // existence check
  std::vector<Edge> edges;
  for (const Edge& f : g.edges())
    if (f.label != e) edges.push_back(f);
  return MultiGraph::build(g.vertices(), std::move(edges));
}

MultiGraph delete_vertex(const MultiGraph& g, const std::string& v) {
  if (!g.has_vertex(v)) throw Error("unknown vertex '" + v + "'");
  std::vector<std::string> verts;
  for (const std::string& w : g.vertices())
    if (w != v) verts.push_back(w);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v) edges.push_back(e);
  return MultiGraph::build(std::move(verts), std::move(edges));
}

MultiGraph contract_edge(const MultiGraph& g, const std::string& e) {
  const Edge& ce = g.edge(e);
  if (ce.is_loop())
    throw Error("cannot contract loop-edge '" + e + "'; use contract_loop");
  const std::string& keep = ce.u;  // endpoints stored min-first
  const std::string& drop = ce.v;
  std::vector<std::string> verts;
  for (const std::string& w : g.vertices())
    if (w != drop) verts.push_back(w);
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (f.label == e) continue;
    Edge h = f;
    if (h.u == drop) h.u = keep;
    if (h.v == drop) h.v = keep;
    edges.push_back(h);
  }
  return MultiGraph::build(std::move(verts), std::move(edges));
}

MultiGraph contract_loop(const MultiGraph& g, const std::string& e) {
  const Edge& ce = g.edge(e);
  if (!ce.is_loop()) throw Error("'" + e + "' is not a loop-edge");
  const std::string& v = ce.u;
  std::vector<std::string> verts;
  for (const std::string& w : g.vertices())
    if (w != v) verts.push_back(w);
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (f.label == e) continue;
    Edge h = f;
    if (h.is_loop() && h.u == v) {
      if (verts.empty())
        throw Error("contract_loop: no vertex left to carry loop-edge '" +
                    h.label + "'");
      h.u = h.v = verts.front();  // lowest remaining label
    } else if (h.u == v || h.v == v) {
      const std::string& w = (h.u == v) ? h.v : h.u;
      h.u = h.v = w;
    }
    edges.push_back(h);
  }
  return MultiGraph::build(std::move(verts), std::move(edges));
}

bool is_connected(const MultiGraph& g) { return component_count(g) <= 1; }

bool is_k_connected(const MultiGraph& g, int k) {
  if (k < 1 || k > 3) throw Error("is_k_connected supports k in {1,2,3}");
  const std::vector<std::string>& vs = g.vertices();
  int n = static_cast<int>(vs.size());
  if (!is_connected(g)) return false;
  if (k >= 2) {
    for (int i = 0; i < n; ++i)
      if (!is_connected(delete_vertex(g, vs[i]))) return false;
  }
  if (k >= 3) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!is_connected(delete_vertex(delete_vertex(g, vs[i]), vs[j])))
          return false;
  }
  return true;
}

bool operator==(const Cycle& a, const Cycle& b) {
  return a.edges == b.edges && a.vertices == b.vertices;
}

bool operator<(const Cycle& a, const Cycle& b) {
  if (a.edges.size() != b.edges.size())
    return a.edges.size() < b.edges.size();
  return a.edges < b.edges;
}

bool is_cycle_edge_set(const MultiGraph& g, const std::set<std::string>& x) {
  if (x.empty()) return false;
  MultiGraph sub = edge_subgraph(g, x);
  if (!is_connected(sub)) return false;
  for (const std::string& v : sub.vertices())
    if (sub.degree(v) != 2) return false;
  return true;
}

namespace {

Cycle make_cycle(const MultiGraph& g, const std::set<std::string>& edges) {
  Cycle c;
  c.edges = edges;
  for (const std::string& label : edges) {
    const Edge& e = g.edge(label);
    c.vertices.insert(e.u);
    c.vertices.insert(e.v);
  }
  return c;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const MultiGraph& g) {
  std::vector<Cycle> out;
  const std::vector<std::string>& vs = g.vertices();
  int n = static_cast<int>(vs.size());
  std::map<std::string, int> vidx;
  for (int i = 0; i < n; ++i) vidx[vs[i]] = i;

  // Loop-edges are cycles on their own.
  for (const Edge& e : g.edges())
    if (e.is_loop()) out.push_back(make_cycle(g, {e.label}));

  // Non-loop multiplicity lists per vertex pair.
  std::map<std::pair<int, int>, std::vector<std::string>> par;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    int a = vidx[e.u], b = vidx[e.v];
    par[{std::min(a, b), std::max(a, b)}].push_back(e.label);
  }

  // Two-cycles from parallel pairs.
  for (const auto& [pair, labels] : par) {
    (void)pair;
    for (size_t i = 0; i < labels.size(); ++i)
      for (size_t j = i + 1; j < labels.size(); ++j)
        out.push_back(make_cycle(g, {labels[i], labels[j]}));
  }

  // Longer cycles: vertex-simple cycles with the start s as minimum vertex
  // and direction fixed by second < last; each consecutive pair contributes
  // every parallel edge choice.
  std::vector<std::vector<int>> vertex_cycles;
  std::vector<int> path;
  std::vector<bool> used(n, false);
  auto adjacent = [&](int a, int b) {
    return par.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  std::function<void(int)> extend = [&](int s) {
    int cur = path.back();
    for (int next = s + 1; next < n; ++next) {
      if (used[next] || !adjacent(cur, next)) continue;
      if (static_cast<int>(path.size()) >= 2 && adjacent(next, s) &&
          path[1] < next) {
        std::vector<int> cyc = path;
        cyc.push_back(next);
        vertex_cycles.push_back(cyc);
      }
      used[next] = true;
      path.push_back(next);
      extend(s);
      path.pop_back();
      used[next] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    extend(s);
  }

  for (const std::vector<int>& cyc : vertex_cycles) {
    int len = static_cast<int>(cyc.size());
    std::vector<const std::vector<std::string>*> choices;
    for (int i = 0; i < len; ++i) {
      int a = cyc[i], b = cyc[(i + 1) % len];
      choices.push_back(&par.at({std::min(a, b), std::max(a, b)}));
    }
    std::vector<size_t> pick(len, 0);
    while (true) {
      std::set<std::string> edges;
      for (int i = 0; i < len; ++i) edges.insert((*choices[i])[pick[i]]);
      out.push_back(make_cycle(g, edges));
      int i = len - 1;
      while (i >= 0 && ++pick[i] == choices[i]->size()) pick[i--] = 0;
      if (i < 0) break;
    }
  }

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Theta> enumerate_thetas(const MultiGraph& g) {
  std::vector<Cycle> cycles = enumerate_cycles(g);
  std::set<std::set<std::string>> seen;
  std::vector<Theta> out;
  for (size_t i = 0; i < cycles.size(); ++i) {
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      std::set<std::string> uni = cycles[i].edges;
      uni.insert(cycles[j].edges.begin(), cycles[j].edges.end());
      if (seen.count(uni)) continue;
      MultiGraph sub = edge_subgraph(g, uni);
      bool loopless = true;
      for (const Edge& e : sub.edges())
        if (e.is_loop()) loopless = false;
      if (!loopless) continue;
      std::vector<std::string> deg3;
      bool degrees_ok = true;
      for (const std::string& v : sub.vertices()) {
        int d = sub.degree(v);
        if (d == 3)
          deg3.push_back(v);
        else if (d != 2)
          degrees_ok = false;
      }
      if (!degrees_ok || deg3.size() != 2) continue;
      if (!is_k_connected(sub, 2)) continue;
      std::vector<Cycle> sub_cycles = enumerate_cycles(sub);
      if (sub_cycles.size() != 3) continue;
      seen.insert(uni);
      Theta t;
      t.edges = uni;
      t.branch_vertices = {deg3[0], deg3[1]};
      for (int c = 0; c < 3; ++c) t.cycles[c] = sub_cycles[c].edges;
      // Each internally disjoint path is the intersection of two cycles.
      static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
      for (int p = 0; p < 3; ++p) {
        std::set<std::string> inter;
        std::set_intersection(
            t.cycles[pairs[p][0]].begin(), t.cycles[pairs[p][0]].end(),
            t.cycles[pairs[p][1]].begin(), t.cycles[pairs[p][1]].end(),
            std::inserter(inter, inter.begin()));
        t.paths[p] = inter;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace qgm
