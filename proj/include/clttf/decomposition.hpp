#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "clttf/defgraph.hpp"

namespace clttf {

struct Separations {
  std::vector<int> separating_vertices;
  std::vector<int> separating_edges;  // edge indices
  std::vector<int> cut_edges;
  std::vector<int> even_terminal_edges;
};

// A decomposition g = A u_T B: the separator T and the components of g - T.
struct Separator {
  std::vector<int> cut;   // vertices of T (one or two)
  int edge = -1;          // edge index when T is an edge
  std::vector<std::vector<int>> components;
};

inline void require_connected(const LabelledGraph& g) {
  if (!is_connected(g) || g.n() == 0) throw GraphError("graph is not connected");
}

inline Separations separations(const LabelledGraph& g) {
  require_connected(g);
  Separations r;
  const int n = g.n();
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) {
    removed[v] = 1;
    if (components_without(g, removed).size() >= 2) r.separating_vertices.push_back(v);
    removed[v] = 0;
  }
  for (int k = 0; k < g.num_edges(); ++k) {
    const Edge& e = g.edge(k);
    removed[e.u] = removed[e.v] = 1;
    if (components_without(g, removed).size() >= 2) r.separating_edges.push_back(k);
    removed[e.u] = removed[e.v] = 0;

    // Bridge test: is v reachable from u without the edge itself?
    std::vector<char> seen(n, 0);
    std::vector<int> stack{e.u};
    seen[e.u] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbours(x)) {
        if ((x == e.u && y == e.v) || (x == e.v && y == e.u) || seen[y]) continue;
        seen[y] = 1;
        stack.push_back(y);
      }
    }
    if (!seen[e.v]) r.cut_edges.push_back(k);
    if (e.m % 2 == 0 && (g.degree(e.u) == 1 || g.degree(e.v) == 1)) r.even_terminal_edges.push_back(k);
  }
  return r;
}

// Every proper decomposition along a vertex or an edge.
inline std::vector<Separator> separators(const LabelledGraph& g) {
  auto s = separations(g);
  std::vector<Separator> out;
  std::vector<char> removed(g.n(), 0);
  for (int v : s.separating_vertices) {
    removed[v] = 1;
    out.push_back({{v}, -1, components_without(g, removed)});
    removed[v] = 0;
  }
  for (int k : s.separating_edges) {
    const Edge& e = g.edge(k);
    removed[e.u] = removed[e.v] = 1;
    out.push_back({{e.u, e.v}, k, components_without(g, removed)});
    removed[e.u] = removed[e.v] = 0;
  }
  return out;
}

namespace detail {

inline std::vector<int> component_containing(const LabelledGraph& g, const std::vector<char>& inside, int start) {
  std::vector<int> out{start};
  std::vector<char> seen(g.n(), 0);
  seen[start] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int w : g.neighbours(out[i]))
      if (inside[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

// Components of g - T met by the vertex set X (outside T).
inline std::vector<int> components_met(const Separator& sep, const std::vector<char>& inX) {
  std::vector<int> met;
  for (std::size_t c = 0; c < sep.components.size(); ++c)
    for (int v : sep.components[c])
      if (inX[v]) {
        met.push_back(static_cast<int>(c));
        break;
      }
  return met;
}

// Recursively splits the candidate X (containing edge f) until it is not
// straddled by any separator; emits the resulting vertex sets.
inline void split_candidate(const LabelledGraph& g, const std::vector<Separator>& seps, const Edge& f,
                            std::vector<char> inX, std::set<std::vector<int>>& out) {
  auto comp = component_containing(g, inX, f.u);
  std::vector<char> in(g.n(), 0);
  for (int v : comp) in[v] = 1;
  for (const auto& sep : seps) {
    auto met = components_met(sep, in);
    if (met.size() < 2) continue;
    for (int c : met) {
      std::vector<char> sub(g.n(), 0);
      for (int v : sep.cut) sub[v] = in[v];
      for (int v : sep.components[c]) sub[v] = in[v];
      if (sub[f.u] && sub[f.v]) split_candidate(g, seps, f, sub, out);
    }
    return;
  }
  out.insert(comp);
}

inline std::vector<std::vector<int>> maximal_pieces(const LabelledGraph& g, const std::vector<Separator>& seps) {
  std::set<std::vector<int>> found;
  for (const auto& f : g.edges()) {
    std::vector<char> inX(g.n(), 1);
    for (const auto& sep : seps) {
      bool fu = std::find(sep.cut.begin(), sep.cut.end(), f.u) != sep.cut.end();
      bool fv = std::find(sep.cut.begin(), sep.cut.end(), f.v) != sep.cut.end();
      if (fu && fv) continue;
      int outside = fu ? f.v : f.u;
      std::vector<char> keep(g.n(), 0);
      for (int v : sep.cut) keep[v] = 1;
      for (const auto& c : sep.components)
        if (std::find(c.begin(), c.end(), outside) != c.end())
          for (int v : c) keep[v] = 1;
      for (int v = 0; v < g.n(); ++v) inX[v] = inX[v] && keep[v];
    }
    split_candidate(g, seps, f, inX, found);
  }
  std::vector<std::vector<int>> all(found.begin(), found.end()), out;
  for (const auto& a : all) {
    bool contained = false;
    for (const auto& b : all)
      if (a != b && a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        contained = true;
        break;
      }
    if (!contained) out.push_back(a);
  }
  return out;
}

}  // namespace detail

struct Chunk {
  std::vector<int> vertices;  // sorted
  std::vector<int> edges;     // edge indices of the full subgraph
  bool solid = false;
};

struct ChunkLink {
  int a = 0;
  int b = 0;
  std::vector<int> shared;  // the separating vertex or the endpoints of the separating edge
};

struct ChunkDecomposition {
  std::vector<Chunk> chunks;
  int N = 0;
  int R = 0;      // pieces after splitting along even-labelled separating edges
  int R_cut = 0;  // alternative reading: splitting along even-labelled cut edges
  std::vector<ChunkLink> adjacency;
};

inline std::vector<int> full_subgraph_edges(const LabelledGraph& g, const std::vector<int>& verts) {
  std::vector<char> in(g.n(), 0);
  for (int v : verts) in[v] = 1;
  std::vector<int> es;
  for (int k = 0; k < g.num_edges(); ++k)
    if (in[g.edge(k).u] && in[g.edge(k).v]) es.push_back(k);
  return es;
}

// A is indecomposable when no separator splits it.
inline bool is_indecomposable(const LabelledGraph& g, const std::vector<Separator>& seps, const std::vector<int>& verts) {
  std::vector<char> in(g.n(), 0);
  for (int v : verts) in[v] = 1;
  for (const auto& sep : seps)
    if (detail::components_met(sep, in).size() >= 2) return false;
  return true;
}

inline ChunkDecomposition chunks(const LabelledGraph& g) {
  require_connected(g);
  auto seps = separators(g);
  ChunkDecomposition d;
  for (auto& verts : detail::maximal_pieces(g, seps)) {
    Chunk c;
    c.edges = full_subgraph_edges(g, verts);
    c.vertices = std::move(verts);
    c.solid = c.edges.size() >= c.vertices.size();
    d.chunks.push_back(std::move(c));
  }
  std::sort(d.chunks.begin(), d.chunks.end(), [](const Chunk& x, const Chunk& y) { return x.edges < y.edges; });
  d.N = static_cast<int>(d.chunks.size());

  std::vector<Separator> even;
  for (const auto& sep : seps)
    if (sep.edge >= 0 && g.edge(sep.edge).m % 2 == 0) even.push_back(sep);
  d.R = static_cast<int>(detail::maximal_pieces(g, even).size());

  std::vector<Separator> even_cut;
  auto s = separations(g);
  for (int k : s.cut_edges) {
    const Edge& e = g.edge(k);
    if (e.m % 2 || g.degree(e.u) == 1 || g.degree(e.v) == 1) continue;
    std::vector<char> removed(g.n(), 0);
    removed[e.u] = removed[e.v] = 1;
    even_cut.push_back({{e.u, e.v}, k, components_without(g, removed)});
  }
  d.R_cut = static_cast<int>(detail::maximal_pieces(g, even_cut).size());

  for (int i = 0; i < d.N; ++i)
    for (int j = i + 1; j < d.N; ++j) {
      std::vector<int> shared;
      std::set_intersection(d.chunks[i].vertices.begin(), d.chunks[i].vertices.end(), d.chunks[j].vertices.begin(),
                            d.chunks[j].vertices.end(), std::back_inserter(shared));
      if (!shared.empty()) d.adjacency.push_back({i, j, shared});
    }
  return d;
}

// ---------------------------------------------------------------------------
// Plain graphs, the subdivided graph and minimal circuits

struct PlainGraph {
  std::vector<std::string> names;
  std::vector<char> type;    // 'V' for edge midpoints, 'F' for original vertices, 0 if untyped
  std::vector<int> origin;   // edge index for 'V', vertex index for 'F'
  std::vector<std::vector<int>> adj;

  int n() const { return static_cast<int>(names.size()); }
  int add_vertex(std::string name, char t = 0, int o = -1) {
    names.push_back(std::move(name));
    type.push_back(t);
    origin.push_back(o);
    adj.emplace_back();
    return n() - 1;
  }
  void add_edge(int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  bool adjacent(int a, int b) const { return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end(); }
};

inline PlainGraph plain_of(const LabelledGraph& g) {
  PlainGraph p;
  for (int v = 0; v < g.n(); ++v) p.add_vertex(g.name(v));
  for (const auto& e : g.edges()) p.add_edge(e.u, e.v);
  return p;
}

inline PlainGraph hat_graph(const LabelledGraph& g) {
  PlainGraph p;
  std::vector<int> fidx(g.n(), -1);
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) >= 2) fidx[v] = p.add_vertex(g.name(v), 'F', v);
  for (int k = 0; k < g.num_edges(); ++k) {
    const Edge& e = g.edge(k);
    int mid = p.add_vertex("mid(" + g.name(e.u) + g.name(e.v) + ")", 'V', k);
    if (fidx[e.u] >= 0) p.add_edge(mid, fidx[e.u]);
    if (fidx[e.v] >= 0) p.add_edge(mid, fidx[e.v]);
  }
  return p;
}

inline std::vector<int> cnva_generators(const LabelledGraph& g) {
  auto rep = validate(g);
  if (!rep.connected || !rep.at_least_3_vertices || !rep.large_type)
    throw GraphError("cnva_generators requires a connected large-type graph with at least 3 vertices");
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) >= 2) out.push_back(v);
    else if (g.degree(v) == 1 && g.label(v, g.neighbours(v)[0]) % 2 == 1) out.push_back(v);
  }
  return out;
}

inline std::vector<int> bfs_distances(const PlainGraph& p, int src) {
  std::vector<int> d(p.n(), -1);
  std::deque<int> q{src};
  d[src] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : p.adj[x])
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
  }
  return d;
}

// Simple cycles of length 3..max_len, each once: the least vertex first and
// its smaller neighbour on the cycle second.
inline std::vector<std::vector<int>> simple_cycles(const PlainGraph& p, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> on(p.n(), 0);
  for (int r = 0; r < p.n(); ++r) {
    path.assign(1, r);
    on[r] = 1;
    auto dfs = [&](auto&& self, int x) -> void {
      for (int y : p.adj[x]) {
        if (y == r && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        if (y <= r || on[y] || static_cast<int>(path.size()) >= max_len) continue;
        on[y] = 1;
        path.push_back(y);
        self(self, y);
        path.pop_back();
        on[y] = 0;
      }
    };
    dfs(dfs, r);
    on[r] = 0;
  }
  return out;
}

inline bool is_isometric_cycle(const std::vector<int>& cyc, const std::vector<std::vector<int>>& dist_rows) {
  const int L = static_cast<int>(cyc.size());
  for (int i = 0; i < L; ++i)
    for (int j = i + 1; j < L; ++j) {
      int along = std::min(j - i, L - (j - i));
      if (dist_rows[i][cyc[j]] != along) return false;
    }
  return true;
}

inline std::vector<std::vector<int>> minimal_circuits(const PlainGraph& p, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> dist(p.n());
  for (const auto& cyc : simple_cycles(p, max_len)) {
    std::vector<std::vector<int>> rows;
    for (int v : cyc) {
      if (dist[v].empty()) dist[v] = bfs_distances(p, v);
      rows.push_back(dist[v]);
    }
    if (is_isometric_cycle(cyc, rows)) out.push_back(cyc);
  }
  return out;
}

inline std::vector<std::vector<int>> minimal_circuits(const PlainGraph& p) { return minimal_circuits(p, 2 * p.n()); }

}  // namespace clttf
