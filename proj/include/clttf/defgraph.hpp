#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clttf/perm.hpp"

namespace clttf {

// Raised for malformed graph documents and violated graph invariants.
class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                          std::to_string(column) + ": " + what
                                    : what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Edge {
  int u = 0;
  int v = 0;
  int m = 2;
};

// Simplicial graph with integer edge labels >= 2. Vertex order is the
// declaration order; edges keep their declaration order too.
class LabelledGraph {
 public:
  LabelledGraph() = default;

  LabelledGraph(std::vector<std::string> names, std::vector<Edge> edges)
      : names_(std::move(names)), edges_(std::move(edges)) {
    const int n = static_cast<int>(names_.size());
    for (int i = 0; i < n; ++i) {
      if (!index_.emplace(names_[i], i).second) throw GraphError("duplicate vertex " + names_[i]);
    }
    label_.assign(static_cast<std::size_t>(n) * n, 0);
    eidx_.assign(static_cast<std::size_t>(n) * n, -1);
    adj_.assign(n, {});
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      Edge& e = edges_[k];
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw GraphError("edge endpoint is not a vertex");
      if (e.u == e.v) throw GraphError("self-loop at " + names_[e.u]);
      if (e.m < 2) throw GraphError("label < 2 on edge " + names_[e.u] + "-" + names_[e.v]);
      if (e.u > e.v) std::swap(e.u, e.v);
      if (label_[e.u * n + e.v]) throw GraphError("duplicate edge " + names_[e.u] + "-" + names_[e.v]);
      label_[e.u * n + e.v] = label_[e.v * n + e.u] = e.m;
      eidx_[e.u * n + e.v] = eidx_[e.v * n + e.u] = static_cast<int>(k);
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int n() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int k) const { return edges_.at(k); }
  const std::vector<int>& neighbours(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  // 0 when u,v are not adjacent.
  int label(int u, int v) const { return label_[static_cast<std::size_t>(u) * n() + v]; }
  int edge_index(int u, int v) const { return eidx_[static_cast<std::size_t>(u) * n() + v]; }

  std::optional<int> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int vertex(const std::string& name) const {
    auto v = find(name);
    if (!v) throw GraphError("unknown vertex " + name);
    return *v;
  }

  std::string edge_name(int k) const {
    const Edge& e = edges_.at(k);
    return names_[e.u] + "-" + names_[e.v];
  }

  bool operator==(const LabelledGraph& o) const {
    if (names_ != o.names_ || edges_.size() != o.edges_.size()) return false;
    for (int u = 0; u < n(); ++u)
      for (int v = 0; v < n(); ++v)
        if (label(u, v) != o.label(u, v)) return false;
    return true;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> label_;
  std::vector<int> eidx_;
  std::vector<std::vector<int>> adj_;
};

// Builder used by the parser and by tests.
inline LabelledGraph make_graph(const std::vector<std::string>& isolated,
                                const std::vector<std::tuple<std::string, std::string, int>>& edges) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> idx;
  auto id = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it != idx.end()) return it->second;
    idx.emplace(s, static_cast<int>(names.size()));
    names.push_back(s);
    return static_cast<int>(names.size()) - 1;
  };
  for (const auto& v : isolated) id(v);
  std::vector<Edge> es;
  for (const auto& [a, b, m] : edges) {
    int u = id(a);
    int v = id(b);
    es.push_back({u, v, m});
  }
  return LabelledGraph(names, es);
}

inline LabelledGraph make_graph(const std::vector<std::tuple<std::string, std::string, int>>& edges) {
  return make_graph({}, edges);
}

// Text format: "vertex <name>" and "edge <u> <v> <m>" lines, '#' comments.
inline LabelledGraph parse_graph(const std::string& text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> idx;
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, int> seen;
  auto id = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it != idx.end()) return it->second;
    idx.emplace(s, static_cast<int>(names.size()));
    names.push_back(s);
    return static_cast<int>(names.size()) - 1;
  };

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::vector<std::pair<std::string, int>> tok;  // token, 1-based column
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tok.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
      i = j;
    }
    if (tok.empty()) continue;
    const std::string& kw = tok[0].first;
    if (kw == "vertex") {
      if (tok.size() != 2) throw GraphError("expected 'vertex <name>'", lineno, tok.size() > 2 ? tok[2].second : tok[0].second);
      id(tok[1].first);
    } else if (kw == "edge") {
      if (tok.size() != 4) throw GraphError("expected 'edge <u> <v> <m>'", lineno, tok.size() > 4 ? tok[4].second : tok[0].second);
      const std::string& ms = tok[3].first;
      bool digits = !ms.empty() && std::all_of(ms.begin(), ms.end(), [](char c) { return c >= '0' && c <= '9'; });
      if (!digits || ms.size() > 9) throw GraphError("label must be a decimal integer", lineno, tok[3].second);
      int m = std::stoi(ms);
      if (tok[1].first == tok[2].first) throw GraphError("self-loop at " + tok[1].first, lineno, tok[2].second);
      if (m < 2) throw GraphError("label < 2", lineno, tok[3].second);
      int u = id(tok[1].first);
      int v = id(tok[2].first);
      auto key = std::minmax(u, v);
      if (!seen.emplace(std::make_pair(key.first, key.second), lineno).second)
        throw GraphError("duplicate edge " + tok[1].first + "-" + tok[2].first, lineno, tok[0].second);
      edges.push_back({u, v, m});
    } else {
      throw GraphError("unknown declaration '" + kw + "'", lineno, tok[0].second);
    }
  }
  return LabelledGraph(names, edges);
}

inline std::string to_text(const LabelledGraph& g) {
  std::ostringstream out;
  std::vector<char> touched(g.n(), 0);
  for (const auto& e : g.edges()) touched[e.u] = touched[e.v] = 1;
  for (int v = 0; v < g.n(); ++v)
    if (!touched[v]) out << "vertex " << g.name(v) << "\n";
  for (const auto& e : g.edges()) out << "edge " << g.name(e.u) << " " << g.name(e.v) << " " << e.m << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Connectivity helpers

// Components of the full subgraph on vertices not in `removed`.
inline std::vector<std::vector<int>> components_without(const LabelledGraph& g, const std::vector<char>& removed) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int w : g.neighbours(members[i]))
        if (!removed[w] && comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const LabelledGraph& g) {
  if (g.n() == 0) return true;
  return components_without(g, std::vector<char>(g.n(), 0)).size() == 1;
}

// ---------------------------------------------------------------------------
// Validation

struct Witness {
  std::string kind;  // "edge", "triangle", "square", "disconnected", "size"
  std::vector<int> vertices;
};

struct ValidationReport {
  bool connected = false;
  bool at_least_3_vertices = false;
  bool large_type = false;
  bool triangle_free = false;
  bool clttf = false;
  bool two_dimensional = false;
  bool hyperbolic_type = false;
  std::optional<Witness> offending_witness;
};

inline ValidationReport validate(const LabelledGraph& g) {
  ValidationReport r;
  r.connected = is_connected(g) && g.n() > 0;
  r.at_least_3_vertices = g.n() >= 3;
  r.large_type = true;
  std::optional<Witness> low_edge, triangle, bad_triangle, flat, square;
  for (const auto& e : g.edges())
    if (e.m < 3) {
      r.large_type = false;
      if (!low_edge) low_edge = Witness{"edge", {e.u, e.v}};
    }
  r.triangle_free = true;
  r.two_dimensional = true;
  bool euclidean_triangle = false;
  for (int a = 0; a < g.n(); ++a)
    for (int b : g.neighbours(a)) {
      if (b <= a) continue;
      for (int c : g.neighbours(b)) {
        if (c <= b || !g.label(a, c)) continue;
        long long m = g.label(a, b), n = g.label(b, c), p = g.label(a, c);
        r.triangle_free = false;
        if (!triangle) triangle = Witness{"triangle", {a, b, c}};
        long long lhs = n * p + m * p + m * n;  // (1/m+1/n+1/p) * mnp
        long long rhs = m * n * p;
        if (lhs > rhs) {
          r.two_dimensional = false;
          if (!bad_triangle) bad_triangle = Witness{"triangle", {a, b, c}};
        }
        if (lhs == rhs) {
          euclidean_triangle = true;
          if (!flat) flat = Witness{"triangle", {a, b, c}};
        }
      }
    }
  bool square2 = false;
  for (int a = 0; a < g.n() && !square2; ++a)
    for (int b : g.neighbours(a)) {
      if (b <= a || g.label(a, b) != 2) continue;
      for (int c : g.neighbours(b)) {
        if (c == a || g.label(b, c) != 2) continue;
        for (int d : g.neighbours(c)) {
          if (d == b || d == a || d < a || g.label(c, d) != 2 || g.label(d, a) != 2) continue;
          square2 = true;
          square = Witness{"square", {a, b, c, d}};
          break;
        }
        if (square2) break;
      }
      if (square2) break;
    }
  r.hyperbolic_type = !euclidean_triangle && !square2;
  r.clttf = r.connected && r.at_least_3_vertices && r.large_type && r.triangle_free;
  if (!r.connected) r.offending_witness = Witness{"disconnected", {}};
  else if (!r.at_least_3_vertices) r.offending_witness = Witness{"size", {}};
  else if (triangle) r.offending_witness = triangle;
  else if (low_edge) r.offending_witness = low_edge;
  else if (square) r.offending_witness = square;
  return r;
}

inline void require_clttf(const LabelledGraph& g) {
  if (!validate(g).clttf) throw GraphError("graph is not CLTTF");
}

// ---------------------------------------------------------------------------
// Partition refinement, canonical labelling, isomorphism

namespace detail {

using Partition = std::vector<std::vector<int>>;

// Refine an ordered partition until equitable with respect to labelled
// adjacency. Splits are ordered by signature so the result is equivariant.
inline Partition refine(const LabelledGraph& g, Partition p) {
  const int n = g.n();
  std::vector<int> cell(n);
  while (true) {
    for (std::size_t c = 0; c < p.size(); ++c)
      for (int v : p[c]) cell[v] = static_cast<int>(c);
    Partition next;
    bool split = false;
    for (const auto& members : p) {
      if (members.size() == 1) { next.push_back(members); continue; }
      std::vector<std::pair<std::vector<std::pair<int, int>>, int>> sig;
      for (int v : members) {
        std::vector<std::pair<int, int>> s;
        for (int w : g.neighbours(v)) s.emplace_back(cell[w], g.label(v, w));
        std::sort(s.begin(), s.end());
        sig.emplace_back(std::move(s), v);
      }
      std::sort(sig.begin(), sig.end());
      std::size_t i = 0;
      while (i < sig.size()) {
        std::size_t j = i;
        std::vector<int> part;
        while (j < sig.size() && sig[j].first == sig[i].first) part.push_back(sig[j++].second);
        std::sort(part.begin(), part.end());
        next.push_back(std::move(part));
        i = j;
      }
      if (sig.front().first != sig.back().first) split = true;
    }
    p = std::move(next);
    if (!split) return p;
  }
}

inline Partition unit_partition(const LabelledGraph& g) {
  Partition p(1);
  for (int v = 0; v < g.n(); ++v) p[0].push_back(v);
  if (g.n() == 0) p.clear();
  return p;
}

inline std::vector<int> encode(const LabelledGraph& g, const std::vector<int>& order) {
  std::vector<int> enc;
  enc.reserve(order.size() * order.size() / 2 + 1);
  enc.push_back(static_cast<int>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) enc.push_back(g.label(order[i], order[j]));
  return enc;
}

struct CanonSearch {
  explicit CanonSearch(const LabelledGraph& graph) : g(graph) {}
  const LabelledGraph& g;
  std::vector<int> best_enc;
  std::vector<int> best_order;
  bool have = false;

  void run(Partition p) {
    p = refine(g, std::move(p));
    std::size_t target = p.size();
    for (std::size_t c = 0; c < p.size(); ++c)
      if (p[c].size() > 1) { target = c; break; }
    if (target == p.size()) {
      std::vector<int> order;
      for (const auto& c : p) order.push_back(c[0]);
      auto enc = encode(g, order);
      if (!have || enc < best_enc) {
        best_enc = std::move(enc);
        best_order = std::move(order);
        have = true;
      }
      return;
    }
    for (int v : p[target]) {
      Partition q;
      q.reserve(p.size() + 1);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (c != target) { q.push_back(p[c]); continue; }
        q.push_back({v});
        std::vector<int> rest;
        for (int w : p[c])
          if (w != v) rest.push_back(w);
        q.push_back(std::move(rest));
      }
      run(std::move(q));
    }
  }
};

}  // namespace detail

// Canonical vertex order: position i holds the vertex placed i-th.
inline std::vector<int> canonical_order(const LabelledGraph& g) {
  detail::CanonSearch s(g);
  s.run(detail::unit_partition(g));
  return s.best_order;
}

// Encoding depends only on the isomorphism class: vertex count followed by
// the lower-triangular label matrix under the canonical order.
inline std::string canonical_form(const LabelledGraph& g) {
  detail::CanonSearch s(g);
  s.run(detail::unit_partition(g));
  std::string out;
  for (int x : s.best_enc) {
    out += std::to_string(x);
    out.push_back(',');
  }
  return out;
}

struct GraphBijection {
  std::vector<int> vertex_map;  // vertex of the source -> vertex of the target
  bool preserves_labels = true;
};

inline bool preserves_labels(const LabelledGraph& a, const LabelledGraph& b, const std::vector<int>& map) {
  if (a.n() != b.n() || a.num_edges() != b.num_edges() || static_cast<int>(map.size()) != a.n()) return false;
  if (!perm_is_valid(map)) return false;
  for (const auto& e : a.edges())
    if (b.label(map[e.u], map[e.v]) != e.m) return false;
  return true;
}

inline std::optional<GraphBijection> are_isomorphic(const LabelledGraph& a, const LabelledGraph& b) {
  if (a.n() != b.n() || a.num_edges() != b.num_edges()) return std::nullopt;
  detail::CanonSearch sa(a), sb(b);
  sa.run(detail::unit_partition(a));
  sb.run(detail::unit_partition(b));
  if (sa.best_enc != sb.best_enc) return std::nullopt;
  GraphBijection f;
  f.vertex_map.assign(a.n(), -1);
  for (int i = 0; i < a.n(); ++i) f.vertex_map[sa.best_order[i]] = sb.best_order[i];
  f.preserves_labels = preserves_labels(a, b, f.vertex_map);
  return f;
}

// All label-preserving automorphisms, in increasing lexicographic order.
inline std::vector<Perm> all_automorphisms(const LabelledGraph& g) {
  const int n = g.n();
  auto part = detail::refine(g, detail::unit_partition(g));
  std::vector<int> color(n);
  for (std::size_t c = 0; c < part.size(); ++c)
    for (int v : part[c]) color[v] = static_cast<int>(c);
  std::vector<Perm> out;
  Perm map(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(map);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || color[w] != color[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.label(u, v) != g.label(map[u], w)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      self(self, v + 1);
      used[w] = 0;
      map[v] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

struct AutomorphismGroup {
  std::vector<GraphBijection> generators;
  std::uint64_t order = 1;
};

inline AutomorphismGroup automorphism_group(const LabelledGraph& g) {
  auto all = all_automorphisms(g);
  AutomorphismGroup r;
  r.order = all.size();
  PermGroup grp(g.n());
  for (const auto& p : all) {
    if (perm_is_identity(p) || grp.contains(p)) continue;
    grp.add_generator(p);
    r.generators.push_back({p, true});
  }
  return r;
}

struct VertexRigidity {
  bool rigid = true;
  std::optional<std::pair<int, Perm>> witness;
  // Alternative readings of "fixes the neighbourhood".
  bool rigid_pointwise_open = true;
  bool rigid_setwise_closed = true;
};

inline VertexRigidity is_vertex_rigid(const LabelledGraph& g) {
  VertexRigidity r;
  for (const auto& p : all_automorphisms(g)) {
    if (perm_is_identity(p)) continue;
    for (int v = 0; v < g.n(); ++v) {
      bool open_fixed = true;
      for (int w : g.neighbours(v))
        if (p[w] != w) { open_fixed = false; break; }
      if (open_fixed) {
        r.rigid_pointwise_open = false;
        if (p[v] == v) {
          if (r.rigid) r.witness = std::make_pair(v, p);
          r.rigid = false;
        }
      }
      std::vector<int> closed = g.neighbours(v);
      closed.push_back(v);
      std::vector<int> image;
      for (int w : closed) image.push_back(p[w]);
      std::sort(closed.begin(), closed.end());
      std::sort(image.begin(), image.end());
      if (closed == image) r.rigid_setwise_closed = false;
    }
  }
  return r;
}

}  // namespace clttf
