#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "clttf/coxeter.hpp"
#include "clttf/decomposition.hpp"
#include "clttf/defgraph.hpp"
#include "clttf/dihedral.hpp"

namespace clttf {

// ---------------------------------------------------------------------------
// Fundamental region: one square (V_empty, V_s, V_e, V_t) per edge.

struct FundamentalRegion {
  enum class Type { Empty, Vertex, Edge };
  std::vector<std::string> names;
  std::vector<Type> types;
  std::vector<int> origin;  // vertex or edge index of the graph; -1 for V_empty
  std::vector<std::array<int, 4>> squares;

  // The link of V_empty: neighbours are the V_s, squares give the edges.
  LabelledGraph base_link(const LabelledGraph& g) const {
    std::vector<std::string> link_names;
    std::map<int, int> idx;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (types[i] == Type::Vertex) {
        idx[static_cast<int>(i)] = static_cast<int>(link_names.size());
        link_names.push_back(g.name(origin[i]));
      }
    std::vector<Edge> edges;
    for (const auto& sq : squares) edges.push_back({idx.at(sq[1]), idx.at(sq[3]), g.edge(origin[sq[2]]).m});
    return LabelledGraph(link_names, edges);
  }
};

inline FundamentalRegion build_K(const LabelledGraph& g) {
  FundamentalRegion k;
  auto add = [&](std::string n, FundamentalRegion::Type t, int o) {
    k.names.push_back(std::move(n));
    k.types.push_back(t);
    k.origin.push_back(o);
    return static_cast<int>(k.names.size()) - 1;
  };
  int base = add("V_empty", FundamentalRegion::Type::Empty, -1);
  std::vector<int> vs(g.n());
  for (int v = 0; v < g.n(); ++v) vs[v] = add("V_" + g.name(v), FundamentalRegion::Type::Vertex, v);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    int ve = add("V_" + g.name(e.u) + g.name(e.v), FundamentalRegion::Type::Edge, i);
    k.squares.push_back({base, vs[e.u], ve, vs[e.v]});
  }
  return k;
}

// ---------------------------------------------------------------------------
// Link of a rank-2 vertex: vertices are cosets g<s>, g<t>; edge gE joins them.

// A syllable of a word over <s> * <t>: letter 1 = s, 2 = t.
struct Power {
  int letter = 1;
  long long exp = 0;
  bool operator==(const Power& o) const { return letter == o.letter && exp == o.exp; }
  bool operator<(const Power& o) const { return letter != o.letter ? letter < o.letter : exp < o.exp; }
};
using SyllableWord = std::vector<Power>;

inline std::string syllable_string(const SyllableWord& w) {
  std::string out;
  for (const auto& p : w) {
    if (!out.empty()) out += ' ';
    out += p.letter == 1 ? "s" : "t";
    if (p.exp != 1) out += "^" + std::to_string(p.exp);
  }
  return out;
}

inline SyllableWord syllable_inverse(const SyllableWord& w) {
  SyllableWord r(w.rbegin(), w.rend());
  for (auto& p : r) p.exp = -p.exp;
  return r;
}

inline DihedralElement syllable_value(int m, const SyllableWord& w) {
  DihedralElement g(m);
  for (const auto& p : w) g = g * DihedralElement::generator(m, p.letter).pow(p.exp);
  return g;
}

struct LinkBall {
  int m = 3;
  int radius = 0;   // circuit-length budget
  int window = 3;   // exponents |j| <= window at each step
  std::vector<DihedralElement> edges;       // edge i is g_i E
  std::vector<std::pair<int, int>> ends;    // (S-vertex, T-vertex)
  std::vector<char> vtype;                  // 'S' or 'T'
  std::vector<DihedralElement> vkey;        // canonical coset representative
  std::vector<std::vector<int>> incident;   // vertex -> edges
  std::vector<int> edge_depth;
  int base = 0;

  int num_vertices() const { return static_cast<int>(vtype.size()); }
  int base_s() const { return ends[base].first; }
  int base_t() const { return ends[base].second; }
};

// g<u> has exactly one element of length 0: g u^(-len g).
inline DihedralElement coset_key(const DihedralElement& g, int letter) {
  return g * DihedralElement::generator(g.m(), letter).pow(-g.length());
}

inline LinkBall link_ball(int m, int radius, int window = 3) {
  if (m < 3) throw std::invalid_argument("link ball needs m >= 3");
  if (radius < 1 || window < 1) throw std::invalid_argument("radius and window must be positive");
  LinkBall b;
  b.m = m;
  b.radius = radius;
  b.window = window;
  const int depth = (radius + 1) / 2;
  std::unordered_map<DihedralElement, int, DihedralElementHash> eidx, sidx, tidx;
  auto vertex = [&](const DihedralElement& g, int letter) {
    auto key = coset_key(g, letter);
    auto& map = letter == 1 ? sidx : tidx;
    auto it = map.find(key);
    if (it != map.end()) return it->second;
    int id = b.num_vertices();
    b.vtype.push_back(letter == 1 ? 'S' : 'T');
    b.vkey.push_back(key);
    b.incident.emplace_back();
    map.emplace(key, id);
    return id;
  };
  auto add_edge = [&](const DihedralElement& g, int d) {
    auto it = eidx.find(g);
    if (it != eidx.end()) return -1;
    int id = static_cast<int>(b.edges.size());
    eidx.emplace(g, id);
    b.edges.push_back(g);
    int vs = vertex(g, 1), vt = vertex(g, 2);
    b.ends.push_back({vs, vt});
    b.incident[vs].push_back(id);
    b.incident[vt].push_back(id);
    b.edge_depth.push_back(d);
    return id;
  };
  std::vector<DihedralElement> powers[3];
  for (int letter : {1, 2})
    for (int j = -window; j <= window; ++j)
      if (j) powers[letter].push_back(DihedralElement::generator(m, letter).pow(j));
  b.base = add_edge(DihedralElement(m), 0);
  std::deque<int> q{b.base};
  while (!q.empty()) {
    int e = q.front();
    q.pop_front();
    if (b.edge_depth[e] >= depth) continue;
    for (int letter : {1, 2})
      for (const auto& p : powers[letter]) {
        DihedralElement h = b.edges[e] * p;
        int id = add_edge(h, b.edge_depth[e] + 1);
        if (id >= 0) q.push_back(id);
      }
  }
  return b;
}

struct LinkCircuit {
  std::vector<int> edges;  // starts with the base edge, leaves it through T
  SyllableWord word;       // a_1 ... a_n with g_i = a_1 ... a_i
};

namespace detail {

inline std::vector<int> link_vertex_distances(const LinkBall& b, int src, int skip_edge) {
  std::vector<int> d(b.num_vertices(), -1);
  std::deque<int> q{src};
  d[src] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int e : b.incident[x]) {
      if (e == skip_edge) continue;
      int y = b.ends[e].first == x ? b.ends[e].second : b.ends[e].first;
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
    }
  }
  return d;
}

}  // namespace detail

// Shortest circuit through the base edge, in edges; -1 if none in the ball.
inline int girth_through_base(const LinkBall& b) {
  auto d = detail::link_vertex_distances(b, b.base_t(), b.base);
  int x = d[b.base_s()];
  return x < 0 ? -1 : x + 1;
}

inline SyllableWord circuit_word(const LinkBall& b, const std::vector<int>& edges) {
  SyllableWord w;
  const int n = static_cast<int>(edges.size());
  for (int i = 1; i <= n; ++i) {
    int prev = edges[i - 1], cur = edges[i % n];
    int letter = (b.ends[prev].first == b.ends[cur].first) ? 1 : 2;
    DihedralElement a = b.edges[prev].inverse() * b.edges[cur];
    Power p{letter, a.length()};
    if (DihedralElement::generator(b.m, letter).pow(p.exp) != a) throw std::logic_error("step is not a power of a generator");
    w.push_back(p);
  }
  return w;
}

// Simple circuits of exactly `len` edges through the base edge.
inline std::vector<LinkCircuit> circuits_through_base(const LinkBall& b, int len) {
  std::vector<LinkCircuit> out;
  const int target = b.base_s();
  auto dist = detail::link_vertex_distances(b, target, b.base);
  std::vector<char> on(b.num_vertices(), 0);
  std::vector<int> path{b.base};
  on[b.base_t()] = 1;
  auto dfs = [&](auto&& self, int x) -> void {
    int used = static_cast<int>(path.size()) - 1;
    int left = len - 1 - used;
    if (x == target) {
      if (left == 0) out.push_back({path, circuit_word(b, path)});
      return;
    }
    if (left <= 0 || dist[x] < 0 || dist[x] > left) return;
    for (int e : b.incident[x]) {
      if (e == b.base) continue;
      int y = b.ends[e].first == x ? b.ends[e].second : b.ends[e].first;
      if (on[y]) continue;
      on[y] = 1;
      path.push_back(e);
      self(self, y);
      path.pop_back();
      on[y] = 0;
    }
  };
  dfs(dfs, b.base_t());
  return out;
}

// Balanced words of length 2m: family 0 starts with s^n, family 1 with t^n.
inline SyllableWord balanced_word(int m, int family, long long n) {
  const int first = family == 0 ? 1 : 2, other = 3 - first;
  SyllableWord half1, half2;
  for (int i = 0; i < m; ++i) half1.push_back({i % 2 == 0 ? first : other, i == 0 ? n : 1});
  for (int i = 0; i < m; ++i) half2.push_back({i % 2 == 0 ? other : first, i == m - 1 ? n : 1});
  SyllableWord w = half1;
  for (const auto& p : syllable_inverse(half2)) w.push_back(p);
  return w;
}

struct Classification {
  bool matched = false;
  int family = -1;
  long long n = 0;
};

inline bool cyclically_equal_up_to_inversion(const SyllableWord& a, const SyllableWord& b) {
  if (a.size() != b.size()) return false;
  for (const SyllableWord& x : {b, syllable_inverse(b)})
    for (std::size_t r = 0; r < x.size(); ++r) {
      bool eq = true;
      for (std::size_t i = 0; i < a.size() && eq; ++i) eq = a[i] == x[(i + r) % x.size()];
      if (eq) return true;
    }
  return false;
}

inline Classification classify_circuit(int m, const SyllableWord& w) {
  Classification c;
  long long bound = 0;
  for (const auto& p : w) bound = std::max(bound, p.exp < 0 ? -p.exp : p.exp);
  // Positive exponents first, so a word matching both n and -n reports n > 0.
  for (int family : {0, 1})
    for (long long a = 1; a <= bound; ++a)
      for (long long n : {a, -a}) {
      if (cyclically_equal_up_to_inversion(w, balanced_word(m, family, n))) {
        c.matched = true;
        c.family = family;
        c.n = n;
        return c;
      }
    }
  return c;
}

struct ClassifiedCircuits {
  std::vector<LinkCircuit> circuits;
  std::vector<Classification> classes;
  int unmatched = 0;
};

inline ClassifiedCircuits classify_min_circuits(const LinkBall& b) {
  ClassifiedCircuits r;
  r.circuits = circuits_through_base(b, 2 * b.m);
  for (const auto& c : r.circuits) {
    r.classes.push_back(classify_circuit(b.m, c.word));
    if (!r.classes.back().matched) ++r.unmatched;
  }
  return r;
}

struct RigidityCounts {
  std::map<long long, int> pair;  // k -> circuits containing (E, s^k E) consecutively
  int triple_t = 0;               // circuits with |exponents| = 1 through (sE, E, tE)
  int triple_tinv = 0;            // ... through (sE, E, t^-1 E)
  int subword_st = 0;             // occurrences of st or its inverse in the n = 1 cyclic word
  int subword_stinv = 0;          // occurrences of st^-1 or its inverse
  int total = 0;
  int unit_total = 0;
};

inline RigidityCounts rigidity_counts(const LinkBall& b) {
  RigidityCounts r;
  auto cs = circuits_through_base(b, 2 * b.m);
  r.total = static_cast<int>(cs.size());
  for (const auto& c : cs) {
    const Power& last = c.word.back();
    const Power& first = c.word.front();
    r.pair[-last.exp] += 1;
    bool unit = std::all_of(c.word.begin(), c.word.end(), [](const Power& p) { return p.exp == 1 || p.exp == -1; });
    if (!unit) continue;
    ++r.unit_total;
    if (last.exp == -1 && first.exp == 1) ++r.triple_t;
    if (last.exp == -1 && first.exp == -1) ++r.triple_tinv;
  }
  SyllableWord w = balanced_word(b.m, 0, 1);
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Power& x = w[i];
    const Power& y = w[(i + 1) % n];
    auto is = [&](int l1, int e1, int l2, int e2) { return x.letter == l1 && x.exp == e1 && y.letter == l2 && y.exp == e2; };
    if (is(1, 1, 2, 1) || is(2, -1, 1, -1)) ++r.subword_st;
    if (is(1, 1, 2, -1) || is(2, 1, 1, -1)) ++r.subword_stinv;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Finite ball of the fixed-set graph of the Coxeter group: V-vertices are
// cosets wW_e, F-vertices are reflections conjugate to a CNVA generator.

struct ThetaWBall {
  LabelledGraph g;
  int L = 0;
  PlainGraph graph;                     // type 'V' / 'F'; origin = edge index for V
  std::vector<CoxeterElement> element;  // V: minimal coset representative; F: the reflection
  std::vector<int> depth;
  std::unordered_map<std::string, int> index;

  bool safe(int v, int max_len) const { return L - depth[v] > max_len / 2; }

  static std::string v_key(int edge, const CoxeterElement& w) { return "V" + std::to_string(edge) + ":" + w.nf; }
  static std::string f_key(const CoxeterElement& r) { return "F:" + r.nf; }
};

namespace detail {

// Reflections of W_e as alternating words of odd length, with their centre letter.
inline std::vector<std::pair<CWord, int>> edge_reflections(const Edge& e) {
  std::vector<std::pair<CWord, int>> out;
  for (int i = 0; i < e.m; ++i) {
    CWord w;
    for (int j = 0; j < 2 * i + 1; ++j) w.push_back(j % 2 == 0 ? e.u : e.v);
    out.push_back({w, w[i]});
  }
  return out;
}

inline CoxeterElement min_coset_rep(const Coxeter& W, CoxeterElement w, const Edge& e) {
  while (true) {
    if (W.has_right_descent(w, e.u)) w = W.multiply(w, e.u);
    else if (W.has_right_descent(w, e.v)) w = W.multiply(w, e.v);
    else return w;
  }
}

// Whether the conjugacy class of each generator contains a CNVA generator.
inline std::vector<char> cnva_classes(const LabelledGraph& g) {
  std::vector<int> comp(g.n());
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (const auto& e : g.edges())
    if (e.m % 2) comp[find(e.u)] = find(e.v);
  std::vector<char> good_root(g.n(), 0), out(g.n(), 0);
  for (int v : cnva_generators(g)) good_root[find(v)] = 1;
  for (int v = 0; v < g.n(); ++v) out[v] = good_root[find(v)];
  return out;
}

}  // namespace detail

inline ThetaWBall theta_w_ball(const LabelledGraph& g, int L) {
  require_clttf(g);
  if (L < 0) throw std::invalid_argument("ball length must be non-negative");
  ThetaWBall t;
  t.g = g;
  t.L = L;
  Coxeter W(g);
  auto good = detail::cnva_classes(g);
  auto node = [&](const std::string& key, char type, int origin, const CoxeterElement& el, int d) {
    auto it = t.index.find(key);
    if (it != t.index.end()) {
      t.depth[it->second] = std::min(t.depth[it->second], d);
      return it->second;
    }
    int id = t.graph.add_vertex(key, type, origin);
    t.element.push_back(el);
    t.depth.push_back(d);
    t.index.emplace(key, id);
    return id;
  };
  for (const auto& w : W.ball(L)) {
    for (int k = 0; k < g.num_edges(); ++k) {
      const Edge& e = g.edge(k);
      if (W.has_right_descent(w, e.u) || W.has_right_descent(w, e.v)) continue;
      int d = static_cast<int>(w.length());
      int v = node(ThetaWBall::v_key(k, w), 'V', k, w, d);
      CoxeterElement winv = W.inverse(w);
      for (const auto& [word, centre] : detail::edge_reflections(e)) {
        if (!good[centre]) continue;
        CoxeterElement r = W.product(W.product(w, W.element(word)), winv);
        int f = node(ThetaWBall::f_key(r), 'F', -1, r, d);
        t.graph.add_edge(v, f);
      }
    }
  }
  return t;
}

struct BasicWitness {
  CoxeterElement w;
  std::vector<int> hat_cycle;  // vertices of the subdivided graph
  bool minimal_in_hat = false;
};

namespace detail {

inline bool in_parabolic(const CoxeterElement& x, const Edge& e) {
  for (char c : x.nf)
    if (c != e.u && c != e.v) return false;
  return true;
}

inline std::vector<CoxeterElement> parabolic_elements(const Coxeter& W, const Edge& e) {
  std::vector<CoxeterElement> out;
  std::set<std::string> seen;
  for (int first : {e.u, e.v})
    for (int len = 0; len <= e.m; ++len) {
      CWord w;
      for (int j = 0; j < len; ++j) w.push_back(j % 2 == 0 ? first : (first == e.u ? e.v : e.u));
      auto x = W.element(w);
      if (seen.insert(x.nf).second) out.push_back(x);
    }
  return out;
}

}  // namespace detail

// Searches w in w1 W_e1 with w^-1 * circuit inside the fundamental subgraph.
inline std::optional<BasicWitness> identify_basic(const ThetaWBall& t, const std::vector<int>& circuit) {
  const auto& g = t.g;
  Coxeter W(g);
  PlainGraph hat = hat_graph(g);
  std::map<std::pair<char, int>, int> hat_of;
  for (int i = 0; i < hat.n(); ++i) hat_of[{hat.type[i], hat.origin[i]}] = i;
  int first_v = -1;
  for (int x : circuit)
    if (t.graph.type[x] == 'V') { first_v = x; break; }
  if (first_v < 0) return std::nullopt;
  const Edge& e1 = g.edge(t.graph.origin[first_v]);
  for (const auto& p : detail::parabolic_elements(W, e1)) {
    CoxeterElement w = W.product(t.element[first_v], p);
    CoxeterElement winv = W.inverse(w);
    std::vector<int> image;
    bool ok = true;
    for (int x : circuit) {
      if (t.graph.type[x] == 'V') {
        int k = t.graph.origin[x];
        if (!detail::in_parabolic(W.product(winv, t.element[x]), g.edge(k))) { ok = false; break; }
        image.push_back(hat_of.at({'V', k}));
      } else {
        CoxeterElement y = W.product(W.product(winv, t.element[x]), w);
        if (y.length() != 1) { ok = false; break; }
        auto it = hat_of.find({'F', static_cast<int>(y.nf[0])});
        if (it == hat_of.end()) { ok = false; break; }
        image.push_back(it->second);
      }
    }
    if (!ok) continue;
    BasicWitness bw;
    bw.w = w;
    bw.hat_cycle = image;
    std::vector<std::vector<int>> rows;
    for (int v : image) rows.push_back(bfs_distances(hat, v));
    bw.minimal_in_hat = is_isometric_cycle(image, rows);
    return bw;
  }
  return std::nullopt;
}

struct SafeCircuit {
  std::vector<int> vertices;
  bool isometric = false;
  std::optional<BasicWitness> basic;
};

struct MinimalBasicReport {
  int max_len = 0;
  std::vector<SafeCircuit> circuits;
  int isometric = 0;
  int basic = 0;
  int counterexamples = 0;
  int safe_vertices = 0;
};

namespace detail {

inline std::vector<int> limited_bfs(const PlainGraph& p, int src, int limit) {
  std::vector<int> d(p.n(), -1);
  std::deque<int> q{src};
  d[src] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (d[x] >= limit) continue;
    for (int y : p.adj[x])
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
  }
  return d;
}

}  // namespace detail

// Circuits of length <= max_len among safe vertices; isometry is judged
// with distances in the whole ball, capped at max_len/2.
inline MinimalBasicReport verify_minimal_equals_basic(const ThetaWBall& t, int max_len) {
  MinimalBasicReport rep;
  rep.max_len = max_len;
  std::vector<int> local_to_ball;
  std::vector<int> ball_to_local(t.graph.n(), -1);
  PlainGraph safe;
  for (int v = 0; v < t.graph.n(); ++v)
    if (t.safe(v, max_len)) {
      ball_to_local[v] = safe.add_vertex(t.graph.names[v], t.graph.type[v], t.graph.origin[v]);
      local_to_ball.push_back(v);
    }
  rep.safe_vertices = safe.n();
  for (int v = 0; v < t.graph.n(); ++v) {
    if (ball_to_local[v] < 0) continue;
    for (int y : t.graph.adj[v])
      if (ball_to_local[y] > ball_to_local[v]) safe.add_edge(ball_to_local[v], ball_to_local[y]);
  }
  std::unordered_map<int, std::vector<int>> dist;
  const int cap = max_len / 2;
  for (const auto& cyc : simple_cycles(safe, max_len)) {
    SafeCircuit c;
    for (int x : cyc) c.vertices.push_back(local_to_ball[x]);
    std::vector<std::vector<int>> rows;
    for (int v : c.vertices) {
      auto it = dist.find(v);
      if (it == dist.end()) it = dist.emplace(v, detail::limited_bfs(t.graph, v, cap)).first;
      rows.push_back(it->second);
    }
    c.isometric = is_isometric_cycle(c.vertices, rows);
    c.basic = identify_basic(t, c.vertices);
    bool basic_minimal = c.basic && c.basic->minimal_in_hat;
    rep.isometric += c.isometric;
    rep.basic += basic_minimal;
    if (c.isometric != basic_minimal) ++rep.counterexamples;
    rep.circuits.push_back(std::move(c));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Equivalence of minimal circuits by shared (F, V, F) subpaths.

class CircuitEquivalence {
 public:
  CircuitEquivalence(const ThetaWBall& t, std::vector<std::vector<int>> circuits)
      : t_(t), circuits_(std::move(circuits)) {
    for (int i = 0; i < static_cast<int>(circuits_.size()); ++i) {
      const auto& c = circuits_[i];
      const int n = static_cast<int>(c.size());
      for (int j = 0; j < n; ++j) {
        int v = c[j];
        if (t_.graph.type[v] != 'V') continue;
        int a = c[(j + n - 1) % n], b = c[(j + 1) % n];
        paths_[{a, v, b}].push_back(i);
        paths_[{b, v, a}].push_back(i);
        through_[a].push_back(i);
        through_[b].push_back(i);
      }
    }
    for (auto& [k, v] : through_) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }

  int size() const { return static_cast<int>(circuits_.size()); }

  // Circuits one-step equivalent to circuit i.
  std::vector<int> one_step(int i) {
    std::set<int> out;
    const auto& c = circuits_[i];
    const int n = static_cast<int>(c.size());
    for (int j = 0; j < n; ++j) {
      int v = c[j];
      if (t_.graph.type[v] != 'V') continue;
      for (auto [s, tt] : {std::pair{c[(j + n - 1) % n], c[(j + 1) % n]}, std::pair{c[(j + 1) % n], c[(j + n - 1) % n]}}) {
        const auto& comp = components(s, v);
        for (int other : paths_[{s, v, tt}])
          if (other != i && comp.at(other) == comp.at(i)) out.insert(other);
      }
    }
    return {out.begin(), out.end()};
  }

  // Whether c2 is reachable from c1 in at most `depth` elementary steps.
  bool equivalent(int c1, int c2, int depth) {
    if (c1 == c2) return true;
    std::map<int, int> d{{c1, 0}};
    std::deque<int> q{c1};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      if (d[x] >= depth) continue;
      for (int y : one_step(x))
        if (!d.count(y)) {
          if (y == c2) return true;
          d[y] = d[x] + 1;
          q.push_back(y);
        }
    }
    return false;
  }

 private:
  // Circuits through S joined when they share (S, V', T') with V' != V.
  const std::map<int, int>& components(int s, int v) {
    auto key = std::make_pair(s, v);
    auto it = comp_cache_.find(key);
    if (it != comp_cache_.end()) return it->second;
    const auto& members = through_[s];
    std::map<int, int> parent;
    for (int x : members) parent[x] = x;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& [p, list] : paths_) {
      if (std::get<0>(p) != s || std::get<1>(p) == v) continue;
      for (std::size_t i = 1; i < list.size(); ++i) parent[find(list[i])] = find(list[0]);
    }
    std::map<int, int> comp;
    for (int x : members) comp[x] = find(x);
    return comp_cache_.emplace(key, std::move(comp)).first->second;
  }

  const ThetaWBall& t_;
  std::vector<std::vector<int>> circuits_;
  std::map<std::tuple<int, int, int>, std::vector<int>> paths_;
  std::map<int, std::vector<int>> through_;
  std::map<std::pair<int, int>, std::map<int, int>> comp_cache_;
};

// Vertex keys of the translate w * (full subgraph of the hat graph on a chunk).
inline std::set<std::string> chunk_translate_keys(const ThetaWBall& t, const CoxeterElement& w, const Chunk& chunk) {
  const auto& g = t.g;
  Coxeter W(g);
  std::set<std::string> keys;
  std::vector<char> in(g.n(), 0);
  for (int v : chunk.vertices) in[v] = 1;
  CoxeterElement winv = W.inverse(w);
  for (int k : chunk.edges) {
    keys.insert(ThetaWBall::v_key(k, detail::min_coset_rep(W, w, g.edge(k))));
  }
  for (int v : chunk.vertices)
    if (g.degree(v) >= 2) keys.insert(ThetaWBall::f_key(W.product(W.product(w, W.generator(v)), winv)));
  return keys;
}

struct ChunkEquivalenceReport {
  int circuits = 0;
  int pairs = 0;
  int agree = 0;
  int disagree = 0;
  int equivalent_pairs = 0;
  int same_chunk_pairs = 0;
};

// Chunk of the hat graph containing a hat cycle (by its V-vertices).
inline int hat_cycle_chunk(const LabelledGraph& g, const ChunkDecomposition& d, const std::vector<int>& hat_cycle) {
  PlainGraph hat = hat_graph(g);
  std::set<int> edges;
  for (int x : hat_cycle)
    if (hat.type[x] == 'V') edges.insert(hat.origin[x]);
  for (int i = 0; i < d.N; ++i) {
    const auto& ce = d.chunks[i].edges;
    if (std::all_of(edges.begin(), edges.end(), [&](int k) { return std::binary_search(ce.begin(), ce.end(), k); })) return i;
  }
  return -1;
}

inline ChunkEquivalenceReport compare_chunk_equivalence(const ThetaWBall& t, const MinimalBasicReport& rep, int depth) {
  ChunkEquivalenceReport r;
  std::vector<std::vector<int>> circuits;
  std::vector<std::set<std::string>> chunk_keys;
  auto d = chunks(t.g);
  for (const auto& c : rep.circuits) {
    if (!c.isometric || !c.basic) continue;
    circuits.push_back(c.vertices);
    int ch = hat_cycle_chunk(t.g, d, c.basic->hat_cycle);
    auto keys = chunk_translate_keys(t, c.basic->w, d.chunks.at(ch));
    keys.insert("chunk:" + std::to_string(ch));
    chunk_keys.push_back(std::move(keys));
  }
  CircuitEquivalence eq(t, circuits);
  r.circuits = eq.size();
  for (int i = 0; i < eq.size(); ++i)
    for (int j = i + 1; j < eq.size(); ++j) {
      ++r.pairs;
      bool e = eq.equivalent(i, j, depth);
      bool same = chunk_keys[i] == chunk_keys[j];
      r.equivalent_pairs += e;
      r.same_chunk_pairs += same;
      if (e == same) ++r.agree;
      else ++r.disagree;
    }
  return r;
}

inline std::string theta_dot(const ThetaWBall& t, const MinimalBasicReport& rep) {
  std::vector<int> color(t.graph.n(), -1);
  auto d = chunks(t.g);
  for (const auto& c : rep.circuits)
    if (c.basic) {
      int ch = hat_cycle_chunk(t.g, d, c.basic->hat_cycle);
      for (int v : c.vertices) color[v] = ch;
    }
  std::ostringstream out;
  out << "graph theta {\n";
  for (int v = 0; v < t.graph.n(); ++v) {
    out << "  n" << v << " [label=\"" << (t.graph.type[v] == 'V' ? "V" : "F") << v << "\", shape="
        << (t.graph.type[v] == 'V' ? "box" : "ellipse");
    if (color[v] >= 0) out << ", color=" << (color[v] + 1) << ", colorscheme=set19";
    out << "];\n";
  }
  for (int v = 0; v < t.graph.n(); ++v)
    for (int y : t.graph.adj[v])
      if (y > v) out << "  n" << v << " -- n" << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace clttf
