#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "clttf/coxeter.hpp"
#include "clttf/decomposition.hpp"
#include "clttf/defgraph.hpp"
#include "clttf/dihedral.hpp"
#include "clttf/perm.hpp"
#include "clttf/twist.hpp"

namespace clttf {

// Artin words: letter +(v+1) is the generator v, -(v+1) its inverse.
using AWord = std::vector<int>;

inline int aletter(int v, bool inv = false) { return inv ? -(v + 1) : v + 1; }
inline int avertex(int letter) { return (letter < 0 ? -letter : letter) - 1; }

inline AWord aword_inverse(const AWord& w) {
  AWord r(w.rbegin(), w.rend());
  for (auto& l : r) l = -l;
  return r;
}

inline AWord aword_concat(std::initializer_list<AWord> parts) {
  AWord r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

inline AWord free_reduce(const AWord& w) {
  AWord st;
  for (int l : w) {
    if (!st.empty() && st.back() == -l) st.pop_back();
    else st.push_back(l);
  }
  return st;
}

inline AWord cyclic_reduce(AWord w) {
  w = free_reduce(w);
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) ++i, --j;
  return AWord(w.begin() + i, w.begin() + j);
}

inline CWord coxeter_image(const AWord& w) {
  CWord c;
  for (int l : w) c.push_back(avertex(l));
  return c;
}

inline AWord alternating(int a, int b, int m) {
  AWord w;
  for (int i = 0; i < m; ++i) w.push_back(aletter(i % 2 == 0 ? a : b));
  return w;
}

// x_e = prod(u,v;m) and z_e = (uv)^k for the edge with index k.
inline AWord quasi_centre_word(const LabelledGraph& g, int k) {
  const Edge& e = g.edge(k);
  return alternating(e.u, e.v, e.m);
}

inline AWord centre_word(const LabelledGraph& g, int k) {
  const Edge& e = g.edge(k);
  return alternating(e.u, e.v, 2 * quasi_centre_k(e.m));
}

inline std::string aword_string(const LabelledGraph& g, const AWord& w) {
  std::string out;
  for (int l : w) {
    if (!out.empty()) out += ' ';
    out += g.name(avertex(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

inline AWord parse_aword(const LabelledGraph& g, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  AWord w;
  while (in >> tok) {
    bool inv = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    w.push_back(aletter(g.vertex(tok), inv));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Exact arithmetic inside a single edge subgroup G(e).

namespace detail {

inline DWord to_dword(const AWord& w, int a, int b) {
  DWord d;
  for (int l : w) {
    int v = avertex(l);
    int x = v == a ? 1 : (v == b ? 2 : 0);
    if (!x) throw std::logic_error("letter outside edge alphabet");
    d.push_back(l < 0 ? -x : x);
  }
  return d;
}

// Shortest words of G(m) up to a length bound, keyed by normal form.
class ShortWordTable {
 public:
  explicit ShortWordTable(int m, int max_len = 7) : m_(m) {
    std::deque<DWord> q{DWord{}};
    table_.emplace(DihedralElement(m), DWord{});
    while (!q.empty()) {
      DWord w = q.front();
      q.pop_front();
      if (static_cast<int>(w.size()) >= max_len) continue;
      for (DLetter l : {1, 2, -1, -2}) {
        if (!w.empty() && w.back() == -l) continue;
        DWord x = w;
        x.push_back(l);
        auto e = dihedral_normal_form(m, x);
        if (table_.emplace(e, x).second) q.push_back(std::move(x));
      }
    }
  }

  std::optional<DWord> shortest(const DihedralElement& e) const {
    auto it = table_.find(e);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

 private:
  struct Less {
    bool operator()(const DihedralElement& a, const DihedralElement& b) const { return a < b; }
  };
  int m_;
  std::map<DihedralElement, DWord, Less> table_;
};

inline const ShortWordTable& short_words(int m) {
  static std::map<int, ShortWordTable> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, ShortWordTable(m)).first;
  return it->second;
}

inline std::vector<int> support(const AWord& w) {
  std::vector<int> s;
  for (int l : w) s.push_back(avertex(l));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Edge of g spanning every letter of the given words, or -1.
inline int spanning_edge(const LabelledGraph& g, std::initializer_list<const AWord*> words) {
  std::vector<int> s;
  for (const AWord* w : words) {
    auto x = support(*w);
    s.insert(s.end(), x.begin(), x.end());
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.size() > 2 || s.empty()) return -1;
  if (s.size() == 1) {
    if (g.neighbours(s[0]).empty()) return -1;
    return g.edge_index(s[0], g.neighbours(s[0]).front());
  }
  return g.edge_index(s[0], s[1]);
}

inline DihedralElement in_edge(const LabelledGraph& g, int k, const AWord& w) {
  const Edge& e = g.edge(k);
  return dihedral_normal_form(e.m, to_dword(w, e.u, e.v));
}

inline AWord from_dword(const DWord& d, int a, int b) {
  AWord w;
  for (DLetter l : d) w.push_back(aletter((l == 1 || l == -1) ? a : b, l < 0));
  return w;
}

// core <- h^-1 core h, pushed through h block by block; each block is a
// maximal prefix of h inside one edge subgroup together with core.
inline std::optional<AWord> push_through(const LabelledGraph& g, AWord core, AWord h) {
  h = free_reduce(h);
  std::size_t pos = 0;
  while (pos < h.size()) {
    AWord first{h[pos]};
    int k = spanning_edge(g, {&core, &first});
    if (k < 0) return std::nullopt;
    const Edge& e = g.edge(k);
    std::size_t end = pos;
    while (end < h.size() && (avertex(h[end]) == e.u || avertex(h[end]) == e.v)) ++end;
    AWord block(h.begin() + pos, h.begin() + end);
    auto y = in_edge(g, k, aword_inverse(block)) * in_edge(g, k, core) * in_edge(g, k, block);
    auto sw = short_words(e.m).shortest(y);
    if (!sw) return std::nullopt;
    core = from_dword(*sw, e.u, e.v);
    pos = end;
  }
  return core;
}

}  // namespace detail

// ---------------------------------------------------------------------------

enum class GenKind {
  Inner,
  GraphAuto,
  GlobalInversion,
  LeafInversion,
  DehnTwistEdge,
  DehnTwistVertex,
  EdgeTwist,
  DihedralTwist
};

inline const char* kind_name(GenKind k) {
  switch (k) {
    case GenKind::Inner: return "inner";
    case GenKind::GraphAuto: return "graph-automorphism";
    case GenKind::GlobalInversion: return "global-inversion";
    case GenKind::LeafInversion: return "leaf-inversion";
    case GenKind::DehnTwistEdge: return "dehn-twist-edge";
    case GenKind::DehnTwistVertex: return "dehn-twist-vertex";
    case GenKind::EdgeTwist: return "edge-twist";
    case GenKind::DihedralTwist: return "dihedral-twist";
  }
  return "?";
}

// Each vertex v maps to conj[v] * core[v] * conj[v]^-1.
struct ImageMap {
  std::vector<AWord> conj;
  std::vector<AWord> core;

  AWord image(int v) const { return aword_concat({conj[v], core[v], aword_inverse(conj[v])}); }

  static ImageMap identity(int n) {
    ImageMap m;
    m.conj.assign(n, {});
    for (int v = 0; v < n; ++v) m.core.push_back({aletter(v)});
    return m;
  }
};

// Centralizer words are over the quasi-centre elements: (edge index, +1/-1).
using XWord = std::vector<std::pair<int, int>>;

struct AutGenerator {
  GenKind kind = GenKind::Inner;
  LabelledGraph source;
  LabelledGraph target;
  ImageMap action;   // source vertices -> words in the target
  ImageMap inverse;  // target vertices -> words in the source
  Perm edge_perm;    // E(source) -> E(target)
  bool coxeter_only = false;

  int vertex = -1;
  int edge = -1;
  std::vector<int> side;
  int residue = 0;
  XWord centralizer_word;
  std::vector<int> vertex_map;

  AWord image(int v) const { return action.image(v); }
};

inline AWord xword_to_aword(const LabelledGraph& g, const XWord& x) {
  AWord w;
  for (auto [k, sgn] : x) {
    AWord q = quasi_centre_word(g, k);
    if (sgn < 0) q = aword_inverse(q);
    w.insert(w.end(), q.begin(), q.end());
  }
  return w;
}

inline std::string xword_string(const LabelledGraph& g, const XWord& x) {
  std::string out;
  for (auto [k, sgn] : x) {
    if (!out.empty()) out += ' ';
    out += "x(" + g.edge_name(k) + ")";
    if (sgn < 0) out += "^-1";
  }
  return out;
}

namespace detail {

inline AutGenerator base_generator(const LabelledGraph& g, GenKind kind) {
  AutGenerator a;
  a.kind = kind;
  a.source = g;
  a.target = g;
  a.action = ImageMap::identity(g.n());
  a.inverse = ImageMap::identity(g.n());
  a.edge_perm = perm_identity(g.num_edges());
  return a;
}

inline void conjugate_side(AutGenerator& a, const std::vector<int>& side, const AWord& c) {
  for (int v : side) {
    a.action.conj[v] = c;
    a.inverse.conj[v] = aword_inverse(c);
  }
}

}  // namespace detail

inline AutGenerator inner_generator(const LabelledGraph& g, int v) {
  auto a = detail::base_generator(g, GenKind::Inner);
  a.vertex = v;
  std::vector<int> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  detail::conjugate_side(a, all, {aletter(v)});
  return a;
}

inline std::vector<AutGenerator> graph_auto_generators(const LabelledGraph& g) {
  std::vector<AutGenerator> out;
  for (const auto& b : automorphism_group(g).generators) {
    auto a = detail::base_generator(g, GenKind::GraphAuto);
    Perm inv = perm_inverse(b.vertex_map);
    for (int v = 0; v < g.n(); ++v) {
      a.action.core[v] = {aletter(b.vertex_map[v])};
      a.inverse.core[v] = {aletter(inv[v])};
    }
    a.vertex_map = b.vertex_map;
    a.edge_perm = edge_perm_of(g, g, b.vertex_map);
    out.push_back(std::move(a));
  }
  return out;
}

inline std::vector<AutGenerator> inversion_generators(const LabelledGraph& g) {
  require_clttf(g);
  std::vector<AutGenerator> out;
  auto eps = detail::base_generator(g, GenKind::GlobalInversion);
  for (int v = 0; v < g.n(); ++v) eps.action.core[v] = eps.inverse.core[v] = {aletter(v, true)};
  out.push_back(eps);
  for (int k : separations(g).even_terminal_edges) {
    const Edge& e = g.edge(k);
    // One leaf inversion per terminal endpoint.
    for (auto [t, s] : {std::pair{e.v, e.u}, std::pair{e.u, e.v}}) {
      if (g.degree(t) != 1) continue;
      auto mu = detail::base_generator(g, GenKind::LeafInversion);
      mu.edge = k;
      mu.vertex = t;
      mu.action.core[t] = mu.inverse.core[t] = {aletter(s, true), aletter(t, true), aletter(s, true)};
      out.push_back(mu);
      break;
    }
  }
  return out;
}

inline int inversion_rank(const LabelledGraph& g) {
  return static_cast<int>(separations(g).even_terminal_edges.size()) + 1;
}

// ---------------------------------------------------------------------------
// Centralizer of a generator via the groupoid of quasi-centre arrows.

struct CentralizerPresentation {
  int vertex = -1;
  std::vector<XWord> generators;
  int rank = 0;
  int arrows = 0;
  int vertices = 0;
};

inline CentralizerPresentation centralizer_generators(const LabelledGraph& g, int s) {
  if (s < 0 || s >= g.n()) throw GraphError("not a vertex");
  struct Arrow {
    int from, to, edge;
  };
  std::vector<Arrow> arrows;
  for (int k = 0; k < g.num_edges(); ++k) {
    const Edge& e = g.edge(k);
    if (e.m % 2) {
      arrows.push_back({e.u, e.v, k});
      arrows.push_back({e.v, e.u, k});
    } else {
      arrows.push_back({e.u, e.u, k});
      arrows.push_back({e.v, e.v, k});
    }
  }
  // BFS tree from s; tree_word[r] maps s to r by conjugation.
  std::vector<std::optional<XWord>> tree_word(g.n());
  std::vector<int> tree_arrow(g.n(), -1);
  tree_word[s] = XWord{};
  std::deque<int> q{s};
  while (!q.empty()) {
    int r = q.front();
    q.pop_front();
    for (int i = 0; i < static_cast<int>(arrows.size()); ++i) {
      const auto& a = arrows[i];
      if (a.from != r || tree_word[a.to]) continue;
      XWord w{{a.edge, +1}};
      w.insert(w.end(), tree_word[r]->begin(), tree_word[r]->end());
      tree_word[a.to] = w;
      tree_arrow[a.to] = i;
      q.push_back(a.to);
    }
  }
  CentralizerPresentation p;
  p.vertex = s;
  for (int r = 0; r < g.n(); ++r) p.vertices += tree_word[r].has_value();
  for (int i = 0; i < static_cast<int>(arrows.size()); ++i) {
    const auto& a = arrows[i];
    if (!tree_word[a.from]) continue;
    ++p.arrows;
    if (tree_arrow[a.to] == i) continue;
    // tree(from), then the arrow, then back along tree(to)^-1; accumulated on the left.
    XWord back;
    for (auto it = tree_word[a.to]->rbegin(); it != tree_word[a.to]->rend(); ++it) back.push_back({it->first, -it->second});
    XWord w = back;
    w.push_back({a.edge, +1});
    w.insert(w.end(), tree_word[a.from]->begin(), tree_word[a.from]->end());
    XWord red;
    for (auto x : w) {
      if (!red.empty() && red.back().first == x.first && red.back().second == -x.second) red.pop_back();
      else red.push_back(x);
    }
    p.generators.push_back(red);
  }
  p.rank = p.arrows - p.vertices + 1;
  return p;
}

// ---------------------------------------------------------------------------
// Dehn twists. For a separation with r sides, the first r-1 sides are
// twisted; twisting every side is inner modulo those.

inline std::vector<AutGenerator> dehn_twist_generators(const LabelledGraph& g) {
  require_clttf(g);
  std::vector<AutGenerator> out;
  auto seps = separations(g);
  for (int k : seps.separating_edges) {
    auto comps = twist_components(g, k);
    AWord z = centre_word(g, k);
    for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
      auto a = detail::base_generator(g, GenKind::DehnTwistEdge);
      a.edge = k;
      a.side = comps[i];
      detail::conjugate_side(a, comps[i], z);
      out.push_back(std::move(a));
    }
  }
  for (int s : seps.separating_vertices) {
    std::vector<char> removed(g.n(), 0);
    removed[s] = 1;
    auto comps = components_without(g, removed);
    std::vector<int> comp_of(g.n(), -1);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (int v : comps[i]) comp_of[v] = static_cast<int>(i);
    auto cent = centralizer_generators(g, s);
    std::vector<std::pair<XWord, int>> words;  // word, supporting component
    for (const auto& w : cent.generators) {
      int home = -1;
      for (auto [k, sg] : w) {
        (void)sg;
        for (int v : {g.edge(k).u, g.edge(k).v})
          if (comp_of[v] >= 0) home = comp_of[v];
      }
      words.push_back({w, home});
    }
    words.push_back({{}, -1});  // conjugation by s itself
    for (const auto& [w, home] : words) {
      AWord c = w.empty() ? AWord{aletter(s)} : xword_to_aword(g, w);
      int last = static_cast<int>(comps.size()) - 1;
      if (home == last) last = last - 1;
      for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
        if (i == home || i == last) continue;
        auto a = detail::base_generator(g, GenKind::DehnTwistVertex);
        a.vertex = s;
        a.side = comps[i];
        a.centralizer_word = w;
        detail::conjugate_side(a, comps[i], c);
        out.push_back(std::move(a));
      }
    }
  }
  return out;
}

// Edge twists G(g) -> G(g') along odd separating edges, one per component.
inline std::vector<AutGenerator> edge_twist_generators(const LabelledGraph& g) {
  std::vector<AutGenerator> out;
  for (auto& [k, side] : elementary_moves(g)) {
    TwistArrow t = edge_twist(g, k, side);
    AutGenerator a;
    a.kind = GenKind::EdgeTwist;
    a.source = g;
    a.target = t.target;
    a.action = ImageMap::identity(g.n());
    a.inverse = ImageMap::identity(g.n());
    a.edge_perm = t.edge_bijection;
    a.edge = k;
    a.side = side;
    AWord x = quasi_centre_word(g, k);
    detail::conjugate_side(a, side, x);
    out.push_back(std::move(a));
  }
  return out;
}

inline std::vector<AutGenerator> artin_generators(const LabelledGraph& g) {
  require_clttf(g);
  std::vector<AutGenerator> out;
  for (int v = 0; v < g.n(); ++v) out.push_back(inner_generator(g, v));
  for (auto& a : graph_auto_generators(g)) out.push_back(std::move(a));
  for (auto& a : inversion_generators(g)) out.push_back(std::move(a));
  for (auto& a : dehn_twist_generators(g)) out.push_back(std::move(a));
  for (auto& a : edge_twist_generators(g)) out.push_back(std::move(a));
  return out;
}

// ---------------------------------------------------------------------------
// Coxeter side.

inline std::vector<CWord> coxeter_images(const ImageMap& m) {
  std::vector<CWord> out;
  for (std::size_t v = 0; v < m.core.size(); ++v) out.push_back(coxeter_image(m.image(static_cast<int>(v))));
  return out;
}

// Dihedral twists on cut edges: the side containing the first endpoint
// (that endpoint included) is conjugated by (st)^r.
inline std::vector<AutGenerator> coxeter_pure_generators(const LabelledGraph& g) {
  require_clttf(g);
  std::vector<AutGenerator> out;
  Coxeter W(g);
  for (int k : separations(g).cut_edges) {
    const Edge& e = g.edge(k);
    std::vector<char> removed(g.n(), 0);
    removed[e.v] = 1;
    std::vector<int> side;
    for (const auto& c : components_without(g, removed))
      if (std::find(c.begin(), c.end(), e.u) != c.end()) side = c;
    std::sort(side.begin(), side.end());
    for (int r : unit_residues(e.m)) {
      auto a = detail::base_generator(g, GenKind::DihedralTwist);
      a.coxeter_only = true;
      a.edge = k;
      a.side = side;
      a.residue = r;
      AWord c = alternating(e.u, e.v, 2 * r);
      for (int v : side) a.action.conj[v] = c;
      // Inverse conjugator h in W(e): the composite must fix every vertex.
      for (int len = 0; len <= e.m; ++len) {
        bool found = false;
        for (int first : {e.u, e.v}) {
          AWord h = alternating(first, first == e.u ? e.v : e.u, len);
          ImageMap inv = ImageMap::identity(g.n());
          for (int v : side) inv.conj[v] = h;
          bool ok = true;
          for (int v : side) {
            CWord comp;
            for (int l : a.action.image(v)) {
              auto w = coxeter_image(inv.image(avertex(l)));
              comp.insert(comp.end(), w.begin(), w.end());
            }
            if (W.element(comp) != W.generator(v)) { ok = false; break; }
          }
          if (ok) {
            a.inverse = inv;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

inline std::vector<AutGenerator> coxeter_generators(const LabelledGraph& g) {
  auto out = artin_generators(g);
  for (auto& a : coxeter_pure_generators(g)) out.push_back(std::move(a));
  return out;
}

// ---------------------------------------------------------------------------
// Verification.

struct GeneratorCheck {
  bool homomorphism = true;
  bool inverse_ok = true;
  std::string failing_relator;
};

// Relator images in G(target): for each edge {u,v}, the conjugators of u and
// v are brought together by pushing one core through the other's conjugator,
// then the remaining relator is evaluated in one edge subgroup.
inline GeneratorCheck verify_artin(const AutGenerator& a) {
  GeneratorCheck c;
  const auto& src = a.source;
  const auto& tgt = a.target;
  for (const auto& e : src.edges()) {
    const AWord& gu = a.action.conj[e.u];
    const AWord& gv = a.action.conj[e.v];
    AWord cu = a.action.core[e.u], cv = a.action.core[e.v];
    AWord h = free_reduce(aword_concat({aword_inverse(gu), gv}));
    bool ok = false;
    if (auto pu = detail::push_through(tgt, cu, h)) {
      cu = *pu;
      ok = true;
    } else if (auto pv = detail::push_through(tgt, cv, aword_inverse(h))) {
      cv = *pv;
      ok = true;
    }
    if (ok) {
      AWord lhs, rhs;
      for (int i = 0; i < e.m; ++i) {
        const AWord& x = i % 2 == 0 ? cu : cv;
        const AWord& y = i % 2 == 0 ? cv : cu;
        lhs.insert(lhs.end(), x.begin(), x.end());
        rhs.insert(rhs.end(), y.begin(), y.end());
      }
      AWord rel = cyclic_reduce(aword_concat({lhs, aword_inverse(rhs)}));
      if (!rel.empty()) {
        int k = detail::spanning_edge(tgt, {&rel});
        ok = k >= 0 && detail::in_edge(tgt, k, rel).is_identity();
      }
    }
    if (!ok) {
      c.homomorphism = false;
      c.failing_relator = "braid(" + src.name(e.u) + "," + src.name(e.v) + ";" + std::to_string(e.m) + ")";
      return c;
    }
  }
  // Inverse: psi(phi(v)) freely reduces to v.
  for (int v = 0; v < src.n(); ++v) {
    AWord comp;
    for (int l : a.action.image(v)) {
      AWord w = a.inverse.image(avertex(l));
      if (l < 0) w = aword_inverse(w);
      comp.insert(comp.end(), w.begin(), w.end());
    }
    if (free_reduce(comp) != AWord{aletter(v)}) {
      c.inverse_ok = false;
      break;
    }
  }
  return c;
}

inline GeneratorCheck verify_coxeter(const AutGenerator& a) {
  GeneratorCheck c;
  Coxeter W(a.target);
  auto hc = verify_homomorphism(a.source, W, coxeter_images(a.action));
  c.homomorphism = hc.ok;
  c.failing_relator = hc.failing_relator;
  Coxeter W0(a.source);
  auto inv = coxeter_images(a.inverse);
  for (int v = 0; v < a.source.n(); ++v) {
    CWord comp;
    for (int l : a.image(v)) {
      const auto& w = inv[avertex(l)];
      comp.insert(comp.end(), w.begin(), w.end());
    }
    if (W0.element(comp) != W0.generator(v)) {
      c.inverse_ok = false;
      break;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Commutation of Dehn twists that fix a common base chunk.

inline AWord apply_image(const ImageMap& m, const AWord& w) {
  AWord out;
  for (int l : w) {
    AWord x = m.image(avertex(l));
    if (l < 0) x = aword_inverse(x);
    out.insert(out.end(), x.begin(), x.end());
  }
  return out;
}

struct CommutationReport {
  bool applies = false;  // no separating vertices: the twists should commute
  std::vector<int> base_chunk;
  int twists = 0;
  int pairs = 0;
  int commuting = 0;  // composites agree after free reduction
  std::vector<std::pair<int, int>> unresolved;
};

// Edge Dehn twists only. Twisting a side by c equals, up to an inner
// automorphism, twisting the remaining sides by c^-1; each twist is rewritten
// so the base chunk is fixed. Pairs whose composites differ as free words are
// reported, not assumed.
inline CommutationReport dehn_twist_commutation(const LabelledGraph& g) {
  CommutationReport r;
  r.applies = separations(g).separating_vertices.empty();
  auto d = chunks(g);
  r.base_chunk = d.chunks.front().vertices;
  std::vector<char> in_base(g.n(), 0);
  for (int v : r.base_chunk) in_base[v] = 1;
  std::vector<ImageMap> maps;
  for (const auto& a : dehn_twist_generators(g)) {
    if (a.kind != GenKind::DehnTwistEdge) continue;
    std::vector<char> fixed(g.n(), 0), side(g.n(), 0);
    fixed[g.edge(a.edge).u] = fixed[g.edge(a.edge).v] = 1;
    bool moves_base = false;
    for (int v : a.side) {
      side[v] = 1;
      moves_base = moves_base || in_base[v];
    }
    ImageMap m = ImageMap::identity(g.n());
    AWord c = a.action.conj[a.side.front()];
    for (int v = 0; v < g.n(); ++v) {
      if (fixed[v]) continue;
      if (!moves_base && side[v]) m.conj[v] = c;
      if (moves_base && !side[v]) m.conj[v] = aword_inverse(c);
    }
    maps.push_back(std::move(m));
  }
  r.twists = static_cast<int>(maps.size());
  for (int i = 0; i < r.twists; ++i)
    for (int j = i + 1; j < r.twists; ++j) {
      ++r.pairs;
      bool same = true;
      for (int v = 0; v < g.n() && same; ++v)
        same = free_reduce(apply_image(maps[i], maps[j].image(v))) == free_reduce(apply_image(maps[j], maps[i].image(v)));
      if (same) ++r.commuting;
      else r.unresolved.push_back({i, j});
    }
  return r;
}

// ---------------------------------------------------------------------------

// Composes edge bijections along a chain of generators that returns to the
// first source graph.
inline Perm induced_edge_permutation(const std::vector<AutGenerator>& moves) {
  if (moves.empty()) throw GraphError("empty move list");
  Perm p = perm_identity(moves.front().source.num_edges());
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i > 0 && !(moves[i].source == moves[i - 1].target)) throw GraphError("moves do not compose");
    p = perm_then(p, moves[i].edge_perm);
  }
  if (!(moves.back().target == moves.front().source)) throw GraphError("moves do not return to the base graph");
  return p;
}

struct StructureReport {
  int inv_rank = 1;
  int l = 0;
  int N = 0;
  int R = 0;
  int R_cut = 0;
  bool separating_edges = false;
  bool separating_vertices = false;
  std::uint64_t graph_aut_order = 1;
  std::uint64_t vertex_group_order = 1;
  std::size_t orbit_size = 1;
  bool vertex_rigid = true;
  std::vector<std::string> facts;
};

inline StructureReport structure_report(const LabelledGraph& g) {
  require_clttf(g);
  StructureReport r;
  auto s = separations(g);
  auto d = chunks(g);
  r.l = static_cast<int>(s.even_terminal_edges.size());
  r.inv_rank = r.l + 1;
  r.N = d.N;
  r.R = d.R;
  r.R_cut = d.R_cut;
  r.separating_edges = !s.separating_edges.empty();
  r.separating_vertices = !s.separating_vertices.empty();
  r.graph_aut_order = automorphism_group(g).order;
  auto vg = twist_vertex_group(g);
  r.vertex_group_order = vg.order;
  r.orbit_size = vg.orbit_size;
  r.vertex_rigid = is_vertex_rigid(g).rigid;
  r.facts.push_back("ker(pi) = Pure x| Inv");
  r.facts.push_back("Inv = (Z/2)^" + std::to_string(r.inv_rank));
  if (!r.separating_edges && !r.separating_vertices)
    r.facts.push_back("Aut(G) = Inn(G) x| (<eps> x Aut(graph)), |Aut(graph)| = " + std::to_string(r.graph_aut_order));
  if (!r.separating_vertices) {
    r.facts.push_back("Pure = G x| Z^" + std::to_string(r.N - 1));
    r.facts.push_back("Pure_W = W x| (Z/2)^" + std::to_string(r.R - 1));
  }
  return r;
}

}  // namespace clttf
