#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clttf/decomposition.hpp"
#include "clttf/defgraph.hpp"
#include "clttf/perm.hpp"

namespace clttf {

struct TwistArrow {
  enum class Kind { EdgeTwist, GraphIsomorphism };
  Kind kind = Kind::EdgeTwist;
  LabelledGraph source;
  LabelledGraph target;
  Perm edge_bijection;       // edge index of source -> edge index of target
  int edge = -1;             // twisted edge (source index)
  std::vector<int> side;     // vertices reattached (source indices)
  std::vector<int> vertex_map;  // graph-isomorphism arrows only
};

inline Perm edge_perm_of(const LabelledGraph& a, const LabelledGraph& b, const std::vector<int>& vmap) {
  Perm p(a.num_edges());
  for (int k = 0; k < a.num_edges(); ++k) {
    const Edge& e = a.edge(k);
    p[k] = b.edge_index(vmap[e.u], vmap[e.v]);
    if (p[k] < 0) throw GraphError("vertex map does not carry edges to edges");
  }
  return p;
}

// Components of g - {s,t} for the edge with index k.
inline std::vector<std::vector<int>> twist_components(const LabelledGraph& g, int k) {
  std::vector<char> removed(g.n(), 0);
  removed[g.edge(k).u] = removed[g.edge(k).v] = 1;
  return components_without(g, removed);
}

inline TwistArrow edge_twist(const LabelledGraph& g, int k, std::vector<int> side) {
  if (k < 0 || k >= g.num_edges()) throw GraphError("edge index out of range");
  const Edge& e = g.edge(k);
  if (e.m % 2 == 0) throw GraphError("edge twists need an odd label");
  auto comps = twist_components(g, k);
  if (comps.size() < 2) throw GraphError("edge is not separating");
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  std::vector<char> in(g.n(), 0);
  for (int v : side) {
    if (v < 0 || v >= g.n() || v == e.u || v == e.v) throw GraphError("side must consist of component vertices");
    in[v] = 1;
  }
  int used = 0;
  for (const auto& c : comps) {
    int cnt = 0;
    for (int v : c) cnt += in[v];
    if (cnt != 0 && cnt != static_cast<int>(c.size())) throw GraphError("side must be a union of components");
    if (cnt) ++used;
  }
  if (used == 0) throw GraphError("side is empty");
  if (used == static_cast<int>(comps.size())) throw GraphError("side is total");

  std::vector<Edge> edges = g.edges();
  for (auto& f : edges) {
    auto swap_end = [&](int& x, int other) {
      if (in[other]) {
        if (x == e.u) x = e.v;
        else if (x == e.v) x = e.u;
      }
    };
    int u = f.u, v = f.v;
    swap_end(f.u, v);
    swap_end(f.v, u);
  }
  TwistArrow a;
  a.kind = TwistArrow::Kind::EdgeTwist;
  a.source = g;
  a.target = LabelledGraph(g.names(), edges);
  a.edge_bijection = perm_identity(g.num_edges());
  a.edge = k;
  a.side = side;
  return a;
}

inline TwistArrow edge_twist(const LabelledGraph& g, const std::string& u, const std::string& v,
                             const std::vector<std::string>& side) {
  int k = g.edge_index(g.vertex(u), g.vertex(v));
  if (k < 0) throw GraphError("no edge " + u + "-" + v);
  std::vector<int> s;
  for (const auto& x : side) s.push_back(g.vertex(x));
  return edge_twist(g, k, s);
}

struct OrbitArrow {
  int from = 0;
  int to = 0;
  int edge = -1;              // edge index in the representative of `from`
  std::vector<int> side;      // vertices of the representative of `from`
  Perm edge_map;              // E(rep from) -> E(rep to)
  bool tree = false;
};

struct TwistOrbit {
  std::vector<std::string> states;  // canonical encodings, in discovery order
  std::vector<LabelledGraph> reps;  // concrete representative per state
  std::vector<OrbitArrow> arrows;
  std::vector<int> parent_arrow;    // BFS tree arrow reaching each state, -1 for the base
  int base = 0;

  int find(const std::string& key) const {
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i] == key) return static_cast<int>(i);
    return -1;
  }
};

// Elementary moves from g: odd separating edges with single-component sides.
inline std::vector<std::pair<int, std::vector<int>>> elementary_moves(const LabelledGraph& g) {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (int k : separations(g).separating_edges) {
    if (g.edge(k).m % 2 == 0) continue;
    for (const auto& c : twist_components(g, k)) out.emplace_back(k, c);
  }
  return out;
}

inline TwistOrbit twist_orbit(const LabelledGraph& g, std::size_t max_states = 100000) {
  require_clttf(g);
  TwistOrbit orb;
  std::map<std::string, int> index;
  orb.states.push_back(canonical_form(g));
  orb.reps.push_back(g);
  orb.parent_arrow.push_back(-1);
  index[orb.states[0]] = 0;
  for (std::size_t i = 0; i < orb.reps.size(); ++i) {
    const LabelledGraph rep = orb.reps[i];
    for (auto& [k, side] : elementary_moves(rep)) {
      TwistArrow t = edge_twist(rep, k, side);
      std::string key = canonical_form(t.target);
      OrbitArrow a;
      a.from = static_cast<int>(i);
      a.edge = k;
      a.side = side;
      auto it = index.find(key);
      if (it == index.end()) {
        a.to = static_cast<int>(orb.states.size());
        a.edge_map = t.edge_bijection;
        a.tree = true;
        index[key] = a.to;
        orb.states.push_back(key);
        orb.reps.push_back(t.target);
        orb.parent_arrow.push_back(static_cast<int>(orb.arrows.size()));
        if (orb.states.size() > max_states) throw GraphError("twist orbit exceeds state cap");
      } else {
        a.to = it->second;
        auto iso = are_isomorphic(t.target, orb.reps[a.to]);
        if (!iso) throw GraphError("canonical form collision");
        a.edge_map = perm_then(t.edge_bijection, edge_perm_of(t.target, orb.reps[a.to], iso->vertex_map));
      }
      orb.arrows.push_back(std::move(a));
    }
  }
  return orb;
}

struct IsomorphismAnswer {
  bool isomorphic = false;
  std::vector<TwistArrow> moves;          // edge twists from g1
  std::optional<GraphBijection> final_map;  // last twisted graph -> g2
};

inline IsomorphismAnswer groups_isomorphic(const LabelledGraph& g1, const LabelledGraph& g2) {
  require_clttf(g1);
  require_clttf(g2);
  IsomorphismAnswer ans;
  auto orb = twist_orbit(g1);
  int target = orb.find(canonical_form(g2));
  if (target < 0) return ans;
  ans.isomorphic = true;
  std::vector<int> path;
  for (int s = target; orb.parent_arrow[s] >= 0; s = orb.arrows[orb.parent_arrow[s]].from)
    path.push_back(orb.parent_arrow[s]);
  std::reverse(path.begin(), path.end());
  for (int ai : path) {
    const auto& a = orb.arrows[ai];
    ans.moves.push_back(edge_twist(orb.reps[a.from], a.edge, a.side));
  }
  ans.final_map = are_isomorphic(orb.reps[target], g2);
  return ans;
}

struct TwistVertexGroup {
  std::vector<Perm> generators;  // permutations of E(g)
  std::uint64_t order = 1;
  std::size_t orbit_size = 1;
};

inline TwistVertexGroup twist_vertex_group(const LabelledGraph& g) {
  auto orb = twist_orbit(g);
  const int ne = g.num_edges();
  std::vector<Perm> to_state(orb.states.size());
  to_state[0] = perm_identity(ne);
  for (std::size_t s = 1; s < orb.states.size(); ++s) {
    const auto& a = orb.arrows[orb.parent_arrow[s]];
    to_state[s] = perm_then(to_state[a.from], a.edge_map);
  }
  TwistVertexGroup r;
  r.orbit_size = orb.states.size();
  PermGroup grp(ne);
  auto add = [&](const Perm& p) {
    if (perm_is_identity(p) || grp.contains(p)) return;
    grp.add_generator(p);
    r.generators.push_back(p);
  };
  for (const auto& a : orb.arrows) {
    if (a.tree) continue;
    add(perm_then(perm_then(to_state[a.from], a.edge_map), perm_inverse(to_state[a.to])));
  }
  for (std::size_t s = 0; s < orb.states.size(); ++s) {
    const auto& rep = orb.reps[s];
    for (const auto& gen : automorphism_group(rep).generators) {
      Perm sigma = edge_perm_of(rep, rep, gen.vertex_map);
      add(perm_then(perm_then(to_state[s], sigma), perm_inverse(to_state[s])));
    }
  }
  r.order = grp.order();
  return r;
}

}  // namespace clttf
