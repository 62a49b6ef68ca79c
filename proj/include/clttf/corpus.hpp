#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clttf/decomposition.hpp"
#include "clttf/defgraph.hpp"

namespace clttf::corpus {

// Named test graphs. The same text is shipped under data/<name>.graph.
struct NamedGraph {
  std::string name;
  std::string text;
};

inline const std::vector<NamedGraph>& named_graphs() {
  static const std::vector<NamedGraph> all = {
      {"star", "# centre c with leaves a, b, d\nedge a c 3\nedge b c 4\nedge c d 3\n"},
      {"path_bcda", "# path b-c-d-a\nedge b c 4\nedge c d 3\nedge d a 3\n"},
      {"path34", "edge a b 3\nedge b c 4\n"},
      {"path44", "edge a b 4\nedge b c 4\n"},
      {"path434", "edge a b 4\nedge b c 3\nedge c d 4\n"},
      {"star2", "edge c a 3\nedge c b 5\n"},
      {"star3", "edge c a 3\nedge c b 3\nedge c d 5\n"},
      {"star4", "edge c a 3\nedge c b 3\nedge c d 3\nedge c e 3\n"},
      {"square", "edge a b 3\nedge b c 4\nedge c d 3\nedge d a 4\n"},
      {"square_tail", "edge a b 3\nedge b c 3\nedge c d 3\nedge d a 3\nedge d e 4\n"},
      {"double_square",
       "# two squares glued along the edge a-b\n"
       "edge a b 3\nedge b c 3\nedge c d 3\nedge d a 3\nedge b e 3\nedge e f 3\nedge f a 3\n"},
      {"double_square_mixed",
       "edge a b 3\nedge b c 3\nedge c d 3\nedge d a 4\nedge b e 4\nedge e f 4\nedge f a 3\n"},
      {"k23", "edge a x 3\nedge a y 3\nedge a z 3\nedge b x 3\nedge b y 3\nedge b z 3\n"},
      {"pentagon", "edge a b 3\nedge b c 4\nedge c d 5\nedge d e 3\nedge e a 4\n"},
      {"bowtie", "# two squares sharing the vertex a\n"
                 "edge a b 3\nedge b c 3\nedge c d 3\nedge d a 3\nedge a e 4\nedge e f 3\nedge f g 3\nedge g a 4\n"},
      {"cube",
       "# 1-skeleton of the 3-cube\n"
       "edge v000 v001 3\nedge v000 v010 3\nedge v000 v100 3\nedge v001 v011 3\nedge v001 v101 3\n"
       "edge v010 v011 3\nedge v010 v110 3\nedge v100 v101 3\nedge v100 v110 3\nedge v011 v111 3\n"
       "edge v101 v111 3\nedge v110 v111 3\n"},
      {"triangle", "# not triangle-free\nedge a b 3\nedge b c 3\nedge c a 3\n"},
  };
  return all;
}

inline LabelledGraph named(const std::string& name) {
  for (const auto& g : named_graphs())
    if (g.name == name) return parse_graph(g.text);
  throw GraphError("no corpus graph named " + name);
}

// Named graphs that satisfy the standing hypotheses.
inline std::vector<std::pair<std::string, LabelledGraph>> named_clttf() {
  std::vector<std::pair<std::string, LabelledGraph>> out;
  for (const auto& ng : named_graphs()) {
    auto g = parse_graph(ng.text);
    if (validate(g).clttf) out.emplace_back(ng.name, g);
  }
  return out;
}

inline std::string vname(int i) { return std::string(1, static_cast<char>('a' + i)); }

// Connected simple graphs on n vertices, one per isomorphism class.
inline std::vector<LabelledGraph> connected_shapes(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(vname(i));
  std::set<std::string> seen;
  std::vector<LabelledGraph> out;
  const std::uint32_t total = 1u << slots.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (static_cast<int>(__builtin_popcount(mask)) < n - 1) continue;
    std::vector<Edge> es;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1u) es.push_back({slots[k].first, slots[k].second, 3});
    LabelledGraph g(names, es);
    if (!is_connected(g)) continue;
    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
  }
  return out;
}

// Every connected graph with 2..max_n vertices and labels from `labels`, up
// to label-preserving isomorphism.
inline std::vector<LabelledGraph> labelled_connected(int max_n, const std::vector<int>& labels,
                                                     bool triangle_free_only = false) {
  std::vector<LabelledGraph> out;
  for (int n = 2; n <= max_n; ++n)
    for (const auto& shape : connected_shapes(n)) {
      if (triangle_free_only && !validate(shape).triangle_free) continue;
      const int ne = shape.num_edges();
      std::set<std::string> seen;
      std::vector<int> pick(ne, 0);
      while (true) {
        std::vector<Edge> es = shape.edges();
        for (int k = 0; k < ne; ++k) es[k].m = labels[pick[k]];
        LabelledGraph g(shape.names(), es);
        if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
        int k = 0;
        while (k < ne && ++pick[k] == static_cast<int>(labels.size())) pick[k++] = 0;
        if (k == ne) break;
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracles

// Maximal connected full subgraphs (with at least one edge) that no
// separation splits. Separations are recomputed here from scratch.
inline std::vector<std::vector<int>> brute_force_chunks(const LabelledGraph& g, bool even_edges_only = false) {
  const int n = g.n();
  std::vector<std::vector<int>> comp_of;  // per separation: component id per vertex, -1 on the cut
  auto split = [&](const std::vector<int>& cut) {
    std::vector<int> id(n, -2);
    for (int v : cut) id[v] = -1;
    int c = 0;
    for (int s = 0; s < n; ++s) {
      if (id[s] != -2) continue;
      std::vector<int> stack{s};
      id[s] = c;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbours(x))
          if (id[y] == -2) {
            id[y] = c;
            stack.push_back(y);
          }
      }
      ++c;
    }
    if (c >= 2) comp_of.push_back(id);
  };
  if (!even_edges_only)
    for (int v = 0; v < n; ++v) split({v});
  for (const auto& e : g.edges())
    if (!even_edges_only || e.m % 2 == 0) split({e.u, e.v});

  auto connected_full = [&](std::uint32_t mask) {
    int start = __builtin_ctz(mask);
    std::uint32_t seen = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbours(x))
        if ((mask >> y & 1u) && !(seen >> y & 1u)) {
          seen |= 1u << y;
          stack.push_back(y);
        }
    }
    return seen == mask;
  };
  std::vector<std::uint32_t> good;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2 || !connected_full(mask)) continue;
    bool split_by_any = false;
    for (const auto& id : comp_of) {
      int first = -1;
      for (int v = 0; v < n && !split_by_any; ++v)
        if ((mask >> v & 1u) && id[v] >= 0) {
          if (first < 0) first = id[v];
          else if (id[v] != first) split_by_any = true;
        }
      if (split_by_any) break;
    }
    if (!split_by_any) good.push_back(mask);
  }
  std::vector<std::vector<int>> out;
  for (auto a : good) {
    bool maximal = true;
    for (auto b : good)
      if (a != b && (a & b) == a) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (a >> v & 1u) vs.push_back(v);
    out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Counts label-preserving vertex bijections by trying all n! of them.
inline std::uint64_t brute_force_automorphism_count(const LabelledGraph& g) {
  std::vector<int> p(g.n());
  for (int i = 0; i < g.n(); ++i) p[i] = i;
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < g.n() && ok; ++u)
      for (int v = u + 1; v < g.n() && ok; ++v)
        if (g.label(u, v) != g.label(p[u], p[v])) ok = false;
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Even-labelled edges with a terminal endpoint, counted directly.
inline int count_even_terminal_edges(const LabelledGraph& g) {
  int l = 0;
  for (const auto& e : g.edges())
    if (e.m % 2 == 0 && (g.neighbours(e.u).size() == 1 || g.neighbours(e.v).size() == 1)) ++l;
  return l;
}

}  // namespace clttf::corpus
