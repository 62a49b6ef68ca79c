#pragma once

// Acceptance suite shared by the acceptance binary and `clttf selftest`.

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "clttf/autgen.hpp"
#include "clttf/corpus.hpp"
#include "clttf/coxeter.hpp"
#include "clttf/decomposition.hpp"
#include "clttf/defgraph.hpp"
#include "clttf/dihedral.hpp"
#include "clttf/linkcx.hpp"
#include "clttf/twist.hpp"

namespace clttf::acceptance {

struct Line {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct Outcome {
  std::string id;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double limit = 0;  // seconds; 0 means unbounded
  std::string detail;
  std::vector<Line> sub;
};

struct Criterion {
  std::string id;
  std::string tag;  // matched by --filter
  std::string title;
  double limit;
  std::function<Outcome()> run;
};

constexpr std::uint32_t kSeed = 20240601;
constexpr double kOracleTol = 1e-6;

namespace detail {

inline DWord random_dword(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), pick(0, 3);
  static const DLetter letters[4] = {1, 2, -1, -2};
  DWord w(len(rng));
  for (auto& l : w) l = letters[pick(rng)];
  return w;
}

// Product of conjugated, cyclically rotated braid relators, at most max_len letters.
inline DWord relator_product(std::mt19937& rng, int m, int max_len) {
  DWord rel = dihedral_prod(1, m);
  for (DLetter l : dword_inverse(dihedral_prod(2, m))) rel.push_back(l);
  DWord out;
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> rot(0, static_cast<int>(rel.size()) - 1);
  while (true) {
    DWord r(rel.size());
    int k = rot(rng);
    for (std::size_t i = 0; i < rel.size(); ++i) r[i] = rel[(i + k) % rel.size()];
    if (coin(rng)) r = dword_inverse(r);
    int room = (max_len - static_cast<int>(out.size()) - static_cast<int>(r.size())) / 2;
    if (room < 0) break;
    DWord c = random_dword(rng, std::min(room, 8));
    DWord piece = c;
    piece.insert(piece.end(), r.begin(), r.end());
    for (DLetter l : dword_inverse(c)) piece.push_back(l);
    out.insert(out.end(), piece.begin(), piece.end());
    if (coin(rng)) break;
  }
  return out;
}

inline LabelledGraph random_coxeter_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv(2, 5), lab(2, 6), coin(0, 2);
  int n = nv(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(corpus::vname(i));
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.push_back({i, j, lab(rng)});
  return LabelledGraph(names, es);
}

inline CWord random_cword(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), pick(0, n - 1);
  CWord w(len(rng));
  for (auto& l : w) l = pick(rng);
  return w;
}

}  // namespace detail

// 1 -------------------------------------------------------------------------
inline Outcome iso_via_twist() {
  Outcome o;
  auto a = corpus::named("star");
  auto b = corpus::named("path_bcda");
  auto raw = are_isomorphic(a, b);
  auto ans = groups_isomorphic(a, b);
  bool mapped = ans.final_map && ans.final_map->preserves_labels;
  o.pass = !raw && ans.isomorphic && ans.moves.size() == 1 && mapped;
  o.detail = std::string("raw graph isomorphism ") + (raw ? "found" : "none") + ", twist answer " +
             (ans.isomorphic ? "true" : "false") + " with " + std::to_string(ans.moves.size()) + " move(s)";
  return o;
}

// 2 -------------------------------------------------------------------------
inline Outcome chunk_oracle() {
  Outcome o;
  auto all = corpus::labelled_connected(6, {3, 4});
  int bad = 0, bad_r = 0;
  for (const auto& g : all) {
    auto d = chunks(g);
    std::vector<std::vector<int>> got;
    for (const auto& c : d.chunks) got.push_back(c.vertices);
    std::sort(got.begin(), got.end());
    if (got != corpus::brute_force_chunks(g)) ++bad;
    if (d.R != static_cast<int>(corpus::brute_force_chunks(g, true).size())) ++bad_r;
  }
  o.pass = bad == 0 && bad_r == 0;
  o.detail = std::to_string(all.size()) + " graphs, " + std::to_string(bad) + " chunk mismatches, " +
             std::to_string(bad_r) + " R mismatches";
  return o;
}

// 3 -------------------------------------------------------------------------
inline Outcome link_girth(int m) {
  Outcome o;
  auto b = link_ball(m, 2 * m);
  int girth = girth_through_base(b);
  auto cl = classify_min_circuits(b);
  o.pass = girth == 2 * m && cl.unmatched == 0 && !cl.circuits.empty();
  o.detail = "girth " + std::to_string(girth) + ", " + std::to_string(cl.circuits.size()) + " circuits, " +
             std::to_string(cl.unmatched) + " unmatched";
  return o;
}

// 4 -------------------------------------------------------------------------
// 4a reads the triples as consecutive link edges of a circuit; 4b reads them
// as cyclic two-letter subwords of the balanced circuit word; 4c is the pair bound.
inline Outcome link_rigidity() {
  Outcome o;
  bool literal = true, subword = true, pairs = true;
  std::ostringstream la, lb, lc;
  for (int m : {3, 4, 5}) {
    auto rc = rigidity_counts(link_ball(m, 2 * m));
    literal = literal && rc.triple_t == m - 1 && rc.triple_tinv == 1;
    subword = subword && rc.subword_st == m - 1 && rc.subword_stinv == 1;
    int worst = 0;
    for (auto [k, c] : rc.pair)
      if (k > 1 || k < -1) worst = std::max(worst, c);
    pairs = pairs && worst <= 2;
    la << " m=" << m << ": (sE,E,tE)=" << rc.triple_t << " (sE,E,t^-1E)=" << rc.triple_tinv << ";";
    lb << " m=" << m << ": st=" << rc.subword_st << " st^-1=" << rc.subword_stinv << ";";
    lc << " m=" << m << ": max " << worst << ";";
  }
  o.sub.push_back({"4a", literal, "consecutive link edges, expected m-1 and 1:" + la.str()});
  o.sub.push_back({"4b", subword, "cyclic subwords of the circuit word, expected m-1 and 1:" + lb.str()});
  o.sub.push_back({"4c", pairs, "pairs (E, s^kE), |k|>1, expected <= 2:" + lc.str()});
  o.pass = literal && subword && pairs;
  o.detail = literal ? "all counts as stated" : "consecutive-edge triple counts are swapped relative to the stated values";
  return o;
}

// 5 -------------------------------------------------------------------------
inline Outcome dihedral_soundness() {
  Outcome o;
  std::mt19937 rng(kSeed);
  const int ms[4] = {3, 4, 5, 6};
  int rel_fail = 0, nec_fail = 0, hom_fail = 0, nontrivial = 0;
  for (int i = 0; i < 10000; ++i) {
    int m = ms[i % 4];
    if (!dihedral_normal_form(m, detail::relator_product(rng, m, 40)).is_identity()) ++rel_fail;
  }
  for (int i = 0; i < 10000; ++i) {
    int m = ms[i % 4];
    DWord w = detail::random_dword(rng, 12);
    if (i % 3 == 0) w = detail::relator_product(rng, m, 30);
    long long expsum = 0;
    for (DLetter l : w) expsum += l > 0 ? 1 : -1;
    bool proj_trivial = cox_dihedral(m, w).is_identity();
    bool nf_id = dihedral_normal_form(m, w).is_identity();
    bool must_be_nontrivial = !proj_trivial || expsum != 0;
    if (must_be_nontrivial && nf_id) ++nec_fail;
    if (must_be_nontrivial) ++nontrivial;
    if (dihedral_normal_form(m, w).length() != expsum) ++nec_fail;
  }
  for (int i = 0; i < 10000; ++i) {
    int m = ms[i % 4];
    DWord u = detail::random_dword(rng, 12), v = detail::random_dword(rng, 12);
    DWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    auto nu = dihedral_normal_form(m, u), nv = dihedral_normal_form(m, v);
    if (dihedral_normal_form(m, uv) != nu * nv) ++hom_fail;
    if (dihedral_normal_form(m, dword_inverse(u)) != nu.inverse()) ++hom_fail;
  }
  o.pass = rel_fail == 0 && nec_fail == 0 && hom_fail == 0;
  o.detail = "relator words failing " + std::to_string(rel_fail) + ", necessity violations " +
             std::to_string(nec_fail) + " (" + std::to_string(nontrivial) + " forced nontrivial), homomorphism failures " +
             std::to_string(hom_fail) + "; sampled words up to 40 letters (relator products), 12 (random)";
  return o;
}

// 6 -------------------------------------------------------------------------
inline Outcome coxeter_oracle() {
  Outcome o;
  std::mt19937 rng(kSeed + 6);
  int disagree = 0, identities = 0, total = 0;
  for (int gi = 0; gi < 100; ++gi) {
    auto g = detail::random_coxeter_graph(rng);
    Coxeter W(g);
    for (int i = 0; i < 100; ++i, ++total) {
      CWord w = detail::random_cword(rng, g.n(), 12);
      if (i % 2 == 1) {
        // Half the sample is built to be trivial: u * u^-1 rewritten by braid moves.
        CWord u = detail::random_cword(rng, g.n(), 6);
        CWord red = W.reduce(u);
        w = u;
        for (int l : cword_inverse(red)) w.push_back(l);
        if (w.size() > 12) w.resize(12);
      }
      bool by_reduce = W.is_identity(w);
      bool by_oracle = oracle_is_identity(geometric_oracle(g, w), kOracleTol);
      identities += by_oracle;
      if (by_reduce != by_oracle) ++disagree;
    }
  }
  o.pass = disagree == 0;
  o.detail = std::to_string(total) + " words, " + std::to_string(identities) + " identities, " +
             std::to_string(disagree) + " disagreements";
  return o;
}

// 7 -------------------------------------------------------------------------
inline std::vector<std::pair<std::string, LabelledGraph>> automorphism_corpus() {
  auto out = corpus::named_clttf();
  int i = 0;
  for (auto& g : corpus::labelled_connected(6, {3, 4}, true))
    if (validate(g).clttf) out.emplace_back("enumerated#" + std::to_string(i++), g);
  return out;
}

inline Outcome automorphism_verification() {
  Outcome o;
  int graphs = 0, cox = 0, art = 0, bad = 0;
  std::string first;
  for (const auto& [name, g] : automorphism_corpus()) {
    ++graphs;
    for (const auto& a : coxeter_generators(g)) {
      ++cox;
      auto c = verify_coxeter(a);
      if (!c.homomorphism || !c.inverse_ok) {
        if (first.empty()) first = name + " " + kind_name(a.kind) + " " + c.failing_relator;
        ++bad;
      }
    }
    for (const auto& a : artin_generators(g)) {
      ++art;
      auto c = verify_artin(a);
      if (!c.homomorphism || !c.inverse_ok) {
        if (first.empty()) first = name + " " + kind_name(a.kind) + " " + c.failing_relator;
        ++bad;
      }
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(cox) + " Coxeter and " + std::to_string(art) +
             " Artin generators, " + std::to_string(bad) + " failures" + (first.empty() ? "" : "; first: " + first);
  return o;
}

// 8 -------------------------------------------------------------------------
inline Outcome minimal_equals_basic() {
  Outcome o;
  auto t = theta_w_ball(corpus::named("double_square"), 6);
  auto rep = verify_minimal_equals_basic(t, 8);
  auto eq = compare_chunk_equivalence(t, rep, 4);
  int unidentified = 0;
  for (const auto& c : rep.circuits)
    if (c.isometric && !(c.basic && c.basic->minimal_in_hat)) ++unidentified;
  o.pass = rep.counterexamples == 0 && unidentified == 0 && rep.isometric > 0 && eq.disagree == 0;
  o.detail = std::to_string(rep.safe_vertices) + " safe vertices, " + std::to_string(rep.isometric) +
             " isometric circuits, " + std::to_string(unidentified) + " unidentified, " +
             std::to_string(eq.pairs) + " pairs with " + std::to_string(eq.disagree) + " equivalence disagreements";
  return o;
}

// 9 -------------------------------------------------------------------------
inline Outcome structure_constants() {
  Outcome o;
  int inv_bad = 0, graphs = 0;
  for (const auto& [name, g] : automorphism_corpus()) {
    ++graphs;
    auto inv = inversion_generators(g);
    int l = corpus::count_even_terminal_edges(g);
    bool ok = static_cast<int>(inv.size()) == l + 1 && inversion_rank(g) == l + 1;
    // Each inversion is an involution.
    for (const auto& a : inv)
      for (int v = 0; v < g.n() && ok; ++v) {
        AWord twice;
        for (int x : a.image(v)) {
          AWord w = a.image(avertex(x));
          if (x < 0) w = aword_inverse(w);
          twice.insert(twice.end(), w.begin(), w.end());
        }
        ok = free_reduce(twice) == AWord{aletter(v)};
      }
    inv_bad += !ok;
  }
  o.sub.push_back({"9a", inv_bad == 0, std::to_string(graphs) + " graphs, " + std::to_string(inv_bad) + " with Inv rank != l+1"});

  auto ds = structure_report(corpus::named("double_square"));
  o.sub.push_back({"9b", ds.N == 2 && ds.R == 1, "double square (N, R) = (" + std::to_string(ds.N) + ", " + std::to_string(ds.R) + ")"});

  auto cube = corpus::named("cube");
  auto cr = structure_report(cube);
  auto brute = corpus::brute_force_automorphism_count(cube);
  std::string want = "Aut(G) = Inn(G) x| (<eps> x Aut(graph)), |Aut(graph)| = 48";
  bool stated = std::find(cr.facts.begin(), cr.facts.end(), want) != cr.facts.end();
  o.sub.push_back({"9c", stated && cr.graph_aut_order == 48 && brute == 48 && cr.vertex_rigid,
                   "cube |Aut| " + std::to_string(cr.graph_aut_order) + ", brute force " + std::to_string(brute) +
                       ", VR " + (cr.vertex_rigid ? "true" : "false") + ", semidirect statement " + (stated ? "present" : "missing")});
  o.pass = std::all_of(o.sub.begin(), o.sub.end(), [](const Line& l) { return l.pass; });
  o.detail = o.pass ? "all structure constants hold" : "see sub-lines";
  return o;
}

// 10 ------------------------------------------------------------------------
inline Outcome centralizer_ranks() {
  Outcome o;
  o.pass = true;
  for (const char* name : {"star2", "star3", "star4"}) {
    auto g = corpus::named(name);
    int c = g.vertex("c");
    int rank = centralizer_generators(g, c).rank;
    int want = g.degree(c);
    o.pass = o.pass && rank == want;
    o.detail += std::string(o.detail.empty() ? "" : ", ") + name + " rank " + std::to_string(rank) + "/" + std::to_string(want);
  }
  return o;
}

inline std::vector<Criterion> criteria() {
  return {
      {"1", "iso twist", "isomorphism via a single edge twist", 1.0, iso_via_twist},
      {"2", "chunks decomposition", "chunks agree with the brute-force oracle", 300.0, chunk_oracle},
      {"3.m3", "link", "link girth and balanced circuits, m=3", 60.0, [] { return link_girth(3); }},
      {"3.m4", "link", "link girth and balanced circuits, m=4", 60.0, [] { return link_girth(4); }},
      {"3.m5", "link", "link girth and balanced circuits, m=5", 60.0, [] { return link_girth(5); }},
      {"4", "link rigidity", "link rigidity counts", 0.0, link_rigidity},
      {"5", "dihedral", "dihedral normal form soundness", 60.0, dihedral_soundness},
      {"6", "coxeter", "Coxeter reduction agrees with the reflection representation", 120.0, coxeter_oracle},
      {"7", "autgen", "automorphism generators verify", 0.0, automorphism_verification},
      {"8", "theta linkcx", "minimal circuits are basic in the safe zone", 600.0, minimal_equals_basic},
      {"9", "structure autgen", "structure constants", 0.0, structure_constants},
      {"10", "centralizer autgen", "centralizer ranks at a star centre", 0.0, centralizer_ranks},
  };
}

inline bool matches(const Criterion& c, const std::string& filter) {
  if (filter.empty()) return true;
  return c.id == filter || c.id.rfind(filter + ".", 0) == 0 || (" " + c.tag + " ").find(" " + filter + " ") != std::string::npos;
}

inline Outcome run_one(const Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.id = c.id;
  o.title = c.title;
  o.limit = c.limit;
  if (c.limit > 0 && o.seconds > c.limit) {
    o.pass = false;
    o.detail += "; runtime over limit";
  }
  return o;
}

inline void print(std::ostream& out, const Outcome& o) {
  out << (o.pass ? "PASS" : "FAIL") << "  [" << o.id << "] " << o.title << " -- " << o.detail << " ("
      << std::fixed << std::setprecision(2) << o.seconds << "s";
  if (o.limit > 0) out << " / limit " << o.limit << "s";
  out << ")\n";
  for (const auto& l : o.sub) out << "      " << (l.pass ? "PASS" : "FAIL") << "  [" << l.id << "] " << l.detail << "\n";
}

// Runs matching criteria; returns the number of failures.
inline int run(std::ostream& out, const std::string& filter = "", std::vector<Outcome>* results = nullptr) {
  int failures = 0;
  for (const auto& c : criteria()) {
    if (!matches(c, filter)) continue;
    auto o = run_one(c);
    print(out, o);
    out.flush();
    failures += !o.pass;
    if (results) results->push_back(o);
  }
  return failures;
}

}  // namespace clttf::acceptance
