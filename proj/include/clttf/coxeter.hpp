#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "clttf/defgraph.hpp"

namespace clttf {

// A Coxeter word: vertex indices, each generator an involution.
using CWord = std::vector<int>;

class OrbitOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of W(g) held as the ShortLex-least reduced word of its class.
struct CoxeterElement {
  std::string nf;  // one char per letter, value = vertex index

  std::size_t length() const { return nf.size(); }
  bool is_identity() const { return nf.empty(); }
  CWord word() const { return CWord(nf.begin(), nf.end()); }
  bool operator==(const CoxeterElement& o) const { return nf == o.nf; }
  bool operator!=(const CoxeterElement& o) const { return nf != o.nf; }
  bool operator<(const CoxeterElement& o) const {
    return nf.size() != o.nf.size() ? nf.size() < o.nf.size() : nf < o.nf;
  }
};

struct CoxeterElementHash {
  std::size_t operator()(const CoxeterElement& e) const { return std::hash<std::string>()(e.nf); }
};

// Tits rewriting for W(g): braid moves only along edges; non-adjacent
// generators satisfy no relation.
class Coxeter {
 public:
  explicit Coxeter(LabelledGraph g, std::size_t orbit_cap = 200000) : g_(std::move(g)), cap_(orbit_cap) {
    if (g_.n() > 120) throw std::invalid_argument("too many generators");
  }

  const LabelledGraph& graph() const { return g_; }

  // All words reachable from w by braid moves.
  std::vector<std::string> braid_orbit(const std::string& w) const {
    std::vector<std::string> out{w};
    std::unordered_set<std::string> seen{w};
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::string cur = out[i];
      for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
        int a = cur[p], b = cur[p + 1];
        if (a == b) continue;
        int m = g_.label(a, b);
        if (m == 0 || p + m > cur.size()) continue;
        bool alt = true;
        for (int j = 0; j < m && alt; ++j)
          if (cur[p + j] != (j % 2 == 0 ? a : b)) alt = false;
        if (!alt) continue;
        std::string nxt = cur;
        for (int j = 0; j < m; ++j) nxt[p + j] = static_cast<char>(j % 2 == 0 ? b : a);
        if (seen.insert(nxt).second) {
          out.push_back(std::move(nxt));
          if (out.size() > cap_) throw OrbitOverflow("braid orbit exceeds cap");
        }
      }
    }
    return out;
  }

  // Reduced word for the element, built letter by letter so that every
  // braid orbit searched is the orbit of a reduced word.
  CWord reduce(const CWord& word) const { return element(word).word(); }

  // Literal Tits procedure: delete adjacent equal pairs, otherwise search
  // the braid orbit of the whole word for one that admits a deletion.
  CWord reduce_literal(const CWord& word) const {
    std::string w = encode(word);
    while (true) {
      w = free_delete(w);
      bool changed = false;
      for (const auto& v : braid_orbit(w)) {
        for (std::size_t p = 0; p + 1 < v.size(); ++p)
          if (v[p] == v[p + 1]) {
            w = v.substr(0, p) + v.substr(p + 2);
            changed = true;
            break;
          }
        if (changed) break;
      }
      if (!changed) return CWord(w.begin(), w.end());
    }
  }

  bool is_identity(const CWord& word) const { return reduce(word).empty(); }

  // ShortLex-least word in the orbit of a reduced word.
  std::string orbit_min(const std::string& reduced) const {
    std::string best = reduced;
    for (const auto& v : braid_orbit(reduced))
      if (v < best) best = v;
    return best;
  }

  // w reduced; returns nf(w s).
  CoxeterElement multiply(const CoxeterElement& w, int s) const {
    check_letter(s);
    for (const auto& v : braid_orbit(w.nf))
      if (!v.empty() && v.back() == s) return {orbit_min(v.substr(0, v.size() - 1))};
    std::string x = w.nf;
    x.push_back(static_cast<char>(s));
    return {orbit_min(x)};
  }

  CoxeterElement left_multiply(int s, const CoxeterElement& w) const {
    std::string r(w.nf.rbegin(), w.nf.rend());
    CoxeterElement t = multiply({orbit_min(r)}, s);
    std::string back(t.nf.rbegin(), t.nf.rend());
    return {orbit_min(back)};
  }

  bool has_right_descent(const CoxeterElement& w, int s) const {
    for (const auto& v : braid_orbit(w.nf))
      if (!v.empty() && v.back() == s) return true;
    return false;
  }

  CoxeterElement element(const CWord& word) const {
    CoxeterElement e;
    for (int s : word) e = multiply(e, s);
    return e;
  }

  CoxeterElement product(const CoxeterElement& a, const CoxeterElement& b) const {
    CoxeterElement e = a;
    for (char c : b.nf) e = multiply(e, c);
    return e;
  }

  CoxeterElement inverse(const CoxeterElement& a) const {
    std::string r(a.nf.rbegin(), a.nf.rend());
    return {orbit_min(r)};
  }

  CoxeterElement conjugate(const CoxeterElement& w, const CoxeterElement& x) const {
    return product(product(w, x), inverse(w));
  }

  CoxeterElement generator(int s) const { return multiply({}, s); }

  // Elements of length <= L, in BFS order (by length, then ShortLex).
  std::vector<CoxeterElement> ball(int L) const {
    std::vector<CoxeterElement> out{CoxeterElement{}};
    std::unordered_set<std::string> seen{""};
    std::size_t begin = 0;
    for (int len = 0; len < L; ++len) {
      std::size_t end = out.size();
      std::vector<CoxeterElement> next;
      for (std::size_t i = begin; i < end; ++i)
        for (int s = 0; s < g_.n(); ++s) {
          CoxeterElement y = multiply(out[i], s);
          if (y.length() > out[i].length() && seen.insert(y.nf).second) next.push_back(std::move(y));
        }
      std::sort(next.begin(), next.end());
      begin = end;
      for (auto& y : next) out.push_back(std::move(y));
      if (begin == out.size()) break;
    }
    return out;
  }

  std::string to_string(const CWord& w) const {
    std::string out;
    for (int s : w) {
      if (!out.empty()) out += ' ';
      out += g_.name(s);
    }
    return out;
  }
  std::string to_string(const CoxeterElement& e) const { return to_string(e.word()); }

 private:
  static std::string encode(const CWord& w) {
    std::string s;
    s.reserve(w.size());
    for (int x : w) s.push_back(static_cast<char>(x));
    return s;
  }

  void check_letter(int s) const {
    if (s < 0 || s >= g_.n()) throw GraphError("unknown letter");
  }

  std::string free_delete(const std::string& w) const {
    std::string st;
    for (char c : w) {
      check_letter(c);
      if (!st.empty() && st.back() == c) st.pop_back();
      else st.push_back(c);
    }
    return st;
  }

  LabelledGraph g_;
  std::size_t cap_;
};

inline CWord reduce(const LabelledGraph& g, const CWord& word) { return Coxeter(g).reduce(word); }

inline CoxeterElement normal_form(const LabelledGraph& g, const CWord& word) { return Coxeter(g).element(word); }

inline std::vector<CoxeterElement> ball(const LabelledGraph& g, int L) { return Coxeter(g).ball(L); }

// Standard reflection representation: B(a,a)=1, B(a,b) = -cos(pi/m) on
// edges and -1 for non-adjacent pairs.
inline std::vector<std::vector<double>> geometric_oracle(const LabelledGraph& g, const CWord& word) {
  const int n = g.n();
  std::vector<std::vector<double>> B(n, std::vector<double>(n, -1.0));
  for (int a = 0; a < n; ++a) {
    B[a][a] = 1.0;
    for (int b = 0; b < n; ++b)
      if (a != b && g.label(a, b)) B[a][b] = -std::cos(M_PI / g.label(a, b));
  }
  std::vector<std::vector<double>> M(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) M[i][i] = 1.0;
  for (int s : word) {
    // M <- M * sigma_s; sigma_s has column j equal to e_j - 2 B(s,j) e_s.
    for (int i = 0; i < n; ++i) {
      double mis = M[i][s];
      for (int j = 0; j < n; ++j) M[i][j] -= 2.0 * B[s][j] * mis;
    }
  }
  return M;
}

inline bool oracle_is_identity(const std::vector<std::vector<double>>& M, double tol) {
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j)
      if (std::fabs(M[i][j] - (i == j ? 1.0 : 0.0)) > tol) return false;
  return true;
}

inline CWord cox_alternating(const CWord& a, const CWord& b, int m) {
  CWord w;
  for (int i = 0; i < m; ++i) {
    const CWord& x = (i % 2 == 0) ? a : b;
    w.insert(w.end(), x.begin(), x.end());
  }
  return w;
}

inline CWord cword_inverse(const CWord& w) { return CWord(w.rbegin(), w.rend()); }

struct HomomorphismCheck {
  bool ok = true;
  std::string failing_relator;
};

// images[s] is a word over the target vertices.
inline HomomorphismCheck verify_homomorphism(const LabelledGraph& src, const Coxeter& tgt,
                                             const std::vector<CWord>& images) {
  if (static_cast<int>(images.size()) != src.n()) throw GraphError("missing image");
  HomomorphismCheck r;
  for (int s = 0; s < src.n(); ++s) {
    CWord sq = images[s];
    sq.insert(sq.end(), images[s].begin(), images[s].end());
    if (!tgt.is_identity(sq)) {
      r.ok = false;
      r.failing_relator = src.name(s) + "^2";
      return r;
    }
  }
  for (const auto& e : src.edges()) {
    CWord w = cox_alternating(images[e.u], images[e.v], e.m);
    CWord rhs = cox_alternating(images[e.v], images[e.u], e.m);
    CWord inv = cword_inverse(rhs);
    w.insert(w.end(), inv.begin(), inv.end());
    if (!tgt.is_identity(w)) {
      r.ok = false;
      r.failing_relator = "braid(" + src.name(e.u) + "," + src.name(e.v) + ";" + std::to_string(e.m) + ")";
      return r;
    }
  }
  return r;
}

inline HomomorphismCheck verify_homomorphism(const LabelledGraph& src, const LabelledGraph& tgt,
                                             const std::vector<CWord>& images) {
  return verify_homomorphism(src, Coxeter(tgt), images);
}

// Parses vertex-name words; "^-1" suffixes are accepted and ignored.
inline CWord parse_cword(const LabelledGraph& g, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  CWord w;
  while (in >> tok) {
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) tok.resize(tok.size() - 3);
    w.push_back(g.vertex(tok));
  }
  return w;
}

}  // namespace clttf
