#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace clttf {

// A permutation of {0..n-1} in image form: p[i] is the image of i.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool perm_is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

// (a then b): i -> b[a[i]]
inline Perm perm_then(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline bool perm_is_valid(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// Deterministic Schreier-Sims over a fixed base 0..n-1.
class PermGroup {
 public:
  explicit PermGroup(int n) : n_(n) {}

  PermGroup(int n, const std::vector<Perm>& gens) : n_(n) {
    for (const auto& g : gens) add_generator(g);
  }

  int degree() const { return n_; }

  void add_generator(const Perm& g) {
    if (static_cast<int>(g.size()) != n_ || !perm_is_valid(g))
      throw std::invalid_argument("permutation of wrong degree");
    if (contains(g)) return;
    gens_.push_back(g);
    rebuild();
  }

  bool contains(const Perm& g) const {
    Perm h = g;
    return sift(h) == static_cast<int>(levels_.size()) && perm_is_identity(h);
  }

  // Exact order as a product of orbit lengths; saturates at UINT64_MAX.
  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (const auto& lv : levels_) {
      std::uint64_t o = lv.orbit.size();
      if (o && r > UINT64_MAX / o) return UINT64_MAX;
      r *= o;
    }
    return r;
  }

  const std::vector<Perm>& generators() const { return gens_; }

 private:
  struct Level {
    int point = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<int> where;          // orbit index or -1
    std::vector<Perm> transversal;   // transversal[k] maps point to orbit[k]
  };

  int sift(Perm& h) const {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      const Level& lv = levels_[i];
      int img = h[lv.point];
      int k = lv.where[img];
      if (k < 0) return static_cast<int>(i);
      h = perm_then(h, perm_inverse(lv.transversal[k]));
    }
    return static_cast<int>(levels_.size());
  }

  void compute_orbit(Level& lv) {
    lv.orbit.assign(1, lv.point);
    lv.where.assign(n_, -1);
    lv.where[lv.point] = 0;
    lv.transversal.assign(1, perm_identity(n_));
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      for (const auto& g : lv.gens) {
        int y = g[lv.orbit[i]];
        if (lv.where[y] < 0) {
          lv.where[y] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(y);
          lv.transversal.push_back(perm_then(lv.transversal[i], g));
        }
      }
    }
  }

  void rebuild() {
    levels_.clear();
    std::vector<Perm> current = gens_;
    // Build levels on base points 0,1,2,... skipping points fixed by all.
    int point = 0;
    while (true) {
      std::vector<Perm> nontriv;
      for (auto& g : current)
        if (!perm_is_identity(g)) nontriv.push_back(g);
      if (nontriv.empty()) break;
      while (point < n_) {
        bool moved = false;
        for (auto& g : nontriv)
          if (g[point] != point) { moved = true; break; }
        if (moved) break;
        ++point;
      }
      if (point >= n_) break;
      Level lv;
      lv.point = point;
      lv.gens = nontriv;
      compute_orbit(lv);
      // Schreier generators of the point stabilizer.
      std::vector<Perm> schreier;
      std::set<Perm> seen;
      for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
        for (const auto& g : lv.gens) {
          Perm ug = perm_then(lv.transversal[i], g);
          int k = lv.where[ug[lv.point]];
          Perm sg = perm_then(ug, perm_inverse(lv.transversal[k]));
          if (!perm_is_identity(sg) && seen.insert(sg).second) schreier.push_back(sg);
        }
      }
      levels_.push_back(std::move(lv));
      current = reduce_generators(schreier, point + 1);
      ++point;
    }
  }

  // Sims filter: a generating set of the same group with at most one
  // element per (first moved point, image) pair.
  std::vector<Perm> reduce_generators(const std::vector<Perm>& gens, int) const {
    std::vector<std::vector<int>> slot(n_, std::vector<int>(n_, -1));
    std::vector<Perm> kept;
    for (Perm h : gens) {
      int i = 0;
      while (i < n_) {
        if (h[i] == i) { ++i; continue; }
        int k = slot[i][h[i]];
        if (k < 0) {
          slot[i][h[i]] = static_cast<int>(kept.size());
          kept.push_back(h);
          break;
        }
        h = perm_then(h, perm_inverse(kept[k]));
      }
    }
    return kept;
  }

  int n_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

// Full element list of a small permutation group (BFS closure).
inline std::vector<Perm> perm_closure(int n, const std::vector<Perm>& gens, std::size_t cap = 2000000) {
  std::set<Perm> seen;
  std::vector<Perm> out;
  Perm id = perm_identity(n);
  seen.insert(id);
  out.push_back(id);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      Perm p = perm_then(out[i], g);
      if (seen.insert(p).second) {
        out.push_back(p);
        if (out.size() > cap) throw std::runtime_error("permutation group closure exceeds cap");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace clttf
