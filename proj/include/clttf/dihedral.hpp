#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace clttf {

// Letters of a two-generator word: +1 = s, +2 = t, negatives are inverses.
using DLetter = int;
using DWord = std::vector<DLetter>;

// A syllable of the free product Gamma = A * B. For odd m, A is generated by
// the image of the quasi-centre element (order 2); for even m, A is the
// infinite cyclic image of s. B is generated by the image of st and has
// order k = lcm(m,2)/2.
struct Syllable {
  bool in_a = false;
  int exp = 0;
  bool operator==(const Syllable& o) const { return in_a == o.in_a && exp == o.exp; }
  bool operator<(const Syllable& o) const { return in_a != o.in_a ? in_a < o.in_a : exp < o.exp; }
};

inline int quasi_centre_k(int m) { return m % 2 == 0 ? m / 2 : m; }

class DihedralElement {
 public:
  DihedralElement() = default;
  explicit DihedralElement(int m) : m_(m) {
    if (m < 2) throw std::invalid_argument("label must be >= 2");
  }

  int m() const { return m_; }
  int k() const { return quasi_centre_k(m_); }
  const std::vector<Syllable>& gamma_form() const { return syl_; }
  long long length() const { return len_; }
  bool is_identity() const { return syl_.empty() && len_ == 0; }

  static DihedralElement generator(int m, DLetter letter) {
    DihedralElement g(m);
    const bool odd = m % 2 == 1;
    const int h = (m - 1) / 2;
    switch (letter) {
      case 1:
        if (odd) g.push({false, -h}), g.push({true, 1});
        else g.push({true, 1});
        g.len_ = 1;
        break;
      case 2:
        if (odd) g.push({true, 1}), g.push({false, h + 1});
        else g.push({true, -1}), g.push({false, 1});
        g.len_ = 1;
        break;
      case -1:
        if (odd) g.push({true, 1}), g.push({false, h});
        else g.push({true, -1});
        g.len_ = -1;
        break;
      case -2:
        if (odd) g.push({false, -(h + 1)}), g.push({true, 1});
        else g.push({false, -1}), g.push({true, 1});
        g.len_ = -1;
        break;
      default:
        throw std::invalid_argument("letter outside {s,t,s^-1,t^-1}");
    }
    return g;
  }

  DihedralElement operator*(const DihedralElement& o) const {
    check(o);
    DihedralElement r = *this;
    for (const auto& s : o.syl_) r.push(s);
    r.len_ += o.len_;
    return r;
  }

  DihedralElement inverse() const {
    DihedralElement r(m_);
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.push({it->in_a, -it->exp});
    r.len_ = -len_;
    return r;
  }

  DihedralElement pow(long long e) const {
    DihedralElement base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    DihedralElement r(m_);
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const DihedralElement& o) const { return m_ == o.m_ && len_ == o.len_ && syl_ == o.syl_; }
  bool operator!=(const DihedralElement& o) const { return !(*this == o); }
  bool operator<(const DihedralElement& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    return syl_ < o.syl_;
  }

  // Ordering used for coset representatives: total length of the gamma
  // form, then the length, then the syllables.
  bool shorter_than(const DihedralElement& o) const {
    if (syl_.size() != o.syl_.size()) return syl_.size() < o.syl_.size();
    return *this < o;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(len_ * 1000003 + m_);
    for (const auto& s : syl_) {
      h ^= static_cast<std::uint64_t>((s.exp << 1) ^ (s.in_a ? 0x9e37 : 0x7f4a));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  std::string gamma_string() const {
    if (syl_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& s : syl_) {
      if (!first) out << ' ';
      first = false;
      const char* name = s.in_a ? (m_ % 2 ? "x" : "s") : "r";
      out << name;
      if (s.exp != 1) out << '^' << s.exp;
    }
    return out.str();
  }

 private:
  int normalize(bool in_a, long long e) const {
    if (in_a && m_ % 2 == 0) return static_cast<int>(e);
    const long long ord = in_a ? 2 : k();
    long long r = ((e % ord) + ord) % ord;
    if (2 * r > ord) r -= ord;
    return static_cast<int>(r);
  }

  void push(Syllable s) {
    s.exp = normalize(s.in_a, s.exp);
    if (s.exp == 0) return;
    if (!syl_.empty() && syl_.back().in_a == s.in_a) {
      int e = normalize(s.in_a, static_cast<long long>(syl_.back().exp) + s.exp);
      if (e == 0) syl_.pop_back();
      else syl_.back().exp = e;
      return;
    }
    syl_.push_back(s);
  }

  void check(const DihedralElement& o) const {
    if (m_ != o.m_) throw std::invalid_argument("mixing dihedral elements of different labels");
  }

  int m_ = 2;
  std::vector<Syllable> syl_;
  long long len_ = 0;
};

struct DihedralElementHash {
  std::size_t operator()(const DihedralElement& g) const { return g.hash(); }
};

inline DihedralElement dihedral_normal_form(int m, const DWord& word) {
  DihedralElement g(m);
  const DihedralElement gen[4] = {DihedralElement::generator(m, 1), DihedralElement::generator(m, 2),
                                  DihedralElement::generator(m, -1), DihedralElement::generator(m, -2)};
  for (DLetter l : word) {
    switch (l) {
      case 1: g = g * gen[0]; break;
      case 2: g = g * gen[1]; break;
      case -1: g = g * gen[2]; break;
      case -2: g = g * gen[3]; break;
      default: throw std::invalid_argument("letter outside {s,t,s^-1,t^-1}");
    }
  }
  return g;
}

// Alternating product s t s ... of n letters starting with `first`.
inline DWord dihedral_prod(DLetter first, int n) {
  DWord w;
  DLetter other = first == 1 ? 2 : 1;
  for (int i = 0; i < n; ++i) w.push_back(i % 2 == 0 ? first : other);
  return w;
}

inline DWord dword_inverse(const DWord& w) {
  DWord r(w.rbegin(), w.rend());
  for (auto& l : r) l = -l;
  return r;
}

// g = u^j for some j; candidate j = length(g).
inline std::optional<long long> is_in_cyclic(int m, const DihedralElement& g, const DihedralElement& u) {
  if (u.m() != m || g.m() != m) throw std::invalid_argument("label mismatch");
  if (u.length() != 1) throw std::invalid_argument("is_in_cyclic expects an element of length 1");
  long long j = g.length();
  if (u.pow(j) == g) return j;
  return std::nullopt;
}

struct SpecialElements {
  DWord x_word;
  DWord z_word;
  int k = 1;
  bool z_matches_x = false;  // z = x^2 (m odd) or z = x (m even)
};

inline SpecialElements special_elements(int m) {
  SpecialElements r;
  r.k = quasi_centre_k(m);
  r.x_word = dihedral_prod(1, m);
  for (int i = 0; i < r.k; ++i) {
    r.z_word.push_back(1);
    r.z_word.push_back(2);
  }
  auto x = dihedral_normal_form(m, r.x_word);
  auto z = dihedral_normal_form(m, r.z_word);
  r.z_matches_x = (m % 2 == 1) ? (z == x * x) : (z == x);
  return r;
}

inline std::vector<int> unit_residues(int m) {
  if (m < 3) throw std::invalid_argument("unit residues need m >= 3");
  std::vector<int> r;
  for (int i = 0; i < m; ++i)
    if (std::gcd(2 * i + 1, m) == 1) r.push_back(i);
  return r;
}

// Element rho^rot t^refl of the dihedral group of order 2m, rho = st.
struct CoxDihedralElement {
  int m = 2;
  int rot = 0;
  bool refl = false;

  CoxDihedralElement operator*(const CoxDihedralElement& o) const {
    CoxDihedralElement r{m, 0, refl != o.refl};
    int j = refl ? -o.rot : o.rot;
    r.rot = (((rot + j) % m) + m) % m;
    return r;
  }
  bool operator==(const CoxDihedralElement& o) const { return m == o.m && rot == o.rot && refl == o.refl; }
  bool is_identity() const { return rot == 0 && !refl; }
};

inline CoxDihedralElement cox_dihedral(int m, const DWord& word) {
  CoxDihedralElement g{m, 0, false};
  const CoxDihedralElement s{m, 1 % m, true};
  const CoxDihedralElement t{m, 0, true};
  for (DLetter l : word) {
    if (l == 1 || l == -1) g = g * s;
    else if (l == 2 || l == -2) g = g * t;
    else throw std::invalid_argument("letter outside {s,t}");
  }
  return g;
}

// Parses "s t s^-1 T" style words; a single token of s/t/S/T characters is
// split letter by letter.
inline DWord parse_dword(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  DWord w;
  auto letter = [](char c) -> DLetter {
    switch (c) {
      case 's': return 1;
      case 't': return 2;
      case 'S': return -1;
      case 'T': return -2;
    }
    throw std::invalid_argument(std::string("letter outside alphabet: ") + c);
  };
  while (in >> tok) {
    bool inv = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    if (tok.empty()) throw std::invalid_argument("empty letter");
    if (inv && tok.size() != 1) throw std::invalid_argument("inverse suffix applies to one letter");
    for (char c : tok) w.push_back(inv ? -letter(c) : letter(c));
  }
  return w;
}

inline std::string dword_string(const DWord& w) {
  std::string out;
  for (DLetter l : w) {
    if (!out.empty()) out += ' ';
    out += (l == 1 || l == -1) ? "s" : "t";
    if (l < 0) out += "^-1";
  }
  return out;
}

}  // namespace clttf
