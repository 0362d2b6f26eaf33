#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liecoh/matrix.hpp"

namespace liecoh {

// Wedge subsets of {0..n-1} are encoded as bitmasks; mask m represents
// xi_{i1} ^ ... ^ xi_{ik} with i1 < ... < ik. The basis of the full
// exterior algebra is masks 0..2^n-1 in increasing order.

inline int mask_degree(unsigned m) { return __builtin_popcount(m); }

// sign picked up moving a generator with index i across the generators of m
// that precede it
inline int mask_sign_below(unsigned m, int i) {
  return (mask_degree(m & ((1u << i) - 1)) % 2) ? -1 : 1;
}

// Operator algebra End(^ u-bar) in normal form: sums of
// w_IJ = e(xi_I) iota(X_J) with ascending letters inside each factor.
struct EndElement {
  int n = 0;
  std::map<std::pair<unsigned, unsigned>, Rat> terms;

  bool is_zero() const {
    for (const auto& [k, c] : terms)
      if (c != 0) return false;
    return true;
  }
  void prune() {
    for (auto it = terms.begin(); it != terms.end();)
      it = (it->second == 0) ? terms.erase(it) : std::next(it);
  }
  EndElement operator+(const EndElement& o) const {
    EndElement r = *this;
    for (const auto& [k, c] : o.terms) r.terms[k] += c;
    r.prune();
    return r;
  }
  EndElement operator-(const EndElement& o) const {
    EndElement r = *this;
    for (const auto& [k, c] : o.terms) r.terms[k] -= c;
    r.prune();
    return r;
  }
  EndElement operator*(const Rat& c) const {
    EndElement r;
    r.n = n;
    if (c == 0) return r;
    for (const auto& [k, x] : terms) r.terms[k] = x * c;
    return r;
  }
  bool operator==(const EndElement& o) const { return (*this - o).is_zero(); }

  // parity of all terms; -1 if mixed, +1 means odd, 0 even, 2 for zero
  int parity() const {
    int p = 2;
    for (const auto& [k, c] : terms) {
      if (c == 0) continue;
      int q = (mask_degree(k.first) + mask_degree(k.second)) % 2;
      if (p == 2) p = q;
      if (p != q) return -1;
    }
    return p;
  }
};

inline EndElement end_one(int n) {
  EndElement r;
  r.n = n;
  r.terms[{0, 0}] = 1;
  return r;
}

// letters: ('e', i) or ('i', j), 0-based indices
using EndLetter = std::pair<char, int>;

// Rewrite a word of e/iota letters into normal form with the relations:
// letters of the same kind anticommute (squares vanish) and
// e(xi_i) iota(X_j) + iota(X_j) e(xi_i) = delta_ij.
inline EndElement normalize_end_word(int n, const std::vector<EndLetter>& word,
                                     const Rat& coeff = 1) {
  std::map<std::vector<EndLetter>, Rat> work{{word, coeff}};
  EndElement out;
  out.n = n;
  while (!work.empty()) {
    auto it = work.begin();
    std::vector<EndLetter> w = it->first;
    Rat c = it->second;
    work.erase(it);
    if (c == 0) continue;
    size_t bad = w.size();
    for (size_t k = 0; k + 1 < w.size(); ++k) {
      auto [ka, ia] = w[k];
      auto [kb, ib] = w[k + 1];
      bool violation = (ka == kb && ia >= ib) || (ka == 'i' && kb == 'e');
      if (violation) {
        bad = k;
        break;
      }
    }
    if (bad == w.size()) {
      unsigned I = 0, J = 0;
      for (auto [k, i] : w) (k == 'e' ? I : J) |= 1u << i;
      out.terms[{I, J}] += c;
      continue;
    }
    auto [ka, ia] = w[bad];
    auto [kb, ib] = w[bad + 1];
    if (ka == kb && ia == ib) continue;  // square of a letter is zero
    std::vector<EndLetter> sw = w;
    std::swap(sw[bad], sw[bad + 1]);
    work[sw] -= c;
    if (ka == 'i' && kb == 'e' && ia == ib) {
      std::vector<EndLetter> cut;
      for (size_t k = 0; k < w.size(); ++k)
        if (k != bad && k != bad + 1) cut.push_back(w[k]);
      work[cut] += c;
    }
  }
  out.prune();
  return out;
}

inline std::vector<EndLetter> end_basis_word(unsigned I, unsigned J, int n) {
  std::vector<EndLetter> w;
  for (int i = 0; i < n; ++i)
    if (I & (1u << i)) w.emplace_back('e', i);
  for (int j = 0; j < n; ++j)
    if (J & (1u << j)) w.emplace_back('i', j);
  return w;
}

inline EndElement end_letter(int n, char kind, int i) {
  return normalize_end_word(n, {{kind, i}});
}

inline EndElement end_mul(const EndElement& a, const EndElement& b) {
  EndElement r;
  r.n = a.n;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      auto w = end_basis_word(ka.first, ka.second, a.n);
      auto w2 = end_basis_word(kb.first, kb.second, a.n);
      w.insert(w.end(), w2.begin(), w2.end());
      r = r + normalize_end_word(a.n, w, ca * cb);
    }
  return r;
}

// Exact matrix on the 2^n wedge basis. Guarded: meant for n small enough
// that dense 2^n matrices are reasonable.
inline Mat end_to_matrix(const EndElement& x) {
  int n = x.n;
  if (n > 12) throw std::invalid_argument("end_to_matrix: n too large");
  int N = 1 << n;
  Mat m(N, N);
  for (const auto& [k, c] : x.terms) {
    auto [I, J] = k;
    for (unsigned T = 0; T < unsigned(N); ++T) {
      // apply iota letters descending (rightmost letter acts first)
      unsigned cur = T;
      int sign = 1;
      bool dead = false;
      for (int j = n - 1; j >= 0 && !dead; --j)
        if (J & (1u << j)) {
          if (!(cur & (1u << j))) {
            dead = true;
          } else {
            sign *= mask_sign_below(cur, j);
            cur &= ~(1u << j);
          }
        }
      for (int i = n - 1; i >= 0 && !dead; --i)
        if (I & (1u << i)) {
          if (cur & (1u << i)) {
            dead = true;
          } else {
            sign *= mask_sign_below(cur, i);
            cur |= 1u << i;
          }
        }
      if (!dead) m.at(int(cur), int(T)) += c * sign;
    }
  }
  return m;
}

// Element of the exterior algebra on xi_1..xi_n (the u-bar side) and
// X_1..X_n (the u side), keyed by the two masks; generators ordered with
// all xi before all X.
struct WedgeElement {
  std::map<std::pair<unsigned, unsigned>, Rat> terms;

  bool is_zero() const {
    for (const auto& [k, c] : terms)
      if (c != 0) return false;
    return true;
  }
  void prune() {
    for (auto it = terms.begin(); it != terms.end();)
      it = (it->second == 0) ? terms.erase(it) : std::next(it);
  }
  WedgeElement operator+(const WedgeElement& o) const {
    WedgeElement r = *this;
    for (const auto& [k, c] : o.terms) r.terms[k] += c;
    r.prune();
    return r;
  }
  WedgeElement operator-(const WedgeElement& o) const {
    WedgeElement r = *this;
    for (const auto& [k, c] : o.terms) r.terms[k] -= c;
    r.prune();
    return r;
  }
  WedgeElement operator*(const Rat& c) const {
    WedgeElement r;
    if (c == 0) return r;
    for (const auto& [k, x] : terms) r.terms[k] = x * c;
    return r;
  }
  bool operator==(const WedgeElement& o) const { return (*this - o).is_zero(); }
};

// s(w_IJ) = xi_I ^ X_J: on normal forms the symbol is the identification of
// keys; its content is that it intertwines the graded commutator with
// contraction.
inline WedgeElement symbol_s(const EndElement& x) {
  WedgeElement r;
  for (const auto& [k, c] : x.terms) r.terms[k] = c;
  r.prune();
  return r;
}

inline EndElement symbol_s_inverse(int n, const WedgeElement& w) {
  EndElement r;
  r.n = n;
  for (const auto& [k, c] : w.terms) r.terms[k] = c;
  r.prune();
  return r;
}

// Contraction iota(X_i) on the wedge side, as used by the Koszul
// differential: it is the symbol of the graded commutator with e(xi_i), so
// it removes the X_i letter (the functional dual to e(xi_i) pairs the u
// part), with the sign across all preceding letters in the xi-then-X order.
inline WedgeElement wedge_contract(int i, const WedgeElement& w) {
  WedgeElement r;
  for (const auto& [k, c] : w.terms) {
    auto [I, J] = k;
    if (!(J & (1u << i))) continue;
    int sign = ((mask_degree(I) + mask_degree(J & ((1u << i) - 1))) % 2) ? -1
                                                                         : 1;
    r.terms[{I, J & ~(1u << i)}] += c * sign;
  }
  r.prune();
  return r;
}

inline int wedge_parity(const WedgeElement& w) {
  int p = 2;
  for (const auto& [k, c] : w.terms) {
    if (c == 0) continue;
    int q = (mask_degree(k.first) + mask_degree(k.second)) % 2;
    if (p == 2) p = q;
    if (p != q) return -1;
  }
  return p;
}

// graded commutator [a, b] = ab - (-1)^{|a||b|} ba for homogeneous parity
inline EndElement end_graded_commutator(const EndElement& a,
                                        const EndElement& b) {
  int pa = a.parity(), pb = b.parity();
  if (pa == -1 || pb == -1)
    throw std::invalid_argument("graded commutator needs homogeneous parity");
  Rat sign = (pa == 1 && pb == 1) ? 1 : -1;
  return end_mul(a, b) + end_mul(b, a) * sign;
}

}  // namespace liecoh
