#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecoh/matrix.hpp"
#include "liecoh/weight.hpp"

namespace liecoh {

// A Weyl group element: reduced word in simple reflections plus its exact
// action on fundamental-weight coordinates.
struct WeylElement {
  std::vector<int> word;  // simple reflection indices, 0-based
  Mat matrix;             // action on coordinate column vectors
  Mat inverse;
  int length = 0;
};

// Root system data for a semisimple type of total rank <= 4, with simple
// roots in Bourbaki order and the invariant form normalized so that long
// roots of every simple factor have squared length 2.
class RootSystem {
 public:
  std::string lie_type;
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j-check>
  std::vector<Rat> half_length_sq;       // d_i = (alpha_i, alpha_i)/2
  std::vector<Weight> simple_roots;
  std::vector<Weight> positive_roots;    // sorted by (height, coords)
  Mat form_gram;                         // (w_i, w_j) fundamental Gram matrix
  Mat cartan_t_inv;                      // (C^T)^{-1}, maps coords -> simple-root coords
  Weight rho;
  std::vector<WeylElement> weyl;         // full Weyl group, BFS order
  std::vector<std::vector<int>> factors; // simple-root indices per simple factor

  static RootSystem build(const std::string& lie_type);

  // Invariant bilinear form on the weight space.
  Rat form(const Weight& a, const Weight& b) const {
    Rat r = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        r += a.coords[i] * form_gram.at(i, j) * b.coords[j];
    return r;
  }

  // <w, alpha-check> for an arbitrary root alpha.
  Rat coroot_pairing(const Weight& w, const Weight& alpha) const {
    Rat a2 = form(alpha, alpha);
    return 2 * form(w, alpha) / a2;
  }

  // Coordinates of a weight in the simple-root basis.
  std::vector<Rat> simple_root_coords(const Weight& w) const {
    std::vector<Rat> n(rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        n[i] += cartan_t_inv.at(i, j) * w.coords[j];
    return n;
  }

  int height(const Weight& root) const {
    auto n = simple_root_coords(root);
    Rat h = 0;
    for (const auto& x : n) h += x;
    if (h.get_den() != 1) throw std::runtime_error("non-integral height");
    return int(h.get_num().get_si());
  }

  Weight apply(const Mat& m, const Weight& w) const {
    Weight r(rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) r.coords[i] += m.at(i, j) * w.coords[j];
    return r;
  }

  Weight simple_reflect(int i, const Weight& w) const {
    Weight r = w;
    for (int j = 0; j < rank; ++j)
      r.coords[j] -= w.coords[i] * cartan[i][j];
    return r;
  }

  bool is_root(const Weight& w) const {
    for (const auto& r : positive_roots)
      if (r == w || (-r) == w) return true;
    return false;
  }
  bool is_positive_root(const Weight& w) const {
    for (const auto& r : positive_roots)
      if (r == w) return true;
    return false;
  }

  // w(lambda + rho) - rho.
  Weight dot_action(const WeylElement& w, const Weight& lambda) const {
    return apply(w.matrix, lambda + rho) - rho;
  }

  std::vector<Weight> weyl_orbit(const Weight& w) const {
    std::set<Weight> seen;
    std::vector<Weight> todo{w};
    seen.insert(w);
    while (!todo.empty()) {
      Weight cur = todo.back();
      todo.pop_back();
      for (int i = 0; i < rank; ++i) {
        Weight nx = simple_reflect(i, cur);
        if (seen.insert(nx).second) todo.push_back(nx);
      }
    }
    return std::vector<Weight>(seen.begin(), seen.end());
  }

  // The dominant representative of the Weyl orbit of w.
  Weight dominant_representative(const Weight& w) const {
    Weight cur = w;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < rank; ++i)
        if (cur.coords[i] < 0) {
          cur = simple_reflect(i, cur);
          changed = true;
        }
    }
    return cur;
  }

  bool weyl_conjugate(const Weight& a, const Weight& b) const {
    return dominant_representative(a) == dominant_representative(b);
  }

  std::set<int> singular_set(const Weight& w) const {
    std::set<int> s;
    for (size_t k = 0; k < positive_roots.size(); ++k)
      if (coroot_pairing(w, positive_roots[k]) == 0) s.insert(int(k));
    return s;
  }

  // true iff singular_set(a) contains singular_set(b).
  bool at_least_as_singular(const Weight& a, const Weight& b) const {
    auto sa = singular_set(a), sb = singular_set(b);
    return std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
  }

  bool is_regular(const Weight& w) const { return singular_set(w).empty(); }

 private:
  void generate_roots();
  void generate_weyl();
};

// Parabolic q = h + u specified by a subset of simple roots spanning the
// Levi factor. xi0 is the grading functional: 0 on Levi simple roots, 1 on
// the others, applied through simple-root coordinates.
struct ParabolicData {
  const RootSystem* rs = nullptr;
  std::set<int> levi_subset;       // 0-based simple-root indices
  std::vector<Weight> u_roots;     // positive roots outside the Levi span
  std::vector<Weight> h_roots;     // positive roots of the Levi
  Weight rho_u;
  Weight rho_h;
  std::vector<Rat> xi0;            // values on simple roots

  Rat xi0_pairing(const Weight& w) const {
    auto n = rs->simple_root_coords(w);
    Rat r = 0;
    for (int i = 0; i < rs->rank; ++i) r += xi0[i] * n[i];
    return r;
  }
};

inline RootSystem RootSystem::build(const std::string& lie_type) {
  // Split product labels on 'x'.
  std::vector<std::pair<char, int>> parts;
  size_t pos = 0;
  while (pos < lie_type.size()) {
    size_t next = lie_type.find('x', pos);
    std::string tok = lie_type.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.size() < 2 || tok[0] < 'A' || tok[0] > 'G')
      throw std::invalid_argument("unsupported Lie type label: " + lie_type);
    char fam = tok[0];
    int n = std::stoi(tok.substr(1));
    parts.emplace_back(fam, n);
    pos = next == std::string::npos ? lie_type.size() : next + 1;
  }
  if (parts.empty())
    throw std::invalid_argument("unsupported Lie type label: " + lie_type);

  RootSystem rs;
  rs.lie_type = lie_type;
  int total = 0;
  for (auto [fam, n] : parts) total += n;
  if (total < 1 || total > 4)
    throw std::invalid_argument("total rank out of range [1,4]: " + lie_type);
  rs.rank = total;
  rs.cartan.assign(total, std::vector<int>(total, 0));
  rs.half_length_sq.assign(total, Rat(1));

  int base = 0;
  for (auto [fam, n] : parts) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) idx.push_back(base + i);
    rs.factors.push_back(idx);
    auto C = [&](int i, int j) -> int& { return rs.cartan[base + i][base + j]; };
    for (int i = 0; i < n; ++i) C(i, i) = 2;
    switch (fam) {
      case 'A':
        for (int i = 0; i + 1 < n; ++i) C(i, i + 1) = C(i + 1, i) = -1;
        break;
      case 'B':
        if (n < 2) throw std::invalid_argument("B requires rank >= 2");
        for (int i = 0; i + 1 < n; ++i) C(i, i + 1) = C(i + 1, i) = -1;
        C(n - 2, n - 1) = -2;  // <alpha_{n-1}, alpha_n-check>
        rs.half_length_sq[base + n - 1] = Rat(1, 2);
        break;
      case 'C':
        if (n < 2) throw std::invalid_argument("C requires rank >= 2");
        for (int i = 0; i + 1 < n; ++i) C(i, i + 1) = C(i + 1, i) = -1;
        C(n - 1, n - 2) = -2;
        for (int i = 0; i + 1 < n; ++i) rs.half_length_sq[base + i] = Rat(1, 2);
        break;
      case 'D':
        if (n < 3) throw std::invalid_argument("D requires rank >= 3");
        for (int i = 0; i + 2 < n; ++i) C(i, i + 1) = C(i + 1, i) = -1;
        C(n - 3, n - 1) = C(n - 1, n - 3) = -1;
        break;
      case 'G':
        if (n != 2) throw std::invalid_argument("G requires rank 2");
        C(0, 1) = -1;
        C(1, 0) = -3;
        rs.half_length_sq[base + 0] = Rat(1, 3);
        break;
      default:
        throw std::invalid_argument("unsupported family in label: " + lie_type);
    }
    base += n;
  }

  // Simple roots in fundamental coordinates: alpha_i has coords cartan[i][*].
  for (int i = 0; i < total; ++i) {
    Weight a(total);
    for (int j = 0; j < total; ++j) a.coords[j] = rs.cartan[i][j];
    rs.simple_roots.push_back(a);
  }

  // Gram matrix G = C^{-1} D with D = diag(d_i); see coroot conventions.
  Mat C(total, total), D(total, total);
  for (int i = 0; i < total; ++i) {
    D.at(i, i) = rs.half_length_sq[i];
    for (int j = 0; j < total; ++j) C.at(i, j) = rs.cartan[i][j];
  }
  rs.form_gram = C.inverse() * D;
  rs.cartan_t_inv = C.transpose().inverse();

  rs.rho = Weight(total);
  for (auto& x : rs.rho.coords) x = 1;

  rs.generate_roots();
  rs.generate_weyl();
  return rs;
}

inline void RootSystem::generate_roots() {
  std::set<Weight> all(simple_roots.begin(), simple_roots.end());
  std::vector<Weight> todo(simple_roots);
  while (!todo.empty()) {
    Weight cur = todo.back();
    todo.pop_back();
    for (int i = 0; i < rank; ++i) {
      Weight nx = simple_reflect(i, cur);
      if (all.insert(nx).second) todo.push_back(nx);
    }
  }
  for (const auto& r : all) {
    auto n = simple_root_coords(r);
    bool pos = true, ok = true;
    for (const auto& x : n) {
      if (x.get_den() != 1) ok = false;
      if (x < 0) pos = false;
    }
    if (!ok) throw std::runtime_error("non-integral root coordinates");
    if (pos) positive_roots.push_back(r);
  }
  std::sort(positive_roots.begin(), positive_roots.end(),
            [this](const Weight& a, const Weight& b) {
              int ha = height(a), hb = height(b);
              if (ha != hb) return ha < hb;
              return a.coords < b.coords;
            });
}

inline void RootSystem::generate_weyl() {
  WeylElement id;
  id.matrix = Mat::identity(rank);
  id.inverse = Mat::identity(rank);
  weyl.push_back(id);
  std::map<std::vector<Rat>, int> seen;
  auto key = [this](const Mat& m) {
    std::vector<Rat> k;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) k.push_back(m.at(i, j));
    return k;
  };
  std::vector<Mat> refl;
  for (int i = 0; i < rank; ++i) {
    Mat s = Mat::identity(rank);
    // (s_i w)_j = w_j - w_i * cartan[i][j]
    for (int j = 0; j < rank; ++j) s.at(j, i) -= cartan[i][j];
    refl.push_back(s);
  }
  seen[key(id.matrix)] = 0;
  for (size_t q = 0; q < weyl.size(); ++q) {
    for (int i = 0; i < rank; ++i) {
      // append s_i on the right: w' = w s_i acts as matrix(w) * matrix(s_i)
      Mat m = weyl[q].matrix * refl[i];
      auto k = key(m);
      if (seen.count(k)) continue;
      WeylElement e;
      e.word = weyl[q].word;
      e.word.push_back(i);
      e.matrix = m;
      e.inverse = refl[i] * weyl[q].inverse;
      e.length = weyl[q].length + 1;
      seen[k] = int(weyl.size());
      weyl.push_back(e);
    }
  }
  if (weyl.size() > 40320)
    throw std::runtime_error("Weyl group unexpectedly large");
}

inline RootSystem build_root_system(const std::string& lie_type) {
  return RootSystem::build(lie_type);
}

// levi_subset holds 0-based simple-root indices.
inline ParabolicData build_parabolic(const RootSystem& rs,
                                     const std::set<int>& levi_subset) {
  for (int i : levi_subset)
    if (i < 0 || i >= rs.rank)
      throw std::invalid_argument("levi index out of range");
  ParabolicData pd;
  pd.rs = &rs;
  pd.levi_subset = levi_subset;
  pd.xi0.assign(rs.rank, Rat(1));
  for (int i : levi_subset) pd.xi0[i] = 0;
  for (const auto& r : rs.positive_roots) {
    auto n = rs.simple_root_coords(r);
    bool in_levi = true;
    for (int i = 0; i < rs.rank; ++i)
      if (n[i] != 0 && !levi_subset.count(i)) in_levi = false;
    if (in_levi)
      pd.h_roots.push_back(r);
    else
      pd.u_roots.push_back(r);
  }
  pd.rho_u = Weight(rs.rank);
  for (const auto& r : pd.u_roots) pd.rho_u = pd.rho_u + r;
  pd.rho_u = pd.rho_u * Rat(1, 2);
  pd.rho_h = Weight(rs.rank);
  for (const auto& r : pd.h_roots) pd.rho_h = pd.rho_h + r;
  pd.rho_h = pd.rho_h * Rat(1, 2);
  return pd;
}

// Minimal-length coset representatives of W_H \ W_G:
// {w : w^{-1}(positive Levi roots) stays positive}; returned grouped by
// increasing length, deterministic within a length.
inline std::vector<WeylElement> w1_representatives(const ParabolicData& pd) {
  const RootSystem& rs = *pd.rs;
  std::vector<WeylElement> out;
  for (const auto& w : rs.weyl) {
    bool ok = true;
    for (const auto& a : pd.h_roots)
      if (!rs.is_positive_root(rs.apply(w.inverse, a))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(w);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const WeylElement& a, const WeylElement& b) {
                     return a.length < b.length;
                   });
  return out;
}

inline bool condition_C(const Weight& mu, const Weight& nu,
                        const ParabolicData& pd) {
  Weight base = mu + pd.rho_u;
  return pd.rs->at_least_as_singular(base + nu, base);
}

}  // namespace liecoh
