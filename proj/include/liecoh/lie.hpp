#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "liecoh/module.hpp"
#include "liecoh/rootsystem.hpp"

namespace liecoh {

// Concrete semisimple Lie algebra: a basis h_1..h_r, x_gamma (gamma over
// positive then negative roots), exact structure constants, and the
// invariant form normalized so long roots have squared length 2 in each
// simple factor. Root vectors are defined recursively through simple
// generators, so their action is available on any WeightedModule.
struct LieAlgebra {
  const RootSystem* rs = nullptr;
  int npos = 0;

  // x_{gamma_k} = [e_i, x_{gamma_{k'}}] with (i, k') = pos_def[k]; k' == -1
  // means gamma_k is the simple root alpha_i. neg_def mirrors this with f_i.
  std::vector<std::pair<int, int>> pos_def, neg_def;

  // structure constants: bracket[a][b] = coefficients of [x_a, x_b]
  std::vector<std::vector<std::map<int, Rat>>> bracket;

  Mat bform;  // invariant form Gram matrix on the basis

  int dim() const { return rs->rank + 2 * npos; }
  int cartan_index(int i) const { return i; }
  int pos_index(int k) const { return rs->rank + k; }
  int neg_index(int k) const { return rs->rank + npos + k; }

  Weight basis_weight(int a) const {
    if (a < rs->rank) return Weight(rs->rank);
    if (a < rs->rank + npos) return rs->positive_roots[a - rs->rank];
    return -rs->positive_roots[a - rs->rank - npos];
  }

  // index of the root vector for gamma (positive or negative root)
  int root_index(const Weight& gamma) const {
    for (int k = 0; k < npos; ++k) {
      if (rs->positive_roots[k] == gamma) return pos_index(k);
      if (-rs->positive_roots[k] == gamma) return neg_index(k);
    }
    throw std::invalid_argument("root_index: not a root");
  }

  Rat t_gamma(int k) const { return bform.at(pos_index(k), neg_index(k)); }

  std::map<int, Rat> bracket_of(int a, int b) const { return bracket[a][b]; }
};

// Action matrices of every basis element on a module, in basis order.
inline std::vector<SpMat> module_action(const LieAlgebra& L,
                                        const WeightedModule& M) {
  const RootSystem& rs = *L.rs;
  std::vector<SpMat> mats(L.dim());
  for (int i = 0; i < rs.rank; ++i) mats[i] = M.H[i];
  for (int k = 0; k < L.npos; ++k) {
    auto [i, k2] = L.pos_def[k];
    mats[L.pos_index(k)] =
        (k2 < 0) ? M.E[i] : SpMat::commutator(M.E[i], mats[L.pos_index(k2)]);
    auto [j, k3] = L.neg_def[k];
    mats[L.neg_index(k)] =
        (k3 < 0) ? M.F[j] : SpMat::commutator(M.F[j], mats[L.neg_index(k3)]);
  }
  for (auto& m : mats) m.compress();
  return mats;
}

inline LieAlgebra build_lie_algebra(const RootSystem& rs, int dim_cap = 400) {
  LieAlgebra L;
  L.rs = &rs;
  L.npos = int(rs.positive_roots.size());

  // recursive root vector definitions; positive_roots is height-sorted so
  // gamma - alpha_i always appears earlier
  for (int k = 0; k < L.npos; ++k) {
    const Weight& g = rs.positive_roots[k];
    std::pair<int, int> def{-1, -1};
    for (int i = 0; i < rs.rank && def.first < 0; ++i) {
      if (g == rs.simple_roots[i]) def = {i, -1};
    }
    for (int i = 0; i < rs.rank && def.first < 0; ++i) {
      Weight rest = g - rs.simple_roots[i];
      if (rs.is_positive_root(rest)) {
        for (int k2 = 0; k2 < k; ++k2)
          if (rs.positive_roots[k2] == rest) {
            def = {i, k2};
            break;
          }
      }
    }
    if (def.first < 0) throw std::runtime_error("lie: root chain broken");
    L.pos_def.push_back(def);
    L.neg_def.push_back(def);
  }

  // faithful representation: direct sum of the adjoint of each simple factor
  WeightedModule V;
  bool first = true;
  for (const auto& fac : rs.factors) {
    Weight theta;
    for (const auto& g : rs.positive_roots) {
      auto src = rs.simple_root_coords(g);
      bool in_factor = true;
      for (int i = 0; i < rs.rank; ++i)
        if (src[i] != 0 && !std::count(fac.begin(), fac.end(), i))
          in_factor = false;
      if (!in_factor) continue;
      if (theta.rank() == 0 || rs.height(g) > rs.height(theta)) theta = g;
    }
    WeightedModule adj = build_irrep(rs, theta, dim_cap);
    V = first ? adj : direct_sum_module(V, adj);
    first = false;
  }

  std::vector<SpMat> mats = module_action(L, V);
  int n = L.dim(), vd = V.dim();

  // flatten to columns and check the representation separates the basis
  Mat basis(vd * vd, n);
  for (int a = 0; a < n; ++a)
    for (int r = 0; r < vd; ++r)
      for (const auto& [c, v] : mats[a].row(r)) basis.at(r * vd + c, a) = v;
  if (basis.rank() != n)
    throw std::runtime_error("lie: basis not independent in adjoint model");

  // structure constants by exact solve in the flattened representation
  L.bracket.assign(n, std::vector<std::map<int, Rat>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      SpMat br = SpMat::commutator(mats[a], mats[b]);
      Mat rhs(vd * vd, 1);
      for (int r = 0; r < vd; ++r)
        for (const auto& [c, v] : br.row(r)) rhs.at(r * vd + c, 0) = v;
      auto sol = basis.solve(rhs);
      if (!sol || basis * *sol != rhs)
        throw std::runtime_error("lie: bracket not in span");
      for (int d = 0; d < n; ++d)
        if (sol->at(d, 0) != 0) L.bracket[a][b][d] = sol->at(d, 0);
    }

  // invariant form: per-factor rescaled trace form; elements of one factor
  // act as zero on the other factors' adjoint summands, so traces do not mix
  Mat raw(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Rat tr = 0;
      for (int r = 0; r < vd; ++r)
        for (const auto& [c, v] : mats[a].row(r))
          for (const auto& [c2, v2] : mats[b].row(c))
            if (c2 == r) tr += v * v2;
      raw.at(a, b) = raw.at(b, a) = tr;
    }
  auto factor_of = [&](int a) -> int {
    Weight w = L.basis_weight(a);
    int simple = (a < rs.rank) ? a : -1;
    if (simple < 0) {
      auto src = rs.simple_root_coords(w);
      for (int i = 0; i < rs.rank; ++i)
        if (src[i] != 0) {
          simple = i;
          break;
        }
    }
    for (size_t f = 0; f < rs.factors.size(); ++f)
      if (std::count(rs.factors[f].begin(), rs.factors[f].end(), simple))
        return int(f);
    throw std::runtime_error("lie: factor lookup failed");
  };
  std::vector<Rat> scale(rs.factors.size());
  for (size_t f = 0; f < rs.factors.size(); ++f) {
    int i0 = rs.factors[f][0];
    // normalize so B(h_i, h_i) = 2/d_i (the coroot pairing value)
    scale[f] = (Rat(2) / rs.half_length_sq[i0]) / raw.at(i0, i0);
  }
  L.bform = Mat(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int fa = factor_of(a), fb = factor_of(b);
      if (fa != fb) {
        if (raw.at(a, b) != 0)
          throw std::runtime_error("lie: cross-factor trace nonzero");
        continue;
      }
      L.bform.at(a, b) = scale[fa] * raw.at(a, b);
    }

  // normalization checks: Cartan block matches the form on coroots, and
  // root spaces pair only with their opposites
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      Rat expect = rs.form(rs.simple_roots[i], rs.simple_roots[j]) /
                   (rs.half_length_sq[i] * rs.half_length_sq[j]);
      if (L.bform.at(i, j) != expect)
        throw std::runtime_error("lie: Cartan form normalization failed");
    }
  for (int a = rs.rank; a < n; ++a)
    for (int b = rs.rank; b < n; ++b) {
      bool opposite = (L.basis_weight(a) + L.basis_weight(b)).is_zero();
      if (opposite && a != b && L.bform.at(a, b) == 0)
        throw std::runtime_error("lie: degenerate root pairing");
      if (!opposite && L.bform.at(a, b) != 0)
        throw std::runtime_error("lie: non-opposite root pairing nonzero");
    }
  return L;
}

}  // namespace liecoh
