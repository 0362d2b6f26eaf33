#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecoh/lie.hpp"
#include "liecoh/rootsystem.hpp"

namespace liecoh {

// Monomial in the universal enveloping algebra: letters are LieAlgebra
// basis indices, stored in the block order fixed by a PBWContext.
using PBWMonomial = std::vector<int>;

struct PBWElement {
  std::map<PBWMonomial, Rat> terms;

  bool is_zero() const {
    for (const auto& [m, c] : terms)
      if (c != 0) return false;
    return true;
  }
  int filtration_degree() const {
    size_t d = 0;
    for (const auto& [m, c] : terms)
      if (c != 0) d = std::max(d, m.size());
    return int(d);
  }
  void prune() {
    for (auto it = terms.begin(); it != terms.end();)
      it = (it->second == 0) ? terms.erase(it) : std::next(it);
  }
  PBWElement operator+(const PBWElement& o) const {
    PBWElement r = *this;
    for (const auto& [m, c] : o.terms) r.terms[m] += c;
    r.prune();
    return r;
  }
  PBWElement operator-(const PBWElement& o) const {
    PBWElement r = *this;
    for (const auto& [m, c] : o.terms) r.terms[m] -= c;
    r.prune();
    return r;
  }
  PBWElement operator*(const Rat& c) const {
    PBWElement r;
    if (c == 0) return r;
    for (const auto& [m, x] : terms) r.terms[m] = x * c;
    return r;
  }
  bool operator==(const PBWElement& o) const {
    return (*this - o).is_zero();
  }
};

inline PBWElement pbw_one() {
  PBWElement r;
  r.terms[{}] = 1;
  return r;
}

// Letter order for straightening: negative u-roots, then the Levi blocks
// (negative, Cartan, positive), then positive u-roots. The U(h) block sits
// in the middle so the direct-sum projection keeps exactly the middle-only
// monomials.
struct PBWContext {
  const LieAlgebra* L = nullptr;
  const ParabolicData* pd = nullptr;
  int trunc = 6;
  std::vector<int> rank_of;   // basis index -> position in the letter order
  std::vector<int> block_of;  // basis index -> block 0..4
};

inline PBWContext make_pbw_context(const LieAlgebra& L, const ParabolicData& pd,
                                   int trunc = 6) {
  PBWContext ctx;
  ctx.L = &L;
  ctx.pd = &pd;
  ctx.trunc = trunc;
  ctx.rank_of.assign(L.dim(), -1);
  ctx.block_of.assign(L.dim(), -1);
  int r = 0;
  auto put = [&](int letter, int block) {
    ctx.rank_of[letter] = r++;
    ctx.block_of[letter] = block;
  };
  for (const auto& g : pd.u_roots) put(L.root_index(-g), 0);
  for (const auto& g : pd.h_roots) put(L.root_index(-g), 1);
  for (int i = 0; i < L.rs->rank; ++i) put(L.cartan_index(i), 2);
  for (const auto& g : pd.h_roots) put(L.root_index(g), 3);
  for (const auto& g : pd.u_roots) put(L.root_index(g), 4);
  return ctx;
}

inline std::string letter_name(const LieAlgebra& L, int a) {
  if (a < L.rs->rank) return "h" + std::to_string(a + 1);
  return "x" + L.basis_weight(a).str();
}

inline std::string monomial_str(const LieAlgebra& L, const PBWMonomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < m.size(); ++k) {
    if (k) s += ".";
    s += letter_name(L, m[k]);
  }
  return s;
}

// Straighten a sum of words into PBW normal form by adjacent swaps with
// bracket insertion. Words growing past ctx.trunc raise an error instead of
// being dropped.
inline PBWElement pbw_normalize(const PBWContext& ctx,
                                std::map<PBWMonomial, Rat> work) {
  const LieAlgebra& L = *ctx.L;
  PBWElement out;
  while (!work.empty()) {
    auto it = work.begin();
    PBWMonomial w = it->first;
    Rat c = it->second;
    work.erase(it);
    if (c == 0) continue;
    if (int(w.size()) > ctx.trunc)
      throw std::runtime_error("pbw: filtration truncation degree exceeded");
    size_t bad = w.size();
    for (size_t k = 0; k + 1 < w.size(); ++k)
      if (ctx.rank_of[w[k]] > ctx.rank_of[w[k + 1]]) {
        bad = k;
        break;
      }
    if (bad == w.size()) {
      out.terms[w] += c;
      continue;
    }
    PBWMonomial sw = w;
    std::swap(sw[bad], sw[bad + 1]);
    work[sw] += c;
    for (const auto& [d, bc] : L.bracket[w[bad]][w[bad + 1]]) {
      PBWMonomial br;
      br.reserve(w.size() - 1);
      for (size_t k = 0; k < w.size(); ++k) {
        if (k == bad) br.push_back(d);
        if (k != bad && k != bad + 1) br.push_back(w[k]);
      }
      work[br] += c * bc;
    }
  }
  out.prune();
  return out;
}

inline PBWElement pbw_word(const PBWContext& ctx, const PBWMonomial& w,
                           const Rat& c = 1) {
  return pbw_normalize(ctx, {{w, c}});
}

inline PBWElement pbw_mul(const PBWContext& ctx, const PBWElement& a,
                          const PBWElement& b) {
  std::map<PBWMonomial, Rat> work;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      PBWMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      work[m] += ca * cb;
    }
  return pbw_normalize(ctx, work);
}

// (X_1...X_n) -> (-1)^n X_n...X_1, re-normalized.
inline PBWElement antipode(const PBWContext& ctx, const PBWElement& x) {
  std::map<PBWMonomial, Rat> work;
  for (const auto& [m, c] : x.terms) {
    PBWMonomial r(m.rbegin(), m.rend());
    work[r] += (m.size() % 2) ? -c : c;
  }
  return pbw_normalize(ctx, work);
}

// Quadratic Casimir from B-dual bases: sum over the Cartan block with the
// inverse form plus x_gamma x_{-gamma}/t_gamma over all roots.
inline PBWElement casimir(const PBWContext& ctx) {
  const LieAlgebra& L = *ctx.L;
  int r = L.rs->rank;
  Mat bh(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) bh.at(i, j) = L.bform.at(i, j);
  Mat bhi = bh.inverse();
  std::map<PBWMonomial, Rat> work;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (bhi.at(i, j) != 0) work[{i, j}] += bhi.at(i, j);
  for (int k = 0; k < L.npos; ++k) {
    Rat t = L.t_gamma(k);
    work[{L.pos_index(k), L.neg_index(k)}] += 1 / t;
    work[{L.neg_index(k), L.pos_index(k)}] += 1 / t;
  }
  return pbw_normalize(ctx, work);
}

// Matrix of a normalized element acting on a module, given the basis action
// matrices from module_action.
inline SpMat pbw_action(const std::vector<SpMat>& mats, const PBWElement& x,
                        int module_dim) {
  SpMat acc(module_dim, module_dim);
  for (const auto& [m, c] : x.terms) {
    SpMat prod = SpMat::identity(module_dim);
    for (int a : m) prod = prod * mats[a];
    acc = acc + prod * c;
  }
  acc.compress();
  return acc;
}

inline bool pbw_is_central(const PBWContext& ctx, const PBWElement& x,
                           const std::vector<int>& letters) {
  for (int a : letters) {
    PBWElement g = pbw_word(ctx, {a});
    if (!(pbw_mul(ctx, x, g) - pbw_mul(ctx, g, x)).is_zero()) return false;
  }
  return true;
}

inline std::vector<int> all_letters(const LieAlgebra& L) {
  std::vector<int> v(L.dim());
  for (int a = 0; a < L.dim(); ++a) v[a] = a;
  return v;
}

inline std::vector<int> h_letters(const PBWContext& ctx) {
  std::vector<int> v;
  for (int a = 0; a < ctx.L->dim(); ++a)
    if (ctx.block_of[a] >= 1 && ctx.block_of[a] <= 3) v.push_back(a);
  return v;
}

// Projection onto the U(h) summand of U(g) = U(h) + (u-bar U(g) + U(g) u):
// keep the monomials made of middle-block letters only.
inline PBWElement hc_project(const PBWContext& ctx, const PBWElement& z) {
  PBWElement r;
  for (const auto& [m, c] : z.terms) {
    bool mid = true;
    for (int a : m)
      if (ctx.block_of[a] < 1 || ctx.block_of[a] > 3) mid = false;
    if (mid) r.terms[m] = c;
  }
  return r;
}

// Scalar of a central element on a highest-weight vector, addressed by the
// shifted parameter: hc_scalar(z, mu + rho) is the scalar on weight mu. In
// normal form the u-block letters kill a highest vector and any monomial
// with a lowering letter moves off the highest weight, so only the pure
// Cartan monomials contribute. With levi = true, z is central for the Levi
// and the shift uses rho_h.
inline Rat hc_scalar(const PBWContext& ctx, const PBWElement& z,
                     const Weight& param, bool levi = false) {
  const RootSystem& rs = *ctx.L->rs;
  Weight mu = param - (levi ? ctx.pd->rho_h : rs.rho);
  Rat acc = 0;
  for (const auto& [m, c] : z.terms) {
    bool cartan = true;
    for (int a : m)
      if (ctx.block_of[a] != 2) cartan = false;
    if (!cartan) continue;
    Rat v = c;
    for (int a : m) v *= mu.coords[a];
    acc += v;
  }
  return acc;
}

// The rho(u)-shift bookkeeping: for every cohomology highest weight
// nu = w.lambda (w in the minimal-length coset set), the eigenvalue of p(z)
// at the h-parameter nu + rho_h equals the eigenvalue of z at lambda + rho,
// and nu + rho_h + rho_u lies in the full Weyl orbit of lambda + rho.
inline bool verify_hc_shift(const PBWContext& ctx, const PBWElement& z,
                            const Weight& lambda) {
  const RootSystem& rs = *ctx.L->rs;
  const ParabolicData& pd = *ctx.pd;
  PBWElement pz = hc_project(ctx, z);
  if (!pbw_is_central(ctx, pz, h_letters(ctx))) return false;
  Rat target = hc_scalar(ctx, z, lambda + rs.rho);
  for (const auto& w : w1_representatives(pd)) {
    Weight nu = rs.dot_action(w, lambda);
    if (hc_scalar(ctx, pz, nu + pd.rho_h, true) != target) return false;
    if (!rs.weyl_conjugate(nu + pd.rho_h + pd.rho_u, lambda + rs.rho))
      return false;
  }
  return true;
}

}  // namespace liecoh
