#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecoh/matrix.hpp"
#include "liecoh/rootsystem.hpp"

namespace liecoh {

using CharacterPolynomial = std::map<Weight, long>;

// Finite-dimensional module over g (or over a Levi subalgebra h) given by a
// weight basis and exact sparse matrices for the simple Chevalley
// generators. acting_simples lists the simple indices whose E/F matrices are
// meaningful; the full Cartan always acts.
struct WeightedModule {
  const RootSystem* rs = nullptr;
  std::vector<int> acting_simples;
  std::vector<Weight> basis_weights;
  std::vector<SpMat> E, F, H;  // indexed by simple root; inactive ones zero
  Weight highest_weight;       // meaningful for irreps
  bool zero_flag = false;      // zero module returned where a component vanished

  int dim() const { return int(basis_weights.size()); }

  CharacterPolynomial character() const {
    CharacterPolynomial c;
    for (const auto& w : basis_weights) c[w]++;
    return c;
  }

  // Exact generator identities: [H_i,E_j] = <a_j, a_i-check> E_j,
  // [E_i, F_j] = delta_ij H_i, and H-eigenvalues match basis_weights.
  void verify() const {
    const auto& C = rs->cartan;
    for (int ii : acting_simples)
      for (int jj : acting_simples) {
        if (!(SpMat::commutator(H[ii], E[jj]) - E[jj] * Rat(C[jj][ii]))
                 .is_zero())
          throw std::runtime_error("module: [H,E] identity fails");
        if (!(SpMat::commutator(H[ii], F[jj]) + F[jj] * Rat(C[jj][ii]))
                 .is_zero())
          throw std::runtime_error("module: [H,F] identity fails");
        SpMat ef = SpMat::commutator(E[ii], F[jj]);
        if (ii == jj) ef = ef - H[ii];
        if (!ef.is_zero())
          throw std::runtime_error("module: [E,F] identity fails");
      }
    for (int i = 0; i < rs->rank; ++i)
      for (int b = 0; b < dim(); ++b) {
        Rat expect = basis_weights[b].coords[i];
        for (const auto& [c, v] : H[i].row(b))
          if (v != (c == b ? expect : Rat(0)))
            throw std::runtime_error("module: H eigenvalue mismatch");
      }
  }
};

inline Rat weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  Rat num = 1, den = 1;
  for (const auto& a : rs.positive_roots) {
    num *= rs.form(lambda + rs.rho, a);
    den *= rs.form(rs.rho, a);
  }
  return num / den;
}

// Independent multiplicity oracle: Freudenthal recursion on dominant
// weights, extended by Weyl invariance.
inline std::map<Weight, long> freudenthal_multiplicities(const RootSystem& rs,
                                                         const Weight& lambda) {
  if (!lambda.is_dominant() || !lambda.is_integral())
    throw std::invalid_argument("freudenthal: non-dominant weight");
  auto below = [&](const Weight& mu) {  // lambda - mu in the positive cone
    auto n = rs.simple_root_coords(lambda - mu);
    for (const auto& x : n)
      if (x < 0 || x.get_den() != 1) return false;
    return true;
  };
  // collect dominant weights below lambda, BFS through the root lattice
  std::set<Weight> seen{lambda};
  std::vector<Weight> todo{lambda}, dominant;
  while (!todo.empty()) {
    Weight cur = todo.back();
    todo.pop_back();
    for (int i = 0; i < rs.rank; ++i) {
      Weight nx = cur - rs.simple_roots[i];
      if (!below(nx)) continue;
      if (rs.form(nx + rs.rho, nx + rs.rho) >
          rs.form(lambda + rs.rho, lambda + rs.rho))
        continue;
      if (seen.insert(nx).second) todo.push_back(nx);
    }
  }
  for (const auto& w : seen)
    if (w.is_dominant()) dominant.push_back(w);
  std::sort(dominant.begin(), dominant.end(),
            [&](const Weight& a, const Weight& b) {
              return rs.height(lambda - a) < rs.height(lambda - b);
            });
  std::map<Weight, long> mult;  // keyed by dominant representative
  Rat l2 = rs.form(lambda + rs.rho, lambda + rs.rho);
  for (const auto& mu : dominant) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rat acc = 0;
    for (const auto& a : rs.positive_roots) {
      for (int k = 1;; ++k) {
        Weight m = mu + a * Rat(k);
        if (!below(m)) break;
        auto it = mult.find(rs.dominant_representative(m));
        long mm = (it == mult.end()) ? 0 : it->second;
        if (mm) acc += Rat(mm) * rs.form(m, a);
      }
    }
    Rat den = l2 - rs.form(mu + rs.rho, mu + rs.rho);
    Rat m = 2 * acc / den;
    if (m.get_den() != 1) throw std::runtime_error("freudenthal: non-integer");
    long val = long(m.get_num().get_si());
    if (val) mult[mu] = val;
  }
  return mult;
}

inline CharacterPolynomial irreducible_character(const RootSystem& rs,
                                                 const Weight& lambda) {
  CharacterPolynomial c;
  for (const auto& [dom, m] : freudenthal_multiplicities(rs, lambda))
    for (const auto& w : rs.weyl_orbit(dom)) c[w] = m;
  return c;
}

inline CharacterPolynomial character_multiply(const CharacterPolynomial& a,
                                              const CharacterPolynomial& b) {
  CharacterPolynomial r;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) r[wa + wb] += ma * mb;
  return r;
}

// Peel a character into irreducible highest weights (with multiplicity).
inline std::map<Weight, long> character_decompose(const RootSystem& rs,
                                                  CharacterPolynomial c) {
  std::map<Weight, long> out;
  auto height_key = [&](const Weight& w) { return rs.form(w, rs.rho); };
  while (true) {
    // erase zeros, find the maximal remaining term
    for (auto it = c.begin(); it != c.end();)
      it = (it->second == 0) ? c.erase(it) : std::next(it);
    if (c.empty()) break;
    auto best = c.begin();
    for (auto it = c.begin(); it != c.end(); ++it) {
      if (height_key(it->first) > height_key(best->first) ||
          (height_key(it->first) == height_key(best->first) &&
           best->first < it->first))
        best = it;
    }
    Weight hw = best->first;
    long m = best->second;
    if (!hw.is_dominant() || m < 0)
      throw std::runtime_error("character_decompose: not a genuine character");
    out[hw] += m;
    for (const auto& [w, mm] : irreducible_character(rs, hw)) c[w] -= m * mm;
  }
  return out;
}

namespace detail {

// Per-weight-space construction state for the irrep builder.
struct IrrepWS {
  int level = 0;
  int dim = 0;
  Mat gram;                 // contravariant form on the chosen basis
  std::map<int, Mat> Fmat;  // F[i]: basis(here + alpha_i) -> basis(here)
  std::map<int, Mat> Emat;  // E[i]: basis(here) -> basis(here + alpha_i)
};

}  // namespace detail

// Irreducible highest-weight module: the Verma module spanned by lowering
// words, computed level by level and cut to the radical-free quotient using
// exact contravariant-form Gram ranks.
inline WeightedModule build_irrep(const RootSystem& rs, const Weight& lambda,
                                  int dim_cap = 400) {
  if (!lambda.is_dominant() || !lambda.is_integral())
    throw std::invalid_argument("build_irrep: weight must be dominant integral");
  Rat wd = weyl_dimension(rs, lambda);
  if (wd.get_den() != 1) throw std::runtime_error("weyl dimension not integral");
  if (wd > dim_cap)
    throw std::invalid_argument("build_irrep: dimension cap exceeded (" +
                                rat_str(wd) + " > " + std::to_string(dim_cap) +
                                ")");
  int r = rs.rank;
  std::map<Weight, detail::IrrepWS> ws;
  ws[lambda] = {0, 1, Mat::identity(1), {}, {}};
  for (int i = 0; i < r; ++i) ws[lambda].Emat[i] = Mat(0, 1);

  std::vector<Weight> frontier{lambda};
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    std::set<Weight> cands;
    for (const auto& mu : frontier)
      for (int i = 0; i < r; ++i) cands.insert(mu - rs.simple_roots[i]);
    std::vector<Weight> next;
    for (const auto& nu : cands) {
      // spanning vectors (i, b): F_i applied to basis vector b of nu+alpha_i
      std::vector<std::pair<int, int>> span;
      for (int i = 0; i < r; ++i) {
        auto it = ws.find(nu + rs.simple_roots[i]);
        if (it == ws.end()) continue;
        for (int b = 0; b < it->second.dim; ++b) span.emplace_back(i, b);
      }
      if (span.empty()) continue;
      int ns = int(span.size());
      // <F_i b, F_j b'> = <b, F_j (E_i b')> + delta_ij (nu+alpha_i)_i <b,b'>
      Mat P(ns, ns);
      for (int s = 0; s < ns; ++s)
        for (int t = 0; t < ns; ++t) {
          auto [i, b] = span[s];
          auto [j, bp] = span[t];
          Weight wi = nu + rs.simple_roots[i];
          Weight wj = nu + rs.simple_roots[j];
          const auto& WSi = ws.at(wi);
          const auto& WSj = ws.at(wj);
          Rat val = 0;
          // F_j(E_i b') lives in V(wi); need E_i at wj then F_j into wi
          auto eit = WSj.Emat.find(i);
          if (eit != WSj.Emat.end() && eit->second.rows() > 0) {
            const Mat& Ei = eit->second;  // V(wj) -> V(wj+alpha_i)
            auto fit = WSi.Fmat.find(j);  // V(wi+alpha_j)=V(wj+alpha_i)->V(wi)
            if (fit != WSi.Fmat.end()) {
              const Mat& Fj = fit->second;
              for (int x = 0; x < Fj.rows(); ++x)
                for (int y = 0; y < Fj.cols(); ++y)
                  if (Fj.at(x, y) != 0 && Ei.at(y, bp) != 0)
                    val += WSi.gram.at(b, x) * Fj.at(x, y) * Ei.at(y, bp);
            }
          }
          if (i == j) val += wi.coords[i] * WSi.gram.at(b, bp);
          P.at(s, t) = val;
        }
      // choose a deterministic basis: greedy principal minors of P
      std::vector<int> sel;
      for (int s = 0; s < ns; ++s) {
        std::vector<int> trial = sel;
        trial.push_back(s);
        Mat sub(int(trial.size()), int(trial.size()));
        for (size_t x = 0; x < trial.size(); ++x)
          for (size_t y = 0; y < trial.size(); ++y)
            sub.at(int(x), int(y)) = P.at(trial[x], trial[y]);
        if (sub.rank() == int(trial.size())) sel = trial;
      }
      if (sel.empty()) continue;
      detail::IrrepWS cur;
      cur.level = level;
      cur.dim = int(sel.size());
      cur.gram = Mat(cur.dim, cur.dim);
      for (int x = 0; x < cur.dim; ++x)
        for (int y = 0; y < cur.dim; ++y)
          cur.gram.at(x, y) = P.at(sel[x], sel[y]);
      // F[i] matrices into nu: columns are coordinates of F_i b'
      for (int i = 0; i < r; ++i) {
        auto it = ws.find(nu + rs.simple_roots[i]);
        if (it == ws.end()) continue;
        Mat rhs(cur.dim, it->second.dim);
        for (int x = 0; x < cur.dim; ++x)
          for (int bp = 0; bp < it->second.dim; ++bp) {
            // pairing of sel[x] with spanning vector (i, bp)
            int t = -1, idx = 0;
            for (const auto& [jj, bb] : span) {
              if (jj == i && bb == bp) t = idx;
              ++idx;
            }
            rhs.at(x, bp) = P.at(sel[x], t);
          }
        auto sol = cur.gram.solve(rhs);
        if (!sol) throw std::runtime_error("build_irrep: gram solve failed");
        cur.Fmat[i] = *sol;
      }
      // E[j] on the new basis: E_j(F_i b) = F_i(E_j b) + d_ij wt(b)_j b
      for (int j = 0; j < r; ++j) {
        auto target = ws.find(nu + rs.simple_roots[j]);
        int tdim = (target == ws.end()) ? 0 : target->second.dim;
        Mat Ej(tdim, cur.dim);
        if (tdim > 0) {
          for (int x = 0; x < cur.dim; ++x) {
            auto [i, b] = span[sel[x]];
            Weight wi = nu + rs.simple_roots[i];  // wt(b)
            const auto& WSi = ws.at(wi);
            // F_i(E_j b): E_j at wi -> V(wi+alpha_j); F_i there -> V(nu+alpha_j)
            auto eit = WSi.Emat.find(j);
            if (eit != WSi.Emat.end() && eit->second.rows() > 0) {
              const Mat& Ejb = eit->second;
              const auto& WSt = target->second;
              auto fit = WSt.Fmat.find(i);
              if (fit != WSt.Fmat.end()) {
                const Mat& Fi = fit->second;
                for (int xx = 0; xx < tdim; ++xx) {
                  Rat v = 0;
                  for (int y = 0; y < Fi.cols(); ++y)
                    v += Fi.at(xx, y) * Ejb.at(y, b);
                  Ej.at(xx, x) += v;
                }
              }
            }
          }
          // delta term: i == j contributes wt(b)_j * b (b is a basis vector
          // of V(nu+alpha_j) itself)
          for (int x = 0; x < cur.dim; ++x) {
            auto [i, b] = span[sel[x]];
            if (i == j) {
              Weight wi = nu + rs.simple_roots[i];
              Ej.at(b, x) += wi.coords[j];
            }
          }
        }
        cur.Emat[j] = Ej;
      }
      ws[nu] = std::move(cur);
      next.push_back(nu);
      long total = 0;
      for (const auto& [w, s] : ws) total += s.dim;
      if (total > dim_cap)
        throw std::invalid_argument("build_irrep: dimension cap exceeded");
    }
    frontier = next;
  }

  // assemble the global module with a deterministic basis order
  std::vector<Weight> order;
  for (const auto& [w, s] : ws) order.push_back(w);
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    if (ws.at(a).level != ws.at(b).level) return ws.at(a).level < ws.at(b).level;
    return a < b;
  });
  std::map<Weight, int> offset;
  int total = 0;
  for (const auto& w : order) {
    offset[w] = total;
    total += ws.at(w).dim;
  }
  if (Rat(total) != wd)
    throw std::runtime_error("build_irrep: dimension mismatch with Weyl formula");

  WeightedModule M;
  M.rs = &rs;
  for (int i = 0; i < r; ++i) M.acting_simples.push_back(i);
  M.highest_weight = lambda;
  for (const auto& w : order)
    for (int k = 0; k < ws.at(w).dim; ++k) M.basis_weights.push_back(w);
  for (int i = 0; i < r; ++i) {
    SpMat E(total, total), F(total, total), H(total, total);
    for (const auto& w : order) {
      const auto& s = ws.at(w);
      for (int k = 0; k < s.dim; ++k)
        H.add(offset[w] + k, offset[w] + k, w.coords[i]);
      // F[i]: from V(w+alpha_i) into V(w)
      auto fit = s.Fmat.find(i);
      if (fit != s.Fmat.end()) {
        Weight src = w + rs.simple_roots[i];
        for (int x = 0; x < fit->second.rows(); ++x)
          for (int y = 0; y < fit->second.cols(); ++y)
            F.add(offset[w] + x, offset.at(src) + y, fit->second.at(x, y));
      }
      // E[i]: from V(w) into V(w+alpha_i)
      auto eit = s.Emat.find(i);
      if (eit != s.Emat.end() && eit->second.rows() > 0) {
        Weight dst = w + rs.simple_roots[i];
        for (int x = 0; x < eit->second.rows(); ++x)
          for (int y = 0; y < eit->second.cols(); ++y)
            E.add(offset.at(dst) + x, offset[w] + y, eit->second.at(x, y));
      }
    }
    E.compress();
    F.compress();
    H.compress();
    M.E.push_back(E);
    M.F.push_back(F);
    M.H.push_back(H);
  }
  M.verify();
  return M;
}

inline WeightedModule trivial_module(const RootSystem& rs) {
  return build_irrep(rs, Weight(rs.rank));
}

inline WeightedModule tensor_module(const WeightedModule& a,
                                    const WeightedModule& b) {
  if (a.rs != b.rs)
    throw std::invalid_argument("tensor_module: mismatched algebras");
  WeightedModule M;
  M.rs = a.rs;
  M.acting_simples = a.acting_simples;
  for (const auto& wa : a.basis_weights)
    for (const auto& wb : b.basis_weights) M.basis_weights.push_back(wa + wb);
  SpMat Ia = SpMat::identity(a.dim()), Ib = SpMat::identity(b.dim());
  for (int i = 0; i < a.rs->rank; ++i) {
    M.E.push_back(SpMat::kron(a.E[i], Ib) + SpMat::kron(Ia, b.E[i]));
    M.F.push_back(SpMat::kron(a.F[i], Ib) + SpMat::kron(Ia, b.F[i]));
    M.H.push_back(SpMat::kron(a.H[i], Ib) + SpMat::kron(Ia, b.H[i]));
  }
  return M;
}

inline WeightedModule direct_sum_module(const WeightedModule& a,
                                        const WeightedModule& b) {
  if (a.rs != b.rs)
    throw std::invalid_argument("direct_sum_module: mismatched algebras");
  WeightedModule M;
  M.rs = a.rs;
  M.acting_simples = a.acting_simples;
  M.basis_weights = a.basis_weights;
  for (const auto& w : b.basis_weights) M.basis_weights.push_back(w);
  int n = M.dim();
  for (int i = 0; i < a.rs->rank; ++i) {
    SpMat E(n, n), F(n, n), H(n, n);
    auto put = [&](SpMat& dst, const SpMat& src, int off) {
      for (int r = 0; r < src.rows(); ++r)
        for (const auto& [c, v] : src.row(r)) dst.add(off + r, off + c, v);
    };
    put(E, a.E[i], 0);
    put(E, b.E[i], a.dim());
    put(F, a.F[i], 0);
    put(F, b.F[i], a.dim());
    put(H, a.H[i], 0);
    put(H, b.H[i], a.dim());
    M.E.push_back(E);
    M.F.push_back(F);
    M.H.push_back(H);
  }
  return M;
}

// Restrict an action matrix to an invariant column span: solve B X = G B.
inline Mat restrict_action(const SpMat& g, const Mat& basis) {
  Mat gb = g.dense() * basis;
  auto x = basis.solve(gb);
  if (!x) throw std::runtime_error("restrict_action: span not invariant");
  return *x;
}

// One h-isotypic constituent of a module restricted to the Levi of pd.
struct LeviConstituent {
  Weight highest_weight;  // h-highest weight (full torus weight)
  int multiplicity = 0;
  Mat highest_vectors;    // dim(M) x multiplicity
  Mat embedding;          // dim(M) x (constituent dimension)
};

// h-isotypic decomposition by intersecting kernels of the Levi raising
// operators; deterministic order (by weight).
inline std::vector<LeviConstituent> restrict_levi(const WeightedModule& M,
                                                  const ParabolicData& pd) {
  const RootSystem& rs = *M.rs;
  // group basis indices by weight
  std::map<Weight, std::vector<int>> spaces;
  for (int b = 0; b < M.dim(); ++b) spaces[M.basis_weights[b]].push_back(b);
  std::vector<LeviConstituent> out;
  std::vector<SpMat> raise;
  for (int i : pd.levi_subset) raise.push_back(M.E[i]);
  for (const auto& [w, idx] : spaces) {
    // highest vectors of weight w: kernel of all Levi E_i restricted there
    int k = int(idx.size());
    Mat stacked(int(raise.size()) * M.dim(), k);
    for (size_t rI = 0; rI < raise.size(); ++rI) {
      Mat d = raise[rI].dense();
      for (int row = 0; row < M.dim(); ++row)
        for (int c = 0; c < k; ++c)
          stacked.at(int(rI) * M.dim() + row, c) = d.at(row, idx[c]);
    }
    Mat ker = raise.empty() ? Mat::identity(k) : stacked.nullspace();
    if (ker.cols() == 0) continue;
    LeviConstituent lc;
    lc.highest_weight = w;
    lc.multiplicity = ker.cols();
    lc.highest_vectors = Mat(M.dim(), ker.cols());
    for (int c = 0; c < ker.cols(); ++c)
      for (int x = 0; x < k; ++x)
        lc.highest_vectors.at(idx[x], c) = ker.at(x, c);
    // close under Levi lowering operators to span the isotypic component
    Mat span = lc.highest_vectors;
    std::vector<int> frontier_cols;
    for (int c = 0; c < span.cols(); ++c) frontier_cols.push_back(c);
    while (!frontier_cols.empty()) {
      std::vector<int> next;
      for (int i : pd.levi_subset) {
        Mat d = M.F[i].dense();
        for (int c : frontier_cols) {
          Mat v = d * span.col(c);
          if (v.is_zero()) continue;
          Mat trial = Mat::hcat(span, v);
          if (trial.rank() > span.cols()) {
            span = trial;
            next.push_back(span.cols() - 1);
          }
        }
      }
      frontier_cols = next;
    }
    lc.embedding = span;
    out.push_back(std::move(lc));
  }
  // sanity: dimensions add up
  int total = 0;
  for (const auto& lc : out) total += lc.embedding.cols();
  if (total != M.dim())
    throw std::runtime_error("restrict_levi: dimension sum mismatch");
  return out;
}

// View an isotypic constituent as an h-module in its own right.
inline WeightedModule constituent_module(const WeightedModule& M,
                                         const ParabolicData& pd,
                                         const LeviConstituent& lc) {
  WeightedModule R;
  R.rs = M.rs;
  for (int i : pd.levi_subset) R.acting_simples.push_back(i);
  R.highest_weight = lc.highest_weight;
  int n = lc.embedding.cols();
  for (int c = 0; c < n; ++c) {
    // read the weight of each embedded basis vector off its support
    Weight w;
    for (int row = 0; row < M.dim(); ++row)
      if (lc.embedding.at(row, c) != 0) {
        w = M.basis_weights[row];
        break;
      }
    R.basis_weights.push_back(w);
  }
  for (int i = 0; i < M.rs->rank; ++i) {
    bool active = std::count(R.acting_simples.begin(), R.acting_simples.end(), i);
    SpMat z(n, n);
    R.E.push_back(active ? SpMat::from_dense(restrict_action(M.E[i], lc.embedding)) : z);
    R.F.push_back(active ? SpMat::from_dense(restrict_action(M.F[i], lc.embedding)) : z);
    R.H.push_back(SpMat::from_dense(restrict_action(M.H[i], lc.embedding)));
  }
  return R;
}

// Dominant representative for the Levi Weyl group W_H.
inline Weight levi_dominant_representative(const ParabolicData& pd,
                                           const Weight& w) {
  Weight cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : pd.levi_subset)
      if (cur.coords[i] < 0) {
        cur = pd.rs->simple_reflect(i, cur);
        changed = true;
      }
  }
  return cur;
}

// Z(h)-primary component of an h-module: constituents grouped by the
// W_H-orbit of (h-highest weight + rho_h).
struct PrimaryComponent {
  Weight parameter;  // W_H-dominant representative of hw + rho_h
  std::vector<std::pair<Weight, int>> constituents;  // (hw, multiplicity)
  Mat embedding;   // columns span the component inside the ambient module
  Mat projection;  // exact idempotent onto the component
};

inline std::vector<PrimaryComponent> primary_decompose(
    const WeightedModule& M, const ParabolicData& pd) {
  auto cons = restrict_levi(M, pd);
  std::map<Weight, std::vector<const LeviConstituent*>> groups;
  for (const auto& lc : cons)
    groups[levi_dominant_representative(pd, lc.highest_weight + pd.rho_h)]
        .push_back(&lc);
  // assemble the full change of basis once
  Mat all(M.dim(), 0);
  std::vector<std::pair<Weight, std::pair<int, int>>> ranges;  // param -> cols
  for (const auto& [param, lcs] : groups) {
    int start = all.cols();
    for (const auto* lc : lcs) all = Mat::hcat(all, lc->embedding);
    ranges.emplace_back(param, std::make_pair(start, all.cols()));
  }
  Mat inv = all.inverse();
  std::vector<PrimaryComponent> out;
  for (const auto& [param, range] : ranges) {
    PrimaryComponent pc;
    pc.parameter = param;
    for (const auto* lc : groups.at(param))
      pc.constituents.emplace_back(lc->highest_weight, lc->multiplicity);
    auto [s, e] = range;
    pc.embedding = Mat(M.dim(), e - s);
    Mat rows(e - s, M.dim());
    for (int c = s; c < e; ++c)
      for (int rI = 0; rI < M.dim(); ++rI) {
        pc.embedding.at(rI, c - s) = all.at(rI, c);
        rows.at(c - s, rI) = inv.at(c, rI);
      }
    pc.projection = pc.embedding * rows;
    out.push_back(std::move(pc));
  }
  return out;
}

// Zuckerman translation on the Levi side: the chi_{mu+nu}-primary component
// of E(mu) tensor F^nu restricted to H. mu and the result parameter are
// Harish-Chandra parameters for Z(h) (i.e. hw + rho_h up to W_H).
inline WeightedModule zuckerman_translate_h(const WeightedModule& Emu,
                                            const Weight& mu, const Weight& nu,
                                            const ParabolicData& pd,
                                            int dim_cap = 400) {
  const RootSystem& rs = *pd.rs;
  if (!nu.is_dominant() || !nu.is_integral())
    throw std::invalid_argument("zuckerman_translate_h: nu must be dominant");
  WeightedModule F = build_irrep(rs, nu, dim_cap);
  WeightedModule T = tensor_module(Emu, F);
  T.acting_simples.clear();
  for (int i : pd.levi_subset) T.acting_simples.push_back(i);
  Weight target = levi_dominant_representative(pd, mu + nu);
  for (const auto& pc : primary_decompose(T, pd)) {
    if (pc.parameter == target) {
      LeviConstituent lc;
      lc.embedding = pc.embedding;
      lc.highest_weight = pc.constituents.front().first;
      WeightedModule R = constituent_module(T, pd, lc);
      R.highest_weight = lc.highest_weight;
      return R;
    }
  }
  WeightedModule zero;
  zero.rs = &rs;
  for (int i : pd.levi_subset) zero.acting_simples.push_back(i);
  for (int i = 0; i < rs.rank; ++i) {
    zero.E.emplace_back(0, 0);
    zero.F.emplace_back(0, 0);
    zero.H.emplace_back(0, 0);
  }
  zero.zero_flag = true;
  return zero;
}

}  // namespace liecoh
