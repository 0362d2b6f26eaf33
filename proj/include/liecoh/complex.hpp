#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecoh/module.hpp"
#include "liecoh/operator.hpp"

namespace liecoh {

// Everything needed to realize the abstract operators on concrete modules
// for one (root system, parabolic) pair. Members reference each other, so a
// context is pinned in place once built.
struct ModelContext {
  const RootSystem* rs;
  const ParabolicData* pd;
  LieAlgebra L;
  PBWContext ctx;
  OperatorContext o;
  DolbeaultTriple dol;

  ModelContext(const RootSystem& r, const ParabolicData& p, int trunc = 6)
      : rs(&r),
        pd(&p),
        L(build_lie_algebra(r)),
        ctx(make_pbw_context(L, p, trunc)),
        o(make_operator_context(ctx)),
        dol(dolbeault_abstract(o)) {}
  ModelContext(const ModelContext&) = delete;
  ModelContext& operator=(const ModelContext&) = delete;

  int n() const { return o.n; }
};

// Matrix of an operator on the ambient space X ox ^ u-bar ox E ox F with the
// fixed index layout ((i_X * 2^n + mask) * dimE + i_E) * dimF + i_F. The
// enveloping letters act on the X slot and, when F is active, also on the F
// slot (coproduct); End letters act on the wedge slot; E is always inert.
inline SpMat model_matrix(const OperatorContext& o, const OperatorElement& a,
                          const std::vector<SpMat>& mats_X, int dimX, int dimE,
                          const std::vector<SpMat>* mats_F, int dimF) {
  int nw = 1 << o.n;
  int N = dimX * nw * dimE * dimF;
  SpMat iX = SpMat::identity(dimX), iW = SpMat::identity(nw),
        iE = SpMat::identity(dimE), iF = SpMat::identity(dimF);
  auto lift = [&](const SpMat& x, const SpMat& w, const SpMat& f) {
    return SpMat::kron(SpMat::kron(SpMat::kron(x, w), iE), f);
  };
  SpMat out(N, N);
  for (const auto& [k, c] : a.terms) {
    SpMat prod = SpMat::identity(N);
    for (int x : k.first) {
      SpMat d = lift(mats_X[x], iW, iF);
      if (mats_F) d = d + lift(iX, iW, (*mats_F)[x]);
      prod = prod * d;
    }
    EndElement w;
    w.n = o.n;
    w.terms[k.second] = 1;
    prod = prod * lift(iX, SpMat::from_dense(end_to_matrix(w)), iF);
    out = out + prod * c;
  }
  out.compress();
  return out;
}

// dense block of a sparse matrix at the given row/column index lists
inline Mat sp_slice(const SpMat& A, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  std::map<int, int> cix;
  for (size_t j = 0; j < cols.size(); ++j) cix.emplace(cols[j], int(j));
  Mat out(int(rows.size()), int(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : A.row(rows[i])) {
      auto it = cix.find(c);
      if (it != cix.end()) out.at(int(i), it->second) = v;
    }
  return out;
}

// the nu(Y) wedge action as a sparse matrix on ^ u-bar
inline SpMat wedge_action(const OperatorContext& o, int letter) {
  return SpMat::from_dense(end_to_matrix(nu_end(o, letter)));
}

// One-dimensional h-module on a single torus weight (Levi acts trivially).
inline WeightedModule weight_line_module(const RootSystem& rs,
                                         const Weight& w) {
  WeightedModule M;
  M.rs = &rs;
  M.basis_weights = {w};
  M.highest_weight = w;
  for (int i = 0; i < rs.rank; ++i) {
    SpMat z(1, 1), h(1, 1);
    h.add(0, 0, w.coords[i]);
    M.E.push_back(z);
    M.F.push_back(z);
    M.H.push_back(h);
  }
  return M;
}

// Graded chain complex with exact differentials and registered commuting
// actions. d[k] maps degree k to degree k+1 and has size n (the top degree
// has no outgoing differential).
struct ChainComplex {
  const RootSystem* rs = nullptr;
  const ParabolicData* pd = nullptr;
  int n = 0;
  std::vector<int> dims;
  std::vector<std::vector<Weight>> weights;  // basis labels per degree
  std::vector<Mat> d;

  // registered h-action: Cartan for every simple index, raising/lowering
  // for the Levi simples; all commute with d
  bool has_h_action = false;
  std::vector<std::vector<Mat>> H;         // H[i][k], all simple indices
  std::map<int, std::vector<Mat>> LE, LF;  // Levi simple -> per degree

  // registered commuting center probes and their candidate eigenvalues
  std::map<std::string, std::vector<Mat>> central;
  std::map<std::string, std::vector<Rat>> central_candidates;

  long euler() const {
    long e = 0;
    for (int k = 0; k <= n; ++k) e += (k % 2 ? -1 : 1) * dims[k];
    return e;
  }

  void verify() const {
    for (int k = 0; k + 1 < n; ++k)
      if (!(d[k + 1] * d[k]).is_zero())
        throw std::runtime_error("chain complex: d^2 != 0");
    auto check = [&](const std::vector<Mat>& act, const std::string& what) {
      for (int k = 0; k < n; ++k)
        if (!(act[k + 1] * d[k] - d[k] * act[k]).is_zero())
          throw std::runtime_error("chain complex: " + what +
                                   " does not commute with d");
    };
    if (has_h_action) {
      for (const auto& hk : H) check(hk, "Cartan action");
      for (const auto& [i, act] : LE) check(act, "Levi raising");
      for (const auto& [i, act] : LF) check(act, "Levi lowering");
    }
    for (const auto& [name, act] : central) check(act, name);
  }
};

namespace detail {

inline std::vector<std::vector<int>> degree_index_lists(int dimX, int nw,
                                                        int dimE, int dimF,
                                                        int n) {
  std::vector<std::vector<int>> by_degree(n + 1);
  for (int ix = 0; ix < dimX; ++ix)
    for (int m = 0; m < nw; ++m)
      for (int ie = 0; ie < dimE; ++ie)
        for (int jf = 0; jf < dimF; ++jf)
          by_degree[mask_degree(unsigned(m))].push_back(
              ((ix * nw + m) * dimE + ie) * dimF + jf);
  return by_degree;
}

}  // namespace detail

// Full coefficient complex on X ox ^ u-bar (ox E): the concrete realization
// of the abstract odd operator with E inert. Registers the h-action and the
// two center probes (the Casimir through X, and the direct-sum projection
// of the Casimir through the diagonal h-embedding).
inline ChainComplex build_full_complex(const ModelContext& mc,
                                       const WeightedModule& X,
                                       const WeightedModule* E = nullptr) {
  const OperatorContext& o = mc.o;
  int n = o.n, nw = 1 << n;
  int dimX = X.dim(), dimE = E ? E->dim() : 1;
  std::vector<SpMat> mats = module_action(mc.L, X);
  std::vector<SpMat> mats_E;
  if (E) mats_E = module_action(mc.L, *E);

  SpMat D = model_matrix(o, mc.dol.dbar, mats, dimX, dimE, nullptr, 1);
  auto idx = detail::degree_index_lists(dimX, nw, dimE, 1, n);

  ChainComplex c;
  c.rs = mc.rs;
  c.pd = mc.pd;
  c.n = n;
  for (int k = 0; k <= n; ++k) {
    c.dims.push_back(int(idx[k].size()));
    std::vector<Weight> ws;
    for (int a : idx[k]) {
      int ie = a % dimE;
      int m = (a / dimE) % nw;
      int ix = a / (dimE * nw);
      Weight w = X.basis_weights[ix];
      for (int i = 0; i < n; ++i)
        if (m & (1 << i)) w = w - mc.pd->u_roots[i];
      if (E) w = w + E->basis_weights[ie];
      ws.push_back(w);
    }
    c.weights.push_back(std::move(ws));
  }
  for (int k = 0; k < n; ++k) c.d.push_back(sp_slice(D, idx[k + 1], idx[k]));
  for (int k = 0; k + 1 < n; ++k)
    if (!(c.d[k + 1] * c.d[k]).is_zero())
      throw std::runtime_error("build_full_complex: d^2 != 0");

  SpMat iX = SpMat::identity(dimX), iW = SpMat::identity(nw),
        iE = SpMat::identity(dimE);
  auto total = [&](int a) {
    SpMat T = SpMat::kron(SpMat::kron(mats[a], iW), iE) +
              SpMat::kron(SpMat::kron(iX, wedge_action(o, a)), iE);
    if (E) T = T + SpMat::kron(SpMat::kron(iX, iW), mats_E[a]);
    return T;
  };
  auto per_degree = [&](const SpMat& T) {
    std::vector<Mat> per;
    for (int k = 0; k <= n; ++k) per.push_back(sp_slice(T, idx[k], idx[k]));
    return per;
  };
  c.has_h_action = true;
  for (int i = 0; i < mc.rs->rank; ++i)
    c.H.push_back(per_degree(total(mc.L.cartan_index(i))));
  for (int i : mc.pd->levi_subset) {
    c.LE.emplace(i, per_degree(total(mc.L.root_index(mc.rs->simple_roots[i]))));
    c.LF.emplace(i,
                 per_degree(total(mc.L.root_index(-mc.rs->simple_roots[i]))));
  }

  PBWElement omega = casimir(mc.ctx);
  PBWElement pom = hc_project(mc.ctx, omega);
  SpMat Om = SpMat::kron(SpMat::kron(pbw_action(mats, omega, dimX), iW), iE);
  SpMat Hm = model_matrix(o, delta_h(o, pom), mats, dimX, dimE, nullptr, 1);
  c.central.emplace("casimir", per_degree(Om));
  c.central.emplace("hc_casimir", per_degree(Hm));
  // candidate eigenvalues: the Casimir scalars of the constituents of X,
  // and the projected-Casimir values at the h-parameters of the chain
  // weights of X ox ^ u-bar (the probes ignore the E slot)
  std::set<Rat> cand_om, cand_hc;
  for (const auto& [hw, m] : character_decompose(*mc.rs, X.character()))
    cand_om.insert(hc_scalar(mc.ctx, omega, hw + mc.rs->rho));
  for (const auto& wx : X.basis_weights)
    for (int m = 0; m < nw; ++m) {
      Weight w = wx;
      for (int i = 0; i < n; ++i)
        if (m & (1 << i)) w = w - mc.pd->u_roots[i];
      cand_hc.insert(hc_scalar(mc.ctx, pom, w + mc.pd->rho_h, true));
    }
  c.central_candidates["casimir"] = {cand_om.begin(), cand_om.end()};
  c.central_candidates["hc_casimir"] = {cand_hc.begin(), cand_hc.end()};
  return c;
}

// ambient bookkeeping of an invariant model complex, for callers that need
// to map chain coordinates back to the ambient tensor space
struct InvariantModelData {
  int dimX = 0, dimE = 0, dimF = 0;
  std::vector<std::vector<int>> idx;  // ambient indices per degree
  std::vector<Mat> B;                 // invariant embeddings per degree
};

// H-invariant model complex (X ox ^ u-bar ox E (ox F))^H. With F present
// the differential is the coproduct-extended operator (F active). The
// center probe is the antipode of the Casimir acting through the X and F
// slots; every basis vector has total weight zero.
inline ChainComplex build_invariant_complex(
    const ModelContext& mc, const WeightedModule& X, const WeightedModule& E,
    const WeightedModule* F = nullptr, InvariantModelData* data = nullptr) {
  const OperatorContext& o = mc.o;
  int n = o.n, nw = 1 << n;
  int dimX = X.dim(), dimE = E.dim(), dimF = F ? F->dim() : 1;
  std::vector<SpMat> mats = module_action(mc.L, X);
  std::vector<SpMat> mats_E = module_action(mc.L, E);
  std::vector<SpMat> mats_F;
  if (F) mats_F = module_action(mc.L, *F);

  SpMat D = model_matrix(o, mc.dol.dbar, mats, dimX, dimE,
                         F ? &mats_F : nullptr, dimF);
  auto idx = detail::degree_index_lists(dimX, nw, dimE, dimF, n);

  SpMat iX = SpMat::identity(dimX), iW = SpMat::identity(nw),
        iE = SpMat::identity(dimE), iF = SpMat::identity(dimF);
  auto total = [&](int a) {
    SpMat T =
        SpMat::kron(SpMat::kron(SpMat::kron(mats[a], iW), iE), iF) +
        SpMat::kron(SpMat::kron(SpMat::kron(iX, wedge_action(o, a)), iE), iF) +
        SpMat::kron(SpMat::kron(SpMat::kron(iX, iW), mats_E[a]), iF);
    if (F)
      T = T + SpMat::kron(SpMat::kron(SpMat::kron(iX, iW), iE), mats_F[a]);
    return T;
  };
  std::vector<int> gens;
  for (int i = 0; i < mc.rs->rank; ++i) gens.push_back(mc.L.cartan_index(i));
  for (const auto& g : mc.pd->h_roots) {
    gens.push_back(mc.L.root_index(g));
    gens.push_back(mc.L.root_index(-g));
  }
  std::vector<SpMat> tmats;
  for (int a : gens) tmats.push_back(total(a));

  ChainComplex c;
  c.rs = mc.rs;
  c.pd = mc.pd;
  c.n = n;
  std::vector<Mat> B(n + 1);
  for (int k = 0; k <= n; ++k) {
    int nk = int(idx[k].size());
    Mat stacked(int(gens.size()) * nk, nk);
    for (size_t g = 0; g < gens.size(); ++g) {
      Mat blk = sp_slice(tmats[g], idx[k], idx[k]);
      for (int i = 0; i < nk; ++i)
        for (int j = 0; j < nk; ++j)
          stacked.at(int(g) * nk + i, j) = blk.at(i, j);
    }
    B[k] = stacked.nullspace();
    c.dims.push_back(B[k].cols());
    c.weights.push_back(std::vector<Weight>(B[k].cols(), Weight(mc.rs->rank)));
  }
  auto restrict_to = [&](const SpMat& A, int kfrom, int kto) {
    Mat Ab = sp_slice(A, idx[kto], idx[kfrom]) * B[kfrom];
    auto sol = B[kto].solve(Ab);
    if (!sol || B[kto] * *sol != Ab)
      throw std::runtime_error(
          "build_invariant_complex: operator leaves the invariants");
    return *sol;
  };
  for (int k = 0; k < n; ++k) c.d.push_back(restrict_to(D, k, k + 1));
  for (int k = 0; k + 1 < n; ++k)
    if (!(c.d[k + 1] * c.d[k]).is_zero())
      throw std::runtime_error("build_invariant_complex: d^2 != 0");

  PBWElement omega = casimir(mc.ctx);
  SpMat Om = model_matrix(o, op_from_pbw(antipode(mc.ctx, omega)), mats, dimX,
                          dimE, F ? &mats_F : nullptr, dimF);
  std::vector<Mat> per;
  for (int k = 0; k <= n; ++k) per.push_back(restrict_to(Om, k, k));
  c.central.emplace("casimir_l", std::move(per));
  CharacterPolynomial ch = X.character();
  if (F) ch = character_multiply(ch, F->character());
  std::set<Rat> cand;
  for (const auto& [hw, m] : character_decompose(*mc.rs, ch))
    cand.insert(hc_scalar(mc.ctx, omega, hw + mc.rs->rho));
  c.central_candidates["casimir_l"] = {cand.begin(), cand.end()};
  if (data) {
    data->dimX = dimX;
    data->dimE = dimE;
    data->dimF = dimF;
    data->idx = std::move(idx);
    data->B = std::move(B);
  }
  return c;
}

// Generalized eigenvalue data of an exact rational matrix.
struct GeneralizedEigenvalue {
  Rat value;
  int multiplicity = 0;  // algebraic
  int max_block = 0;     // largest Jordan block
};

// Exact spectral analysis over a known candidate set: strip rational roots
// from the characteristic polynomial and read the Jordan profile off the
// kernel growth of (A - c)^j. An eigenvalue outside the candidates is an
// error, not a silent omission.
inline std::vector<GeneralizedEigenvalue> generalized_eigen(
    const Mat& A, std::vector<Rat> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  std::vector<Rat> p = A.charpoly();
  std::vector<GeneralizedEigenvalue> out;
  int nn = A.rows();
  for (const Rat& cv : candidates) {
    int mult = poly_strip_root(p, cv);
    if (!mult) continue;
    GeneralizedEigenvalue g;
    g.value = cv;
    g.multiplicity = mult;
    Mat M = A - Mat::identity(nn) * cv;
    Mat P = M;
    int prev = 0;
    for (int j = 1; j <= mult; ++j) {
      int kdim = nn - P.rank();
      if (kdim == prev) break;
      prev = kdim;
      g.max_block = j;
      if (kdim == mult) break;
      P = P * M;
    }
    if (prev != mult)
      throw std::runtime_error("generalized_eigen: kernel growth mismatch");
    out.push_back(g);
  }
  if (p.size() > 1)
    throw std::runtime_error(
        "generalized_eigen: eigenvalue outside the candidate set");
  return out;
}

// Coordinates of cycle columns in a chosen cohomology basis: express each
// column in [image basis | representatives], return the representative rows.
inline Mat class_coordinates(const Mat& im, const Mat& reps,
                             const Mat& cycles) {
  Mat basis = Mat::hcat(im, reps);
  auto y = basis.solve(cycles);
  if (!y || basis * *y != cycles)
    throw std::runtime_error("class_coordinates: column is not a cycle");
  Mat r(reps.cols(), cycles.cols());
  for (int i = 0; i < reps.cols(); ++i)
    for (int j = 0; j < cycles.cols(); ++j)
      r.at(i, j) = y->at(im.cols() + i, j);
  return r;
}

// action induced on cohomology by a chain-commuting operator
inline Mat induced_on_cohomology(const Mat& im, const Mat& reps, const Mat& A) {
  return class_coordinates(im, reps, A * reps);
}

struct DegreeCohomology {
  int dim = 0;
  Mat im;    // image of the incoming differential (independent columns)
  Mat reps;  // representatives, chain coordinates, weight-pure columns
  std::vector<Weight> rep_weights;
  std::vector<std::pair<Weight, int>> constituents;  // Levi decomposition
  std::map<std::string, Mat> induced;
  std::map<std::string, std::vector<GeneralizedEigenvalue>> central;
};

struct CohomologyResult {
  std::vector<DegreeCohomology> degrees;

  std::vector<int> betti() const {
    std::vector<int> b;
    for (const auto& dc : degrees) b.push_back(dc.dim);
    return b;
  }
  long euler() const {
    long e = 0;
    for (size_t k = 0; k < degrees.size(); ++k)
      e += (k % 2 ? -1 : 1) * degrees[k].dim;
    return e;
  }
};

// Exact cohomology of a chain complex: weight-pure representatives (the
// differential has weight zero, so kernel and image bases stay inside
// weight blocks), the Levi decomposition through the induced h-action, and
// the spectral table of every registered center probe.
inline CohomologyResult cohomology(const ChainComplex& c) {
  CohomologyResult res;
  for (int k = 0; k <= c.n; ++k) {
    DegreeCohomology dc;
    Mat dk = (k < c.n) ? c.d[k] : Mat(0, c.dims[k]);
    Mat Z = dk.nullspace();
    Mat prev = (k > 0) ? c.d[k - 1] : Mat(c.dims[k], 0);
    Mat joint = Mat::hcat(prev, Z);
    std::vector<int> im_cols, rep_cols;
    for (int j : joint.independent_cols())
      (j < prev.cols() ? im_cols : rep_cols).push_back(j);
    dc.im = Mat(c.dims[k], int(im_cols.size()));
    for (size_t j = 0; j < im_cols.size(); ++j)
      for (int i = 0; i < c.dims[k]; ++i)
        dc.im.at(i, int(j)) = prev.at(i, im_cols[j]);
    dc.reps = Mat(c.dims[k], int(rep_cols.size()));
    for (size_t j = 0; j < rep_cols.size(); ++j)
      for (int i = 0; i < c.dims[k]; ++i)
        dc.reps.at(i, int(j)) = Z.at(i, rep_cols[j] - prev.cols());
    dc.dim = dc.reps.cols();
    for (int j = 0; j < dc.dim; ++j) {
      Weight w(c.rs->rank);
      for (int i = 0; i < c.dims[k]; ++i)
        if (dc.reps.at(i, j) != 0) {
          w = c.weights[k][i];
          break;
        }
      dc.rep_weights.push_back(w);
    }
    if (dc.dim > 0) {
      if (c.has_h_action) {
        WeightedModule M;
        M.rs = c.rs;
        for (int i : c.pd->levi_subset) M.acting_simples.push_back(i);
        M.basis_weights = dc.rep_weights;
        SpMat z(dc.dim, dc.dim);
        for (int i = 0; i < c.rs->rank; ++i) {
          M.H.push_back(SpMat::from_dense(
              induced_on_cohomology(dc.im, dc.reps, c.H[i][k])));
          auto ie = c.LE.find(i);
          auto jf = c.LF.find(i);
          M.E.push_back(ie != c.LE.end()
                            ? SpMat::from_dense(induced_on_cohomology(
                                  dc.im, dc.reps, ie->second[k]))
                            : z);
          M.F.push_back(jf != c.LF.end()
                            ? SpMat::from_dense(induced_on_cohomology(
                                  dc.im, dc.reps, jf->second[k]))
                            : z);
        }
        M.verify();
        for (const auto& lc : restrict_levi(M, *c.pd))
          dc.constituents.emplace_back(lc.highest_weight, lc.multiplicity);
      } else {
        std::map<Weight, int> cnt;
        for (const auto& w : dc.rep_weights) cnt[w]++;
        for (const auto& [w, m] : cnt) dc.constituents.emplace_back(w, m);
      }
    }
    for (const auto& [name, act] : c.central) {
      Mat A = induced_on_cohomology(dc.im, dc.reps, act[k]);
      std::vector<Rat> cand;
      auto it = c.central_candidates.find(name);
      if (it != c.central_candidates.end()) cand = it->second;
      dc.central[name] = generalized_eigen(A, cand);
      dc.induced[name] = std::move(A);
    }
    res.degrees.push_back(std::move(dc));
  }
  return res;
}

// Per-degree comparison of the u-side cohomology of an irreducible module
// against the dot-orbit predictions: degree k carries exactly the
// parameters w . lambda over the minimal-length coset representatives of
// length k, each once.
struct KostantReport {
  std::vector<int> betti;
  std::vector<std::vector<Weight>> expected, computed;
  bool pass = true;
};

inline KostantReport kostant_verify(const ModelContext& mc,
                                    const Weight& lambda, int dim_cap = 400) {
  WeightedModule X = build_irrep(*mc.rs, lambda, dim_cap);
  ChainComplex c = build_full_complex(mc, X);
  CohomologyResult coh = cohomology(c);
  KostantReport rep;
  rep.expected.resize(mc.n() + 1);
  rep.computed.resize(mc.n() + 1);
  for (const auto& w : w1_representatives(*mc.pd))
    rep.expected[w.length].push_back(mc.rs->dot_action(w, lambda));
  for (int k = 0; k <= mc.n(); ++k) {
    rep.betti.push_back(coh.degrees[k].dim);
    for (const auto& [hw, m] : coh.degrees[k].constituents)
      for (int t = 0; t < m; ++t) rep.computed[k].push_back(hw);
    std::sort(rep.expected[k].begin(), rep.expected[k].end());
    std::sort(rep.computed[k].begin(), rep.computed[k].end());
    if (rep.expected[k] != rep.computed[k]) rep.pass = false;
  }
  return rep;
}

// The center acts on the u-side cohomology in two ways: through the module
// (the Casimir on X) and through the h-structure (the direct-sum projection
// of the Casimir via the diagonal embedding). The induced matrices must
// agree degree by degree, not just their spectra.
struct CasselmanOsborneReport {
  bool pass = true;
  std::vector<Mat> casimir_induced, hc_induced;
  std::vector<std::vector<GeneralizedEigenvalue>> spectra;
};

inline CasselmanOsborneReport casselman_osborne_verify(
    const ModelContext& mc, const WeightedModule& X) {
  ChainComplex c = build_full_complex(mc, X);
  CohomologyResult coh = cohomology(c);
  CasselmanOsborneReport rep;
  for (int k = 0; k <= mc.n(); ++k) {
    const auto& dc = coh.degrees[k];
    rep.casimir_induced.push_back(dc.induced.at("casimir"));
    rep.hc_induced.push_back(dc.induced.at("hc_casimir"));
    rep.spectra.push_back(dc.central.at("casimir"));
    if (rep.casimir_induced.back() != rep.hc_induced.back()) rep.pass = false;
  }
  return rep;
}

// Long exact sequence of a subcomplex: the embeddings S[k] (full column
// rank, d-stable) induce sub and quotient complexes, the three cohomology
// sequences, and the snake connecting maps, with exactness certified by
// exact rank bookkeeping at every node.
struct LESReport {
  ChainComplex sub, quot;
  std::vector<std::vector<int>> quot_cols;  // complement chain indices
  CohomologyResult sub_coh, total_coh, quot_coh;
  std::vector<Mat> incl, proj, connecting;
  bool exact = true;
};

inline LESReport les_from_subcomplex(const ChainComplex& total,
                                     const std::vector<Mat>& S) {
  int n = total.n;
  if (int(S.size()) != n + 1)
    throw std::invalid_argument("les_from_subcomplex: need n+1 embeddings");
  LESReport rep;
  rep.sub.rs = rep.quot.rs = total.rs;
  rep.sub.pd = rep.quot.pd = total.pd;
  rep.sub.n = rep.quot.n = n;
  std::vector<Mat> Q(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (S[k].rank() != S[k].cols())
      throw std::invalid_argument(
          "les_from_subcomplex: embedding not injective");
    rep.sub.dims.push_back(S[k].cols());
    rep.sub.weights.push_back(
        std::vector<Weight>(S[k].cols(), Weight(total.rs->rank)));
    // complement: unit vectors extending the columns of S[k]
    Mat ext = Mat::hcat(S[k], Mat::identity(total.dims[k]));
    std::vector<int> qc;
    for (int j : ext.independent_cols())
      if (j >= S[k].cols()) qc.push_back(j - S[k].cols());
    Q[k] = Mat(total.dims[k], int(qc.size()));
    for (size_t j = 0; j < qc.size(); ++j) Q[k].at(qc[j], int(j)) = 1;
    rep.quot_cols.push_back(qc);
    rep.quot.dims.push_back(int(qc.size()));
    rep.quot.weights.push_back(
        std::vector<Weight>(int(qc.size()), Weight(total.rs->rank)));
  }
  std::vector<Mat> pi_quot(n + 1);  // chain-level projection in [S|Q] basis
  for (int k = 0; k <= n; ++k) {
    Mat coords = Mat::hcat(S[k], Q[k]).inverse();
    pi_quot[k] = Mat(Q[k].cols(), total.dims[k]);
    for (int i = 0; i < Q[k].cols(); ++i)
      for (int j = 0; j < total.dims[k]; ++j)
        pi_quot[k].at(i, j) = coords.at(S[k].cols() + i, j);
  }
  for (int k = 0; k < n; ++k) {
    Mat img = total.d[k] * S[k];
    auto sol = S[k + 1].solve(img);
    if (!sol || S[k + 1] * *sol != img)
      throw std::invalid_argument("les_from_subcomplex: subspace not d-stable");
    rep.sub.d.push_back(*sol);
    rep.quot.d.push_back(pi_quot[k + 1] * (total.d[k] * Q[k]));
  }
  rep.sub_coh = cohomology(rep.sub);
  rep.total_coh = cohomology(total);
  rep.quot_coh = cohomology(rep.quot);
  for (int k = 0; k <= n; ++k) {
    const auto& dt = rep.total_coh.degrees[k];
    const auto& dq = rep.quot_coh.degrees[k];
    rep.incl.push_back(class_coordinates(dt.im, dt.reps,
                                         S[k] * rep.sub_coh.degrees[k].reps));
    rep.proj.push_back(class_coordinates(dq.im, dq.reps, pi_quot[k] * dt.reps));
    if (k < n) {
      // snake: lift a quotient cycle, push through d, pull back along S
      Mat w = total.d[k] * (Q[k] * dq.reps);
      auto s = S[k + 1].solve(w);
      if (!s || S[k + 1] * *s != w)
        throw std::runtime_error("les_from_subcomplex: snake lift failed");
      const auto& dsn = rep.sub_coh.degrees[k + 1];
      rep.connecting.push_back(class_coordinates(dsn.im, dsn.reps, *s));
    }
  }
  // exactness: composite vanishing plus rank accounting at every node
  auto rank_of = [](const Mat& m) { return m.cols() ? m.rank() : 0; };
  for (int k = 0; k <= n; ++k) {
    int conn_in = (k > 0) ? rank_of(rep.connecting[k - 1]) : 0;
    if (k > 0 && rep.connecting[k - 1].cols() &&
        !(rep.incl[k] * rep.connecting[k - 1]).is_zero())
      rep.exact = false;
    if (rep.incl[k].cols() && !(rep.proj[k] * rep.incl[k]).is_zero())
      rep.exact = false;
    if (conn_in + rank_of(rep.incl[k]) != rep.sub_coh.degrees[k].dim)
      rep.exact = false;
    if (rank_of(rep.incl[k]) + rank_of(rep.proj[k]) !=
        rep.total_coh.degrees[k].dim)
      rep.exact = false;
    int conn_out = (k < n) ? rank_of(rep.connecting[k]) : 0;
    if (k < n && rep.proj[k].cols() &&
        !(rep.connecting[k] * rep.proj[k]).is_zero())
      rep.exact = false;
    if (rank_of(rep.proj[k]) + conn_out != rep.quot_coh.degrees[k].dim)
      rep.exact = false;
  }
  return rep;
}

}  // namespace liecoh
