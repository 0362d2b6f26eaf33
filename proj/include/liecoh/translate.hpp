#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecoh/complex.hpp"

namespace liecoh {

// Splitting of the tensoring module F = F^nu as an h-module: the u-invariant
// top constituent Env (highest weight nu) and its complement Eprime, which
// contains (in fact equals) u-bar F. mu is the Z(h) parameter of the
// coefficient being translated, i.e. highest weight + rho_h.
struct TranslationDatum {
  const ParabolicData* pd = nullptr;
  Weight mu, nu;
  WeightedModule Fnu;
  WeightedModule Env, Eprime;
  Mat env_embed, env_proj;        // dimF x dimEnv, dimEnv x dimF
  Mat eprime_embed, eprime_proj;  // dimF x dimEp,  dimEp x dimF
  bool conditionC = false;
};

inline WeightedModule empty_h_module(const RootSystem& rs,
                                     const ParabolicData& pd) {
  WeightedModule z;
  z.rs = &rs;
  for (int i : pd.levi_subset) z.acting_simples.push_back(i);
  for (int i = 0; i < rs.rank; ++i) {
    z.E.emplace_back(0, 0);
    z.F.emplace_back(0, 0);
    z.H.emplace_back(0, 0);
  }
  z.zero_flag = true;
  return z;
}

// Irreducible h-module with a given Levi-dominant integral highest weight:
// the Levi part is cut out of the matching finite-dimensional module, the
// remaining torus directions come from a one-dimensional twist.
inline WeightedModule levi_highest_module(const ModelContext& mc,
                                          const Weight& hw,
                                          int dim_cap = 400) {
  const RootSystem& rs = *mc.rs;
  const ParabolicData& pd = *mc.pd;
  if (!hw.is_integral())
    throw std::invalid_argument("levi_highest_module: non-integral weight");
  Weight core(rs.rank), rest = hw;
  for (int i : pd.levi_subset) {
    if (hw.coords[i] < 0)
      throw std::invalid_argument("levi_highest_module: not Levi-dominant");
    core.coords[i] = hw.coords[i];
    rest.coords[i] = 0;
  }
  if (pd.levi_subset.empty() || core.is_zero())
    return weight_line_module(rs, hw);
  WeightedModule F = build_irrep(rs, core, dim_cap);
  for (const auto& lc : restrict_levi(F, pd))
    if (lc.highest_weight == core) {
      WeightedModule M = constituent_module(F, pd, lc);
      if (!rest.is_zero())
        M = tensor_module(M, weight_line_module(rs, rest));
      M.highest_weight = hw;
      return M;
    }
  throw std::runtime_error("levi_highest_module: constituent not found");
}

// Split F^nu = Env + Eprime with exact projector identities; verifies that
// Env is exactly the space of u-invariants, that u-bar F lands inside
// Eprime, and that nu is not a weight of Eprime.
inline TranslationDatum split_restriction(const ModelContext& mc,
                                          const Weight& mu, const Weight& nu,
                                          int dim_cap = 400) {
  const RootSystem& rs = *mc.rs;
  const ParabolicData& pd = *mc.pd;
  if (!nu.is_dominant() || !nu.is_integral())
    throw std::invalid_argument("split_restriction: nu must be dominant");
  TranslationDatum td;
  td.pd = &pd;
  td.mu = mu;
  td.nu = nu;
  td.Fnu = build_irrep(rs, nu, dim_cap);
  int dimF = td.Fnu.dim();

  auto cons = restrict_levi(td.Fnu, pd);
  const LeviConstituent* top = nullptr;
  Mat rest(dimF, 0);
  Weight rest_hw;
  for (const auto& lc : cons) {
    if (lc.highest_weight == nu) {
      if (top || lc.multiplicity != 1)
        throw std::runtime_error("split_restriction: top constituent not unique");
      top = &lc;
    } else {
      if (rest.cols() == 0) rest_hw = lc.highest_weight;
      rest = Mat::hcat(rest, lc.embedding);
    }
  }
  if (!top) throw std::runtime_error("split_restriction: no top constituent");
  td.env_embed = top->embedding;
  td.Env = constituent_module(td.Fnu, pd, *top);
  td.eprime_embed = rest;
  if (rest.cols() > 0) {
    LeviConstituent agg;
    agg.highest_weight = rest_hw;
    agg.embedding = rest;
    td.Eprime = constituent_module(td.Fnu, pd, agg);
  } else {
    td.Eprime = empty_h_module(rs, pd);
  }

  // exact projectors onto the two summands
  Mat all = Mat::hcat(td.env_embed, td.eprime_embed);
  Mat inv = all.inverse();
  int de = td.env_embed.cols();
  td.env_proj = Mat(de, dimF);
  td.eprime_proj = Mat(dimF - de, dimF);
  for (int j = 0; j < dimF; ++j) {
    for (int i = 0; i < de; ++i) td.env_proj.at(i, j) = inv.at(i, j);
    for (int i = de; i < dimF; ++i)
      td.eprime_proj.at(i - de, j) = inv.at(i, j);
  }
  if (td.env_proj * td.env_embed != Mat::identity(de) ||
      !(td.env_proj * td.eprime_embed).is_zero())
    throw std::runtime_error("split_restriction: projector identities fail");

  // Env is killed by u, and u-bar translates land in the complement
  std::vector<SpMat> mats_F = module_action(mc.L, td.Fnu);
  for (const auto& g : pd.u_roots) {
    if (!(mats_F[mc.L.root_index(g)].dense() * td.env_embed).is_zero())
      throw std::runtime_error("split_restriction: Env is not u-invariant");
    if (!(td.env_proj * mats_F[mc.L.root_index(-g)].dense()).is_zero())
      throw std::runtime_error(
          "split_restriction: u-bar image leaves the complement");
  }
  for (const auto& w : td.Eprime.basis_weights)
    if (w == nu)
      throw std::runtime_error("split_restriction: nu is a weight of Eprime");

  td.conditionC = condition_C(mu, nu, pd);
  return td;
}

// The coupled differential on X ox ^u-bar ox E ox F differs from the
// F-inert one by correction terms feeding the F slot. The correction has
// zero columns on the Env summand of the F slot, so the Env part carries a
// subcomplex with the plain differential.
struct BlockReport {
  bool pass = false;
  bool correction_is_zero = false;
  int dim_env = 0, dim_eprime = 0;
};

inline BlockReport block_structure_verify(const ModelContext& mc,
                                          const TranslationDatum& td,
                                          const WeightedModule& E,
                                          const WeightedModule& X) {
  int nw = 1 << mc.n();
  int dimX = X.dim(), dimE = E.dim(), dimF = td.Fnu.dim();
  std::vector<SpMat> mats_X = module_action(mc.L, X);
  std::vector<SpMat> mats_F = module_action(mc.L, td.Fnu);
  SpMat coupled =
      model_matrix(mc.o, mc.dol.dbar, mats_X, dimX, dimE, &mats_F, dimF);
  SpMat plain =
      model_matrix(mc.o, mc.dol.dbar, mats_X, dimX, dimE, nullptr, dimF);
  SpMat corr = coupled - plain;
  BlockReport rep;
  rep.dim_env = td.env_embed.cols();
  rep.dim_eprime = td.eprime_embed.cols();
  rep.correction_is_zero = corr.is_zero();
  SpMat J = SpMat::kron(SpMat::identity(dimX * nw * dimE),
                        SpMat::from_dense(td.env_embed));
  rep.pass = (corr * J).is_zero();
  return rep;
}

// Chain map between the translation target model (coefficient E ox Env,
// F-inert) and the coupled model (coefficient E, F acting through the
// coproduct): the Env-slot inclusion. Certified as an exact chain map; the
// induced cohomology maps realize the translation comparison.
struct ProjectionReport {
  ChainComplex big, target;
  InvariantModelData big_data, target_data;
  std::vector<Mat> chain;    // per-degree target -> big, chain coordinates
  std::vector<Mat> induced;  // per-degree map on cohomology
  CohomologyResult big_coh, target_coh;
  bool chain_map_ok = true;
  bool injective = true;
};

inline ProjectionReport projection_pG(const ModelContext& mc,
                                      const TranslationDatum& td,
                                      const WeightedModule& E,
                                      const WeightedModule& X) {
  ProjectionReport rep;
  rep.big = build_invariant_complex(mc, X, E, &td.Fnu, &rep.big_data);
  WeightedModule coeff = tensor_module(E, td.Env);
  rep.target = build_invariant_complex(mc, X, coeff, nullptr, &rep.target_data);
  int nw = 1 << mc.n();
  SpMat J = SpMat::kron(SpMat::identity(rep.big_data.dimX * nw * E.dim()),
                        SpMat::from_dense(td.env_embed));
  for (int k = 0; k <= mc.n(); ++k) {
    Mat Jk = sp_slice(J, rep.big_data.idx[k], rep.target_data.idx[k]);
    Mat rhs = Jk * rep.target_data.B[k];
    auto sol = rep.big_data.B[k].solve(rhs);
    if (!sol || rep.big_data.B[k] * *sol != rhs)
      throw std::runtime_error("projection_pG: inclusion leaves the invariants");
    rep.chain.push_back(*sol);
  }
  for (int k = 0; k < mc.n(); ++k)
    if (rep.big.d[k] * rep.chain[k] != rep.chain[k + 1] * rep.target.d[k])
      rep.chain_map_ok = false;
  rep.big_coh = cohomology(rep.big);
  rep.target_coh = cohomology(rep.target);
  for (int k = 0; k <= mc.n(); ++k) {
    const auto& db = rep.big_coh.degrees[k];
    Mat m = class_coordinates(db.im, db.reps,
                              rep.chain[k] * rep.target_coh.degrees[k].reps);
    if (m.cols() > 0 && m.rank() != m.cols()) rep.injective = false;
    rep.induced.push_back(std::move(m));
  }
  return rep;
}

// Full translation verification on one (mu, nu, X) run: block structure,
// chain-map certificate, the long exact sequence of the Env subcomplex with
// vanishing connecting maps, central-character bookkeeping on both models,
// the orbit-avoidance statement for the complement coefficients, the
// exact-rank isomorphism of the target parts, and agreement with the
// Levi-side translation functor. On the coupled model the quadratic probe
// takes the single value attached to the sharp-adjusted source parameter
// (the finite module side collapses the tensor spectrum), so the target and
// complement parts are separated by the exact sequence itself plus exact
// Weyl-orbit combinatorics; runs where distinct orbits share a probe value
// are refused rather than certified.
struct TranslationReport {
  std::string status;  // pass | fail | not-applicable | refused-collision
  std::vector<Weight> witness;  // roots singular at the source, not the target
  Rat chi_source;   // probe value of the source character on the coupled model
  Weight target_orbit;  // dominant representative of the target character
  bool matched = false;  // X carries the target character
  bool block_ok = false, chain_map_ok = false, injective = false;
  bool les_exact = false, connecting_zero = false, quot_dims_ok = false;
  bool lemma12_ok = false, central_ok = false, primary_iso_ok = false;
  bool translate_h_ok = false;
  std::vector<int> betti_big, betti_target, betti_quot;
  ProjectionReport proj;
  // the coupled model stands in for the function-space side throughout
  std::string model_note = "coupled finite model; no analytic function spaces";

  bool pass() const {
    return block_ok && chain_map_ok && injective && les_exact &&
           connecting_zero && quot_dims_ok && lemma12_ok && central_ok &&
           primary_iso_ok && translate_h_ok;
  }
};

inline TranslationReport verify_translation_theorem(const ModelContext& mc,
                                                    const TranslationDatum& td,
                                                    const WeightedModule& E,
                                                    const WeightedModule& X) {
  const RootSystem& rs = *mc.rs;
  const ParabolicData& pd = *mc.pd;
  TranslationReport rep;
  if (!td.conditionC) {
    rep.status = "not-applicable";
    Weight base = td.mu + pd.rho_u;
    for (const auto& g : rs.positive_roots)
      if (rs.coroot_pairing(base, g) == 0 &&
          rs.coroot_pairing(base + td.nu, g) != 0)
        rep.witness.push_back(g);
    return rep;
  }

  PBWElement omega = casimir(mc.ctx);
  auto sharp_param = [&](const Weight& hw) {
    return levi_dominant_representative(pd, -hw) + rs.rho;
  };
  WeightedModule Z = zuckerman_translate_h(E, td.mu, td.nu, pd);
  Weight hw_t = (!Z.zero_flag && Z.dim() > 0)
                    ? Z.highest_weight
                    : levi_dominant_representative(pd, td.mu + td.nu) -
                          pd.rho_h;
  rep.target_orbit = rs.dominant_representative(sharp_param(hw_t));
  rep.matched =
      rep.target_orbit == rs.dominant_representative(X.highest_weight + rs.rho);
  Rat c_src = hc_scalar(mc.ctx, omega, sharp_param(E.highest_weight));
  rep.chi_source = c_src;

  // probe values across every orbit in reach; equal values on distinct
  // orbits defeat the quadratic probe, so such runs are refused
  std::map<Weight, Rat> orbit_value;
  bool collision = false;
  auto reach = [&](const Weight& param) {
    Weight dom = rs.dominant_representative(param);
    Rat v = hc_scalar(mc.ctx, omega, param);
    auto it = orbit_value.find(dom);
    if (it == orbit_value.end()) {
      for (const auto& [d2, v2] : orbit_value)
        if (v2 == v) collision = true;
      orbit_value.emplace(dom, v);
    }
  };
  reach(X.highest_weight + rs.rho);
  reach(sharp_param(E.highest_weight));
  reach(sharp_param(hw_t));
  std::vector<Weight> eprime_params;
  if (td.Eprime.dim() > 0)
    for (const auto& lc : restrict_levi(tensor_module(E, td.Eprime), pd)) {
      eprime_params.push_back(lc.highest_weight);
      reach(sharp_param(lc.highest_weight));
    }
  if (collision) {
    rep.status = "refused-collision";
    return rep;
  }

  // Lemma 12 shadow: under condition (C) no complement coefficient lands in
  // the target character orbit
  rep.lemma12_ok = true;
  for (const auto& eta : eprime_params)
    if (rs.dominant_representative(sharp_param(eta)) == rep.target_orbit)
      rep.lemma12_ok = false;

  rep.block_ok = block_structure_verify(mc, td, E, X).pass;
  rep.proj = projection_pG(mc, td, E, X);
  rep.chain_map_ok = rep.proj.chain_map_ok;
  rep.injective = rep.proj.injective;
  rep.betti_big = rep.proj.big_coh.betti();
  rep.betti_target = rep.proj.target_coh.betti();

  LESReport les = les_from_subcomplex(rep.proj.big, rep.proj.chain);
  rep.les_exact = les.exact;
  rep.connecting_zero = true;
  for (const auto& m : les.connecting)
    if (!m.is_zero()) rep.connecting_zero = false;
  rep.betti_quot = les.quot_coh.betti();
  // the quotient is the complement-coefficient model degreewise
  rep.quot_dims_ok = true;
  if (td.Eprime.dim() > 0) {
    ChainComplex quot_model =
        build_invariant_complex(mc, X, tensor_module(E, td.Eprime));
    for (int k = 0; k <= mc.n(); ++k)
      if (les.quot.dims[k] != quot_model.dims[k]) rep.quot_dims_ok = false;
  } else {
    for (int k = 0; k <= mc.n(); ++k)
      if (les.quot.dims[k] != 0) rep.quot_dims_ok = false;
  }

  // central bookkeeping: every class of the coupled model carries the
  // sharp-adjusted source value, with no nilpotent part
  rep.central_ok = true;
  rep.primary_iso_ok = true;
  for (int k = 0; k <= mc.n(); ++k) {
    for (const auto& g : rep.proj.big_coh.degrees[k].central.at("casimir_l"))
      if (g.value != c_src || g.max_block != 1) rep.central_ok = false;
    // target part: on a matched run the inclusion is a degreewise
    // isomorphism and the complement part of the cohomology vanishes;
    // unmatched runs have trivial target cohomology on both sides
    const Mat& incl = rep.proj.induced[k];
    int tdim = rep.proj.target_coh.degrees[k].dim;
    int r = incl.cols() > 0 ? incl.rank() : 0;
    if (r != tdim) rep.primary_iso_ok = false;
    if (rep.matched) {
      if (tdim != rep.proj.big_coh.degrees[k].dim) rep.primary_iso_ok = false;
      if (les.quot_coh.degrees[k].dim != 0) rep.primary_iso_ok = false;
    } else {
      if (tdim != 0) rep.primary_iso_ok = false;
    }
  }

  // Levi-side translation functor comparison: the target-coefficient model
  // matches the model built on the translated coefficient, and at the
  // h-level the primary part of E ox Env is the translated module
  rep.translate_h_ok = true;
  {
    WeightedModule EEnv = tensor_module(E, td.Env);
    Weight tparam = levi_dominant_representative(pd, td.mu + td.nu);
    std::vector<Weight> part, zw = Z.basis_weights;
    for (const auto& pc : primary_decompose(EEnv, pd))
      if (pc.parameter == tparam)
        for (int j = 0; j < pc.embedding.cols(); ++j)
          for (int i = 0; i < EEnv.dim(); ++i)
            if (pc.embedding.at(i, j) != 0) {
              part.push_back(EEnv.basis_weights[i]);
              break;
            }
    std::sort(part.begin(), part.end());
    std::sort(zw.begin(), zw.end());
    if (part != zw) rep.translate_h_ok = false;
  }
  if (!Z.zero_flag && Z.dim() > 0) {
    ChainComplex zc = build_invariant_complex(mc, X, Z);
    CohomologyResult zcoh = cohomology(zc);
    for (int k = 0; k <= mc.n(); ++k) {
      const auto& a = rep.proj.target_coh.degrees[k];
      const auto& b = zcoh.degrees[k];
      if (a.dim != b.dim) rep.translate_h_ok = false;
      const auto& ga = a.central.at("casimir_l");
      const auto& gb = b.central.at("casimir_l");
      if (ga.size() != gb.size()) {
        rep.translate_h_ok = false;
      } else {
        for (size_t t = 0; t < ga.size(); ++t)
          if (ga[t].value != gb[t].value ||
              ga[t].multiplicity != gb[t].multiplicity ||
              ga[t].max_block != gb[t].max_block)
            rep.translate_h_ok = false;
      }
    }
  } else {
    for (int k = 0; k <= mc.n(); ++k)
      if (rep.proj.target_coh.degrees[k].dim != 0) rep.translate_h_ok = false;
  }

  rep.status = rep.pass() ? "pass" : "fail";
  return rep;
}

}  // namespace liecoh
