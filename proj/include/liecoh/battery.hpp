#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "liecoh/translate.hpp"

namespace liecoh {

// One item of the fixed verification battery behind the `suite` command.
// Details are deterministic strings so a serialized battery is byte-stable.
struct BatteryCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace battery_detail {

inline std::vector<Weight> irreps_up_to(const RootSystem& rs, int dim_cap) {
  // dimensions grow in each coordinate, so dim_cap bounds the odometer
  std::vector<Weight> out;
  std::vector<int> c(rs.rank, 0);
  while (true) {
    Weight w(rs.rank);
    for (int i = 0; i < rs.rank; ++i) w.coords[i] = c[i];
    if (weyl_dimension(rs, w) <= dim_cap) out.push_back(w);
    int i = 0;
    while (i < rs.rank && ++c[i] > dim_cap) c[i++] = 0;
    if (i == rs.rank) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// expected invariant-model dimensions for a one-constituent coefficient
inline std::vector<int> expected_invariant_betti(const RootSystem& rs,
                                                 const ParabolicData& pd,
                                                 int n, const Weight& lambda,
                                                 const Weight& mu) {
  std::vector<int> b(n + 1, 0);
  Weight musharp = levi_dominant_representative(pd, -mu);
  for (const auto& w : w1_representatives(pd))
    if (rs.dot_action(w, lambda) == musharp) b[w.length] += 1;
  return b;
}

struct Ctx {
  RootSystem rs;
  ParabolicData pd;
  ModelContext mc;
  Ctx(const std::string& type, const std::set<int>& levi)
      : rs(build_root_system(type)),
        pd(build_parabolic(rs, levi)),
        mc(rs, pd) {}
};

inline Weight wv(std::vector<Rat> v) { return Weight(std::move(v)); }

}  // namespace battery_detail

// 1. Squared differential vanishes: the abstract operator and its matrix on
// every module of dimension <= 64 across three algebras and all parabolics.
inline BatteryCheck battery_d2() {
  using namespace battery_detail;
  BatteryCheck c{"d2-vanishes", true, ""};
  long complexes = 0;
  std::map<std::string, std::vector<Weight>> lams;
  for (const auto& [type, levi] :
       std::vector<std::pair<std::string, std::set<int>>>{{"A1", {}},
                                                          {"A2", {}},
                                                          {"A2", {0}},
                                                          {"A2", {1}},
                                                          {"B2", {}},
                                                          {"B2", {0}},
                                                          {"B2", {1}}}) {
    Ctx cx(type, levi);
    if (!op_graded_commutator(cx.mc.o, cx.mc.dol.dbar, cx.mc.dol.dbar)
             .is_zero())
      c.pass = false;
    if (!lams.count(type)) lams[type] = irreps_up_to(cx.rs, 64);
    for (const auto& l : lams[type]) {
      WeightedModule Y = build_irrep(cx.rs, l, 64);
      auto mats = module_action(cx.mc.L, Y);
      SpMat D = model_matrix(cx.mc.o, cx.mc.dol.dbar, mats, Y.dim(), 1,
                             nullptr, 1);
      if (!(D * D).is_zero()) c.pass = false;
      ++complexes;
    }
  }
  c.detail = std::to_string(complexes) + " module complexes";
  return c;
}

// 2. u-side cohomology of small modules matches the dot-orbit prediction.
inline BatteryCheck battery_kostant() {
  using namespace battery_detail;
  BatteryCheck c{"kostant", true, ""};
  Ctx cx("A2", {});
  std::ostringstream det;
  for (const auto& l : {wv({0, 0}), wv({1, 0}), wv({1, 1})}) {
    KostantReport rep = kostant_verify(cx.mc, l);
    if (!rep.pass || rep.betti != std::vector<int>{1, 2, 2, 1}) c.pass = false;
    det << l.str() << ":";
    for (size_t k = 0; k < rep.betti.size(); ++k)
      det << (k ? "," : "") << rep.betti[k];
    det << " ";
  }
  c.detail = det.str();
  return c;
}

// 3. The module-side and h-side central actions agree on cohomology.
inline BatteryCheck battery_casselman_osborne() {
  using namespace battery_detail;
  BatteryCheck c{"casselman-osborne", true, ""};
  int runs = 0;
  {
    Ctx cx("A1", {});
    for (int m = 0; m <= 6; ++m) {
      auto rep =
          casselman_osborne_verify(cx.mc, build_irrep(cx.rs, wv({m})));
      if (!rep.pass) c.pass = false;
      ++runs;
    }
  }
  {
    Ctx cx("A2", {});
    auto rep = casselman_osborne_verify(cx.mc, build_irrep(cx.rs, wv({1, 1})));
    if (!rep.pass) c.pass = false;
    ++runs;
  }
  c.detail = std::to_string(runs) + " matrix equalities";
  return c;
}

// 4. Decomposing the Casimir against the differential recovers exactly its
// Cartan projection, and the truncated kernel splits as claimed.
inline BatteryCheck battery_hodge(int trunc_degree = 4) {
  using namespace battery_detail;
  BatteryCheck c{"hodge-decomposition", true, ""};
  std::ostringstream det;
  for (const std::string type : {"A1", "A2"}) {
    Ctx cx(type, {});
    PBWElement omega = casimir(cx.mc.ctx);
    HodgeResult hr =
        hodge_decompose(cx.mc.o, cx.mc.dol.dbar, op_from_pbw(omega));
    if (hr.z.terms != hc_project(cx.mc.ctx, omega).terms) c.pass = false;
    if (!hr.residual.is_zero()) c.pass = false;
    HodgeSpanReport span =
        hodge_span_certificate(cx.mc.o, cx.mc.dol.dbar, trunc_degree);
    if (!span.direct_sum) c.pass = false;
    det << type << ":ker" << span.kernel_dim << "=z" << span.central_dim
        << "+im" << span.image_dim << " ";
  }
  c.detail = det.str();
  return c;
}

// 5. The Cartan projection carries the half-sum shift: constituent
// parameters land in the right Weyl orbit with equal central scalars.
inline BatteryCheck battery_rho_shift() {
  using namespace battery_detail;
  BatteryCheck c{"rho-shift", true, ""};
  int runs = 0;
  for (const auto& [type, levi, lam] :
       std::vector<std::tuple<std::string, std::set<int>, Weight>>{
           {"A1", {}, wv({3})},
           {"A2", {}, wv({1, 1})},
           {"A2", {1}, wv({1, 0})},
           {"B2", {}, wv({1, 1})}}) {
    Ctx cx(type, levi);
    if (!verify_hc_shift(cx.mc.ctx, casimir(cx.mc.ctx), lam)) c.pass = false;
    ++runs;
  }
  c.detail = std::to_string(runs) + " shift certificates";
  return c;
}

// 6. Invariant-model cohomology is nonzero only on Weyl-linked coefficient
// parameters, and direct sums of coefficients split the cohomology.
inline BatteryCheck battery_selectivity() {
  using namespace battery_detail;
  BatteryCheck c{"coefficient-selectivity", true, ""};
  int pairs = 0;
  auto run_pair = [&](Ctx& cx, const WeightedModule& X, const Weight& mu) {
    WeightedModule E = weight_line_module(cx.rs, mu);
    auto coh = cohomology(build_invariant_complex(cx.mc, X, E));
    auto expected = expected_invariant_betti(cx.rs, cx.pd, cx.mc.n(),
                                             X.highest_weight, mu);
    if (coh.betti() != expected) c.pass = false;
    ++pairs;
    return coh.betti();
  };
  {
    Ctx cx("A1", {});
    WeightedModule X = build_irrep(cx.rs, wv({2}));
    for (int mu : {-2, 4, 0, 2, -6}) run_pair(cx, X, wv({mu}));
    // splitting: the two linked lines together
    WeightedModule E = direct_sum_module(weight_line_module(cx.rs, wv({-2})),
                                         weight_line_module(cx.rs, wv({4})));
    auto coh = cohomology(build_invariant_complex(cx.mc, X, E));
    if (coh.betti() != std::vector<int>{1, 1}) c.pass = false;
  }
  {
    Ctx cx("A2", {});
    WeightedModule X = build_irrep(cx.rs, wv({1, 1}));
    std::vector<Weight> linked;
    for (const auto& w : w1_representatives(cx.pd))
      linked.push_back(-cx.rs.dot_action(w, X.highest_weight));
    for (const auto& mu : linked) run_pair(cx, X, mu);
    run_pair(cx, X, wv({1, 1}));
    run_pair(cx, X, wv({2, 0}));
    WeightedModule E =
        direct_sum_module(weight_line_module(cx.rs, linked[0]),
                          weight_line_module(cx.rs, linked.back()));
    auto coh = cohomology(build_invariant_complex(cx.mc, X, E));
    std::vector<int> expect(cx.mc.n() + 1, 0);
    expect[0] += 1;
    expect[cx.mc.n()] += 1;
    if (coh.betti() != expect) c.pass = false;
  }
  c.detail = std::to_string(pairs) + " coefficient pairs";
  return c;
}

namespace battery_detail {

struct TranslationRun {
  std::string type;
  std::set<int> levi;
  Weight e_hw, nu, x_hw;
};

inline std::vector<TranslationRun> translation_runs() {
  return {
      {"A1", {}, wv({3}), wv({1}), wv({2})},
      {"A1", {}, wv({5}), wv({1}), wv({4})},
      {"A1", {}, wv({-3}), wv({1}), wv({2})},
      {"A2", {}, wv({2, 3}), wv({1, 0}), wv({1, 1})},
      {"A2", {1}, wv({4, 0}), wv({0, 1}), wv({1, 1})},
  };
}

inline std::vector<TranslationReport> run_translations() {
  std::vector<TranslationReport> out;
  for (const auto& r : translation_runs()) {
    Ctx cx(r.type, r.levi);
    WeightedModule X = build_irrep(cx.rs, r.x_hw);
    WeightedModule E = levi_highest_module(cx.mc, r.e_hw);
    TranslationDatum td =
        split_restriction(cx.mc, r.e_hw + cx.pd.rho_h, r.nu);
    out.push_back(verify_translation_theorem(cx.mc, td, E, X));
  }
  return out;
}

}  // namespace battery_detail

// 7. Translation comparison: chain-map certificate, exact sequence with
// vanishing connecting maps, matched-run isomorphism of the target parts.
inline BatteryCheck battery_translation() {
  using namespace battery_detail;
  BatteryCheck c{"translation", true, ""};
  auto reps = run_translations();
  int matched = 0;
  for (const auto& rep : reps) {
    if (rep.status != "pass") c.pass = false;
    if (rep.matched) ++matched;
  }
  c.detail = std::to_string(reps.size()) + " runs, " +
             std::to_string(matched) + " matched";
  return c;
}

// 8. The target part agrees with the Levi-side translation functor, as
// h-modules and as model cohomology with equal central tables.
inline BatteryCheck battery_translation_functor() {
  using namespace battery_detail;
  BatteryCheck c{"translation-functor", true, ""};
  auto reps = run_translations();
  for (const auto& rep : reps)
    if (!rep.translate_h_ok) c.pass = false;
  c.detail = std::to_string(reps.size()) + " functor comparisons";
  return c;
}

inline std::vector<BatteryCheck> run_battery() {
  return {battery_d2(),
          battery_kostant(),
          battery_casselman_osborne(),
          battery_hodge(),
          battery_rho_shift(),
          battery_selectivity(),
          battery_translation(),
          battery_translation_functor()};
}

inline std::string battery_serialize(const std::vector<BatteryCheck>& cs) {
  std::ostringstream os;
  for (const auto& c : cs)
    os << c.name << "|" << (c.pass ? "pass" : "fail") << "|" << c.detail
       << "\n";
  return os.str();
}

}  // namespace liecoh
