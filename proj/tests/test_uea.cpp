#include <catch2/catch_amalgamated.hpp>

#include "liecoh/pbw.hpp"

using namespace liecoh;

TEST_CASE("lie algebra structure constants") {
  SECTION("antisymmetry and Jacobi, A2 exhaustive") {
    RootSystem rs = build_root_system("A2");
    LieAlgebra L = build_lie_algebra(rs);
    int n = L.dim();
    REQUIRE(n == 8);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        auto ab = L.bracket_of(a, b);
        auto ba = L.bracket_of(b, a);
        for (const auto& [d, c] : ab) CHECK(ba[d] == -c);
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          std::map<int, Rat> acc;
          auto term = [&](int x, int y, int z) {
            for (const auto& [d, v] : L.bracket_of(y, z))
              for (const auto& [e, w] : L.bracket_of(x, d)) acc[e] += v * w;
          };
          term(a, b, c);
          term(b, c, a);
          term(c, a, b);
          for (const auto& [e, v] : acc) CHECK(v == 0);
        }
  }
  SECTION("brackets carry weights") {
    RootSystem rs = build_root_system("B2");
    LieAlgebra L = build_lie_algebra(rs);
    for (int a = 0; a < L.dim(); ++a)
      for (int b = 0; b < L.dim(); ++b)
        for (const auto& [d, c] : L.bracket_of(a, b))
          if (c != 0)
            CHECK(L.basis_weight(d) ==
                  L.basis_weight(a) + L.basis_weight(b));
  }
  SECTION("invariance of the form: B([x,y],z) = -B(y,[x,z])") {
    RootSystem rs = build_root_system("A2");
    LieAlgebra L = build_lie_algebra(rs);
    int n = L.dim();
    auto bf = [&](const std::map<int, Rat>& v, int z) {
      Rat r = 0;
      for (const auto& [d, c] : v) r += c * L.bform.at(d, z);
      return r;
    };
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          Rat lhs = bf(L.bracket_of(x, y), z);
          std::map<int, Rat> xz = L.bracket_of(x, z);
          Rat rhs = 0;
          for (const auto& [d, c] : xz) rhs += c * L.bform.at(y, d);
          CHECK(lhs == -rhs);
        }
  }
  SECTION("structure constants reproduce the action on an independent module") {
    RootSystem rs = build_root_system("A2");
    LieAlgebra L = build_lie_algebra(rs);
    WeightedModule M = build_irrep(rs, Weight({Rat(1), Rat(0)}));
    auto mats = module_action(L, M);
    for (int a = 0; a < L.dim(); ++a)
      for (int b = 0; b < L.dim(); ++b) {
        SpMat lhs = SpMat::commutator(mats[a], mats[b]);
        SpMat rhs(M.dim(), M.dim());
        for (const auto& [d, c] : L.bracket_of(a, b)) rhs = rhs + mats[d] * c;
        CHECK((lhs - rhs).is_zero());
      }
  }
  SECTION("products: A1xA1 factors commute") {
    RootSystem rs = build_root_system("A1xA1");
    LieAlgebra L = build_lie_algebra(rs);
    // e of the first factor vs everything of the second
    int e1 = L.root_index(rs.simple_roots[0]);
    for (int b = 0; b < L.dim(); ++b) {
      Weight wb = L.basis_weight(b);
      bool second_factor = (b == 1) || (!wb.is_zero() && wb.coords[0] == 0);
      if (second_factor) CHECK(L.bracket_of(e1, b).empty());
    }
  }
}

namespace {

struct Sl2Ctx {
  RootSystem rs = build_root_system("A1");
  LieAlgebra L = build_lie_algebra(rs);
  ParabolicData pd = build_parabolic(rs, {});
  PBWContext ctx = make_pbw_context(L, pd);
  int h = 0, e = L.pos_index(0), f = L.neg_index(0);
};

}  // namespace

TEST_CASE("pbw straightening, sl2") {
  Sl2Ctx s;
  SECTION("e f -> f e + h") {
    PBWElement r = pbw_word(s.ctx, {s.e, s.f});
    PBWElement expect;
    expect.terms[{s.f, s.e}] = 1;
    expect.terms[{s.h}] = 1;
    CHECK(r == expect);
  }
  SECTION("e f e -> f e^2 + h e") {
    PBWElement r = pbw_word(s.ctx, {s.e, s.f, s.e});
    PBWElement expect;
    expect.terms[{s.f, s.e, s.e}] = 1;
    expect.terms[{s.h, s.e}] = 1;
    CHECK(r == expect);
  }
  SECTION("ordered monomials are fixed points") {
    for (PBWMonomial m :
         {PBWMonomial{}, {s.f}, {s.f, s.h}, {s.f, s.h, s.e}, {s.h, s.h}}) {
      PBWElement r = pbw_word(s.ctx, m);
      REQUIRE(r.terms.size() == 1);
      CHECK(r.terms.begin()->first == m);
      CHECK(r.terms.begin()->second == 1);
    }
  }
  SECTION("truncation raises") {
    PBWMonomial big(7, s.h);
    CHECK_THROWS_AS(pbw_word(s.ctx, big), std::runtime_error);
  }
}

TEST_CASE("pbw normalization agrees with matrix evaluation") {
  RootSystem rs = build_root_system("A2");
  LieAlgebra L = build_lie_algebra(rs);
  ParabolicData pd = build_parabolic(rs, {0});
  PBWContext ctx = make_pbw_context(L, pd);
  WeightedModule M = build_irrep(rs, Weight({Rat(1), Rat(1)}));
  auto mats = module_action(L, M);
  std::vector<PBWMonomial> words = {
      {ctx.L->pos_index(0), ctx.L->neg_index(0)},
      {ctx.L->pos_index(2), ctx.L->neg_index(1), 0},
      {ctx.L->pos_index(0), ctx.L->pos_index(1), ctx.L->neg_index(2)},
      {1, ctx.L->pos_index(1), 0, ctx.L->neg_index(1)},
  };
  for (const auto& w : words) {
    SpMat direct = SpMat::identity(M.dim());
    for (int a : w) direct = direct * mats[a];
    SpMat via = pbw_action(mats, pbw_word(ctx, w), M.dim());
    CHECK((direct - via).is_zero());
  }
}

TEST_CASE("antipode") {
  Sl2Ctx s;
  SECTION("letters negate, 1 is fixed") {
    for (int a : {s.h, s.e, s.f}) {
      PBWElement x = pbw_word(s.ctx, {a});
      CHECK(antipode(s.ctx, x) == x * Rat(-1));
    }
    CHECK(antipode(s.ctx, pbw_one()) == pbw_one());
  }
  SECTION("(ef)# = fe = ef - h") {
    PBWElement ef = pbw_word(s.ctx, {s.e, s.f});
    PBWElement fe = pbw_word(s.ctx, {s.f, s.e});
    CHECK(antipode(s.ctx, ef) == fe);
    PBWElement expect = ef - pbw_word(s.ctx, {s.h});
    CHECK(fe == expect);
  }
  SECTION("anti-homomorphism and involution on degree <= 4 samples") {
    RootSystem rs = build_root_system("A2");
    LieAlgebra L = build_lie_algebra(rs);
    ParabolicData pd = build_parabolic(rs, {});
    PBWContext ctx = make_pbw_context(L, pd, 10);
    std::vector<PBWElement> sample = {
        pbw_word(ctx, {L.pos_index(0), L.neg_index(2)}),
        pbw_word(ctx, {0, L.pos_index(2), L.neg_index(0), 1}),
        casimir(ctx),
    };
    for (const auto& x : sample)
      for (const auto& y : sample) {
        CHECK(antipode(ctx, antipode(ctx, x)) == x);
        CHECK(antipode(ctx, pbw_mul(ctx, x, y)) ==
              pbw_mul(ctx, antipode(ctx, y), antipode(ctx, x)));
      }
  }
}

TEST_CASE("casimir") {
  SECTION("sl2: (1/2)h^2 + h + 2fe") {
    Sl2Ctx s;
    PBWElement om = casimir(s.ctx);
    PBWElement expect;
    expect.terms[{s.h, s.h}] = Rat(1, 2);
    expect.terms[{s.h}] = 1;
    expect.terms[{s.f, s.e}] = 2;
    CHECK(om == expect);
  }
  SECTION("centrality and scalar action") {
    struct Case {
      const char* label;
      std::vector<Rat> hw;
    };
    const Case cases[] = {
        {"A1", {3}}, {"A2", {1, 1}}, {"B2", {0, 1}}, {"A1xA1", {1, 2}}};
    for (const auto& c : cases) {
      RootSystem rs = build_root_system(c.label);
      LieAlgebra L = build_lie_algebra(rs);
      ParabolicData pd = build_parabolic(rs, {});
      PBWContext ctx = make_pbw_context(L, pd);
      PBWElement om = casimir(ctx);
      INFO(c.label);
      CHECK(pbw_is_central(ctx, om, all_letters(L)));
      Weight hw{c.hw};
      WeightedModule M = build_irrep(rs, hw);
      auto mats = module_action(L, M);
      SpMat act = pbw_action(mats, om, M.dim());
      Rat scalar =
          rs.form(hw + rs.rho, hw + rs.rho) - rs.form(rs.rho, rs.rho);
      CHECK((act - SpMat::identity(M.dim()) * scalar).is_zero());
    }
  }
  SECTION("acts on F^(m) by (m^2+2m)/2 and on the trivial module by 0") {
    Sl2Ctx s;
    PBWElement om = casimir(s.ctx);
    for (int m = 0; m <= 4; ++m) {
      WeightedModule M = build_irrep(s.rs, Weight({Rat(m)}));
      auto mats = module_action(s.L, M);
      SpMat act = pbw_action(mats, om, M.dim());
      Rat scalar(m * m + 2 * m, 2);
      scalar.canonicalize();
      CHECK((act - SpMat::identity(M.dim()) * scalar).is_zero());
    }
  }
}

TEST_CASE("harish-chandra projection") {
  SECTION("sl2 Borel: p(Omega) = (1/2)h^2 + h") {
    Sl2Ctx s;
    PBWElement pz = hc_project(s.ctx, casimir(s.ctx));
    PBWElement expect;
    expect.terms[{s.h, s.h}] = Rat(1, 2);
    expect.terms[{s.h}] = 1;
    CHECK(pz == expect);
  }
  SECTION("identity on U(h)") {
    RootSystem rs = build_root_system("A2");
    LieAlgebra L = build_lie_algebra(rs);
    ParabolicData pd = build_parabolic(rs, {0});
    PBWContext ctx = make_pbw_context(L, pd);
    int ep = L.root_index(pd.h_roots[0]);
    int em = L.root_index(-pd.h_roots[0]);
    PBWElement x = pbw_word(ctx, {em, 0, 1, ep}) + pbw_word(ctx, {0, 0});
    CHECK(hc_project(ctx, x) == x);
  }
  SECTION("p(Omega) evaluates to the quadratic character, A2 Borel") {
    RootSystem rs = build_root_system("A2");
    LieAlgebra L = build_lie_algebra(rs);
    ParabolicData pd = build_parabolic(rs, {});
    PBWContext ctx = make_pbw_context(L, pd);
    PBWElement pz = hc_project(ctx, casimir(ctx));
    for (int a = -2; a <= 2; ++a)
      for (int b = -1; b <= 2; ++b) {
        Weight mu({Rat(a), Rat(b)});
        // rho_h = 0 at the Borel: parameter mu evaluates h_i at mu_i
        CHECK(hc_scalar(ctx, pz, mu, true) ==
              rs.form(mu + rs.rho, mu + rs.rho) - rs.form(rs.rho, rs.rho));
      }
  }
  SECTION("p(Omega) is central for the Levi") {
    RootSystem rs = build_root_system("B2");
    LieAlgebra L = build_lie_algebra(rs);
    for (int levi : {0, 1}) {
      ParabolicData pd = build_parabolic(rs, {levi});
      PBWContext ctx = make_pbw_context(L, pd);
      PBWElement pz = hc_project(ctx, casimir(ctx));
      CHECK(pbw_is_central(ctx, pz, h_letters(ctx)));
    }
  }
}

TEST_CASE("harish-chandra scalars and the rho(u) shift") {
  SECTION("sl2: hc_scalar(Omega, (m+1)) = ((m+1)^2 - 1)/2") {
    Sl2Ctx s;
    PBWElement om = casimir(s.ctx);
    for (int m = 0; m <= 5; ++m) {
      Rat expect((m + 1) * (m + 1) - 1, 2);
      expect.canonicalize();
      CHECK(hc_scalar(s.ctx, om, Weight({Rat(m + 1)})) == expect);
    }
    CHECK(hc_scalar(s.ctx, pbw_one(), Weight({Rat(7)})) == 1);
  }
  SECTION("argument-level Weyl invariance") {
    RootSystem rs = build_root_system("B2");
    LieAlgebra L = build_lie_algebra(rs);
    ParabolicData pd = build_parabolic(rs, {});
    PBWContext ctx = make_pbw_context(L, pd);
    PBWElement om = casimir(ctx);
    Weight xi({Rat(2), Rat(3)});
    Rat base = hc_scalar(ctx, om, xi);
    for (const auto& w : rs.weyl)
      CHECK(hc_scalar(ctx, om, rs.apply(w.matrix, xi)) == base);
  }
  SECTION("verify_hc_shift across types and parabolics") {
    struct Case {
      const char* label;
      std::set<int> levi;
      std::vector<Rat> lambda;
    };
    const Case cases[] = {
        {"A1", {}, {4}},       {"A2", {}, {1, 1}},  {"A2", {0}, {1, 0}},
        {"A2", {1}, {2, 1}},   {"B2", {}, {0, 1}},  {"B2", {0}, {1, 1}},
    };
    for (const auto& c : cases) {
      RootSystem rs = build_root_system(c.label);
      LieAlgebra L = build_lie_algebra(rs);
      ParabolicData pd = build_parabolic(rs, c.levi);
      PBWContext ctx = make_pbw_context(L, pd);
      INFO(c.label);
      CHECK(verify_hc_shift(ctx, casimir(ctx), Weight(c.lambda)));
    }
  }
  SECTION("rescaling the probe rescales both sides, shift outcome unchanged") {
    RootSystem rs = build_root_system("A2");
    LieAlgebra L = build_lie_algebra(rs);
    ParabolicData pd = build_parabolic(rs, {0});
    PBWContext ctx = make_pbw_context(L, pd);
    PBWElement om = casimir(ctx) * Rat(1, 3);
    CHECK(hc_project(ctx, om) == hc_project(ctx, casimir(ctx)) * Rat(1, 3));
    CHECK(verify_hc_shift(ctx, om, Weight({Rat(1), Rat(1)})));
  }
}
