#include <catch2/catch_amalgamated.hpp>

#include "liecoh/rootsystem.hpp"

using namespace liecoh;

namespace {

// Classification table used as an independent oracle: (dim g, |W|).
struct TypeFacts {
  const char* label;
  int dim;
  long weyl_order;
};
const TypeFacts kFacts[] = {
    {"A1", 3, 2},    {"A2", 8, 6},     {"A3", 15, 24},  {"A4", 24, 120},
    {"B2", 10, 8},   {"B3", 21, 48},   {"B4", 36, 384}, {"C3", 21, 48},
    {"C4", 36, 384}, {"D4", 28, 192},  {"G2", 14, 12},  {"A1xA1", 6, 4},
    {"A2xA1", 11, 12}, {"B2xA1", 13, 16},
};

}  // namespace

TEST_CASE("classification table: positive root counts and Weyl orders") {
  for (const auto& f : kFacts) {
    RootSystem rs = build_root_system(f.label);
    INFO(f.label);
    CHECK(int(rs.positive_roots.size()) == (f.dim - rs.rank) / 2);
    CHECK(long(rs.weyl.size()) == f.weyl_order);
  }
}

TEST_CASE("unsupported labels are rejected") {
  CHECK_THROWS_AS(build_root_system("E8"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("A5"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("Z1"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(""), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("A2xA3"), std::invalid_argument);
}

TEST_CASE("A1 basics") {
  RootSystem rs = build_root_system("A1");
  REQUIRE(rs.positive_roots.size() == 1);
  CHECK(rs.rho.coords == std::vector<Rat>{1});
  // form_gram = (1/2): (w,w) with w = alpha/2, (alpha,alpha)=2.
  CHECK(rs.form_gram.at(0, 0) == Rat(1, 2));
}

TEST_CASE("A2 positive roots are the reflection closure of the simples") {
  RootSystem rs = build_root_system("A2");
  REQUIRE(rs.positive_roots.size() == 3);
  Weight a1 = rs.simple_roots[0], a2 = rs.simple_roots[1];
  CHECK(rs.is_positive_root(a1));
  CHECK(rs.is_positive_root(a2));
  CHECK(rs.is_positive_root(a1 + a2));
}

TEST_CASE("rho equals half the sum of positive roots, form is positive definite") {
  for (const char* label : {"A1", "A2", "B2", "G2", "B3", "D4", "A1xA1"}) {
    RootSystem rs = build_root_system(label);
    INFO(label);
    Weight half(rs.rank);
    for (const auto& r : rs.positive_roots) half = half + r;
    half = half * Rat(1, 2);
    CHECK(half == rs.rho);
    // symmetry + positive-definiteness via leading principal minors
    CHECK(rs.form_gram == rs.form_gram.transpose());
    for (int k = 1; k <= rs.rank; ++k) {
      Mat sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = rs.form_gram.at(i, j);
      // determinant via charpoly constant term: det = (-1)^k p(0)
      auto cp = sub.charpoly();
      Rat det = cp[0] * ((k % 2) ? -1 : 1);
      CHECK(det > 0);
    }
  }
}

TEST_CASE("parabolic decompositions") {
  SECTION("A1 Borel") {
    RootSystem rs = build_root_system("A1");
    ParabolicData pd = build_parabolic(rs, {});
    CHECK(pd.u_roots.size() == 1);
    CHECK(pd.h_roots.empty());
    CHECK(pd.rho_u == rs.rho);
  }
  SECTION("A2 Levi {1}") {
    RootSystem rs = build_root_system("A2");
    ParabolicData pd = build_parabolic(rs, {0});
    REQUIRE(pd.u_roots.size() == 2);
    REQUIRE(pd.h_roots.size() == 1);
    CHECK(pd.rho_u.coords == std::vector<Rat>{Rat(0), Rat(3, 2)});
  }
  SECTION("A2 full Levi is degenerate") {
    RootSystem rs = build_root_system("A2");
    ParabolicData pd = build_parabolic(rs, {0, 1});
    CHECK(pd.u_roots.empty());
    CHECK(pd.h_roots.size() == 3);
  }
  SECTION("invariants across types") {
    for (const char* label : {"A2", "B2", "G2", "B3"}) {
      RootSystem rs = build_root_system(label);
      for (int levi = 0; levi < rs.rank; ++levi) {
        ParabolicData pd = build_parabolic(rs, {levi});
        INFO(label << " levi " << levi);
        CHECK(pd.u_roots.size() + pd.h_roots.size() ==
              rs.positive_roots.size());
        // xi0 pairs to zero with h-roots and positively with u-roots
        for (const auto& r : pd.h_roots) CHECK(pd.xi0_pairing(r) == 0);
        for (const auto& r : pd.u_roots) CHECK(pd.xi0_pairing(r) > 0);
        // u is a subalgebra: sum of two u-roots, if a root, is a u-root
        for (const auto& a : pd.u_roots)
          for (const auto& b : pd.u_roots) {
            Weight s = a + b;
            if (rs.is_root(s)) {
              bool in_u = false;
              for (const auto& u : pd.u_roots)
                if (u == s) in_u = true;
              CHECK(in_u);
            }
          }
      }
    }
  }
}

TEST_CASE("w1 representatives") {
  SECTION("A1 Borel: identity and the reflection") {
    RootSystem rs = build_root_system("A1");
    ParabolicData pd = build_parabolic(rs, {});
    auto w1 = w1_representatives(pd);
    REQUIRE(w1.size() == 2);
    CHECK(w1[0].length == 0);
    CHECK(w1[1].length == 1);
  }
  SECTION("A2 Borel: whole group, length profile 1,2,2,1") {
    RootSystem rs = build_root_system("A2");
    ParabolicData pd = build_parabolic(rs, {});
    auto w1 = w1_representatives(pd);
    REQUIRE(w1.size() == 6);
    std::map<int, int> profile;
    for (const auto& w : w1) profile[w.length]++;
    CHECK(profile == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
  }
  SECTION("A2 Levi {1}: three representatives of lengths 0,1,2") {
    RootSystem rs = build_root_system("A2");
    ParabolicData pd = build_parabolic(rs, {0});
    auto w1 = w1_representatives(pd);
    REQUIRE(w1.size() == 3);
    CHECK(w1[0].length == 0);
    CHECK(w1[1].length == 1);
    CHECK(w1[2].length == 2);
  }
  SECTION("defining property and coset count") {
    for (const char* label : {"A2", "B2", "G2"}) {
      RootSystem rs = build_root_system(label);
      for (int levi = 0; levi < rs.rank; ++levi) {
        ParabolicData pd = build_parabolic(rs, {levi});
        auto w1 = w1_representatives(pd);
        // |W_H| = 2 for a single levi root
        CHECK(w1.size() == rs.weyl.size() / 2);
        for (const auto& w : w1)
          for (const auto& a : pd.h_roots)
            CHECK(rs.is_positive_root(rs.apply(w.inverse, a)));
      }
    }
  }
}

TEST_CASE("dot action") {
  SECTION("identity acts trivially") {
    RootSystem rs = build_root_system("B2");
    Weight l(std::vector<Rat>{Rat(2), Rat(5, 2)});
    CHECK(rs.dot_action(rs.weyl[0], l) == l);
  }
  SECTION("A1: s . (m) = (-m-2)") {
    RootSystem rs = build_root_system("A1");
    for (int m = -3; m <= 5; ++m) {
      Weight l(std::vector<Rat>{Rat(m)});
      CHECK(rs.dot_action(rs.weyl[1], l).coords ==
            std::vector<Rat>{Rat(-m - 2)});
    }
  }
  SECTION("A2: w0 . 0 = -2 rho") {
    RootSystem rs = build_root_system("A2");
    const WeylElement* w0 = nullptr;
    for (const auto& w : rs.weyl)
      if (!w0 || w.length > w0->length) w0 = &w;
    REQUIRE(w0->length == 3);
    CHECK(rs.dot_action(*w0, Weight(2)) == rs.rho * Rat(-2));
  }
  SECTION("dot is a twisted action: w1.(w2.l) = (w1 w2).l") {
    RootSystem rs = build_root_system("B2");
    Weight l(std::vector<Rat>{Rat(1), Rat(3)});
    for (size_t i = 0; i < rs.weyl.size(); i += 3)
      for (size_t j = 0; j < rs.weyl.size(); j += 2) {
        Weight lhs = rs.dot_action(rs.weyl[i], rs.dot_action(rs.weyl[j], l));
        Mat prod = rs.weyl[i].matrix * rs.weyl[j].matrix;
        Weight rhs = rs.apply(prod, l + rs.rho) - rs.rho;
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("singularity and condition (C)") {
  RootSystem rs = build_root_system("A2");
  CHECK(rs.singular_set(rs.rho).empty());
  CHECK(rs.singular_set(Weight(2)).size() == rs.positive_roots.size());

  ParabolicData pd = build_parabolic(rs, {});
  // regular target from regular source with dominant shift
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      Weight mu(std::vector<Rat>{Rat(a), Rat(b)});
      Weight nu(std::vector<Rat>{Rat(1), Rat(1)});
      if (rs.is_regular(mu + pd.rho_u) && rs.is_regular(mu + pd.rho_u + nu))
        CHECK(condition_C(mu, nu, pd));
    }
  // moving onto a wall fails (C)
  Weight mu(std::vector<Rat>{Rat(0), Rat(0)});   // mu + rho regular
  Weight nu(std::vector<Rat>{Rat(1), Rat(0)});
  Weight target = mu + pd.rho_u + nu;            // (2,1): regular
  CHECK(condition_C(mu, nu, pd));
  // singular source, regular target: translation away from a wall fails (C)
  Weight mu2(std::vector<Rat>{Rat(-1), Rat(0)});
  CHECK(!rs.is_regular(mu2 + pd.rho_u));
  CHECK(rs.is_regular(mu2 + pd.rho_u + nu));
  CHECK(!condition_C(mu2, nu, pd));
}

TEST_CASE("weyl orbit and dominant representative") {
  RootSystem rs = build_root_system("B2");
  Weight l(std::vector<Rat>{Rat(1), Rat(2)});
  auto orbit = rs.weyl_orbit(l);
  CHECK(orbit.size() == rs.weyl.size());  // regular weight: free orbit
  for (const auto& w : orbit)
    CHECK(rs.dominant_representative(w) == l);
}
