#include <catch2/catch_amalgamated.hpp>

#include "liecoh/extalg.hpp"

using namespace liecoh;

namespace {

Mat flatten_cols(const std::vector<Mat>& ms) {
  int d = ms[0].rows();
  Mat big(d * d, int(ms.size()));
  for (size_t k = 0; k < ms.size(); ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) big.at(i * d + j, int(k)) = ms[k].at(i, j);
  return big;
}

}  // namespace

TEST_CASE("defining relations") {
  SECTION("iota(X_1) e(xi_1) = 1 - e(xi_1) iota(X_1)") {
    int n = 2;
    EndElement lhs = normalize_end_word(n, {{'i', 0}, {'e', 0}});
    EndElement expect = end_one(n) - normalize_end_word(n, {{'e', 0}, {'i', 0}});
    CHECK(lhs == expect);
  }
  SECTION("squares vanish") {
    int n = 2;
    CHECK(normalize_end_word(n, {{'e', 0}, {'e', 0}}).is_zero());
    CHECK(normalize_end_word(n, {{'i', 1}, {'i', 1}}).is_zero());
  }
  SECTION("full anticommutation families as matrices, n = 3") {
    int n = 3;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Mat e_i = end_to_matrix(end_letter(n, 'e', i));
        Mat e_j = end_to_matrix(end_letter(n, 'e', j));
        Mat x_i = end_to_matrix(end_letter(n, 'i', i));
        Mat x_j = end_to_matrix(end_letter(n, 'i', j));
        CHECK((e_i * e_j + e_j * e_i).is_zero());
        CHECK((x_i * x_j + x_j * x_i).is_zero());
        Mat anti = e_i * x_j + x_j * e_i;
        CHECK(anti == (i == j ? Mat::identity(8) : Mat(8, 8)));
      }
  }
  SECTION("normal-form basis words are fixed points") {
    int n = 3;
    for (unsigned I = 0; I < 8; ++I)
      for (unsigned J = 0; J < 8; ++J) {
        EndElement x = normalize_end_word(n, end_basis_word(I, J, n));
        REQUIRE(x.terms.size() == 1);
        CHECK(x.terms.begin()->first == std::make_pair(I, J));
        CHECK(x.terms.begin()->second == 1);
      }
  }
}

TEST_CASE("matrix realization is a faithful homomorphism") {
  SECTION("n=2: the w_IJ matrices span a 16-dimensional algebra") {
    int n = 2;
    std::vector<Mat> mats;
    for (unsigned I = 0; I < 4; ++I)
      for (unsigned J = 0; J < 4; ++J)
        mats.push_back(end_to_matrix(normalize_end_word(n, end_basis_word(I, J, n))));
    CHECK(flatten_cols(mats).rank() == 16);
  }
  SECTION("n=3: 64-dimensional span") {
    int n = 3;
    std::vector<Mat> mats;
    for (unsigned I = 0; I < 8; ++I)
      for (unsigned J = 0; J < 8; ++J)
        mats.push_back(end_to_matrix(normalize_end_word(n, end_basis_word(I, J, n))));
    CHECK(flatten_cols(mats).rank() == 64);
  }
  SECTION("to_matrix(normalize(ab)) = to_matrix(a) to_matrix(b)") {
    int n = 3;
    std::vector<std::vector<EndLetter>> words = {
        {{'i', 0}, {'e', 1}, {'i', 2}, {'e', 0}},
        {{'e', 2}, {'e', 1}},
        {{'i', 1}, {'i', 0}},
        {{'e', 0}, {'i', 0}, {'e', 0}, {'i', 0}},
    };
    for (const auto& wa : words)
      for (const auto& wb : words) {
        EndElement a = normalize_end_word(n, wa);
        EndElement b = normalize_end_word(n, wb);
        CHECK(end_to_matrix(end_mul(a, b)) ==
              end_to_matrix(a) * end_to_matrix(b));
      }
  }
}

TEST_CASE("symbol map") {
  SECTION("1 -> 1 and w_IJ -> xi_I ^ X_J") {
    int n = 2;
    CHECK(symbol_s(end_one(n)).terms ==
          std::map<std::pair<unsigned, unsigned>, Rat>{{{0u, 0u}, Rat(1)}});
    EndElement w = normalize_end_word(n, {{'e', 0}, {'i', 1}});
    WedgeElement s = symbol_s(w);
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms.begin()->first == std::make_pair(1u, 2u));
    CHECK(symbol_s_inverse(n, s) == w);
  }
  SECTION("degree compatibility, n <= 3 exhaustive") {
    for (int n = 1; n <= 3; ++n)
      for (unsigned I = 0; I < (1u << n); ++I)
        for (unsigned J = 0; J < (1u << n); ++J) {
          EndElement w = normalize_end_word(n, end_basis_word(I, J, n));
          CHECK(w.parity() == wedge_parity(symbol_s(w)));
        }
  }
  SECTION("s([e(xi_i), w_IJ]) = iota(X_i) s(w_IJ), n <= 3 exhaustive") {
    for (int n = 1; n <= 3; ++n)
      for (int i = 0; i < n; ++i)
        for (unsigned I = 0; I < (1u << n); ++I)
          for (unsigned J = 0; J < (1u << n); ++J) {
            EndElement w = normalize_end_word(n, end_basis_word(I, J, n));
            EndElement comm = end_graded_commutator(end_letter(n, 'e', i), w);
            CHECK(symbol_s(comm) == wedge_contract(i, symbol_s(w)));
          }
  }
}

TEST_CASE("parity bookkeeping") {
  int n = 2;
  EndElement odd = end_letter(n, 'e', 0) + end_letter(n, 'i', 1);
  EndElement even = end_one(n) + normalize_end_word(n, {{'e', 0}, {'i', 0}});
  CHECK(odd.parity() == 1);
  CHECK(even.parity() == 0);
  CHECK((odd + even).parity() == -1);
  // odd graded commutator is the anticommutator
  EndElement sq = end_graded_commutator(odd, odd);
  CHECK(end_to_matrix(sq) ==
        end_to_matrix(odd) * end_to_matrix(odd) * Rat(2));
}
