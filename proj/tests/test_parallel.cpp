#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rho/verify.hpp"

using namespace rho;

// The OpenMP kernels must reproduce the serial reference bit for bit: all
// arithmetic is exact and the combines are plain additions, so scheduling
// cannot change any result.

TEST_CASE("determinant kernels agree on structured matrices") {
  TypeAParams pa{3, 2, {2, 1, 1, 0, 0}};
  for (BigMatrixKind k : {BigMatrixKind::A, BigMatrixKind::Aprime}) {
    PolyMatrix m = build_matrix(k, pa);
    CHECK(determinant(m) == determinant_serial(m));
  }
  BCDParams pb{Family::B, 4, weight_of_ints({2, 1, 1, 0})};
  for (BigMatrixKind k : {BigMatrixKind::M, BigMatrixKind::Mprime}) {
    PolyMatrix m = build_matrix(k, pb);
    CHECK(determinant(m) == determinant_serial(m));
  }
}

TEST_CASE("subset-sum kernels agree across families") {
  std::vector<BCDParams> insts = {
      {Family::B, 3, weight_of_ints({2, 0, 0})},
      {Family::C, 4, weight_of_ints({1, 1, 0, 0})},
      {Family::D, 4, WeightVec(4, HalfInt(1))},
  };
  for (const auto& p : insts) {
    CHECK(graded_character(p) == graded_character_serial(p));
    CHECK(graded_character(p, SpinComponent::Even) ==
          graded_character_serial(p, SpinComponent::Even));
  }
  TypeAParams pa{3, 3, {1, 1, 0, 0, 0, 0}};
  CHECK(graded_character(pa) == graded_character_serial(pa));
}

TEST_CASE("spot oracle triangle at m = 5") {
  CHECK(verify_det_form(BCDParams{Family::B, 5,
                                  weight_of_ints({2, 1, 1, 0, 0})})
            .pass);
  CHECK(verify_det_form(BCDParams{Family::C, 5,
                                  weight_of_ints({2, 1, 1, 0, 0})})
            .pass);
  CHECK(verify_det_form(BCDParams{Family::D, 5, WeightVec(5, HalfInt(3))})
            .pass);
  CHECK(
      verify_divisibility(BCDParams{Family::C, 5,
                                    weight_of_ints({2, 1, 1, 0, 0})})
          .first.pass);
  CHECK(verify_equidistribution(
            BCDParams{Family::D, 5, WeightVec(5, HalfInt(3))})
            .pass);
}

TEST_CASE("spot oracle triangle at m = 6") {
  BCDParams p{Family::C, 6, weight_of_ints({1, 1, 0, 0, 0, 0})};
  CHECK(verify_det_form(p).pass);
  CHECK(verify_divisibility(p).first.pass);
  CHECK(verify_equidistribution(p).pass);
  CHECK(verify_factorization(p).pass);
}
