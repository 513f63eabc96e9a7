#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rho/weights.hpp"

using namespace rho;

namespace {

WeightVec W(std::vector<int> v) { return weight_of_ints(v); }

WeightVec Wh(std::vector<int> doubled) {
  WeightVec w;
  for (int d : doubled) w.push_back(HalfInt(d));
  return w;
}

BCDParams bcd(Family f, int m, WeightVec lam) {
  return BCDParams{f, m, std::move(lam)};
}

SubsetS S(std::vector<int> e, int m) { return SubsetS(std::move(e), m); }

bool weakly_decreasing(const WeightVec& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("half integers parse and print") {
  CHECK(parse_half_int("3") == HalfInt::of_int(3));
  CHECK(parse_half_int("-2") == HalfInt::of_int(-2));
  CHECK(parse_half_int("7/2") == HalfInt(7));
  CHECK(parse_half_int("-1/2") == HalfInt(-1));
  CHECK_THROWS_AS(parse_half_int("1/3"), input_error);
  CHECK(HalfInt(3).str() == "3/2");
  CHECK(HalfInt(4).str() == "2");
}

TEST_CASE("delta vectors") {
  CHECK(delta_a(4) == W({3, 2, 1, 0}));
  CHECK(delta_bcd(bcd(Family::C, 4, W({0, 0, 0, 0}))) == W({4, 3, 2, 1}));
  CHECK(delta_bcd(bcd(Family::B, 2, W({0, 0}))) == Wh({3, 1}));
  CHECK(delta_bcd(bcd(Family::D, 3, W({0, 0, 0}))) == W({2, 1, 0}));
}

TEST_CASE("validate") {
  CHECK_THROWS_AS(validate(bcd(Family::C, 3, W({1, 2, 0}))), input_error);
  CHECK_NOTHROW(validate(bcd(Family::B, 2, Wh({3, 1}))));
  CHECK_THROWS_AS(validate(bcd(Family::C, 2, Wh({3, 1}))), input_error);
  CHECK_THROWS_AS(validate(bcd(Family::D, 2, Wh({3, 2}))), input_error);
  CHECK_THROWS_AS(validate(bcd(Family::C, 2, W({0, -1}))), input_error);
  CHECK_THROWS_AS(validate(TypeAParams{1, 2, {0, 0, 0}}), input_error);
  CHECK_THROWS_AS(validate(TypeAParams{2, 2, {0, 1, 1, 1}}), input_error);
}

TEST_CASE("beta in type A") {
  TypeAParams p{2, 2, {1, 1, 0, 0}};
  BetaA b = beta_type_a(p, S({1, 3}, 4));
  CHECK(b.beta1 == W({1, -1}));
  CHECK(b.beta2 == W({2, 0}));

  TypeAParams p2{2, 2, {2, 0, 0, 0}};
  BetaA b2 = beta_type_a(p2, S({2, 4}, 4));
  CHECK(b2.beta1 == W({-1, -2}));
  CHECK(b2.beta2 == W({4, 1}));

  TypeAParams p3{1, 1, {0, 0}};
  BetaA b3 = beta_type_a(p3, S({1}, 2));
  CHECK(b3.beta1 == W({0}));
  CHECK(b3.beta2 == W({0}));

  CHECK_THROWS_AS(beta_type_a(p, S({1}, 4)), input_error);
}

TEST_CASE("beta in BCD with sorting sign") {
  BCDParams p = bcd(Family::C, 4, W({1, 0, 0, 0}));
  BetaBCD b = beta_bcd(p, S({1, 3}, 4));
  CHECK(b.beta == W({-1, -2, -4, -6}));

  BetaBCD b2 = beta_bcd(p, S({2, 3}, 4));
  CHECK(b2.beta == W({1, -2, -4, -4}));
  CHECK(b2.sort_sign == -1);

  BetaBCD b3 = beta_bcd(p, S({}, 4));
  CHECK(b3.beta == p.lambda);
  CHECK(b3.sort_sign == 1);
}

TEST_CASE("rho weights") {
  RhoWeights r = rho_weights(TypeAParams{2, 2, {1, 1, 0, 0}});
  CHECK(r.top == W({1, -1}));
  CHECK(r.bot == W({2, 0}));

  RhoWeights rc = rho_weights(bcd(Family::C, 4, W({1, 0, 0, 0})));
  CHECK(rc.top == W({3, 1}));
  CHECK(rc.bot == W({2, 1}));

  RhoWeights rb = rho_weights(bcd(Family::B, 4, W({2, 1, 0, 0})));
  CHECK(rb.top == Wh({7, 1}));
  CHECK(rb.bot == Wh({5, 1}));

  CHECK_THROWS_AS(rho_weights(TypeAParams{3, 1, {0, 0, 0, 0}}),
                  unsupported_error);
}

TEST_CASE("internal degrees") {
  TypeAParams pa{2, 2, {1, 1, 0, 0}};
  CHECK(internal_degree(pa, S({1, 3}, 4)) == 2);
  CHECK(internal_degree(pa, S({1, 2}, 4)) == 0);
  CHECK(internal_degree(pa, S({3, 4}, 4)) == 6);

  BCDParams pc = bcd(Family::C, 4, W({1, 0, 0, 0}));
  CHECK(internal_degree(pc, S({2, 4}, 4)) == 4);
  CHECK(internal_degree(pc, S({}, 4)) == 0);
  CHECK(internal_degree(pc, S({1}, 4)) == 5);

  // family B counts V^* in degree 1: lambda = 0, m = 2 hook degrees 0,1,3,4
  BCDParams pb = bcd(Family::B, 2, W({0, 0}));
  CHECK(internal_degree(pb, S({}, 2)) == 0);
  CHECK(internal_degree(pb, S({2}, 2)) == 1);
  CHECK(internal_degree(pb, S({1}, 2)) == 3);
  CHECK(internal_degree(pb, S({1, 2}, 2)) == 4);

  // spin component of D: printed twists of the odd m = 4 spinor resolution
  BCDParams pd = bcd(Family::D, 4, Wh({1, 1, 1, 1}));
  CHECK(internal_degree(pd, S({4}, 4)) == 1);
  CHECK(internal_degree(pd, S({3}, 4)) == 2);
  CHECK(internal_degree(pd, S({2, 3, 4}, 4)) == 5);
  CHECK(internal_degree(pd, S({1}, 4)) == 4);
  CHECK(internal_degree(pd, S({1, 2, 3}, 4)) == 8);
  // and the even component
  CHECK(internal_degree(pd, S({3, 4}, 4)) == 2);
  CHECK(internal_degree(pd, S({1, 2, 3, 4}, 4)) == 8);
}

TEST_CASE("hom degrees") {
  BCDParams pc = bcd(Family::C, 3, W({1, 0, 0}));
  CHECK(hom_degree(pc, S({}, 3)) == 0);
  CHECK(hom_degree(pc, S({3}, 3)) == 1);
  CHECK(hom_degree(pc, S({2, 3}, 3)) == 3);
  CHECK(hom_degree(pc, S({1, 2, 3}, 3)) == 6);

  BCDParams pd = bcd(Family::D, 4, W({0, 0, 0, 0}));
  CHECK(hom_degree(pd, S({3, 4}, 4)) == 1);
  CHECK(hom_degree(pd, S({1, 2, 3, 4}, 4)) == 6);
}

TEST_CASE("weight sum rule in type A") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= n && n + k <= 8; ++k) {
      std::vector<int> lam(n + k);
      for (int i = 0; i < n + k; ++i) lam[i] = (n + k - i) / 2;
      TypeAParams p{n, k, lam};
      long lam_sum = 0;
      for (int v : lam) lam_sum += v;
      for (const SubsetS& s : SubsetS::subsets_of_size(n + k, n)) {
        BetaA b = beta_type_a(p, s);
        CHECK((weight_sum(b.beta1) + weight_sum(b.beta2)).as_int() == lam_sum);
        CHECK(weakly_decreasing(b.beta1));
        CHECK(weakly_decreasing(b.beta2));
      }
    }
  }
}

TEST_CASE("beta dominance and hook cross-check in BCD") {
  for (Family f : {Family::B, Family::C, Family::D}) {
    for (int m = 1; m <= 8; ++m) {
      BCDParams p = bcd(f, m, WeightVec(m, HalfInt(0)));
      for (const SubsetS& s : SubsetS::all_subsets(m)) {
        BetaBCD b = beta_bcd(p, s);
        CHECK(weakly_decreasing(b.beta));
        // -beta^op equals the nested hook union
        std::vector<int> rev;
        for (int i = m - 1; i >= 0; --i) rev.push_back((-b.beta[i]).as_int());
        CHECK(Partition(rev) == hook_partition(f, s));
        // sign of the sorted inverse
        long e = s.size() + s.sigma();
        CHECK(beta_bcd(p, s.inverse()).sort_sign == (e % 2 == 0 ? 1 : -1));
      }
    }
  }
}

TEST_CASE("internal degree strictly increases along covers") {
  // The coset of the term indexed by S is keyed by T = S^inv in the extended
  // (resp. semi-extended) Gale order; twists must grow along its covers.
  BCDParams pc = bcd(Family::C, 4, W({2, 1, 1, 0}));
  BCDParams pd = bcd(Family::D, 4, W({2, 1, 1, 0}));
  auto subs = SubsetS::all_subsets(4);
  for (const auto& a : subs)
    for (const auto& b : subs) {
      if (a == b) continue;
      if (gale_leq(GaleKind::Extended, a, b) &&
          b.rank_ext() == a.rank_ext() + 1)
        CHECK(internal_degree(pc, b.inverse()) >
              internal_degree(pc, a.inverse()));
      if (gale_leq(GaleKind::SemiExtended, a, b) &&
          b.rank_semi_ext() == a.rank_semi_ext() + 1)
        CHECK(internal_degree(pd, b.inverse()) >
              internal_degree(pd, a.inverse()));
    }
  TypeAParams pa{2, 2, {3, 1, 0, 0}};
  auto nsubs = SubsetS::subsets_of_size(4, 2);
  for (const auto& a : nsubs)
    for (const auto& b : nsubs) {
      if (a == b) continue;
      if (gale_leq(GaleKind::Fixed, a, b) && b.rank_a(2) == a.rank_a(2) + 1)
        CHECK(internal_degree(pa, b) > internal_degree(pa, a));
    }
}
