#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "rho/subsets.hpp"

using namespace rho;

namespace {

SubsetS S(std::vector<int> e, int m) { return SubsetS(std::move(e), m); }

// brute-force order embedding for cross-checking the greedy one
bool embeds_brute(const std::vector<int>& a, const std::vector<int>& b,
                  std::size_t ia = 0, std::size_t ib = 0) {
  if (ia == a.size()) return true;
  for (std::size_t j = ib; j < b.size(); ++j)
    if (a[ia] <= b[j] && embeds_brute(a, b, ia + 1, j + 1)) return true;
  return false;
}

bool leq_brute(GaleKind kind, const SubsetS& a, const SubsetS& b) {
  if (kind == GaleKind::SemiExtended && (a.size() - b.size()) % 2 != 0)
    return false;
  return embeds_brute(a.elements(), b.elements());
}

long rank_for(GaleKind kind, const SubsetS& s, int n) {
  switch (kind) {
    case GaleKind::Fixed:
      return s.rank_a(n);
    case GaleKind::Extended:
      return s.rank_ext();
    case GaleKind::SemiExtended:
      return s.rank_semi_ext();
  }
  return 0;
}

}  // namespace

TEST_CASE("subset statistics") {
  SubsetS s = S({2, 3, 6}, 7);
  CHECK(s.inverse() == S({2, 5, 6}, 7));
  CHECK(s.inverse().sigma() == 13);
  CHECK(s.slice(0) == S({2, 6}, 7));
  CHECK(s.slice(1) == S({3}, 7));

  SubsetS empty = S({}, 5);
  CHECK(empty.sigma() == 0);
  CHECK(empty.rank_ext() == 0);
  CHECK(empty.rank_semi_ext() == 0);

  CHECK(S({1, 2, 6}, 6).rank_a(3) == 3);
  CHECK_THROWS_AS(S({1, 2}, 6).rank_a(3), input_error);

  auto st = subset_stats(s);
  CHECK(st.sigma == 11);
  CHECK(st.complement == S({1, 4, 5, 7}, 7));
}

TEST_CASE("inverse is an involution with the sigma rule") {
  for (int m = 0; m <= 8; ++m) {
    for (const SubsetS& s : SubsetS::all_subsets(m)) {
      CHECK(s.inverse().inverse() == s);
      CHECK(s.inverse().sigma() == (long)s.size() * (m + 1) - s.sigma());
    }
  }
}

TEST_CASE("gale order examples") {
  CHECK(gale_leq(GaleKind::Extended, S({1, 2}, 3), S({1, 3}, 3)));
  CHECK(!gale_leq(GaleKind::Extended, S({1, 2}, 3), S({3}, 3)));
  CHECK(!gale_leq(GaleKind::Extended, S({3}, 3), S({1, 2}, 3)));

  CHECK(gale_leq(GaleKind::SemiExtended, S({1, 2}, 4), S({3, 4}, 4)));
  CHECK(!gale_leq(GaleKind::SemiExtended, S({1}, 4), S({1, 2}, 4)));

  CHECK(gale_leq(GaleKind::Fixed, S({1, 3}, 4), S({1, 3}, 4)));
  CHECK_THROWS_AS(gale_leq(GaleKind::Fixed, S({1}, 4), S({1, 2}, 4)),
                  input_error);
  CHECK_THROWS_AS(gale_leq(GaleKind::Extended, S({1}, 4), S({1}, 5)),
                  input_error);
}

TEST_CASE("gale orders are partial orders matching brute force") {
  for (int m = 1; m <= 5; ++m) {
    auto subs = SubsetS::all_subsets(m);
    for (GaleKind kind : {GaleKind::Extended, GaleKind::SemiExtended}) {
      for (const auto& a : subs) {
        CHECK(gale_leq(kind, a, a));
        for (const auto& b : subs) {
          bool ab = gale_leq(kind, a, b);
          CHECK(ab == leq_brute(kind, a, b));
          if (ab && gale_leq(kind, b, a)) CHECK(a == b);
          if (!ab) continue;
          for (const auto& c : subs)
            if (gale_leq(kind, b, c)) CHECK(gale_leq(kind, a, c));
        }
      }
    }
    // fixed kind, size by size
    for (int r = 0; r <= m; ++r) {
      auto level = SubsetS::subsets_of_size(m, r);
      for (const auto& a : level) {
        CHECK(gale_leq(GaleKind::Fixed, a, a));
        for (const auto& b : level) {
          bool ab = gale_leq(GaleKind::Fixed, a, b);
          if (ab && gale_leq(GaleKind::Fixed, b, a)) CHECK(a == b);
          if (!ab) continue;
          for (const auto& c : level)
            if (gale_leq(GaleKind::Fixed, b, c))
              CHECK(gale_leq(GaleKind::Fixed, a, c));
        }
      }
    }
  }
}

TEST_CASE("covers raise rank by one") {
  for (int m = 1; m <= 5; ++m) {
    auto subs = SubsetS::all_subsets(m);
    for (GaleKind kind : {GaleKind::Extended, GaleKind::SemiExtended}) {
      for (const auto& a : subs)
        for (const auto& b : subs) {
          if (a == b || !gale_leq(kind, a, b)) continue;
          bool cover = true;
          for (const auto& c : subs)
            if (c != a && c != b && gale_leq(kind, a, c) &&
                gale_leq(kind, c, b))
              cover = false;
          if (cover)
            CHECK(rank_for(kind, b, 0) == rank_for(kind, a, 0) + 1);
        }
    }
    for (int r = 1; r < m; ++r) {
      auto level = SubsetS::subsets_of_size(m, r);
      for (const auto& a : level)
        for (const auto& b : level) {
          if (a == b || !gale_leq(GaleKind::Fixed, a, b)) continue;
          bool cover = true;
          for (const auto& c : level)
            if (c != a && c != b && gale_leq(GaleKind::Fixed, a, c) &&
                gale_leq(GaleKind::Fixed, c, b))
              cover = false;
          if (cover) CHECK(b.rank_a(r) == a.rank_a(r) + 1);
        }
    }
  }
}

TEST_CASE("partitions") {
  Partition p({4, 2, 1});
  CHECK(p.transpose() == Partition({3, 2, 1, 1}));
  CHECK(p.transpose().transpose() == p);
  CHECK(!p.is_self_conjugate());
  CHECK(Partition({3, 2, 1}).diagonal_rank() == 2);
  CHECK(Partition().diagonal_rank() == 0);
  CHECK_THROWS_AS(Partition({1, 2}), input_error);
}

TEST_CASE("hook partitions") {
  CHECK(hook_partition(Family::C, S({2, 4}, 4)) == Partition({4, 3, 1}));
  CHECK(hook_partition(Family::D, S({1, 2}, 4)) == Partition({3, 3, 2, 2}));
  CHECK(hook_partition(Family::B, S({2, 4}, 4)) == Partition({3, 2, 1}));
  CHECK(hook_partition(Family::C, S({}, 4)) == Partition());
}

TEST_CASE("hook complement symmetry") {
  // C: S and S^c give complementary partitions in the m x (m+1) rectangle;
  // D: same in the 2n x (2n-1) rectangle.
  for (int m = 1; m <= 7; ++m) {
    for (const SubsetS& s : SubsetS::all_subsets(m)) {
      auto complement_in = [&](const Partition& p, int rows, int cols) {
        std::vector<int> parts;
        for (int i = rows - 1; i >= 0; --i) parts.push_back(cols - p.part(i));
        return Partition(parts);
      };
      Partition pc = hook_partition(Family::C, s);
      Partition pcc = hook_partition(Family::C, s.complement());
      CHECK(pcc == complement_in(pc, m, m + 1));
      Partition pd = hook_partition(Family::D, s);
      Partition pdc = hook_partition(Family::D, s.complement());
      CHECK(pdc == complement_in(pd, m, m - 1));
    }
  }
}

TEST_CASE("path partitions") {
  CHECK(path_partition(S({1, 2, 6, 8}, 8), 4) == Partition({4, 3}));
  CHECK(path_partition(S({1, 2, 3}, 6), 3) == Partition());
  CHECK(path_partition(S({2, 4, 6}, 6), 3) == Partition({3, 2, 1}));
  CHECK_THROWS_AS(path_partition(S({1}, 4), 2), input_error);

  // complement rule: alpha(S^c) is the transposed box complement of alpha(S)
  for (int n = 1; n <= 5; ++n) {
    for (const SubsetS& s : SubsetS::subsets_of_size(2 * n, n)) {
      Partition a = path_partition(s, n);
      std::vector<int> comp;
      for (int i = n - 1; i >= 0; --i) comp.push_back(n - a.part(i));
      CHECK(path_partition(s.complement(), n) ==
            Partition(comp).transpose());
    }
  }
}

TEST_CASE("self-conjugate enumeration") {
  auto all2 = enumerate_self_conjugate(2, false);
  CHECK(all2 == std::vector<Partition>{Partition(), Partition({1}),
                                       Partition({2, 1}), Partition({2, 2})});
  CHECK(enumerate_self_conjugate(0, false) ==
        std::vector<Partition>{Partition()});

  for (const auto& p : enumerate_self_conjugate(6, false)) {
    CHECK(p.is_self_conjugate());
    CHECK(p.part(0) <= 6);
    CHECK(p.length() <= 6);
  }
  // count inside the m x m box is 2^m
  CHECK(enumerate_self_conjugate(5, false).size() == 32);

  auto even4 = enumerate_self_conjugate(4, true);
  std::vector<Partition> expected = {
      Partition(),           Partition({2, 2}),
      Partition({3, 2, 1}),    Partition({3, 3, 2}),
      Partition({4, 2, 1, 1}), Partition({4, 3, 2, 1}),
      Partition({4, 4, 2, 2}), Partition({4, 4, 4, 4})};
  CHECK(even4 == expected);
}
