#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <branchkit/patterns.hpp>

#include <set>

using namespace branchkit;

TEST_CASE("enumerate gl patterns")
{
  auto p2 = enumerate_gt_patterns({1, 0});
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].at(1, 1) == 0);
  CHECK(p2[1].at(1, 1) == 1);

  auto p3 = enumerate_gt_patterns({2, 1, 0});
  CHECK(p3.size() == 8);
  for (const auto & p : p3) CHECK(gt_valid(p));
  std::set<std::vector<long>> keys;
  for (const auto & p : p3) keys.insert(p.key());
  CHECK(keys.size() == p3.size());

  CHECK_THROWS(enumerate_gt_patterns({0, 1}));
}

TEST_CASE("enumerate type-C patterns")
{
  auto p1 = enumerate_c_patterns({-1});
  REQUIRE(p1.size() == 2);

  auto p5 = enumerate_c_patterns({-1, -1});
  CHECK(p5.size() == 5);
  for (const auto & p : p5) CHECK(c_valid(p));
  std::set<std::vector<long>> keys;
  for (const auto & p : p5) keys.insert(p.key());
  CHECK(keys.size() == p5.size());

  CHECK_THROWS(enumerate_c_patterns({1, 0}));
  CHECK_THROWS(enumerate_c_patterns({-2, -1}));
}

TEST_CASE("shift patterns")
{
  // zero pattern: every downward primed shift is invalid
  auto z = enumerate_c_patterns({0, 0});
  REQUIRE(z.size() == 1);
  for (int k = 1; k <= 2; ++k)
    for (int i = 1; i <= k; ++i) CHECK(!shift_c_pattern(z[0], k, i, true, -1).has_value());

  auto q = enumerate_c_patterns({-1});
  // (-1; 0) shifted by -delta'_{11} -> (-1; -1)
  TypeCPattern hi = q[1].pat(1, 1) == 0 ? q[1] : q[0];
  TypeCPattern lo = q[1].pat(1, 1) == 0 ? q[0] : q[1];
  auto s = shift_c_pattern(hi, 1, 1, true, -1);
  REQUIRE(s.has_value());
  CHECK(*s == lo);
  CHECK(!shift_c_pattern(lo, 1, 1, true, -1).has_value());
  CHECK_THROWS(shift_c_pattern(lo, 2, 1, true, -1));

  auto g = enumerate_gt_patterns({2, 0});
  for (const auto & p : g) {
    auto up = shift_gt_pattern(p, 1, 1, 1);
    if (up.has_value()) {
      auto back = shift_gt_pattern(*up, 1, 1, -1);
      REQUIRE(back.has_value());
      CHECK(*back == p);
    }
  }
  CHECK_THROWS(shift_gt_pattern(g[0], 3, 1, 1));
}

TEST_CASE("weyl dimension")
{
  AlgebraData gl3 = build_algebra({Family::GL, 3});
  CHECK(weyl_dimension(gl3, {0, 0, 0}) == 1);
  CHECK(weyl_dimension(gl3, {2, 1, 0}) == 8);
  CHECK(weyl_dimension(gl3, {1, 0, -1}) == 8);
  CHECK(weyl_dimension(gl3, {1, 0, 0}) == 3);

  AlgebraData sp2 = build_algebra({Family::SP, 2, SpIndexing::SIGNED});
  CHECK(weyl_dimension(sp2, {0, 0}) == 1);
  CHECK(weyl_dimension(sp2, {0, -1}) == 4);
  CHECK(weyl_dimension(sp2, {-1, -1}) == 5);

  AlgebraData sp2o = build_algebra({Family::SP, 2, SpIndexing::ONE_BASED});
  CHECK(weyl_dimension(sp2o, {1, 1}) == 5);
  CHECK(weyl_dimension(sp2o, {1, 0}) == 4);

  CHECK_THROWS(weyl_dimension(gl3, {0, 1, 0}));
  CHECK_THROWS(weyl_dimension(sp2, {1, 0}));
}

TEST_CASE("pattern count matches weyl dimension")
{
  AlgebraData gl3 = build_algebra({Family::GL, 3});
  for (std::vector<long> lam : {std::vector<long>{3, 1, 0}, {2, 2, 0}, {1, 1, 1}, {2, 0, -1}})
    CHECK(mpz_class(enumerate_gt_patterns(lam).size()) == weyl_dimension(gl3, lam));

  AlgebraData gl4 = build_algebra({Family::GL, 4});
  CHECK(mpz_class(enumerate_gt_patterns({2, 1, 1, 0}).size()) == weyl_dimension(gl4, {2, 1, 1, 0}));

  AlgebraData sp2 = build_algebra({Family::SP, 2, SpIndexing::SIGNED});
  for (std::vector<long> lam : {std::vector<long>{0, -1}, {0, -2}, {-1, -2}, {-2, -2}})
    CHECK(mpz_class(enumerate_c_patterns(lam).size()) == weyl_dimension(sp2, lam));

  AlgebraData sp3 = build_algebra({Family::SP, 3, SpIndexing::SIGNED});
  for (std::vector<long> lam : {std::vector<long>{0, 0, -1}, {0, -1, -1}, {-1, -1, -1}})
    CHECK(mpz_class(enumerate_c_patterns(lam).size()) == weyl_dimension(sp3, lam));
}

TEST_CASE("l coordinates")
{
  auto ps = enumerate_c_patterns({-1, -2});
  std::set<std::vector<std::vector<Rat>>> seen;
  for (const auto & p : ps) {
    LCoords c = l_coords(p);
    for (int k = 1; k <= p.n; ++k) {
      for (int i = 1; i <= k; ++i) {
        CHECK(c.at(k, i) == Rat(p.at(k, i)) - Rat(i) - Rat(1, 2));
        CHECK(c.pat(k, i) == Rat(p.pat(k, i)) - Rat(i) + Rat(1, 2));
        if (i > 1) CHECK(c.pat(k, i) < c.pat(k, i - 1));
      }
    }
    std::vector<std::vector<Rat>> flat = c.l;
    flat.insert(flat.end(), c.lp.begin(), c.lp.end());
    CHECK(seen.insert(flat).second);
  }
}

TEST_CASE("pattern order keys")
{
  auto g = enumerate_gt_patterns({1, 0});
  CHECK(pattern_order_key(g[1], PatternOrder::GL_LEX) > pattern_order_key(g[0], PatternOrder::GL_LEX));
  CHECK(pattern_order_key(g[0], PatternOrder::GL_LEX) == pattern_order_key(g[0], PatternOrder::GL_LEX));
  CHECK_THROWS(pattern_order_key(g[0], PatternOrder::SP_ROWSEQ));

  auto c = enumerate_c_patterns({-1, -1});
  std::set<std::vector<long>> keys;
  for (const auto & p : c) keys.insert(pattern_order_key(p, PatternOrder::SP_ROWSEQ));
  CHECK(keys.size() == c.size());
  CHECK_THROWS(pattern_order_key(c[0], PatternOrder::GL_LEX));
}

TEST_CASE("pattern weights")
{
  auto g = enumerate_gt_patterns({2, 1, 0});
  bool found_top = false;
  for (const auto & p : g) {
    auto w = pattern_weight(p);
    long total = w[0] + w[1] + w[2];
    CHECK(total == 3);
    if (w == std::vector<long>{2, 1, 0}) found_top = true;
  }
  CHECK(found_top);

  auto c = enumerate_c_patterns({-1, -1});
  for (const auto & p : c) {
    auto w = pattern_weight(p);
    CHECK(w.size() == 2);
  }
  bool found = false;
  for (const auto & p : c) {
    if (pattern_weight(p) == std::vector<long>{-1, -1}) found = true;
  }
  CHECK(found);
}
