#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <branchkit/rational.hpp>
#include <branchkit/sparse.hpp>

#include <random>

using namespace branchkit;

TEST_CASE("rational basics")
{
  CHECK(rat_str(rat(3)) == "3/1");
  CHECK(rat_str(rat(-1, 2)) == "-1/2");
  CHECK(rat_str(rat(2, 4)) == "1/2");
  CHECK(rat_parse("-7/3") == rat(-7, 3));
  CHECK(rat_parse("5") == rat(5));
  CHECK(rat_factorial(0) == 1);
  CHECK(rat_factorial(5) == 120);
  CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
  CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
  // exact arithmetic: (a/b)*(b/a) = 1
  Rat a = rat(123456789, 987654321);
  CHECK(a * (1 / a) == 1);
}

TEST_CASE("rank_and_reduce basic cases")
{
  CHECK(rank_and_reduce({}).rank == 0);

  SparseVector e1 = unit_vector(2, 0);
  auto r1 = rank_and_reduce({e1, e1});
  CHECK(r1.rank == 1);
  CHECK(r1.pivots == std::vector<int>{0});

  SparseVector v1(2), v2(2);
  v1.set(0, rat(1)); v1.set(1, rat(1));
  v2.set(0, rat(1)); v2.set(1, rat(-1));
  CHECK(rank_and_reduce({v1, v2}).rank == 2);
}

TEST_CASE("rank_and_reduce idempotent and invariant")
{
  std::mt19937 rng(12345);
  auto rnd = [&]() { return rat(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 4) + 1); };
  for (int trial = 0; trial < 20; ++trial) {
    int dim = 4 + static_cast<int>(rng() % 3);
    int cnt = 3 + static_cast<int>(rng() % 4);
    std::vector<SparseVector> vs;
    for (int i = 0; i < cnt; ++i) {
      SparseVector v(dim);
      for (int j = 0; j < dim; ++j) v.set(j, rnd());
      vs.push_back(v);
    }
    auto rr = rank_and_reduce(vs);
    // idempotent: reducing a reduced basis returns it unchanged
    auto rr2 = rank_and_reduce(rr.basis);
    CHECK(rr2.rank == rr.rank);
    CHECK(rr2.basis == rr.basis);
    // rank invariant under row permutation and scaling
    std::vector<SparseVector> shuffled = vs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto & v : shuffled) v = scale(v, rat(static_cast<long>(rng() % 5) + 1, 3));
    CHECK(rank_and_reduce(shuffled).rank == rr.rank);
  }
}

TEST_CASE("is_triangular")
{
  SparseMatrix id(2, 2);
  id.set(0, 0, rat(1)); id.set(1, 1, rat(1));
  auto f = is_triangular(id, {0, 1}, {0, 1});
  CHECK(f.triangular);
  CHECK(f.diagonal_nonzero);

  SparseMatrix antidiag(2, 2);
  antidiag.set(0, 1, rat(1)); antidiag.set(1, 0, rat(1));
  auto g = is_triangular(antidiag, {1, 0}, {0, 1});
  CHECK(g.triangular);
  CHECK(g.diagonal_nonzero);

  SparseMatrix dense(2, 2);
  dense.set(0, 0, rat(1)); dense.set(0, 1, rat(1));
  dense.set(1, 0, rat(1)); dense.set(1, 1, rat(1));
  auto h = is_triangular(dense, {0, 1}, {0, 1});
  CHECK(!h.triangular);
  CHECK(h.diagonal_nonzero);
  CHECK(h.violations == std::vector<std::pair<int, int>>{{1, 0}});
}

TEST_CASE("span solver and kernel")
{
  SparseVector b1(3), b2(3), target(3);
  b1.set(0, rat(1)); b1.set(1, rat(2));
  b2.set(1, rat(1)); b2.set(2, rat(1));
  SpanSolver ss(3, 2);
  CHECK(ss.add(b1));
  CHECK(ss.add(b2));
  target = axpy(scale(b1, rat(3, 2)), rat(-2), b2);
  auto coords = ss.express(target);
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == rat(3, 2));
  CHECK((*coords)[1] == rat(-2));
  CHECK(!ss.express(unit_vector(3, 0)).has_value());

  // kernel of [[1,2,0],[0,1,1]] is spanned by (2,-1,1)
  auto ker = kernel_basis({b1, b2}, 3);
  REQUIRE(ker.size() == 1);
  SparseVector k = ker[0];
  CHECK(k.get(0) * 1 + k.get(1) * 2 == 0);
  CHECK(k.get(1) + k.get(2) == 0);
}

TEST_CASE("matrix ops")
{
  SparseMatrix a(2, 2), b(2, 2);
  a.set(0, 1, rat(1));           // E12
  b.set(1, 0, rat(1));           // E21
  SparseMatrix c = commutator(a, b); // E11 - E22
  CHECK(c.get(0, 0) == 1);
  CHECK(c.get(1, 1) == -1);
  CHECK(c.get(0, 1) == 0);
  SparseVector v = unit_vector(2, 0);
  CHECK(apply(c, v).get(0) == 1);
}
