#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <branchkit/modulebuilder.hpp>

#include <cstdlib>
#include <set>

using namespace branchkit;

namespace
{
  bool annihilated_by_raising(const AlgebraData & alg, const RealizedModule & m, const SparseVector & v)
  {
    for (int e : alg.raising)
      if (!apply_element(m, e, v).is_zero()) return false;
    return true;
  }

  std::map<std::vector<long>, int> weight_multiplicities(const RealizedModule & m)
  {
    std::map<std::vector<long>, int> out;
    for (const auto & w : m.weights) ++out[w];
    return out;
  }
}

TEST_CASE("trivial module")
{
  for (AlgebraSpec spec : {AlgebraSpec{Family::GL, 2}, AlgebraSpec{Family::SP, 2, SpIndexing::SIGNED}}) {
    AlgebraData alg = build_algebra(spec);
    std::vector<long> zero(static_cast<std::size_t>(spec.n), 0);
    RealizedModule m = realize_irrep(alg, zero, {200000, false});
    CHECK(m.dim == 1);
    for (int g = 0; g < alg.dim(); ++g) {
      ElementTag t = alg.basis[static_cast<std::size_t>(g)];
      if (t.i == t.j && spec.family == Family::GL) continue; // E_ii acts by lambda_i = 0 here too
      CHECK(m.generators[static_cast<std::size_t>(g)].nnz() == 0);
    }
  }
}

TEST_CASE("gl3 (2,1,0)")
{
  AlgebraData alg = build_algebra({Family::GL, 3});
  RealizedModule m = realize_irrep(alg, {2, 1, 0}, {200000, false});
  CHECK(m.dim == 8);
  CHECK(m.weights[static_cast<std::size_t>(m.highest_index)] == std::vector<long>{2, 1, 0});
  CHECK(annihilated_by_raising(alg, m, m.highest_vector()));
  CHECK(verify_module_relations(alg, m));
}

TEST_CASE("sp4 fundamental modules")
{
  AlgebraData alg = build_algebra({Family::SP, 2, SpIndexing::SIGNED});
  RealizedModule m1 = realize_irrep(alg, {0, -1}, {200000, false});
  CHECK(m1.dim == 4);
  CHECK(verify_module_relations(alg, m1));

  RealizedModule m2 = realize_irrep(alg, {-1, -1}, {200000, false});
  CHECK(m2.dim == 5);
  CHECK(m2.weights[static_cast<std::size_t>(m2.highest_index)] == std::vector<long>{-1, -1});
  CHECK(annihilated_by_raising(alg, m2, m2.highest_vector()));
  CHECK(verify_module_relations(alg, m2));
  std::multiset<std::vector<long>> wts(m2.weights.begin(), m2.weights.end());
  std::multiset<std::vector<long>> expect{{-1, -1}, {-1, 1}, {0, 0}, {1, -1}, {1, 1}};
  CHECK(wts == expect);
}

TEST_CASE("one-based sp4 matches signed sp4")
{
  AlgebraData s = build_algebra({Family::SP, 2, SpIndexing::SIGNED});
  AlgebraData o = build_algebra({Family::SP, 2, SpIndexing::ONE_BASED});
  RealizedModule ms = realize_irrep(s, {-1, -2}, {200000, false});
  RealizedModule mo = realize_irrep(o, {2, 1}, {200000, false});
  CHECK(ms.dim == 16);
  CHECK(mo.dim == 16);
  CHECK(verify_module_relations(o, mo));
  auto ws = weight_multiplicities(ms);
  // adapter: one-based weight (w_1..w_n) corresponds to signed (-w_n..-w_1)
  for (const auto & [w, cnt] : weight_multiplicities(mo)) {
    std::vector<long> conv;
    for (std::size_t k = w.size(); k-- > 0;) conv.push_back(-w[k]);
    CHECK(ws.count(conv) == 1);
    CHECK(ws[conv] == cnt);
  }
}

TEST_CASE("negative gl weights via determinant twist")
{
  AlgebraData alg = build_algebra({Family::GL, 2});
  RealizedModule m = realize_irrep(alg, {1, -1}, {200000, false});
  CHECK(m.dim == 3);
  CHECK(m.weights[static_cast<std::size_t>(m.highest_index)] == std::vector<long>{1, -1});
  CHECK(verify_module_relations(alg, m));
  std::multiset<std::vector<long>> wts(m.weights.begin(), m.weights.end());
  std::multiset<std::vector<long>> expect{{1, -1}, {0, 0}, {-1, 1}};
  CHECK(wts == expect);
}

TEST_CASE("weight multiplicities symmetric under simple reflections")
{
  AlgebraData alg = build_algebra({Family::SP, 2, SpIndexing::SIGNED});
  RealizedModule m = realize_irrep(alg, {-1, -2}, {200000, false});
  auto mult = weight_multiplicities(m);
  for (const Weight & a : simple_roots(alg.spec)) {
    for (const auto & [w, cnt] : mult) {
      Weight rw;
      for (long x : w) rw.push_back(Rat(x));
      Weight refl = reflect(rw, a);
      std::vector<long> rl;
      for (const Rat & x : refl) rl.push_back(rat_to_long(x));
      REQUIRE(mult.count(rl) == 1);
      CHECK(mult[rl] == cnt);
    }
  }
}

TEST_CASE("apply_monomial")
{
  AlgebraData alg = build_algebra({Family::GL, 2});
  RealizedModule m = realize_irrep(alg, {1, 0}, {200000, false});
  CHECK(apply_monomial(m, {}) == m.highest_vector());
  int e21 = alg.index_of(2, 1);
  SparseVector v = apply_monomial(m, {{e21}, {1}});
  CHECK(!v.is_zero());
  int pos = v.leading_index();
  CHECK(m.weights[static_cast<std::size_t>(pos)] == std::vector<long>{0, 1});
  CHECK(apply_monomial(m, {{e21}, {2}}).is_zero());
  CHECK_THROWS(apply_monomial(m, {{e21}, {1, 2}}));
}

TEST_CASE("singular vectors and branching gl")
{
  AlgebraData gl2 = build_algebra({Family::GL, 2});
  RealizedModule m2 = realize_irrep(gl2, {1, 0}, {200000, false});
  Subalgebra g1 = build_subalgebra(gl2, chain_kept_indices(gl2.spec, 1));
  CHECK(singular_vectors(m2, g1, {1}).size() == 1);
  CHECK(singular_vectors(m2, g1, {0}).size() == 1);
  CHECK(singular_vectors(m2, g1, {5}).empty());

  AlgebraData gl3 = build_algebra({Family::GL, 3});
  RealizedModule m3 = realize_irrep(gl3, {2, 1, 0}, {200000, false});
  Subalgebra g2 = build_subalgebra(gl3, chain_kept_indices(gl3.spec, 2));
  auto v = singular_vectors(m3, g2, {2, 1});
  REQUIRE(v.size() == 1);
  for (int e : g2.raising) CHECK(apply_element(m3, e, v[0]).is_zero());

  auto mult = branching_multiplicities(gl3, m3, g2);
  // interleaving mu: (2,1),(2,0),(1,1),(1,0)
  std::map<std::vector<long>, int> expect{{{2, 1}, 1}, {{2, 0}, 1}, {{1, 1}, 1}, {{1, 0}, 1}};
  CHECK(mult == expect);
}

TEST_CASE("singular vectors and branching sp")
{
  AlgebraData sp2 = build_algebra({Family::SP, 2, SpIndexing::SIGNED});
  RealizedModule m = realize_irrep(sp2, {-1, -1}, {200000, false});
  Subalgebra s1 = build_subalgebra(sp2, chain_kept_indices(sp2.spec, 1));
  int total = 0;
  std::set<std::vector<long>> mus;
  for (const auto & w : m.weights) mus.insert(restrict_weight(w, s1));
  for (const auto & mu : mus) total += static_cast<int>(singular_vectors(m, s1, mu).size());
  CHECK(total == 3);

  auto mult = branching_multiplicities(sp2, m, s1);
  std::map<std::vector<long>, int> expect{{{-1}, 2}, {{0}, 1}};
  CHECK(mult == expect);
}

TEST_CASE("module cache roundtrip")
{
  std::string dir = "/tmp/branchkit-cache-test";
  int rc = std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
  REQUIRE(rc == 0);
  setenv("BRANCHKIT_CACHE", dir.c_str(), 1);
  AlgebraData alg = build_algebra({Family::GL, 2});
  RealizedModule a = realize_irrep(alg, {2, 0});
  RealizedModule b = realize_irrep(alg, {2, 0}); // served from cache
  unsetenv("BRANCHKIT_CACHE");
  CHECK(a.dim == b.dim);
  CHECK(a.highest_index == b.highest_index);
  CHECK(a.weights == b.weights);
  for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i] == b.basis[i]);
  for (int g = 0; g < alg.dim(); ++g) {
    CHECK(matadd(a.generators[static_cast<std::size_t>(g)], Rat(-1),
                 b.generators[static_cast<std::size_t>(g)]).nnz() == 0);
  }
}
