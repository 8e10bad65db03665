#ifndef BRANCHKIT_ORDERS_HPP
#define BRANCHKIT_ORDERS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "liealg.hpp"
#include "modulebuilder.hpp"
#include "sparse.hpp"

namespace branchkit
{

  enum class OrderId { RLEX_GT, MIDDLE_RLEX, WEIGHT_FIRST, DEGREE_LEX, ROPP_LEX };
  enum class Cmp { LESS, EQUAL, GREATER };

  /// A monomial order over a declared list of negative root vectors; the
  /// list also fixes the factor sequence (leftmost written first, rightmost
  /// factor applied first).
  struct OrderSpec
  {
    OrderId id;
    std::vector<int> roots;         ///< algebra basis indices, written order
    std::vector<int> key_positions; ///< lex comparison sequence (where applicable)
  };

  using Expo = std::vector<long>;

  inline OrderSpec make_order(const AlgebraData & alg, OrderId id)
  {
    OrderSpec ord;
    ord.id = id;
    int n = alg.spec.n;
    switch (id) {
      case OrderId::RLEX_GT:
      case OrderId::ROPP_LEX: {
        if (alg.spec.family != Family::GL) throw std::invalid_argument("make_order: gl order on non-gl algebra");
        for (int k = 2; k <= n; ++k)
          for (int j = 1; j <= k - 1; ++j) ord.roots.push_back(alg.index_of(k, j));
        if (id == OrderId::RLEX_GT) {
          for (int k = n; k >= 2; --k) {
            int base = (k - 1) * (k - 2) / 2;
            for (int j = 1; j <= k - 1; ++j) ord.key_positions.push_back(base + j - 1);
          }
        }
        break;
      }
      case OrderId::MIDDLE_RLEX: {
        if (alg.spec.family != Family::GL || n < 3)
          throw std::invalid_argument("make_order: MIDDLE_RLEX needs gl of rank >= 3");
        for (int k = 2; k <= n - 1; ++k) ord.roots.push_back(alg.index_of(n, k));
        for (int k = 2; k <= n; ++k) ord.roots.push_back(alg.index_of(k, 1));
        for (int t = 2 * n - 4; t >= n - 2; --t) ord.key_positions.push_back(t);
        for (int t = 0; t <= n - 3; ++t) ord.key_positions.push_back(t);
        break;
      }
      case OrderId::WEIGHT_FIRST: {
        if (alg.spec.family != Family::SP || alg.spec.indexing != SpIndexing::SIGNED)
          throw std::invalid_argument("make_order: WEIGHT_FIRST needs signed sp");
        ord.roots.push_back(alg.index_of(n, -n));
        for (int i = 1; i <= n - 1; ++i) ord.roots.push_back(alg.index_of(n, -i));
        for (int i = 1; i <= n - 1; ++i) ord.roots.push_back(alg.index_of(n, i));
        for (int t = 0; t < 2 * n - 1; ++t) ord.key_positions.push_back(t);
        break;
      }
      case OrderId::DEGREE_LEX: {
        if (alg.spec.family != Family::SP || alg.spec.indexing != SpIndexing::ONE_BASED)
          throw std::invalid_argument("make_order: DEGREE_LEX needs one-based sp");
        ord.roots.push_back(alg.index_of(2 * n, 1));
        for (int k = 2; k <= 2 * n - 1; ++k) ord.roots.push_back(canonical_element(alg, 2 * n, k).first);
        for (int t = 1; t <= 2 * n - 2; ++t) ord.key_positions.push_back(t);
        ord.key_positions.push_back(0);
        break;
      }
    }
    return ord;
  }

  /// Variant of make_order whose root list spans only the r-subspace of the
  /// one-step branching; for RLEX_GT this is the last-row list with its
  /// right-lexicographic key, the other orders are r-lists already.
  inline OrderSpec make_restricted_order(const AlgebraData & alg, OrderId id)
  {
    if (id != OrderId::RLEX_GT) return make_order(alg, id);
    if (alg.spec.family != Family::GL) throw std::invalid_argument("make_restricted_order: gl order on non-gl algebra");
    OrderSpec ord;
    ord.id = id;
    int n = alg.spec.n;
    for (int j = 1; j <= n - 1; ++j) ord.roots.push_back(alg.index_of(n, j));
    for (int t = 0; t <= n - 2; ++t) ord.key_positions.push_back(t);
    return ord;
  }

  namespace detail
  {
    inline Cmp lex_cmp(const Expo & a, const Expo & b, const std::vector<int> & pos)
    {
      for (int t : pos) {
        if (a[static_cast<std::size_t>(t)] < b[static_cast<std::size_t>(t)]) return Cmp::LESS;
        if (a[static_cast<std::size_t>(t)] > b[static_cast<std::size_t>(t)]) return Cmp::GREATER;
      }
      return Cmp::EQUAL;
    }

    inline Weight monomial_weight(const AlgebraData & alg, const OrderSpec & ord, const Expo & a)
    {
      Weight w(static_cast<std::size_t>(alg.spec.n), Rat(0));
      for (std::size_t t = 0; t < ord.roots.size(); ++t) {
        const Weight & rw = alg.weights[static_cast<std::size_t>(ord.roots[t])];
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += Rat(a[t]) * rw[k];
      }
      return w;
    }

    inline bool is_positive_root(const AlgebraData & alg, const Weight & w)
    {
      for (const RootTriple & t : alg.positive_roots)
        if (t.alpha == w) return true;
      return false;
    }
  } // namespace detail

  inline Cmp compare(const AlgebraData & alg, const OrderSpec & ord, const Expo & a, const Expo & b)
  {
    if (a.size() != ord.roots.size() || b.size() != ord.roots.size())
      throw std::invalid_argument("compare: exponent list mismatch");
    switch (ord.id) {
      case OrderId::RLEX_GT:
      case OrderId::MIDDLE_RLEX:
        return detail::lex_cmp(a, b, ord.key_positions);
      case OrderId::ROPP_LEX: {
        for (std::size_t t = a.size(); t-- > 0;) {
          if (a[t] > b[t]) return Cmp::LESS;
          if (a[t] < b[t]) return Cmp::GREATER;
        }
        return Cmp::EQUAL;
      }
      case OrderId::DEGREE_LEX: {
        long da = 0, db = 0;
        for (std::size_t t = 1; t < a.size(); ++t) { da += a[t]; db += b[t]; }
        if (da != db) return da < db ? Cmp::LESS : Cmp::GREATER;
        return detail::lex_cmp(a, b, ord.key_positions);
      }
      case OrderId::WEIGHT_FIRST: {
        Weight wa = detail::monomial_weight(alg, ord, a);
        Weight wb = detail::monomial_weight(alg, ord, b);
        Weight diff = weight_sub(wa, wb);
        if (!weight_is_zero(diff)) {
          if (detail::is_positive_root(alg, diff)) return Cmp::LESS;
          Weight neg = weight_sub(wb, wa);
          if (detail::is_positive_root(alg, neg)) return Cmp::GREATER;
        }
        return detail::lex_cmp(a, b, ord.key_positions);
      }
    }
    throw std::logic_error("compare: unknown order");
  }

  inline Monomial to_monomial(const OrderSpec & ord, const Expo & a)
  {
    if (a.size() != ord.roots.size()) throw std::invalid_argument("to_monomial: exponent list mismatch");
    Monomial m;
    for (std::size_t t = 0; t < a.size(); ++t) {
      if (a[t] == 0) continue;
      m.elements.push_back(ord.roots[t]);
      m.exponents.push_back(a[t]);
    }
    return m;
  }

  /// All exponent vectors over the root list whose weight drop stays inside
  /// the module's weight support.
  inline std::vector<Expo> enumerate_candidates(const AlgebraData & alg, const RealizedModule & mod,
                                                const std::vector<int> & roots)
  {
    std::set<std::vector<long>> support(mod.weights.begin(), mod.weights.end());
    const std::vector<long> & lam = mod.weights[static_cast<std::size_t>(mod.highest_index)];

    auto fval = [&](const std::vector<long> & w) {
      Rat s(0);
      for (std::size_t k = 0; k < w.size(); ++k) s += Rat(w[k]) * alg.rho[k];
      return s;
    };
    Rat min_f = fval(lam);
    for (const auto & w : mod.weights) min_f = std::min(min_f, fval(w));

    std::vector<std::vector<long>> shifts;
    std::vector<Rat> costs;
    for (int g : roots) {
      std::vector<long> s;
      for (const Rat & x : alg.weights[static_cast<std::size_t>(g)]) s.push_back(rat_to_long(x));
      Rat c(0);
      for (std::size_t k = 0; k < s.size(); ++k) c += Rat(s[k]) * alg.rho[k];
      if (c >= 0) throw std::invalid_argument("enumerate_candidates: root list contains a non-lowering element");
      shifts.push_back(s);
      costs.push_back(c);
    }

    std::vector<Expo> out;
    Expo cur(roots.size(), 0);
    std::vector<long> w = lam;
    auto rec = [&](auto && self, std::size_t t, Rat f) -> void {
      if (t == roots.size()) {
        if (support.count(w)) out.push_back(cur);
        return;
      }
      long e = 0;
      std::vector<long> saved = w;
      while (true) {
        self(self, t + 1, f);
        Rat nf = f + costs[t];
        if (nf < min_f) break;
        ++e;
        cur[t] = e;
        f = nf;
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += shifts[t][k];
      }
      cur[t] = 0;
      w = saved;
    };
    rec(rec, 0, fval(lam));
    return out;
  }

  namespace detail
  {
    /// Row space kept closed under a fixed set of lowering generator matrices.
    struct ClosedSpan
    {
      RowSpace space;
      const RealizedModule * mod = nullptr;
      const std::vector<int> * gens = nullptr;

      ClosedSpan(const RealizedModule & m, const std::vector<int> & g)
          : space(m.dim), mod(&m), gens(&g) {}

      void add(const SparseVector & v)
      {
        if (!space.add(v)) return;
        std::vector<SparseVector> work{v};
        while (!work.empty()) {
          SparseVector u = work.back();
          work.pop_back();
          for (int g : *gens) {
            SparseVector w = apply(mod->generators[static_cast<std::size_t>(g)], u);
            if (!w.is_zero() && space.add(w)) work.push_back(w);
          }
        }
      }

      bool contains(const SparseVector & v) const { return space.contains(v); }
    };

    inline bool order_is_transitive_total(OrderId id) { return id != OrderId::WEIGHT_FIRST; }
  } // namespace detail

  /// Essential monomials for the module, either over the full list
  /// (restrict_to_r = false, per-weight-class elimination) or the branching
  /// set Gamma(lambda) (restrict_to_r = true, elimination against the
  /// U(n_0^-)-closure of the smaller monomial images).
  inline std::vector<Expo> essential_monomials(const AlgebraData & alg, const RealizedModule & mod,
                                               const OrderSpec & ord, bool restrict_to_r,
                                               const Subalgebra * sub = nullptr)
  {
    auto cands = enumerate_candidates(alg, mod, ord.roots);
    std::vector<Expo> kept;

    if (!restrict_to_r) {
      std::map<std::vector<long>, std::vector<std::size_t>> classes;
      std::vector<SparseVector> images(cands.size());
      std::vector<std::vector<long>> wts(cands.size());
      for (std::size_t i = 0; i < cands.size(); ++i) {
        images[i] = apply_monomial(mod, to_monomial(ord, cands[i]));
        Weight wr = detail::monomial_weight(alg, ord, cands[i]);
        std::vector<long> w = mod.weights[static_cast<std::size_t>(mod.highest_index)];
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += rat_to_long(wr[k]);
        wts[i] = w;
        classes[w].push_back(i);
      }
      std::vector<bool> essential(cands.size(), false);
      for (auto & [w, idxs] : classes) {
        std::sort(idxs.begin(), idxs.end(), [&](std::size_t a, std::size_t b) {
          return compare(alg, ord, cands[a], cands[b]) == Cmp::LESS;
        });
        RowSpace block(mod.dim);
        for (std::size_t i : idxs)
          if (block.add(images[i])) essential[i] = true;
      }
      for (std::size_t i = 0; i < cands.size(); ++i)
        if (essential[i]) kept.push_back(cands[i]);
      if (detail::order_is_transitive_total(ord.id))
        std::sort(kept.begin(), kept.end(), [&](const Expo & a, const Expo & b) {
          return compare(alg, ord, a, b) == Cmp::LESS;
        });
      else
        std::sort(kept.begin(), kept.end());
      if (mpz_class(static_cast<long>(kept.size())) != mod.dim)
        throw std::logic_error("essential_monomials: count differs from module dimension");
      return kept;
    }

    if (!sub) throw std::invalid_argument("essential_monomials: restriction requires a subalgebra");

    if (detail::order_is_transitive_total(ord.id)) {
      std::sort(cands.begin(), cands.end(), [&](const Expo & a, const Expo & b) {
        return compare(alg, ord, a, b) == Cmp::LESS;
      });
      detail::ClosedSpan span(mod, sub->lowering);
      for (const Expo & a : cands) {
        SparseVector v = apply_monomial(mod, to_monomial(ord, a));
        if (!v.is_zero() && !span.contains(v)) kept.push_back(a);
        span.add(v);
      }
    } else {
      for (const Expo & a : cands) {
        SparseVector v = apply_monomial(mod, to_monomial(ord, a));
        if (v.is_zero()) continue;
        detail::ClosedSpan span(mod, sub->lowering);
        for (const Expo & b : cands) {
          if (compare(alg, ord, b, a) == Cmp::LESS)
            span.add(apply_monomial(mod, to_monomial(ord, b)));
        }
        if (!span.contains(v)) kept.push_back(a);
      }
      std::sort(kept.begin(), kept.end());
    }

    // |Gamma(lambda)| must equal dim V(lambda)^+
    std::set<std::vector<long>> mus;
    for (const auto & w : mod.weights) mus.insert(restrict_weight(w, *sub));
    std::size_t plus_dim = 0;
    for (const auto & mu : mus) plus_dim += singular_vectors(mod, *sub, mu).size();
    if (kept.size() != plus_dim)
      throw std::logic_error("essential_monomials: |Gamma| differs from dim of the highest weight subspace");
    return kept;
  }

  struct BrOrderReport
  {
    bool pass = true;
    long checked = 0;
    std::vector<std::pair<Expo, int>> violations; ///< (monomial, raising element)
  };

  /// Verifies the compatibility condition: for every candidate m1 over the
  /// r-list and every raising generator x of the subalgebra, x m1 v lies in
  /// the closed span of the images of strictly smaller monomials.
  inline BrOrderReport verify_br_order(const AlgebraData & alg, const RealizedModule & mod,
                                       const OrderSpec & ord, const Subalgebra & sub)
  {
    auto cands = enumerate_candidates(alg, mod, ord.roots);
    BrOrderReport rep;

    auto check_one = [&](const Expo & a, const detail::ClosedSpan & span) {
      SparseVector v = apply_monomial(mod, to_monomial(ord, a));
      for (int x : sub.raising) {
        SparseVector xv = apply(mod.generators[static_cast<std::size_t>(x)], v);
        ++rep.checked;
        if (!xv.is_zero() && !span.contains(xv)) {
          rep.pass = false;
          rep.violations.emplace_back(a, x);
        }
      }
    };

    if (detail::order_is_transitive_total(ord.id)) {
      std::sort(cands.begin(), cands.end(), [&](const Expo & a, const Expo & b) {
        return compare(alg, ord, a, b) == Cmp::LESS;
      });
      detail::ClosedSpan span(mod, sub.lowering);
      for (const Expo & a : cands) {
        check_one(a, span);
        span.add(apply_monomial(mod, to_monomial(ord, a)));
      }
    } else {
      for (const Expo & a : cands) {
        detail::ClosedSpan span(mod, sub.lowering);
        for (const Expo & b : cands)
          if (compare(alg, ord, b, a) == Cmp::LESS) span.add(apply_monomial(mod, to_monomial(ord, b)));
        check_one(a, span);
      }
    }
    return rep;
  }

  struct OrderAxiomReport
  {
    bool unit_minimal = true;
    bool antisymmetric = true;
    bool transitive = true;
    bool multiplicative = true;
    long monomials = 0;
    bool pass() const { return unit_minimal && antisymmetric && transitive && multiplicative; }
  };

  /// Exhaustive small check of the monomial-order axioms up to the given
  /// total degree.
  inline OrderAxiomReport verify_order_axioms(const AlgebraData & alg, const OrderSpec & ord, long bound)
  {
    std::vector<Expo> ms;
    Expo cur(ord.roots.size(), 0);
    auto rec = [&](auto && self, std::size_t t, long rest) -> void {
      if (t == cur.size()) {
        ms.push_back(cur);
        return;
      }
      for (long e = 0; e <= rest; ++e) {
        cur[t] = e;
        self(self, t + 1, rest - e);
      }
      cur[t] = 0;
    };
    rec(rec, 0, bound);

    OrderAxiomReport rep;
    rep.monomials = static_cast<long>(ms.size());
    Expo unit(ord.roots.size(), 0);
    auto cmp = [&](const Expo & a, const Expo & b) { return compare(alg, ord, a, b); };

    std::vector<std::vector<Cmp>> table(ms.size(), std::vector<Cmp>(ms.size()));
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ms.size(); ++j) table[i][j] = cmp(ms[i], ms[j]);

    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (ms[i] != unit && cmp(unit, ms[i]) != Cmp::LESS) rep.unit_minimal = false;
      for (std::size_t j = 0; j < ms.size(); ++j) {
        Cmp ij = table[i][j], ji = table[j][i];
        if (i == j && ij != Cmp::EQUAL) rep.antisymmetric = false;
        if (i != j && ij == Cmp::EQUAL) rep.antisymmetric = false;
        if (i != j && ((ij == Cmp::LESS) == (ji == Cmp::LESS))) rep.antisymmetric = false;
      }
    }
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ms.size(); ++j) {
        if (table[i][j] != Cmp::LESS) continue;
        for (std::size_t k = 0; k < ms.size(); ++k)
          if (table[j][k] == Cmp::LESS && table[i][k] != Cmp::LESS) rep.transitive = false;
      }

    // m1 <= m2 and m3 <= m4 implies m1*m3 <= m2*m4, whenever all four
    // products stay within the sampled degree bound
    auto sum = [](const Expo & a, const Expo & b) {
      Expo s(a.size());
      for (std::size_t t = 0; t < a.size(); ++t) s[t] = a[t] + b[t];
      return s;
    };
    std::vector<long> degs(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (long x : ms[i]) degs[i] += x;
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ms.size(); ++j) {
        if (table[i][j] == Cmp::GREATER) continue;
        for (std::size_t k = 0; k < ms.size(); ++k) {
          if (degs[i] + degs[k] > bound) continue;
          for (std::size_t l = 0; l < ms.size(); ++l) {
            if (table[k][l] == Cmp::GREATER || degs[j] + degs[l] > bound) continue;
            if (cmp(sum(ms[i], ms[k]), sum(ms[j], ms[l])) == Cmp::GREATER) rep.multiplicative = false;
          }
        }
      }
    return rep;
  }

  /// ess(lambda) * ess(lambda') is contained in ess(lambda + lambda'),
  /// exponent-wise.
  inline bool check_product_property(const std::vector<Expo> & ess_a, const std::vector<Expo> & ess_b,
                                     const std::vector<Expo> & ess_sum)
  {
    std::set<Expo> target(ess_sum.begin(), ess_sum.end());
    for (const Expo & a : ess_a)
      for (const Expo & b : ess_b) {
        Expo s(a.size());
        for (std::size_t t = 0; t < a.size(); ++t) s[t] = a[t] + b[t];
        if (!target.count(s)) return false;
      }
    return true;
  }

} // namespace branchkit

#endif
