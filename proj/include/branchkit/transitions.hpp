#ifndef BRANCHKIT_TRANSITIONS_HPP
#define BRANCHKIT_TRANSITIONS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bases.hpp"
#include "liealg.hpp"
#include "modulebuilder.hpp"
#include "patterns.hpp"
#include "projectors.hpp"
#include "sparse.hpp"

namespace branchkit
{

  /// Exact change of basis between two families over the same space.
  /// Row j / column i of the matrix is the coefficient of target vector i in
  /// the expansion of source vector j; triangularity is evaluated with both
  /// index sets sorted by the scheme's pattern order key (so "triangular"
  /// means every source vector is supported on order-greater-or-equal
  /// target patterns).
  struct TransitionReport
  {
    BasisFamilyId source = BasisFamilyId::PI;
    BasisFamilyId target = BasisFamilyId::PI;
    PatternOrder scheme = PatternOrder::GL_LEX;
    SparseMatrix matrix;
    bool triangular = false;
    bool diagonal_nonzero = false;
    std::vector<std::pair<int, int>> violations;
  };

  namespace detail
  {
    inline std::vector<int> key_sort_order(const std::vector<std::vector<long>> & keys)
    {
      std::vector<int> order(keys.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
      });
      return order;
    }
  } // namespace detail

  inline TransitionReport transition(const BasisFamily & source, const BasisFamily & target)
  {
    if (source.scheme != target.scheme || source.order_keys != target.order_keys)
      throw std::invalid_argument("transition: families over different pattern sets");
    int count = static_cast<int>(source.vectors.size());
    if (count == 0) throw std::invalid_argument("transition: empty families");
    int dim = source.vectors.front().dimension;

    SpanSolver solver(dim, count);
    for (const SparseVector & v : target.vectors)
      if (!solver.add(v)) throw std::logic_error("transition: dependent target family");

    TransitionReport rep;
    rep.source = source.id;
    rep.target = target.id;
    rep.scheme = source.scheme;
    rep.matrix = SparseMatrix(count, count);
    for (int j = 0; j < count; ++j) {
      auto coords = solver.express(source.vectors[static_cast<std::size_t>(j)]);
      if (!coords) throw std::logic_error("transition: source vector outside target span");
      for (int i = 0; i < count; ++i)
        if ((*coords)[static_cast<std::size_t>(i)] != 0)
          rep.matrix.set(j, i, (*coords)[static_cast<std::size_t>(i)]);
    }

    std::vector<int> order = detail::key_sort_order(source.order_keys);
    TriangularFlags flags = is_triangular(rep.matrix, order, order);
    rep.triangular = flags.triangular;
    rep.diagonal_nonzero = flags.diagonal_nonzero;
    rep.violations = std::move(flags.violations);
    return rep;
  }

  /// Report on the closed formula for the F_{n,-n} action on the vectors
  /// xi_nu of one multiplicity space:
  ///   F_{n,-n} xi_nu = sum_i prod_{a != i} 1/(gamma_i^2 - gamma_a^2) xi_{nu - delta_i}
  /// with gamma_i = nu_i - i + 1/2 and the zero-if-invalid convention.
  struct FnnActionReport
  {
    std::vector<long> mu;
    int nu_count = 0;
    int checked = 0;
    bool pass = false;
  };

  namespace detail
  {
    /// All nu tuples interlacing lambda and mu:
    /// 0 >= nu_1 >= lambda_1 >= nu_2 >= ... >= nu_n >= lambda_n and
    /// nu_k >= mu_k >= nu_{k+1}.
    inline std::vector<std::vector<long>> nu_tuples(const std::vector<long> & lam, const std::vector<long> & mu)
    {
      int n = static_cast<int>(lam.size());
      std::vector<std::vector<long>> out;
      std::vector<long> nu(static_cast<std::size_t>(n));
      auto rec = [&](auto && self, int k) -> void {
        if (k > n) {
          out.push_back(nu);
          return;
        }
        long hi = k == 1 ? 0
                         : std::min(lam[static_cast<std::size_t>(k - 2)], mu[static_cast<std::size_t>(k - 2)]);
        long lo = lam[static_cast<std::size_t>(k - 1)];
        if (k <= n - 1) lo = std::max(lo, mu[static_cast<std::size_t>(k - 1)]);
        for (long v = lo; v <= hi; ++v) {
          nu[static_cast<std::size_t>(k - 1)] = v;
          self(self, k + 1);
        }
      };
      rec(rec, 1);
      return out;
    }

    /// The multiplicity-space vector of one nu tuple:
    /// xi_nu = prod_i z_{n,-i}^{mu_i - nu_{i+1}} z_{-i,-n}^{lambda_i - nu_{i+1}}
    ///         . Z_{n,-n}(gamma_1 + 1) ... Z_{n,-n}(-1/2) xi.
    inline SparseVector xi_nu_vector(const RealizedModule & mod, const LoweringOps & ops,
                                     const std::vector<long> & lam, const std::vector<long> & mu,
                                     const std::vector<long> & nu)
    {
      int n = static_cast<int>(lam.size());
      SparseVector v = mod.highest_vector();
      Rat stop = Rat(nu[0]) + Rat(1, 2);
      for (Rat u(-1, 2); u >= stop && !v.is_zero(); u -= 1)
        v = *require_vector(apply_Z_interp(ops, mod, u, v), "xi_nu_vector");
      for (int i = n - 1; i >= 1 && !v.is_zero(); --i) {
        v = z_power_sp(ops, mod, -i,
                       lam[static_cast<std::size_t>(i - 1)] - nu[static_cast<std::size_t>(i)], v);
        v = z_row_power_sp(ops, mod, i,
                           mu[static_cast<std::size_t>(i - 1)] - nu[static_cast<std::size_t>(i)], v);
      }
      return v;
    }
  } // namespace detail

  inline FnnActionReport verify_fnn_action(const AlgebraData & alg, const RealizedModule & mod,
                                           const std::vector<long> & mu)
  {
    if (alg.spec.family != Family::SP || alg.spec.indexing != SpIndexing::SIGNED)
      throw std::invalid_argument("verify_fnn_action: needs signed sp");
    int n = alg.spec.n;
    if (static_cast<int>(mu.size()) != n - 1) throw std::invalid_argument("verify_fnn_action: mu size");
    const std::vector<long> & lam = mod.lambda;

    LoweringOps ops = make_lowering_ops(alg, n);
    std::vector<std::vector<long>> nus = detail::nu_tuples(lam, mu);
    std::map<std::vector<long>, SparseVector> xi;
    for (const auto & nu : nus) {
      SparseVector v = detail::xi_nu_vector(mod, ops, lam, mu, nu);
      if (v.is_zero()) throw std::logic_error("verify_fnn_action: vanishing xi_nu");
      xi.emplace(nu, std::move(v));
    }

    FnnActionReport rep;
    rep.mu = mu;
    rep.nu_count = static_cast<int>(nus.size());
    rep.pass = true;
    int fnn = alg.index_of(n, -n);
    for (const auto & nu : nus) {
      SparseVector lhs = apply_element(mod, fnn, xi.at(nu));
      SparseVector rhs(mod.dim);
      for (int i = 1; i <= n; ++i) {
        std::vector<long> shifted = nu;
        shifted[static_cast<std::size_t>(i - 1)] -= 1;
        auto it = xi.find(shifted);
        if (it == xi.end()) continue;
        Rat gi = Rat(nu[static_cast<std::size_t>(i - 1)]) - Rat(i) + Rat(1, 2);
        Rat coef(1);
        for (int a = 1; a <= n; ++a) {
          if (a == i) continue;
          Rat ga = Rat(nu[static_cast<std::size_t>(a - 1)]) - Rat(a) + Rat(1, 2);
          coef /= gi * gi - ga * ga;
        }
        rhs = axpy(rhs, coef, it->second);
      }
      ++rep.checked;
      if (!sub(lhs, rhs).is_zero()) rep.pass = false;
    }
    return rep;
  }

  /// Both simple-root-monomial transitions of a gl module: (LITTELMANN, PI)
  /// and (LITTELMANN, XI_GL), certified triangular under GL_LEX.
  struct LittelmannReport
  {
    TransitionReport to_pi;
    TransitionReport to_xi;
    bool pass = false;
  };

  inline LittelmannReport verify_littelmann_triangular(const AlgebraData & alg, const RealizedModule & mod)
  {
    BasisFamily lit = build_family(alg, mod, BasisFamilyId::LITTELMANN);
    BasisFamily pi = build_family(alg, mod, BasisFamilyId::PI);
    BasisFamily xi = build_family(alg, mod, BasisFamilyId::XI_GL);
    LittelmannReport rep;
    rep.to_pi = transition(lit, pi);
    rep.to_xi = transition(lit, xi);
    rep.pass = rep.to_pi.triangular && rep.to_pi.diagonal_nonzero && rep.to_xi.triangular &&
               rep.to_xi.diagonal_nonzero;
    return rep;
  }

} // namespace branchkit

#endif
