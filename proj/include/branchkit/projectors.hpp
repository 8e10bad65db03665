#ifndef BRANCHKIT_PROJECTORS_HPP
#define BRANCHKIT_PROJECTORS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "liealg.hpp"
#include "modulebuilder.hpp"
#include "sparse.hpp"

namespace branchkit
{

  /// Extremal projector of a subalgebra, bound to a verified normal order on
  /// its positive roots.
  struct ProjectorContext
  {
    Subalgebra sub;
    std::vector<int> order; ///< sequence of indices into sub.positive_roots
  };

  inline ProjectorContext make_projector(Subalgebra sub)
  {
    ProjectorContext ctx;
    ctx.order = sub.normal_order;
    ctx.sub = std::move(sub);
    return ctx;
  }

  /// Projector of the chain subalgebra at the given level: gl_level inside
  /// gl_n, or sp_{2 level} inside sp_2n.
  inline ProjectorContext make_chain_projector(const AlgebraData & alg, int level)
  {
    return make_projector(build_subalgebra(alg, chain_kept_indices(alg.spec, level)));
  }

  /// Common weight of the basis vectors supporting v; throws when v mixes
  /// weight spaces.
  inline std::vector<long> weight_of(const RealizedModule & mod, const SparseVector & v)
  {
    if (v.is_zero()) throw std::invalid_argument("weight_of: zero vector");
    const std::vector<long> * w = nullptr;
    for (const auto & [idx, c] : v.entries) {
      const std::vector<long> & cur = mod.weights[static_cast<std::size_t>(idx)];
      if (!w) w = &cur;
      else if (*w != cur) throw std::invalid_argument("weight_of: not a weight vector");
    }
    return *w;
  }

  namespace detail
  {
    /// One factor p_alpha applied to a weight vector: the series
    /// 1 + sum_k f^k e^k (-1)^k / (k! (c0+1)...(c0+k)) with
    /// c0 = <wt(v), h_alpha> + rho(h_alpha), truncated by nilpotence.
    /// Empty result signals a vanishing denominator.
    inline std::optional<SparseVector> apply_p_alpha(const SparseMatrix & e_mat, const SparseMatrix & f_mat,
                                                     const Rat & c0, const SparseVector & v)
    {
      SparseVector res = v;
      SparseVector ek = v;
      Rat coef(1);
      for (long k = 1;; ++k) {
        ek = apply(e_mat, ek);
        if (ek.is_zero()) break;
        Rat denom = c0 + Rat(k);
        if (denom == 0) return std::nullopt;
        coef *= Rat(-1) / (Rat(k) * denom);
        SparseVector term = ek;
        for (long r = 0; r < k; ++r) term = apply(f_mat, term);
        res = axpy(res, coef, term);
      }
      return res;
    }
  } // namespace detail

  /// p v = p_{alpha_1} ... p_{alpha_N} v, rightmost factor applied first.
  inline std::optional<SparseVector> apply_projector(const ProjectorContext & ctx, const RealizedModule & mod,
                                                     const SparseVector & v)
  {
    if (v.is_zero()) return v;
    std::vector<long> wt = weight_of(mod, v);
    SparseVector cur = v;
    for (std::size_t t = ctx.order.size(); t-- > 0;) {
      const RootTriple & rt = ctx.sub.positive_roots[static_cast<std::size_t>(ctx.order[t])];
      Rat c0 = rt.rho_h;
      for (std::size_t k = 0; k < wt.size(); ++k) c0 += Rat(wt[k]) * rt.h[k];
      SparseMatrix f_mat = mod.generators[static_cast<std::size_t>(rt.f_index)];
      if (rt.f_scale != 1)
        for (auto & col : f_mat.columns)
          for (auto & [r, c] : col) c *= rt.f_scale;
      auto next = detail::apply_p_alpha(mod.generators[static_cast<std::size_t>(rt.e_index)], f_mat, c0, cur);
      if (!next) return std::nullopt;
      cur = *next;
      if (cur.is_zero()) return cur;
    }
    return cur;
  }

  /// Lowering operators of one chain step (level m): the projector context
  /// of the step's lower algebra plus the level bookkeeping.
  struct LoweringOps
  {
    const AlgebraData * alg = nullptr;
    int level = 0; ///< m: step gl_m -> gl_{m-1} or sp_2m -> sp_{2m-2}
    ProjectorContext proj;
  };

  inline LoweringOps make_lowering_ops(const AlgebraData & alg, int level)
  {
    LoweringOps ops;
    ops.alg = &alg;
    ops.level = level;
    ops.proj = make_chain_projector(alg, level - 1);
    return ops;
  }

  /// z_{m k} v = p E_{m k} (h_k - h_{k+1}) ... (h_k - h_{m-1}) v with
  /// h_k = E_{kk} - k + 1; Cartan factors evaluated on wt(v) first.
  inline std::optional<SparseVector> apply_z_gl(const LoweringOps & ops, const RealizedModule & mod, int k,
                                                const SparseVector & v)
  {
    const AlgebraData & alg = *ops.alg;
    if (alg.spec.family != Family::GL) throw std::invalid_argument("apply_z_gl: gl operator on non-gl algebra");
    int m = ops.level;
    if (k < 1 || k >= m) throw std::invalid_argument("apply_z_gl: index out of range");
    if (v.is_zero()) return v;
    std::vector<long> wt = weight_of(mod, v);
    Rat factor(1);
    for (int j = k + 1; j <= m - 1; ++j)
      factor *= Rat(wt[static_cast<std::size_t>(k - 1)] - wt[static_cast<std::size_t>(j - 1)] - k + j);
    SparseVector cur = scale(apply_element(mod, alg.index_of(m, k), v), factor);
    return apply_projector(ops.proj, mod, cur);
  }

  namespace detail
  {
    /// f_i = F_{ii} - i and f_{-i} = -F_{ii} + i evaluated on a weight.
    inline Rat sp_f(const std::vector<long> & wt, int i)
    {
      if (i > 0) return Rat(wt[static_cast<std::size_t>(i - 1)] - i);
      return Rat(-wt[static_cast<std::size_t>(-i - 1)] - i);
    }

    inline Rat sp_g(const std::vector<long> & wt, int i) { return sp_f(wt, i) + Rat(1, 2); }
  } // namespace detail

  /// z_{i,-m} v = p F_{i,-m} (f_i - f_{i-1}) ... (f_i - f_{-m+1}) v for
  /// i = -m+1, ..., m-1 (i != 0), skipping the zero index in the product.
  inline std::optional<SparseVector> apply_z_sp(const LoweringOps & ops, const RealizedModule & mod, int i,
                                                const SparseVector & v)
  {
    const AlgebraData & alg = *ops.alg;
    if (alg.spec.family != Family::SP || alg.spec.indexing != SpIndexing::SIGNED)
      throw std::invalid_argument("apply_z_sp: needs signed sp");
    int m = ops.level;
    if (i == 0 || i <= -m || i >= m) throw std::invalid_argument("apply_z_sp: index out of range");
    if (v.is_zero()) return v;
    std::vector<long> wt = weight_of(mod, v);
    Rat factor(1);
    for (int j = -m + 1; j < i; ++j) {
      if (j == 0) continue;
      factor *= detail::sp_f(wt, i) - detail::sp_f(wt, j);
    }
    auto [idx, coef] = canonical_element(alg, i, -m);
    SparseVector cur = scale(apply_element(mod, idx, v), factor * coef);
    return apply_projector(ops.proj, mod, cur);
  }

  /// z_{m i} = (-1)^{m-i} z_{-i,-m}.
  inline std::optional<SparseVector> apply_z_sp_row(const LoweringOps & ops, const RealizedModule & mod, int i,
                                                    const SparseVector & v)
  {
    auto out = apply_z_sp(ops, mod, -i, v);
    if (out && ((ops.level - i) % 2 != 0)) *out = scale(*out, Rat(-1));
    return out;
  }

  /// The interpolation operator
  /// Z_{m,-m}(u) v = F_{m,-m} prod_i (u + g_i) v
  ///                - sum_i z_{m i} z_{i,-m} prod_{j != i} (u + g_j)/(g_i - g_j) v,
  /// all g evaluated on wt(v); i, j run over -m+1..m-1 without 0.
  inline std::optional<SparseVector> apply_Z_interp(const LoweringOps & ops, const RealizedModule & mod,
                                                    const Rat & u, const SparseVector & v)
  {
    const AlgebraData & alg = *ops.alg;
    if (alg.spec.family != Family::SP || alg.spec.indexing != SpIndexing::SIGNED)
      throw std::invalid_argument("apply_Z_interp: needs signed sp");
    int m = ops.level;
    if (v.is_zero()) return v;
    std::vector<long> wt = weight_of(mod, v);

    std::vector<int> idxs;
    for (int i = -m + 1; i <= m - 1; ++i)
      if (i != 0) idxs.push_back(i);

    Rat lead(1);
    for (int i : idxs) lead *= u + detail::sp_g(wt, i);
    SparseVector out = scale(apply_element(mod, alg.index_of(m, -m), v), lead);

    for (int i : idxs) {
      Rat coef(1);
      for (int j : idxs) {
        if (j == i) continue;
        Rat denom = detail::sp_g(wt, i) - detail::sp_g(wt, j);
        if (denom == 0) return std::nullopt;
        coef *= (u + detail::sp_g(wt, j)) / denom;
      }
      if (coef == 0) continue;
      auto zi = apply_z_sp(ops, mod, i, v);
      if (!zi) return std::nullopt;
      if (zi->is_zero()) continue;
      auto zni = apply_z_sp_row(ops, mod, i, *zi);
      if (!zni) return std::nullopt;
      out = axpy(out, -coef, *zni);
    }
    return out;
  }

  /// The double projector of the natural symplectic presentation:
  /// first the extremal projector of the chain subalgebra, then the p_alpha
  /// factor of the extra sl2 triple built on the r-center.
  inline std::optional<SparseVector> apply_double_projector(const AlgebraData & alg, const RealizedModule & mod,
                                                            const ProjectorContext & inner, const SparseVector & v)
  {
    if (alg.spec.family != Family::SP) throw std::invalid_argument("apply_double_projector: needs sp");
    if (v.is_zero()) return v;
    auto mid = apply_projector(inner, mod, v);
    if (!mid) return std::nullopt;
    if (mid->is_zero()) return *mid;

    int n = alg.spec.n;
    int e_idx, f_idx;
    std::vector<long> wt = weight_of(mod, *mid);
    Rat c0;
    if (alg.spec.indexing == SpIndexing::SIGNED) {
      e_idx = alg.index_of(-n, n);
      f_idx = alg.index_of(n, -n);
      c0 = Rat(-wt[static_cast<std::size_t>(n - 1)]) + 1; // h = -F_{nn}, rho(h) = 1
    } else {
      e_idx = alg.index_of(1, 2 * n);
      f_idx = alg.index_of(2 * n, 1);
      c0 = Rat(wt[0]) + 1; // h = F_{11}, rho(h) = 1
    }
    SparseMatrix e_mat = mod.generators[static_cast<std::size_t>(e_idx)];
    SparseMatrix f_mat = mod.generators[static_cast<std::size_t>(f_idx)];
    for (auto & col : e_mat.columns)
      for (auto & [r, c] : col) c /= 2;
    for (auto & col : f_mat.columns)
      for (auto & [r, c] : col) c /= 2;
    return detail::apply_p_alpha(e_mat, f_mat, c0, *mid);
  }

} // namespace branchkit

#endif
