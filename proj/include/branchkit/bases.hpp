#ifndef BRANCHKIT_BASES_HPP
#define BRANCHKIT_BASES_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "branching.hpp"
#include "liealg.hpp"
#include "modulebuilder.hpp"
#include "patterns.hpp"
#include "projectors.hpp"
#include "sparse.hpp"

namespace branchkit
{

  enum class BasisFamilyId { PI, XI_GL, LITTELMANN, THETA, ETA, XI_SP, ZETA };

  /// A complete basis of a module, one vector per pattern (in the sorted
  /// pattern enumeration order), together with the pattern order scheme
  /// used for triangularity claims.
  struct BasisFamily
  {
    BasisFamilyId id = BasisFamilyId::PI;
    PatternOrder scheme = PatternOrder::GL_LEX;
    std::vector<SparseVector> vectors;
    std::vector<std::vector<long>> order_keys; ///< pattern_order_key per vector
  };

  /// The representation of sp_2n on the span of the zeta vectors, assembled
  /// purely from the closed coefficient formulas and bracket closure.
  struct ZetaRep
  {
    AlgebraSpec spec;
    std::vector<long> lambda;
    std::vector<TypeCPattern> patterns;
    int dim = 0;
    std::vector<SparseMatrix> generators;   ///< one matrix per algebra basis element
    std::vector<std::vector<long>> weights; ///< F_kk eigenvalues per pattern
  };

  namespace detail
  {
    inline std::optional<SparseVector> require_vector(std::optional<SparseVector> v, const char * who)
    {
      if (!v) throw std::runtime_error(std::string(who) + ": projector denominator vanished");
      return v;
    }

    inline SparseVector z_power_gl(const LoweringOps & ops, const RealizedModule & mod, int k, long e,
                                   SparseVector v)
    {
      for (long t = 0; t < e && !v.is_zero(); ++t)
        v = *require_vector(apply_z_gl(ops, mod, k, v), "build_family");
      return v;
    }

    inline SparseVector z_power_sp(const LoweringOps & ops, const RealizedModule & mod, int i, long e,
                                   SparseVector v)
    {
      for (long t = 0; t < e && !v.is_zero(); ++t)
        v = *require_vector(apply_z_sp(ops, mod, i, v), "build_family");
      return v;
    }

    /// z_{m,-i}^e for positive i, through z_{m,-i} = z_{m j}|_{j=-i} =
    /// (-1)^{m+i} z_{i,-m}.
    inline SparseVector z_row_power_sp(const LoweringOps & ops, const RealizedModule & mod, int i, long e,
                                       SparseVector v)
    {
      for (long t = 0; t < e && !v.is_zero(); ++t)
        v = *require_vector(apply_z_sp_row(ops, mod, -i, v), "build_family");
      return v;
    }
  } // namespace detail

  /// The string of simple root vectors attached to a Gelfand-Tsetlin pattern:
  /// f_1^{a_{n-1,1}} f_2^{a_{n-2,2}} f_1^{a_{n-2,1}} ... f_{n-1}^{a_{1,n-1}} ... f_1^{a_{1,1}}
  /// with f_j = E_{j+1,j} and a_{k,j} = sum_{i<=j} (l_{n-k+1,i} - l_{n-k,i}).
  inline Monomial littelmann_monomial(const AlgebraData & alg, const GTPattern & p)
  {
    if (alg.spec.family != Family::GL || alg.spec.n != p.n)
      throw std::invalid_argument("littelmann_monomial: algebra/pattern mismatch");
    Monomial m;
    for (int k = p.n - 1; k >= 1; --k) {
      int t = p.n - k;
      for (int j = t; j >= 1; --j) {
        long a = 0;
        for (int i = 1; i <= j; ++i) a += p.at(p.n - k + 1, i) - p.at(p.n - k, i);
        if (a == 0) continue;
        m.elements.push_back(alg.index_of(j + 1, j));
        m.exponents.push_back(a);
      }
    }
    return m;
  }

  /// The projected simple-root string p f_{n-1}^{a_{n-1}} ... f_1^{a_1} v
  /// equals this multiple of p E_{n,n-1}^{a_{n-1}-a_{n-2}} ... E_{n,1}^{a_1} v:
  /// the straightening of f_{k+1}^{a_{k+1}} f_k^{a_k} contributes the falling
  /// factorial a_{k+1}!/(a_{k+1}-a_k)! for each consecutive pair.
  inline Rat littelmann_string_constant(const std::vector<long> & a)
  {
    Rat c(1);
    for (std::size_t k = 0; k + 1 < a.size(); ++k)
      c *= rat_factorial(a[k + 1]) / rat_factorial(a[k + 1] - a[k]);
    return c;
  }

  namespace detail
  {
    inline SparseVector theta_vector(const AlgebraData & alg, const RealizedModule & mod, const TypeCPattern & p)
    {
      Monomial m = pattern_exponent_bijection(alg, p, BasisTarget::THETA);
      Rat sign(1);
      for (int k = 2; k <= p.n; ++k)
        for (int i = 1; i <= k - 1; ++i) {
          long e = p.at(k, i) - p.pat(k, i + 1);
          if (e % 2 != 0) sign *= canonical_element(alg, -i, -k).second;
        }
      SparseVector v = apply_monomial(mod, m);
      return sign == 1 ? v : scale(v, sign);
    }

    inline SparseVector eta_vector(const AlgebraData & alg, const RealizedModule & mod,
                                   const std::vector<LoweringOps> & ops, const TypeCPattern & p)
    {
      SparseVector v = mod.highest_vector();
      for (int k = p.n; k >= 1; --k) {
        const LoweringOps & lo = ops[static_cast<std::size_t>(k - 1)];
        for (int i = k - 1; i >= 1 && !v.is_zero(); --i) {
          v = z_power_sp(lo, mod, -i, p.at(k, i) - p.pat(k, i + 1), v);
          v = z_row_power_sp(lo, mod, i, p.at(k - 1, i) - p.pat(k, i + 1), v);
        }
        for (long t = 0; t < -p.pat(k, 1) && !v.is_zero(); ++t)
          v = apply_element(mod, alg.index_of(k, -k), v);
      }
      return v;
    }

    inline SparseVector xi_sp_vector(const AlgebraData & alg, const RealizedModule & mod,
                                     const std::vector<LoweringOps> & ops, const TypeCPattern & p)
    {
      SparseVector v = mod.highest_vector();
      for (int k = p.n; k >= 1; --k) {
        const LoweringOps & lo = ops[static_cast<std::size_t>(k - 1)];
        Rat stop = Rat(p.pat(k, 1)) + Rat(1, 2);
        for (Rat u(-1, 2); u >= stop && !v.is_zero(); u -= 1)
          v = *require_vector(apply_Z_interp(lo, mod, u, v), "build_family");
        for (int i = k - 1; i >= 1 && !v.is_zero(); --i) {
          v = z_power_sp(lo, mod, -i, p.at(k, i) - p.pat(k, i + 1), v);
          v = z_row_power_sp(lo, mod, i, p.at(k - 1, i) - p.pat(k, i + 1), v);
        }
      }
      return v;
    }

    inline void certify_family(const BasisFamily & fam, int dim)
    {
      if (static_cast<int>(fam.vectors.size()) != dim)
        throw std::logic_error("build_family: vector count differs from dimension");
      SpanSolver solver(dim, dim);
      for (const SparseVector & v : fam.vectors)
        if (!solver.add(v)) throw std::logic_error("build_family: dependent family");
    }
  } // namespace detail

  /// All basis families living inside a realized module. PI/THETA/LITTELMANN
  /// are plain monomial applications; XI_GL/ETA/XI_SP use lowering operators.
  inline BasisFamily build_family(const AlgebraData & alg, const RealizedModule & mod, BasisFamilyId id)
  {
    if (!(alg.spec == mod.spec)) throw std::invalid_argument("build_family: algebra/module mismatch");
    BasisFamily fam;
    fam.id = id;
    if (alg.spec.family == Family::GL) {
      if (id != BasisFamilyId::PI && id != BasisFamilyId::XI_GL && id != BasisFamilyId::LITTELMANN)
        throw std::invalid_argument("build_family: family id needs an sp module");
      fam.scheme = PatternOrder::GL_LEX;
      std::vector<GTPattern> patterns = enumerate_gt_patterns(mod.lambda);
      std::vector<LoweringOps> ops;
      if (id == BasisFamilyId::XI_GL)
        for (int k = 1; k <= alg.spec.n; ++k) ops.push_back(make_lowering_ops(alg, k));
      for (const GTPattern & p : patterns) {
        fam.order_keys.push_back(pattern_order_key(p, fam.scheme));
        if (id == BasisFamilyId::PI) {
          fam.vectors.push_back(apply_monomial(mod, pattern_exponent_bijection(alg, p, BasisTarget::PI)));
        } else if (id == BasisFamilyId::LITTELMANN) {
          fam.vectors.push_back(apply_monomial(mod, littelmann_monomial(alg, p)));
        } else {
          SparseVector v = mod.highest_vector();
          for (int k = p.n; k >= 2; --k)
            for (int i = k - 1; i >= 1 && !v.is_zero(); --i)
              v = detail::z_power_gl(ops[static_cast<std::size_t>(k - 1)], mod, i,
                                     p.at(k, i) - p.at(k - 1, i), v);
          fam.vectors.push_back(std::move(v));
        }
      }
    } else {
      if (alg.spec.indexing != SpIndexing::SIGNED)
        throw std::invalid_argument("build_family: sp families use the signed convention");
      if (id != BasisFamilyId::THETA && id != BasisFamilyId::ETA && id != BasisFamilyId::XI_SP)
        throw std::invalid_argument("build_family: family id needs a gl module or a zeta rep");
      fam.scheme = PatternOrder::SP_ROWSEQ;
      std::vector<TypeCPattern> patterns = enumerate_c_patterns(mod.lambda);
      std::vector<LoweringOps> ops;
      if (id != BasisFamilyId::THETA)
        for (int k = 1; k <= alg.spec.n; ++k) ops.push_back(make_lowering_ops(alg, k));
      for (const TypeCPattern & p : patterns) {
        fam.order_keys.push_back(pattern_order_key(p, fam.scheme));
        if (id == BasisFamilyId::THETA) fam.vectors.push_back(detail::theta_vector(alg, mod, p));
        else if (id == BasisFamilyId::ETA) fam.vectors.push_back(detail::eta_vector(alg, mod, ops, p));
        else fam.vectors.push_back(detail::xi_sp_vector(alg, mod, ops, p));
      }
    }
    detail::certify_family(fam, mod.dim);
    return fam;
  }

  namespace detail
  {
    inline bool matrix_equal(const SparseMatrix & a, const SparseMatrix & b)
    {
      if (a.rows != b.rows || a.cols != b.cols) return false;
      for (int j = 0; j < a.cols; ++j)
        if (a.columns[static_cast<std::size_t>(j)] != b.columns[static_cast<std::size_t>(j)]) return false;
      return true;
    }

    /// Entry add for a pattern-shift term, honouring the zero-if-invalid rule.
    inline void add_shift_entry(SparseMatrix & m, const std::map<std::vector<long>, int> & index,
                                const TypeCPattern & shifted, int col, const Rat & coef)
    {
      if (!c_valid(shifted)) return;
      auto it = index.find(shifted.key());
      if (it == index.end()) throw std::logic_error("build_zeta_rep: shifted pattern not enumerated");
      m.set(it->second, col, m.get(it->second, col) + coef);
    }
  } // namespace detail

  /// The sp_2n representation on zeta vectors: the four generator blocks are
  /// filled from the closed coefficient formulas
  ///   A_{ki} = prod_{a != i} 1/(l'_{ka} - l'_{ki}),
  ///   B_{ki} = 2 A_{ki} (2 l'_{ki} + 1) prod_a (l_{ka} - l'_{ki}) prod_a (l_{k-1,a} - l'_{ki}),
  ///   C_{ki} = 1/(2 l_{k-1,i} + 1) prod_{a != i} 1/((l_{k-1,i} - l_{k-1,a})(l_{k-1,i} + l_{k-1,a} + 1)),
  ///   D_{kijm} = A_{ki} A_{k-1,m} C_{kj} prod_{a != i} (l_{k-1,j}^2 - l'^2_{ka})
  ///                                      prod_{a != m} (l_{k-1,j}^2 - l'^2_{k-1,a}),
  /// and every remaining basis element is derived by bracket closure.
  inline ZetaRep build_zeta_rep(const AlgebraData & alg, const std::vector<long> & lam)
  {
    if (alg.spec.family != Family::SP || alg.spec.indexing != SpIndexing::SIGNED)
      throw std::invalid_argument("build_zeta_rep: needs signed sp");
    ZetaRep rep;
    rep.spec = alg.spec;
    rep.lambda = lam;
    rep.patterns = enumerate_c_patterns(lam);
    rep.dim = static_cast<int>(rep.patterns.size());
    int n = alg.spec.n;

    std::map<std::vector<long>, int> index;
    for (int j = 0; j < rep.dim; ++j) index[rep.patterns[static_cast<std::size_t>(j)].key()] = j;
    for (const TypeCPattern & p : rep.patterns) rep.weights.push_back(pattern_weight(p));

    std::vector<std::optional<SparseMatrix>> mats(static_cast<std::size_t>(alg.dim()));
    auto install = [&](int i, int j, SparseMatrix m) {
      auto [idx, coef] = canonical_element(alg, i, j);
      if (coef != 1)
        for (auto & col : m.columns)
          for (auto & [r, c] : col) c /= coef;
      mats[static_cast<std::size_t>(idx)] = std::move(m);
    };

    for (int k = 1; k <= n; ++k) {
      SparseMatrix diag(rep.dim, rep.dim), down(rep.dim, rep.dim), up(rep.dim, rep.dim);
      for (int j = 0; j < rep.dim; ++j) {
        const TypeCPattern & p = rep.patterns[static_cast<std::size_t>(j)];
        LCoords lc = l_coords(p);
        diag.set(j, j, Rat(rep.weights[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)]));
        for (int i = 1; i <= k; ++i) {
          Rat A(1);
          for (int a = 1; a <= k; ++a)
            if (a != i) A /= lc.pat(k, a) - lc.pat(k, i);
          Rat B = 2 * A * (2 * lc.pat(k, i) + 1);
          for (int a = 1; a <= k; ++a) B *= lc.at(k, a) - lc.pat(k, i);
          for (int a = 1; a <= k - 1; ++a) B *= lc.at(k - 1, a) - lc.pat(k, i);
          TypeCPattern q = p;
          q.pat(k, i) -= 1;
          detail::add_shift_entry(down, index, q, j, A);
          q.pat(k, i) += 2;
          detail::add_shift_entry(up, index, q, j, B);
        }
      }
      install(k, k, std::move(diag));
      install(k, -k, std::move(down));
      install(-k, k, std::move(up));
    }

    for (int k = 2; k <= n; ++k) {
      SparseMatrix m(rep.dim, rep.dim);
      for (int j = 0; j < rep.dim; ++j) {
        const TypeCPattern & p = rep.patterns[static_cast<std::size_t>(j)];
        LCoords lc = l_coords(p);
        auto coefC = [&](int i) {
          Rat C = 1 / (2 * lc.at(k - 1, i) + 1);
          for (int a = 1; a <= k - 1; ++a)
            if (a != i) C /= (lc.at(k - 1, i) - lc.at(k - 1, a)) * (lc.at(k - 1, i) + lc.at(k - 1, a) + 1);
          return C;
        };
        auto coefA = [&](int lev, int i) {
          Rat A(1);
          for (int a = 1; a <= lev; ++a)
            if (a != i) A /= lc.pat(lev, a) - lc.pat(lev, i);
          return A;
        };
        for (int i = 1; i <= k - 1; ++i) {
          TypeCPattern q = p;
          q.at(k - 1, i) += 1;
          detail::add_shift_entry(m, index, q, j, -coefC(i));
        }
        for (int i = 1; i <= k; ++i)
          for (int jj = 1; jj <= k - 1; ++jj)
            for (int mm = 1; mm <= k - 1; ++mm) {
              Rat D = coefA(k, i) * coefA(k - 1, mm) * coefC(jj);
              for (int a = 1; a <= k; ++a)
                if (a != i) D *= lc.at(k - 1, jj) * lc.at(k - 1, jj) - lc.pat(k, a) * lc.pat(k, a);
              for (int a = 1; a <= k - 1; ++a)
                if (a != mm) D *= lc.at(k - 1, jj) * lc.at(k - 1, jj) - lc.pat(k - 1, a) * lc.pat(k - 1, a);
              if (D == 0) continue;
              TypeCPattern q = p;
              q.pat(k, i) -= 1;
              q.at(k - 1, jj) -= 1;
              q.pat(k - 1, mm) -= 1;
              detail::add_shift_entry(m, index, q, j, -D);
            }
      }
      install(k - 1, -k, std::move(m));
    }

    // bracket closure: derive each missing element from a commutator of two
    // known ones whose expansion isolates it with a nonzero coefficient
    for (bool progress = true; progress;) {
      progress = false;
      for (int t = 0; t < alg.dim(); ++t) {
        if (mats[static_cast<std::size_t>(t)]) continue;
        for (int a = 0; a < alg.dim() && !mats[static_cast<std::size_t>(t)]; ++a) {
          if (!mats[static_cast<std::size_t>(a)]) continue;
          for (int b = 0; b < alg.dim(); ++b) {
            if (!mats[static_cast<std::size_t>(b)]) continue;
            const LinComb & lc = bracket(alg, a, b);
            Rat ct(0);
            bool usable = true;
            for (const auto & [s, c] : lc) {
              if (s == t) ct = c;
              else if (!mats[static_cast<std::size_t>(s)]) usable = false;
            }
            if (!usable || ct == 0) continue;
            SparseMatrix m = commutator(*mats[static_cast<std::size_t>(a)], *mats[static_cast<std::size_t>(b)]);
            for (const auto & [s, c] : lc)
              if (s != t) m = matadd(m, -c, *mats[static_cast<std::size_t>(s)]);
            for (auto & col : m.columns)
              for (auto & [r, c] : col) c /= ct;
            mats[static_cast<std::size_t>(t)] = std::move(m);
            progress = true;
            break;
          }
        }
      }
    }
    for (int t = 0; t < alg.dim(); ++t) {
      if (!mats[static_cast<std::size_t>(t)]) throw std::logic_error("build_zeta_rep: bracket closure stuck");
      rep.generators.push_back(std::move(*mats[static_cast<std::size_t>(t)]));
    }
    return rep;
  }

  /// Check every structure-constant relation on the derived matrices.
  inline bool verify_zeta_relations(const AlgebraData & alg, const ZetaRep & rep)
  {
    for (int a = 0; a < alg.dim(); ++a)
      for (int b = 0; b < alg.dim(); ++b) {
        SparseMatrix lhs = commutator(rep.generators[static_cast<std::size_t>(a)],
                                      rep.generators[static_cast<std::size_t>(b)]);
        SparseMatrix rhs(rep.dim, rep.dim);
        for (const auto & [s, c] : bracket(alg, a, b))
          rhs = matadd(rhs, c, rep.generators[static_cast<std::size_t>(s)]);
        if (!detail::matrix_equal(lhs, rhs)) return false;
      }
    return true;
  }

  /// The coordinate basis of a zeta representation as a family in its own space.
  inline BasisFamily build_family(const ZetaRep & rep)
  {
    BasisFamily fam;
    fam.id = BasisFamilyId::ZETA;
    fam.scheme = PatternOrder::SP_ROWSEQ;
    for (int j = 0; j < rep.dim; ++j) {
      fam.vectors.push_back(unit_vector(rep.dim, j));
      fam.order_keys.push_back(pattern_order_key(rep.patterns[static_cast<std::size_t>(j)], fam.scheme));
    }
    return fam;
  }

  /// zeta_Lambda = prod_{k=2..n} prod_{i<j<=k} 1/(-l'_{ki} - l'_{kj} - 1)! xi_Lambda.
  inline Rat zeta_normalization(const TypeCPattern & p)
  {
    LCoords lc = l_coords(p);
    Rat out(1);
    for (int k = 2; k <= p.n; ++k)
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
          Rat arg = -lc.pat(k, i) - lc.pat(k, j) - 1;
          if (!is_integer(arg) || arg < 0) throw std::logic_error("zeta_normalization: invalid factorial argument");
          out /= rat_factorial(rat_to_long(arg));
        }
    return out;
  }

} // namespace branchkit

#endif
