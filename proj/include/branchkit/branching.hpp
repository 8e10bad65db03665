#ifndef BRANCHKIT_BRANCHING_HPP
#define BRANCHKIT_BRANCHING_HPP

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "liealg.hpp"
#include "modulebuilder.hpp"
#include "orders.hpp"
#include "patterns.hpp"

namespace branchkit
{

  namespace detail
  {
    inline void require_dominant_gl(const std::vector<long> & lam)
    {
      for (std::size_t k = 1; k < lam.size(); ++k)
        if (lam[k - 1] < lam[k]) throw std::invalid_argument("branching: weight is not dominant");
    }

    inline void require_dominant_sp_signed(const std::vector<long> & lam)
    {
      if (!lam.empty() && lam[0] > 0) throw std::invalid_argument("branching: weight is not dominant");
      require_dominant_gl(lam);
    }

    inline void require_dominant_sp_one_based(const std::vector<long> & lam)
    {
      if (!lam.empty() && lam.back() < 0) throw std::invalid_argument("branching: weight is not dominant");
      require_dominant_gl(lam);
    }
  } // namespace detail

  /// Branching set for one chain step gl_n -> gl_{n-1}: exponent vectors
  /// over the last-row list E_{n,1}, ..., E_{n,n-1}, all boxes
  /// 0 <= alpha_k <= lambda_k - lambda_{k+1}.
  inline std::vector<Expo> gl_gamma(const std::vector<long> & lam)
  {
    detail::require_dominant_gl(lam);
    int n = static_cast<int>(lam.size());
    std::vector<Expo> out;
    Expo cur(static_cast<std::size_t>(n - 1), 0);
    auto rec = [&](auto && self, int k) -> void {
      if (k == n) {
        out.push_back(cur);
        return;
      }
      for (long e = 0; e <= lam[static_cast<std::size_t>(k - 1)] - lam[static_cast<std::size_t>(k)]; ++e) {
        cur[static_cast<std::size_t>(k - 1)] = e;
        self(self, k + 1);
      }
      cur[static_cast<std::size_t>(k - 1)] = 0;
    };
    rec(rec, 1);
    return out;
  }

  /// Branching set for gl_{n+1} -> gl_{n-1} with the middle-square
  /// embedding; exponent vectors over the MIDDLE_RLEX root list
  /// [E_{n+1,k} for k=2..n] + [E_{k,1} for k=2..n+1].  With N = n+1,
  /// the entry alpha_{k+1,1} lives at position N-2+(k-1) and
  /// alpha_{n+1,k} at position k-2.
  inline std::vector<Expo> gl_middle_gamma(const std::vector<long> & lam)
  {
    detail::require_dominant_gl(lam);
    int bign = static_cast<int>(lam.size());
    if (bign < 3) throw std::invalid_argument("gl_middle_gamma: need rank >= 3");
    int n = bign - 1;
    auto diff = [&](int k) { return lam[static_cast<std::size_t>(k - 1)] - lam[static_cast<std::size_t>(k)]; };

    std::vector<Expo> out;
    Expo cur(static_cast<std::size_t>(2 * n - 1), 0);
    // first column exponents alpha_{k+1,1}, k = 1..n
    std::vector<long> col(static_cast<std::size_t>(n + 2), 0);
    auto rec_row = [&](auto && self, int k) -> void {
      if (k > n) {
        out.push_back(cur);
        return;
      }
      long bound = diff(k) + col[static_cast<std::size_t>(k)] - col[static_cast<std::size_t>(k + 1)];
      for (long e = 0; e <= bound; ++e) {
        cur[static_cast<std::size_t>(k - 2)] = e;
        self(self, k + 1);
      }
      cur[static_cast<std::size_t>(k - 2)] = 0;
    };
    auto rec_col = [&](auto && self, int k) -> void {
      if (k > n) {
        rec_row(rec_row, 2);
        return;
      }
      for (long e = 0; e <= diff(k); ++e) {
        col[static_cast<std::size_t>(k + 1)] = e;
        cur[static_cast<std::size_t>(n - 1 + k - 1)] = e;
        self(self, k + 1);
      }
      col[static_cast<std::size_t>(k + 1)] = 0;
      cur[static_cast<std::size_t>(n - 1 + k - 1)] = 0;
    };
    rec_col(rec_col, 1);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Branching set for one chain step sp_2n -> sp_{2n-2} in the signed
  /// convention: exponent vectors over the list
  /// [F_{n,-n}, F_{n,-1}, ..., F_{n,-n+1}, F_{n,1}, ..., F_{n,n-1}],
  /// parameterised by the pairs (mu, nu) with the betweenness chains
  /// 0 >= nu_1 >= lambda_1 >= nu_2 >= ... >= nu_n >= lambda_n and
  /// nu_k >= mu_k >= nu_{k+1}.
  inline std::vector<Expo> sp_gt_gamma(const std::vector<long> & lam)
  {
    detail::require_dominant_sp_signed(lam);
    int n = static_cast<int>(lam.size());
    std::vector<Expo> out;
    std::vector<long> nu(static_cast<std::size_t>(n), 0);

    auto emit = [&](auto && self, int k, Expo & cur) -> void {
      if (k == n) {
        out.push_back(cur);
        return;
      }
      // mu_k runs over [nu_{k+1}, nu_k]
      for (long mu = nu[static_cast<std::size_t>(k)]; mu <= nu[static_cast<std::size_t>(k - 1)]; ++mu) {
        cur[static_cast<std::size_t>(k)] = mu - nu[static_cast<std::size_t>(k)];
        self(self, k + 1, cur);
      }
      cur[static_cast<std::size_t>(k)] = 0;
    };
    auto rec_nu = [&](auto && self, int k) -> void {
      if (k > n) {
        Expo cur(static_cast<std::size_t>(2 * n - 1), 0);
        cur[0] = -nu[0];
        for (int t = 1; t <= n - 1; ++t)
          cur[static_cast<std::size_t>(n - 1 + t)] =
              lam[static_cast<std::size_t>(t - 1)] - nu[static_cast<std::size_t>(t)];
        emit(emit, 1, cur);
        return;
      }
      long hi = (k == 1) ? 0 : lam[static_cast<std::size_t>(k - 2)];
      long lo = lam[static_cast<std::size_t>(k - 1)];
      for (long v = lo; v <= hi; ++v) {
        nu[static_cast<std::size_t>(k - 1)] = v;
        self(self, k + 1);
      }
    };
    rec_nu(rec_nu, 1);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Data attached to one branching monomial in the natural presentation
  /// sp_2n -> sp_{2n-2} (one-based convention):
  /// F_{2n,1}^b (F_{2n,n}F_{n,1})^{b_n} ... (F_{2n,2}F_{2,1})^{b_2}
  /// y_n^{a_n} ... y_2^{a_2} with y_i = F_{i,1} or F_{2n,i}.
  struct SpNaturalData
  {
    std::vector<long> mu;   ///< (mu_2, ..., mu_n)
    std::vector<long> a;    ///< a[i-2] = |lambda_i - mu_i|
    std::vector<int> iota;  ///< iota[i-2]: 0 for y_i = F_{i,1}, 1 for F_{2n,i}
    std::vector<long> c;    ///< c[k-1]: lambda in the fundamental-weight basis
    std::vector<long> d;    ///< d[k-1] = c_k - iota_k a_k - (1 - iota_{k+1}) a_{k+1}
    long b = 0;
    std::vector<long> bk;   ///< bk[k-2] = b_k
  };

  /// The d-numbers for a fixed (lambda, mu); entries may be negative when
  /// the multiplicity space vanishes.
  inline std::vector<long> sp_natural_d(const std::vector<long> & lam, const std::vector<long> & mu)
  {
    detail::require_dominant_sp_one_based(lam);
    int n = static_cast<int>(lam.size());
    if (static_cast<int>(mu.size()) != n - 1) throw std::invalid_argument("sp_natural_d: mu must have n-1 parts");
    auto lam_at = [&](int i) { return i <= n ? lam[static_cast<std::size_t>(i - 1)] : 0L; };
    auto mu_at = [&](int i) { return i <= n ? mu[static_cast<std::size_t>(i - 2)] : 0L; };
    std::vector<long> d;
    for (int i = 1; i <= n; ++i) {
      long lo = (i == 1) ? lam_at(1) : std::min(lam_at(i), mu_at(i));
      long hi = (i == n) ? 0 : std::max(lam_at(i + 1), mu_at(i + 1));
      d.push_back(lo - hi);
    }
    return d;
  }

  /// dim U(lambda, mu) = prod (d_i + 1) when all d_i >= 0, else 0.
  inline mpz_class multiplicity_dimension(const std::vector<long> & lam, const std::vector<long> & mu)
  {
    auto d = sp_natural_d(lam, mu);
    mpz_class out = 1;
    for (long x : d) {
      if (x < 0) return 0;
      out *= (x + 1);
    }
    return out;
  }

  /// All branching tuples of the natural presentation for a dominant
  /// one-based weight: for every mu with nonzero multiplicity, the tuples
  /// (b, b_n..b_2) satisfying b_k <= d_k, the partial-sum bounds and the
  /// total bound.
  inline std::vector<SpNaturalData> sp_natural_tuples(const std::vector<long> & lam)
  {
    detail::require_dominant_sp_one_based(lam);
    int n = static_cast<int>(lam.size());
    std::vector<SpNaturalData> out;

    std::vector<long> mu(static_cast<std::size_t>(n - 1), 0);
    auto rec_b = [&](auto && self, SpNaturalData & t, int k, long slack) -> void {
      // slack carries d_1 + sum_{i=2}^{k-1} (d_i - 2 b_i)
      if (k > n) {
        // here slack = sum d_i - 2 sum b_k, the bound for b
        for (long b = 0; b <= slack; ++b) {
          t.b = b;
          out.push_back(t);
        }
        t.b = 0;
        return;
      }
      long dk = t.d[static_cast<std::size_t>(k - 1)];
      long bound = std::min(dk, slack);
      for (long bkv = 0; bkv <= bound; ++bkv) {
        t.bk[static_cast<std::size_t>(k - 2)] = bkv;
        self(self, t, k + 1, slack + dk - 2 * bkv);
      }
      t.bk[static_cast<std::size_t>(k - 2)] = 0;
    };
    auto handle_mu = [&]() {
      SpNaturalData t;
      t.mu = mu;
      t.c.resize(static_cast<std::size_t>(n));
      for (int k = 1; k <= n - 1; ++k)
        t.c[static_cast<std::size_t>(k - 1)] = lam[static_cast<std::size_t>(k - 1)] - lam[static_cast<std::size_t>(k)];
      t.c[static_cast<std::size_t>(n - 1)] = lam[static_cast<std::size_t>(n - 1)];
      for (int i = 2; i <= n; ++i) {
        long li = lam[static_cast<std::size_t>(i - 1)], mi = mu[static_cast<std::size_t>(i - 2)];
        t.a.push_back(std::labs(li - mi));
        t.iota.push_back(li > mi ? 1 : 0);
      }
      // d_k = c_k - iota_k a_k - (1 - iota_{k+1}) a_{k+1}, with
      // iota_1 = 0 and a_{n+1} = 0
      auto a_at = [&](int i) { return (i >= 2 && i <= n) ? t.a[static_cast<std::size_t>(i - 2)] : 0L; };
      auto iota_at = [&](int i) { return (i >= 2 && i <= n) ? t.iota[static_cast<std::size_t>(i - 2)] : 0; };
      t.d.resize(static_cast<std::size_t>(n));
      for (int k = 1; k <= n; ++k) {
        t.d[static_cast<std::size_t>(k - 1)] = t.c[static_cast<std::size_t>(k - 1)] - iota_at(k) * a_at(k) -
                                               (1 - iota_at(k + 1)) * a_at(k + 1);
        if (t.d[static_cast<std::size_t>(k - 1)] < 0) return;
      }
      t.bk.assign(static_cast<std::size_t>(n - 1), 0);
      if (n == 1) {
        for (long b = 0; b <= t.d[0]; ++b) {
          t.b = b;
          out.push_back(t);
        }
        return;
      }
      rec_b(rec_b, t, 2, t.d[0]);
    };
    auto rec_mu = [&](auto && self, int i) -> void {
      if (i > n) {
        handle_mu();
        return;
      }
      long hi = (i == 2) ? lam[0] : mu[static_cast<std::size_t>(i - 3)];
      for (long v = 0; v <= hi; ++v) {
        mu[static_cast<std::size_t>(i - 2)] = v;
        self(self, i + 1);
      }
    };
    if (n == 1)
      handle_mu();
    else
      rec_mu(rec_mu, 2);
    return out;
  }

  /// Exponent vector of one natural-presentation tuple over the
  /// DEGREE_LEX root list [F_{2n,1}, F_{2n-1,1}, ..., F_{2,1}]
  /// (position p >= 1 holds the canonical form of F_{2n,p+1}).
  inline Expo sp_natural_exponents(int n, const SpNaturalData & t)
  {
    Expo cur(static_cast<std::size_t>(2 * n - 1), 0);
    cur[0] = t.b;
    for (int k = 2; k <= n; ++k) {
      long bkv = t.bk[static_cast<std::size_t>(k - 2)];
      long ak = t.a[static_cast<std::size_t>(k - 2)];
      int ik = t.iota[static_cast<std::size_t>(k - 2)];
      cur[static_cast<std::size_t>(k - 1)] += bkv + (ik == 1 ? ak : 0);      // F_{2n,k}
      cur[static_cast<std::size_t>(2 * n - k)] += bkv + (ik == 0 ? ak : 0);  // F_{k,1}
    }
    return cur;
  }

  inline std::vector<Expo> sp_natural_gamma(const std::vector<long> & lam)
  {
    int n = static_cast<int>(lam.size());
    std::vector<Expo> out;
    for (const SpNaturalData & t : sp_natural_tuples(lam)) out.push_back(sp_natural_exponents(n, t));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// The inequality description of the full essential set of gl_n over the
  /// root list E_{21}, E_{31}, E_{32}, ..., E_{n,n-1}:
  /// alpha_{i,j} <= lambda_j - lambda_{j+1}
  ///               + sum_{k=i+1}^{n} (alpha_{k,j+1} - alpha_{k,j}).
  inline std::vector<Expo> theorem_a_ess(const std::vector<long> & lam)
  {
    detail::require_dominant_gl(lam);
    int n = static_cast<int>(lam.size());
    std::size_t len = static_cast<std::size_t>(n * (n - 1) / 2);
    auto pos = [](int i, int j) { return static_cast<std::size_t>((i - 1) * (i - 2) / 2 + j - 1); };

    std::vector<Expo> out;
    Expo cur(len, 0);
    auto bound = [&](int i, int j) {
      long b = lam[static_cast<std::size_t>(j - 1)] - lam[static_cast<std::size_t>(j)];
      for (int k = i + 1; k <= n; ++k) b += cur[pos(k, j + 1)] - cur[pos(k, j)];
      return b;
    };
    auto rec = [&](auto && self, int i, int j) -> void {
      if (i == 1) {
        out.push_back(cur);
        return;
      }
      int ni = (j == i - 1) ? i - 1 : i;
      int nj = (j == i - 1) ? 1 : j + 1;
      long b = bound(i, j);
      for (long e = 0; e <= b; ++e) {
        cur[pos(i, j)] = e;
        self(self, ni, nj);
      }
      cur[pos(i, j)] = 0;
    };
    rec(rec, n, 1);
    std::sort(out.begin(), out.end());
    return out;
  }

  enum class BasisTarget { PI, THETA };

  /// The PBW monomial attached to a Gelfand-Tsetlin pattern: the exact
  /// exponents of the product
  /// E_{21}^{l_{21}-l_{11}} E_{31}^{l_{31}-l_{21}} E_{32}^{l_{32}-l_{22}} ...
  inline Monomial pattern_exponent_bijection(const AlgebraData & alg, const GTPattern & p, BasisTarget target)
  {
    if (target != BasisTarget::PI) throw std::invalid_argument("pattern_exponent_bijection: GT pattern targets PI");
    if (alg.spec.family != Family::GL || alg.spec.n != p.n)
      throw std::invalid_argument("pattern_exponent_bijection: algebra/pattern mismatch");
    Monomial m;
    for (int k = 2; k <= p.n; ++k)
      for (int i = 1; i <= k - 1; ++i) {
        long e = p.at(k, i) - p.at(k - 1, i);
        if (e == 0) continue;
        m.elements.push_back(alg.index_of(k, i));
        m.exponents.push_back(e);
      }
    return m;
  }

  /// The PBW monomial attached to a type C pattern: the exact exponents of
  /// the product over k = 1..n of
  /// F_{k,-k}^{-l'_{k1}} prod_i F_{k,-i}^{l_{k-1,i}-l'_{k,i+1}}
  ///                            F_{-i,-k}^{l_{ki}-l'_{k,i+1}},
  /// each F_{-i,-k} recorded through its canonical partner F_{k,i}.
  inline Monomial pattern_exponent_bijection(const AlgebraData & alg, const TypeCPattern & p, BasisTarget target)
  {
    if (target != BasisTarget::THETA)
      throw std::invalid_argument("pattern_exponent_bijection: type C pattern targets THETA");
    if (alg.spec.family != Family::SP || alg.spec.indexing != SpIndexing::SIGNED || alg.spec.n != p.n)
      throw std::invalid_argument("pattern_exponent_bijection: algebra/pattern mismatch");
    Monomial m;
    auto push = [&](int idx, long e) {
      if (e == 0) return;
      m.elements.push_back(idx);
      m.exponents.push_back(e);
    };
    for (int k = 1; k <= p.n; ++k) {
      push(alg.index_of(k, -k), -p.pat(k, 1));
      for (int i = 1; i <= k - 1; ++i) {
        push(alg.index_of(k, -i), p.at(k - 1, i) - p.pat(k, i + 1));
        push(canonical_element(alg, -i, -k).first, p.at(k, i) - p.pat(k, i + 1));
      }
    }
    return m;
  }

} // namespace branchkit

#endif
