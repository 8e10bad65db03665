#ifndef BRANCHKIT_PATTERNS_HPP
#define BRANCHKIT_PATTERNS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "liealg.hpp"
#include "rational.hpp"

namespace branchkit
{

  /// Gelfand-Tsetlin pattern; rows[t] is row k = n - t (top row first, = lambda).
  struct GTPattern
  {
    int n = 0;
    std::vector<std::vector<long>> rows;

    long at(int k, int i) const { return rows[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(i - 1)]; }
    long & at(int k, int i) { return rows[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(i - 1)]; }

    std::vector<long> key() const
    {
      std::vector<long> out;
      for (const auto & r : rows) out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    bool operator==(const GTPattern & o) const { return n == o.n && rows == o.rows; }
  };

  /// Type-C pattern (Intro convention, all entries nonpositive);
  /// rows[t] = row lambda_{n-t}, primed[t] = row lambda'_{n-t}.
  struct TypeCPattern
  {
    int n = 0;
    std::vector<std::vector<long>> rows, primed;

    long at(int k, int i) const { return rows[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(i - 1)]; }
    long & at(int k, int i) { return rows[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(i - 1)]; }
    long pat(int k, int i) const { return primed[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(i - 1)]; }
    long & pat(int k, int i) { return primed[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(i - 1)]; }

    std::vector<long> key() const
    {
      std::vector<long> out;
      for (int k = n; k >= 1; --k) {
        for (int i = 1; i <= k; ++i) out.push_back(at(k, i));
        for (int i = 1; i <= k; ++i) out.push_back(pat(k, i));
      }
      return out;
    }
    bool operator==(const TypeCPattern & o) const
    {
      return n == o.n && rows == o.rows && primed == o.primed;
    }
  };

  inline bool gt_valid(const GTPattern & p)
  {
    for (int k = p.n; k >= 2; --k)
      for (int i = 1; i <= k - 1; ++i)
        if (!(p.at(k, i) >= p.at(k - 1, i) && p.at(k - 1, i) >= p.at(k, i + 1))) return false;
    return true;
  }

  inline bool c_valid(const TypeCPattern & p)
  {
    for (int k = 1; k <= p.n; ++k) {
      if (p.pat(k, 1) > 0) return false;
      for (int i = 1; i <= k; ++i) {
        if (!(p.pat(k, i) >= p.at(k, i))) return false;
        if (i < k && !(p.at(k, i) >= p.pat(k, i + 1))) return false;
      }
      if (k >= 2) {
        for (int i = 1; i <= k - 1; ++i) {
          if (!(p.pat(k, i) >= p.at(k - 1, i))) return false;
          if (!(p.at(k - 1, i) >= p.pat(k, i + 1))) return false;
        }
      }
    }
    return true;
  }

  inline bool dominant(const AlgebraSpec & spec, const std::vector<long> & lam)
  {
    if (static_cast<int>(lam.size()) != spec.n) return false;
    for (std::size_t i = 0; i + 1 < lam.size(); ++i)
      if (lam[i] < lam[i + 1]) return false;
    if (spec.family == Family::SP) {
      if (spec.indexing == SpIndexing::SIGNED) return lam.empty() || lam[0] <= 0;
      return lam.empty() || lam.back() >= 0;
    }
    return true;
  }

  inline std::vector<GTPattern> enumerate_gt_patterns(const std::vector<long> & lam)
  {
    int n = static_cast<int>(lam.size());
    if (!dominant({Family::GL, n}, lam)) throw std::invalid_argument("enumerate_gt_patterns: non-dominant weight");
    std::vector<GTPattern> out;
    GTPattern p;
    p.n = n;
    p.rows.assign(1, lam);
    std::vector<GTPattern> stack{p};
    for (int k = n - 1; k >= 1; --k) {
      std::vector<GTPattern> next;
      for (const GTPattern & q : stack) {
        const auto & above = q.rows.back();
        std::vector<long> row(static_cast<std::size_t>(k));
        auto rec = [&](auto && self, int i) -> void {
          if (i > k) {
            GTPattern r = q;
            r.rows.push_back(row);
            next.push_back(std::move(r));
            return;
          }
          for (long v = above[static_cast<std::size_t>(i)]; v <= above[static_cast<std::size_t>(i - 1)]; ++v) {
            row[static_cast<std::size_t>(i - 1)] = v;
            self(self, i + 1);
          }
        };
        rec(rec, 1);
      }
      stack = std::move(next);
    }
    out = std::move(stack);
    std::sort(out.begin(), out.end(), [](const GTPattern & a, const GTPattern & b) { return a.key() < b.key(); });
    return out;
  }

  inline std::vector<TypeCPattern> enumerate_c_patterns(const std::vector<long> & lam)
  {
    int n = static_cast<int>(lam.size());
    if (!dominant({Family::SP, n, SpIndexing::SIGNED}, lam))
      throw std::invalid_argument("enumerate_c_patterns: non-dominant weight");
    TypeCPattern seed;
    seed.n = n;
    seed.rows.assign(1, lam);
    std::vector<TypeCPattern> stack{seed};
    for (int k = n; k >= 1; --k) {
      // primed row k between row k (and 0 above)
      std::vector<TypeCPattern> next;
      for (const TypeCPattern & q : stack) {
        const auto & below = q.rows.back(); // row k
        std::vector<long> row(static_cast<std::size_t>(k));
        auto rec = [&](auto && self, int i) -> void {
          if (i > k) {
            TypeCPattern r = q;
            r.primed.push_back(row);
            next.push_back(std::move(r));
            return;
          }
          long hi = i == 1 ? 0 : below[static_cast<std::size_t>(i - 2)];
          for (long v = below[static_cast<std::size_t>(i - 1)]; v <= hi; ++v) {
            row[static_cast<std::size_t>(i - 1)] = v;
            self(self, i + 1);
          }
        };
        rec(rec, 1);
      }
      stack = std::move(next);
      if (k == 1) break;
      // row k-1 between primed row k
      next.clear();
      for (const TypeCPattern & q : stack) {
        const auto & pr = q.primed.back(); // primed row k
        std::vector<long> row(static_cast<std::size_t>(k - 1));
        auto rec = [&](auto && self, int i) -> void {
          if (i > k - 1) {
            TypeCPattern r = q;
            r.rows.push_back(row);
            next.push_back(std::move(r));
            return;
          }
          for (long v = pr[static_cast<std::size_t>(i)]; v <= pr[static_cast<std::size_t>(i - 1)]; ++v) {
            row[static_cast<std::size_t>(i - 1)] = v;
            self(self, i + 1);
          }
        };
        rec(rec, 1);
      }
      stack = std::move(next);
    }
    std::sort(stack.begin(), stack.end(),
              [](const TypeCPattern & a, const TypeCPattern & b) { return a.key() < b.key(); });
    return stack;
  }

  inline std::optional<GTPattern> shift_gt_pattern(const GTPattern & p, int k, int i, int delta)
  {
    if (k < 1 || k > p.n || i < 1 || i > k) throw std::out_of_range("shift_gt_pattern");
    GTPattern q = p;
    q.at(k, i) += delta;
    if (!gt_valid(q)) return std::nullopt;
    return q;
  }

  inline std::optional<TypeCPattern> shift_c_pattern(const TypeCPattern & p, int k, int i, bool primed, int delta)
  {
    if (k < 1 || k > p.n || i < 1 || i > k) throw std::out_of_range("shift_c_pattern");
    TypeCPattern q = p;
    if (primed) q.pat(k, i) += delta;
    else q.at(k, i) += delta;
    if (!c_valid(q)) return std::nullopt;
    return q;
  }

  /// l_{ki} = lambda_{ki} - i - 1/2 and l'_{ki} = lambda'_{ki} - i + 1/2.
  struct LCoords
  {
    int n = 0;
    std::vector<std::vector<Rat>> l, lp; // same layout as TypeCPattern rows

    Rat at(int k, int i) const { return l[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(i - 1)]; }
    Rat pat(int k, int i) const { return lp[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(i - 1)]; }
  };

  inline LCoords l_coords(const TypeCPattern & p)
  {
    LCoords c;
    c.n = p.n;
    c.l.resize(p.rows.size());
    c.lp.resize(p.primed.size());
    for (int k = p.n; k >= 1; --k) {
      auto & lrow = c.l[static_cast<std::size_t>(p.n - k)];
      auto & prow = c.lp[static_cast<std::size_t>(p.n - k)];
      lrow.resize(static_cast<std::size_t>(k));
      prow.resize(static_cast<std::size_t>(k));
      for (int i = 1; i <= k; ++i) {
        lrow[static_cast<std::size_t>(i - 1)] = Rat(p.at(k, i)) - Rat(i) - Rat(1, 2);
        prow[static_cast<std::size_t>(i - 1)] = Rat(p.pat(k, i)) - Rat(i) + Rat(1, 2);
      }
    }
    return c;
  }

  /// Weyl dimension product over the algebra's positive roots.
  inline mpz_class weyl_dimension(const AlgebraData & alg, const std::vector<long> & lam)
  {
    if (!dominant(alg.spec, lam)) throw std::invalid_argument("weyl_dimension: non-dominant weight");
    Weight lw;
    for (long x : lam) lw.push_back(Rat(x));
    Rat prod(1);
    for (const RootTriple & t : alg.positive_roots) {
      prod *= weight_dot(weight_add(lw, alg.rho), t.alpha) / weight_dot(alg.rho, t.alpha);
    }
    if (!is_integer(prod) || prod <= 0) throw std::logic_error("weyl_dimension: non-integer product");
    return prod.get_num();
  }

  enum class PatternOrder { GL_LEX, SP_ROWSEQ };

  inline std::vector<long> pattern_order_key(const GTPattern & p, PatternOrder scheme)
  {
    if (scheme != PatternOrder::GL_LEX) throw std::invalid_argument("pattern_order_key: scheme/family mismatch");
    std::vector<long> out;
    for (int k = p.n - 1; k >= 1; --k)
      for (int i = 1; i <= k; ++i) out.push_back(p.at(k, i));
    return out;
  }

  inline std::vector<long> pattern_order_key(const TypeCPattern & p, PatternOrder scheme)
  {
    if (scheme != PatternOrder::SP_ROWSEQ) throw std::invalid_argument("pattern_order_key: scheme/family mismatch");
    std::vector<long> out;
    for (int k = p.n; k >= 1; --k) {
      for (int i = 1; i <= k - 1; ++i) out.push_back(p.at(k - 1, i));
      for (int i = 1; i <= k; ++i) out.push_back(p.pat(k, i));
    }
    return out;
  }

  /// gl weight of the basis vector labelled by a GT pattern.
  inline std::vector<long> pattern_weight(const GTPattern & p)
  {
    std::vector<long> w(static_cast<std::size_t>(p.n), 0);
    long prev = 0;
    for (int k = 1; k <= p.n; ++k) {
      long s = 0;
      for (int i = 1; i <= k; ++i) s += p.at(k, i);
      w[static_cast<std::size_t>(k - 1)] = s - prev;
      prev = s;
    }
    return w;
  }

  /// sp weight (F_kk eigenvalues) of the zeta vector labelled by a type-C pattern.
  inline std::vector<long> pattern_weight(const TypeCPattern & p)
  {
    std::vector<long> w(static_cast<std::size_t>(p.n), 0);
    for (int k = 1; k <= p.n; ++k) {
      long s = 0;
      for (int i = 1; i <= k; ++i) s += p.at(k, i) - 2 * p.pat(k, i);
      for (int i = 1; i <= k - 1; ++i) s += p.at(k - 1, i);
      w[static_cast<std::size_t>(k - 1)] = s;
    }
    return w;
  }

} // namespace branchkit

#endif
