#ifndef BRANCHKIT_LIEALG_HPP
#define BRANCHKIT_LIEALG_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "sparse.hpp"

namespace branchkit
{

  enum class Family { GL, SP };
  enum class SpIndexing { SIGNED, ONE_BASED };

  struct AlgebraSpec
  {
    Family family = Family::GL;
    int n = 1;
    SpIndexing indexing = SpIndexing::SIGNED; // only meaningful for SP

    bool operator==(const AlgebraSpec & o) const
    {
      return family == o.family && n == o.n && (family == Family::GL || indexing == o.indexing);
    }
  };

  /// Weight in the coordinates of the algebra's Cartan basis (E_kk or F_kk, k = 1..n).
  using Weight = std::vector<Rat>;

  /// Linear combination of algebra basis elements: sorted (basis index, coefficient).
  using LinComb = std::vector<std::pair<int, Rat>>;

  struct ElementTag
  {
    int i = 0, j = 0;
    bool operator==(const ElementTag & o) const { return i == o.i && j == o.j; }
    auto operator<=>(const ElementTag & o) const = default;
  };

  /// sl2 triple data attached to a positive root: e is the basis root vector,
  /// f = f_scale * basis[f_index], h = sum_k h[k] * Cartan_k with alpha(h) = 2.
  struct RootTriple
  {
    Weight alpha;
    int e_index = -1;
    int f_index = -1;
    Rat f_scale = Rat(1);
    std::vector<Rat> h;
    Rat rho_h = Rat(0); // rho of the owning (sub)algebra evaluated on h
  };

  struct AlgebraData
  {
    AlgebraSpec spec;
    int rep_dim = 0;                      // n for gl, 2n for sp
    std::vector<ElementTag> basis;        // canonical tags (one per proportionality class)
    std::vector<SparseMatrix> matrices;   // defining representation
    std::vector<Weight> weights;          // ad-weight of each basis element
    std::vector<int> cartan;              // basis indices of E_kk / F_kk, k = 1..n
    std::vector<int> raising, lowering;   // basis indices with tag i<j resp. i>j
    std::vector<RootTriple> positive_roots;
    Weight rho;
    std::vector<std::vector<LinComb>> brackets; // structure constants [a][b]
    std::map<std::pair<int, int>, int> tag_index;

    int index_of(int i, int j) const
    {
      auto it = tag_index.find({i, j});
      if (it == tag_index.end()) throw std::invalid_argument("AlgebraData: unknown tag");
      return it->second;
    }

    int dim() const { return static_cast<int>(basis.size()); }
  };

  namespace detail
  {
    inline int sgn(int i) { return i > 0 ? 1 : -1; }

    /// 0-based position of a defining-rep index.
    inline int rep_pos(const AlgebraSpec & spec, int i)
    {
      if (spec.family == Family::GL) return i - 1;
      if (spec.indexing == SpIndexing::ONE_BASED) return i - 1;
      return i < 0 ? i + spec.n : i + spec.n - 1; // signed order -n..-1,1..n
    }

    /// All defining-rep index values in their natural order.
    inline std::vector<int> rep_indices(const AlgebraSpec & spec)
    {
      std::vector<int> out;
      if (spec.family == Family::GL) {
        for (int i = 1; i <= spec.n; ++i) out.push_back(i);
      } else if (spec.indexing == SpIndexing::ONE_BASED) {
        for (int i = 1; i <= 2 * spec.n; ++i) out.push_back(i);
      } else {
        for (int i = -spec.n; i <= -1; ++i) out.push_back(i);
        for (int i = 1; i <= spec.n; ++i) out.push_back(i);
      }
      return out;
    }

    /// Canonical representative test for sp tags (one element per proportional pair).
    inline bool canonical_tag(const AlgebraSpec & spec, int i, int j)
    {
      if (spec.family == Family::GL) return true;
      if (spec.indexing == SpIndexing::SIGNED) return i + j >= 0;
      return i + j <= 2 * spec.n + 1; // keeps the Cartan tags F_kk, k <= n
    }

    inline SparseMatrix defining_matrix(const AlgebraSpec & spec, int i, int j)
    {
      int d = spec.family == Family::GL ? spec.n : 2 * spec.n;
      SparseMatrix m(d, d);
      if (spec.family == Family::GL) {
        m.set(i - 1, j - 1, Rat(1));
        return m;
      }
      // F_ij = E_ij - s E_{j*,i*} where (j*, i*) is the paired tag
      m.set(rep_pos(spec, i), rep_pos(spec, j), Rat(1));
      int pi, pj, s;
      if (spec.indexing == SpIndexing::SIGNED) {
        pi = -j; pj = -i; s = sgn(i) * sgn(j);
      } else {
        int N2 = 2 * spec.n;
        pi = N2 + 1 - j; pj = N2 + 1 - i;
        int ei = i <= spec.n ? 1 : -1, ej = j <= spec.n ? 1 : -1;
        s = ei * ej;
      }
      Rat cur = m.get(rep_pos(spec, pi), rep_pos(spec, pj));
      m.set(rep_pos(spec, pi), rep_pos(spec, pj), cur - Rat(s));
      return m;
    }

    /// Weight of E_ij/F_ij in Cartan coordinates.
    inline Weight tag_weight(const AlgebraSpec & spec, int i, int j)
    {
      Weight w(static_cast<std::size_t>(spec.n), Rat(0));
      auto addhat = [&](int a, int s) {
        if (spec.family == Family::GL) { w[static_cast<std::size_t>(a - 1)] += s; return; }
        if (spec.indexing == SpIndexing::SIGNED) {
          if (a > 0) w[static_cast<std::size_t>(a - 1)] += s;
          else w[static_cast<std::size_t>(-a - 1)] -= s;
        } else {
          if (a <= spec.n) w[static_cast<std::size_t>(a - 1)] += s;
          else w[static_cast<std::size_t>(2 * spec.n - a)] -= s;
        }
      };
      addhat(i, 1);
      addhat(j, -1);
      return w;
    }

    inline bool raising_tag(int i, int j) { return i < j; }

    inline SparseVector flatten(const SparseMatrix & m)
    {
      SparseVector v(m.rows * m.cols);
      for (int c = 0; c < m.cols; ++c)
        for (const auto & [r, x] : m.columns[c]) v.set(r * m.cols + c, x);
      return v;
    }
  } // namespace detail

  inline bool weight_is_zero(const Weight & w)
  {
    return std::all_of(w.begin(), w.end(), [](const Rat & x) { return x == 0; });
  }

  inline Weight weight_add(const Weight & a, const Weight & b)
  {
    Weight r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
  }

  inline Weight weight_sub(const Weight & a, const Weight & b)
  {
    Weight r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
  }

  inline Rat weight_dot(const Weight & a, const Weight & b)
  {
    Rat s(0);
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
  }

  inline std::string element_label(const AlgebraData & alg, int idx)
  {
    const char * letter = alg.spec.family == Family::GL ? "E" : "F";
    const ElementTag & t = alg.basis[static_cast<std::size_t>(idx)];
    return std::string(letter) + "[" + std::to_string(t.i) + "," + std::to_string(t.j) + "]";
  }

  /// Builds the full algebra data for the given spec.
  inline AlgebraData build_algebra(const AlgebraSpec & spec)
  {
    if (spec.n < 1) throw std::invalid_argument("build_algebra: n >= 1 required");
    AlgebraData alg;
    alg.spec = spec;
    alg.rep_dim = spec.family == Family::GL ? spec.n : 2 * spec.n;

    auto idxs = detail::rep_indices(spec);
    for (int i : idxs) {
      for (int j : idxs) {
        if (!detail::canonical_tag(spec, i, j)) continue;
        int k = alg.dim();
        alg.basis.push_back({i, j});
        alg.matrices.push_back(detail::defining_matrix(spec, i, j));
        alg.weights.push_back(detail::tag_weight(spec, i, j));
        alg.tag_index[{i, j}] = k;
        if (i == j && i > 0 && (spec.family == Family::GL || i <= spec.n)) {
          // Cartan picked up below in k-order
        }
        if (detail::raising_tag(i, j)) alg.raising.push_back(k);
        if (i > j) alg.lowering.push_back(k);
      }
    }
    for (int k = 1; k <= spec.n; ++k) alg.cartan.push_back(alg.index_of(k, k));

    int expected = spec.family == Family::GL ? spec.n * spec.n : spec.n * (2 * spec.n + 1);
    if (alg.dim() != expected) throw std::logic_error("build_algebra: basis count mismatch");

    // structure constants via the defining representation
    SpanSolver solver(alg.rep_dim * alg.rep_dim, alg.dim());
    for (int k = 0; k < alg.dim(); ++k) {
      if (!solver.add(detail::flatten(alg.matrices[static_cast<std::size_t>(k)])))
        throw std::logic_error("build_algebra: dependent basis");
    }
    alg.brackets.assign(static_cast<std::size_t>(alg.dim()),
                        std::vector<LinComb>(static_cast<std::size_t>(alg.dim())));
    for (int a = 0; a < alg.dim(); ++a) {
      for (int b = 0; b < alg.dim(); ++b) {
        SparseMatrix c = commutator(alg.matrices[static_cast<std::size_t>(a)],
                                    alg.matrices[static_cast<std::size_t>(b)]);
        auto coords = solver.express(detail::flatten(c));
        if (!coords) throw std::logic_error("build_algebra: commutator outside span");
        LinComb lc;
        for (int k = 0; k < alg.dim(); ++k)
          if ((*coords)[static_cast<std::size_t>(k)] != 0)
            lc.emplace_back(k, (*coords)[static_cast<std::size_t>(k)]);
        alg.brackets[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = lc;
      }
    }

    // positive roots of the full algebra with sl2 triples and rho
    alg.rho.assign(static_cast<std::size_t>(spec.n), Rat(0));
    for (int e : alg.raising)
      alg.rho = weight_add(alg.rho, alg.weights[static_cast<std::size_t>(e)]);
    for (auto & x : alg.rho) x /= 2;
    for (int e : alg.raising) {
      RootTriple t;
      t.alpha = alg.weights[static_cast<std::size_t>(e)];
      t.e_index = e;
      Weight neg = t.alpha;
      for (auto & x : neg) x = -x;
      for (int f : alg.lowering) {
        if (alg.weights[static_cast<std::size_t>(f)] == neg) { t.f_index = f; break; }
      }
      if (t.f_index < 0) throw std::logic_error("build_algebra: missing negative root vector");
      // h_raw = [e, f0]; rescale so alpha(h) = 2
      const LinComb & br = alg.brackets[static_cast<std::size_t>(e)][static_cast<std::size_t>(t.f_index)];
      std::vector<Rat> hraw(static_cast<std::size_t>(spec.n), Rat(0));
      for (const auto & [k, c] : br) {
        auto pos = std::find(alg.cartan.begin(), alg.cartan.end(), k);
        if (pos == alg.cartan.end()) throw std::logic_error("build_algebra: [e,f] not Cartan");
        hraw[static_cast<std::size_t>(pos - alg.cartan.begin())] = c;
      }
      Rat c = weight_dot(t.alpha, hraw);
      if (c == 0) throw std::logic_error("build_algebra: alpha(h_raw) = 0");
      t.f_scale = 2 / c;
      t.h = hraw;
      for (auto & x : t.h) x *= t.f_scale;
      t.rho_h = weight_dot(alg.rho, t.h);
      alg.positive_roots.push_back(std::move(t));
    }
    return alg;
  }

  /// Expansion of [a, b] in the algebra basis.
  inline const LinComb & bracket(const AlgebraData & alg, int a, int b)
  {
    return alg.brackets.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
  }

  /// Canonical form of an arbitrary (possibly non-canonical) tag:
  /// E/F_{ij} = scale * basis[index].
  inline std::pair<int, Rat> canonical_element(const AlgebraData & alg, int i, int j)
  {
    const AlgebraSpec & spec = alg.spec;
    if (spec.family == Family::GL || detail::canonical_tag(spec, i, j))
      return {alg.index_of(i, j), Rat(1)};
    if (spec.indexing == SpIndexing::SIGNED)
      return {alg.index_of(-j, -i), Rat(-detail::sgn(i) * detail::sgn(j))};
    int N2 = 2 * spec.n;
    int ei = i <= spec.n ? 1 : -1, ej = j <= spec.n ? 1 : -1;
    return {alg.index_of(N2 + 1 - j, N2 + 1 - i), Rat(-ei * ej)};
  }

  /// SIGNED <-> ONE_BASED defining-index conversion (order preserving).
  inline int convert_rep_index(int n, int i, SpIndexing from)
  {
    if (from == SpIndexing::SIGNED) return i > 0 ? i + n : i + n + 1;
    return i <= n ? i - n - 1 : i - n;
  }

  /// Image of a basis element of one sp convention inside the other:
  /// basis_from[idx] = scale * basis_to[index of returned tag].
  inline std::pair<int, Rat> convert_element(const AlgebraData & from, const AlgebraData & to, int idx)
  {
    if (from.spec.family != Family::SP || to.spec.family != Family::SP || from.spec.n != to.spec.n)
      throw std::invalid_argument("convert_element: sp algebras of equal rank required");
    const ElementTag & t = from.basis[static_cast<std::size_t>(idx)];
    int i2 = convert_rep_index(from.spec.n, t.i, from.spec.indexing);
    int j2 = convert_rep_index(from.spec.n, t.j, from.spec.indexing);
    return canonical_element(to, i2, j2);
  }

  /// Highest-weight adapter between the sp conventions: lambda -> (-lambda_n, ..., -lambda_1).
  inline std::vector<long> convert_sp_weight(const std::vector<long> & lam)
  {
    std::vector<long> out(lam.rbegin(), lam.rend());
    for (auto & x : out) x = -x;
    return out;
  }

  /// Simple roots with the conventional numbering (type A: e_k - e_{k+1};
  /// type C one-based: alpha_n = 2 e_n long; type C signed: alpha_n = -2 eps_1).
  inline std::vector<Weight> simple_roots(const AlgebraSpec & spec)
  {
    int n = spec.n;
    std::vector<Weight> out;
    auto unit = [&](int k) { Weight w(static_cast<std::size_t>(n), Rat(0)); w[static_cast<std::size_t>(k)] = 1; return w; };
    if (spec.family == Family::GL) {
      for (int k = 1; k < n; ++k) out.push_back(weight_sub(unit(k - 1), unit(k)));
      return out;
    }
    if (spec.indexing == SpIndexing::ONE_BASED) {
      for (int k = 1; k < n; ++k) out.push_back(weight_sub(unit(k - 1), unit(k)));
      Weight lng = unit(n - 1);
      lng[static_cast<std::size_t>(n - 1)] = 2;
      out.push_back(lng);
    } else {
      for (int k = 1; k < n; ++k) out.push_back(weight_sub(unit(n - k - 1), unit(n - k)));
      Weight lng(static_cast<std::size_t>(n), Rat(0));
      lng[0] = -2;
      out.push_back(lng);
    }
    return out;
  }

  inline Weight reflect(const Weight & x, const Weight & alpha)
  {
    Rat c = 2 * weight_dot(x, alpha) / weight_dot(alpha, alpha);
    Weight r = x;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= c * alpha[k];
    return r;
  }

  /// Canonical reduced word for the longest Weyl element (1-based simple indices).
  inline std::vector<int> canonical_longest_word(const AlgebraSpec & spec)
  {
    std::vector<int> word;
    if (spec.family == Family::GL) {
      for (int k = 1; k < spec.n; ++k)
        for (int j = k; j >= 1; --j) word.push_back(j);
    } else {
      for (int k = spec.n; k >= 1; --k) {
        for (int j = k; j <= spec.n; ++j) word.push_back(j);
        for (int j = spec.n - 1; j >= k; --j) word.push_back(j);
      }
    }
    return word;
  }

  /// beta_k = s_{i1}...s_{i_{k-1}}(alpha_{ik}) for a reduced word of the longest
  /// element; returns the basis indices of the negative root vectors f_1..f_N.
  inline std::vector<int> roots_from_reduced_word(const AlgebraData & alg, const std::vector<int> & word)
  {
    auto simples = simple_roots(alg.spec);
    std::size_t N = alg.positive_roots.size();
    if (word.size() != N) throw std::invalid_argument("roots_from_reduced_word: wrong word length");
    std::vector<Weight> betas;
    for (std::size_t k = 0; k < word.size(); ++k) {
      int ik = word[k];
      if (ik < 1 || ik > static_cast<int>(simples.size()))
        throw std::invalid_argument("roots_from_reduced_word: bad simple index");
      Weight b = simples[static_cast<std::size_t>(ik - 1)];
      for (std::size_t t = k; t-- > 0;) b = reflect(b, simples[static_cast<std::size_t>(word[t] - 1)]);
      if (std::find(betas.begin(), betas.end(), b) != betas.end())
        throw std::invalid_argument("roots_from_reduced_word: word not reduced (repeated root)");
      betas.push_back(std::move(b));
    }
    std::vector<int> out;
    for (const Weight & b : betas) {
      Weight neg = b;
      for (auto & x : neg) x = -x;
      int found = -1;
      for (int f : alg.lowering)
        if (alg.weights[static_cast<std::size_t>(f)] == neg) { found = f; break; }
      if (found < 0) throw std::invalid_argument("roots_from_reduced_word: beta_k not a positive root");
      out.push_back(found);
    }
    return out;
  }

  /// Checks the betweenness condition for every summable pair of an ordered
  /// list of roots (positions within the list).
  inline bool verify_normal_order(const std::vector<Weight> & ordered)
  {
    auto pos = [&](const Weight & w) -> int {
      for (std::size_t k = 0; k < ordered.size(); ++k)
        if (ordered[k] == w) return static_cast<int>(k);
      return -1;
    };
    for (std::size_t a = 0; a < ordered.size(); ++a) {
      for (std::size_t b = a + 1; b < ordered.size(); ++b) {
        int s = pos(weight_add(ordered[a], ordered[b]));
        if (s < 0) continue;
        if (!(static_cast<int>(a) < s && s < static_cast<int>(b)))
          return false;
      }
    }
    return true;
  }

  /// g0 data for projector contexts and branching steps.
  struct Subalgebra
  {
    std::vector<int> elements;              // ambient basis indices spanning g0
    std::vector<int> raising, lowering;     // within g0
    std::vector<int> weight_coords;         // 0-based Cartan coordinates carrying g0 weights
    std::vector<RootTriple> positive_roots; // triples within g0, rho_h uses rho0
    Weight rho0;                            // ambient coordinates
    std::vector<int> normal_order;          // indices into positive_roots (verified)
    std::vector<int> r_list;                // ambient lowering elements outside g0
  };

  /// g0 spanned by basis elements whose tags both lie in `kept` (a set of
  /// defining-rep index values, closed under the sp pairing).
  inline Subalgebra build_subalgebra(const AlgebraData & alg, const std::set<int> & kept)
  {
    const AlgebraSpec & spec = alg.spec;
    Subalgebra sub;
    for (int k = 0; k < alg.dim(); ++k) {
      const ElementTag & t = alg.basis[static_cast<std::size_t>(k)];
      bool inside = kept.count(t.i) && kept.count(t.j);
      if (inside) {
        sub.elements.push_back(k);
        if (detail::raising_tag(t.i, t.j)) sub.raising.push_back(k);
        if (t.i > t.j) sub.lowering.push_back(k);
      } else if (t.i > t.j) {
        sub.r_list.push_back(k);
      }
    }
    for (int v : kept) {
      int coord = -1;
      if (spec.family == Family::GL) coord = v - 1;
      else if (spec.indexing == SpIndexing::SIGNED) { if (v > 0) coord = v - 1; }
      else { if (v <= spec.n) coord = v - 1; }
      if (coord >= 0) sub.weight_coords.push_back(coord);
    }
    std::sort(sub.weight_coords.begin(), sub.weight_coords.end());

    sub.rho0.assign(static_cast<std::size_t>(spec.n), Rat(0));
    for (int e : sub.raising) sub.rho0 = weight_add(sub.rho0, alg.weights[static_cast<std::size_t>(e)]);
    for (auto & x : sub.rho0) x /= 2;

    for (int e : sub.raising) {
      RootTriple t;
      t.alpha = alg.weights[static_cast<std::size_t>(e)];
      t.e_index = e;
      Weight neg = t.alpha;
      for (auto & x : neg) x = -x;
      for (int f : sub.lowering)
        if (alg.weights[static_cast<std::size_t>(f)] == neg) { t.f_index = f; break; }
      if (t.f_index < 0) throw std::logic_error("build_subalgebra: missing f");
      const LinComb & br = bracket(alg, e, t.f_index);
      std::vector<Rat> hraw(static_cast<std::size_t>(spec.n), Rat(0));
      for (const auto & [k, c] : br) {
        auto pos = std::find(alg.cartan.begin(), alg.cartan.end(), k);
        if (pos == alg.cartan.end()) throw std::logic_error("build_subalgebra: [e,f] not Cartan");
        hraw[static_cast<std::size_t>(pos - alg.cartan.begin())] = c;
      }
      Rat c = weight_dot(t.alpha, hraw);
      if (c == 0) throw std::logic_error("build_subalgebra: alpha(h_raw) = 0");
      t.f_scale = 2 / c;
      t.h = hraw;
      for (auto & x : t.h) x *= t.f_scale;
      t.rho_h = weight_dot(sub.rho0, t.h);
      sub.positive_roots.push_back(std::move(t));
    }

    // normal order by the slope construction: sort by psi(alpha)/phi(alpha)
    // with phi = <., 2 rho0> > 0; generic psi makes all slopes distinct.
    std::size_t nr = sub.positive_roots.size();
    sub.normal_order.resize(nr);
    for (std::size_t k = 0; k < nr; ++k) sub.normal_order[static_cast<int>(k)] = static_cast<int>(k);
    if (nr > 1) {
      Weight two_rho = sub.rho0;
      for (auto & x : two_rho) x *= 2;
      bool done = false;
      for (long M : {5L, 13L, 101L, 1009L}) {
        Weight psi(static_cast<std::size_t>(spec.n), Rat(0));
        Rat p(1);
        for (std::size_t k = 0; k < psi.size(); ++k) { p *= M; psi[k] = p; }
        std::vector<Rat> key(nr);
        bool distinct = true;
        for (std::size_t k = 0; k < nr; ++k) {
          Rat denom = weight_dot(sub.positive_roots[k].alpha, two_rho);
          if (denom <= 0) throw std::logic_error("build_subalgebra: rho pairing not positive");
          key[k] = weight_dot(sub.positive_roots[k].alpha, psi) / denom;
        }
        for (std::size_t a = 0; a < nr && distinct; ++a)
          for (std::size_t b = a + 1; b < nr; ++b)
            if (key[a] == key[b]) { distinct = false; break; }
        if (!distinct) continue;
        std::sort(sub.normal_order.begin(), sub.normal_order.end(),
                  [&](int a, int b) { return key[static_cast<std::size_t>(a)] > key[static_cast<std::size_t>(b)]; });
        std::vector<Weight> ordered;
        for (int k : sub.normal_order) ordered.push_back(sub.positive_roots[static_cast<std::size_t>(k)].alpha);
        if (verify_normal_order(ordered)) { done = true; break; }
      }
      if (!done) throw std::logic_error("build_subalgebra: no verified normal order found");
    }
    return sub;
  }

  /// Kept-index set for the standard chain step g0 of the paper:
  /// gl_{n-1} in gl_n, or sp_{2m-2} in sp_2n at level m.
  inline std::set<int> chain_kept_indices(const AlgebraSpec & spec, int m)
  {
    std::set<int> kept;
    if (spec.family == Family::GL) {
      for (int i = 1; i <= m; ++i) kept.insert(i);
    } else if (spec.indexing == SpIndexing::SIGNED) {
      for (int i = 1; i <= m; ++i) { kept.insert(i); kept.insert(-i); }
    } else {
      // one-based sp_{2m}: middle band around the antidiagonal pairing
      for (int i = spec.n - m + 1; i <= spec.n + m; ++i) kept.insert(i);
    }
    return kept;
  }

  /// Normal order on the full algebra's positive roots (via a trivial full subalgebra).
  inline std::vector<Weight> normal_order(const AlgebraData & alg)
  {
    std::set<int> all;
    for (int v : detail::rep_indices(alg.spec)) all.insert(v);
    Subalgebra full = build_subalgebra(alg, all);
    std::vector<Weight> out;
    for (int k : full.normal_order) out.push_back(full.positive_roots[static_cast<std::size_t>(k)].alpha);
    return out;
  }

} // namespace branchkit

#endif
