#ifndef BRANCHKIT_MODULEBUILDER_HPP
#define BRANCHKIT_MODULEBUILDER_HPP

#include <cstdlib>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liealg.hpp"
#include "patterns.hpp"
#include "sparse.hpp"

namespace branchkit
{

  /// Irreducible module realized as the cyclic span of a highest weight
  /// tensor inside a product of wedge powers of the defining representation.
  struct RealizedModule
  {
    AlgebraSpec spec;
    std::vector<long> lambda;
    long ambient_dim = 0;
    int dim = 0;
    std::vector<SparseVector> basis;          ///< ambient coordinates
    std::vector<SparseMatrix> generators;     ///< one dim x dim matrix per algebra element
    std::vector<std::vector<long>> weights;   ///< Cartan eigenvalues per basis vector
    int highest_index = -1;

    SparseVector highest_vector() const { return unit_vector(dim, highest_index); }
  };

  struct RealizeOptions
  {
    long ambient_limit = 200000;
    bool use_cache = true;
  };

  /// Ordered product of algebra elements with exponents; the rightmost
  /// factor acts first.
  struct Monomial
  {
    std::vector<int> elements; ///< algebra basis indices, leftmost factor first
    std::vector<long> exponents;

    long total_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0L); }
  };

  namespace detail
  {
    struct WedgeKind
    {
      int k = 0;
      std::vector<std::vector<int>> subsets;     // lex ordered
      std::map<std::vector<int>, int> rank_of;
    };

    struct Ambient
    {
      int d = 0;
      std::vector<int> factor_k;
      std::vector<long> strides;
      std::map<int, WedgeKind> kinds;
      long dim = 1;
    };

    inline WedgeKind make_wedge_kind(int d, int k)
    {
      WedgeKind w;
      w.k = k;
      std::vector<int> cur(static_cast<std::size_t>(k));
      auto rec = [&](auto && self, int pos, int start) -> void {
        if (pos == k) {
          w.rank_of[cur] = static_cast<int>(w.subsets.size());
          w.subsets.push_back(cur);
          return;
        }
        for (int v = start; v < d; ++v) {
          cur[static_cast<std::size_t>(pos)] = v;
          self(self, pos + 1, v + 1);
        }
      };
      rec(rec, 0, 0);
      return w;
    }

    inline std::vector<long> wedge_multiplicities(const AlgebraSpec & spec, const std::vector<long> & lam)
    {
      int n = spec.n;
      std::vector<long> c(static_cast<std::size_t>(n), 0);
      if (spec.family == Family::SP && spec.indexing == SpIndexing::SIGNED) {
        for (int k = 1; k <= n - 1; ++k) c[static_cast<std::size_t>(k - 1)] = lam[static_cast<std::size_t>(n - k - 1)] - lam[static_cast<std::size_t>(n - k)];
        c[static_cast<std::size_t>(n - 1)] = -lam[0];
      } else {
        for (int k = 1; k <= n - 1; ++k) c[static_cast<std::size_t>(k - 1)] = lam[static_cast<std::size_t>(k - 1)] - lam[static_cast<std::size_t>(k)];
        c[static_cast<std::size_t>(n - 1)] = lam[static_cast<std::size_t>(n - 1)];
      }
      for (long x : c)
        if (x < 0) throw std::invalid_argument("wedge_multiplicities: non-dominant weight");
      return c;
    }

    inline Ambient make_ambient(const AlgebraData & alg, const std::vector<long> & lam, long limit)
    {
      Ambient a;
      a.d = alg.rep_dim;
      auto c = wedge_multiplicities(alg.spec, lam);
      for (int k = 1; k <= alg.spec.n; ++k)
        for (long rep = 0; rep < c[static_cast<std::size_t>(k - 1)]; ++rep) a.factor_k.push_back(k);
      for (int k : a.factor_k)
        if (!a.kinds.count(k)) a.kinds[k] = make_wedge_kind(a.d, k);
      a.strides.resize(a.factor_k.size());
      for (std::size_t f = a.factor_k.size(); f-- > 0;) {
        a.strides[f] = a.dim;
        a.dim *= static_cast<long>(a.kinds[a.factor_k[f]].subsets.size());
        if (a.dim > limit) throw std::runtime_error("realize_irrep: ambient dimension exceeds scale guard");
      }
      return a;
    }

    inline std::vector<int> decode_ambient(const Ambient & a, long idx)
    {
      std::vector<int> ranks(a.factor_k.size());
      for (std::size_t f = 0; f < a.factor_k.size(); ++f) {
        long sz = static_cast<long>(a.kinds.at(a.factor_k[f]).subsets.size());
        ranks[f] = static_cast<int>((idx / a.strides[f]) % sz);
      }
      return ranks;
    }

    /// Image of one ambient basis tensor under a derivation by the d x d matrix m.
    inline void apply_ambient_basis(const Ambient & a, const SparseMatrix & m, long idx, const Rat & coef,
                                    std::map<long, Rat> & acc)
    {
      auto ranks = decode_ambient(a, idx);
      for (std::size_t f = 0; f < a.factor_k.size(); ++f) {
        const WedgeKind & kind = a.kinds.at(a.factor_k[f]);
        const auto & S = kind.subsets[static_cast<std::size_t>(ranks[f])];
        for (std::size_t t = 0; t < S.size(); ++t) {
          int col = S[t];
          for (const auto & [r, val] : m.columns[static_cast<std::size_t>(col)]) {
            if (r == col) {
              acc[idx] += coef * val;
              continue;
            }
            bool dup = false;
            for (std::size_t u = 0; u < S.size(); ++u)
              if (u != t && S[u] == r) { dup = true; break; }
            if (dup) continue;
            std::vector<int> T = S;
            T[t] = r;
            int sign = 1;
            // bubble the replaced entry back into sorted position
            std::size_t pos = t;
            while (pos + 1 < T.size() && T[pos] > T[pos + 1]) { std::swap(T[pos], T[pos + 1]); ++pos; sign = -sign; }
            while (pos > 0 && T[pos - 1] > T[pos]) { std::swap(T[pos - 1], T[pos]); --pos; sign = -sign; }
            long nidx = idx + (static_cast<long>(kind.rank_of.at(T)) - ranks[f]) * a.strides[f];
            acc[nidx] += coef * val * sign;
          }
        }
      }
    }

    inline SparseVector apply_ambient(const Ambient & a, const SparseMatrix & m, const SparseVector & v)
    {
      std::map<long, Rat> acc;
      for (const auto & [idx, coef] : v.entries) apply_ambient_basis(a, m, idx, coef, acc);
      SparseVector out(static_cast<int>(a.dim));
      for (const auto & [idx, coef] : acc)
        if (coef != 0) out.entries.emplace_back(static_cast<int>(idx), coef);
      return out;
    }

    inline std::vector<std::vector<long>> rep_vector_weights(const AlgebraData & alg)
    {
      std::vector<std::vector<long>> w(static_cast<std::size_t>(alg.rep_dim),
                                       std::vector<long>(alg.cartan.size(), 0));
      for (std::size_t k = 0; k < alg.cartan.size(); ++k) {
        const SparseMatrix & h = alg.matrices[static_cast<std::size_t>(alg.cartan[k])];
        for (int p = 0; p < alg.rep_dim; ++p) {
          Rat v = h.get(p, p);
          if (!is_integer(v)) throw std::logic_error("rep_vector_weights: non-integer eigenvalue");
          w[static_cast<std::size_t>(p)][k] = rat_to_long(v);
        }
      }
      return w;
    }

    inline std::vector<long> ambient_weight(const Ambient & a, const std::vector<std::vector<long>> & repw, long idx,
                                            std::size_t n)
    {
      std::vector<long> w(n, 0);
      auto ranks = decode_ambient(a, idx);
      for (std::size_t f = 0; f < a.factor_k.size(); ++f) {
        const auto & S = a.kinds.at(a.factor_k[f]).subsets[static_cast<std::size_t>(ranks[f])];
        for (int p : S)
          for (std::size_t k = 0; k < n; ++k) w[k] += repw[static_cast<std::size_t>(p)][k];
      }
      return w;
    }

    inline std::vector<long> element_weight_shift(const AlgebraData & alg, int g)
    {
      const Weight & w = alg.weights[static_cast<std::size_t>(g)];
      std::vector<long> out;
      for (const Rat & x : w) {
        if (!is_integer(x)) throw std::logic_error("element_weight_shift: non-integer");
        out.push_back(rat_to_long(x));
      }
      return out;
    }

    inline std::string cache_file_name(const AlgebraSpec & spec, const std::vector<long> & lam)
    {
      std::ostringstream os;
      os << (spec.family == Family::GL ? "gl" : spec.indexing == SpIndexing::SIGNED ? "sps" : "spo");
      os << spec.n << "_l";
      for (long x : lam) os << "_" << x;
      os << ".mod";
      return os.str();
    }
  } // namespace detail

  inline void save_module(const RealizedModule & m, const std::string & path)
  {
    std::ofstream out(path);
    if (!out) return;
    out << "branchkit-module v1\n";
    out << (m.spec.family == Family::GL ? "gl" : m.spec.indexing == SpIndexing::SIGNED ? "sps" : "spo")
        << " " << m.spec.n << "\n";
    out << m.lambda.size();
    for (long x : m.lambda) out << " " << x;
    out << "\n" << m.ambient_dim << " " << m.dim << " " << m.highest_index << "\n";
    for (const auto & w : m.weights) {
      for (std::size_t k = 0; k < w.size(); ++k) out << (k ? " " : "") << w[k];
      out << "\n";
    }
    for (const auto & v : m.basis) {
      out << v.entries.size();
      for (const auto & [i, c] : v.entries) out << " " << i << " " << rat_str(c);
      out << "\n";
    }
    for (const auto & g : m.generators) {
      long nnz = g.nnz();
      out << nnz;
      for (int col = 0; col < g.cols; ++col)
        for (const auto & [r, c] : g.columns[static_cast<std::size_t>(col)])
          out << " " << r << " " << col << " " << rat_str(c);
      out << "\n";
    }
  }

  inline std::optional<RealizedModule> load_module(const AlgebraData & alg, const std::vector<long> & lam,
                                                   const std::string & path)
  {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string header, v1;
    in >> header >> v1;
    if (header != "branchkit-module" || v1 != "v1") return std::nullopt;
    std::string fam;
    int n = 0;
    in >> fam >> n;
    if (n != alg.spec.n) return std::nullopt;
    std::size_t ls = 0;
    in >> ls;
    std::vector<long> lam2(ls);
    for (auto & x : lam2) in >> x;
    if (lam2 != lam) return std::nullopt;
    RealizedModule m;
    m.spec = alg.spec;
    m.lambda = lam;
    in >> m.ambient_dim >> m.dim >> m.highest_index;
    if (!in || m.dim <= 0) return std::nullopt;
    m.weights.assign(static_cast<std::size_t>(m.dim), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (auto & w : m.weights)
      for (auto & x : w) in >> x;
    for (int j = 0; j < m.dim; ++j) {
      std::size_t cnt = 0;
      in >> cnt;
      SparseVector v(static_cast<int>(m.ambient_dim));
      for (std::size_t t = 0; t < cnt; ++t) {
        int i;
        std::string s;
        in >> i >> s;
        v.entries.emplace_back(i, rat_parse(s));
      }
      m.basis.push_back(std::move(v));
    }
    for (int g = 0; g < alg.dim(); ++g) {
      long nnz = 0;
      in >> nnz;
      SparseMatrix mat(m.dim, m.dim);
      for (long t = 0; t < nnz; ++t) {
        int r, c;
        std::string s;
        in >> r >> c >> s;
        mat.set(r, c, rat_parse(s));
      }
      m.generators.push_back(std::move(mat));
    }
    if (!in) return std::nullopt;
    return m;
  }

  inline RealizedModule realize_irrep(const AlgebraData & alg, std::vector<long> lam,
                                      const RealizeOptions & opts = {})
  {
    if (!dominant(alg.spec, lam)) throw std::invalid_argument("realize_irrep: non-dominant weight");
    const std::vector<long> lam_orig = lam;

    const char * cache_dir = std::getenv("BRANCHKIT_CACHE");
    std::string cache_path;
    if (opts.use_cache && cache_dir && *cache_dir) {
      cache_path = std::string(cache_dir) + "/" + detail::cache_file_name(alg.spec, lam_orig);
      if (auto m = load_module(alg, lam_orig, cache_path)) return *m;
    }

    long shift = 0;
    if (alg.spec.family == Family::GL && lam.back() < 0) {
      shift = -lam.back();
      for (auto & x : lam) x += shift;
    }

    detail::Ambient amb = detail::make_ambient(alg, lam, opts.ambient_limit);
    auto repw = detail::rep_vector_weights(alg);
    std::size_t n = alg.cartan.size();

    RealizedModule mod;
    mod.spec = alg.spec;
    mod.lambda = lam_orig;
    mod.ambient_dim = amb.dim;

    mpz_class expect_dim = weyl_dimension(alg, lam);
    if (expect_dim > 1000000) throw std::runtime_error("realize_irrep: module dimension exceeds scale guard");
    int cap = static_cast<int>(expect_dim.get_ui());

    std::vector<SparseVector> basis;
    std::vector<std::vector<long>> wts;
    std::map<std::vector<long>, RowSpace> blocks;

    SparseVector v0 = unit_vector(static_cast<int>(amb.dim), 0);
    std::vector<long> w0 = detail::ambient_weight(amb, repw, 0, n);
    blocks.emplace(w0, RowSpace(static_cast<int>(amb.dim))).first->second.add(v0);
    basis.push_back(v0);
    wts.push_back(w0);

    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      std::size_t j = queue.front();
      queue.pop_front();
      SparseVector cur = basis[j];
      for (int g : alg.lowering) {
        SparseVector img = detail::apply_ambient(amb, alg.matrices[static_cast<std::size_t>(g)], cur);
        if (img.entries.empty()) continue;
        std::vector<long> w = wts[j];
        auto shiftw = detail::element_weight_shift(alg, g);
        for (std::size_t k = 0; k < n; ++k) w[k] += shiftw[k];
        auto it = blocks.find(w);
        if (it == blocks.end())
          it = blocks.emplace(w, RowSpace(static_cast<int>(amb.dim))).first;
        if (it->second.add(img)) {
          basis.push_back(img);
          wts.push_back(w);
          queue.push_back(basis.size() - 1);
        }
      }
    }

    if (mpz_class(static_cast<long>(basis.size())) != expect_dim)
      throw std::logic_error("realize_irrep: cyclic span dimension mismatch");
    mod.dim = static_cast<int>(basis.size());

    // deterministic order: weight descending lex, then discovery order
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return wts[a] > wts[b]; });
    for (std::size_t i = 0; i < order.size(); ++i) {
      mod.basis.push_back(basis[order[i]]);
      mod.weights.push_back(wts[order[i]]);
      if (order[i] == 0) mod.highest_index = static_cast<int>(i);
    }

    // per-weight solvers over the final basis for expressing generator images
    std::map<std::vector<long>, std::pair<SpanSolver, std::vector<int>>> final_blocks;
    for (int i = 0; i < mod.dim; ++i) {
      auto it = final_blocks.find(mod.weights[static_cast<std::size_t>(i)]);
      if (it == final_blocks.end())
        it = final_blocks
                 .emplace(mod.weights[static_cast<std::size_t>(i)],
                          std::make_pair(SpanSolver(static_cast<int>(amb.dim), cap), std::vector<int>{}))
                 .first;
      it->second.first.add(mod.basis[static_cast<std::size_t>(i)]);
      it->second.second.push_back(i);
    }

    for (int g = 0; g < alg.dim(); ++g) {
      SparseMatrix mat(mod.dim, mod.dim);
      auto shiftw = detail::element_weight_shift(alg, g);
      for (int j = 0; j < mod.dim; ++j) {
        SparseVector img = detail::apply_ambient(amb, alg.matrices[static_cast<std::size_t>(g)],
                                                 mod.basis[static_cast<std::size_t>(j)]);
        if (img.entries.empty()) continue;
        std::vector<long> w = mod.weights[static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < n; ++k) w[k] += shiftw[k];
        auto it = final_blocks.find(w);
        if (it == final_blocks.end()) throw std::logic_error("realize_irrep: image escapes the span");
        auto coords = it->second.first.express(img);
        if (!coords) throw std::logic_error("realize_irrep: image escapes the span");
        for (std::size_t t = 0; t < coords->size(); ++t)
          if ((*coords)[t] != 0) mat.set(it->second.second[t], j, (*coords)[t]);
      }
      mod.generators.push_back(std::move(mat));
    }

    if (shift != 0) {
      for (std::size_t k = 0; k < alg.cartan.size(); ++k) {
        SparseMatrix & h = mod.generators[static_cast<std::size_t>(alg.cartan[k])];
        for (int j = 0; j < mod.dim; ++j) h.set(j, j, h.get(j, j) - shift);
      }
      for (auto & w : mod.weights)
        for (auto & x : w) x -= shift;
    }

    if (!cache_path.empty()) save_module(mod, cache_path);
    return mod;
  }

  inline SparseVector apply_element(const RealizedModule & mod, int g, const SparseVector & v)
  {
    return apply(mod.generators[static_cast<std::size_t>(g)], v);
  }

  inline SparseVector apply_monomial(const RealizedModule & mod, const Monomial & m)
  {
    if (m.elements.size() != m.exponents.size()) throw std::invalid_argument("apply_monomial: shape mismatch");
    if (m.total_degree() > 100000) throw std::invalid_argument("apply_monomial: exponent guard exceeded");
    SparseVector v = mod.highest_vector();
    for (std::size_t t = m.elements.size(); t-- > 0;) {
      if (m.exponents[t] < 0) throw std::invalid_argument("apply_monomial: negative exponent");
      for (long e = 0; e < m.exponents[t]; ++e) {
        v = apply_element(mod, m.elements[t], v);
        if (v.entries.empty()) return v;
      }
    }
    return v;
  }

  inline std::vector<long> restrict_weight(const std::vector<long> & w, const Subalgebra & sub)
  {
    std::vector<long> out;
    for (int k : sub.weight_coords) out.push_back(w[static_cast<std::size_t>(k)]);
    return out;
  }

  /// Basis of the joint kernel of the subalgebra's raising operators on the
  /// mu weight space, in module coordinates.
  inline std::vector<SparseVector> singular_vectors(const RealizedModule & mod, const Subalgebra & sub,
                                                    const std::vector<long> & mu)
  {
    std::vector<int> cols;
    for (int j = 0; j < mod.dim; ++j)
      if (restrict_weight(mod.weights[static_cast<std::size_t>(j)], sub) == mu) cols.push_back(j);
    if (cols.empty()) return {};
    int m = static_cast<int>(cols.size());

    std::vector<SparseVector> rows;
    for (int e : sub.raising) {
      std::map<int, SparseVector> rowmap;
      const SparseMatrix & g = mod.generators[static_cast<std::size_t>(e)];
      for (int t = 0; t < m; ++t)
        for (const auto & [r, val] : g.columns[static_cast<std::size_t>(cols[static_cast<std::size_t>(t)])]) {
          auto it = rowmap.find(r);
          if (it == rowmap.end()) it = rowmap.emplace(r, SparseVector(m)).first;
          it->second.set(t, val);
        }
      for (auto & kv : rowmap) rows.push_back(std::move(kv.second));
    }

    auto ker = kernel_basis(rows, m);
    std::vector<SparseVector> out;
    for (const auto & k : ker) {
      SparseVector v(mod.dim);
      for (const auto & [t, c] : k.entries) v.set(cols[static_cast<std::size_t>(t)], c);
      out.push_back(std::move(v));
    }
    return out;
  }

  /// Structure spec of the subalgebra viewed as a standalone algebra.
  inline AlgebraSpec subalgebra_spec(const AlgebraData & alg, const Subalgebra & sub)
  {
    int m = static_cast<int>(sub.weight_coords.size());
    if (alg.spec.family == Family::SP &&
        static_cast<int>(sub.elements.size()) == m * (2 * m + 1))
      return {Family::SP, m, alg.spec.indexing};
    return {Family::GL, m};
  }

  inline std::map<std::vector<long>, int> branching_multiplicities(const AlgebraData & alg,
                                                                   const RealizedModule & mod,
                                                                   const Subalgebra & sub)
  {
    std::map<std::vector<long>, int> mult;
    std::set<std::vector<long>> mus;
    for (const auto & w : mod.weights) mus.insert(restrict_weight(w, sub));
    for (const auto & mu : mus) {
      int d = static_cast<int>(singular_vectors(mod, sub, mu).size());
      if (d > 0) mult[mu] = d;
    }
    AlgebraData small = build_algebra(subalgebra_spec(alg, sub));
    mpz_class total = 0;
    for (const auto & [mu, d] : mult) total += mpz_class(d) * weyl_dimension(small, mu);
    if (total != mod.dim) throw std::logic_error("branching_multiplicities: dimension bookkeeping failed");
    return mult;
  }

  /// Check every structure-constant relation on the generator matrices.
  inline bool verify_module_relations(const AlgebraData & alg, const RealizedModule & mod)
  {
    for (int a = 0; a < alg.dim(); ++a)
      for (int b = 0; b < alg.dim(); ++b) {
        SparseMatrix lhs = commutator(mod.generators[static_cast<std::size_t>(a)],
                                      mod.generators[static_cast<std::size_t>(b)]);
        for (const auto & [k, c] : bracket(alg, a, b))
          lhs = matadd(lhs, -c, mod.generators[static_cast<std::size_t>(k)]);
        if (lhs.nnz() != 0) return false;
      }
    return true;
  }

} // namespace branchkit

#endif
