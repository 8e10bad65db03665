#ifndef BRANCHKIT_SPARSE_HPP
#define BRANCHKIT_SPARSE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace branchkit
{

  /// Sparse exact vector: sorted (index, value) pairs, no stored zeros.
  struct SparseVector
  {
    int dimension = 0;
    std::vector<std::pair<int, Rat>> entries; // sorted by index, values nonzero

    SparseVector() = default;
    explicit SparseVector(int dim) : dimension(dim) {}

    bool is_zero() const { return entries.empty(); }

    void set(int i, const Rat & v)
    {
      if (i < 0 || i >= dimension) throw std::out_of_range("SparseVector::set");
      auto it = std::lower_bound(entries.begin(), entries.end(), i,
                                 [](const auto & e, int k) { return e.first < k; });
      if (it != entries.end() && it->first == i) {
        if (v == 0) entries.erase(it); else it->second = v;
      } else if (v != 0) {
        entries.insert(it, {i, v});
      }
    }

    Rat get(int i) const
    {
      auto it = std::lower_bound(entries.begin(), entries.end(), i,
                                 [](const auto & e, int k) { return e.first < k; });
      if (it != entries.end() && it->first == i) return it->second;
      return Rat(0);
    }

    /// Smallest index with nonzero value, or -1 when zero.
    int leading_index() const { return entries.empty() ? -1 : entries.front().first; }

    bool operator==(const SparseVector & o) const
    {
      return dimension == o.dimension && entries == o.entries;
    }
  };

  inline SparseVector unit_vector(int dim, int i)
  {
    SparseVector v(dim);
    v.set(i, Rat(1));
    return v;
  }

  inline SparseVector scale(const SparseVector & v, const Rat & c)
  {
    SparseVector r(v.dimension);
    if (c == 0) return r;
    r.entries.reserve(v.entries.size());
    for (const auto & [i, x] : v.entries) r.entries.emplace_back(i, x * c);
    return r;
  }

  /// y + c*x, merged in one pass.
  inline SparseVector axpy(const SparseVector & y, const Rat & c, const SparseVector & x)
  {
    if (y.dimension != x.dimension) throw std::invalid_argument("axpy: dimension mismatch");
    if (c == 0) return y;
    SparseVector r(y.dimension);
    r.entries.reserve(y.entries.size() + x.entries.size());
    std::size_t a = 0, b = 0;
    while (a < y.entries.size() || b < x.entries.size()) {
      if (b == x.entries.size() || (a < y.entries.size() && y.entries[a].first < x.entries[b].first)) {
        r.entries.push_back(y.entries[a++]);
      } else if (a == y.entries.size() || x.entries[b].first < y.entries[a].first) {
        r.entries.emplace_back(x.entries[b].first, c * x.entries[b].second);
        ++b;
      } else {
        Rat s = y.entries[a].second + c * x.entries[b].second;
        if (s != 0) r.entries.emplace_back(y.entries[a].first, s);
        ++a; ++b;
      }
    }
    return r;
  }

  inline SparseVector add(const SparseVector & a, const SparseVector & b) { return axpy(a, Rat(1), b); }
  inline SparseVector sub(const SparseVector & a, const SparseVector & b) { return axpy(a, Rat(-1), b); }

  /// Sparse exact matrix stored column-major (fast matrix * sparse-vector).
  struct SparseMatrix
  {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, Rat>>> columns; // per column: sorted (row, value)

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

    void set(int r, int c, const Rat & v)
    {
      if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("SparseMatrix::set");
      auto & col = columns[c];
      auto it = std::lower_bound(col.begin(), col.end(), r,
                                 [](const auto & e, int k) { return e.first < k; });
      if (it != col.end() && it->first == r) {
        if (v == 0) col.erase(it); else it->second = v;
      } else if (v != 0) {
        col.insert(it, {r, v});
      }
    }

    Rat get(int r, int c) const
    {
      const auto & col = columns.at(c);
      auto it = std::lower_bound(col.begin(), col.end(), r,
                                 [](const auto & e, int k) { return e.first < k; });
      if (it != col.end() && it->first == r) return it->second;
      return Rat(0);
    }

    std::size_t nnz() const
    {
      std::size_t s = 0;
      for (const auto & c : columns) s += c.size();
      return s;
    }
  };

  inline SparseVector apply(const SparseMatrix & m, const SparseVector & v)
  {
    if (m.cols != v.dimension) throw std::invalid_argument("apply: dimension mismatch");
    SparseVector r(m.rows);
    for (const auto & [j, c] : v.entries) {
      SparseVector col(m.rows);
      col.entries = m.columns[j];
      r = axpy(r, c, col);
    }
    return r;
  }

  inline SparseMatrix matmul(const SparseMatrix & a, const SparseMatrix & b)
  {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: dimension mismatch");
    SparseMatrix r(a.rows, b.cols);
    for (int j = 0; j < b.cols; ++j) {
      SparseVector col(b.rows);
      col.entries = b.columns[j];
      r.columns[j] = apply(a, col).entries;
    }
    return r;
  }

  inline SparseMatrix matadd(const SparseMatrix & a, const Rat & c, const SparseMatrix & b)
  {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matadd: shape mismatch");
    SparseMatrix r(a.rows, a.cols);
    for (int j = 0; j < a.cols; ++j) {
      SparseVector x(a.rows), y(a.rows);
      x.entries = a.columns[j];
      y.entries = b.columns[j];
      r.columns[j] = axpy(x, c, y).entries;
    }
    return r;
  }

  inline SparseMatrix commutator(const SparseMatrix & a, const SparseMatrix & b)
  {
    return matadd(matmul(a, b), Rat(-1), matmul(b, a));
  }

  /// Incrementally maintained reduced row-echelon span with deterministic
  /// lowest-index pivoting.
  struct RowSpace
  {
    int dimension = 0;
    std::vector<SparseVector> rows; // RREF rows, ascending pivot, pivot value 1
    std::vector<int> pivots;        // pivot index per row

    RowSpace() = default;
    explicit RowSpace(int dim) : dimension(dim) {}

    int rank() const { return static_cast<int>(rows.size()); }

    /// Residual of v after elimination against the stored rows.
    SparseVector reduce(const SparseVector & v) const
    {
      SparseVector w = v;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Rat c = w.get(pivots[i]);
        if (c != 0) w = axpy(w, -c, rows[i]);
      }
      return w;
    }

    bool contains(const SparseVector & v) const { return reduce(v).is_zero(); }

    /// Insert v's residual when independent; returns true iff the rank grew.
    bool add(const SparseVector & v)
    {
      SparseVector w = reduce(v);
      if (w.is_zero()) return false;
      int p = w.leading_index();
      w = scale(w, 1 / w.get(p));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Rat c = rows[i].get(p);
        if (c != 0) rows[i] = axpy(rows[i], -c, w);
      }
      auto pos = std::lower_bound(pivots.begin(), pivots.end(), p);
      std::size_t k = static_cast<std::size_t>(pos - pivots.begin());
      pivots.insert(pos, p);
      rows.insert(rows.begin() + static_cast<long>(k), std::move(w));
      return true;
    }
  };

  struct RankResult
  {
    int rank = 0;
    std::vector<int> pivots;
    std::vector<SparseVector> basis; // reduced echelon rows
  };

  /// Exact reduced row-echelon data of the span of the input vectors.
  inline RankResult rank_and_reduce(const std::vector<SparseVector> & vectors)
  {
    RankResult res;
    if (vectors.empty()) return res;
    RowSpace sp(vectors.front().dimension);
    for (const auto & v : vectors) {
      if (v.dimension != sp.dimension) throw std::invalid_argument("rank_and_reduce: dimension mismatch");
      sp.add(v);
    }
    res.rank = sp.rank();
    res.pivots = sp.pivots;
    res.basis = sp.rows;
    return res;
  }

  struct TriangularFlags
  {
    bool triangular = false;
    bool diagonal_nonzero = false;
    std::vector<std::pair<int, int>> violations; // (row, col) positions below the diagonal
  };

  /// After reordering rows/columns by the given permutations, checks that
  /// entry (i, j) = 0 whenever j < i and whether the diagonal is nonzero.
  /// row_order[i] = original row placed at position i (same for columns).
  inline TriangularFlags is_triangular(const SparseMatrix & m,
                                       const std::vector<int> & row_order,
                                       const std::vector<int> & col_order)
  {
    if (m.rows != m.cols) throw std::invalid_argument("is_triangular: non-square matrix");
    if (static_cast<int>(row_order.size()) != m.rows || static_cast<int>(col_order.size()) != m.cols)
      throw std::invalid_argument("is_triangular: permutation size mismatch");
    std::vector<int> rpos(m.rows);
    for (int i = 0; i < m.rows; ++i) rpos[row_order[i]] = i;
    TriangularFlags f;
    f.triangular = true;
    f.diagonal_nonzero = true;
    for (int j = 0; j < m.cols; ++j) {
      bool diag_seen = false;
      for (const auto & [r, v] : m.columns[col_order[j]]) {
        int i = rpos[r];
        if (i > j) {
          f.triangular = false;
          f.violations.emplace_back(i, j);
        } else if (i == j) {
          diag_seen = true;
        }
      }
      if (!diag_seen) f.diagonal_nonzero = false;
    }
    return f;
  }

  /// Solves membership in the span of a fixed vector list, reporting exact
  /// coordinates relative to the original (unreduced) vectors.
  struct SpanSolver
  {
    int dimension = 0;
    std::vector<SparseVector> reduced;     // RREF rows
    std::vector<int> pivots;               // pivot per reduced row
    std::vector<SparseVector> expressions; // reduced[i] = expressions[i] . original
    int basis_count = 0;

    explicit SpanSolver(int dim, int max_basis) : dimension(dim)
    {
      expressions.reserve(static_cast<std::size_t>(max_basis));
      max_basis_ = max_basis;
    }

    /// Adds one original vector; returns true iff independent of the previous ones.
    bool add(const SparseVector & v)
    {
      SparseVector w = v;
      SparseVector expr(max_basis_);
      expr.set(basis_count, Rat(1));
      for (std::size_t i = 0; i < reduced.size(); ++i) {
        Rat c = w.get(pivots[i]);
        if (c != 0) {
          w = axpy(w, -c, reduced[i]);
          expr = axpy(expr, -c, expressions[i]);
        }
      }
      ++basis_count;
      if (w.is_zero()) return false;
      int p = w.leading_index();
      Rat inv = 1 / w.get(p);
      w = scale(w, inv);
      expr = scale(expr, inv);
      reduced.push_back(std::move(w));
      expressions.push_back(std::move(expr));
      pivots.push_back(p);
      return true;
    }

    /// Coordinates of v in the original vector list, or nullopt if outside the span.
    std::optional<std::vector<Rat>> express(const SparseVector & v) const
    {
      SparseVector w = v;
      SparseVector expr(max_basis_);
      for (std::size_t i = 0; i < reduced.size(); ++i) {
        Rat c = w.get(pivots[i]);
        if (c != 0) {
          w = axpy(w, -c, reduced[i]);
          expr = axpy(expr, c, expressions[i]);
        }
      }
      if (!w.is_zero()) return std::nullopt;
      std::vector<Rat> coords(static_cast<std::size_t>(basis_count), Rat(0));
      for (const auto & [i, c] : expr.entries) coords[static_cast<std::size_t>(i)] = c;
      return coords;
    }

  private:
    int max_basis_ = 0;
  };

  /// Basis of {x : R x = 0} where the rows of R are the given vectors.
  inline std::vector<SparseVector> kernel_basis(const std::vector<SparseVector> & rows, int dim)
  {
    RankResult rr = rank_and_reduce(rows);
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
    for (int p : rr.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<SparseVector> kernel;
    for (int f = 0; f < dim; ++f) {
      if (is_pivot[static_cast<std::size_t>(f)]) continue;
      SparseVector x(dim);
      x.set(f, Rat(1));
      for (std::size_t i = 0; i < rr.basis.size(); ++i) {
        Rat c = rr.basis[i].get(f);
        if (c != 0) x.set(rr.pivots[i], -c);
      }
      kernel.push_back(std::move(x));
    }
    return kernel;
  }

} // namespace branchkit

#endif
