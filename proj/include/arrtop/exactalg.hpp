#pragma once

// Exact linear algebra over Z and Q: fraction-free (Bareiss) echelon,
// Hermite and Smith normal forms with unimodular transforms, and integer
// system solving with ring-of-definition diagnostics.  No floating point
// anywhere; scalars are GMP arbitrary-precision integers/rationals.

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arrtop {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  IntMatrix(int rows, int cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(rows_) * cols_)
      throw DimensionMismatch("entry count != rows*cols");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& operator()(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  void negate_row(int i) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }
  // row_i -= q * row_j
  void submul_row(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < cols_; ++c)
      mpz_submul((*this)(i, c).get_mpz_t(), q.get_mpz_t(), (*this)(j, c).get_mpz_t());
  }
  // col_i -= q * col_j
  void submul_col(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < rows_; ++r)
      mpz_submul((*this)(r, i).get_mpz_t(), q.get_mpz_t(), (*this)(r, j).get_mpz_t());
  }
  void add_row(int i, int j) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) += (*this)(j, c);
  }

  bool is_zero() const {
    for (const Int& x : a_)
      if (x != 0) return false;
    return true;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape");
  IntMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        mpz_addmul(r(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return r;
}

inline std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw DimensionMismatch("matrix-vector shape");
  std::vector<Int> r(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      mpz_addmul(r[i].get_mpz_t(), a(i, j).get_mpz_t(), x[j].get_mpz_t());
  return r;
}

// Rational matrices; mpq_class keeps entries normalized (gcd 1, positive den).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  explicit RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& operator()(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int piv = -1;
      for (int i = row; i < rows_; ++i)
        if ((*this)(i, col) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      for (int c = 0; c < cols_; ++c) std::swap((*this)(row, c), (*this)(piv, c));
      Rat inv = 1 / (*this)(row, col);
      for (int c = 0; c < cols_; ++c) (*this)(row, c) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == row || (*this)(i, col) == 0) continue;
        Rat f = (*this)(i, col);
        for (int c = 0; c < cols_; ++c) (*this)(i, c) -= f * (*this)(row, c);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    RatMatrix tmp = *this;
    return static_cast<int>(tmp.rref().size());
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

struct EchelonResult {
  IntMatrix echelon;    // row echelon up to integer row scaling
  IntMatrix transform;  // transform * input == echelon
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

// Bareiss fraction-free elimination.  Divisions by the previous pivot are
// exact by the Sylvester identity, also on the transform columns.  Pivot:
// minimal |entry| in the column, ties by lowest row.
inline EchelonResult echelon_division_free(const IntMatrix& m) {
  EchelonResult res{m, IntMatrix::identity(m.rows()), {}};
  IntMatrix& e = res.echelon;
  IntMatrix& t = res.transform;
  Int prev = 1;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (e(i, col) != 0 &&
          (piv < 0 || mpz_cmpabs(e(i, col).get_mpz_t(), e(piv, col).get_mpz_t()) < 0))
        piv = i;
    if (piv < 0) continue;
    e.swap_rows(row, piv);
    t.swap_rows(row, piv);
    const Int p = e(row, col);
    for (int i = row + 1; i < m.rows(); ++i) {
      const Int f = e(i, col);
      for (int c = 0; c < m.cols(); ++c) {
        Int v = p * e(i, c) - f * e(row, c);
        mpz_divexact(e(i, c).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      for (int c = 0; c < t.cols(); ++c) {
        Int v = p * t(i, c) - f * t(row, c);
        mpz_divexact(t(i, c).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = p;
    res.pivot_cols.push_back(col);
    ++row;
  }
  return res;
}

struct HermiteResult {
  IntMatrix h;          // row Hermite normal form (positive pivots,
                        // entries above a pivot reduced into [0, pivot))
  IntMatrix transform;  // unimodular, transform * input == h
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

inline HermiteResult hermite_normal_form(const IntMatrix& m) {
  HermiteResult res{m, IntMatrix::identity(m.rows()), {}};
  IntMatrix& h = res.h;
  IntMatrix& t = res.transform;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    for (;;) {
      int piv = -1;
      for (int i = row; i < m.rows(); ++i)
        if (h(i, col) != 0 &&
            (piv < 0 || mpz_cmpabs(h(i, col).get_mpz_t(), h(piv, col).get_mpz_t()) < 0))
          piv = i;
      if (piv < 0) break;
      h.swap_rows(row, piv);
      t.swap_rows(row, piv);
      bool done = true;
      for (int i = row + 1; i < m.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
        h.submul_row(i, row, q);
        t.submul_row(i, row, q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (row < m.rows() && h(row, col) != 0) {
      if (h(row, col) < 0) {
        h.negate_row(row);
        t.negate_row(row);
      }
      for (int i = 0; i < row; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
        h.submul_row(i, row, q);
        t.submul_row(i, row, q);
      }
      res.pivot_cols.push_back(col);
      ++row;
    }
  }
  return res;
}

struct SmithDecomposition {
  IntMatrix d;  // diagonal, same shape as input, d1 | d2 | ... | d_rank > 0
  IntMatrix u;  // unimodular rows x rows
  IntMatrix v;  // unimodular cols x cols;  u * input * v == d
  int rank = 0;

  std::vector<Int> invariant_factors() const {
    std::vector<Int> out;
    for (int i = 0; i < rank; ++i) out.push_back(d(i, i));
    return out;
  }
};

// Smith normal form.  Pivot choice: nonzero entry of minimal absolute value,
// ties by lowest (row, col); enforcing that each pivot divides the whole
// remaining submatrix yields the divisibility chain directly.
inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition res{m, IntMatrix::identity(m.rows()),
                         IntMatrix::identity(m.cols()), 0};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  const int rows = m.rows(), cols = m.cols();
  const int tmax = std::min(rows, cols);

  auto find_pivot = [&](int t) {
    std::pair<int, int> best{-1, -1};
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (d(i, j) != 0 &&
            (best.first < 0 ||
             mpz_cmpabs(d(i, j).get_mpz_t(), d(best.first, best.second).get_mpz_t()) < 0))
          best = {i, j};
    return best;
  };

  int t = 0;
  while (t < tmax) {
    auto best = find_pivot(t);
    if (best.first < 0) break;
    for (;;) {
      d.swap_rows(t, best.first);
      u.swap_rows(t, best.first);
      d.swap_cols(t, best.second);
      v.swap_cols(t, best.second);
      if (d(t, t) < 0) {
        d.negate_row(t);
        u.negate_row(t);
      }
      bool done = true;
      for (int i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.submul_row(i, t, q);
        u.submul_row(i, t, q);
        if (d(i, t) != 0) done = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.submul_col(j, t, q);
        v.submul_col(j, t, q);
        if (d(t, j) != 0) done = false;
      }
      if (done) {
        int bad = -1;
        for (int i = t + 1; i < rows && bad < 0; ++i)
          for (int j = t + 1; j < cols; ++j)
            if (mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t()) == 0) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        d.add_row(t, bad);
        u.add_row(t, bad);
      }
      best = find_pivot(t);
    }
    if (d(t, t) == 0) break;
    ++t;
  }
  res.rank = t;
  return res;
}

struct SolveReport {
  bool consistent_over_q = false;
  std::vector<Rat> particular_solution;           // empty when inconsistent
  std::vector<std::vector<Rat>> nullspace_basis;  // of the homogeneous system
  int nullspace_dim = 0;
  bool integer_solvable = false;
  std::vector<Int> denominator_primes;  // sorted; empty when integer solvable
};

inline std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  if (n < 0) n = -n;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Solve a*x = b exactly.  The particular solution x = V * D^+ * (U*b) has
// minimal denominators: it realizes the smallest localization of Z that
// contains a solution.  Integer solvability <=> d_k | (U*b)_k for all k.
inline SolveReport solve_integer_system(const IntMatrix& a, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw DimensionMismatch("solve_integer_system: length(b) != rows(a)");
  SolveReport rep;
  SmithDecomposition s = smith_normal_form(a);
  const std::vector<Int> y = s.u * b;
  const int r = s.rank;
  const int n = a.cols();

  rep.nullspace_dim = n - r;
  for (int j = r; j < n; ++j) {
    std::vector<Rat> col(n);
    for (int i = 0; i < n; ++i) col[i] = s.v(i, j);
    rep.nullspace_basis.push_back(std::move(col));
  }

  rep.consistent_over_q = true;
  for (int k = r; k < a.rows(); ++k)
    if (y[k] != 0) rep.consistent_over_q = false;
  if (!rep.consistent_over_q) return rep;

  std::vector<Rat> z(n);
  rep.integer_solvable = true;
  std::vector<Int> denom_primes;
  for (int k = 0; k < r; ++k) {
    const Int& dk = s.d(k, k);
    z[k] = Rat(y[k], dk);
    z[k].canonicalize();
    Int g;
    mpz_gcd(g.get_mpz_t(), dk.get_mpz_t(), y[k].get_mpz_t());
    Int den = dk / g;
    if (den != 1) {
      rep.integer_solvable = false;
      for (const Int& p : prime_factors(den)) denom_primes.push_back(p);
    }
  }
  std::sort(denom_primes.begin(), denom_primes.end());
  denom_primes.erase(std::unique(denom_primes.begin(), denom_primes.end()),
                     denom_primes.end());
  rep.denominator_primes = std::move(denom_primes);

  rep.particular_solution.assign(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < r; ++k)
      if (s.v(i, k) != 0 && z[k] != 0) rep.particular_solution[i] += s.v(i, k) * z[k];
  return rep;
}

}  // namespace arrtop
