#pragma once

// Truncated Alexander invariants M_1, M_2 of a presented arrangement group.
// Arithmetic happens directly in Lambda/m^2: a series is c0 + sum c_k s_k
// with s_k = t_k - 1, products truncate, t_k = 1 + s_k and
// t_k^-1 = 1 - s_k.  Module vectors have one series entry per pair
// (i,j), 1 <= i < j <= n, lexicographic, with x_{j,i} = -x_{i,j} and
// x_{-i,j} = -t_i^-1 x_{i,j} handled at construction.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "arrtop/exactalg.hpp"
#include "arrtop/wiring.hpp"

namespace arrtop {

struct EqualIndices : Error {
  using Error::Error;
};
struct NonUnitPivot : Error {
  using Error::Error;
};

// Affine-linear form in the test unknowns n_{k,(u,v)}: constant + sparse
// integer coefficient terms, sorted by unknown index.
struct LinForm {
  Int constant{};
  std::vector<std::pair<int, Int>> terms;

  bool is_zero() const { return constant == 0 && terms.empty(); }
  bool operator==(const LinForm&) const = default;
  bool operator<(const LinForm& o) const {
    if (constant != o.constant) return constant < o.constant;
    return terms < o.terms;
  }
};

inline LinForm lf_unknown(int index, Int coeff = 1) {
  LinForm f;
  f.terms.emplace_back(index, std::move(coeff));
  return f;
}

inline LinForm operator+(const LinForm& a, const LinForm& b) {
  LinForm r;
  r.constant = a.constant + b.constant;
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() ||
        (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
      r.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
      r.terms.push_back(b.terms[j++]);
    } else {
      Int s = a.terms[i].second + b.terms[j].second;
      if (s != 0) r.terms.emplace_back(a.terms[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

inline LinForm operator*(const Int& c, const LinForm& a) {
  LinForm r;
  if (c == 0) return r;
  r.constant = c * a.constant;
  for (const auto& [k, v] : a.terms) r.terms.emplace_back(k, c * v);
  return r;
}

inline LinForm operator-(const LinForm& a) { return Int(-1) * a; }

// Canonical representative for equation deduplication: divide by the gcd of
// all coefficients, then flip signs so the leading nonzero coefficient
// (first unknown term, else the constant) is positive.
inline LinForm canonicalize(const LinForm& a) {
  if (a.is_zero()) return a;
  Int g = 0;
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.constant.get_mpz_t());
  for (const auto& [k, v] : a.terms) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  const Int& lead = a.terms.empty() ? a.constant : a.terms.front().second;
  if (lead < 0) g = -g;
  LinForm r;
  r.constant = a.constant / g;
  for (const auto& [k, v] : a.terms) r.terms.emplace_back(k, v / g);
  return r;
}

// Truncated series c0 + sum_k lin[k-1] * s_k over scalar C.
template <class C>
struct TruncSeries {
  C c0{};
  std::vector<C> lin;

  TruncSeries() = default;
  explicit TruncSeries(int n) : lin(n) {}
  TruncSeries(int n, C constant) : c0(std::move(constant)), lin(n) {}

  int vars() const { return static_cast<int>(lin.size()); }
  bool is_zero() const {
    if (!(c0 == C{})) return false;
    for (const C& x : lin)
      if (!(x == C{})) return false;
    return true;
  }
  bool operator==(const TruncSeries&) const = default;
};

using TS = TruncSeries<Int>;
using TSL = TruncSeries<LinForm>;

inline TS ts_t(int n, int k, int sign) {  // t_k or t_k^-1, truncated
  TS r(n, 1);
  r.lin[k - 1] = sign;
  return r;
}

template <class C>
inline TruncSeries<C> operator+(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  TruncSeries<C> r(a.vars());
  r.c0 = a.c0 + b.c0;
  for (int k = 0; k < a.vars(); ++k) r.lin[k] = a.lin[k] + b.lin[k];
  return r;
}

template <class C>
inline TruncSeries<C> operator-(const TruncSeries<C>& a) {
  TruncSeries<C> r(a.vars());
  r.c0 = -a.c0;
  for (int k = 0; k < a.vars(); ++k) r.lin[k] = -a.lin[k];
  return r;
}

// (a0 + A)(b0 + B) = a0 b0 + a0 B + b0 A mod m^2
inline TS operator*(const TS& a, const TS& b) {
  TS r(a.vars());
  r.c0 = a.c0 * b.c0;
  for (int k = 0; k < a.vars(); ++k) r.lin[k] = a.c0 * b.lin[k] + b.c0 * a.lin[k];
  return r;
}

inline TSL operator*(const TSL& a, const TS& b) {
  TSL r(a.vars());
  r.c0 = b.c0 * a.c0;
  for (int k = 0; k < a.vars(); ++k) r.lin[k] = (b.c0 * a.lin[k]) + (b.lin[k] * a.c0);
  return r;
}

// Unit inverse at truncation level 2: (c0 + L)^-1 = c0 - L for c0 = +-1.
inline TS ts_unit_inverse(const TS& a) {
  if (!(a.c0 == 1 || a.c0 == -1)) throw NonUnitPivot("series constant term not a unit");
  TS r(a.vars());
  r.c0 = a.c0;
  for (int k = 0; k < a.vars(); ++k) r.lin[k] = -a.lin[k];
  return r;
}

// Lexicographic pair index for 1 <= i < j <= n.
struct PairTable {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;

  explicit PairTable(int n_) : n(n_) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  }
  int count() const { return static_cast<int>(pairs.size()); }
  int index(int i, int j) const {
    // i < j: pairs before row i: (i-1)*n - i*(i-1)/2
    return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1);
  }
};

template <class C>
using ModuleVector = std::vector<TruncSeries<C>>;

template <class C>
inline ModuleVector<C> mv_zero(int n) {
  PairTable pt(n);
  return ModuleVector<C>(pt.count(), TruncSeries<C>(n));
}

template <class C>
inline void mv_add_scaled(ModuleVector<C>& acc, const TS& scale,
                          const ModuleVector<C>& v) {
  for (size_t p = 0; p < acc.size(); ++p)
    if (!v[p].is_zero()) acc[p] = acc[p] + (v[p] * scale);
}

// x_{i,j} for signed indices: x_{-i,j} = -t_i^-1 x_{i,j},
// x_{i,-j} = -t_j^-1 x_{i,j}, x_{-i,-j} = t_i^-1 t_j^-1 x_{i,j}, and
// antisymmetry when |i| > |j|.
inline ModuleVector<Int> signed_pair(int i, int j, int n) {
  const int ai = i > 0 ? i : -i, aj = j > 0 ? j : -j;
  if (ai == aj) throw EqualIndices("signed_pair with equal indices");
  if (ai < 1 || ai > n || aj < 1 || aj > n) throw RangeError("signed_pair index range");
  auto v = mv_zero<Int>(n);
  PairTable pt(n);
  const int a = std::min(ai, aj), b = std::max(ai, aj);
  const int sa = (ai == a ? i : j), sb = (ai == a ? j : i);
  TS coef(n, 1);
  if (sa < 0) coef = -(coef * ts_t(n, a, -1));
  if (sb < 0) coef = -(coef * ts_t(n, b, -1));
  if (ai > aj) coef = -coef;  // antisymmetry x_{j,i} = -x_{i,j}
  v[pt.index(a, b)] = coef;
  return v;
}

// [x_a, w] in M_2 by the recursion [x_a, l . rest] = x_{a,l} + t_l [x_a, rest];
// letters equal to +-a contribute the zero pair.
inline ModuleVector<Int> comm_expand(int a, const FreeWord& w) {
  const int n = w.rank;
  auto acc = mv_zero<Int>(n);
  TS scale(n, 1);
  for (int letter : w.letters) {
    const int al = letter > 0 ? letter : -letter;
    if (al != a) mv_add_scaled(acc, scale, signed_pair(a, letter, n));
    scale = scale * ts_t(n, al, letter > 0 ? 1 : -1);
  }
  return acc;
}

// One module vector per non-initial line of the relation: rotate the point
// so the minimal label leads, form LF_j = w_j^-1 x_{i_j} w_j, and expand
// [x_{i_j}, w_j . (cyclic left-to-right product of the other LF) . w_j^-1].
inline std::vector<ModuleVector<Int>> point_relations(const Relation& rel, int n) {
  const int r = static_cast<int>(rel.lines.size());
  const int mn = static_cast<int>(
      std::min_element(rel.lines.begin(), rel.lines.end()) - rel.lines.begin());
  std::vector<int> lines;
  std::vector<FreeWord> conjs;
  for (int k = 0; k < r; ++k) {
    lines.push_back(rel.lines[(mn + k) % r]);
    conjs.push_back(rel.conjugators[(mn + k) % r]);
  }
  std::vector<FreeWord> lf;
  for (int j = 0; j < r; ++j)
    lf.push_back(inverse(conjs[j]) * FreeWord::generator(n, lines[j]) * conjs[j]);

  std::vector<ModuleVector<Int>> out;
  for (int j = 1; j < r; ++j) {
    FreeWord w = conjs[j];
    for (int k = j + 1; k < r; ++k) w = w * lf[k];
    for (int k = 0; k < j; ++k) w = w * lf[k];
    w = w * inverse(conjs[j]);
    out.push_back(comm_expand(lines[j], w));
  }
  return out;
}

// Substitution expressing every x_{i,j} in the basis pairs: rows indexed by
// the basis, columns by all pairs.
struct ReductionMatrix {
  int n = 0;
  std::vector<std::vector<TS>> rows;
  std::vector<std::pair<int, int>> pivot_pairs;
  std::vector<std::pair<int, int>> basis_pairs;
};

// Echelon the constant-term matrix over Z (Hermite form with transform),
// carry the transform onto the truncated matrix, normalize the unit pivots,
// eliminate, and assemble the substitution.
inline ReductionMatrix reduction_matrix(const std::vector<ModuleVector<Int>>& vectors,
                                        int n) {
  PairTable pt(n);
  const int np = pt.count();
  const int nv = static_cast<int>(vectors.size());

  IntMatrix constants(nv, np);
  for (int i = 0; i < nv; ++i)
    for (int p = 0; p < np; ++p) constants(i, p) = vectors[i][p].c0;
  HermiteResult h = hermite_normal_form(constants);
  const int rank = h.rank();
  if (rank != nv)
    throw RankMismatch("point relations dependent at level 1: rank " +
                       std::to_string(rank) + " of " + std::to_string(nv));

  // u1 = transform * vectors, over truncated series
  std::vector<std::vector<TS>> u1(nv, std::vector<TS>(np, TS(n)));
  for (int i = 0; i < nv; ++i)
    for (int k = 0; k < nv; ++k) {
      const Int& c = h.transform(i, k);
      if (c == 0) continue;
      TS cs(n, c);
      for (int p = 0; p < np; ++p)
        if (!vectors[k][p].is_zero()) u1[i][p] = u1[i][p] + (vectors[k][p] * cs);
    }

  for (int i = 0; i < rank; ++i) {
    const int j = h.pivot_cols[i];
    TS inv = ts_unit_inverse(u1[i][j]);
    for (int p = 0; p < np; ++p) u1[i][p] = u1[i][p] * inv;
    for (int k = 0; k < nv; ++k) {
      if (k == i) continue;
      TS f = u1[k][j];
      if (f.is_zero()) continue;
      for (int p = 0; p < np; ++p) u1[k][p] = u1[k][p] + (-(u1[i][p] * f));
    }
  }

  ReductionMatrix red;
  red.n = n;
  std::vector<bool> is_pivot(np, false);
  for (int c : h.pivot_cols) is_pivot[c] = true;
  std::vector<int> basis_cols;
  for (int p = 0; p < np; ++p)
    if (!is_pivot[p])
      basis_cols.push_back(p);
  for (int c : h.pivot_cols) red.pivot_pairs.push_back(pt.pairs[c]);
  for (int c : basis_cols) red.basis_pairs.push_back(pt.pairs[c]);

  red.rows.assign(basis_cols.size(), std::vector<TS>(np, TS(n)));
  for (size_t b = 0; b < basis_cols.size(); ++b) red.rows[b][basis_cols[b]] = TS(n, 1);
  for (int i = 0; i < rank; ++i)
    for (size_t b = 0; b < basis_cols.size(); ++b)
      red.rows[b][h.pivot_cols[i]] = -u1[i][basis_cols[b]];
  return red;
}

template <class C>
inline std::vector<TruncSeries<C>> reduce_through(const ModuleVector<C>& v,
                                                  const ReductionMatrix& red) {
  std::vector<TruncSeries<C>> out(red.rows.size(), TruncSeries<C>(red.n));
  for (size_t b = 0; b < red.rows.size(); ++b)
    for (size_t p = 0; p < v.size(); ++p)
      if (!v[p].is_zero() && !red.rows[b][p].is_zero())
        out[b] = out[b] + (v[p] * red.rows[b][p]);
  return out;
}

// Rows sigma_i x_{j,k} + sigma_j x_{k,i} + sigma_k x_{i,j} for i < j < k,
// reduced to the basis; columns are the sigma-coefficients in basis-major,
// sigma-minor order.
inline IntMatrix jacobi_matrix(int n, const ReductionMatrix& red) {
  const int nb = static_cast<int>(red.basis_pairs.size());
  std::vector<std::vector<Int>> rows;
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      for (int k = j + 1; k <= n; ++k) {
        auto v = mv_zero<Int>(n);
        TS si(n), sj(n), sk(n);
        si.lin[i - 1] = 1;
        sj.lin[j - 1] = 1;
        sk.lin[k - 1] = 1;
        mv_add_scaled(v, si, signed_pair(j, k, n));
        mv_add_scaled(v, sj, signed_pair(k, i, n));
        mv_add_scaled(v, sk, signed_pair(i, j, n));
        auto reduced = reduce_through(v, red);
        std::vector<Int> row;
        row.reserve(static_cast<size_t>(nb) * n);
        for (int b = 0; b < nb; ++b)
          for (int w = 0; w < n; ++w) row.push_back(reduced[b].lin[w]);
        rows.push_back(std::move(row));
      }
  IntMatrix m(static_cast<int>(rows.size()), nb * n);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

// The combinatorial basis candidate: pairs (i,j) such that no crossing point
// P has i = min(P) and j in P.
inline std::vector<std::pair<int, int>> combinatorial_basis(const WiringDiagram& w) {
  PairTable pt(w.n);
  std::set<std::pair<int, int>> excluded;
  for (auto pointset : crossing_combinatorics(w))
    for (size_t k = 1; k < pointset.size(); ++k)
      excluded.insert({pointset.front(), pointset[k]});
  std::vector<std::pair<int, int>> out;
  for (const auto& p : pt.pairs)
    if (!excluded.count(p)) out.push_back(p);
  return out;
}

struct AlexanderData {
  int n = 0;
  Presentation presentation;
  std::vector<ModuleVector<Int>> point_vectors;
  ReductionMatrix reduction;
  std::vector<std::pair<int, int>> comb_basis;  // combinatorial candidate
  IntMatrix jacobi;
  SmithDecomposition jacobi_snf;

  int m1_rank() const {
    return static_cast<int>(reduction.basis_pairs.size());
  }
  int gr1_rank() const { return jacobi.cols() - jacobi_snf.rank; }
};

inline AlexanderData compute_alexander(const WiringDiagram& w) {
  AlexanderData data;
  data.n = w.n;
  data.presentation = relations(w);
  for (const auto& rel : data.presentation.relations)
    for (auto& v : point_relations(rel, w.n)) data.point_vectors.push_back(std::move(v));
  data.reduction = reduction_matrix(data.point_vectors, w.n);
  data.comb_basis = combinatorial_basis(w);
  if (data.comb_basis.size() != data.reduction.basis_pairs.size())
    throw RankMismatch("combinatorial basis size mismatch");
  if (data.comb_basis != data.reduction.basis_pairs) {
    // The candidate is still a valid basis if the constant matrix restricted
    // to its complement has full rank.
    PairTable pt(w.n);
    std::set<std::pair<int, int>> keep(data.comb_basis.begin(), data.comb_basis.end());
    std::vector<int> cols;
    for (int p = 0; p < pt.count(); ++p)
      if (!keep.count(pt.pairs[p])) cols.push_back(p);
    IntMatrix sub(static_cast<int>(data.point_vectors.size()),
                  static_cast<int>(cols.size()));
    for (int i = 0; i < sub.rows(); ++i)
      for (int j = 0; j < sub.cols(); ++j) sub(i, j) = data.point_vectors[i][cols[j]].c0;
    if (echelon_division_free(sub).rank() != sub.rows())
      throw RankMismatch("combinatorial pair set is not a basis of M_1");
  }
  data.jacobi = jacobi_matrix(w.n, data.reduction);
  data.jacobi_snf = smith_normal_form(data.jacobi);
  return data;
}

inline int m1_rank(const WiringDiagram& w) {
  auto pres = relations(w);
  std::vector<ModuleVector<Int>> vecs;
  for (const auto& rel : pres.relations)
    for (auto& v : point_relations(rel, w.n)) vecs.push_back(std::move(v));
  PairTable pt(w.n);
  return pt.count() - static_cast<int>(reduction_matrix(vecs, w.n).pivot_pairs.size());
}

inline int gr1_rank(const WiringDiagram& w) { return compute_alexander(w).gr1_rank(); }

}  // namespace arrtop
