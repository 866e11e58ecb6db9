#pragma once

// First resonance variety combinatorics: components attached to combinatorial
// pencils (multiple points and Ceva-type 3-nets of six lines), the triangle
// table, and the homological-rigidity check via the multiple-point linear
// constraint system on H_1 automorphism lifts.

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <vector>

#include "arrtop/combinatorics.hpp"
#include "arrtop/exactalg.hpp"

namespace arrtop {

enum class PencilKind { MultiplePoint, Ceva };

struct Pencil {
  PencilKind kind = PencilKind::MultiplePoint;
  std::vector<std::vector<int>> fibers;  // disjoint line sets, >= 3 fibers

  std::vector<int> lines() const {
    std::vector<int> out;
    for (const auto& f : fibers) out.insert(out.end(), f.begin(), f.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  int dim() const { return static_cast<int>(fibers.size()) - 1; }

  bool operator==(const Pencil&) const = default;
};

struct ResonanceComponent {
  Pencil pencil;
  // Basis of the component in the dual coordinates y_1..y_n (all rows sum
  // to zero, hence lie in ker of the augmentation).
  std::vector<std::vector<Int>> basis;
};

// Basis u_{F_j} - u_{F_1}, j = 2..#fibers, where u_F = sum of y_L over F.
inline ResonanceComponent component_of(const Pencil& p, int n_lines) {
  ResonanceComponent r{p, {}};
  const auto& f1 = p.fibers.front();
  for (size_t j = 1; j < p.fibers.size(); ++j) {
    std::vector<Int> v(n_lines, 0);
    for (int L : p.fibers[j]) v[L - 1] += 1;
    for (int L : f1) v[L - 1] -= 1;
    r.basis.push_back(std::move(v));
  }
  return r;
}

// Ceva-type pencils: 6-line subsets split into 3 unordered pairs such that
// exactly 4 points of the combinatorics trace one line from each pair (the
// base points), and no other point mixes lines from two different pairs.
inline std::vector<Pencil> ceva_pencils(const LineCombinatorics& c) {
  validate(c);
  std::vector<Pencil> out;
  const int n = c.n_lines;
  std::vector<int> six;
  std::function<void(int)> choose = [&](int start) {
    if (six.size() == 6) {
      // all 15 pairings of the chosen six lines
      const int a = six[0];
      std::vector<int> rest(six.begin() + 1, six.end());
      for (int bi = 0; bi < 5; ++bi) {
        const int b = rest[bi];
        std::vector<int> r2;
        for (int k = 0; k < 5; ++k)
          if (k != bi) r2.push_back(rest[k]);
        const int cc = r2[0];
        for (int di = 1; di < 4; ++di) {
          const int d = r2[di];
          std::vector<int> r3;
          for (int k = 1; k < 4; ++k)
            if (k != di) r3.push_back(r2[k]);
          std::array<std::pair<int, int>, 3> fibers = {
              std::pair{a, b}, {cc, d}, {r3[0], r3[1]}};
          std::map<int, int> fiber_of;
          for (int fi = 0; fi < 3; ++fi) {
            fiber_of[fibers[fi].first] = fi;
            fiber_of[fibers[fi].second] = fi;
          }
          int base_points = 0;
          bool ok = true;
          for (const auto& p : c.points) {
            std::set<int> touched;
            int traced = 0;
            for (int L : p) {
              auto it = fiber_of.find(L);
              if (it != fiber_of.end()) {
                touched.insert(it->second);
                ++traced;
              }
            }
            if (touched.size() >= 2) {
              if (traced == 3 && touched.size() == 3)
                ++base_points;
              else {
                ok = false;
                break;
              }
            }
          }
          if (ok && base_points == 4) {
            Pencil p;
            p.kind = PencilKind::Ceva;
            for (const auto& [x, y] : fibers) p.fibers.push_back({x, y});
            for (auto& f : p.fibers) std::sort(f.begin(), f.end());
            std::sort(p.fibers.begin(), p.fibers.end());
            out.push_back(std::move(p));
          }
        }
      }
      return;
    }
    if (start > n) return;
    for (int L = start; L <= n; ++L) {
      six.push_back(L);
      choose(L + 1);
      six.pop_back();
    }
  };
  choose(1);
  std::sort(out.begin(), out.end(), [](const Pencil& a, const Pencil& b) {
    auto la = a.lines(), lb = b.lines();
    return la != lb ? la < lb : a.fibers < b.fibers;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All pencils of the combinatorics in table order: multiple points (by
// multiplicity, then line set), then Ceva pencils by line set.
inline std::vector<Pencil> all_pencils(const LineCombinatorics& c) {
  std::vector<Pencil> out;
  for (const auto& p : points_of_multiplicity(c, 3)) {
    Pencil pc;
    pc.kind = PencilKind::MultiplePoint;
    for (int L : p) pc.fibers.push_back({L});
    out.push_back(std::move(pc));
  }
  std::sort(out.begin(), out.end(), [](const Pencil& a, const Pencil& b) {
    if (a.fibers.size() != b.fibers.size()) return a.fibers.size() < b.fibers.size();
    return a.lines() < b.lines();
  });
  auto cevas = ceva_pencils(c);
  out.insert(out.end(), cevas.begin(), cevas.end());
  return out;
}

struct TriangleRow {
  Pencil pencil;
  int dim = 0;
  int triangles = 0;                   // Delta_S
  int triangles_through_quintuple = 0;  // Delta_{S,P1}
};

struct TriangleTable {
  std::vector<TriangleRow> rows;
  int total_triangles = 0;
  int quintuple_index = -1;  // index of the reference maximal pencil, -1 if none
};

namespace detail {

inline int rank_of_rows(const std::vector<const std::vector<Int>*>& rows, int n) {
  RatMatrix m(static_cast<int>(rows.size()), n);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (*rows[i])[j];
  return m.rank();
}

}  // namespace detail

// A triple is a triangle iff dim(H_1 + H_2 + H_3) = dim H_1 + dim H_2 +
// dim H_3 - 1.  Delta_{S,P1} counts triangles through the unique pencil of
// maximal dimension (the quintuple point in G91).
inline TriangleTable triangle_table(const LineCombinatorics& c, int jobs = 1) {
  validate(c);
  TriangleTable table;
  auto pencils = all_pencils(c);
  std::vector<std::vector<std::vector<Int>>> bases;
  for (const auto& p : pencils) bases.push_back(component_of(p, c.n_lines).basis);
  const int np = static_cast<int>(pencils.size());

  int maxdim = 0, maxcount = 0, maxidx = -1;
  for (int i = 0; i < np; ++i) {
    const int d = pencils[i].dim();
    if (d > maxdim) maxdim = d, maxcount = 1, maxidx = i;
    else if (d == maxdim) ++maxcount;
  }
  table.quintuple_index = (maxcount == 1) ? maxidx : -1;

  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j)
      for (int k = j + 1; k < np; ++k) triples.push_back({i, j, k});

  auto is_triangle = [&](const std::array<int, 3>& t) {
    std::vector<const std::vector<Int>*> rows;
    int dimsum = 0;
    for (int idx : t) {
      for (const auto& v : bases[idx]) rows.push_back(&v);
      dimsum += static_cast<int>(bases[idx].size());
    }
    return detail::rank_of_rows(rows, c.n_lines) == dimsum - 1;
  };

  std::vector<char> flags(triples.size(), 0);
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (size_t t = 0; t < triples.size(); ++t) flags[t] = is_triangle(triples[t]);
  } else {
    std::vector<std::future<void>> futs;
    const size_t chunk = (triples.size() + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      const size_t lo = w * chunk, hi = std::min(triples.size(), lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (size_t t = lo; t < hi; ++t) flags[t] = is_triangle(triples[t]);
      }));
    }
    for (auto& f : futs) f.get();
  }

  std::vector<int> delta(np, 0), delta_q(np, 0);
  for (size_t t = 0; t < triples.size(); ++t) {
    if (!flags[t]) continue;
    ++table.total_triangles;
    const auto& tr = triples[t];
    const bool through_q =
        table.quintuple_index >= 0 &&
        (tr[0] == table.quintuple_index || tr[1] == table.quintuple_index ||
         tr[2] == table.quintuple_index);
    for (int idx : tr) {
      ++delta[idx];
      if (through_q) ++delta_q[idx];
    }
  }
  for (int i = 0; i < np; ++i)
    table.rows.push_back({pencils[i], pencils[i].dim(), delta[i], delta_q[i]});
  return table;
}

struct RigidityReport {
  enum class Verdict { Rigid, FingerprintCollision, NonDiagonalSolution };
  Verdict verdict = Verdict::Rigid;
  std::vector<int> admissible_scalars;          // {+1, -1} when rigid
  std::vector<std::vector<int>> colliding_sets;  // line sets with equal fingerprints
  std::vector<Int> witness;                      // flattened n x n non-diagonal solution

  bool rigid() const { return verdict == Verdict::Rigid; }
};

// Proof strategy of the rigidity proposition: fingerprints (Delta_S,
// Delta_{S,P1}) within each multiple-point dimension class must be pairwise
// distinct (every such component is then fixed); the constraint system on a
// lift matrix A, "rows of A at the lines of a multiple point agree outside
// those columns", must then force A diagonal modulo adding multiples of
// (1,...,1) to columns.
inline RigidityReport rigidity_check(const LineCombinatorics& c, int jobs = 1) {
  RigidityReport rep;
  const int n = c.n_lines;
  TriangleTable table = triangle_table(c, jobs);

  std::map<int, std::map<std::pair<int, int>, std::vector<int>>> by_dim;
  for (const auto& row : table.rows)
    if (row.pencil.kind == PencilKind::MultiplePoint)
      by_dim[row.dim][{row.triangles, row.triangles_through_quintuple}].push_back(
          static_cast<int>(&row - table.rows.data()));
  for (const auto& [dim, groups] : by_dim)
    for (const auto& [fp, idxs] : groups)
      if (idxs.size() > 1) {
        rep.verdict = RigidityReport::Verdict::FingerprintCollision;
        for (int i : idxs) rep.colliding_sets.push_back(table.rows[i].pencil.lines());
      }
  if (rep.verdict == RigidityReport::Verdict::FingerprintCollision) return rep;

  // Constraint matrix on the n*n unknowns A[r][c], index n*(r-1)+(c-1).
  std::vector<std::vector<Int>> cons;
  for (const auto& p : points_of_multiplicity(c, 3)) {
    for (int col = 1; col <= n; ++col) {
      if (std::find(p.begin(), p.end(), col) != p.end()) continue;
      for (size_t a = 1; a < p.size(); ++a) {
        std::vector<Int> row(static_cast<size_t>(n) * n, 0);
        row[static_cast<size_t>(n) * (p[a] - 1) + (col - 1)] = 1;
        row[static_cast<size_t>(n) * (p[0] - 1) + (col - 1)] = -1;
        cons.push_back(std::move(row));
      }
    }
  }

  IntMatrix cm(static_cast<int>(cons.size()), n * n);
  for (int i = 0; i < cm.rows(); ++i)
    for (int j = 0; j < n * n; ++j) cm(i, j) = cons[i][j];
  const int crank = cons.empty() ? 0 : echelon_division_free(cm).rank();
  const int sol_dim = n * n - crank;

  // Allowed space W: diagonal matrices + column moves (add multiples of the
  // all-ones vector to any column); dim 2n, always inside the solution space.
  if (sol_dim == 2 * n) {
    rep.verdict = RigidityReport::Verdict::Rigid;
    rep.admissible_scalars = {1, -1};
    return rep;
  }

  // Witness: a nullspace vector outside W.
  SmithDecomposition s = smith_normal_form(cm.rows() ? cm : IntMatrix(0, n * n));
  IntMatrix wspan(2 * n, n * n);
  for (int l = 0; l < n; ++l) wspan(l, static_cast<size_t>(n) * l + l) = 1;
  for (int col = 0; col < n; ++col)
    for (int r = 0; r < n; ++r) wspan(n + col, static_cast<size_t>(n) * r + col) = 1;
  const int wrank = echelon_division_free(wspan).rank();
  for (int j = s.rank; j < n * n; ++j) {
    IntMatrix stacked(2 * n + 1, n * n);
    for (int i = 0; i < 2 * n; ++i)
      for (int k = 0; k < n * n; ++k) stacked(i, k) = wspan(i, k);
    for (int k = 0; k < n * n; ++k) stacked(2 * n, k) = s.v(k, j);
    if (echelon_division_free(stacked).rank() > wrank) {
      rep.verdict = RigidityReport::Verdict::NonDiagonalSolution;
      rep.witness.resize(static_cast<size_t>(n) * n);
      for (int k = 0; k < n * n; ++k) rep.witness[k] = s.v(k, j);
      return rep;
    }
  }
  rep.verdict = RigidityReport::Verdict::Rigid;  // solution space equals W
  rep.admissible_scalars = {1, -1};
  return rep;
}

}  // namespace arrtop
