#pragma once

// Exact arithmetic in Q(zeta_5) and the four conjugate line realizations of
// the combinatorics G91, parametrized by the primitive fifth roots of unity.
// Elements are stored in the power basis 1, z, z^2, z^3 modulo
// z^4 + z^3 + z^2 + z + 1; complex conjugation is the Galois map z -> z^4.

#include <array>
#include <map>
#include <vector>

#include "arrtop/combinatorics.hpp"
#include "arrtop/exactalg.hpp"

namespace arrtop {

struct BadExponent : Error {
  using Error::Error;
};
struct DuplicateLine : Error {
  using Error::Error;
};

struct Cyc5 {
  std::array<Rat, 4> c{};  // c[k] * z^k

  Cyc5() = default;
  Cyc5(int v) { c[0] = v; }
  Cyc5(const Rat& v) { c[0] = v; }
  static Cyc5 zeta() {
    Cyc5 z;
    z.c[1] = 1;
    return z;
  }

  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

  bool operator==(const Cyc5&) const = default;
  bool operator<(const Cyc5& o) const { return c < o.c; }
};

inline Cyc5 operator+(const Cyc5& a, const Cyc5& b) {
  Cyc5 r;
  for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}
inline Cyc5 operator-(const Cyc5& a, const Cyc5& b) {
  Cyc5 r;
  for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}
inline Cyc5 operator-(const Cyc5& a) {
  Cyc5 r;
  for (int k = 0; k < 4; ++k) r.c[k] = -a.c[k];
  return r;
}

inline Cyc5 operator*(const Cyc5& a, const Cyc5& b) {
  std::array<Rat, 7> full{};
  for (int i = 0; i < 4; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 4; ++j) full[i + j] += a.c[i] * b.c[j];
  }
  full[0] += full[5];  // z^5 = 1
  full[1] += full[6];
  Cyc5 r;
  for (int k = 0; k < 4; ++k) r.c[k] = full[k] - full[4];  // z^4 = -(1+z+z^2+z^3)
  return r;
}

// Ring automorphism z -> z^i, i coprime to 5.
inline Cyc5 galois(const Cyc5& e, int i) {
  if (i % 5 == 0) throw BadExponent("galois exponent must be coprime to 5");
  const int ii = ((i % 5) + 5) % 5;
  std::array<Rat, 5> full{};
  for (int k = 0; k < 4; ++k) full[(ii * k) % 5] += e.c[k];
  Cyc5 r;
  for (int k = 0; k < 4; ++k) r.c[k] = full[k] - full[4];
  return r;
}

inline Cyc5 conj(const Cyc5& e) { return galois(e, 4); }

inline Cyc5 inverse(const Cyc5& e) {
  if (e.is_zero()) throw Error("division by zero in Q(zeta_5)");
  // Norm trick: e * prod of conjugates is rational.
  Cyc5 cof = galois(e, 2) * galois(e, 3) * galois(e, 4);
  Cyc5 norm = e * cof;
  Rat inv = 1 / norm.c[0];
  Cyc5 r;
  for (int k = 0; k < 4; ++k) r.c[k] = cof.c[k] * inv;
  return r;
}

inline Cyc5 pow_zeta(int i) {
  Cyc5 r = 1;
  const Cyc5 z = Cyc5::zeta();
  for (int k = 0; k < ((i % 5) + 5) % 5; ++k) r = r * z;
  return r;
}

// A projective line a*x + b*y + c*z = 0, defined up to scalar.
struct ProjLine {
  std::array<Cyc5, 3> coef{};

  bool operator==(const ProjLine&) const = default;
};

using ProjPoint = std::array<Cyc5, 3>;

// Divide by the first nonzero coordinate.
template <class Triple>
inline Triple canonical(const Triple& t) {
  for (const Cyc5& x : t)
    if (!x.is_zero()) {
      const Cyc5 inv = inverse(x);
      return Triple{inv * t[0], inv * t[1], inv * t[2]};
    }
  throw Error("zero projective triple");
}

inline ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
  const auto& a = l1.coef;
  const auto& b = l2.coef;
  return ProjPoint{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                   a[0] * b[1] - a[1] * b[0]};
}

inline bool on_line(const ProjPoint& p, const ProjLine& l) {
  return (l.coef[0] * p[0] + l.coef[1] * p[1] + l.coef[2] * p[2]).is_zero();
}

// The 12 lines L1..L12 with xi = zeta^i substituted into the defining
// equations; L1..L6 are rational, the rest cyclotomic.
inline std::vector<ProjLine> builtin_a91(int i) {
  if (i < 1 || i > 4) throw BadExponent("realization parameter must be in 1..4");
  const Cyc5 one = 1, five = 5;
  const Cyc5 xi = pow_zeta(i);
  const Cyc5 xib = conj(xi);
  const Cyc5 xi2 = xi * xi;
  const Cyc5 xib2 = xib * xib;
  const Cyc5 s = xi2 + xi;        // xi^2 + xi
  const Cyc5 sb = conj(s);
  const Cyc5 u = xib2 + xi;       // conj(xi)^2 + xi
  const Cyc5 w = xib + xi2;       // conj(xi) + xi^2
  std::vector<ProjLine> L(12);
  L[0] = {one, 0, -1};                     // L1: x - z
  L[1] = {one, 1, 0};                      // L2: x + y
  L[2] = {one, 0, 1};                      // L3: x + z
  L[3] = {one, -1, 0};                     // L4: x - y
  L[4] = {Cyc5(0), 1, -1};                 // L5: y - z
  L[5] = {Cyc5(0), 1, 1};                  // L6: y + z
  L[6] = {one, -sb, -s};                   // L7
  L[7] = {one, w, -u};                     // L8
  L[8] = {one, s, sb};                     // L9
  L[9] = {one, -u, w};                     // L10
  L[10] = {five, one + Cyc5(2) * xi + Cyc5(3) * xi2 - xib2,
           -(Cyc5(2) + Cyc5(4) * xi + xi2 + Cyc5(3) * xib2)};  // L11
  L[11] = {one, -(one + xib), xib};        // L12
  return L;
}

// Group the pairwise intersection points; the incidence data realizes the
// combinatorics of the lines.
inline LineCombinatorics incidence_combinatorics(const std::vector<ProjLine>& lines) {
  const int n = static_cast<int>(lines.size());
  std::map<ProjPoint, std::set<int>> groups;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      ProjPoint p = meet(lines[a], lines[b]);
      if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero())
        throw DuplicateLine("proportional lines " + std::to_string(a + 1) + "," +
                            std::to_string(b + 1));
      auto& g = groups[canonical(p)];
      g.insert(a + 1);
      g.insert(b + 1);
    }
  LineCombinatorics c;
  c.n_lines = n;
  for (const auto& [pt, g] : groups) c.points.emplace_back(g.begin(), g.end());
  std::sort(c.points.begin(), c.points.end());
  return c;
}

// Same combinatorics regardless of point ordering.
inline bool same_combinatorics(const LineCombinatorics& a, const LineCombinatorics& b) {
  auto key = [](const LineCombinatorics& c) {
    auto pts = c.points;
    std::sort(pts.begin(), pts.end());
    return std::make_pair(c.n_lines, pts);
  };
  return key(a) == key(b);
}

}  // namespace arrtop
