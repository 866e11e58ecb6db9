#pragma once

// Line combinatorial types: a finite line set together with its incidence
// points, where every point holds >= 2 lines and every pair of lines lies in
// exactly one point.  Includes the built-in 12-line combinatorics G91, its
// validation and the combinatorial automorphism group.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "arrtop/words.hpp"

namespace arrtop {

struct LineCombinatorics {
  int n_lines = 0;
  std::vector<std::vector<int>> points;  // 1-based line indices, each sorted

  bool operator==(const LineCombinatorics&) const = default;
};

struct ValidationError : Error {
  enum class Kind {
    PairInNoPoint,
    PairInTwoPoints,
    UndersizedPoint,
    BadIndex,
    DuplicateLineInPoint
  };
  Kind kind;
  int line1 = 0, line2 = 0;
  std::vector<int> point, point2;

  ValidationError(Kind k, std::string msg) : Error(std::move(msg)), kind(k) {}
};

inline void validate(const LineCombinatorics& c) {
  std::map<std::pair<int, int>, const std::vector<int>*> seen;
  for (const auto& p : c.points) {
    if (p.size() < 2) {
      ValidationError e(ValidationError::Kind::UndersizedPoint, "point with < 2 lines");
      e.point = p;
      throw e;
    }
    for (int x : p)
      if (x < 1 || x > c.n_lines) {
        ValidationError e(ValidationError::Kind::BadIndex, "line index out of range");
        e.point = p;
        throw e;
      }
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] == p[j]) {
          ValidationError e(ValidationError::Kind::DuplicateLineInPoint,
                            "line listed twice in one point");
          e.point = p;
          throw e;
        }
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j) {
        auto key = std::minmax(p[i], p[j]);
        auto [it, inserted] = seen.emplace(key, &p);
        if (!inserted) {
          ValidationError e(ValidationError::Kind::PairInTwoPoints,
                            "pair of lines in two points");
          e.line1 = key.first;
          e.line2 = key.second;
          e.point = *it->second;
          e.point2 = p;
          throw e;
        }
      }
  }
  for (int a = 1; a <= c.n_lines; ++a)
    for (int b = a + 1; b <= c.n_lines; ++b)
      if (!seen.count({a, b})) {
        ValidationError e(ValidationError::Kind::PairInNoPoint, "pair of lines in no point");
        e.line1 = a;
        e.line2 = b;
        throw e;
      }
}

// The 12-line combinatorics with its 27 points, verbatim.
inline LineCombinatorics builtin_g91() {
  return LineCombinatorics{
      12,
      {{1, 4, 5, 9, 12}, {1, 2, 6, 10}, {2, 3, 5, 7}, {3, 4, 6, 8}, {2, 8, 11, 12},
       {1, 7, 11},       {3, 9, 11},    {4, 10, 11},  {5, 8, 10},   {6, 7, 9},
       {5, 6},           {5, 11},       {6, 11},      {1, 3},       {2, 4},
       {1, 8},           {2, 9},        {3, 10},      {4, 7},       {7, 8},
       {7, 10},          {8, 9},        {9, 10},      {3, 12},      {6, 12},
       {7, 12},          {10, 12}}};
}

inline std::vector<std::vector<int>> points_of_multiplicity(const LineCombinatorics& c,
                                                            int m_min) {
  if (m_min < 2) throw RangeError("points_of_multiplicity: m_min >= 2 required");
  std::vector<std::vector<int>> out;
  for (const auto& p : c.points)
    if (static_cast<int>(p.size()) >= m_min) out.push_back(p);
  return out;
}

inline std::map<int, int> multiplicity_census(const LineCombinatorics& c) {
  std::map<int, int> census;
  for (const auto& p : c.points) ++census[static_cast<int>(p.size())];
  return census;
}

// Drop one line; shrunken points of size < 2 disappear.  Only valid for the
// last line index if the numbering should stay contiguous.
inline LineCombinatorics remove_line(const LineCombinatorics& c, int line) {
  LineCombinatorics r;
  r.n_lines = (line == c.n_lines) ? c.n_lines - 1 : c.n_lines;
  for (const auto& p : c.points) {
    std::vector<int> q;
    for (int x : p)
      if (x != line) q.push_back(x);
    if (q.size() >= 2) r.points.push_back(q);
  }
  return r;
}

// Full group of line permutations preserving the point multiset, by
// backtracking.  Pruning: a line can only map to a line with the same
// multiset of incident-point multiplicities, and every assigned pair must
// land in a point of the same multiplicity.
inline std::vector<Perm> automorphisms(const LineCombinatorics& c) {
  validate(c);
  const int n = c.n_lines;
  std::set<std::vector<int>> point_set(c.points.begin(), c.points.end());
  std::map<std::pair<int, int>, const std::vector<int>*> point_of;
  for (const auto& p : c.points)
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j) point_of[{p[i], p[j]}] = &p;

  std::vector<std::vector<int>> profile(n + 1);
  for (const auto& p : c.points)
    for (int x : p) profile[x].push_back(static_cast<int>(p.size()));
  for (auto& pr : profile) std::sort(pr.begin(), pr.end());

  std::vector<Perm> out;
  std::vector<int> img(n + 1, 0);
  std::vector<bool> used(n + 1, false);

  auto point_at = [&](int a, int b) -> const std::vector<int>* {
    auto it = point_of.find(std::minmax(a, b));
    return it == point_of.end() ? nullptr : it->second;
  };

  std::function<void(int)> bt = [&](int line) {
    if (line > n) {
      std::set<std::vector<int>> mapped;
      for (const auto& p : c.points) {
        std::vector<int> q;
        for (int x : p) q.push_back(img[x]);
        std::sort(q.begin(), q.end());
        mapped.insert(q);
      }
      if (mapped == point_set) {
        Perm perm;
        perm.images.assign(img.begin() + 1, img.end());
        out.push_back(perm);
      }
      return;
    }
    for (int m = 1; m <= n; ++m) {
      if (used[m] || profile[m] != profile[line]) continue;
      bool ok = true;
      for (int prev = 1; prev < line && ok; ++prev) {
        const auto* p = point_at(line, prev);
        const auto* q = point_at(m, img[prev]);
        if (!q || q->size() != p->size()) ok = false;
      }
      if (!ok) continue;
      img[line] = m;
      used[m] = true;
      bt(line + 1);
      used[m] = false;
    }
  };
  bt(1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arrtop
