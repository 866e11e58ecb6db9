#pragma once

// Free-group words in Tietze form, permutations, and braid words with the
// geometric right action on free groups:
//   sigma_k:  x_k -> x_k x_{k+1} x_k^-1,   x_{k+1} -> x_k,
// a braid word acting letter by letter, left to right.  Permutations compose
// left to right as well: (p*q)(i) = q(p(i)).  Words are kept freely reduced.

#include <algorithm>
#include <vector>

#include "arrtop/exactalg.hpp"

namespace arrtop {

struct RangeError : Error {
  using Error::Error;
};
struct RankMismatch : Error {
  using Error::Error;
};
struct NotConjugateToGenerator : Error {
  using Error::Error;
};

struct Perm {
  std::vector<int> images;  // 1-indexed: images[i-1] = p(i)

  static Perm identity(int n) {
    Perm p;
    p.images.resize(n);
    for (int i = 0; i < n; ++i) p.images[i] = i + 1;
    return p;
  }

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i - 1]; }

  Perm inverse() const {
    Perm r;
    r.images.assign(images.size(), 0);
    for (int i = 1; i <= size(); ++i) r.images[(*this)(i)-1] = i;
    return r;
  }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& o) const { return images < o.images; }
};

// (p then q): compose(p, q)(i) = q(p(i))
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r;
  r.images.resize(p.images.size());
  for (int i = 1; i <= p.size(); ++i) r.images[i - 1] = q(p(i));
  return r;
}

inline std::vector<int> free_reduce(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int x : letters) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

struct FreeWord {
  int rank = 0;
  std::vector<int> letters;  // freely reduced, nonzero, |letter| <= rank

  FreeWord() = default;
  FreeWord(int rank_, std::vector<int> tietze) : rank(rank_) {
    for (int x : tietze)
      if (x == 0 || x > rank || x < -rank) throw RangeError("letter out of range");
    letters = free_reduce(tietze);
  }

  static FreeWord generator(int rank, int g) { return FreeWord(rank, {g}); }

  bool empty() const { return letters.empty(); }
  bool operator==(const FreeWord&) const = default;
};

inline FreeWord inverse(const FreeWord& w) {
  FreeWord r;
  r.rank = w.rank;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

inline FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.rank != b.rank) throw RankMismatch("free word product: rank mismatch");
  FreeWord r;
  r.rank = a.rank;
  std::vector<int> cat = a.letters;
  cat.insert(cat.end(), b.letters.begin(), b.letters.end());
  r.letters = free_reduce(cat);
  return r;
}

// Decompose w = conjugator^-1 . x_gen . conjugator (reduced odd-length word
// with mutually inverse flanks); conjugator is the suffix.
struct ConjugateForm {
  int gen = 0;  // signed generator index
  FreeWord conjugator;
};

inline ConjugateForm conjugate_normal_form(const FreeWord& w) {
  const auto& l = w.letters;
  const size_t n = l.size();
  if (n % 2 == 0) throw NotConjugateToGenerator("even-length word");
  const size_t m = (n - 1) / 2;
  for (size_t k = 0; k < m; ++k)
    if (l[k] != -l[n - 1 - k]) throw NotConjugateToGenerator("flanks not inverse");
  ConjugateForm r;
  r.gen = l[m];
  r.conjugator.rank = w.rank;
  r.conjugator.letters.assign(l.begin() + m + 1, l.end());
  return r;
}

struct BraidWord {
  int strands = 0;
  std::vector<int> letters;  // signed Artin generator indices, |x| <= strands-1

  BraidWord() = default;
  BraidWord(int strands_, std::vector<int> tietze)
      : strands(strands_), letters(std::move(tietze)) {
    for (int x : letters)
      if (x == 0 || x >= strands || x <= -strands)
        throw RangeError("braid letter out of range");
  }

  bool operator==(const BraidWord&) const = default;
};

inline BraidWord inverse(const BraidWord& b) {
  BraidWord r;
  r.strands = b.strands;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

inline BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw RankMismatch("braid product: strand mismatch");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

// Positive half-twist on strands first..last: the product, for k = last-1
// down to first, of sigma_first ... sigma_k.  Its permutation reverses the
// block.
inline BraidWord half_twist(int first, int last, int n) {
  if (first < 1 || first > last || last > n) throw RangeError("half_twist indices");
  BraidWord r;
  r.strands = n;
  for (int k = last - 1; k >= first; --k)
    for (int j = first; j <= k; ++j) r.letters.push_back(j);
  return r;
}

namespace detail {

inline void act_letter(int letter, std::vector<int>& w) {
  const int k = letter > 0 ? letter : -letter;
  std::vector<int> out;
  out.reserve(w.size() + 2);
  auto push = [&out](int x) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  };
  if (letter > 0) {
    for (int x : w) {
      const int ax = x > 0 ? x : -x;
      if (ax == k) {
        if (x > 0) {
          push(k);
          push(k + 1);
          push(-k);
        } else {
          push(k);
          push(-(k + 1));
          push(-k);
        }
      } else if (ax == k + 1) {
        push(x > 0 ? k : -k);
      } else {
        push(x);
      }
    }
  } else {
    for (int x : w) {
      const int ax = x > 0 ? x : -x;
      if (ax == k) {
        push(x > 0 ? k + 1 : -(k + 1));
      } else if (ax == k + 1) {
        if (x > 0) {
          push(-(k + 1));
          push(k);
          push(k + 1);
        } else {
          push(-(k + 1));
          push(-k);
          push(k + 1);
        }
      } else {
        push(x);
      }
    }
  }
  w = std::move(out);
}

}  // namespace detail

inline FreeWord braid_act(const BraidWord& b, const FreeWord& w) {
  if (b.strands != w.rank) throw RankMismatch("braid_act: strands != rank");
  FreeWord r = w;
  for (int letter : b.letters) detail::act_letter(letter, r.letters);
  return r;
}

// Image in the symmetric group, sigma_k -> transposition (k, k+1); p(i) is
// the final position of the strand starting at position i.
inline Perm braid_permutation(const BraidWord& b) {
  Perm p = Perm::identity(b.strands);
  for (int letter : b.letters) {
    const int k = letter > 0 ? letter : -letter;
    for (int i = 0; i < b.strands; ++i) {
      if (p.images[i] == k)
        p.images[i] = k + 1;
      else if (p.images[i] == k + 1)
        p.images[i] = k;
    }
  }
  return p;
}

}  // namespace arrtop
