#pragma once

// Braided wiring diagrams and their compilation to fundamental-group
// presentations.  A diagram records the initial strand order (position ->
// line label) and, per crossing, the braid since the previous crossing and
// the lines meeting.  Compilation maintains the running braid T and strand
// order; each crossing contributes one relation "the left-to-right product
// of conjugated meridians is locally central".

#include <algorithm>
#include <map>
#include <vector>

#include "arrtop/combinatorics.hpp"
#include "arrtop/words.hpp"

namespace arrtop {

struct MalformedWiring : Error {
  using Error::Error;
};

struct Crossing {
  std::vector<int> pre_braid;  // Artin letters since the previous crossing
  std::vector<int> lines;      // line labels meeting, in strand-position order

  bool operator==(const Crossing&) const = default;
};

struct WiringDiagram {
  int n = 0;           // strands
  Perm initial_order;  // strand position -> line label
  std::vector<Crossing> crossings;

  bool operator==(const WiringDiagram&) const = default;
};

enum class BuiltinWiring { xi1, xi2 };

// The 22-crossing diagrams of the two arrangements, transcribed verbatim.
inline WiringDiagram builtin_wiring(BuiltinWiring which) {
  WiringDiagram w;
  w.n = 11;
  if (which == BuiltinWiring::xi1) {
    w.initial_order.images = {1, 3, 7, 5, 8, 11, 4, 10, 9, 6, 2};
    w.crossings = {
        {{}, {10, 9}},
        {{}, {5, 8}},
        {{}, {5, 11, 4, 9}},
        {{}, {5, 10}},
        {{}, {5, 6}},
        {{}, {5, 2}},
        {{-7, -8}, {7, 8}},
        {{}, {7, 9}},
        {{}, {7, 4}},
        {{}, {7, 10, 6}},
        {{}, {7, 11, 2}},
        {{-8, -4, 7}, {6, 11}},
        {{-7, -5, -6, -4, 8}, {3, 8, 11}},
        {{}, {3, 4}},
        {{}, {3, 10}},
        {{}, {3, 9, 2, 6}},
        {{3}, {8, 10}},
        {{4, 5, 2, 3, 4, -2}, {1, 8, 4, 6}},
        {{}, {1, 11, 10}},
        {{}, {1, 2}},
        {{}, {1, 9}},
        {{-3, -4}, {8, 2}},
    };
  } else {
    w.initial_order.images = {1, 7, 5, 3, 4, 10, 11, 8, 2, 6, 9};
    w.crossings = {
        {{}, {3, 4}},
        {{}, {3, 10}},
        {{}, {3, 11, 8}},
        {{}, {3, 2, 6, 9}},
        {{-5, -6, -7, -4, -5}, {5, 8}},
        {{}, {5, 11, 4, 9}},
        {{}, {5, 10}},
        {{}, {5, 6}},
        {{}, {5, 2}},
        {{-4, 3, 6}, {11, 6}},
        {{-6, -5}, {9, 10}},
        {{4, 5, 4, 8, -7, 6}, {2, 8}},
        {{7}, {7, 4}},
        {{}, {7, 10, 6}},
        {{}, {7, 8}},
        {{}, {7, 9}},
        {{}, {7, 2, 11}},
        {{-4, 5, -6, -3}, {1, 4, 8, 6}},
        {{}, {1, 9}},
        {{}, {1, 11, 10}},
        {{}, {1, 2}},
        {{-2, -4}, {8, 10}},
    };
  }
  return w;
}

// Meridian numbering -> line numbering of the 12-line combinatorics; the
// line at infinity (L5) carries no meridian.
inline const std::vector<int>& meridian_to_line_table() {
  static const std::vector<int> table = {1, 3, 4, 2, 12, 6, 9, 10, 8, 7, 11};
  return table;
}
inline constexpr int infinity_line = 5;

// Complex conjugation of the fibered arrangement: flip every braid letter.
inline WiringDiagram mirror(const WiringDiagram& w) {
  WiringDiagram r = w;
  for (auto& cr : r.crossings)
    for (int& x : cr.pre_braid) x = -x;
  return r;
}

inline std::vector<std::vector<int>> crossing_combinatorics(const WiringDiagram& w) {
  std::vector<std::vector<int>> out;
  for (const auto& cr : w.crossings) {
    auto s = cr.lines;
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Relation {
  std::vector<int> lines;            // point line labels i_1..i_r
  std::vector<FreeWord> conjugators;  // w_1..w_r
};

struct Presentation {
  int n_generators = 0;
  std::vector<Relation> relations;
};

// Compile the diagram: per crossing, update the order by the pre-braid,
// locate the strand block, pull each strand meridian back through T^-1,
// relabel through the initial order, and split off (meridian, conjugator).
// The local half-twist is then composed into T.
inline Presentation relations(const WiringDiagram& w) {
  const int n = w.n;
  if (w.initial_order.size() != n) throw MalformedWiring("initial order size");
  Presentation pres;
  pres.n_generators = n;

  BraidWord running(n, {});
  Perm order = w.initial_order;
  struct Snapshot {
    BraidWord braid;
    std::vector<int> lines;
    std::vector<int> positions;
  };
  std::vector<Snapshot> snaps;

  for (const auto& cr : w.crossings) {
    BraidWord pre(n, cr.pre_braid);
    order = compose(braid_permutation(pre).inverse(), order);
    running = running * pre;
    Perm oinv = order.inverse();
    std::vector<int> pos;
    for (int line : cr.lines) {
      if (line < 1 || line > n) throw MalformedWiring("crossing line out of range");
      pos.push_back(oinv(line));
    }
    for (size_t k = 1; k < pos.size(); ++k)
      if (pos[k] != pos[k - 1] + 1)
        throw MalformedWiring("crossing lines are not consecutive strands");
    snaps.push_back({running, cr.lines, pos});
    BraidWord twist = half_twist(pos.front(), pos.back(), n);
    running = running * twist;
    order = compose(braid_permutation(twist).inverse(), order);
  }

  for (const auto& snap : snaps) {
    BraidWord tinv = inverse(snap.braid);
    Relation rel;
    for (size_t k = 0; k < snap.positions.size(); ++k) {
      FreeWord word = braid_act(tinv, FreeWord::generator(n, snap.positions[k]));
      std::vector<int> relabeled;
      for (int x : word.letters) {
        const int lab = w.initial_order(x > 0 ? x : -x);
        relabeled.push_back(x > 0 ? lab : -lab);
      }
      ConjugateForm cf;
      try {
        cf = conjugate_normal_form(FreeWord(n, relabeled));
      } catch (const NotConjugateToGenerator&) {
        throw MalformedWiring("meridian word is not conjugate to a generator");
      }
      if (cf.gen != snap.lines[k])
        throw MalformedWiring("meridian label disagrees with crossing line");
      rel.lines.push_back(cf.gen);
      rel.conjugators.push_back(cf.conjugator);
    }
    pres.relations.push_back(std::move(rel));
  }
  return pres;
}

// The crossing line sets, relabeled through the numeration table and merged
// with the points on the infinity line, rebuild the 12-line combinatorics.
inline LineCombinatorics reconstruct_combinatorics(const WiringDiagram& w,
                                                   const std::vector<int>& meridian_to_line,
                                                   int infinity,
                                                   const LineCombinatorics& reference) {
  LineCombinatorics out;
  out.n_lines = reference.n_lines;
  for (const auto& cr : w.crossings) {
    std::vector<int> pt;
    for (int mu : cr.lines) pt.push_back(meridian_to_line[mu - 1]);
    std::sort(pt.begin(), pt.end());
    out.points.push_back(std::move(pt));
  }
  for (const auto& p : reference.points)
    if (std::find(p.begin(), p.end(), infinity) != p.end()) out.points.push_back(p);
  std::sort(out.points.begin(), out.points.end());
  return out;
}

}  // namespace arrtop
