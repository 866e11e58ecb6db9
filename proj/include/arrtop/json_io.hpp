#pragma once

// JSON (de)serialization for the file formats and reports.  Line indices are
// 1-based; braid letters are signed Artin generator indices; cyclotomic
// coefficients are 4-arrays of rational strings "p/q" in the power basis
// 1, z, z^2, z^3.  Test and theorem reports carry all integers as decimal
// strings.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrtop/aitest.hpp"
#include "arrtop/alexander.hpp"
#include "arrtop/combinatorics.hpp"
#include "arrtop/realization.hpp"
#include "arrtop/resonance.hpp"
#include "arrtop/wiring.hpp"

namespace arrtop {

using nlohmann::json;

struct ParseError : Error {
  using Error::Error;
};

// ---- combinatorics ----

inline json to_json(const LineCombinatorics& c) {
  json j;
  j["n_lines"] = c.n_lines;
  j["points"] = c.points;
  return j;
}

inline LineCombinatorics combinatorics_from_json(const json& j) {
  LineCombinatorics c;
  try {
    c.n_lines = j.at("n_lines").get<int>();
    c.points = j.at("points").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("combinatorics JSON: ") + e.what());
  }
  for (auto& p : c.points) std::sort(p.begin(), p.end());
  return c;
}

// ---- lines over Q(zeta_5) ----

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational: " + s);
  }
}

inline json to_json(const Cyc5& e) {
  json j = json::array();
  for (const auto& c : e.c) j.push_back(rat_str(c));
  return j;
}

inline Cyc5 cyc5_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("cyclotomic coefficient must be a 4-array");
  Cyc5 e;
  for (int k = 0; k < 4; ++k) e.c[k] = rat_parse(j[k].get<std::string>());
  return e;
}

inline json to_json(const std::vector<ProjLine>& lines) {
  json rows = json::array();
  for (const auto& l : lines)
    rows.push_back(json::array({to_json(l.coef[0]), to_json(l.coef[1]), to_json(l.coef[2])}));
  json j;
  j["lines"] = rows;
  return j;
}

inline std::vector<ProjLine> lines_from_json(const json& j) {
  std::vector<ProjLine> out;
  try {
    for (const auto& row : j.at("lines")) {
      if (!row.is_array() || row.size() != 3) throw ParseError("line must be a coefficient triple");
      ProjLine l;
      for (int k = 0; k < 3; ++k) l.coef[k] = cyc5_from_json(row[k]);
      out.push_back(l);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("lines JSON: ") + e.what());
  }
  return out;
}

// ---- wiring ----

inline json to_json(const WiringDiagram& w) {
  json j;
  j["n"] = w.n;
  j["initial_order"] = w.initial_order.images;
  json crossings = json::array();
  for (const auto& cr : w.crossings) {
    json c;
    c["braid"] = cr.pre_braid;
    c["lines"] = cr.lines;
    crossings.push_back(c);
  }
  j["crossings"] = crossings;
  return j;
}

inline WiringDiagram wiring_from_json(const json& j) {
  WiringDiagram w;
  try {
    w.n = j.at("n").get<int>();
    w.initial_order.images = j.at("initial_order").get<std::vector<int>>();
    for (const auto& c : j.at("crossings"))
      w.crossings.push_back(
          {c.at("braid").get<std::vector<int>>(), c.at("lines").get<std::vector<int>>()});
  } catch (const json::exception& e) {
    throw ParseError(std::string("wiring JSON: ") + e.what());
  }
  return w;
}

// ---- presentation ----

inline json to_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relations) {
    json jr;
    jr["lines"] = r.lines;
    json cj = json::array();
    for (const auto& w : r.conjugators) cj.push_back(w.letters);
    jr["conjugators"] = cj;
    rels.push_back(jr);
  }
  json j;
  j["n_generators"] = p.n_generators;
  j["relations"] = rels;
  return j;
}

// ---- pencils / rigidity ----

inline json to_json(const TriangleTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json jr;
    jr["lines"] = row.pencil.lines();
    jr["kind"] = row.pencil.kind == PencilKind::MultiplePoint ? "multiple_point" : "ceva";
    jr["dim"] = row.dim;
    jr["triangles"] = row.triangles;
    jr["triangles_through_quintuple"] = row.triangles_through_quintuple;
    rows.push_back(jr);
  }
  return rows;
}

inline json to_json(const RigidityReport& r) {
  json j;
  switch (r.verdict) {
    case RigidityReport::Verdict::Rigid:
      j["verdict"] = "Rigid";
      break;
    case RigidityReport::Verdict::FingerprintCollision:
      j["verdict"] = "FingerprintCollision";
      j["colliding_sets"] = r.colliding_sets;
      break;
    case RigidityReport::Verdict::NonDiagonalSolution: {
      j["verdict"] = "NonDiagonalSolution";
      std::vector<std::string> wit;
      for (const auto& x : r.witness) wit.push_back(x.get_str());
      j["witness"] = wit;
      break;
    }
  }
  if (r.rigid()) j["admissible_scalars"] = r.admissible_scalars;
  return j;
}

// ---- alexander / AI reports ----

inline json pairs_json(const std::vector<std::pair<int, int>>& ps) {
  json out = json::array();
  for (const auto& [i, j] : ps) out.push_back(json::array({i, j}));
  return out;
}

inline json to_json(const AlexanderData& d) {
  json j;
  j["n_generators"] = d.n;
  j["relation_count"] = static_cast<int>(d.presentation.relations.size());
  j["module_relation_count"] = static_cast<int>(d.point_vectors.size());
  j["m1_rank"] = d.m1_rank();
  j["gr1_rank"] = d.gr1_rank();
  j["pivot_pairs"] = pairs_json(d.reduction.pivot_pairs);
  j["basis_pairs"] = pairs_json(d.reduction.basis_pairs);
  std::vector<std::string> factors;
  for (const auto& f : d.jacobi_snf.invariant_factors()) factors.push_back(f.get_str());
  j["jacobi_invariant_factors"] = factors;
  j["jacobi_rank"] = d.jacobi_snf.rank;
  return j;
}

inline json to_json(const TestReport& r) {
  json j;
  j["raw_equation_count"] = std::to_string(r.raw_equation_count);
  j["distinct_equation_count"] = std::to_string(r.distinct_equation_count);
  j["unknown_count"] = std::to_string(r.unknown_count);
  j["rank"] = std::to_string(r.rank);
  j["augmented_rank"] = std::to_string(r.augmented_rank);
  j["consistent_over_Q"] = r.consistent_over_q;
  j["q_solution_dim"] = std::to_string(r.q_solution_dim);
  std::vector<std::string> primes;
  for (const auto& p : r.denominator_primes) primes.push_back(p.get_str());
  j["denominator_primes"] = primes;
  j["integer_solvable"] = r.integer_solvable;
  j["verdict"] = r.passed() ? "Pass" : "Fail";
  return j;
}

inline json to_json(const TheoremReport& r) {
  json j;
  j["rigidity"] = to_json(r.rigidity);
  j["automorphism_group_order"] = std::to_string(r.automorphism_group.size());
  j["identity_test"] = to_json(r.identity_test);
  j["conjugate_test"] = to_json(r.conjugate_test);
  j["conclusion"] = r.conclusion;
  j["failed_gates"] = r.failed_gates;
  return j;
}

}  // namespace arrtop
