#pragma once

// Command-line front end.  One subcommand per pipeline stage plus the
// one-shot theorem reproduction.  Exit codes: 0 mathematical success, 1
// mathematical refutation (e.g. a failed expectation), 2 input or usage
// errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrtop/json_io.hpp"

namespace arrtop::cli {

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

inline LineCombinatorics load_combinatorics(const std::string& uri) {
  if (uri == "builtin:g91") return builtin_g91();
  if (uri.rfind("builtin:", 0) == 0) throw ParseError("unknown builtin combinatorics " + uri);
  return combinatorics_from_json(read_json_file(uri));
}

inline std::vector<ProjLine> load_lines(const std::string& uri) {
  if (uri.rfind("builtin:a91-", 0) == 0 && uri.size() == 13)
    return builtin_a91(uri[12] - '0');
  if (uri.rfind("builtin:", 0) == 0) throw ParseError("unknown builtin lines " + uri);
  return lines_from_json(read_json_file(uri));
}

inline WiringDiagram load_wiring(const std::string& uri) {
  if (uri == "builtin:xi1") return builtin_wiring(BuiltinWiring::xi1);
  if (uri == "builtin:xi2") return builtin_wiring(BuiltinWiring::xi2);
  if (uri == "builtin:xi1-mirror") return mirror(builtin_wiring(BuiltinWiring::xi1));
  if (uri.rfind("builtin:", 0) == 0) throw ParseError("unknown builtin wiring " + uri);
  return wiring_from_json(read_json_file(uri));
}

struct Output {
  std::string format = "text";
  std::string path;

  void emit(const json& j, const std::string& text, std::ostream& out) const {
    std::string payload = (format == "json") ? j.dump(2) + "\n" : text;
    if (path.empty()) {
      out << payload;
    } else {
      std::ofstream f(path);
      if (!f) throw ParseError("cannot write " + path);
      f << payload;
    }
  }
};

inline std::string verdict_str(const TestReport& r) { return r.passed() ? "Pass" : "Fail"; }

inline std::string test_report_text(const TestReport& r, const std::string& title) {
  std::ostringstream os;
  os << title << "\n"
     << "  raw equations:      " << r.raw_equation_count << "\n"
     << "  distinct equations: " << r.distinct_equation_count << "\n"
     << "  unknowns:           " << r.unknown_count << "\n"
     << "  rank / augmented:   " << r.rank << " / " << r.augmented_rank << "\n"
     << "  consistent over Q:  " << (r.consistent_over_q ? "yes" : "no") << "\n"
     << "  Q-solution dim:     " << r.q_solution_dim << "\n"
     << "  denominator primes: {";
  for (size_t i = 0; i < r.denominator_primes.size(); ++i)
    os << (i ? ", " : "") << r.denominator_primes[i].get_str();
  os << "}\n"
     << "  integer solvable:   " << (r.integer_solvable ? "yes" : "no") << "\n"
     << "  verdict:            " << verdict_str(r) << "\n";
  return os.str();
}

inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"arrtop: exact pipeline deciding that the Galois-conjugate line "
               "arrangements with combinatorics G91 have non-isomorphic fundamental groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may also trail the subcommand
  Output output;
  int jobs = 1;
  app.add_option("--format", output.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--output", output.path, "write the report to a file");
  app.add_option("--jobs", jobs, "worker threads for parallel-capable stages")
      ->check(CLI::PositiveNumber);

  int exit_code = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check the combinatorics axioms");
  std::string validate_input = "builtin:g91";
  validate_cmd->add_option("--input", validate_input, "combinatorics (builtin: or JSON file)");
  validate_cmd->callback([&] {
    LineCombinatorics c = load_combinatorics(validate_input);
    try {
      validate(c);
    } catch (const ValidationError& e) {
      json j{{"valid", false}, {"error", e.what()}};
      std::ostringstream os;
      os << "invalid: " << e.what();
      if (e.line1) os << " (lines " << e.line1 << ", " << e.line2 << ")";
      os << "\n";
      output.emit(j, os.str(), out);
      exit_code = 1;
      return;
    }
    output.emit(json{{"valid", true}}, "ok\n", out);
  });

  auto* autos_cmd = app.add_subcommand("automorphisms", "combinatorial automorphism group");
  std::string autos_input = "builtin:g91";
  autos_cmd->add_option("--input", autos_input, "combinatorics (builtin: or JSON file)");
  autos_cmd->callback([&] {
    auto group = automorphisms(load_combinatorics(autos_input));
    json j;
    j["order"] = group.size();
    j["elements"] = json::array();
    std::ostringstream os;
    os << "automorphism group of order " << group.size() << "\n";
    for (const auto& g : group) {
      j["elements"].push_back(g.images);
      os << "  (";
      for (size_t i = 0; i < g.images.size(); ++i) os << (i ? " " : "") << g.images[i];
      os << ")\n";
    }
    output.emit(j, os.str(), out);
  });

  auto* pencils_cmd = app.add_subcommand("pencils", "combinatorial pencils and triangle table");
  std::string pencils_input = "builtin:g91";
  std::string pencils_builtin;
  pencils_cmd->add_option("--input", pencils_input, "combinatorics (builtin: or JSON file)");
  pencils_cmd->add_option("--builtin", pencils_builtin, "builtin combinatorics name");
  pencils_cmd->callback([&] {
    std::string uri = pencils_builtin.empty() ? pencils_input : "builtin:" + pencils_builtin;
    TriangleTable t = triangle_table(load_combinatorics(uri), jobs);
    std::ostringstream os;
    for (const auto& row : t.rows) {
      os << (row.pencil.kind == PencilKind::MultiplePoint ? "point " : "ceva  ");
      for (int L : row.pencil.lines()) os << L << " ";
      os << " dim=" << row.dim << " triangles=" << row.triangles
         << " through_quintuple=" << row.triangles_through_quintuple << "\n";
    }
    output.emit(to_json(t), os.str(), out);
  });

  auto* rigidity_cmd = app.add_subcommand("rigidity", "homological rigidity check");
  std::string rigidity_input = "builtin:g91";
  rigidity_cmd->add_option("--input", rigidity_input, "combinatorics (builtin: or JSON file)");
  rigidity_cmd->callback([&] {
    RigidityReport r = rigidity_check(load_combinatorics(rigidity_input), jobs);
    std::ostringstream os;
    if (r.rigid())
      os << "Rigid; admissible scalars {+1, -1}\n";
    else if (r.verdict == RigidityReport::Verdict::FingerprintCollision)
      os << "FingerprintCollision\n";
    else
      os << "NonDiagonalSolution\n";
    output.emit(to_json(r), os.str(), out);
    if (!r.rigid()) exit_code = 1;
  });

  auto* realize_cmd = app.add_subcommand("realize", "incidence combinatorics of exact lines");
  std::string realize_input = "builtin:a91-1";
  realize_cmd->add_option("--input", realize_input, "lines (builtin:a91-1..4 or JSON file)");
  realize_cmd->callback([&] {
    auto lines = load_lines(realize_input);
    LineCombinatorics c = incidence_combinatorics(lines);
    json j;
    j["lines"] = to_json(lines)["lines"];
    j["combinatorics"] = to_json(c);
    std::ostringstream os;
    os << lines.size() << " lines, " << c.points.size() << " points\n";
    for (const auto& p : c.points) {
      os << "  {";
      for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
      os << "}\n";
    }
    output.emit(j, os.str(), out);
  });

  auto* present_cmd = app.add_subcommand("present", "compile a wiring diagram to a presentation");
  std::string present_input = "builtin:xi1";
  present_cmd->add_option("--input", present_input, "wiring (builtin: or JSON file)");
  present_cmd->callback([&] {
    WiringDiagram w = load_wiring(present_input);
    Presentation p = relations(w);
    std::ostringstream os;
    os << p.n_generators << " generators, " << p.relations.size() << " relations\n";
    for (const auto& rel : p.relations) {
      os << "  point {";
      for (size_t i = 0; i < rel.lines.size(); ++i) os << (i ? "," : "") << rel.lines[i];
      os << "} conjugators";
      for (const auto& cw : rel.conjugators) {
        os << " [";
        for (size_t i = 0; i < cw.letters.size(); ++i) os << (i ? "," : "") << cw.letters[i];
        os << "]";
      }
      os << "\n";
    }
    output.emit(to_json(p), os.str(), out);
  });

  auto* alex_cmd = app.add_subcommand("alexander", "truncated Alexander invariants of a wiring");
  std::string alex_input = "builtin:xi1";
  alex_cmd->add_option("--input", alex_input, "wiring (builtin: or JSON file)");
  alex_cmd->callback([&] {
    AlexanderData d = compute_alexander(load_wiring(alex_input));
    std::ostringstream os;
    os << "rank M_1 = " << d.m1_rank() << "\n"
       << "rank gr^1 M_2 = " << d.gr1_rank() << "\n"
       << "jacobi rank = " << d.jacobi_snf.rank << ", invariant factors all 1: "
       << (std::all_of(d.jacobi_snf.invariant_factors().begin(),
                       d.jacobi_snf.invariant_factors().end(),
                       [](const Int& f) { return f == 1; })
               ? "yes"
               : "no")
       << "\n";
    output.emit(to_json(d), os.str(), out);
  });

  auto* ai_cmd = app.add_subcommand("ai-test", "AI-isomorphism test of level 2");
  std::string ai_source = "builtin:xi1", ai_target = "builtin:xi2", ai_expect;
  ai_cmd->add_option("--source", ai_source, "source wiring");
  ai_cmd->add_option("--target", ai_target, "target wiring");
  ai_cmd->add_option("--expect", ai_expect, "fail with exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"pass", "fail"}));
  ai_cmd->callback([&] {
    TestReport r = run_test(load_wiring(ai_source), load_wiring(ai_target));
    output.emit(to_json(r), test_report_text(r, "AI-isomorphism test (level 2)"), out);
    if (!ai_expect.empty()) {
      const bool want_pass = ai_expect == "pass";
      if (want_pass != r.passed()) exit_code = 1;
    }
  });

  auto* zariski_cmd =
      app.add_subcommand("zariski", "full theorem pipeline: the two groups are not isomorphic");
  zariski_cmd->callback([&] {
    TheoremReport r = theorem_pipeline();
    std::ostringstream os;
    os << "rigidity: " << (r.rigidity.rigid() ? "Rigid" : "failed") << "\n"
       << "automorphism group order: " << r.automorphism_group.size() << "\n"
       << test_report_text(r.identity_test, "identity-homology test (G1 -> G2)")
       << test_report_text(r.conjugate_test, "conjugate test (G4 -> G2)") << "conclusion: "
       << (r.conclusion ? "fundamental groups are NOT isomorphic" : "inconclusive") << "\n";
    output.emit(to_json(r), os.str(), out);
    if (!r.conclusion) exit_code = 1;
  });

  std::vector<const char*> argv;
  argv.push_back("arrtop");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace arrtop::cli
