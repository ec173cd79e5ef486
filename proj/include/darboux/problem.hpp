#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "darboux/monomialize.hpp"

namespace darboux {

struct FactorSpec {
  std::string expr;
  Rational exponent;
};

struct ImportRow {
  std::vector<Rational> exponents;
  std::string unit_expr;  // "1" when absent
};

// Candidate change of variables V_j = Delta_0^{e_j}, audited against the
// solved construction in the elimination stage.
struct AuditCandidate {
  std::string label;
  std::vector<Rational> exponents;
};

// A parsed problem file. Exactly one of `factors` (pipeline path) or
// `imported` (direct system) is populated.
struct ProblemFile {
  std::vector<std::string> variables;
  std::vector<FactorSpec> factors;
  std::vector<ImportRow> imported;
  int jet_order = 8;
  int max_depth = 12;
  Strategy::Kind strategy_kind = Strategy::Kind::auto_coordinate;
  std::vector<ScriptEntry> script;
  std::vector<std::string> divisors;  // extra transversality targets / import divisors
  std::vector<AuditCandidate> audits;
  std::optional<std::vector<std::string>> gauge;
  std::vector<std::pair<std::string, std::vector<Rational>>> nc_points;

  bool is_import() const { return !imported.empty(); }
  Strategy strategy() const;
  DarbouxIntegral integral() const;    // factor path only
  MonomialSystem imported_system() const;  // import path only
};

struct ProblemError : std::runtime_error {
  ProblemError(const std::string& message, int line)
      : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line(line) {}
  int line;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);

// Script files reuse the center entry syntax: "CHART_ID | var var ..." per line.
std::vector<ScriptEntry> parse_script(const std::string& text);

}  // namespace darboux
