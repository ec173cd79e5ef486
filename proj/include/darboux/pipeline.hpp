#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "darboux/problem.hpp"

namespace darboux {

enum class Command { foliation, monomialize, analyze, eliminate, full };

Command parse_command(const std::string& name);
std::string command_name(Command cmd);

struct RunResult {
  nlohmann::ordered_json report;
  int exit_code = 0;  // nonzero iff a verification failed; honest inability stays zero
};

// Runs the pipeline stages implied by the command and assembles the
// deterministic machine-readable report.
RunResult run_problem(const ProblemFile& problem, Command cmd);

std::string render_text(const nlohmann::ordered_json& report);

struct VerifyOutcome {
  int checks = 0;
  int failures = 0;
  std::vector<std::string> lines;
};

// Re-derives every identity recorded in a report from the report's own data:
// chart-map composition, factor decompositions, ranks, kernels, elimination
// and annihilation identities, transversality verdicts and audit outcomes.
VerifyOutcome verify_report(const nlohmann::ordered_json& report);

}  // namespace darboux
