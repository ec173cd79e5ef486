#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "darboux/pipeline.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact monomialization toolkit for Darboux-type foliations"};
  app.require_subcommand(1);

  std::string problem_path, output_path, script_path, strategy_name;
  int jet_order = 0, max_depth = 0;
  bool machine = false;

  auto add_run_command = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("problem", problem_path, "problem file")->required();
    sub->add_option("--jet-order", jet_order, "jet truncation order (overrides the problem file)");
    sub->add_option("--max-depth", max_depth, "blow-up depth budget");
    sub->add_option("--strategy", strategy_name,
                    "center strategy: manual | auto-origin | auto-coordinate");
    sub->add_option("--script", script_path, "manual blow-up script file");
    sub->add_option("--output", output_path, "write the report to a file instead of stdout");
    sub->add_flag("--machine", machine, "emit the machine-readable report only");
    return sub;
  };

  add_run_command("foliation", "build the defining one-form and wedge coefficients");
  add_run_command("monomialize", "blow up until every leaf is monomial times unit");
  add_run_command("analyze", "exponent-matrix rank, resonance and generator field");
  add_run_command("eliminate", "solve the unit-eliminating change of variables");
  add_run_command("full", "run every stage and every verification");

  std::string report_path;
  CLI::App* verify = app.add_subcommand("verify-report", "re-check every identity in a report");
  verify->add_option("report", report_path, "machine-readable report file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      std::ifstream in(report_path);
      if (!in) {
        std::cerr << "error: cannot open '" << report_path << "'\n";
        return 2;
      }
      nlohmann::ordered_json report;
      in >> report;
      const darboux::VerifyOutcome outcome = darboux::verify_report(report);
      std::ostringstream os;
      for (const auto& line : outcome.lines) os << line << "\n";
      os << outcome.checks - outcome.failures << "/" << outcome.checks << " checks passed\n";
      const int wr = write_output(os.str(), output_path);
      if (wr) return wr;
      return outcome.failures ? 1 : 0;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    darboux::ProblemFile problem = darboux::load_problem(problem_path);
    if (jet_order > 0) problem.jet_order = jet_order;
    if (max_depth > 0) problem.max_depth = max_depth;
    if (!strategy_name.empty()) {
      if (strategy_name == "manual")
        problem.strategy_kind = darboux::Strategy::Kind::manual;
      else if (strategy_name == "auto-origin")
        problem.strategy_kind = darboux::Strategy::Kind::auto_origin;
      else if (strategy_name == "auto-coordinate")
        problem.strategy_kind = darboux::Strategy::Kind::auto_coordinate;
      else
        throw std::invalid_argument("unknown strategy '" + strategy_name + "'");
    }
    if (!script_path.empty()) {
      std::ifstream in(script_path);
      if (!in) throw std::runtime_error("cannot open script file '" + script_path + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      problem.script = darboux::parse_script(ss.str());
      problem.strategy_kind = darboux::Strategy::Kind::manual;
    }

    const darboux::RunResult result =
        darboux::run_problem(problem, darboux::parse_command(command));
    const std::string text =
        machine ? result.report.dump(2) + "\n" : darboux::render_text(result.report);
    const int wr = write_output(text, output_path);
    if (wr) return wr;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
