#include "darboux/pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "darboux/parser.hpp"
#include "darboux/unitelim.hpp"

namespace darboux {

using json = nlohmann::ordered_json;

Command parse_command(const std::string& name) {
  if (name == "foliation") return Command::foliation;
  if (name == "monomialize") return Command::monomialize;
  if (name == "analyze") return Command::analyze;
  if (name == "eliminate") return Command::eliminate;
  if (name == "full") return Command::full;
  throw std::invalid_argument("unknown command '" + name + "'");
}

std::string command_name(Command cmd) {
  switch (cmd) {
    case Command::foliation: return "foliation";
    case Command::monomialize: return "monomialize";
    case Command::analyze: return "analyze";
    case Command::eliminate: return "eliminate";
    case Command::full: return "full";
  }
  return "?";
}

namespace {

json rationals_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

std::vector<Rational> rationals_from_json(const json& a) {
  std::vector<Rational> out;
  for (const auto& s : a) out.push_back(parse_rational(s.get<std::string>()));
  return out;
}

json monomial_json(const Monomial& m) {
  json out = json::array();
  for (int e : m.exponents()) out.push_back(e);
  return out;
}

json chart_json(const Chart& chart) {
  json j;
  j["id"] = chart.id();
  j["parent"] = chart.parent_id();
  j["depth"] = chart.depth();
  json step = json::object();
  for (const auto& v : chart.roster()) {
    auto it = chart.step().find(v);
    if (it != chart.step().end()) step[v] = it->second.str();
  }
  j["step"] = step;
  json map = json::object();
  for (std::size_t i = 0; i < chart.root_roster().size(); ++i)
    map[chart.root_roster()[i]] = chart.map_from_root()[i].str();
  j["map"] = map;
  j["divisors"] = chart.divisor_vars();
  return j;
}

json system_json(const MonomialSystem& sys) {
  json j;
  j["gamma0"] = rationals_json(sys.gamma0);
  json gs = json::array();
  for (const auto& g : sys.gammas) gs.push_back(rationals_json(g));
  j["gammas"] = gs;
  json units = json::array();
  for (const auto& u : sys.units) units.push_back(u.str());
  j["units"] = units;
  json dropped = json::array();
  for (const auto& d : sys.dropped) dropped.push_back(d.display());
  j["dropped_constants"] = dropped;
  if (!sys.factor_records.empty()) {
    json fs = json::array();
    for (const auto& f : sys.factor_records) {
      json fj;
      fj["beta"] = monomial_json(f.beta);
      fj["constant"] = to_string(f.constant);
      fj["cofactor"] = f.cofactor.str();
      fs.push_back(fj);
    }
    j["factors"] = fs;
  }
  return j;
}

std::string leaf_state_name(LeafState s) {
  switch (s) {
    case LeafState::ok: return "ok";
    case LeafState::depth_exceeded: return "depth-exceeded";
    case LeafState::script_exhausted: return "script-exhausted";
  }
  return "?";
}

std::string check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

class CheckLedger {
 public:
  void add(const std::string& name, CheckStatus status, const std::string& detail = "") {
    json c;
    c["name"] = name;
    c["status"] = check_status_name(status);
    if (!detail.empty()) c["detail"] = detail;
    entries_.push_back(std::move(c));
    if (status == CheckStatus::failed) ++failures_;
    if (status == CheckStatus::passed) ++passed_;
    if (status == CheckStatus::skipped) ++skipped_;
  }
  void add(const std::string& name, bool ok, const std::string& detail = "") {
    add(name, ok ? CheckStatus::passed : CheckStatus::failed, detail);
  }

  json to_json() const { return entries_; }
  int failures() const { return failures_; }
  int passed() const { return passed_; }
  int skipped() const { return skipped_; }

 private:
  json entries_ = json::array();
  int failures_ = 0, passed_ = 0, skipped_ = 0;
};

json problem_json(const ProblemFile& p) {
  json j;
  j["variables"] = p.variables;
  if (!p.factors.empty()) {
    json fs = json::array();
    for (const auto& f : p.factors) {
      json fj;
      fj["expr"] = f.expr;
      fj["exponent"] = to_string(f.exponent);
      fs.push_back(fj);
    }
    j["factors"] = fs;
  }
  if (!p.imported.empty()) {
    json rows = json::array();
    for (const auto& row : p.imported) {
      json rj;
      rj["exponents"] = rationals_json(row.exponents);
      rj["unit"] = row.unit_expr;
      rows.push_back(rj);
    }
    j["imported"] = rows;
  }
  switch (p.strategy_kind) {
    case Strategy::Kind::manual: j["strategy"] = "manual"; break;
    case Strategy::Kind::auto_origin: j["strategy"] = "auto-origin"; break;
    case Strategy::Kind::auto_coordinate: j["strategy"] = "auto-coordinate"; break;
  }
  j["jet_order"] = p.jet_order;
  j["max_depth"] = p.max_depth;
  if (!p.script.empty()) {
    json sc = json::array();
    for (const auto& e : p.script) {
      json ej;
      ej["chart"] = e.chart_id;
      ej["center"] = e.center_vars;
      sc.push_back(ej);
    }
    j["script"] = sc;
  }
  if (!p.divisors.empty()) j["divisors"] = p.divisors;
  if (!p.audits.empty()) {
    json as = json::array();
    for (const auto& a : p.audits) {
      json aj;
      aj["label"] = a.label;
      aj["exponents"] = rationals_json(a.exponents);
      as.push_back(aj);
    }
    j["audits"] = as;
  }
  if (p.gauge) j["gauge"] = *p.gauge;
  return j;
}

// Builds z^beta with integer beta from a rational row; returns false when some
// entry is not a non-negative integer (then no exact polynomial reconstruction
// is attempted).
bool integer_monomial(const std::vector<Rational>& row, std::vector<int>& out) {
  out.clear();
  for (const auto& r : row) {
    if (!is_integer(r) || r < 0) return false;
    out.push_back(static_cast<int>(to_integer(r)));
  }
  return true;
}

struct LeafWork {
  LeafOutcome outcome;
  std::optional<MonomialSystem> normalized;
  std::optional<LogLinearField> field;
  std::optional<EliminationResult> elimination;
  std::optional<PushedField> pushed;
};

}  // namespace

RunResult run_problem(const ProblemFile& problem, Command cmd) {
  json report;
  report["tool"] = "darboux";
  report["command"] = command_name(cmd);
  report["jet_order"] = problem.jet_order;
  report["problem"] = problem_json(problem);
  CheckLedger checks;
  json discrepancies = json::array();

  // ---- foliation stage ------------------------------------------------
  std::optional<DarbouxIntegral> integral;
  if (!problem.is_import()) integral = problem.integral();

  if (integral) {
    const OneForm omega = darboux_one_form(*integral);
    const WedgeSystem ws = wedge_system(omega);
    json fj;
    json coefficients = json::object();
    for (std::size_t i = 0; i < omega.variables().size(); ++i)
      coefficients[omega.variables()[i]] = omega.coefficients()[i].str();
    fj["one_form"] = coefficients;
    fj["q1"] = ws.q1.str();
    fj["q2"] = ws.q2.str();
    const CheckStatus vf = verify_integrating_factor(*integral, omega);
    fj["integrating_factor_check"] = check_status_name(vf);
    checks.add("integrating-factor", vf,
               vf == CheckStatus::skipped ? "non-integer exponents; H is not a polynomial" : "");
    report["foliation"] = fj;
  } else {
    json fj;
    fj["status"] = "skipped";
    fj["reason"] = "imported system";
    report["foliation"] = fj;
  }

  if (cmd == Command::foliation) {
    report["discrepancies"] = discrepancies;
    report["checks"] = checks.to_json();
    json summary;
    summary["checks_passed"] = checks.passed();
    summary["checks_failed"] = checks.failures();
    summary["checks_skipped"] = checks.skipped();
    summary["status"] = checks.failures() ? "failed" : "ok";
    report["summary"] = summary;
    return RunResult{report, checks.failures() ? 1 : 0};
  }

  // ---- monomialize stage ----------------------------------------------
  std::optional<ChartTree> tree;
  std::vector<LeafWork> work;
  if (problem.is_import()) {
    MonomialSystem sys = problem.imported_system();
    tree = ChartTree(sys.chart);
    LeafWork w;
    w.outcome = LeafOutcome{sys.chart.id(), LeafState::ok, "", std::move(sys)};
    work.push_back(std::move(w));
  } else {
    MonomializeResult result = monomialize_sequence(*integral, problem.strategy(),
                                                    problem.jet_order);
    tree = std::move(result.tree);
    for (auto& outcome : result.leaves) work.push_back(LeafWork{std::move(outcome), {}, {}, {}, {}});
  }

  json charts = json::array();
  for (const auto& id : tree->all_ids()) charts.push_back(chart_json(tree->chart(id)));
  report["charts"] = charts;

  // Per-leaf verification of the assembled systems.
  for (auto& w : work) {
    if (!w.outcome.system) continue;
    const MonomialSystem& sys = *w.outcome.system;
    if (sys.factor_records.empty()) continue;  // imported: nothing to reconstruct
    bool recon_ok = true;
    for (std::size_t i = 0; i < sys.factor_records.size(); ++i) {
      const auto& rec = sys.factor_records[i];
      const Polynomial pb = sys.chart.pullback(integral->factors()[i].poly);
      const Polynomial rebuilt =
          Polynomial::monomial(sys.chart.roster(), rec.beta, Rational(1)) * rec.cofactor;
      if (!(rebuilt == pb)) recon_ok = false;
    }
    checks.add("leaf-reconstruction[" + w.outcome.chart_id + "]", recon_ok);

    if (integral->all_integer_exponents()) {
      Polynomial h = Polynomial::constant(integral->variables(), Rational(1));
      for (const auto& f : integral->factors())
        h = h * f.poly.pow(static_cast<unsigned>(to_integer(f.exponent)));
      const auto nc = normal_crossings_at_origin(sys.chart.pullback(h));
      bool additive = nc.ok;
      for (std::size_t j = 0; j < sys.gamma0.size() && additive; ++j) {
        if (Rational(nc.beta.exponent(j)) != sys.gamma0[j]) additive = false;
      }
      checks.add("gamma0-additivity[" + w.outcome.chart_id + "]", additive);
    }
  }

  // Optional normal-crossings probes at user-supplied points.
  if (!problem.nc_points.empty() && integral) {
    json probes = json::array();
    for (const auto& [chart_id, point] : problem.nc_points) {
      json pj;
      pj["chart"] = chart_id;
      pj["point"] = rationals_json(point);
      if (!tree->contains(chart_id)) {
        pj["status"] = "no such chart";
      } else {
        const Chart& chart = tree->chart(chart_id);
        json per_factor = json::array();
        for (const auto& f : integral->factors())
          per_factor.push_back(normal_crossings_at_point(chart.pullback(f.poly), point).ok);
        pj["factors_normal_crossings"] = per_factor;
      }
      probes.push_back(pj);
    }
    report["nc_points"] = probes;
  }

  const bool do_analysis = cmd != Command::monomialize;
  const bool do_elimination = cmd == Command::eliminate || cmd == Command::full;

  // Gauge column names resolved against each leaf's roster lazily.
  json leaves = json::array();
  for (auto& w : work) {
    json lj;
    lj["id"] = w.outcome.chart_id;
    lj["status"] = leaf_state_name(w.outcome.state);
    if (!w.outcome.detail.empty()) lj["detail"] = w.outcome.detail;
    if (w.outcome.system) lj["system"] = system_json(*w.outcome.system);

    if (w.outcome.system && do_analysis) {
      const MonomialSystem& sys = *w.outcome.system;
      json aj;
      const auto rows = sys.exponent_rows();
      const int rank = rank_of(rows);
      aj["rank"] = rank;
      aj["max_rank"] = rank == static_cast<int>(rows.size());
      const bool resonant = is_resonant(sys.gamma0, sys.gammas);
      aj["resonant"] = resonant;
      try {
        const ExponentMatrix m(rows);
        const LogLinearField field = generator_field(m);
        aj["generator"] = rationals_json(field.alpha);
        bool ortho = true;
        for (const auto& row : rows) {
          if (!verify_annihilation(field, row)) ortho = false;
        }
        checks.add("kernel-orthogonality[" + w.outcome.chart_id + "]", ortho);
        w.field = field;
      } catch (const RankDeficient&) {
        aj["generator"] = nullptr;
        aj["generator_status"] = "rank-deficient";
      }
      lj["analysis"] = aj;

      if (do_elimination) {
        json ej;
        try {
          w.normalized = normalize_units(sys);
          std::optional<std::vector<std::size_t>> gauge;
          if (problem.gauge) {
            std::vector<std::size_t> idx;
            for (const auto& name : *problem.gauge) {
              const auto it = std::find(sys.chart.roster().begin(), sys.chart.roster().end(),
                                        name);
              if (it == sys.chart.roster().end())
                throw std::invalid_argument("gauge variable '" + name + "' not in chart roster");
              idx.push_back(static_cast<std::size_t>(it - sys.chart.roster().begin()));
            }
            gauge = idx;
          }
          w.elimination = eliminate_units(*w.normalized, problem.jet_order, gauge);
          ej["status"] = "ok";
          json cols = json::array();
          for (std::size_t c : w.elimination->columns) cols.push_back(sys.chart.roster()[c]);
          ej["columns"] = cols;
          json change = json::object();
          for (std::size_t j = 0; j < sys.chart.roster().size(); ++j)
            change[sys.chart.roster()[j]] = w.elimination->change.factors[j].str();
          ej["change"] = change;
          json normalized_units = json::array();
          for (const auto& u : w.normalized->units) normalized_units.push_back(u.str());
          ej["normalized_units"] = normalized_units;
          json dropped = json::array();
          for (const auto& d : w.normalized->dropped) dropped.push_back(d.display());
          ej["dropped_constants"] = dropped;
          bool all_match = std::all_of(w.elimination->unit_match.begin(),
                                       w.elimination->unit_match.end(), [](bool b) { return b; });
          ej["unit_match"] = w.elimination->unit_match;
          checks.add("elimination-reconstruction[" + w.outcome.chart_id + "]", all_match);

          if (w.field) {
            w.pushed = push_forward_field(*w.field, w.elimination->change);
            json pj;
            pj["linear"] = rationals_json(w.pushed->linear);
            json corr = json::object();
            for (std::size_t j = 0; j < sys.chart.roster().size(); ++j)
              corr[sys.chart.roster()[j]] = w.pushed->corrections[j].str();
            pj["corrections"] = corr;
            lj["pushed_field"] = pj;

            const auto rows2 = w.normalized->exponent_rows();
            bool annihilates = true;
            for (std::size_t i = 0; i < rows2.size(); ++i) {
              if (!field_annihilates(*w.pushed, rows2[i], w.normalized->units[i]))
                annihilates = false;
            }
            checks.add("annihilation[" + w.outcome.chart_id + "]", annihilates);

            std::set<std::string> divisor_set(sys.chart.divisor_vars().begin(),
                                              sys.chart.divisor_vars().end());
            for (const auto& d : problem.divisors) {
              if (sys.chart.roster().end() != std::find(sys.chart.roster().begin(),
                                                        sys.chart.roster().end(), d))
                divisor_set.insert(d);
            }
            json tj = json::array();
            for (const auto& v : sys.chart.roster()) {
              if (!divisor_set.count(v)) continue;
              const Transversality t = transversality_report(*w.pushed, v);
              json te;
              te["divisor"] = v;
              te["transversal"] = t.transversal;
              te["detail"] = t.detail;
              tj.push_back(te);
            }
            lj["transversality"] = tj;
          }

          // Audit candidates: V_j = Delta_0^{e_j}, checked row by row.
          if (!problem.audits.empty()) {
            json audits = json::array();
            const Jet delta0 = w.normalized->units[0];
            const auto rows2 = w.normalized->exponent_rows();
            for (const auto& candidate : problem.audits) {
              json cj;
              cj["label"] = candidate.label;
              cj["exponents"] = rationals_json(candidate.exponents);
              std::vector<Jet> vs;
              for (std::size_t j = 0; j < sys.chart.roster().size(); ++j)
                vs.push_back(delta0.pow(candidate.exponents[j]));
              json row_match = json::array();
              bool integral_killed = false, others_preserved = true;
              for (std::size_t i = 0; i < rows2.size(); ++i) {
                Jet rebuilt = Jet::one(sys.chart.roster(), problem.jet_order);
                for (std::size_t j = 0; j < vs.size(); ++j) {
                  if (rows2[i][j] != 0) rebuilt = rebuilt * vs[j].pow(rows2[i][j]);
                }
                const bool match = rebuilt == w.normalized->units[i];
                row_match.push_back(match);
                if (i == 0)
                  integral_killed = match;
                else if (!match)
                  others_preserved = false;
              }
              cj["integral_unit_eliminated"] = integral_killed;
              cj["parameters_preserved"] = others_preserved;
              cj["row_match"] = row_match;
              audits.push_back(cj);
              if (!integral_killed || !others_preserved) {
                json dj;
                dj["leaf"] = w.outcome.chart_id;
                dj["label"] = candidate.label;
                dj["candidate_exponents"] = rationals_json(candidate.exponents);
                dj["integral_unit_eliminated"] = integral_killed;
                dj["parameters_preserved"] = others_preserved;
                json solved = json::object();
                for (std::size_t j = 0; j < sys.chart.roster().size(); ++j)
                  solved[sys.chart.roster()[j]] = w.elimination->change.factors[j].str();
                dj["solved_change"] = solved;
                discrepancies.push_back(dj);
              }
            }
            lj["audits"] = audits;
          }
        } catch (const NonGeneric& e) {
          ej["status"] = "nongeneric-open-question";
          ej["detail"] = e.what();
          ej["rank"] = e.rank;
          ej["required_rank"] = e.required;
          checks.add("elimination-reconstruction[" + w.outcome.chart_id + "]",
                     CheckStatus::skipped, "nongeneric case");
        }
        lj["elimination"] = ej;
      }
    }
    leaves.push_back(std::move(lj));
  }
  report["leaves"] = leaves;

  report["discrepancies"] = discrepancies;
  report["checks"] = checks.to_json();
  json summary;
  summary["checks_passed"] = checks.passed();
  summary["checks_failed"] = checks.failures();
  summary["checks_skipped"] = checks.skipped();
  summary["status"] = checks.failures() ? "failed" : "ok";
  report["summary"] = summary;
  return RunResult{report, checks.failures() ? 1 : 0};
}

namespace {

void emit(VerifyOutcome& out, const std::string& name, bool ok, const std::string& detail = "") {
  ++out.checks;
  if (!ok) ++out.failures;
  out.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + name +
                      (detail.empty() ? "" : ": " + detail));
}

}  // namespace

VerifyOutcome verify_report(const json& report) {
  VerifyOutcome out;
  const auto& problem = report.at("problem");
  const std::vector<std::string> root_vars = problem.at("variables");
  const int order = report.at("jet_order").get<int>();

  // Chart maps compose along the tree.
  std::map<std::string, json> charts;
  if (report.contains("charts")) {
    for (const auto& c : report["charts"]) charts.emplace(c.at("id").get<std::string>(), c);
    for (const auto& [id, c] : charts) {
      const std::string parent_id = c.at("parent").get<std::string>();
      if (parent_id.empty()) {
        bool ok = true;
        for (const auto& v : root_vars) {
          if (c.at("map").at(v).get<std::string>() != v) ok = false;
        }
        emit(out, "chart-map-identity[" + id + "]", ok);
        continue;
      }
      const auto pit = charts.find(parent_id);
      if (pit == charts.end()) {
        emit(out, "chart-parent[" + id + "]", false, "missing parent " + parent_id);
        continue;
      }
      std::map<std::string, Polynomial> step;
      for (const auto& [var, expr] : c.at("step").items())
        step.emplace(var, parse_polynomial(expr.get<std::string>(), root_vars));
      bool ok = true;
      for (const auto& v : root_vars) {
        const Polynomial parent_map =
            parse_polynomial(pit->second.at("map").at(v).get<std::string>(), root_vars);
        const Polynomial composed = parent_map.substitute(root_vars, step);
        const Polynomial claimed = parse_polynomial(c.at("map").at(v).get<std::string>(),
                                                    root_vars);
        if (!(composed == claimed)) ok = false;
      }
      emit(out, "chart-map-composition[" + id + "]", ok);
    }
  }

  if (!report.contains("leaves")) return out;
  for (const auto& leaf : report["leaves"]) {
    const std::string id = leaf.at("id").get<std::string>();
    if (leaf.at("status").get<std::string>() != "ok") continue;
    if (!leaf.contains("system")) continue;
    const auto& sys = leaf["system"];
    const std::vector<Rational> gamma0 = rationals_from_json(sys.at("gamma0"));
    std::vector<std::vector<Rational>> gammas;
    for (const auto& g : sys.at("gammas")) gammas.push_back(rationals_from_json(g));
    std::vector<std::vector<Rational>> rows;
    rows.push_back(gamma0);
    for (const auto& g : gammas) rows.push_back(g);

    // Factor decompositions against the recomputed pullbacks.
    if (sys.contains("factors") && problem.contains("factors") && charts.count(id)) {
      std::map<std::string, Polynomial> map_bindings;
      for (const auto& v : root_vars)
        map_bindings.emplace(
            v, parse_polynomial(charts.at(id).at("map").at(v).get<std::string>(), root_vars));
      std::vector<Rational> weighted(root_vars.size(), Rational(0));
      bool recon_ok = true;
      for (std::size_t i = 0; i < sys["factors"].size(); ++i) {
        const auto& frec = sys["factors"][i];
        const auto& fspec = problem["factors"][i];
        const Polynomial factor =
            parse_polynomial(fspec.at("expr").get<std::string>(), root_vars);
        const Polynomial pb = factor.substitute(root_vars, map_bindings);
        std::vector<int> beta = frec.at("beta").get<std::vector<int>>();
        const Polynomial cofactor =
            parse_polynomial(frec.at("cofactor").get<std::string>(), root_vars);
        const Polynomial rebuilt =
            Polynomial::monomial(root_vars, Monomial(beta), Rational(1)) * cofactor;
        if (!(rebuilt == pb)) recon_ok = false;
        if (cofactor.constant_term() != parse_rational(frec.at("constant").get<std::string>()))
          recon_ok = false;
        const Rational a = parse_rational(fspec.at("exponent").get<std::string>());
        for (std::size_t j = 0; j < root_vars.size(); ++j) weighted[j] += a * beta[j];
      }
      emit(out, "factor-decomposition[" + id + "]", recon_ok);
      emit(out, "gamma0-additivity[" + id + "]", weighted == gamma0);
    }

    if (leaf.contains("analysis")) {
      const auto& aj = leaf["analysis"];
      const int rank = rank_of(rows);
      emit(out, "rank[" + id + "]", rank == aj.at("rank").get<int>());
      emit(out, "resonance[" + id + "]",
           is_resonant(gamma0, gammas) == aj.at("resonant").get<bool>());
      if (!aj.at("generator").is_null()) {
        const std::vector<Rational> alpha = rationals_from_json(aj["generator"]);
        bool ok = true;
        for (const auto& row : rows) {
          if (dot(alpha, row) != 0) ok = false;
        }
        try {
          const LogLinearField recomputed = generator_field(ExponentMatrix(rows));
          if (recomputed.alpha != alpha) ok = false;
        } catch (const RankDeficient&) {
          ok = false;
        }
        emit(out, "generator[" + id + "]", ok);
      }
    }

    if (leaf.contains("elimination") &&
        leaf["elimination"].at("status").get<std::string>() == "ok") {
      const auto& ej = leaf["elimination"];
      const auto roster = root_vars;  // leaf rosters reuse the root names
      std::vector<Jet> units;
      for (const auto& u : ej.at("normalized_units"))
        units.push_back(Jet(parse_polynomial(u.get<std::string>(), roster), order));
      std::vector<Jet> change;
      bool const_ok = true;
      for (const auto& v : roster) {
        Jet vj(parse_polynomial(ej.at("change").at(v).get<std::string>(), roster), order);
        if (vj.constant_term() != 1) const_ok = false;
        change.push_back(std::move(vj));
      }
      emit(out, "change-units[" + id + "]", const_ok);
      bool match = true;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Jet rebuilt = Jet::one(roster, order);
        for (std::size_t j = 0; j < roster.size(); ++j) {
          if (rows[i][j] != 0) rebuilt = rebuilt * change[j].pow(rows[i][j]);
        }
        if (!(rebuilt == units[i])) match = false;
      }
      emit(out, "elimination-identity[" + id + "]", match);

      if (leaf.contains("pushed_field")) {
        const auto& pj = leaf["pushed_field"];
        PushedField pushed;
        pushed.variables = roster;
        pushed.linear = rationals_from_json(pj.at("linear"));
        for (const auto& v : roster)
          pushed.corrections.push_back(
              Jet(parse_polynomial(pj.at("corrections").at(v).get<std::string>(), roster),
                  order));
        bool ann = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (!field_annihilates(pushed, rows[i], units[i])) ann = false;
        }
        emit(out, "annihilation[" + id + "]", ann);

        if (leaf.contains("transversality")) {
          bool tv_ok = true;
          for (const auto& te : leaf["transversality"]) {
            const Transversality t =
                transversality_report(pushed, te.at("divisor").get<std::string>());
            if (t.transversal != te.at("transversal").get<bool>()) tv_ok = false;
          }
          emit(out, "transversality[" + id + "]", tv_ok);
        }
      }

      if (leaf.contains("audits")) {
        bool audit_ok = true;
        for (const auto& aj : leaf["audits"]) {
          const std::vector<Rational> exps = rationals_from_json(aj.at("exponents"));
          std::vector<Jet> vs;
          for (std::size_t j = 0; j < roster.size(); ++j) vs.push_back(units[0].pow(exps[j]));
          for (std::size_t i = 0; i < rows.size(); ++i) {
            Jet rebuilt = Jet::one(roster, order);
            for (std::size_t j = 0; j < roster.size(); ++j) {
              if (rows[i][j] != 0) rebuilt = rebuilt * vs[j].pow(rows[i][j]);
            }
            if ((rebuilt == units[i]) != aj.at("row_match")[i].get<bool>()) audit_ok = false;
          }
        }
        emit(out, "audits[" + id + "]", audit_ok);
      }
    }
  }
  return out;
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os << "== darboux report ==\n";
  os << "command: " << report.at("command").get<std::string>() << "\n";
  os << "jet order: " << report.at("jet_order").get<int>() << "\n";
  const auto& problem = report.at("problem");
  os << "variables:";
  for (const auto& v : problem.at("variables")) os << " " << v.get<std::string>();
  os << "\n";
  if (problem.contains("factors")) {
    os << "integral factors:\n";
    for (const auto& f : problem["factors"])
      os << "  (" << f.at("expr").get<std::string>() << ")^"
         << f.at("exponent").get<std::string>() << "\n";
  }
  if (problem.contains("imported")) {
    os << "imported system rows:\n";
    for (const auto& r : problem["imported"]) {
      os << "  gamma = [";
      bool first = true;
      for (const auto& e : r.at("exponents")) {
        if (!first) os << ", ";
        os << e.get<std::string>();
        first = false;
      }
      os << "], unit = " << r.at("unit").get<std::string>() << "\n";
    }
  }

  if (report.contains("foliation") && report["foliation"].contains("one_form")) {
    os << "\n-- foliation --\n";
    for (const auto& [v, c] : report["foliation"]["one_form"].items())
      os << "  d" << v << ": " << c.get<std::string>() << "\n";
    os << "  q1: " << report["foliation"]["q1"].get<std::string>() << "\n";
    os << "  q2: " << report["foliation"]["q2"].get<std::string>() << "\n";
    os << "  integrating factor check: "
       << report["foliation"]["integrating_factor_check"].get<std::string>() << "\n";
  }

  if (report.contains("leaves")) {
    for (const auto& leaf : report["leaves"]) {
      os << "\n-- leaf " << leaf.at("id").get<std::string>() << " ["
         << leaf.at("status").get<std::string>() << "]";
      if (leaf.contains("detail")) os << " " << leaf["detail"].get<std::string>();
      os << "\n";
      if (leaf.contains("system")) {
        const auto& sys = leaf["system"];
        os << "  gamma0 = [";
        bool first = true;
        for (const auto& e : sys.at("gamma0")) {
          if (!first) os << ", ";
          os << e.get<std::string>();
          first = false;
        }
        os << "]\n";
        int k = 1;
        for (const auto& g : sys.at("gammas")) {
          os << "  gamma" << k++ << " = [";
          first = true;
          for (const auto& e : g) {
            if (!first) os << ", ";
            os << e.get<std::string>();
            first = false;
          }
          os << "]\n";
        }
        int u = 0;
        for (const auto& unit : sys.at("units"))
          os << "  unit" << u++ << " = " << unit.get<std::string>() << "\n";
      }
      if (leaf.contains("analysis")) {
        const auto& aj = leaf["analysis"];
        os << "  rank " << aj.at("rank").get<int>()
           << (aj.at("max_rank").get<bool>() ? " (maximal)" : " (deficient)") << ", "
           << (aj.at("resonant").get<bool>() ? "resonant" : "not resonant") << "\n";
        if (!aj.at("generator").is_null()) {
          os << "  generator alpha = [";
          bool first = true;
          for (const auto& e : aj["generator"]) {
            if (!first) os << ", ";
            os << e.get<std::string>();
            first = false;
          }
          os << "]\n";
        }
      }
      if (leaf.contains("elimination")) {
        const auto& ej = leaf["elimination"];
        os << "  elimination: " << ej.at("status").get<std::string>() << "\n";
        if (ej.contains("change")) {
          for (const auto& [v, f] : ej["change"].items())
            os << "    " << v << " -> " << v << " * (" << f.get<std::string>() << ")\n";
        }
      }
      if (leaf.contains("pushed_field")) {
        os << "  pushed field linear = [";
        bool first = true;
        for (const auto& e : leaf["pushed_field"]["linear"]) {
          if (!first) os << ", ";
          os << e.get<std::string>();
          first = false;
        }
        os << "]\n";
      }
      if (leaf.contains("transversality")) {
        for (const auto& te : leaf["transversality"])
          os << "  transversal at {" << te.at("divisor").get<std::string>()
             << " = 0}: " << (te.at("transversal").get<bool>() ? "yes" : "no") << "\n";
      }
      if (leaf.contains("audits")) {
        for (const auto& aj : leaf["audits"]) {
          os << "  audit '" << aj.at("label").get<std::string>()
             << "': integral unit eliminated: "
             << (aj.at("integral_unit_eliminated").get<bool>() ? "yes" : "no")
             << ", other rows preserved: "
             << (aj.at("parameters_preserved").get<bool>() ? "yes" : "no") << "\n";
        }
      }
    }
  }

  if (report.contains("discrepancies") && !report["discrepancies"].empty()) {
    os << "\n-- discrepancies --\n";
    for (const auto& d : report["discrepancies"]) {
      os << "  leaf " << d.at("leaf").get<std::string>() << ", candidate '"
         << d.at("label").get<std::string>() << "': integral unit eliminated "
         << (d.at("integral_unit_eliminated").get<bool>() ? "yes" : "no")
         << ", other rows preserved "
         << (d.at("parameters_preserved").get<bool>() ? "yes" : "no") << "\n";
    }
  }

  if (report.contains("checks")) {
    os << "\n-- checks --\n";
    for (const auto& c : report["checks"]) {
      os << "  [" << c.at("status").get<std::string>() << "] " << c.at("name").get<std::string>();
      if (c.contains("detail")) os << " (" << c["detail"].get<std::string>() << ")";
      os << "\n";
    }
    const auto& s = report.at("summary");
    os << "summary: " << s.at("status").get<std::string>() << " ("
       << s.at("checks_passed").get<int>() << " passed, " << s.at("checks_failed").get<int>()
       << " failed, " << s.at("checks_skipped").get<int>() << " skipped)\n";
  }
  return os.str();
}

}  // namespace darboux
