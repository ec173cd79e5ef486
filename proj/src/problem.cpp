#include "darboux/problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "darboux/parser.hpp"

namespace darboux {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s, int line) {
  std::vector<Rational> out;
  for (const auto& w : split_words(s)) {
    try {
      out.push_back(parse_rational(w));
    } catch (const std::exception& e) {
      throw ProblemError(std::string("bad rational '") + w + "': " + e.what(), line);
    }
  }
  return out;
}

int parse_int(const std::string& s, int line, int lo, int hi) {
  try {
    const int v = std::stoi(s);
    if (v < lo || v > hi) throw std::out_of_range("range");
    return v;
  } catch (const std::exception&) {
    throw ProblemError("expected an integer in [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "], got '" + s + "'",
                       line);
  }
}

}  // namespace

Strategy ProblemFile::strategy() const {
  Strategy s;
  s.kind = strategy_kind;
  s.script = script;
  s.max_depth = max_depth;
  return s;
}

DarbouxIntegral ProblemFile::integral() const {
  std::vector<DarbouxFactor> fs;
  fs.reserve(factors.size());
  for (const auto& f : factors)
    fs.push_back(DarbouxFactor{parse_polynomial(f.expr, variables), f.exponent});
  return DarbouxIntegral(variables, std::move(fs));
}

MonomialSystem ProblemFile::imported_system() const {
  std::vector<std::vector<Rational>> rows;
  std::vector<Jet> units;
  for (const auto& row : imported) {
    rows.push_back(row.exponents);
    units.push_back(Jet(parse_polynomial(row.unit_expr, variables), jet_order));
  }
  return import_system(variables, divisors, rows, units, jet_order);
}

ProblemFile parse_problem(const std::string& text) {
  ProblemFile p;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  bool saw_variables = false;
  while (std::getline(is, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) throw ProblemError("expected 'key = value'", line);
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (value.empty()) throw ProblemError("empty value for '" + key + "'", line);

    if (key == "variables") {
      p.variables = split_words(value);
      if (p.variables.size() < 2) throw ProblemError("need at least two variables", line);
      saw_variables = true;
    } else if (key == "factor") {
      const auto parts = split_on(value, '|');
      if (parts.size() != 2) throw ProblemError("factor needs 'EXPR | EXPONENT'", line);
      FactorSpec f{parts[0], parse_rationals(parts[1], line).at(0)};
      if (f.exponent <= 0) throw ProblemError("factor exponent must be positive", line);
      p.factors.push_back(std::move(f));
    } else if (key == "gamma") {
      const auto parts = split_on(value, '|');
      ImportRow row;
      row.exponents = parse_rationals(parts[0], line);
      row.unit_expr = parts.size() > 1 ? parts[1] : "1";
      if (parts.size() > 2) throw ProblemError("gamma needs 'EXPONENTS [| UNIT]'", line);
      p.imported.push_back(std::move(row));
    } else if (key == "jet_order") {
      p.jet_order = parse_int(value, line, 1, 32);
    } else if (key == "max_depth") {
      p.max_depth = parse_int(value, line, 1, 64);
    } else if (key == "strategy") {
      if (value == "manual")
        p.strategy_kind = Strategy::Kind::manual;
      else if (value == "auto-origin")
        p.strategy_kind = Strategy::Kind::auto_origin;
      else if (value == "auto-coordinate")
        p.strategy_kind = Strategy::Kind::auto_coordinate;
      else
        throw ProblemError("unknown strategy '" + value + "'", line);
    } else if (key == "center") {
      const auto parts = split_on(value, '|');
      if (parts.size() != 2) throw ProblemError("center needs 'CHART_ID | VARS'", line);
      p.script.push_back(ScriptEntry{parts[0], split_words(parts[1])});
    } else if (key == "divisors") {
      p.divisors = split_words(value);
    } else if (key == "audit") {
      const auto parts = split_on(value, '|');
      if (parts.size() != 2) throw ProblemError("audit needs 'LABEL | EXPONENTS'", line);
      p.audits.push_back(AuditCandidate{parts[0], parse_rationals(parts[1], line)});
    } else if (key == "gauge") {
      p.gauge = split_words(value);
    } else if (key == "nc_point") {
      const auto parts = split_on(value, '|');
      if (parts.size() != 2) throw ProblemError("nc_point needs 'CHART_ID | POINT'", line);
      p.nc_points.emplace_back(parts[0], parse_rationals(parts[1], line));
    } else {
      throw ProblemError("unknown key '" + key + "'", line);
    }
  }

  if (!saw_variables) throw ProblemError("missing 'variables'", line);
  if (p.factors.empty() && p.imported.empty())
    throw ProblemError("need either 'factor' lines or 'gamma' lines", line);
  if (!p.factors.empty() && !p.imported.empty())
    throw ProblemError("'factor' and 'gamma' lines cannot be mixed", line);
  if (!p.imported.empty() && p.imported.size() + 1 != p.variables.size())
    throw ProblemError("import needs exactly " + std::to_string(p.variables.size() - 1) +
                           " gamma rows",
                       line);
  for (const auto& row : p.imported) {
    if (row.exponents.size() != p.variables.size())
      throw ProblemError("gamma row length must match the variable count", line);
  }
  for (const auto& a : p.audits) {
    if (a.exponents.size() != p.variables.size())
      throw ProblemError("audit exponent count must match the variable count", line);
  }
  for (const auto& d : p.divisors) {
    if (std::find(p.variables.begin(), p.variables.end(), d) == p.variables.end())
      throw ProblemError("divisor '" + d + "' is not a variable", line);
  }
  if (p.gauge) {
    for (const auto& g : *p.gauge) {
      if (std::find(p.variables.begin(), p.variables.end(), g) == p.variables.end())
        throw ProblemError("gauge variable '" + g + "' is not a variable", line);
    }
  }
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::vector<ScriptEntry> parse_script(const std::string& text) {
  std::vector<ScriptEntry> out;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    const auto parts = split_on(stripped, '|');
    if (parts.size() != 2) throw ProblemError("script line needs 'CHART_ID | VARS'", line);
    out.push_back(ScriptEntry{parts[0], split_words(parts[1])});
  }
  return out;
}

}  // namespace darboux
