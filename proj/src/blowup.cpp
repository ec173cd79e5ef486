#include "darboux/blowup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace darboux {

Chart Chart::root(std::vector<std::string> roster, std::vector<std::string> divisor_vars) {
  Chart c;
  c.id_ = "root";
  c.roster_ = roster;
  c.root_roster_ = roster;
  for (const auto& v : roster) c.map_from_root_.push_back(Polynomial::variable(roster, v));
  for (const auto& d : divisor_vars) {
    if (std::find(roster.begin(), roster.end(), d) == roster.end())
      throw std::invalid_argument("divisor variable '" + d + "' not in roster");
  }
  c.divisor_vars_ = std::move(divisor_vars);
  return c;
}

Polynomial Chart::pullback(const Polynomial& p) const {
  if (p.variables() != root_roster_) throw std::invalid_argument("pullback: roster mismatch");
  std::map<std::string, Polynomial> bindings;
  for (std::size_t i = 0; i < root_roster_.size(); ++i)
    bindings.emplace(root_roster_[i], map_from_root_[i]);
  return p.substitute(roster_, bindings);
}

std::vector<Chart> blow_up(const Chart& chart, const Center& center) {
  if (center.vars.size() < 2) throw std::invalid_argument("center needs at least 2 variables");
  std::set<std::string> seen;
  for (const auto& v : center.vars) {
    if (std::find(chart.roster_.begin(), chart.roster_.end(), v) == chart.roster_.end())
      throw std::invalid_argument("center variable '" + v + "' not in chart roster");
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate center variable '" + v + "'");
  }

  // Distinguished variables taken in roster order for deterministic ids.
  std::vector<std::string> ordered;
  for (const auto& v : chart.roster_) {
    if (seen.count(v)) ordered.push_back(v);
  }

  std::vector<Chart> children;
  children.reserve(ordered.size());
  for (const auto& zj : ordered) {
    Chart child;
    child.roster_ = chart.roster_;
    child.root_roster_ = chart.root_roster_;
    child.parent_id_ = chart.id_;
    child.depth_ = chart.depth_ + 1;
    child.id_ = chart.id_ + "/" + std::to_string(chart.depth_) + ":" + zj;

    const Polynomial pj = Polynomial::variable(child.roster_, zj);
    std::map<std::string, Polynomial> bindings;
    for (const auto& v : ordered) {
      if (v == zj) continue;
      bindings.emplace(v, pj * Polynomial::variable(child.roster_, v));
    }
    for (const auto& v : chart.roster_) {
      if (!bindings.count(v)) bindings.emplace(v, Polynomial::variable(child.roster_, v));
    }
    child.step_ = bindings;

    child.map_from_root_.reserve(chart.map_from_root_.size());
    for (const auto& m : chart.map_from_root_)
      child.map_from_root_.push_back(m.substitute(child.roster_, bindings));

    std::set<std::string> divisors(chart.divisor_vars_.begin(), chart.divisor_vars_.end());
    divisors.insert(zj);
    for (const auto& v : child.roster_) {
      if (divisors.count(v)) child.divisor_vars_.push_back(v);
    }
    children.push_back(std::move(child));
  }
  return children;
}

NormalCrossings normal_crossings_at_origin(const Polynomial& p) {
  auto [beta, q] = p.monomial_content();
  const Rational c = q.constant_term();
  return NormalCrossings{beta, q, c, c != 0};
}

NormalCrossings normal_crossings_at_point(const Polynomial& p,
                                          const std::vector<Rational>& point) {
  const auto& vars = p.variables();
  if (point.size() != vars.size()) throw std::invalid_argument("point length mismatch");
  std::map<std::string, Polynomial> shift;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    shift.emplace(vars[i], Polynomial::variable(vars, vars[i]) +
                               Polynomial::constant(vars, point[i]));
  }
  return normal_crossings_at_origin(p.substitute(vars, shift));
}

}  // namespace darboux
