#include "darboux/unitelim.hpp"

#include <algorithm>

namespace darboux {

ChangeOfVariables ChangeOfVariables::identity(std::vector<std::string> variables, int order) {
  ChangeOfVariables c;
  c.order = order;
  c.variables = variables;
  for (std::size_t j = 0; j < c.variables.size(); ++j)
    c.factors.push_back(Jet::one(c.variables, order));
  return c;
}

MonomialSystem normalize_units(const MonomialSystem& system) {
  MonomialSystem out = system;
  for (std::size_t i = 0; i < out.units.size(); ++i) {
    const Rational c = out.units[i].constant_term();
    if (c == 0) throw std::domain_error("unit " + std::to_string(i) + " has zero constant term");
    if (c == 1) continue;
    out.units[i] = out.units[i] * (Rational(1) / c);
    out.dropped[i].value *= c;
  }
  return out;
}

namespace {

// Greedy left-to-right choice of a maximal-rank column set.
std::vector<std::size_t> leftmost_columns(const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::size_t> chosen;
  const std::size_t cols = rows[0].size();
  for (std::size_t j = 0; j < cols && chosen.size() < rows.size(); ++j) {
    std::vector<std::vector<Rational>> sub(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t c : chosen) sub[i].push_back(rows[i][c]);
      sub[i].push_back(rows[i][j]);
    }
    if (rank_of(sub) == static_cast<int>(chosen.size()) + 1) chosen.push_back(j);
  }
  return chosen;
}

// Solves the square rational system a * w = rhs with jet right-hand sides by
// Gaussian elimination; the matrix must be invertible (guaranteed by the
// column choice).
std::vector<Jet> solve_linear_jets(std::vector<std::vector<Rational>> a, std::vector<Jet> rhs) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (a[pivot][k] == 0) ++pivot;
    std::swap(a[pivot], a[k]);
    std::swap(rhs[pivot], rhs[k]);
    const Rational inv = Rational(1) / a[k][k];
    for (auto& v : a[k]) v *= inv;
    rhs[k] = rhs[k] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational f = a[i][k];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
      rhs[i] = rhs[i] - rhs[k] * f;
    }
  }
  return rhs;
}

}  // namespace

EliminationResult eliminate_units(const MonomialSystem& system, int order,
                                  const std::optional<std::vector<std::size_t>>& gauge) {
  const auto rows = system.exponent_rows();
  const std::size_t n_rows = rows.size();
  const int rank = rank_of(rows);
  if (rank < static_cast<int>(n_rows)) throw NonGeneric(rank, static_cast<int>(n_rows));

  std::vector<std::size_t> columns;
  if (gauge) {
    columns = *gauge;
    if (columns.size() != n_rows) throw std::invalid_argument("gauge needs one column per row");
    std::vector<std::vector<Rational>> sub(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i) {
      for (std::size_t c : columns) {
        if (c >= rows[i].size()) throw std::invalid_argument("gauge column out of range");
        sub[i].push_back(rows[i][c]);
      }
    }
    if (rank_of(sub) != static_cast<int>(n_rows))
      throw std::invalid_argument("gauge columns are not independent");
  } else {
    columns = leftmost_columns(rows);
  }

  const auto& vars = system.chart.roster();
  std::vector<Jet> logs;
  logs.reserve(n_rows);
  for (const auto& u : system.units) {
    if (u.constant_term() != 1)
      throw std::domain_error("eliminate_units requires normalized units");
    logs.push_back(u.truncate(order).log());
  }

  std::vector<std::vector<Rational>> a(n_rows, std::vector<Rational>(n_rows));
  for (std::size_t i = 0; i < n_rows; ++i) {
    for (std::size_t j = 0; j < n_rows; ++j) a[i][j] = rows[i][columns[j]];
  }
  const std::vector<Jet> w = solve_linear_jets(std::move(a), logs);

  EliminationResult result;
  result.change.order = order;
  result.change.variables = vars;
  result.change.factors.assign(vars.size(), Jet::one(vars, order));
  for (std::size_t j = 0; j < columns.size(); ++j)
    result.change.factors[columns[j]] = w[j].exp();
  result.columns = columns;

  // Independent verification: rebuild each unit from the solved change.
  for (std::size_t i = 0; i < n_rows; ++i) {
    Jet rebuilt = Jet::one(vars, order);
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (rows[i][j] == 0) continue;
      rebuilt = rebuilt * result.change.factors[j].pow(rows[i][j]);
    }
    result.unit_match.push_back(rebuilt == system.units[i].truncate(order));
  }

  result.transformed = system;
  for (auto& u : result.transformed.units) u = Jet::one(vars, order);
  result.transformed.jet_order = order;
  return result;
}

PushedField push_forward_field(const LogLinearField& field, const ChangeOfVariables& change) {
  const auto& vars = change.variables;
  const std::size_t d = vars.size();
  if (field.alpha.size() != d) throw std::invalid_argument("field length mismatch");
  const int order = change.order;

  // theta_l(V_j) and 1/V_j, precomputed.
  std::vector<Jet> inv;
  std::vector<std::vector<Jet>> theta;
  inv.reserve(d);
  theta.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    inv.push_back(change.factors[j].invert());
    std::vector<Jet> row;
    row.reserve(d);
    for (std::size_t l = 0; l < d; ++l) row.push_back(change.factors[j].theta(vars[l]));
    theta.push_back(std::move(row));
  }

  // X(z_j) = z_j (alpha_j + g_j) with g_j solving
  //   g_j = -V_j^{-1} sum_l (alpha_l + g_l) theta_l(V_j).
  // Each pass is exact one degree further, so `order` passes saturate the jet.
  std::vector<Jet> g(d, Jet(Polynomial(vars), order));
  for (int pass = 0; pass < order; ++pass) {
    std::vector<Jet> next;
    next.reserve(d);
    bool changed = false;
    for (std::size_t j = 0; j < d; ++j) {
      Jet sum(Polynomial(vars), order);
      for (std::size_t l = 0; l < d; ++l) {
        if (theta[j][l].body().is_zero()) continue;
        sum = sum + (theta[j][l] * field.alpha[l]) + (theta[j][l] * g[l]);
      }
      Jet candidate = (inv[j] * sum) * Rational(-1);
      if (!(candidate == g[j])) changed = true;
      next.push_back(std::move(candidate));
    }
    g = std::move(next);
    if (!changed) break;
  }

  return PushedField{vars, field.alpha, std::move(g)};
}

bool field_annihilates(const PushedField& field, const std::vector<Rational>& gamma,
                       const Jet& unit) {
  const auto& vars = field.variables;
  if (gamma.size() != vars.size()) throw std::invalid_argument("gamma length mismatch");
  const int order = field.corrections.empty() ? unit.order() : field.corrections[0].order();
  const Jet u = unit.truncate(order);

  // X(z^gamma u) / z^gamma = (sum_j c_j gamma_j) u + sum_j c_j theta_j(u),
  // with c_j = linear_j + correction_j.
  Jet residue(Polynomial(vars), order);
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const Jet cj = field.corrections[j] + Jet::constant(vars, field.linear[j], order);
    if (gamma[j] != 0) residue = residue + (cj * u) * gamma[j];
    const Jet tj = u.theta(vars[j]);
    if (!tj.body().is_zero()) residue = residue + cj * tj;
  }
  return residue.body().is_zero();
}

Transversality transversality_report(const PushedField& field, const std::string& divisor_var) {
  const auto it = std::find(field.variables.begin(), field.variables.end(), divisor_var);
  if (it == field.variables.end())
    throw std::invalid_argument("unknown divisor variable '" + divisor_var + "'");
  const std::size_t idx = static_cast<std::size_t>(it - field.variables.begin());
  const Rational c = field.linear[idx];
  Transversality t;
  t.transversal = (c != 0);
  t.detail = "linear part along " + divisor_var + " is " + to_string(c);
  return t;
}

}  // namespace darboux
