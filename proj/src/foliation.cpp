#include "darboux/foliation.hpp"

#include <stdexcept>
#include <utility>

namespace darboux {

DarbouxIntegral::DarbouxIntegral(std::vector<std::string> variables,
                                 std::vector<DarbouxFactor> factors)
    : vars_(std::move(variables)), factors_(std::move(factors)) {
  if (vars_.size() < 2) throw std::invalid_argument("roster needs the two plane variables");
  if (factors_.empty()) throw std::invalid_argument("at least one factor required");
  for (const auto& f : factors_) {
    if (f.poly.variables() != vars_) throw std::invalid_argument("factor roster mismatch");
    if (f.exponent <= 0) throw std::invalid_argument("factor exponents must be positive");
    if (f.poly.is_zero()) throw std::invalid_argument("zero factor");
  }
}

std::vector<std::string> DarbouxIntegral::parameters() const {
  return {vars_.begin() + 2, vars_.end()};
}

bool DarbouxIntegral::all_integer_exponents() const {
  for (const auto& f : factors_) {
    if (!is_integer(f.exponent)) return false;
  }
  return true;
}

OneForm::OneForm(std::vector<std::string> variables, std::vector<Polynomial> coefficients)
    : vars_(std::move(variables)), coeffs_(std::move(coefficients)) {
  if (vars_.size() != coeffs_.size()) throw std::invalid_argument("coefficient count mismatch");
  for (const auto& c : coeffs_) {
    if (c.variables() != vars_) throw std::invalid_argument("coefficient roster mismatch");
  }
}

const Polynomial& OneForm::coefficient(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return coeffs_[i];
  }
  throw std::invalid_argument("unknown variable '" + name + "'");
}

OneForm darboux_one_form(const DarbouxIntegral& integral) {
  const auto& vars = integral.variables();
  const auto& factors = integral.factors();
  const std::size_t k = factors.size();

  std::vector<Rational> exponents;
  exponents.reserve(k);
  for (const auto& f : factors) exponents.push_back(f.exponent);
  exponents = make_primitive(exponents);  // primitive positive integers

  // cofactor(i) = prod_{j != i} P_j; built with prefix/suffix products.
  std::vector<Polynomial> prefix(k + 1, Polynomial::constant(vars, Rational(1)));
  std::vector<Polynomial> suffix(k + 1, Polynomial::constant(vars, Rational(1)));
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * factors[i].poly;
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * factors[i].poly;

  std::vector<Polynomial> coeffs;
  coeffs.reserve(vars.size());
  for (const auto& v : vars) {
    Polynomial c(vars);
    for (std::size_t i = 0; i < k; ++i) {
      const Polynomial d = factors[i].poly.derivative(v);
      if (d.is_zero()) continue;
      c = c + d * (prefix[i] * suffix[i + 1]) * exponents[i];
    }
    coeffs.push_back(c);
  }
  return OneForm(vars, std::move(coeffs));
}

WedgeSystem wedge_system(const OneForm& omega) {
  if (omega.variables().size() < 2)
    throw std::invalid_argument("one-form needs the two plane variables");
  return WedgeSystem{omega.coefficients()[0], omega.coefficients()[1]};
}

CheckStatus verify_integrating_factor(const DarbouxIntegral& integral, const OneForm& omega) {
  if (!integral.all_integer_exponents()) return CheckStatus::skipped;
  const auto& vars = integral.variables();

  Polynomial h = Polynomial::constant(vars, Rational(1));
  Polynomial phi = Polynomial::constant(vars, Rational(1));
  for (const auto& f : integral.factors()) {
    const unsigned a = static_cast<unsigned>(to_integer(f.exponent));
    h = h * f.poly.pow(a);
    phi = phi * f.poly.pow(a - 1);
  }

  bool have_c = false;
  Rational c(0);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Polynomial lhs = phi * omega.coefficients()[i];
    const Polynomial rhs = h.derivative(vars[i]);
    if (rhs.is_zero()) {
      if (!lhs.is_zero()) return CheckStatus::failed;
      continue;
    }
    if (lhs.is_zero()) return CheckStatus::failed;
    if (!have_c) {
      const Rational rhs_lead = rhs.coefficient(lhs.terms().begin()->first);
      if (rhs_lead == 0) return CheckStatus::failed;
      c = lhs.terms().begin()->second / rhs_lead;
      have_c = true;
    }
    if (!(lhs == rhs * c)) return CheckStatus::failed;
  }
  return CheckStatus::passed;
}

}  // namespace darboux
