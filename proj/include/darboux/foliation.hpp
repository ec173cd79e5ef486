#pragma once

#include <string>
#include <vector>

#include "darboux/polynomial.hpp"

namespace darboux {

struct DarbouxFactor {
  Polynomial poly;
  Rational exponent;  // > 0
};

// First integral of the product form P_1^{a_1} * ... * P_k^{a_k} over a roster
// whose first two variables are the distinguished plane coordinates and whose
// remaining n variables are the deformation parameters.
class DarbouxIntegral {
 public:
  DarbouxIntegral(std::vector<std::string> variables, std::vector<DarbouxFactor> factors);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<DarbouxFactor>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  std::size_t parameter_count() const { return vars_.size() - 2; }  // n
  const std::string& x() const { return vars_[0]; }
  const std::string& y() const { return vars_[1]; }
  std::vector<std::string> parameters() const;  // the epsilon roster

  bool all_integer_exponents() const;

 private:
  std::vector<std::string> vars_;
  std::vector<DarbouxFactor> factors_;
};

// Differential one-form sum_v coeff(v) d(v) with polynomial coefficients,
// aligned with a roster.
class OneForm {
 public:
  OneForm(std::vector<std::string> variables, std::vector<Polynomial> coefficients);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  const Polynomial& coefficient(const std::string& name) const;

 private:
  std::vector<std::string> vars_;
  std::vector<Polynomial> coeffs_;
};

// Coefficients of dx ^ de_1 ^ ... ^ de_n and dy ^ de_1 ^ ... ^ de_n in the
// wedge of the one-form with all the d(eps_i); that orientation is taken as
// positive.
struct WedgeSystem {
  Polynomial q1;
  Polynomial q2;
};

// The one-form with coefficient of d(v) equal to
//   sum_i b_i (dP_i/dv) prod_{j != i} P_j
// where b is the exponent vector scaled to a primitive integer vector
// (multiplying by the lcm of denominators and dividing by the gcd of
// numerators; a positive rescaling of the exponents does not change the
// foliation). Division-free; H itself is never formed.
OneForm darboux_one_form(const DarbouxIntegral& integral);

WedgeSystem wedge_system(const OneForm& omega);

enum class CheckStatus { passed, failed, skipped };

// Forms H and the integrating factor phi = prod P_i^{a_i - 1} explicitly and
// tests phi * omega_v == c * dH/dv for one common rational c over all roster
// variables. Only available for integer exponents; otherwise `skipped`.
CheckStatus verify_integrating_factor(const DarbouxIntegral& integral, const OneForm& omega);

}  // namespace darboux
