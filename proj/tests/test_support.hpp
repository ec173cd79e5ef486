#pragma once

#include <random>
#include <string>
#include <vector>

#include "darboux/jet.hpp"
#include "darboux/polynomial.hpp"

namespace testsupport {

inline darboux::Rational random_rational(std::mt19937& rng, int num_range = 6,
                                         int den_range = 3) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  darboux::Rational r(num(rng));
  r /= den(rng);
  return r;
}

inline darboux::Rational random_nonzero_rational(std::mt19937& rng, int num_range = 6,
                                                 int den_range = 3) {
  for (;;) {
    auto r = random_rational(rng, num_range, den_range);
    if (r != 0) return r;
  }
}

inline darboux::Polynomial random_polynomial(std::mt19937& rng,
                                             const std::vector<std::string>& vars,
                                             int max_degree = 4, int max_terms = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  darboux::Polynomial p(vars);
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(vars.size(), 0);
    int budget = max_degree;
    for (auto& ei : e) {
      std::uniform_int_distribution<int> d(0, budget);
      ei = d(rng);
      budget -= ei;
    }
    p = p + darboux::Polynomial::monomial(vars, darboux::Monomial(e), random_rational(rng));
  }
  return p;
}

inline darboux::Polynomial random_nonzero_polynomial(std::mt19937& rng,
                                                     const std::vector<std::string>& vars,
                                                     int max_degree = 4, int max_terms = 5) {
  for (;;) {
    auto p = random_polynomial(rng, vars, max_degree, max_terms);
    if (!p.is_zero()) return p;
  }
}

// 1 + (terms of degree 1..order with small rational coefficients)
inline darboux::Jet random_unit_jet(std::mt19937& rng, const std::vector<std::string>& vars,
                                    int order, int max_terms = 4) {
  darboux::Polynomial body =
      darboux::Polynomial::constant(vars, darboux::Rational(1));
  std::uniform_int_distribution<int> nterms(1, max_terms);
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(vars.size(), 0);
    int budget = order;
    for (auto& ei : e) {
      std::uniform_int_distribution<int> d(0, budget);
      ei = d(rng);
      budget -= ei;
    }
    if (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; })) e[0] = 1;
    body = body + darboux::Polynomial::monomial(vars, darboux::Monomial(e),
                                                random_rational(rng, 4, 3));
  }
  // Make sure the constant stayed 1 even if a term collided with it.
  body = body - darboux::Polynomial::constant(vars, body.constant_term()) +
         darboux::Polynomial::constant(vars, darboux::Rational(1));
  return darboux::Jet(body, order);
}

}  // namespace testsupport
