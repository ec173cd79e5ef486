#pragma once

#include <string>
#include <vector>

#include "darboux/polynomial.hpp"

namespace darboux {

// Multivariate power series truncated at a fixed total degree N. Arithmetic
// re-truncates, so every identity holds modulo degree N+1.
class Jet {
 public:
  Jet(Polynomial body, int order);

  static Jet constant(std::vector<std::string> variables, const Rational& c, int order);
  static Jet one(std::vector<std::string> variables, int order);

  int order() const { return order_; }
  const Polynomial& body() const { return body_; }
  const std::vector<std::string>& variables() const { return body_.variables(); }
  Rational constant_term() const { return body_.constant_term(); }
  bool is_one() const;

  Jet operator+(const Jet& other) const;
  Jet operator-(const Jet& other) const;
  Jet operator*(const Jet& other) const;
  Jet operator*(const Rational& c) const;
  bool operator==(const Jet& other) const;

  // The operator z_v * d/dz_v. Degree-preserving, so no precision is lost.
  Jet theta(const std::string& name) const;

  Jet truncate(int new_order) const;

  // Series of a unit with constant term exactly 1 (geometric series).
  Jet invert() const;
  // Requires zero constant term.
  Jet exp() const;
  // Requires constant term exactly 1.
  Jet log() const;
  // (1 + h)^c by the binomial series; requires constant term exactly 1.
  Jet pow(const Rational& c) const;

  std::string str() const { return body_.str(); }

 private:
  void check_compatible(const Jet& other) const;

  int order_;
  Polynomial body_;
};

}  // namespace darboux
