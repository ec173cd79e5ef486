#include "darboux/jet.hpp"

#include <stdexcept>
#include <utility>

namespace darboux {

Jet::Jet(Polynomial body, int order) : order_(order), body_(std::move(body)) {
  if (order_ < 1) throw std::invalid_argument("jet order must be positive");
  body_ = body_.truncate(order_);
}

Jet Jet::constant(std::vector<std::string> variables, const Rational& c, int order) {
  return Jet(Polynomial::constant(std::move(variables), c), order);
}

Jet Jet::one(std::vector<std::string> variables, int order) {
  return constant(std::move(variables), Rational(1), order);
}

bool Jet::is_one() const {
  return body_ == Polynomial::constant(body_.variables(), Rational(1));
}

void Jet::check_compatible(const Jet& other) const {
  if (order_ != other.order_) throw std::invalid_argument("jet order mismatch");
  if (body_.variables() != other.body_.variables())
    throw std::invalid_argument("jet roster mismatch");
}

Jet Jet::operator+(const Jet& other) const {
  check_compatible(other);
  return Jet(body_ + other.body_, order_);
}

Jet Jet::operator-(const Jet& other) const {
  check_compatible(other);
  return Jet(body_ - other.body_, order_);
}

Jet Jet::operator*(const Jet& other) const {
  check_compatible(other);
  return Jet((body_ * other.body_).truncate(order_), order_);
}

Jet Jet::operator*(const Rational& c) const { return Jet(body_ * c, order_); }

bool Jet::operator==(const Jet& other) const {
  return order_ == other.order_ && body_ == other.body_;
}

Jet Jet::theta(const std::string& name) const {
  return Jet(body_.derivative(name) * Polynomial::variable(body_.variables(), name), order_);
}

Jet Jet::truncate(int new_order) const { return Jet(body_, new_order); }

Jet Jet::invert() const {
  if (constant_term() != 1) throw std::domain_error("invert: constant term must be 1");
  const Polynomial h = body_ - Polynomial::constant(body_.variables(), Rational(1));
  Polynomial acc = Polynomial::constant(body_.variables(), Rational(1));
  Polynomial hk = acc;
  for (int k = 1; k <= order_; ++k) {
    hk = (hk * h).truncate(order_);
    if (hk.is_zero()) break;
    acc = (k % 2 == 0) ? acc + hk : acc - hk;
  }
  return Jet(acc, order_);
}

Jet Jet::exp() const {
  if (constant_term() != 0) throw std::domain_error("exp: constant term must be 0");
  Polynomial acc = Polynomial::constant(body_.variables(), Rational(1));
  Polynomial wk = acc;
  Rational factorial(1);
  for (int k = 1; k <= order_; ++k) {
    wk = (wk * body_).truncate(order_);
    if (wk.is_zero()) break;
    factorial *= k;
    acc = acc + wk * (Rational(1) / factorial);
  }
  return Jet(acc, order_);
}

Jet Jet::log() const {
  if (constant_term() != 1) throw std::domain_error("log: constant term must be 1");
  const Polynomial h = body_ - Polynomial::constant(body_.variables(), Rational(1));
  Polynomial acc(body_.variables());
  Polynomial hk = Polynomial::constant(body_.variables(), Rational(1));
  for (int k = 1; k <= order_; ++k) {
    hk = (hk * h).truncate(order_);
    if (hk.is_zero()) break;
    const Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
    acc = acc + hk * c;
  }
  return Jet(acc, order_);
}

Jet Jet::pow(const Rational& c) const {
  if (constant_term() != 1) throw std::domain_error("pow: constant term must be 1");
  const Polynomial h = body_ - Polynomial::constant(body_.variables(), Rational(1));
  Polynomial acc = Polynomial::constant(body_.variables(), Rational(1));
  Polynomial hk = acc;
  Rational binom(1);  // binom(c, k), built incrementally
  for (int k = 1; k <= order_; ++k) {
    hk = (hk * h).truncate(order_);
    if (hk.is_zero()) break;
    binom *= (c - (k - 1));
    binom /= k;
    acc = acc + hk * binom;
  }
  return Jet(acc, order_);
}

}  // namespace darboux
