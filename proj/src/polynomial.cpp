#include "darboux/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace darboux {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
  }
}

int Monomial::total_degree() const {
  int d = 0;
  for (int e : exp_) d += e;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (exp_.size() != other.exp_.size()) throw std::invalid_argument("monomial length mismatch");
  std::vector<int> out(exp_.size());
  for (std::size_t i = 0; i < exp_.size(); ++i) out[i] = exp_[i] + other.exp_[i];
  return Monomial(std::move(out));
}

bool GradedLexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a.exponents() > b.exponents();
}

Polynomial::Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
  Polynomial p(std::move(variables));
  if (c != 0) p.terms_.emplace(Monomial::unit(p.vars_.size()), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, const std::string& name) {
  Polynomial p(std::move(variables));
  std::vector<int> e(p.vars_.size(), 0);
  e[p.variable_index(name)] = 1;
  p.terms_.emplace(Monomial(std::move(e)), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, const Monomial& m,
                                const Rational& c) {
  Polynomial p(std::move(variables));
  if (m.size() != p.vars_.size()) throw std::invalid_argument("monomial length mismatch");
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

std::size_t Polynomial::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  throw std::invalid_argument("unknown variable '" + name + "'");
}

bool Polynomial::has_variable(const std::string& name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.total_degree();  // descending graded order
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial::unit(vars_.size())); }

bool Polynomial::depends_on(const std::string& name) const {
  const std::size_t i = variable_index(name);
  for (const auto& [m, c] : terms_) {
    if (m.exponent(i) != 0) return true;
  }
  return false;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::check_same_roster(const Polynomial& other) const {
  if (vars_ != other.vars_) throw std::invalid_argument("variable roster mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_roster(other);
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_same_roster(other);
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_roster(other);
  Polynomial out(vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(vars_);
  if (c == 0) return out;
  for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return vars_ == other.vars_ &&
         std::equal(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end());
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = Polynomial::constant(vars_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    if (k >>= 1U) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(const std::string& name) const {
  const std::size_t i = variable_index(name);
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    std::vector<int> exps = m.exponents();
    exps[i] = e - 1;
    out.add_term(Monomial(std::move(exps)), c * e);
  }
  return out;
}

Polynomial Polynomial::substitute(const std::vector<std::string>& target_variables,
                                  const std::map<std::string, Polynomial>& bindings) const {
  std::vector<Polynomial> images;
  images.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = bindings.find(v);
    if (it != bindings.end()) {
      if (it->second.variables() != target_variables)
        throw std::invalid_argument("binding for '" + v + "' is over a different roster");
      images.push_back(it->second);
    } else {
      images.push_back(Polynomial::variable(target_variables, v));
    }
  }
  Polynomial out(target_variables);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(target_variables, c);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const int e = m.exponent(i);
      if (e > 0) term = term * images[i].pow(static_cast<unsigned>(e));
    }
    out = out + term;
  }
  return out;
}

Polynomial Polynomial::truncate(int max_degree) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.total_degree() <= max_degree) out.terms_.emplace(m, c);
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point length mismatch");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int e = 0; e < m.exponent(i); ++e) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

std::pair<Monomial, Polynomial> Polynomial::monomial_content() const {
  if (terms_.empty()) throw std::domain_error("monomial content of the zero polynomial");
  std::vector<int> beta = terms_.begin()->first.exponents();
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < beta.size(); ++i) beta[i] = std::min(beta[i], m.exponent(i));
  }
  Polynomial q(vars_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e = m.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= beta[i];
    q.terms_.emplace(Monomial(std::move(e)), c);
  }
  return {Monomial(std::move(beta)), q};
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& variables) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    if (!first) os << "*";
    os << variables[i];
    if (e > 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    const std::string mstr = monomial_str(m, vars_);
    if (mstr.empty()) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << "*";
      os << mstr;
    }
    first = false;
  }
  return os.str();
}

}  // namespace darboux
