#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "darboux/rational.hpp"

namespace darboux {

// Exponent vector of a power product. The length always equals the variable
// count of the owning polynomial's roster.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial unit(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  const std::vector<int>& exponents() const { return exp_; }
  int exponent(std::size_t i) const { return exp_[i]; }
  std::size_t size() const { return exp_.size(); }
  int total_degree() const;
  bool is_unit() const;

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exp_ == other.exp_; }

 private:
  std::vector<int> exp_;
};

// Graded lexicographic, descending: higher total degree first, ties broken by
// the earlier variable carrying the larger exponent. Map iteration order is
// therefore the canonical printing order.
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact multivariate polynomial over the rationals with an explicit, ordered
// variable roster. All binary operations require identical rosters; callers
// align rosters first.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexDescending>;

  Polynomial() = default;  // zero polynomial over the empty roster
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(std::vector<std::string> variables, const Rational& c);
  static Polynomial variable(std::vector<std::string> variables, const std::string& name);
  static Polynomial monomial(std::vector<std::string> variables, const Monomial& m,
                             const Rational& c);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t variable_index(const std::string& name) const;  // throws on unknown name
  bool has_variable(const std::string& name) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;  // -1 for the zero polynomial
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool depends_on(const std::string& name) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& other) const;

  Polynomial pow(unsigned k) const;

  Polynomial derivative(const std::string& name) const;

  // Ring homomorphism determined by the bindings. Every binding value must
  // live over target_variables; roster variables without a binding map to the
  // variable of the same name, which must then exist in the target roster.
  Polynomial substitute(const std::vector<std::string>& target_variables,
                        const std::map<std::string, Polynomial>& bindings) const;

  // Drops every term of total degree > max_degree (max_degree < 0 gives 0).
  Polynomial truncate(int max_degree) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  // Largest monomial dividing every term, and the cofactor: *this = z^beta * q.
  // q has a zero exponent somewhere in every variable. Throws on zero input.
  std::pair<Monomial, Polynomial> monomial_content() const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  void check_same_roster(const Polynomial& other) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::string monomial_str(const Monomial& m, const std::vector<std::string>& variables);

}  // namespace darboux
