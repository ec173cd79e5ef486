#include "darboux/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace darboux {

namespace {

Integer parse_integer(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) throw std::invalid_argument("sign without digits: '" + text + "'");
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("bad integer literal: '" + text + "'");
  }
  return Integer(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rational r(num);
  r /= Rational(den);
  return r;
}

std::string to_string(const Rational& r) { return r.str(); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Integer to_integer(const Rational& r) {
  if (!is_integer(r)) throw std::invalid_argument("not an integer: " + to_string(r));
  return numerator(r);
}

Rational pow_integer(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero base with negative exponent");
    return 1 / pow_integer(base, -exp);
  }
  Rational result(1);
  Rational b = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e > 0) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1UL;
  }
  return result;
}

std::optional<Integer> exact_nth_root(const Integer& v, unsigned n) {
  if (n == 0) throw std::invalid_argument("zeroth root");
  if (n == 1 || v == 0 || v == 1) return v;
  if (v < 0) {
    if (n % 2 == 0) return std::nullopt;
    auto r = exact_nth_root(-v, n);
    if (!r) return std::nullopt;
    return -*r;
  }
  Integer lo = 1, hi = 2;
  while (boost::multiprecision::pow(hi, n) < v) hi <<= 1;
  while (lo < hi) {
    Integer mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, n) <= v)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (boost::multiprecision::pow(lo, n) == v) return lo;
  return std::nullopt;
}

std::optional<Rational> pow_exact(const Rational& base, const Rational& exp) {
  if (is_integer(exp)) {
    const Integer e = to_integer(exp);
    if (e < -1000000 || e > 1000000) throw std::domain_error("exponent out of range");
    return pow_integer(base, static_cast<long>(e));
  }
  if (base == 0) return Rational(0);
  const Integer p = numerator(exp);
  const Integer q = denominator(exp);  // > 1 here
  const unsigned n = static_cast<unsigned>(q);
  const auto rn = exact_nth_root(numerator(base), n);
  const auto rd = exact_nth_root(denominator(base), n);
  if (!rn || !rd) return std::nullopt;
  Rational root(*rn);
  root /= Rational(*rd);
  return pow_integer(root, static_cast<long>(p));
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rational> make_primitive(const std::vector<Rational>& v) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  Integer den_lcm = 1;
  for (const auto& r : v) den_lcm = lcm(den_lcm, denominator(r));
  Integer num_gcd = 0;
  for (const auto& r : v) num_gcd = gcd(num_gcd, Integer(numerator(r) * (den_lcm / denominator(r))));
  if (num_gcd == 0) return v;  // zero vector
  std::vector<Rational> out;
  out.reserve(v.size());
  const Rational scale = Rational(den_lcm) / Rational(num_gcd);
  for (const auto& r : v) out.push_back(r * scale);
  return out;
}

std::vector<Rational> normalize_direction(const std::vector<Rational>& v) {
  auto out = make_primitive(v);
  for (const auto& r : out) {
    if (r == 0) continue;
    if (r < 0)
      for (auto& x : out) x = -x;
    break;
  }
  return out;
}

}  // namespace darboux
