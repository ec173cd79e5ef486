#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace darboux {

// Exact arithmetic carriers. cpp_rational keeps values reduced with a
// positive denominator, which is exactly the invariant we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on anything else
// (including a zero denominator).
Rational parse_rational(const std::string& text);

// Canonical display: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

// Requires is_integer(r).
Integer to_integer(const Rational& r);

// base^exp for integer exp; negative exp requires base != 0.
Rational pow_integer(const Rational& base, long exp);

// base^(p/q) when the result is rational (base a perfect q-th power up to
// sign); nullopt otherwise. pow_exact(-8, 1/3) == -2, pow_exact(2, 1/2) == nullopt.
std::optional<Rational> pow_exact(const Rational& base, const Rational& exp);

// Exact floor of the n-th root when v is a perfect n-th power, else nullopt.
// Negative v needs odd n.
std::optional<Integer> exact_nth_root(const Integer& v, unsigned n);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Scales v by lcm(denominators)/gcd(numerators); signs are preserved.
// Zero vector is returned unchanged.
std::vector<Rational> make_primitive(const std::vector<Rational>& v);

// make_primitive followed by a sign flip so the first nonzero entry is positive.
std::vector<Rational> normalize_direction(const std::vector<Rational>& v);

}  // namespace darboux
