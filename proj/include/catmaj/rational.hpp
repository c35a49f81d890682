#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace catmaj {

// Exact arithmetic types. mpq_class keeps values canonical (reduced,
// positive denominator) through all arithmetic, which is the invariant
// every exactness claim in this library rests on.
using Rational = mpq_class;
using BigInt = mpz_class;

// Builds a canonical rational from a (possibly unreduced) fraction.
Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

// Parses "3/4", "-1/3", "2". Throws std::invalid_argument on junk or
// zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "num/den" rendering; integers render without "/1".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

// log2 of a positive big integer, accurate to double precision.
double log2_bigint(const BigInt& n);

// log2 of a positive rational, accurate to double precision.
double log2_rational(const Rational& q);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Least common multiple of all denominators in a vector.
BigInt denominator_lcm(const std::vector<Rational>& values);

// ceil(a/b) for exact integers, b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);

// Smallest integer >= q.
BigInt ceil_rational(const Rational& q);

inline const Rational& zero_rational() {
  static const Rational z(0);
  return z;
}

inline const Rational& one_rational() {
  static const Rational o(1);
  return o;
}

}  // namespace catmaj
