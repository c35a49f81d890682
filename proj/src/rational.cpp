#include "catmaj/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace catmaj {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' &&
        c != '+') {
      throw std::invalid_argument("bad rational literal: " + text);
    }
  }
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in: " + text);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("cannot convert non-finite double to rational");
  }
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

double log2_bigint(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("log2 of non-positive integer");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

double log2_rational(const Rational& q) {
  if (q <= 0) throw std::invalid_argument("log2 of non-positive rational");
  return log2_bigint(BigInt(q.get_num())) - log2_bigint(BigInt(q.get_den()));
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt denominator_lcm(const std::vector<Rational>& values) {
  BigInt l(1);
  for (const auto& v : values) l = lcm(l, BigInt(v.get_den()));
  return l;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::invalid_argument("ceil_div with non-positive divisor");
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_rational(const Rational& q) {
  return ceil_div(BigInt(q.get_num()), BigInt(q.get_den()));
}

}  // namespace catmaj
