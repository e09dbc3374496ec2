// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exparts {

// Exact arithmetic used throughout: counts are BigInt, probabilities Rational.
using BigInt = mpz_class;
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize; route all construction here.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or a plain integer literal, optionally signed.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("cannot parse rational: '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Gamma(k) = (k-1)! for integer k >= 1.
inline BigInt gamma_int(unsigned long k) {
  if (k == 0) throw std::domain_error("gamma_int requires k >= 1");
  return factorial(k - 1);
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// x(x+1)...(x+n-1); the empty product (n = 0) is 1.
inline Rational rising_factorial(const Rational& x, unsigned long n) {
  Rational r = 1;
  Rational term = x;
  for (unsigned long i = 0; i < n; ++i) {
    r *= term;
    term += 1;
  }
  return r;
}

// -(-a)^{rising k} = a(1-a)(2-a)...(k-1-a), the per-block weight of the
// two-parameter partition law.
inline Rational neg_rising_block_factor(const Rational& alpha, unsigned long k) {
  if (k == 0) throw std::domain_error("block factor requires k >= 1");
  Rational r = alpha;
  Rational term = 1 - alpha;
  for (unsigned long i = 1; i < k; ++i) {
    r *= term;
    term += 1;
  }
  return r;
}

inline Rational pow_rational(const Rational& x, long e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("zero to a negative power");
    return make_rational(1) / pow_rational(x, -e);
  }
  Rational r = 1;
  Rational base = x;
  auto k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace exparts
