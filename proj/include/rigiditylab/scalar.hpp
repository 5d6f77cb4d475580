#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "rigiditylab/errors.hpp"

namespace rigiditylab {

// Arbitrary-precision rational. mpq_class keeps values canonical (lowest
// terms, positive denominator) through arithmetic; construction from raw
// numerator/denominator goes through rational() below so canonicalization
// is never skipped.
using Rational = mpq_class;
using Integer = mpz_class;

Rational rational(long num, long den = 1);
Rational rational(const Integer& num, const Integer& den);

// Parses "p/q" or "n". Canonical lowest-terms output; rejects q = 0.
Rational rational_from_string(std::string_view text);

// "p/q" in lowest terms, plain "n" for integers.
std::string to_string(const Rational& q);

int sign(const Rational& q);
Rational abs(const Rational& q);

// Gaussian rational a + b*i. Conjugation is an explicit operation and is
// never applied implicitly by arithmetic.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r), im(0) {}  // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }
  // re^2 + im^2 (a true norm, unlike the conjugation-free squared length).
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// i (the imaginary unit).
inline GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

std::string to_string(const GaussianRational& z);

double to_double(const Rational& q);

}  // namespace rigiditylab
