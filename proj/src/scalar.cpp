#include "rigiditylab/scalar.hpp"

#include <cctype>

namespace rigiditylab {

Rational rational(long num, long den) {
  require(den != 0, Errc::ParseError, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational(const Integer& num, const Integer& den) {
  require(sgn(den) != 0, Errc::ParseError, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(std::string_view text) {
  if (text.empty()) fail(Errc::ParseError, "empty rational literal");
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              ((c == '-' || c == '+') && (i == 0 || text[i - 1] == '/'));
    if (!ok) fail(Errc::ParseError, "bad rational literal '" + std::string(text) + "'");
  }
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0)
    fail(Errc::ParseError, "bad rational literal '" + std::string(text) + "'");
  if (sgn(q.get_den()) == 0) fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int sign(const Rational& q) { return sgn(q); }

Rational abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  require(!o.is_zero(), Errc::ZeroScale, "division by zero");
  Rational n = o.norm();
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re);
  std::string s = to_string(z.re);
  s += (sign(z.im) < 0) ? " - " : " + ";
  s += to_string(abs(z.im));
  s += "i";
  return s;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace rigiditylab
