#include "sidef/polynomials/rational.hpp"

#include <cctype>
#include <ostream>

#include "sidef/errors.hpp"

namespace sidef {

Rational::Rational(long num, long den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ArgumentError("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ArgumentError("rational with zero denominator: '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

std::size_t Rational::bits() const {
  return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArgumentError("division by zero rational");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long k) {
  if (k < 0) return Rational(1) / pow(r, -k);
  Rational result(1);
  Rational base = r;
  auto e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Rational binomial(const Rational& top, long k) {
  if (k < 0) return Rational(0);
  Rational result(1);
  for (long i = 0; i < k; ++i) {
    result *= (top - Rational(i));
    result /= Rational(i + 1);
  }
  return result;
}

Rational factorial(long n) {
  Rational result(1);
  for (long i = 2; i <= n; ++i) result *= Rational(i);
  return result;
}

}  // namespace sidef
