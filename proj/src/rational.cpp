#include "dsop/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "dsop/errors.hpp"

namespace dsop {
namespace {

bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

double log_abs_integer(const Integer& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digit_run(num) || !is_digit_run(den))
    throw ValidationError("not an exact rational: \"" + std::string(text) + "\"");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

double to_double(const Rational& r) {
  if (r == 0) return 0.0;
  const double la = log_abs(r);
  if (la > std::log(std::numeric_limits<double>::max()))
    return sgn(r) > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  return r.get_d();
}

double log_abs(const Rational& r) {
  if (r == 0) return -std::numeric_limits<double>::infinity();
  return log_abs_integer(r.get_num()) - log_abs_integer(r.get_den());
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer falling_factorial(unsigned long i, unsigned long k) {
  if (k > i) return 0;
  Integer out = 1;
  for (unsigned long m = 0; m < k; ++m) out *= (i - m);
  return out;
}

Rational pow(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

}  // namespace dsop
