#include "inthull/rational.hpp"

#include <limits>

#include "inthull/error.hpp"

namespace inthull {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::IdenticalPoints: return "IdenticalPoints";
    case Errc::Parallel: return "Parallel";
    case Errc::Coincident: return "Coincident";
    case Errc::NotConvexPosition: return "NotConvexPosition";
    case Errc::Degenerate: return "Degenerate";
    case Errc::EmptySet: return "EmptySet";
    case Errc::Unbounded: return "Unbounded";
    case Errc::UnboundedInput: return "UnboundedInput";
    case Errc::NoIntegerPoints: return "NoIntegerPoints";
    case Errc::SegmentNotOnLine: return "SegmentNotOnLine";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SweepLimitExceeded: return "SweepLimitExceeded";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::Parse, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

Integer abs(const Integer& z) {
  Integer r = ::abs(z);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
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
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error(Errc::Parse, "not a rational literal: '" + std::string(text) + "'");
  }
  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_decimal(const Rational& q, unsigned digits) {
  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const Rational scaled = q * Rational(scale);
  const Rational magnitude = sgn(scaled) < 0 ? Rational(-scaled) : scaled;
  Integer rounded = floor(magnitude + Rational(1, 2));
  std::string text = rounded.get_str(10);
  if (digits > 0) {
    if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
    text.insert(text.size() - digits, ".");
  }
  if (sgn(scaled) < 0 && rounded != 0) text.insert(0, "-");
  return text;
}

double to_double(const Rational& q) { return q.get_d(); }

bool fits_int64(const Integer& z) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return z >= lo && z <= hi;
}

std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z)) throw Error(Errc::BudgetExceeded, "integer does not fit in 64 bits");
  return std::stoll(z.get_str(10));
}

}  // namespace inthull
