#include "primegb/rational.hpp"

#include <cstdint>
#include <limits>
#include <numeric>

namespace primegb {

std::string_view to_string(CoeffBackend backend) {
  switch (backend) {
    case CoeffBackend::Fixed64: return "i64";
    case CoeffBackend::ArbitraryPrecision: return "big";
  }
  return "?";
}

namespace {

using Int = Rational64::Int;
using UInt = std::uint64_t;

Int checked_add(Int a, Int b, const char* op) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow(op);
  return r;
}

Int checked_sub(Int a, Int b, const char* op) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw CoefficientOverflow(op);
  return r;
}

Int checked_mul(Int a, Int b, const char* op) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow(op);
  return r;
}

Int checked_neg(Int a, const char* op) {
  if (a == std::numeric_limits<Int>::min()) throw CoefficientOverflow(op);
  return -a;
}

UInt magnitude(Int a) { return a < 0 ? UInt{0} - static_cast<UInt>(a) : static_cast<UInt>(a); }

// gcd(|a|, |b|) on magnitudes, so INT64_MIN operands are safe. Callers never
// pass two INT64_MIN values (denominators are positive).
Int gcd_int(Int a, Int b) { return static_cast<Int>(std::gcd(magnitude(a), magnitude(b))); }

}  // namespace

Rational64::Rational64(Int numerator, Int denominator) {
  if (denominator == 0) throw DivisionByZero();
  if (denominator < 0) {
    numerator = checked_neg(numerator, "normalize");
    denominator = checked_neg(denominator, "normalize");
  }
  if (numerator == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  const Int g = gcd_int(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational64 Rational64::inverse() const {
  if (num_ == 0) throw DivisionByZero();
  if (num_ < 0) return {checked_neg(den_, "inverse"), checked_neg(num_, "inverse"), Canonical{}};
  return {den_, num_, Canonical{}};
}

Rational64 operator+(const Rational64& a, const Rational64& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Int g = gcd_int(a.den_, b.den_);
  if (g == 1) {
    const Int n = checked_add(checked_mul(a.num_, b.den_, "add"), checked_mul(b.num_, a.den_, "add"), "add");
    if (n == 0) return {};
    const Int d = checked_mul(a.den_, b.den_, "add");
    return {n, d, Rational64::Canonical{}};
  }
  const Int t = checked_add(checked_mul(a.num_, b.den_ / g, "add"), checked_mul(b.num_, a.den_ / g, "add"), "add");
  if (t == 0) return {};
  const Int g2 = gcd_int(t, g);
  return {t / g2, checked_mul(a.den_ / g, b.den_ / g2, "add"), Rational64::Canonical{}};
}

Rational64 operator-(const Rational64& a, const Rational64& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  const Int g = gcd_int(a.den_, b.den_);
  if (g == 1) {
    const Int n = checked_sub(checked_mul(a.num_, b.den_, "sub"), checked_mul(b.num_, a.den_, "sub"), "sub");
    if (n == 0) return {};
    const Int d = checked_mul(a.den_, b.den_, "sub");
    return {n, d, Rational64::Canonical{}};
  }
  const Int t = checked_sub(checked_mul(a.num_, b.den_ / g, "sub"), checked_mul(b.num_, a.den_ / g, "sub"), "sub");
  if (t == 0) return {};
  const Int g2 = gcd_int(t, g);
  return {t / g2, checked_mul(a.den_ / g, b.den_ / g2, "sub"), Rational64::Canonical{}};
}

Rational64 operator*(const Rational64& a, const Rational64& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Int g1 = gcd_int(a.num_, b.den_);
  const Int g2 = gcd_int(b.num_, a.den_);
  return {checked_mul(a.num_ / g1, b.num_ / g2, "mul"), checked_mul(a.den_ / g2, b.den_ / g1, "mul"),
          Rational64::Canonical{}};
}

Rational64 operator/(const Rational64& a, const Rational64& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  const Int g1 = gcd_int(a.num_, b.num_);
  const Int g2 = gcd_int(a.den_, b.den_);
  Int n = checked_mul(a.num_ / g1, b.den_ / g2, "div");
  Int d = checked_mul(a.den_ / g2, b.num_ / g1, "div");
  if (d < 0) {
    n = checked_neg(n, "div");
    d = checked_neg(d, "div");
  }
  return {n, d, Rational64::Canonical{}};
}

Rational64 Rational64::operator-() const { return {checked_neg(num_, "negate"), den_, Canonical{}}; }

std::string Rational64::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational64 Rational64::parse(std::string_view text) { return from_mpq(parse_mpq(text)); }

Rational64 Rational64::from_mpq(const mpq_class& value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (!n.fits_slong_p() || !d.fits_slong_p()) throw CoefficientOverflow("convert");
  return {static_cast<Int>(n.get_si()), static_cast<Int>(d.get_si()), Canonical{}};
}

mpq_class Rational64::to_mpq() const {
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

RationalBig::RationalBig(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

RationalBig RationalBig::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return from_canonical(1 / value_);
}

RationalBig operator/(const RationalBig& a, const RationalBig& b) {
  if (b.is_zero()) throw DivisionByZero();
  return RationalBig::from_canonical(a.value_ / b.value_);
}

std::string RationalBig::to_string() const { return format_mpq(value_); }

RationalBig RationalBig::parse(std::string_view text) { return RationalBig(parse_mpq(text)); }

mpq_class parse_mpq(std::string_view text) {
  auto fail = [&] { return Error("malformed rational '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t to = from;
    while (to < text.size() && text[to] >= '0' && text[to] <= '9') ++to;
    return to;
  };
  const std::size_t num_end = digits(pos);
  if (num_end == pos) throw fail();
  mpz_class num(std::string(text.substr(pos, num_end - pos)), 10);
  mpz_class den = 1;
  pos = num_end;
  if (pos < text.size() && text[pos] == '/') {
    const std::size_t den_end = digits(pos + 1);
    if (den_end == pos + 1) throw fail();
    den = mpz_class(std::string(text.substr(pos + 1, den_end - pos - 1)), 10);
    pos = den_end;
  }
  if (pos != text.size()) throw fail();
  if (den == 0) throw DivisionByZero();
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string format_mpq(const mpq_class& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace primegb
