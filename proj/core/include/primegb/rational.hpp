#pragma once

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "primegb/errors.hpp"

namespace primegb {

enum class CoeffBackend { Fixed64, ArbitraryPrecision };

std::string_view to_string(CoeffBackend backend);

/// Exact fraction over checked signed 64-bit integers.
///
/// Always kept in lowest terms with a positive denominator; zero is 0/1.
/// Every intermediate product and sum is range-checked and an out-of-range
/// value raises CoefficientOverflow instead of wrapping.
class Rational64 {
 public:
  using Int = std::int64_t;
  static constexpr CoeffBackend backend = CoeffBackend::Fixed64;

  constexpr Rational64() noexcept = default;
  Rational64(Int numerator) noexcept : num_(numerator) {}  // NOLINT(google-explicit-constructor)
  Rational64(Int numerator, Int denominator);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Rational64 inverse() const;

  friend Rational64 operator+(const Rational64& a, const Rational64& b);
  friend Rational64 operator-(const Rational64& a, const Rational64& b);
  friend Rational64 operator*(const Rational64& a, const Rational64& b);
  friend Rational64 operator/(const Rational64& a, const Rational64& b);
  Rational64 operator-() const;

  friend bool operator==(const Rational64&, const Rational64&) = default;

  std::string to_string() const;
  static Rational64 parse(std::string_view text);
  static Rational64 from_mpq(const mpq_class& value);
  mpq_class to_mpq() const;

 private:
  struct Canonical {};
  constexpr Rational64(Int n, Int d, Canonical) noexcept : num_(n), den_(d) {}

  Int num_ = 0;
  Int den_ = 1;
};

/// Exact fraction over GMP multiple-precision integers.
class RationalBig {
 public:
  static constexpr CoeffBackend backend = CoeffBackend::ArbitraryPrecision;

  RationalBig() = default;
  RationalBig(long numerator) : value_(numerator) {}  // NOLINT(google-explicit-constructor)
  RationalBig(long numerator, long denominator);
  explicit RationalBig(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  RationalBig inverse() const;

  friend RationalBig operator+(const RationalBig& a, const RationalBig& b) {
    return from_canonical(a.value_ + b.value_);
  }
  friend RationalBig operator-(const RationalBig& a, const RationalBig& b) {
    return from_canonical(a.value_ - b.value_);
  }
  friend RationalBig operator*(const RationalBig& a, const RationalBig& b) {
    return from_canonical(a.value_ * b.value_);
  }
  friend RationalBig operator/(const RationalBig& a, const RationalBig& b);
  RationalBig operator-() const { return from_canonical(-value_); }

  friend bool operator==(const RationalBig& a, const RationalBig& b) { return a.value_ == b.value_; }

  std::string to_string() const;
  static RationalBig parse(std::string_view text);
  static RationalBig from_mpq(const mpq_class& value) { return RationalBig(value); }
  const mpq_class& to_mpq() const noexcept { return value_; }

 private:
  // GMP arithmetic on canonical operands already yields canonical results.
  static RationalBig from_canonical(mpq_class v) {
    RationalBig r;
    r.value_ = std::move(v);
    return r;
  }

  mpq_class value_;
};

/// Operations the polynomial layer needs from a coefficient field.
template <class C>
concept Coefficient = std::regular<C> && requires(const C& a, const C& b, const mpq_class& q) {
  { a + b } -> std::same_as<C>;
  { a - b } -> std::same_as<C>;
  { a * b } -> std::same_as<C>;
  { a / b } -> std::same_as<C>;
  { -a } -> std::same_as<C>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.is_one() } -> std::same_as<bool>;
  { a.sign() } -> std::same_as<int>;
  { a.inverse() } -> std::same_as<C>;
  { a.to_string() } -> std::same_as<std::string>;
  { C::from_mpq(q) } -> std::same_as<C>;
  { C::backend } -> std::convertible_to<CoeffBackend>;
};

inline std::ostream& operator<<(std::ostream& os, const Rational64& r) { return os << r.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const RationalBig& r) { return os << r.to_string(); }

/// Parses "[sign]digits[/digits]" into an exact GMP rational.
mpq_class parse_mpq(std::string_view text);

/// Renders "p/q", dropping "/q" when q = 1.
std::string format_mpq(const mpq_class& value);

}  // namespace primegb
