#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primegb/errors.hpp"

namespace primegb {

inline constexpr std::size_t kMaxVariables = 64;

/// The first 64 primes. Variable i of a VarTable is encoded as kPrimes[i].
inline constexpr std::array<std::uint64_t, kMaxVariables> kPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
    59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
    227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

using Exponent = std::uint32_t;
using Exponents = std::vector<Exponent>;

/// Declared order of single-letter indeterminates. The i-th name is encoded
/// by the i-th prime, so the name string doubles as the permutation label.
class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(std::string_view names);

  std::size_t size() const noexcept { return names_.size(); }
  char name(std::size_t i) const { return names_.at(i); }
  std::uint64_t prime(std::size_t i) const { return kPrimes.at(i); }
  std::span<const std::uint64_t> primes() const noexcept { return {kPrimes.data(), names_.size()}; }
  std::optional<std::size_t> index_of(char name) const noexcept;
  const std::string& names() const noexcept { return names_; }

  /// The same indeterminates re-declared in `order`, which must be a
  /// rearrangement of names().
  VarTable permuted(std::string_view order) const;

  friend bool operator==(const VarTable&, const VarTable&) = default;

 private:
  std::string names_;
};

enum class OrderingKind {
  TotalDegree,  ///< total degree, ties broken by comparing expanded strings
  DegLex,       ///< total degree, ties broken lexicographically (names[0] most significant)
  PrimeBased,   ///< natural order of prime images
  Lex,          ///< pure lexicographic, names[0] most significant
};

std::string_view to_string(OrderingKind kind);
/// Accepts "tdeg", "deglex", "prime" and "lex".
std::optional<OrderingKind> parse_ordering(std::string_view text);

enum class Representation { ExpandedString, ExponentVector, PrimeImage };

std::string_view to_string(Representation rep);

/// Power product as its sorted multiset of variable letters: variable i is
/// the letter 'a' + i, so x^3 y^2 z is "aaabbc".
class ExpandedString {
 public:
  static constexpr Representation representation = Representation::ExpandedString;

  ExpandedString() = default;
  /// `letters` must be sorted and use letters below 'a' + vars.size().
  static ExpandedString from_letters(std::string letters);
  /// Unchecked: `letters` must already be sorted.
  static ExpandedString from_sorted(std::string letters) {
    ExpandedString t;
    t.letters_ = std::move(letters);
    return t;
  }
  static ExpandedString from_exponents(std::span<const Exponent> exps, const VarTable& vars);
  static ExpandedString one(const VarTable&) { return {}; }

  const std::string& letters() const noexcept { return letters_; }
  bool is_one() const noexcept { return letters_.empty(); }

  friend bool operator==(const ExpandedString&, const ExpandedString&) = default;

 private:
  std::string letters_;
};

/// Power product as one exponent per variable.
class ExponentVector {
 public:
  static constexpr Representation representation = Representation::ExponentVector;

  ExponentVector() = default;
  explicit ExponentVector(Exponents exps) : exps_(std::move(exps)) {}
  static ExponentVector from_exponents(std::span<const Exponent> exps, const VarTable& vars);
  static ExponentVector one(const VarTable& vars) { return ExponentVector(Exponents(vars.size(), 0)); }

  std::span<const Exponent> exponents() const noexcept { return exps_; }
  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  Exponents exps_;
};

/// Power product as its prime image: prod prime_i^exp_i, checked to fit in
/// 64 bits.
class PrimeImage {
 public:
  static constexpr Representation representation = Representation::PrimeImage;

  constexpr PrimeImage() noexcept = default;
  /// `value` must be a product of the table's primes; not re-validated.
  constexpr explicit PrimeImage(std::uint64_t value) noexcept : value_(value) {}
  static PrimeImage from_exponents(std::span<const Exponent> exps, const VarTable& vars);
  static constexpr PrimeImage one(const VarTable&) noexcept { return {}; }

  constexpr std::uint64_t value() const noexcept { return value_; }
  constexpr bool is_one() const noexcept { return value_ == 1; }

  friend constexpr bool operator==(const PrimeImage&, const PrimeImage&) = default;

 private:
  std::uint64_t value_ = 1;
};

// ---- ExpandedString --------------------------------------------------------

namespace detail {
// Letters may exceed 127 for large tables; compare them unsigned.
inline bool letter_less(char a, char b) noexcept {
  return static_cast<unsigned char>(a) < static_cast<unsigned char>(b);
}
}  // namespace detail

inline ExpandedString mul(const ExpandedString& s, const ExpandedString& t) {
  std::string out;
  out.reserve(s.letters().size() + t.letters().size());
  std::merge(s.letters().begin(), s.letters().end(), t.letters().begin(), t.letters().end(),
             std::back_inserter(out), detail::letter_less);
  return ExpandedString::from_sorted(std::move(out));
}

inline bool divides(const ExpandedString& s, const ExpandedString& t) {
  return std::includes(t.letters().begin(), t.letters().end(), s.letters().begin(), s.letters().end(),
                       detail::letter_less);
}

/// t / s; throws NotDivisible unless s divides t.
inline ExpandedString divide(const ExpandedString& t, const ExpandedString& s) {
  if (!divides(s, t)) throw NotDivisible();
  std::string out;
  out.reserve(t.letters().size() - s.letters().size());
  std::set_difference(t.letters().begin(), t.letters().end(), s.letters().begin(), s.letters().end(),
                      std::back_inserter(out), detail::letter_less);
  return ExpandedString::from_sorted(std::move(out));
}

inline ExpandedString lcm(const ExpandedString& s, const ExpandedString& t) {
  std::string out;
  out.reserve(s.letters().size() + t.letters().size());
  std::set_union(s.letters().begin(), s.letters().end(), t.letters().begin(), t.letters().end(),
                 std::back_inserter(out), detail::letter_less);
  return ExpandedString::from_sorted(std::move(out));
}

inline ExpandedString gcd(const ExpandedString& s, const ExpandedString& t) {
  std::string out;
  std::set_intersection(s.letters().begin(), s.letters().end(), t.letters().begin(), t.letters().end(),
                        std::back_inserter(out), detail::letter_less);
  return ExpandedString::from_sorted(std::move(out));
}

inline unsigned total_degree(const ExpandedString& t, const VarTable& = {}) {
  return static_cast<unsigned>(t.letters().size());
}

Exponents exponents(const ExpandedString& t, const VarTable& vars);

// ---- ExponentVector --------------------------------------------------------

ExponentVector mul(const ExponentVector& s, const ExponentVector& t);
bool divides(const ExponentVector& s, const ExponentVector& t);
ExponentVector divide(const ExponentVector& t, const ExponentVector& s);
ExponentVector lcm(const ExponentVector& s, const ExponentVector& t);
ExponentVector gcd(const ExponentVector& s, const ExponentVector& t);
unsigned total_degree(const ExponentVector& t, const VarTable& = {});
inline Exponents exponents(const ExponentVector& t, const VarTable&) {
  return {t.exponents().begin(), t.exponents().end()};
}

// ---- PrimeImage ------------------------------------------------------------

inline PrimeImage mul(const PrimeImage& s, const PrimeImage& t) {
  std::uint64_t r;
  if (__builtin_mul_overflow(s.value(), t.value(), &r)) throw ImageOverflow("mul");
  return PrimeImage(r);
}

inline bool divides(const PrimeImage& s, const PrimeImage& t) noexcept { return t.value() % s.value() == 0; }

inline PrimeImage divide(const PrimeImage& t, const PrimeImage& s) {
  if (t.value() % s.value() != 0) throw NotDivisible();
  return PrimeImage(t.value() / s.value());
}

inline PrimeImage gcd(const PrimeImage& s, const PrimeImage& t) noexcept {
  return PrimeImage(std::gcd(s.value(), t.value()));
}

inline PrimeImage lcm(const PrimeImage& s, const PrimeImage& t) {
  std::uint64_t r;
  if (__builtin_mul_overflow(s.value() / std::gcd(s.value(), t.value()), t.value(), &r)) {
    throw ImageOverflow("lcm");
  }
  return PrimeImage(r);
}

/// Sum of exponents, recovered by trial division over the table's primes.
unsigned total_degree(const PrimeImage& t, const VarTable& vars);
Exponents exponents(const PrimeImage& t, const VarTable& vars);

// ---- shared ----------------------------------------------------------------

template <class P>
concept PowerProductRep =
    std::regular<P> && requires(const P& a, const P& b, const VarTable& v, std::span<const Exponent> e) {
      { mul(a, b) } -> std::same_as<P>;
      { divides(a, b) } -> std::same_as<bool>;
      { divide(a, b) } -> std::same_as<P>;
      { lcm(a, b) } -> std::same_as<P>;
      { gcd(a, b) } -> std::same_as<P>;
      { total_degree(a, v) } -> std::same_as<unsigned>;
      { exponents(a, v) } -> std::same_as<Exponents>;
      { a.is_one() } -> std::same_as<bool>;
      { P::from_exponents(e, v) } -> std::same_as<P>;
      { P::one(v) } -> std::same_as<P>;
    };

/// Prime image of any representation; throws ImageOverflow past 64 bits.
std::uint64_t prime_image(std::span<const Exponent> exps, const VarTable& vars);
template <PowerProductRep P>
std::uint64_t prime_image(const P& t, const VarTable& vars) {
  if constexpr (std::same_as<P, PrimeImage>) {
    return t.value();
  } else {
    return prime_image(exponents(t, vars), vars);
  }
}

/// Ordering verdict on exponent vectors; the reference every representation
/// must agree with.
std::strong_ordering compare_exponents(std::span<const Exponent> s, std::span<const Exponent> t, OrderingKind kind,
                                       const VarTable& vars);

inline std::strong_ordering compare(const ExponentVector& s, const ExponentVector& t, OrderingKind kind,
                                    const VarTable& vars) {
  return compare_exponents(s.exponents(), t.exponents(), kind, vars);
}

inline std::strong_ordering compare(const PrimeImage& s, const PrimeImage& t, OrderingKind kind,
                                    const VarTable& vars) {
  if (kind == OrderingKind::PrimeBased) return s.value() <=> t.value();
  return compare_exponents(exponents(s, vars), exponents(t, vars), kind, vars);
}

std::strong_ordering compare(const ExpandedString& s, const ExpandedString& t, OrderingKind kind,
                             const VarTable& vars);

/// The same abstract power product in another representation.
template <PowerProductRep To, PowerProductRep From>
To convert(const From& t, const VarTable& vars) {
  if constexpr (std::same_as<To, From>) {
    return t;
  } else {
    const Exponents e = exponents(t, vars);
    return To::from_exponents(e, vars);
  }
}

/// Caret notation with implicit multiplication, e.g. "x^31y"; "1" for the
/// empty product.
std::string format_exponents(std::span<const Exponent> exps, const VarTable& vars);
template <PowerProductRep P>
std::string to_string(const P& t, const VarTable& vars) {
  return format_exponents(exponents(t, vars), vars);
}

}  // namespace primegb
