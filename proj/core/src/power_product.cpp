#include "primegb/power_product.hpp"

#include <set>

namespace primegb {

VarTable::VarTable(std::string_view names) : names_(names) {
  if (names_.size() > kMaxVariables) throw Error("at most 64 variables are supported");
  std::set<char> seen;
  for (char c : names_) {
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))) {
      throw Error(std::string("variable names must be single letters, got '") + c + "'");
    }
    if (!seen.insert(c).second) throw Error(std::string("duplicate variable '") + c + "'");
  }
}

std::optional<std::size_t> VarTable::index_of(char name) const noexcept {
  const auto pos = names_.find(name);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

VarTable VarTable::permuted(std::string_view order) const {
  if (order.size() != names_.size()) {
    throw InvalidPermutation("'" + std::string(order) + "' does not rearrange '" + names_ + "'");
  }
  std::string a(order), b(names_);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b || std::adjacent_find(a.begin(), a.end()) != a.end()) {
    throw InvalidPermutation("'" + std::string(order) + "' does not rearrange '" + names_ + "'");
  }
  return VarTable(order);
}

std::string_view to_string(OrderingKind kind) {
  switch (kind) {
    case OrderingKind::TotalDegree: return "tdeg";
    case OrderingKind::DegLex: return "deglex";
    case OrderingKind::PrimeBased: return "prime";
    case OrderingKind::Lex: return "lex";
  }
  return "?";
}

std::optional<OrderingKind> parse_ordering(std::string_view text) {
  for (auto kind : {OrderingKind::TotalDegree, OrderingKind::DegLex, OrderingKind::PrimeBased, OrderingKind::Lex}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(Representation rep) {
  switch (rep) {
    case Representation::ExpandedString: return "string";
    case Representation::ExponentVector: return "vector";
    case Representation::PrimeImage: return "prime";
  }
  return "?";
}

// ---- ExpandedString --------------------------------------------------------

ExpandedString ExpandedString::from_letters(std::string letters) {
  if (!std::is_sorted(letters.begin(), letters.end(), detail::letter_less)) {
    throw Error("expanded power product '" + letters + "' is not sorted");
  }
  return from_sorted(std::move(letters));
}

ExpandedString ExpandedString::from_exponents(std::span<const Exponent> exps, const VarTable& vars) {
  if (exps.size() != vars.size()) throw Error("exponent vector length does not match variable table");
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) out.append(exps[i], static_cast<char>('a' + i));
  return from_sorted(std::move(out));
}

Exponents exponents(const ExpandedString& t, const VarTable& vars) {
  Exponents e(vars.size(), 0);
  for (char c : t.letters()) {
    const std::size_t i = static_cast<unsigned char>(c) - static_cast<unsigned char>('a');
    if (i >= e.size()) throw Error("letter outside variable table");
    ++e[i];
  }
  return e;
}

std::strong_ordering compare(const ExpandedString& s, const ExpandedString& t, OrderingKind kind,
                             const VarTable& vars) {
  const std::string& a = s.letters();
  const std::string& b = t.letters();
  switch (kind) {
    case OrderingKind::TotalDegree:
    case OrderingKind::DegLex: {
      if (a.size() != b.size()) return a.size() <=> b.size();
      const int c = a.compare(b);
      if (c == 0) return std::strong_ordering::equal;
      // A smaller string holds more copies of the first differing variable.
      const bool a_less = kind == OrderingKind::TotalDegree ? c < 0 : c > 0;
      return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    case OrderingKind::Lex: {
      const std::size_t n = std::min(a.size(), b.size());
      for (std::size_t k = 0; k < n; ++k) {
        if (a[k] != b[k]) {
          return detail::letter_less(a[k], b[k]) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
      }
      return a.size() <=> b.size();
    }
    case OrderingKind::PrimeBased:
      return prime_image(s, vars) <=> prime_image(t, vars);
  }
  return std::strong_ordering::equal;
}

// ---- ExponentVector --------------------------------------------------------

ExponentVector ExponentVector::from_exponents(std::span<const Exponent> exps, const VarTable& vars) {
  if (exps.size() != vars.size()) throw Error("exponent vector length does not match variable table");
  return ExponentVector(Exponents(exps.begin(), exps.end()));
}

namespace {

template <class Op>
ExponentVector zip(const ExponentVector& s, const ExponentVector& t, Op op) {
  const auto a = s.exponents();
  const auto b = t.exponents();
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return ExponentVector(std::move(out));
}

}  // namespace

ExponentVector mul(const ExponentVector& s, const ExponentVector& t) {
  return zip(s, t, [](Exponent x, Exponent y) { return x + y; });
}

bool divides(const ExponentVector& s, const ExponentVector& t) {
  const auto a = s.exponents();
  const auto b = t.exponents();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

ExponentVector divide(const ExponentVector& t, const ExponentVector& s) {
  if (!divides(s, t)) throw NotDivisible();
  return zip(t, s, [](Exponent x, Exponent y) { return x - y; });
}

ExponentVector lcm(const ExponentVector& s, const ExponentVector& t) {
  return zip(s, t, [](Exponent x, Exponent y) { return std::max(x, y); });
}

ExponentVector gcd(const ExponentVector& s, const ExponentVector& t) {
  return zip(s, t, [](Exponent x, Exponent y) { return std::min(x, y); });
}

unsigned total_degree(const ExponentVector& t, const VarTable&) {
  unsigned d = 0;
  for (Exponent e : t.exponents()) d += e;
  return d;
}

// ---- PrimeImage ------------------------------------------------------------

PrimeImage PrimeImage::from_exponents(std::span<const Exponent> exps, const VarTable& vars) {
  return PrimeImage(prime_image(exps, vars));
}

Exponents exponents(const PrimeImage& t, const VarTable& vars) {
  Exponents e(vars.size(), 0);
  std::uint64_t n = t.value();
  for (std::size_t i = 0; i < vars.size() && n > 1; ++i) {
    const std::uint64_t p = vars.prime(i);
    while (n % p == 0) {
      n /= p;
      ++e[i];
    }
  }
  if (n != 1) throw Error("prime image " + std::to_string(t.value()) + " has a factor outside the variable table");
  return e;
}

unsigned total_degree(const PrimeImage& t, const VarTable& vars) {
  unsigned d = 0;
  for (Exponent e : exponents(t, vars)) d += e;
  return d;
}

// ---- shared ----------------------------------------------------------------

std::uint64_t prime_image(std::span<const Exponent> exps, const VarTable& vars) {
  if (exps.size() != vars.size()) throw Error("exponent vector length does not match variable table");
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    for (Exponent k = 0; k < exps[i]; ++k) {
      if (__builtin_mul_overflow(n, vars.prime(i), &n)) throw ImageOverflow("prime_image");
    }
  }
  return n;
}

std::strong_ordering compare_exponents(std::span<const Exponent> s, std::span<const Exponent> t, OrderingKind kind,
                                       const VarTable& vars) {
  auto degree = [](std::span<const Exponent> e) {
    std::uint64_t d = 0;
    for (Exponent x : e) d += x;
    return d;
  };
  switch (kind) {
    case OrderingKind::PrimeBased:
      return prime_image(s, vars) <=> prime_image(t, vars);
    case OrderingKind::TotalDegree:
    case OrderingKind::DegLex:
      if (const auto ds = degree(s), dt = degree(t); ds != dt) return ds <=> dt;
      [[fallthrough]];
    case OrderingKind::Lex:
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != t[i]) {
          // TotalDegree ties favour the smaller exponent at the first
          // difference (the expanded-string comparison); the others favour
          // the larger one.
          return kind == OrderingKind::TotalDegree ? t[i] <=> s[i] : s[i] <=> t[i];
        }
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::string format_exponents(std::span<const Exponent> exps, const VarTable& vars) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    out += vars.name(i);
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace primegb
