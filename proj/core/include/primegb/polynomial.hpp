#pragma once

#include <algorithm>
#include <compare>
#include <memory>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "primegb/deadline.hpp"
#include "primegb/errors.hpp"
#include "primegb/power_product.hpp"
#include "primegb/rational.hpp"

namespace primegb {

/// Variable table plus the active ordering; every polynomial operation is
/// evaluated relative to one ring.
template <PowerProductRep PP>
class PolyRing {
 public:
  using PowerProduct = PP;

  PolyRing(VarTable vars, OrderingKind ordering) : vars_(std::move(vars)), ordering_(ordering) {}

  const VarTable& vars() const noexcept { return vars_; }
  OrderingKind ordering() const noexcept { return ordering_; }

  std::strong_ordering compare(const PP& s, const PP& t) const { return primegb::compare(s, t, ordering_, vars_); }
  bool less(const PP& s, const PP& t) const { return compare(s, t) < 0; }
  PP one() const { return PP::one(vars_); }

 private:
  VarTable vars_;
  OrderingKind ordering_;
};

template <Coefficient C, PowerProductRep PP>
struct Monomial {
  C coeff;
  PP pp;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Terms strictly descending under the ring's ordering, no zero
/// coefficients. The zero polynomial has no terms.
template <Coefficient C, PowerProductRep PP>
class Polynomial {
 public:
  using Coeff = C;
  using PowerProduct = PP;
  using Term = Monomial<C, PP>;

  Polynomial() = default;

  /// Sorts, merges equal power products and drops zero coefficients.
  static Polynomial from_terms(const PolyRing<PP>& ring, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ring.compare(a.pp, b.pp) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().pp == t.pp) {
        out.back().coeff = out.back().coeff + t.coeff;
        if (out.back().coeff.is_zero()) out.pop_back();
      } else if (!t.coeff.is_zero()) {
        out.push_back(std::move(t));
      }
    }
    return from_sorted(std::move(out));
  }

  /// Unchecked: `terms` must already satisfy the class invariant.
  static Polynomial from_sorted(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial monomial(C coeff, PP pp) {
    if (coeff.is_zero()) return {};
    return from_sorted({Term{std::move(coeff), std::move(pp)}});
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::vector<Term> release() && { return std::move(terms_); }

  const Term& leading() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return terms_.front();
  }
  const PP& leading_pp() const { return leading().pp; }
  const C& leading_coeff() const { return leading().coeff; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

template <Coefficient C, PowerProductRep PP>
Monomial<C, PP> leading_monomial(const Polynomial<C, PP>& f) {
  return f.leading();
}

namespace detail {

/// f - c * m * g over term ranges, both strictly descending.
template <Coefficient C, PowerProductRep PP>
std::vector<Monomial<C, PP>> sub_multiple(const PolyRing<PP>& ring, std::span<const Monomial<C, PP>> f, const C& c,
                                          const PP& m, std::span<const Monomial<C, PP>> g) {
  using Term = Monomial<C, PP>;
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  const bool unit_shift = m.is_one();
  std::size_t i = 0;
  std::size_t j = 0;
  PP shifted;
  if (j < g.size()) shifted = unit_shift ? g[j].pp : mul(m, g[j].pp);
  while (i < f.size() && j < g.size()) {
    const auto order = ring.compare(f[i].pp, shifted);
    if (order > 0) {
      out.push_back(f[i++]);
      continue;
    }
    if (order < 0) {
      out.push_back(Term{-(c * g[j].coeff), std::move(shifted)});
    } else {
      C v = f[i].coeff - c * g[j].coeff;
      if (!v.is_zero()) out.push_back(Term{std::move(v), std::move(shifted)});
      ++i;
    }
    if (++j < g.size()) shifted = unit_shift ? g[j].pp : mul(m, g[j].pp);
  }
  out.insert(out.end(), f.begin() + static_cast<std::ptrdiff_t>(i), f.end());
  for (; j < g.size(); ++j) {
    out.push_back(Term{-(c * g[j].coeff), unit_shift ? g[j].pp : mul(m, g[j].pp)});
  }
  return out;
}

template <class T>
const T& deref(const T& x) {
  return x;
}
template <class T>
const T& deref(const T* x) {
  return *x;
}
template <class T>
const T& deref(const std::unique_ptr<T>& x) {
  return *x;
}

struct NoObserver {
  template <class PP>
  void operator()(const PP&) const noexcept {}
};

}  // namespace detail

template <Coefficient C, PowerProductRep PP>
Polynomial<C, PP> add(const PolyRing<PP>& ring, const Polynomial<C, PP>& f, const Polynomial<C, PP>& g) {
  return Polynomial<C, PP>::from_sorted(detail::sub_multiple(ring, f.terms(), C(-1), ring.one(), g.terms()));
}

template <Coefficient C, PowerProductRep PP>
Polynomial<C, PP> sub(const PolyRing<PP>& ring, const Polynomial<C, PP>& f, const Polynomial<C, PP>& g) {
  return Polynomial<C, PP>::from_sorted(detail::sub_multiple(ring, f.terms(), C(1), ring.one(), g.terms()));
}

/// c * f; the zero polynomial when c = 0.
template <Coefficient C, PowerProductRep PP>
Polynomial<C, PP> scale(const Polynomial<C, PP>& f, const C& c) {
  if (c.is_zero()) return {};
  std::vector<Monomial<C, PP>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.coeff * c, t.pp});
  return Polynomial<C, PP>::from_sorted(std::move(out));
}

/// m * f. Multiplying by a power product preserves term order under any
/// admissible ordering, so no re-sort is needed.
template <Coefficient C, PowerProductRep PP>
Polynomial<C, PP> mul_monomial(const Polynomial<C, PP>& f, const Monomial<C, PP>& m) {
  if (m.coeff.is_zero()) return {};
  std::vector<Monomial<C, PP>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.coeff * m.coeff, mul(t.pp, m.pp)});
  return Polynomial<C, PP>::from_sorted(std::move(out));
}

template <Coefficient C, PowerProductRep PP>
Polynomial<C, PP> make_monic(const Polynomial<C, PP>& f) {
  const C& lc = f.leading_coeff();
  if (lc.is_one()) return f;
  return scale(f, lc.inverse());
}

/// (L / lm(f)) f - (L / lm(g)) g with L = lcm(lpp(f), lpp(g)); the leading
/// terms cancel exactly and are never materialised.
template <Coefficient C, PowerProductRep PP>
Polynomial<C, PP> s_polynomial(const PolyRing<PP>& ring, const Polynomial<C, PP>& f, const Polynomial<C, PP>& g) {
  const PP l = lcm(f.leading_pp(), g.leading_pp());
  const PP mf = divide(l, f.leading_pp());
  const PP mg = divide(l, g.leading_pp());
  const auto f_tail = f.terms().subspan(1);
  const auto g_tail = g.terms().subspan(1);
  std::vector<Monomial<C, PP>> scaled_f;
  scaled_f.reserve(f_tail.size());
  const C cf = f.leading_coeff().inverse();
  for (const auto& t : f_tail) scaled_f.push_back({t.coeff * cf, mf.is_one() ? t.pp : mul(mf, t.pp)});
  return Polynomial<C, PP>::from_sorted(
      detail::sub_multiple<C, PP>(ring, scaled_f, g.leading_coeff().inverse(), mg, g_tail));
}

/// Fully reduces p by `reducers` (any range of polynomials or pointers to
/// them): every term of the result is irreducible. The highest reducible
/// term is always reduced next, by the first reducer in range order whose
/// leading power product divides it. `observe` sees each reduced power
/// product.
template <Coefficient C, PowerProductRep PP, class Range, class Observer = detail::NoObserver>
Polynomial<C, PP> normal_form(const PolyRing<PP>& ring, const Range& reducers, Polynomial<C, PP> p,
                              const Deadline& deadline = {}, Observer&& observe = {}) {
  using Term = Monomial<C, PP>;
  std::vector<const Polynomial<C, PP>*> divisors;
  for (const auto& r : reducers) {
    const Polynomial<C, PP>& f = detail::deref(r);
    if (f.is_zero()) throw ZeroPolynomial();
    divisors.push_back(&f);
  }
  std::vector<Term> remainder;
  std::vector<Term> current = std::move(p).release();
  std::size_t pos = 0;
  while (pos < current.size()) {
    const Term& head = current[pos];
    const Polynomial<C, PP>* divisor = nullptr;
    for (const auto* f : divisors) {
      if (divides(f->leading_pp(), head.pp)) {
        divisor = f;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(std::move(current[pos++]));
      continue;
    }
    deadline.poll();
    observe(head.pp);
    const C c = divisor->leading_coeff().is_one() ? head.coeff : head.coeff / divisor->leading_coeff();
    const PP m = divide(head.pp, divisor->leading_pp());
    const std::span<const Term> rest = std::span<const Term>(current).subspan(pos + 1);
    current = detail::sub_multiple<C, PP>(ring, rest, c, m, divisor->terms().subspan(1));
    pos = 0;
  }
  return Polynomial<C, PP>::from_sorted(std::move(remainder));
}

/// Structural invariant check: strictly descending, no zero coefficients.
template <Coefficient C, PowerProductRep PP>
bool is_well_formed(const PolyRing<PP>& ring, const Polynomial<C, PP>& f) {
  const auto terms = f.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff.is_zero()) return false;
    if (i > 0 && ring.compare(terms[i - 1].pp, terms[i].pp) <= 0) return false;
  }
  return true;
}

/// Canonical text: terms descending, " + " / " - " separators, unit
/// coefficients omitted before a non-trivial power product.
template <Coefficient C, PowerProductRep PP>
std::string to_string(const PolyRing<PP>& ring, const Polynomial<C, PP>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    C c = t.coeff;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) c = -c;
    const bool unit = t.pp.is_one();
    if (!c.is_one() || unit) out += c.to_string();
    if (!unit) out += to_string(t.pp, ring.vars());
    first = false;
  }
  return out;
}

}  // namespace primegb
