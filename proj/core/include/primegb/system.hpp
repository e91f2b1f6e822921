#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "primegb/polynomial.hpp"
#include "primegb/power_product.hpp"

namespace primegb {

/// Representation- and ordering-agnostic term: exact coefficient plus one
/// exponent per variable of the owning table.
struct SparseTerm {
  mpq_class coeff;
  Exponents exps;

  friend bool operator==(const SparseTerm& a, const SparseTerm& b) { return a.coeff == b.coeff && a.exps == b.exps; }
};

using SparsePolynomial = std::vector<SparseTerm>;

/// A named polynomial system over a declared variable order.
struct PolySystem {
  std::string name;
  VarTable vars;
  std::vector<SparsePolynomial> polynomials;
};

/// Sorts terms descending under `ordering`, merges duplicates and drops
/// zeros.
SparsePolynomial normalize(SparsePolynomial p, OrderingKind ordering, const VarTable& vars);

/// Re-declares the variable order; every exponent vector is remapped so the
/// abstract polynomials are unchanged.
PolySystem permute_vars(const PolySystem& system, std::string_view order);

/// Equality of two systems as sets of abstract polynomials, matching
/// variables by name (declared order may differ).
bool same_polynomials(const PolySystem& a, const PolySystem& b);

std::string to_string(const SparsePolynomial& p, const VarTable& vars);

/// One line per polynomial, parseable by parse_system().
std::string render_system(const PolySystem& system);

template <Coefficient C, PowerProductRep PP>
Polynomial<C, PP> from_sparse(const PolyRing<PP>& ring, const SparsePolynomial& p) {
  std::vector<Monomial<C, PP>> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({C::from_mpq(t.coeff), PP::from_exponents(t.exps, ring.vars())});
  return Polynomial<C, PP>::from_terms(ring, std::move(terms));
}

template <Coefficient C, PowerProductRep PP>
SparsePolynomial to_sparse(const PolyRing<PP>& ring, const Polynomial<C, PP>& f) {
  SparsePolynomial out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({mpq_class(t.coeff.to_mpq()), exponents(t.pp, ring.vars())});
  return out;
}

}  // namespace primegb
