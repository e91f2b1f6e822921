#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "primegb/groebner.hpp"
#include "primegb/polynomial.hpp"
#include "primegb/system.hpp"

namespace primegb {

enum class Condition { Groebner, Reduced, IdealPreserved };

std::string_view to_string(Condition condition);

/// One violated condition: the offending basis pair (Groebner), member
/// (Reduced) or input polynomial (IdealPreserved), and the nonzero residue.
struct Witness {
  Condition condition;
  std::vector<std::size_t> indices;
  std::string residue;
};

struct VerifyReport {
  bool groebner_ok = true;
  bool reduced_ok = true;
  bool ideal_ok = true;
  std::vector<Witness> failures;

  bool ok() const noexcept { return groebner_ok && reduced_ok && ideal_ok; }
};

/// Every S-polynomial of two members reduces to zero modulo the set.
template <Coefficient C, PowerProductRep PP>
std::vector<Witness> check_groebner(const PolyRing<PP>& ring, const std::vector<Polynomial<C, PP>>& basis,
                                    const Deadline& deadline = {}) {
  std::vector<Witness> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto r = normal_form(ring, basis, s_polynomial(ring, basis[i], basis[j]), deadline);
      if (!r.is_zero()) out.push_back({Condition::Groebner, {i, j}, to_string(ring, r)});
    }
  }
  return out;
}

/// Every member is monic and is its own normal form modulo the others.
template <Coefficient C, PowerProductRep PP>
std::vector<Witness> check_reduced(const PolyRing<PP>& ring, const std::vector<Polynomial<C, PP>>& basis,
                                   const Deadline& deadline = {}) {
  std::vector<Witness> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) {
      out.push_back({Condition::Reduced, {i}, "0"});
      continue;
    }
    std::vector<const Polynomial<C, PP>*> others;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k != i && !basis[k].is_zero()) others.push_back(&basis[k]);
    }
    const auto r = normal_form(ring, others, basis[i], deadline);
    if (r != basis[i] || !basis[i].leading_coeff().is_one()) {
      out.push_back({Condition::Reduced, {i}, to_string(ring, r)});
    }
  }
  return out;
}

/// Every input polynomial reduces to zero modulo the basis.
template <Coefficient C, PowerProductRep PP>
std::vector<Witness> check_ideal_preserved(const PolyRing<PP>& ring, const std::vector<Polynomial<C, PP>>& input,
                                           const std::vector<Polynomial<C, PP>>& basis,
                                           const Deadline& deadline = {}) {
  std::vector<Witness> out;
  for (std::size_t i = 0; i < input.size(); ++i) {
    const auto r = normal_form(ring, basis, input[i], deadline);
    if (!r.is_zero()) out.push_back({Condition::IdealPreserved, {i}, to_string(ring, r)});
  }
  return out;
}

/// Runs all three checks with exact coefficients and exponent vectors,
/// independently of the representation the basis was computed with.
/// `basis` and `input` may declare their variables in different orders;
/// the basis's order is used.
VerifyReport verify(const PolySystem& input, const PolySystem& basis, OrderingKind ordering,
                    const Deadline& deadline = {});
VerifyReport verify(const PolySystem& input, const GroebnerResult& result, const Deadline& deadline = {});

/// Human-readable summary, one line per condition plus one per witness.
std::string to_string(const VerifyReport& report);

}  // namespace primegb
