#pragma once

#include <string_view>
#include <vector>

#include "primegb/corpus.hpp"
#include "primegb/polynomial.hpp"
#include "primegb/system.hpp"

namespace testing {

template <class C, class PP>
primegb::Polynomial<C, PP> poly(const primegb::PolyRing<PP>& ring, std::string_view text) {
  const auto sys = primegb::parse_system(text, ring.vars().names());
  return primegb::from_sparse<C, PP>(ring, sys.polynomials.at(0));
}

template <class C, class PP>
std::vector<primegb::Polynomial<C, PP>> polys(const primegb::PolyRing<PP>& ring, std::string_view text) {
  const auto sys = primegb::parse_system(text, ring.vars().names());
  std::vector<primegb::Polynomial<C, PP>> out;
  for (const auto& p : sys.polynomials) out.push_back(primegb::from_sparse<C, PP>(ring, p));
  return out;
}

template <class C, class PP>
std::string str(const primegb::PolyRing<PP>& ring, const primegb::Polynomial<C, PP>& f) {
  return primegb::to_string(ring, f);
}

}  // namespace testing
