#include "primegb/verify.hpp"

namespace primegb {

std::string_view to_string(Condition condition) {
  switch (condition) {
    case Condition::Groebner:
      return "groebner";
    case Condition::Reduced:
      return "reduced";
    case Condition::IdealPreserved:
      return "ideal";
  }
  return "?";
}

VerifyReport verify(const PolySystem& input, const PolySystem& basis, OrderingKind ordering,
                    const Deadline& deadline) {
  using Poly = Polynomial<RationalBig, ExponentVector>;
  const PolyRing<ExponentVector> ring(basis.vars, ordering);
  const PolySystem aligned = permute_vars(input, basis.vars.names());
  auto lift = [&](const std::vector<SparsePolynomial>& ps) {
    std::vector<Poly> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(from_sparse<RationalBig, ExponentVector>(ring, p));
    return out;
  };
  const auto g = lift(basis.polynomials);
  const auto f = lift(aligned.polynomials);

  VerifyReport report;
  auto absorb = [&](std::vector<Witness> w, bool& flag) {
    flag = w.empty();
    for (auto& x : w) report.failures.push_back(std::move(x));
  };
  absorb(check_groebner(ring, g, deadline), report.groebner_ok);
  absorb(check_reduced(ring, g, deadline), report.reduced_ok);
  absorb(check_ideal_preserved(ring, f, g, deadline), report.ideal_ok);
  return report;
}

VerifyReport verify(const PolySystem& input, const GroebnerResult& result, const Deadline& deadline) {
  return verify(input, as_system(result), result.ordering, deadline);
}

std::string to_string(const VerifyReport& report) {
  auto verdict = [](bool ok) { return ok ? "ok" : "FAILED"; };
  std::string out;
  out += std::string("groebner (S-polynomials reduce to 0): ") + verdict(report.groebner_ok) + "\n";
  out += std::string("reduced (members monic and irreducible): ") + verdict(report.reduced_ok) + "\n";
  out += std::string("ideal (inputs reduce to 0): ") + verdict(report.ideal_ok) + "\n";
  for (const auto& w : report.failures) {
    out += "  ";
    out += to_string(w.condition);
    out += " [";
    for (std::size_t k = 0; k < w.indices.size(); ++k) {
      if (k > 0) out += ",";
      out += std::to_string(w.indices[k]);
    }
    out += "] residue " + w.residue + "\n";
  }
  return out;
}

}  // namespace primegb
