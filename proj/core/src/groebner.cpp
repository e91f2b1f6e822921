#include "primegb/groebner.hpp"

namespace primegb {

namespace {

template <Coefficient C, PowerProductRep PP>
GroebnerResult run(const PolySystem& input, OrderingKind ordering, const EngineOptions& options) {
  using Clock = std::chrono::steady_clock;
  const PolyRing<PP> ring(input.vars, ordering);
  const auto start = Clock::now();
  std::vector<Polynomial<C, PP>> polys;
  polys.reserve(input.polynomials.size());
  for (const auto& p : input.polynomials) polys.push_back(from_sparse<C, PP>(ring, p));
  GroebnerEngine<C, PP> engine(ring, options);
  const auto basis = engine.run(std::move(polys));
  const auto stop = Clock::now();

  GroebnerResult result{input.vars, ordering, C::backend, PP::representation, {}, engine.stats(), stop - start};
  result.basis.reserve(basis.size());
  for (const auto& f : basis) result.basis.push_back(to_sparse(ring, f));
  return result;
}

template <Coefficient C>
GroebnerResult dispatch(const PolySystem& input, OrderingKind ordering, const EngineOptions& options) {
  switch (options.representation.value_or(default_representation(ordering))) {
    case Representation::ExpandedString:
      return run<C, ExpandedString>(input, ordering, options);
    case Representation::ExponentVector:
      return run<C, ExponentVector>(input, ordering, options);
    case Representation::PrimeImage:
      return run<C, PrimeImage>(input, ordering, options);
  }
  throw Error("unknown representation");
}

}  // namespace

Representation default_representation(OrderingKind ordering) {
  switch (ordering) {
    case OrderingKind::TotalDegree:
    case OrderingKind::DegLex:
      return Representation::ExpandedString;
    case OrderingKind::PrimeBased:
      return Representation::PrimeImage;
    case OrderingKind::Lex:
      return Representation::ExponentVector;
  }
  return Representation::ExponentVector;
}

GroebnerResult compute_groebner(const PolySystem& input, OrderingKind ordering, CoeffBackend backend,
                                const EngineOptions& options) {
  if (input.polynomials.empty()) throw Error("empty input system");
  if (backend == CoeffBackend::Fixed64) return dispatch<Rational64>(input, ordering, options);
  return dispatch<RationalBig>(input, ordering, options);
}

PolySystem as_system(const GroebnerResult& result, std::string name) {
  return PolySystem{std::move(name), result.vars, result.basis};
}

}  // namespace primegb
