#include "primegb/system.hpp"

#include <algorithm>

namespace primegb {

SparsePolynomial normalize(SparsePolynomial p, OrderingKind ordering, const VarTable& vars) {
  std::sort(p.begin(), p.end(), [&](const SparseTerm& a, const SparseTerm& b) {
    return compare_exponents(a.exps, b.exps, ordering, vars) > 0;
  });
  SparsePolynomial out;
  out.reserve(p.size());
  for (auto& t : p) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff += t.coeff;
      if (sgn(out.back().coeff) == 0) out.pop_back();
    } else if (sgn(t.coeff) != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

PolySystem permute_vars(const PolySystem& system, std::string_view order) {
  const VarTable target = system.vars.permuted(order);
  std::vector<std::size_t> to_target(system.vars.size());
  for (std::size_t i = 0; i < system.vars.size(); ++i) to_target[i] = *target.index_of(system.vars.name(i));
  PolySystem out{system.name, target, {}};
  out.polynomials.reserve(system.polynomials.size());
  for (const auto& p : system.polynomials) {
    SparsePolynomial q;
    q.reserve(p.size());
    for (const auto& t : p) {
      Exponents e(t.exps.size(), 0);
      for (std::size_t i = 0; i < t.exps.size(); ++i) e[to_target[i]] = t.exps[i];
      q.push_back({t.coeff, std::move(e)});
    }
    out.polynomials.push_back(std::move(q));
  }
  return out;
}

bool same_polynomials(const PolySystem& a, const PolySystem& b) {
  if (a.polynomials.size() != b.polynomials.size() || a.vars.size() != b.vars.size()) return false;
  PolySystem mapped;
  try {
    mapped = permute_vars(b, a.vars.names());
  } catch (const InvalidPermutation&) {
    return false;
  }
  auto canonical = [&](const std::vector<SparsePolynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(to_string(normalize(p, OrderingKind::Lex, a.vars), a.vars));
    std::sort(out.begin(), out.end());
    return out;
  };
  return canonical(a.polynomials) == canonical(mapped.polynomials);
}

std::string to_string(const SparsePolynomial& p, const VarTable& vars) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const mpq_class magnitude = abs(t.coeff);
    const bool unit = std::all_of(t.exps.begin(), t.exps.end(), [](Exponent e) { return e == 0; });
    if (magnitude != 1 || unit) out += format_mpq(magnitude);
    if (!unit) out += format_exponents(t.exps, vars);
    first = false;
  }
  return out;
}

std::string render_system(const PolySystem& system) {
  std::string out;
  for (const auto& p : system.polynomials) {
    out += to_string(p, system.vars);
    out += '\n';
  }
  return out;
}

}  // namespace primegb
