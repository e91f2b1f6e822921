#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "primegb/deadline.hpp"
#include "primegb/polynomial.hpp"
#include "primegb/system.hpp"

namespace primegb {

/// Stable handle of a basis member. Ids are never reused, so a pair that
/// outlives its polynomial is detectable.
using PolyId = std::uint32_t;

struct EngineOptions {
  bool coprime_criterion = true;
  bool chain_criterion = true;
  /// Create pairs for polynomials rewritten by the inter-reduction step of
  /// NewBasis. Only tests switch this off: without it the result is not in
  /// general a Groebner basis.
  bool update_pairs_after_new_basis = true;
  /// Power-product representation; by default expanded strings for the
  /// degree orderings, prime images for the prime ordering and exponent
  /// vectors for lex.
  std::optional<Representation> representation;
  std::optional<std::chrono::milliseconds> timeout;
};

struct EngineStats {
  std::uint64_t pairs_created = 0;
  std::uint64_t pairs_skipped_coprime = 0;
  std::uint64_t pairs_skipped_chain = 0;
  std::uint64_t pairs_stale = 0;  ///< dropped because a member disappeared
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;
  std::uint64_t tail_rewrites = 0;  ///< members changed by NewBasis inter-reduction

  friend bool operator==(const EngineStats&, const EngineStats&) = default;
};

template <PowerProductRep PP>
struct CriticalPair {
  PolyId i;
  PolyId j;
  PP lcm;
};

/// Current basis in insertion order.
template <Coefficient C, PowerProductRep PP>
class Basis {
 public:
  using Poly = Polynomial<C, PP>;
  struct Entry {
    PolyId id;
    Poly f;
  };

  PolyId insert(Poly f) {
    entries_.push_back({next_id_, std::move(f)});
    return next_id_++;
  }

  const Poly* find(PolyId id) const {
    auto it = locate(id);
    return it == entries_.end() ? nullptr : &it->f;
  }

  /// Removes and returns the member.
  Poly take(PolyId id) {
    auto it = locate(id);
    Poly f = std::move(it->f);
    entries_.erase(it);
    return f;
  }

  /// Replaces the member in place under a fresh id.
  PolyId replace(PolyId id, Poly f) {
    auto it = locate(id);
    it->id = next_id_;
    it->f = std::move(f);
    return next_id_++;
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::vector<const Poly*> polys() const {
    std::vector<const Poly*> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(&e.f);
    return out;
  }

 private:
  typename std::vector<Entry>::iterator locate(PolyId id) {
    return std::find_if(entries_.begin(), entries_.end(), [id](const Entry& e) { return e.id == id; });
  }
  typename std::vector<Entry>::const_iterator locate(PolyId id) const {
    return std::find_if(entries_.begin(), entries_.end(), [id](const Entry& e) { return e.id == id; });
  }

  std::vector<Entry> entries_;
  PolyId next_id_ = 0;
};

/// Pending critical pairs, ordered by lcm under the ring's ordering and then
/// by (i, j): the minimum is the normal-strategy choice.
template <PowerProductRep PP>
class PairSet {
 public:
  using Pair = CriticalPair<PP>;

  explicit PairSet(const PolyRing<PP>& ring) : queue_(Less{&ring}) {}

  void push(Pair p) {
    keys_.emplace(p.i, p.j);
    queue_.insert(std::move(p));
  }

  Pair pop() {
    auto node = queue_.extract(queue_.begin());
    keys_.erase({node.value().i, node.value().j});
    return std::move(node.value());
  }

  bool contains(PolyId a, PolyId b) const { return keys_.contains({std::min(a, b), std::max(a, b)}); }

  /// Drops every pair involving `id`; returns how many.
  std::size_t erase_involving(PolyId id) {
    std::size_t n = 0;
    for (auto it = queue_.begin(); it != queue_.end();) {
      if (it->i == id || it->j == id) {
        keys_.erase({it->i, it->j});
        it = queue_.erase(it);
        ++n;
      } else {
        ++it;
      }
    }
    return n;
  }

  bool empty() const noexcept { return queue_.empty(); }
  std::size_t size() const noexcept { return queue_.size(); }

 private:
  struct Less {
    const PolyRing<PP>* ring;
    bool operator()(const Pair& a, const Pair& b) const {
      const auto order = ring->compare(a.lcm, b.lcm);
      if (order != 0) return order < 0;
      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    }
  };

  std::set<Pair, Less> queue_;
  std::set<std::pair<PolyId, PolyId>> keys_;
};

/// Buchberger's first criterion: coprime leading power products.
template <Coefficient C, PowerProductRep PP>
bool criterion_coprime(const CriticalPair<PP>& pair, const Basis<C, PP>& basis) {
  const auto* f = basis.find(pair.i);
  const auto* g = basis.find(pair.j);
  return gcd(f->leading_pp(), g->leading_pp()).is_one();
}

/// Buchberger's second (chain) criterion: some other member's leading power
/// product divides the pair's lcm and neither connecting pair is pending.
template <Coefficient C, PowerProductRep PP>
bool criterion_chain(const CriticalPair<PP>& pair, const PairSet<PP>& pairs, const Basis<C, PP>& basis) {
  for (const auto& e : basis.entries()) {
    if (e.id == pair.i || e.id == pair.j) continue;
    if (!divides(e.f.leading_pp(), pair.lcm)) continue;
    if (!pairs.contains(pair.i, e.id) && !pairs.contains(e.id, pair.j)) return true;
  }
  return false;
}

/// Adds (k, id) for every other member k, except pairs the coprime
/// criterion discards. Returns the number of pairs added.
template <Coefficient C, PowerProductRep PP>
std::size_t update_pairs(const Basis<C, PP>& basis, PairSet<PP>& pairs, PolyId id, const EngineOptions& options = {},
                         EngineStats* stats = nullptr) {
  const auto& lpp = basis.find(id)->leading_pp();
  std::size_t added = 0;
  for (const auto& e : basis.entries()) {
    if (e.id == id) continue;
    CriticalPair<PP> p{std::min(e.id, id), std::max(e.id, id), lcm(e.f.leading_pp(), lpp)};
    if (stats) ++stats->pairs_created;
    if (options.coprime_criterion && criterion_coprime(p, basis)) {
      if (stats) ++stats->pairs_skipped_coprime;
      continue;
    }
    pairs.push(std::move(p));
    ++added;
  }
  return added;
}

/// Turns a Groebner basis into the reduced one: drops members whose leading
/// power product is a multiple of another's, then fully reduces and
/// normalises each survivor. The result is sorted ascending.
template <Coefficient C, PowerProductRep PP>
std::vector<Polynomial<C, PP>> inter_reduce(const PolyRing<PP>& ring, std::vector<Polynomial<C, PP>> basis) {
  using Poly = Polynomial<C, PP>;
  std::erase_if(basis, [](const Poly& f) { return f.is_zero(); });
  std::sort(basis.begin(), basis.end(),
            [&](const Poly& a, const Poly& b) { return ring.less(a.leading_pp(), b.leading_pp()); });
  std::vector<Poly> kept;
  for (auto& f : basis) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Poly& g) {
      return divides(g.leading_pp(), f.leading_pp());
    });
    if (!redundant) kept.push_back(std::move(f));
  }
  std::vector<Poly> out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<const Poly*> others;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (k != i) others.push_back(&kept[k]);
    }
    out.push_back(make_monic(normal_form(ring, others, kept[i])));
  }
  return out;
}

/// Buchberger's improved algorithm with the ReduceAll / NewBasis
/// subalgorithms.
template <Coefficient C, PowerProductRep PP>
class GroebnerEngine {
 public:
  using Poly = Polynomial<C, PP>;

  GroebnerEngine(const PolyRing<PP>& ring, EngineOptions options)
      : ring_(ring),
        options_(std::move(options)),
        pairs_(ring_),
        deadline_(options_.timeout ? Deadline::after(*options_.timeout) : Deadline{}) {}

  /// Reduced Groebner basis of the ideal generated by `input`, sorted
  /// ascending by leading power product.
  std::vector<Poly> run(std::vector<Poly> input) {
    std::deque<Poly> redo;
    for (auto& f : input) {
      if (!f.is_zero()) redo.push_back(std::move(f));
    }
    std::vector<Poly> fresh;
    reduce_all(redo, fresh);
    new_basis(fresh);

    while (!pairs_.empty()) {
      deadline_.poll();
      const CriticalPair<PP> pair = pairs_.pop();
      const Poly* f = basis_.find(pair.i);
      const Poly* g = basis_.find(pair.j);
      if (f == nullptr || g == nullptr) {
        ++stats_.pairs_stale;
        continue;
      }
      if (options_.chain_criterion && criterion_chain(pair, pairs_, basis_)) {
        ++stats_.pairs_skipped_chain;
        continue;
      }
      ++stats_.pairs_reduced;
      Poly h = reduce(basis_.polys(), s_polynomial(ring_, *f, *g));
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      h = make_monic(h);
      std::deque<Poly> redo_members = remove_multiples_of(h.leading_pp());
      std::vector<Poly> next;
      next.push_back(std::move(h));
      reduce_all(redo_members, next);
      new_basis(next);
    }

    std::vector<Poly> out;
    for (const auto& e : basis_.entries()) out.push_back(e.f);
    std::sort(out.begin(), out.end(),
              [&](const Poly& a, const Poly& b) { return ring_.less(a.leading_pp(), b.leading_pp()); });
    return out;
  }

  const EngineStats& stats() const noexcept { return stats_; }

 private:
  Poly reduce(const std::vector<const Poly*>& by, Poly p) {
    return normal_form(ring_, by, std::move(p), deadline_, [this](const PP&) { ++stats_.reduction_steps; });
  }

  // Basis members whose leading power product is a multiple of `lpp` leave
  // the basis together with their pairs.
  std::deque<Poly> remove_multiples_of(const PP& lpp) {
    std::vector<PolyId> doomed;
    for (const auto& e : basis_.entries()) {
      if (divides(lpp, e.f.leading_pp())) doomed.push_back(e.id);
    }
    std::deque<Poly> out;
    for (PolyId id : doomed) {
      pairs_.erase_involving(id);
      out.push_back(basis_.take(id));
    }
    return out;
  }

  // Reduces every polynomial in `redo` against the basis and `fresh`;
  // each nonzero result joins `fresh`, displacing members (of either set)
  // whose leading power products it divides.
  void reduce_all(std::deque<Poly>& redo, std::vector<Poly>& fresh) {
    while (!redo.empty()) {
      deadline_.poll();
      auto pick = std::min_element(redo.begin(), redo.end(), [&](const Poly& a, const Poly& b) {
        return ring_.less(a.leading_pp(), b.leading_pp());
      });
      Poly h = std::move(*pick);
      redo.erase(pick);
      std::vector<const Poly*> by = basis_.polys();
      for (const auto& p : fresh) by.push_back(&p);
      h = reduce(by, std::move(h));
      if (h.is_zero()) continue;
      h = make_monic(h);
      for (auto& g : remove_multiples_of(h.leading_pp())) redo.push_back(std::move(g));
      for (auto it = fresh.begin(); it != fresh.end();) {
        if (divides(h.leading_pp(), it->leading_pp())) {
          redo.push_back(std::move(*it));
          it = fresh.erase(it);
        } else {
          ++it;
        }
      }
      fresh.push_back(std::move(h));
    }
  }

  // Adds `fresh` to the basis with their pairs, then reduces every member
  // against the rest. Leading power products are already mutually
  // irreducible, so only tails change and one pass reaches the fixed point.
  void new_basis(std::vector<Poly>& fresh) {
    for (auto& p : fresh) {
      const PolyId id = basis_.insert(std::move(p));
      update_pairs(basis_, pairs_, id, options_, &stats_);
    }
    fresh.clear();

    std::vector<PolyId> ids;
    for (const auto& e : basis_.entries()) ids.push_back(e.id);
    for (PolyId id : ids) {
      deadline_.poll();
      const Poly* h = basis_.find(id);
      std::vector<const Poly*> others;
      for (const auto& e : basis_.entries()) {
        if (e.id != id) others.push_back(&e.f);
      }
      Poly k = reduce(others, *h);
      if (k == *h) continue;
      ++stats_.tail_rewrites;
      k = make_monic(k);
      const PolyId renewed = basis_.replace(id, std::move(k));
      if (options_.update_pairs_after_new_basis) {
        pairs_.erase_involving(id);
        update_pairs(basis_, pairs_, renewed, options_, &stats_);
      }
    }
  }

  const PolyRing<PP>& ring_;
  EngineOptions options_;
  Basis<C, PP> basis_;
  PairSet<PP> pairs_;
  Deadline deadline_;
  EngineStats stats_;
};

template <Coefficient C, PowerProductRep PP>
std::vector<Polynomial<C, PP>> groebner_basis(const PolyRing<PP>& ring, std::vector<Polynomial<C, PP>> input,
                                              const EngineOptions& options = {}, EngineStats* stats = nullptr) {
  GroebnerEngine<C, PP> engine(ring, options);
  auto out = engine.run(std::move(input));
  if (stats) *stats = engine.stats();
  return out;
}

struct GroebnerResult {
  VarTable vars;
  OrderingKind ordering;
  CoeffBackend backend;
  Representation representation;
  /// Monic, ascending by leading power product; terms descending.
  std::vector<SparsePolynomial> basis;
  EngineStats stats;
  std::chrono::nanoseconds duration{0};
};

Representation default_representation(OrderingKind ordering);

/// Reduced Groebner basis of `input` under `ordering`.
///
/// Throws CoefficientOverflow (Fixed64 backend), ImageOverflow (prime
/// images past 64 bits) or Timeout.
GroebnerResult compute_groebner(const PolySystem& input, OrderingKind ordering, CoeffBackend backend,
                                const EngineOptions& options = {});

/// The basis as a system over the same variables, e.g. for printing.
PolySystem as_system(const GroebnerResult& result, std::string name = {});

}  // namespace primegb
