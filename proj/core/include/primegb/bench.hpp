#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primegb/groebner.hpp"
#include "primegb/system.hpp"

namespace primegb {

enum class Outcome { Ok, CoefficientOverflow, ImageOverflow, Timeout };

std::string_view to_string(Outcome outcome);
std::optional<Outcome> parse_outcome(std::string_view text);

/// One timed configuration. basis_size and duration_ms are set iff the
/// outcome is Ok.
struct BenchRecord {
  std::string system;
  OrderingKind ordering = OrderingKind::PrimeBased;
  CoeffBackend backend = CoeffBackend::ArbitraryPrecision;
  std::string permutation;  ///< declared variable order, names[0] first
  Outcome outcome = Outcome::Ok;
  std::optional<std::size_t> basis_size;
  std::optional<double> duration_ms;  ///< median over `repeats` runs
  unsigned repeats = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct BenchConfig {
  std::vector<std::string> systems;  ///< empty: the whole corpus
  std::vector<OrderingKind> orderings{OrderingKind::TotalDegree, OrderingKind::PrimeBased};
  std::vector<CoeffBackend> backends{CoeffBackend::Fixed64, CoeffBackend::ArbitraryPrecision};
  unsigned repeats = 5;
  std::chrono::milliseconds timeout{std::chrono::minutes(10)};
  /// Called after every finished record, e.g. for progress output.
  std::function<void(const BenchRecord&)> on_record;
};

/// A benchmarked basis failed verification.
class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(const std::string& what) : Error("verification failed: " + what) {}
};

/// One warm-up run (verified), then `repeats` timed runs; the recorded
/// duration is their median. Engine failures become outcomes; a basis that
/// fails verification throws VerificationFailure.
BenchRecord run_case(const PolySystem& system, OrderingKind ordering, CoeffBackend backend,
                     const BenchConfig& config);

/// Every configured system x ordering x backend, in corpus order.
std::vector<BenchRecord> run_table1(const BenchConfig& config);

/// (1 - prime / total) * 100; empty unless both records completed.
std::optional<double> reduction_percent(const BenchRecord& total_degree, const BenchRecord& prime);

/// Markdown table: one row per system; per backend the total-degree and
/// prime cells ("ms/size" or the failure) and the reduction percentage.
std::string render_table1(const std::vector<BenchRecord>& records);

/// All n! variable orders of `system` (n <= 6) under every configured
/// ordering and backend.
std::vector<BenchRecord> run_permutations(const PolySystem& system, const BenchConfig& config);

/// Slowest over fastest completed duration for one ordering and backend.
std::optional<double> max_min_ratio(const std::vector<BenchRecord>& records, OrderingKind ordering,
                                    CoeffBackend backend);

/// Markdown table: one row per permutation plus a max/min row.
std::string render_permutations(const std::vector<BenchRecord>& records);

/// Header: system,ordering,backend,permutation,outcome,basis_size,duration_ms,repeats
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
/// Inverse of write_csv; throws ParseError on malformed rows.
std::vector<BenchRecord> read_csv(std::istream& in);

}  // namespace primegb
