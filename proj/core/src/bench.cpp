#include "primegb/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "primegb/corpus.hpp"
#include "primegb/verify.hpp"

namespace primegb {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2;
}

std::string format_double(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, x);
  return buf;
}

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string cell(const BenchRecord* r) {
  if (r == nullptr) return "";
  switch (r->outcome) {
    case Outcome::Ok:
      return format_double(*r->duration_ms, 2) + "/" + std::to_string(*r->basis_size);
    case Outcome::CoefficientOverflow:
      return "overflow";
    case Outcome::ImageOverflow:
      return "image overflow";
    case Outcome::Timeout:
      return "timeout";
  }
  return "";
}

const BenchRecord* find(const std::vector<BenchRecord>& records, std::string_view system, std::string_view perm,
                        OrderingKind ordering, CoeffBackend backend) {
  for (const auto& r : records) {
    if (r.system == system && r.permutation == perm && r.ordering == ordering && r.backend == backend) return &r;
  }
  return nullptr;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  for (char c : line) {
    if (c == ',') {
      out.emplace_back();
    } else if (c != '\r') {
      out.back() += c;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Ok:
      return "ok";
    case Outcome::CoefficientOverflow:
      return "coefficient_overflow";
    case Outcome::ImageOverflow:
      return "image_overflow";
    case Outcome::Timeout:
      return "timeout";
  }
  return "?";
}

std::optional<Outcome> parse_outcome(std::string_view text) {
  for (Outcome o : {Outcome::Ok, Outcome::CoefficientOverflow, Outcome::ImageOverflow, Outcome::Timeout}) {
    if (to_string(o) == text) return o;
  }
  return std::nullopt;
}

BenchRecord run_case(const PolySystem& system, OrderingKind ordering, CoeffBackend backend,
                     const BenchConfig& config) {
  BenchRecord record{system.name, ordering, backend, system.vars.names(), Outcome::Ok, {}, {}, 0};
  EngineOptions options;
  options.timeout = config.timeout;
  try {
    const GroebnerResult warm = compute_groebner(system, ordering, backend, options);
    const VerifyReport report = verify(system, warm);
    if (!report.ok()) {
      throw VerificationFailure(system.name + " (" + std::string(to_string(ordering)) + ", " +
                                std::string(to_string(backend)) + ")\n" + to_string(report));
    }
    std::vector<double> times;
    for (unsigned k = 0; k < std::max(config.repeats, 1u); ++k) {
      const auto start = Clock::now();
      const GroebnerResult r = compute_groebner(system, ordering, backend, options);
      const auto stop = Clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
      if (r.basis != warm.basis) throw VerificationFailure(system.name + ": non-deterministic basis");
    }
    record.basis_size = warm.basis.size();
    record.duration_ms = median(std::move(times));
    record.repeats = std::max(config.repeats, 1u);
  } catch (const CoefficientOverflow&) {
    record.outcome = Outcome::CoefficientOverflow;
  } catch (const ImageOverflow&) {
    record.outcome = Outcome::ImageOverflow;
  } catch (const Timeout&) {
    record.outcome = Outcome::Timeout;
  }
  if (config.on_record) config.on_record(record);
  return record;
}

std::vector<BenchRecord> run_table1(const BenchConfig& config) {
  std::vector<std::string> systems = config.systems;
  if (systems.empty()) {
    for (const auto& e : corpus()) systems.emplace_back(e.id);
  }
  std::vector<BenchRecord> out;
  for (const auto& name : systems) {
    const PolySystem system = builtin(name);
    for (CoeffBackend backend : config.backends) {
      for (OrderingKind ordering : config.orderings) out.push_back(run_case(system, ordering, backend, config));
    }
  }
  return out;
}

std::optional<double> reduction_percent(const BenchRecord& total_degree, const BenchRecord& prime) {
  if (!total_degree.duration_ms || !prime.duration_ms || *total_degree.duration_ms <= 0) return std::nullopt;
  return (1.0 - *prime.duration_ms / *total_degree.duration_ms) * 100.0;
}

std::string render_table1(const std::vector<BenchRecord>& records) {
  std::vector<std::pair<std::string, std::string>> rows;  // (system, permutation) in first-seen order
  for (const auto& r : records) {
    std::pair key{r.system, r.permutation};
    if (std::find(rows.begin(), rows.end(), key) == rows.end()) rows.push_back(key);
  }
  std::ostringstream out;
  out << "| system | order | i64 tdeg | i64 prime | i64 red. % | big tdeg | big prime | big red. % |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& [system, perm] : rows) {
    out << "| " << system << " | " << perm;
    for (CoeffBackend b : {CoeffBackend::Fixed64, CoeffBackend::ArbitraryPrecision}) {
      const BenchRecord* t = find(records, system, perm, OrderingKind::TotalDegree, b);
      const BenchRecord* p = find(records, system, perm, OrderingKind::PrimeBased, b);
      std::optional<double> red;
      if (t && p) red = reduction_percent(*t, *p);
      out << " | " << cell(t) << " | " << cell(p) << " | " << (red ? format_double(*red, 1) : "");
    }
    out << " |\n";
  }
  return out.str();
}

std::vector<BenchRecord> run_permutations(const PolySystem& system, const BenchConfig& config) {
  if (system.vars.size() > 6) throw Error("run_permutations: more than 6 variables");
  std::string order = system.vars.names();
  std::sort(order.begin(), order.end());
  std::vector<BenchRecord> out;
  do {
    const PolySystem permuted = permute_vars(system, order);
    for (CoeffBackend backend : config.backends) {
      for (OrderingKind ordering : config.orderings) out.push_back(run_case(permuted, ordering, backend, config));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::optional<double> max_min_ratio(const std::vector<BenchRecord>& records, OrderingKind ordering,
                                    CoeffBackend backend) {
  std::optional<double> lo;
  std::optional<double> hi;
  for (const auto& r : records) {
    if (r.ordering != ordering || r.backend != backend || !r.duration_ms) continue;
    lo = std::min(lo.value_or(*r.duration_ms), *r.duration_ms);
    hi = std::max(hi.value_or(*r.duration_ms), *r.duration_ms);
  }
  if (!lo || *lo <= 0) return std::nullopt;
  return *hi / *lo;
}

std::string render_permutations(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << render_table1(records);
  out << "| max/min | ";
  for (CoeffBackend b : {CoeffBackend::Fixed64, CoeffBackend::ArbitraryPrecision}) {
    for (OrderingKind o : {OrderingKind::TotalDegree, OrderingKind::PrimeBased}) {
      const auto ratio = max_min_ratio(records, o, b);
      out << " | " << (ratio ? format_double(*ratio, 1) : "");
    }
    out << " | ";
  }
  out << "|\n";
  return out.str();
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "system,ordering,backend,permutation,outcome,basis_size,duration_ms,repeats\n";
  for (const auto& r : records) {
    out << r.system << ',' << to_string(r.ordering) << ',' << to_string(r.backend) << ',' << r.permutation << ','
        << to_string(r.outcome) << ',' << (r.basis_size ? std::to_string(*r.basis_size) : "") << ','
        << (r.duration_ms ? shortest(*r.duration_ms) : "") << ',' << r.repeats << '\n';
  }
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::vector<BenchRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 8) throw ParseError("expected 8 fields", line_no, 1);
    BenchRecord r;
    r.system = f[0];
    const auto ordering = parse_ordering(f[1]);
    const auto outcome = parse_outcome(f[4]);
    if (!ordering) throw ParseError("unknown ordering '" + f[1] + "'", line_no, 1);
    if (!outcome) throw ParseError("unknown outcome '" + f[4] + "'", line_no, 1);
    if (f[2] == "i64") {
      r.backend = CoeffBackend::Fixed64;
    } else if (f[2] == "big") {
      r.backend = CoeffBackend::ArbitraryPrecision;
    } else {
      throw ParseError("unknown backend '" + f[2] + "'", line_no, 1);
    }
    r.ordering = *ordering;
    r.permutation = f[3];
    r.outcome = *outcome;
    try {
      if (!f[5].empty()) r.basis_size = std::stoul(f[5]);
      if (!f[6].empty()) r.duration_ms = std::stod(f[6]);
      r.repeats = static_cast<unsigned>(std::stoul(f[7]));
    } catch (const std::exception&) {
      throw ParseError("malformed number", line_no, 1);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace primegb
