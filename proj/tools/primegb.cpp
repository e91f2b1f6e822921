// primegb: reduced Groebner bases over Q with prime-based or total-degree
// power products.
//
//   primegb run    --system cyclic-4 --ordering prime --backend i64
//   primegb verify --input sys.txt --var-order xyz --ordering tdeg
//   primegb bench table1 --repeats 5 --format md
//   primegb bench permute --system example-2

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "primegb/bench.hpp"
#include "primegb/corpus.hpp"
#include "primegb/groebner.hpp"
#include "primegb/verify.hpp"

namespace {

using namespace primegb;
using nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kCapacity = 3 };

struct Selection {
  std::string system;
  std::string input;
  std::string var_order;
  std::string ordering = "prime";
  std::string backend = "big";
  double timeout_s = 600;
  bool json = false;
};

void add_selection(CLI::App* cmd, Selection& s) {
  auto* sys = cmd->add_option("--system", s.system, "Built-in system (see `primegb list`)");
  auto* in = cmd->add_option("--input", s.input, "System file, one polynomial per line");
  sys->excludes(in);
  cmd->add_option("--var-order", s.var_order, "Variable order, first variable maps to 2 (e.g. acb)");
  cmd->add_option("--ordering", s.ordering, "prime | tdeg | deglex | lex")
      ->check(CLI::IsMember({"prime", "tdeg", "deglex", "lex"}))
      ->capture_default_str();
  cmd->add_option("--backend", s.backend, "Coefficients: i64 | big")
      ->check(CLI::IsMember({"i64", "big"}))
      ->capture_default_str();
  cmd->add_option("--timeout", s.timeout_s, "Seconds before giving up")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_flag("--json", s.json, "Machine-readable output");
}

CoeffBackend backend_of(const std::string& s) {
  return s == "i64" ? CoeffBackend::Fixed64 : CoeffBackend::ArbitraryPrecision;
}

std::chrono::milliseconds millis(double seconds) {
  return std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
}

PolySystem load(const Selection& s) {
  PolySystem sys;
  if (!s.input.empty()) {
    std::ifstream f(s.input);
    if (!f) throw Error("cannot open " + s.input);
    std::stringstream text;
    text << f.rdbuf();
    sys = parse_system(text.str(), {}, s.input);
  } else if (!s.system.empty()) {
    sys = builtin(s.system);
  } else {
    throw Error("one of --system or --input is required");
  }
  if (!s.var_order.empty()) sys = permute_vars(sys, s.var_order);
  return sys;
}

json stats_json(const EngineStats& st) {
  return {{"pairs_created", st.pairs_created},
          {"pairs_skipped_coprime", st.pairs_skipped_coprime},
          {"pairs_skipped_chain", st.pairs_skipped_chain},
          {"pairs_reduced", st.pairs_reduced},
          {"zero_reductions", st.zero_reductions},
          {"reduction_steps", st.reduction_steps},
          {"tail_rewrites", st.tail_rewrites}};
}

json report_json(const VerifyReport& r) {
  json failures = json::array();
  for (const auto& w : r.failures) {
    failures.push_back({{"condition", to_string(w.condition)}, {"indices", w.indices}, {"residue", w.residue}});
  }
  return {{"groebner_ok", r.groebner_ok},
          {"reduced_ok", r.reduced_ok},
          {"ideal_ok", r.ideal_ok},
          {"failures", failures}};
}

int cmd_run(const Selection& s, bool print_basis, bool check) {
  const PolySystem sys = load(s);
  const OrderingKind ordering = *parse_ordering(s.ordering);
  EngineOptions options;
  options.timeout = millis(s.timeout_s);
  const GroebnerResult r = compute_groebner(sys, ordering, backend_of(s.backend), options);
  std::optional<VerifyReport> report;
  if (check) report = verify(sys, r, Deadline::after(millis(s.timeout_s)));

  const double ms = std::chrono::duration<double, std::milli>(r.duration).count();
  if (s.json) {
    json out = {{"system", sys.name},
                {"variables", sys.vars.names()},
                {"ordering", to_string(ordering)},
                {"backend", to_string(r.backend)},
                {"representation", to_string(r.representation)},
                {"basis_size", r.basis.size()},
                {"duration_ms", ms},
                {"stats", stats_json(r.stats)}};
    if (print_basis) {
      json basis = json::array();
      for (const auto& p : r.basis) basis.push_back(to_string(p, r.vars));
      out["basis"] = basis;
    }
    if (report) out["verify"] = report_json(*report);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << sys.name << ": " << r.basis.size() << " polynomials in " << ms << " ms (" << to_string(ordering)
              << ", " << to_string(r.backend) << ", variables " << sys.vars.names() << ")\n";
    if (print_basis) {
      for (const auto& p : r.basis) std::cout << "  " << to_string(p, r.vars) << "\n";
    }
    if (report) std::cout << to_string(*report);
  }
  return report && !report->ok() ? kVerifyFailed : kOk;
}

struct BenchArgs {
  std::vector<std::string> systems;
  unsigned repeats = 5;
  double timeout_s = 600;
  std::string format = "md";
  std::string output;
  std::vector<std::string> orderings{"tdeg", "prime"};
  std::vector<std::string> backends{"i64", "big"};
  bool quiet = false;
};

void add_bench_options(CLI::App* cmd, BenchArgs& a) {
  cmd->add_option("--repeats", a.repeats, "Timed runs per case, after one warm-up")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--timeout", a.timeout_s, "Seconds per run")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--format", a.format, "csv | md")->check(CLI::IsMember({"csv", "md"}))->capture_default_str();
  cmd->add_option("--output,-o", a.output, "Write here instead of stdout");
  cmd->add_option("--ordering", a.orderings, "Orderings to run")
      ->check(CLI::IsMember({"prime", "tdeg", "deglex", "lex"}))
      ->capture_default_str();
  cmd->add_option("--backend", a.backends, "Backends to run")
      ->check(CLI::IsMember({"i64", "big"}))
      ->capture_default_str();
  cmd->add_flag("--quiet,-q", a.quiet, "No progress on stderr");
}

BenchConfig config_of(const BenchArgs& a) {
  BenchConfig c;
  c.systems = a.systems;
  c.repeats = a.repeats;
  c.timeout = millis(a.timeout_s);
  c.orderings.clear();
  for (const auto& o : a.orderings) c.orderings.push_back(*parse_ordering(o));
  c.backends.clear();
  for (const auto& b : a.backends) c.backends.push_back(backend_of(b));
  if (!a.quiet) {
    c.on_record = [](const BenchRecord& r) {
      std::cerr << r.system << " " << r.permutation << " " << to_string(r.ordering) << " " << to_string(r.backend)
                << ": " << to_string(r.outcome);
      if (r.duration_ms) std::cerr << " " << *r.duration_ms << " ms, " << *r.basis_size << " polynomials";
      std::cerr << std::endl;
    };
  }
  return c;
}

void emit(const BenchArgs& a, const std::vector<BenchRecord>& records, bool permutations) {
  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) throw Error("cannot write " + a.output);
  }
  std::ostream& out = a.output.empty() ? std::cout : file;
  if (a.format == "csv") {
    write_csv(out, records);
  } else {
    out << (permutations ? render_permutations(records) : render_table1(records));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced Groebner bases with prime-based power products"};
  app.require_subcommand(1);

  Selection sel;
  bool print_basis = false;
  bool check = false;
  auto* run = app.add_subcommand("run", "Compute a reduced Groebner basis");
  add_selection(run, sel);
  run->add_flag("--print-basis", print_basis, "Print the basis polynomials");
  run->add_flag("--verify", check, "Also run the verification suite");

  auto* ver = app.add_subcommand("verify", "Compute a basis and check it; exits 1 on failure");
  add_selection(ver, sel);

  app.add_subcommand("list", "List built-in systems");

  auto* bench = app.add_subcommand("bench", "Benchmarks");
  bench->require_subcommand(1);
  BenchArgs ba;
  auto* table1 = bench->add_subcommand("table1", "Every system under both orderings and backends");
  add_bench_options(table1, ba);
  table1->add_option("--system", ba.systems, "Restrict to these systems");
  auto* permute = bench->add_subcommand("permute", "Every variable order of one system");
  add_bench_options(permute, ba);
  std::string permute_system;
  permute->add_option("--system", permute_system, "System to permute")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(sel, print_basis, check);
    if (ver->parsed()) return cmd_run(sel, false, true);
    if (app.got_subcommand("list")) {
      for (const auto& e : corpus()) {
        const PolySystem s = builtin(e.id);
        std::cout << e.id << "\t" << e.title << "\t" << s.polynomials.size() << " polynomials\tvariables "
                  << s.vars.names() << "\n";
      }
      return kOk;
    }
    if (table1->parsed()) {
      emit(ba, run_table1(config_of(ba)), false);
      return kOk;
    }
    if (permute->parsed()) {
      emit(ba, run_permutations(builtin(permute_system), config_of(ba)), true);
      return kOk;
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "primegb: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const CoefficientOverflow& e) {
    std::cerr << "primegb: " << e.what() << "\n";
    return kCapacity;
  } catch (const ImageOverflow& e) {
    std::cerr << "primegb: " << e.what() << "\n";
    return kCapacity;
  } catch (const Timeout& e) {
    std::cerr << "primegb: " << e.what() << "\n";
    return kCapacity;
  } catch (const Error& e) {
    std::cerr << "primegb: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
