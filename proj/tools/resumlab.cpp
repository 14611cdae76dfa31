// resumlab: command-line front end for the resummation library.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "resumlab/errors.hpp"
#include "resumlab/oracle.hpp"
#include "resumlab/report.hpp"
#include "resumlab/summation.hpp"

namespace {

using namespace resumlab;

enum ExitCode : int {
  kOk = 0,
  kInvalidArguments = 2,
  kImproper = 3,
  kPrecisionExhausted = 4,
  kCacheCorrupt = 5,
};

constexpr int kMinSumOrder = 1;
constexpr int kMaxSumOrder = 25;
constexpr int kMaxCoeffOrder = 100;
constexpr int kTableOrder = 50;
constexpr int kComparisonPrecision = 80;

struct Options {
  std::string method = "borel-cm";
  int order = -1;
  std::vector<std::string> lambdas;
  int precision = -1;
  std::string format = "text";
  std::string cache;
  std::string which;
  int basis = 0;
  bool all_orders = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Format require_format(const Options& o) {
  auto f = parse_format(o.format);
  if (!f) throw UsageError("unknown format '" + o.format + "' (text|csv|json)");
  return *f;
}

Method require_method(const Options& o) {
  auto m = parse_method(o.method);
  if (!m) throw UsageError("unknown method '" + o.method + "' (rs|pade|borel|borel-cm)");
  return *m;
}

Precision require_precision(const Options& o, int fallback) {
  try {
    return Precision(o.precision < 0 ? fallback : o.precision);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

int require_sum_order(const Options& o) {
  if (o.order < kMinSumOrder || o.order > kMaxSumOrder) {
    throw UsageError("--order must lie in [1, 25] for this command");
  }
  return o.order;
}

std::optional<std::filesystem::path> cache_path(const Options& o) {
  if (o.cache.empty()) return std::nullopt;
  return std::filesystem::path(o.cache);
}

std::vector<Real> require_lambdas(const Options& o, Precision precision) {
  if (o.lambdas.empty()) throw UsageError("--lambda is required");
  std::vector<Real> out;
  for (const auto& text : o.lambdas) {
    Rational q;
    try {
      q = parse_rational(text);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
    if (q < 0) throw UsageError("--lambda must be non-negative, got " + text);
    out.emplace_back(q, precision.bits(20));
  }
  return out;
}

int run_coeffs(const Options& o) {
  if (o.order < 0 || o.order > kMaxCoeffOrder) throw UsageError("--order must lie in [0, 100] for coeffs");
  const Format format = require_format(o);
  const CoeffTable table = load_coefficients(o.order, cache_path(o));
  std::cout << render_table(coefficient_table(table, o.order), format);
  return kOk;
}

int run_sum(const Options& o) {
  const Method method = require_method(o);
  const int N = require_sum_order(o);
  const Precision precision = require_precision(o, Precision::kDefault);
  const Format format = require_format(o);
  const auto lambdas = require_lambdas(o, precision);
  const CoeffTable table = load_coefficients(2 * N, cache_path(o));
  const PreparedApproximant prepared = prepare(method, table, N);

  if (format == Format::Csv) std::cout << result_csv_header() << "\n";
  for (const auto& lam : lambdas) {
    const SummationResult r = summate(prepared, table, lam, precision);
    switch (format) {
      case Format::Csv:
        std::cout << result_csv_row(r) << "\n";
        break;
      case Format::Json:
        std::cout << result_json(r) << "\n";
        break;
      case Format::Text:
        std::cout << render_result(r, Format::Text);
        break;
    }
  }
  return kOk;
}

int run_screen(const Options& o) {
  const Method method = require_method(o);
  const Format format = require_format(o);
  std::vector<int> orders;
  if (o.order < 0) {
    for (int N = kMinSumOrder; N <= kMaxSumOrder; ++N) orders.push_back(N);
  } else {
    orders.push_back(require_sum_order(o));
  }
  const CoeffTable table = load_coefficients(2 * orders.back(), cache_path(o));
  TextTable t;
  t.title = "Pole screening of diagonal approximants (" + std::string(method_name(method)) + ")";
  t.header = {"N", "interval", "pole_count", "proper"};
  for (int N : orders) {
    const auto p = prepare(method, table, N);
    t.rows.push_back({std::to_string(N), "(" + p.screening.lo.to_string() + ", " + p.screening.hi.to_string() + ")",
                      std::to_string(p.screening.pole_count), p.screening.proper ? "true" : "false"});
  }
  std::cout << render_table(t, format);
  return kOk;
}

int run_table(const Options& o) {
  const Format format = require_format(o);
  const auto cache = cache_path(o);
  if (o.which == "IV") {
    const CoeffTable table = load_coefficients(30, cache);
    TextTable t = coefficient_table(table, 30);
    t.rows.erase(t.rows.begin());  // n = 0 is not a correction term
    std::cout << render_table(t, format);
    return kOk;
  }
  const CoeffTable table = load_coefficients(kTableOrder, cache);
  if (o.which == "I" || o.which == "II") {
    const Precision precision = require_precision(o, Precision::kDefault);
    const std::vector<std::string> lambdas =
        o.which == "I" ? std::vector<std::string>{"0.2", "1"} : std::vector<std::string>{"4", "100"};
    std::vector<int> orders = convergence_table_orders();
    if (o.all_orders) {
      orders.clear();
      for (int N = kMinSumOrder; N <= kMaxSumOrder; ++N) orders.push_back(N);
    }
    std::cout << render_table(convergence_table(table, lambdas, orders, precision), format);
    return kOk;
  }
  if (o.which == "III") {
    const Precision precision = require_precision(o, kComparisonPrecision);
    const auto rows = comparison_rows(table, comparison_table_lambdas(), kMaxSumOrder, precision);
    std::cout << render_table(comparison_table(rows, kMaxSumOrder), format);
    return kOk;
  }
  throw UsageError("table must be one of I, II, III, IV");
}

int run_oracle(const Options& o) {
  const Precision precision = require_precision(o, Precision::kDefault);
  const Format format = require_format(o);
  TextTable t;
  t.title = "Ground-state energy by basis diagonalization";
  t.header = {"lambda", "energy", "basis_size"};
  for (std::size_t i = 0; i < o.lambdas.size(); ++i) {
    const Real lam = require_lambdas(o, precision)[i];
    if (o.basis > 0) {
      OracleConfig cfg{o.basis, precision, lam};
      t.rows.push_back({o.lambdas[i], ground_state_energy(cfg).to_string(display_digits(precision)),
                        std::to_string(o.basis)});
    } else {
      const OracleResult r = converged_ground_state(lam, precision, display_digits(precision) + 1);
      t.rows.push_back({o.lambdas[i], r.value.to_string(display_digits(precision)), std::to_string(r.basis_size)});
    }
  }
  if (o.lambdas.empty()) throw UsageError("--lambda is required");
  std::cout << render_table(t, format);
  return kOk;
}

int run_compare(const Options& o) {
  const int N = require_sum_order(o);
  const Precision precision = require_precision(o, Precision::kDefault);
  const Format format = require_format(o);
  const auto lambdas = require_lambdas(o, precision);
  const CoeffTable table = load_coefficients(2 * N, cache_path(o));
  const int digits = display_digits(precision);

  TextTable t;
  t.title = "Methods against the diagonalization oracle at N=" + std::to_string(N);
  t.header = {"lambda", "method", "value", "oracle", "error(%)"};
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const Real& lam = lambdas[i];
    const Real exact =
        lam.is_zero() ? Real(1L, precision.bits()) : converged_ground_state(lam, precision, digits + 1).value;
    for (Method m : {Method::RS, Method::PADE, Method::BOREL, Method::BOREL_CM}) {
      const auto p = prepare(m, table, N);
      if (!p.screening.proper) {
        t.rows.push_back({o.lambdas[i], std::string(method_name(m)), "—", exact.to_string(digits), "—"});
        continue;
      }
      const SummationResult r = summate(p, table, lam, precision);
      t.rows.push_back({o.lambdas[i], std::string(method_name(m)), r.value.to_string(digits), exact.to_string(digits),
                        format_percent(error_percent(r.value, exact))});
    }
  }
  std::cout << render_table(t, format);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision resummation of the anharmonic-oscillator perturbation series"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "text|csv|json");
    cmd->add_option("--cache", o.cache, "coefficient cache file (n<TAB>num/den)");
  };

  auto* coeffs = app.add_subcommand("coeffs", "exact perturbation coefficients");
  coeffs->add_option("--order", o.order, "highest order (0..100)")->required();
  add_common(coeffs);

  auto* sum = app.add_subcommand("sum", "resum at one order and one or more couplings");
  sum->add_option("--method", o.method, "rs|pade|borel|borel-cm");
  sum->add_option("--order", o.order, "diagonal order N (1..25)")->required();
  sum->add_option("--lambda", o.lambdas, "coupling(s), exact decimals")->delimiter(',')->required();
  sum->add_option("--precision", o.precision, "working precision in digits (15..300)");
  add_common(sum);

  auto* screen = app.add_subcommand("screen", "pole screening of diagonal approximants");
  screen->add_option("--method", o.method, "pade|borel|borel-cm");
  screen->add_option("--order", o.order, "single order N; default all of 1..25");
  add_common(screen);

  auto* table = app.add_subcommand("table", "regenerate a result table (I, II, III, IV)");
  table->add_option("which", o.which, "I|II|III|IV")->required();
  table->add_option("--precision", o.precision, "working precision in digits");
  table->add_flag("--all-orders", o.all_orders, "tables I/II: every N in 1..25");
  add_common(table);

  auto* oracle = app.add_subcommand("oracle", "ground-state energy by basis diagonalization");
  oracle->add_option("--lambda", o.lambdas, "coupling(s)")->delimiter(',')->required();
  oracle->add_option("--precision", o.precision, "working precision in digits");
  oracle->add_option("--basis", o.basis, "fixed even-basis size M (default: grow until stable)");
  oracle->add_option("--format", o.format, "text|csv|json");

  auto* compare = app.add_subcommand("compare", "all methods against the oracle");
  compare->add_option("--order", o.order, "diagonal order N (1..25)")->required();
  compare->add_option("--lambda", o.lambdas, "coupling(s)")->delimiter(',')->required();
  compare->add_option("--precision", o.precision, "working precision in digits");
  add_common(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidArguments;
  }

  try {
    if (*coeffs) return run_coeffs(o);
    if (*sum) return run_sum(o);
    if (*screen) return run_screen(o);
    if (*table) return run_table(o);
    if (*oracle) return run_oracle(o);
    if (*compare) return run_compare(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidArguments;
  } catch (const ImproperApproximant& e) {
    std::cerr << e.what() << "\n";
    return kImproper;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return kPrecisionExhausted;
  } catch (const NotConverged& e) {
    std::cerr << "not converged: " << e.what() << "\n";
    return kPrecisionExhausted;
  } catch (const CacheCorrupt& e) {
    std::cerr << "cache corrupt: " << e.what() << "\n";
    return kCacheCorrupt;
  } catch (const InvalidOrder& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidArguments;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidArguments;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kInvalidArguments;
}
