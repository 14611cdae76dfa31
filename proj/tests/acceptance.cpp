// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion.
//
//   acceptance [--only N]... [--allow-fail N]...
//
// Exit status is 1 when a criterion fails that was not named with
// --allow-fail. Allowed failures still print FAIL.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "reference_values.hpp"
#include "resumlab/borel.hpp"
#include "resumlab/conformal.hpp"
#include "resumlab/errors.hpp"
#include "resumlab/oracle.hpp"
#include "resumlab/report.hpp"
#include "resumlab/summation.hpp"

using namespace resumlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Real dec(std::string_view s, int digits = 100) { return Real(std::string(s), bits_for_digits(digits)); }

/// Collects mismatch lines for one criterion; only the first few are printed.
struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;
  std::string summary;

  void fail(const std::string& why) {
    ok = false;
    notes.push_back(why);
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

const CoeffTable& table50() {
  static const CoeffTable t = CoeffTable::compute(50);
  return t;
}

/// Screened approximants are shared between criteria; N=25 screening dominates runtime.
const PreparedApproximant& prepared(Method m, int N) {
  static std::map<std::pair<Method, int>, PreparedApproximant> cache;
  auto it = cache.find({m, N});
  if (it == cache.end()) it = cache.emplace(std::pair{m, N}, prepare(m, table50(), N)).first;
  return it->second;
}

std::string show(const Real& v, int digits = 18) { return v.to_string(digits); }

Verdict coefficient_exactness() {
  Verdict v;
  const auto start = Clock::now();
  const CoeffTable t30 = compute_coefficients(30);
  const double t30_secs = seconds_since(start);
  for (int n = 0; n <= 30; ++n) {
    const Rational want = parse_rational(published::kCoefficients[n]);
    v.require(t30.energy(n) == want, "E(" + std::to_string(n) + ") = " + to_string(t30.energy(n)));
  }
  v.require(t30_secs < 5.0, "order 30 took " + std::to_string(t30_secs) + " s");
  const auto start50 = Clock::now();
  const CoeffTable t50 = compute_coefficients(50);
  const double t50_secs = seconds_since(start50);
  v.require(t50.max_order() == 50, "order 50 table incomplete");
  v.require(t50_secs < 60.0, "order 50 took " + std::to_string(t50_secs) + " s");
  std::ostringstream os;
  os << "31 rationals exact; order 30 in " << t30_secs << " s, order 50 in " << t50_secs << " s";
  v.summary = os.str();
  return v;
}

Verdict partial_sum_divergence() {
  Verdict v;
  const Precision P(60);
  const std::pair<const char*, const char*> order2[] = {{"0.2", "1.0975"}, {"1", "0.4375"}, {"4", "-17"}, {"100", "-13049"}};
  for (const auto& [lam, want] : order2) {
    const Rational exact = table50().energy(0) + table50().energy(1) * parse_rational(lam) +
                           table50().energy(2) * parse_rational(lam) * parse_rational(lam);
    v.require(exact == parse_rational(want), std::string("order 2 at λ=") + lam + " is " + to_string(exact));
    const Real approx = partial_sum(table50(), 2, parse_rational(lam), P);
    v.require(approx == Real(parse_rational(want), approx.bits()), std::string("rounded order-2 sum at λ=") + lam);
  }
  const Real s50 = partial_sum(table50(), 50, Rational(1, 5), P);
  v.require(abs(s50) > dec("1e37"), "|E_RS[50](0.2)| = " + show(s50, 10));
  v.require(abs(s50) < dec("1e38"), "|E_RS[50](0.2)| = " + show(s50, 10));
  v.require(s50 < 0L, "E_RS[50](0.2) should be negative");
  v.summary = "order-2 sums exact; E_RS[50](0.2) = " + s50.to_scientific(4);
  return v;
}

/// Compares one method column of the convergence tables.
Verdict convergence_column(Method m, std::string_view published::ConvergenceRow::*column, const char* tolerance,
                           Precision P) {
  Verdict v;
  const Real tol = dec(tolerance);
  int checked = 0;
  Real worst(0L, 64);
  const auto start = Clock::now();
  for (const auto& block : published::convergence_tables()) {
    const Real lam = dec(block.lambda);
    for (const auto& row : block.rows) {
      const std::string label = std::string(method_name(m)) + " N=" + std::to_string(row.order) + " λ=" +
                                std::string(block.lambda);
      const auto& prep = prepared(m, row.order);
      if (!prep.screening.proper) {
        v.fail(label + " screened improper");
        continue;
      }
      const Real got = summate(prep, table50(), lam, P).value;
      const Real rel = relative_difference(got, dec(row.*column));
      if (rel > worst) worst = rel;
      v.require(rel <= tol, label + ": " + show(got) + " vs " + std::string(row.*column));
      ++checked;
    }
  }
  std::ostringstream os;
  os << checked << " entries, worst relative deviation " << worst.to_scientific(2) << " (tolerance " << tolerance
     << "), " << seconds_since(start) << " s";
  v.summary = os.str();
  return v;
}

/// Every N in 1..25 is screened; the improper set must equal the published list exactly.
void check_exclusions(Verdict& v, Method m, const std::set<int>& expected) {
  std::set<int> improper;
  for (int N = 1; N <= 25; ++N) {
    if (!prepared(m, N).screening.proper) improper.insert(N);
  }
  std::string listed;
  for (int N : improper) listed += (listed.empty() ? "" : ",") + std::to_string(N);
  v.require(improper == expected, "improper orders {" + listed + "}");
  for (int N : expected) {
    bool threw = false;
    try {
      summate(prepared(m, N), table50(), dec("1"), Precision(30));
    } catch (const ImproperApproximant& e) {
      threw = e.order() == N && e.method() == method_name(m);
    }
    v.require(threw, "N=" + std::to_string(N) + " did not raise ImproperApproximant");
  }
  v.summary += "; improper {" + listed + "}";
}

Verdict pade_column() { return convergence_column(Method::PADE, &published::ConvergenceRow::pade, "5e-15", Precision(60)); }

Verdict borel_column() {
  Verdict v = convergence_column(Method::BOREL, &published::ConvergenceRow::borel, "1e-13", Precision(60));
  check_exclusions(v, Method::BOREL, {published::kBorelImproper.begin(), published::kBorelImproper.end()});
  return v;
}

Verdict conformal_column() {
  Verdict v = convergence_column(Method::BOREL_CM, &published::ConvergenceRow::borel_cm, "1e-13", Precision(60));
  check_exclusions(v, Method::BOREL_CM, {published::kConformalImproper.begin(), published::kConformalImproper.end()});
  return v;
}

Verdict comparison_table_end_to_end() {
  Verdict v;
  const auto start = Clock::now();
  const Precision P(60);
  const int N = 25;
  const Real value_tol = dec("1e-9");
  const Real percent_tol = dec("1e-4");
  std::vector<std::string> lambdas;
  for (const auto& row : published::comparison_table()) lambdas.emplace_back(row.lambda);
  const auto rows = comparison_rows(table50(), lambdas, N, P);
  Real worst_value(0L, 64), worst_percent(0L, 64);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& want = published::comparison_table()[i];
    const auto& got = rows[i];
    const std::pair<const std::optional<Real>*, std::pair<std::string_view, std::string_view>> cols[] = {
        {&got.pade, {want.pade, want.pade_error}},
        {&got.borel, {want.borel, want.borel_error}},
        {&got.borel_cm, {want.borel_cm, want.borel_cm_error}},
    };
    const char* names[] = {"pade", "borel", "borel-cm"};
    for (int c = 0; c < 3; ++c) {
      const std::string label = std::string(names[c]) + " λ=" + std::string(want.lambda);
      const auto& value = *cols[c].first;
      if (!value) {
        v.fail(label + " missing");
        continue;
      }
      const Real dv = abs(*value - dec(cols[c].second.first));
      const Real dp = abs(error_percent(*value, got.exact) - dec(cols[c].second.second));
      if (dv > worst_value) worst_value = dv;
      if (dp > worst_percent) worst_percent = dp;
      v.require(dv <= value_tol, label + ": " + show(*value, 12) + " vs " + std::string(cols[c].second.first));
      v.require(dp <= percent_tol, label + ": error% " + error_percent(*value, got.exact).to_fixed(8) + " vs " +
                                       std::string(cols[c].second.second));
    }
  }
  const double secs = seconds_since(start);
  v.require(secs < 900.0, "took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << "16 rows x 3 methods; worst value deviation " << worst_value.to_scientific(2) << ", worst percent deviation "
     << worst_percent.to_scientific(2) << ", " << secs << " s";
  v.summary = os.str();
  return v;
}

Verdict oracle_independence() {
  Verdict v;
  const Precision P(50);
  const int M = 200;
  const Real half_unit = dec("5.00001e-10");  // half a unit in the 9th printed decimal
  int matched = 0;
  std::string misses;
  for (const auto& row : published::comparison_table()) {
    const std::string label = "λ=" + std::string(row.lambda);
    const Real lam = dec(row.lambda);

    OracleConfig cfg;
    cfg.basis_size = M;
    cfg.precision = P;
    cfg.lam = lam;
    cfg.tolerance_digits = 10;
    try {
      const Real e = ground_state_energy(cfg);
      const Real diff = abs(e - dec(row.exact));
      if (diff <= half_unit) {
        ++matched;
      } else {
        v.fail(label + ": E(M=200) = " + show(e, 14) + " vs " + std::string(row.exact));
        misses += " " + std::string(row.lambda);
      }
    } catch (const NotConverged& e) {
      const Real e200 = truncated_ground_state(lam, M, P);
      std::string detail = label + ": not stable at M=200 (E = " + show(e200, 14) + " vs " + std::string(row.exact);
      try {
        const auto big = converged_ground_state(lam, P, 12, 400);
        detail += "; converges to " + show(big.value, 14) + " at M=" + std::to_string(big.basis_size);
      } catch (const NotConverged&) {
      }
      v.fail(detail + ")");
      misses += " " + std::string(row.lambda);
    }

    // Variational monotonicity over a ladder of basis sizes.
    Real previous = truncated_ground_state(lam, 8, Precision(30));
    for (int m = 16; m <= M; m += 16) {
      const Real e = truncated_ground_state(lam, m, Precision(30));
      v.require(e <= previous, label + ": E(M) increased at M=" + std::to_string(m));
      previous = e;
    }
  }
  v.summary = std::to_string(matched) + "/16 exact values reproduced with M <= 200" +
              (misses.empty() ? std::string() : "; misses at λ =" + misses);
  return v;
}

Verdict property_suite() {
  Verdict v;
  int approximants = 0;
  // Order condition, in exact arithmetic, for every approximant the suite constructs.
  for (Method m : {Method::PADE, Method::BOREL, Method::BOREL_CM}) {
    std::vector<Rational> series;
    if (m == Method::PADE) series = {table50().energies().begin(), table50().energies().end()};
    if (m == Method::BOREL) series = borel_coefficients(table50(), 50).coefficients;
    if (m == Method::BOREL_CM) series = conformal_coefficients(table50(), 50).coefficients;
    for (int N = 1; N <= 25; ++N) {
      const auto& pa = *prepared(m, N).approximant;
      const auto taylor = pa.taylor(2 * N + 1);
      for (int k = 0; k <= 2 * N; ++k) {
        v.require(taylor[k] == series[k], std::string(method_name(m)) + " N=" + std::to_string(N) +
                                              " order condition fails at k=" + std::to_string(k));
      }
      ++approximants;
    }
  }

  for (int digits : {30, 50, 60, 100}) {
    const Precision P(digits);
    for (const char* lam : {"0.001", "0.2", "1", "100", "2000", "1e8"}) {
      const Real x = dec(lam, digits + 20);
      const Real back = inverse_map(map_z(x, P), P);
      v.require(relative_difference(back, x) <= decimal_epsilon(digits - 5, back.bits()),
                std::string("map round trip at λ=") + lam + ", P=" + std::to_string(digits));
    }
  }

  const auto bs = borel_coefficients(table50(), 50);
  const Rational radius = radius_diagnostic(bs, 49);
  v.require(abs(radius / Rational(2, 3) - 1) < Rational(5, 100), "Borel ratio at n=49 = " + to_string(radius));

  auto deviation = [](int n) -> Rational {
    const Rational predicted = Rational(-3, 2) * (Rational(n) + Rational(1, 2));
    return abs(asymptotic_ratio(table50(), n) / predicted - 1);
  };
  v.require(deviation(49) < deviation(20), "asymptotic ratio does not improve from n=20 to n=49");

  int pairs = 0;
  for (const char* lam : {"0.2", "1", "4"}) {
    for (int N = 1; N <= 10; ++N) {
      for (Method m : {Method::BOREL, Method::BOREL_CM}) {
        const auto& prep = prepared(m, N);
        if (!prep.screening.proper) continue;
        const Real lo = summate(prep, table50(), dec(lam), Precision(40)).value;
        const Real hi = summate(prep, table50(), dec(lam), Precision(60)).value;
        v.require(relative_difference(lo, hi) <= dec("1e-30"), std::string(method_name(m)) + " N=" +
                                                                   std::to_string(N) + " λ=" + lam +
                                                                   " P40 vs P60");
        ++pairs;
      }
    }
  }

  std::ostringstream os;
  os << approximants << " order conditions, map round trips, Borel ratio " << Real(radius, 64).to_string(6) << " at n=49, "
     << pairs << " P40/P60 pairs";
  v.summary = os.str();
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only, allowed;
  for (int i = 1; i < argc; ++i) {
    if (i + 1 < argc && std::strcmp(argv[i], "--only") == 0) {
      only.insert(std::atoi(argv[++i]));
    } else if (i + 1 < argc && std::strcmp(argv[i], "--allow-fail") == 0) {
      allowed.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--only N]... [--allow-fail N]...\n", argv[0]);
      return 2;
    }
  }

  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"coefficient exactness", coefficient_exactness},
      {"partial-sum divergence", partial_sum_divergence},
      {"Pade column", pade_column},
      {"Borel column", borel_column},
      {"conformal Borel column", conformal_column},
      {"comparison table at N=25", comparison_table_end_to_end},
      {"oracle independence", oracle_independence},
      {"property suite", property_suite},
  };

  int failures = 0, tolerated = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d (%s): %s\n", v.ok ? "PASS" : "FAIL", id, criteria[i].first, v.summary.c_str());
    for (std::size_t k = 0; k < v.notes.size() && k < 20; ++k) std::printf("    %s\n", v.notes[k].c_str());
    if (v.notes.size() > 20) std::printf("    ... %zu more\n", v.notes.size() - 20);
    if (!v.ok) (allowed.count(id) ? tolerated : failures) += 1;
    std::fflush(stdout);
  }
  if (tolerated) std::printf("%d failing criterion(s) tolerated by --allow-fail\n", tolerated);
  return failures == 0 ? 0 : 1;
}
