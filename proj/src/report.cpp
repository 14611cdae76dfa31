#include "resumlab/report.hpp"

#include <array>
#include <fstream>
#include <map>
#include <json.hpp>
#include <sstream>

#include "resumlab/errors.hpp"

namespace resumlab {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kImproperMark = "—";

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string error_string(const SummationResult& r, int digits) {
  if (!r.quadrature_error_estimate) return {};
  return r.quadrature_error_estimate->to_scientific(std::min(digits, 6));
}

/// Table cell for a resummed value: plain decimals, switching to scientific
/// notation for large magnitudes (divergent partial sums).
std::string table_value(const Real& v, int digits) {
  if (!v.is_zero() && abs(v) >= Real(100000L, v.bits())) return v.to_scientific(10);
  return v.to_string(digits);
}


}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

void write_cache(const std::filesystem::path& path, const CoeffTable& table) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write coefficient cache " + path.string());
  for (int n = 0; n <= table.max_order(); ++n) out << n << '\t' << to_string(table.energy(n)) << '\n';
}

CoeffTable read_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CacheCorrupt("cannot read coefficient cache " + path.string());
  std::vector<Rational> energies;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fail = [&](const std::string& why) {
      throw CacheCorrupt(path.string() + ":" + std::to_string(line_no) + ": " + why);
    };
    const auto tab = line.find('\t');
    if (tab == std::string::npos) fail("expected n<TAB>num/den");
    const std::string index = line.substr(0, tab);
    if (index.empty() || index.find_first_not_of("0123456789") != std::string::npos) fail("bad order index");
    if (std::stol(index) != static_cast<long>(energies.size())) fail("orders must ascend from 0 without gaps");
    const std::string value = line.substr(tab + 1);
    if (value.empty() || value.find_first_not_of("-0123456789/") != std::string::npos) fail("bad rational");
    Rational q;
    try {
      q = parse_rational(value);
    } catch (const Error&) {
      fail("bad rational");
    }
    energies.push_back(std::move(q));
  }
  if (energies.empty()) throw CacheCorrupt(path.string() + ": empty cache");
  if (energies[0] != 1) throw CacheCorrupt(path.string() + ": E(0) must be 1");
  return CoeffTable::from_energies(std::move(energies));
}

CoeffTable load_coefficients(int order, const std::optional<std::filesystem::path>& cache) {
  if (cache && std::filesystem::exists(*cache)) {
    CoeffTable cached = read_cache(*cache);
    if (cached.max_order() >= order) return cached;
  }
  CoeffTable table = CoeffTable::compute(order);
  if (cache) write_cache(*cache, table);
  return table;
}

int display_digits(Precision precision) { return std::min(precision.digits() - 10, 15); }

int export_digits(Precision precision) { return precision.digits() - 10; }

std::string format_lambda(const Real& lam) {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.30Rg", lam.get());
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

std::string result_json(const SummationResult& r) {
  const int digits = export_digits(r.precision);
  ordered_json j;
  j["lambda"] = format_lambda(r.lam);
  j["method"] = std::string(method_name(r.method));
  j["order"] = r.order;
  j["precision_digits"] = r.precision.digits();
  j["value"] = r.value.to_string(digits);
  j["quadrature_error_estimate"] = r.quadrature_error_estimate ? ordered_json(error_string(r, digits)) : nullptr;
  j["screening"] = ordered_json{{"interval", {r.screening.lo.to_string(), r.screening.hi.to_string()}},
                                {"pole_count", r.screening.pole_count},
                                {"proper", r.screening.proper}};
  return j.dump();
}

std::string result_csv_header() {
  return "lambda,method,order,precision_digits,value,quadrature_error_estimate,interval_lo,interval_hi,pole_count,"
         "proper";
}

std::string result_csv_row(const SummationResult& r) {
  const int digits = export_digits(r.precision);
  std::ostringstream os;
  os << format_lambda(r.lam) << ',' << method_name(r.method) << ',' << r.order << ',' << r.precision.digits() << ','
     << r.value.to_string(digits) << ',' << error_string(r, digits) << ',' << r.screening.lo.to_string() << ','
     << r.screening.hi.to_string() << ',' << r.screening.pole_count << ',' << (r.screening.proper ? "true" : "false");
  return os.str();
}

std::string render_result(const SummationResult& r, Format format) {
  switch (format) {
    case Format::Json:
      return result_json(r) + "\n";
    case Format::Csv:
      return result_csv_header() + "\n" + result_csv_row(r) + "\n";
    case Format::Text:
      break;
  }
  std::ostringstream os;
  os << r.value.to_string(display_digits(r.precision)) << "\n";
  os << "  method     " << method_name(r.method) << "\n";
  os << "  order      N=" << r.order << "\n";
  os << "  lambda     " << format_lambda(r.lam) << "\n";
  os << "  precision  " << r.precision.digits() << " digits\n";
  os << "  screening  (" << r.screening.lo.to_string() << ", " << r.screening.hi.to_string()
     << "): " << r.screening.pole_count << " poles, " << (r.screening.proper ? "proper" : "improper") << "\n";
  os << "  quadrature error estimate  "
     << (r.quadrature_error_estimate ? error_string(r, export_digits(r.precision)) : std::string("n/a")) << "\n";
  return os.str();
}

std::string render_coefficients(const CoeffTable& table, Format format) {
  return render_table(coefficient_table(table, table.max_order()), format);
}

TextTable coefficient_table(const CoeffTable& table, int max_order) {
  TextTable t;
  t.title = "Rayleigh-Schroedinger coefficients E0(n)";
  t.header = {"n", "E0(n)"};
  for (int n = 0; n <= max_order; ++n) t.rows.push_back({std::to_string(n), to_string(table.energy(n))});
  return t;
}

std::string render_table(const TextTable& t, Format format) {
  std::ostringstream os;
  if (format == Format::Json) {
    ordered_json j;
    j["title"] = t.title;
    j["header"] = t.header;
    j["rows"] = t.rows;
    j["footnotes"] = t.footnotes;
    os << j.dump() << "\n";
    return os.str();
  }
  if (format == Format::Csv) {
    auto line = [&os](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_escape(cells[i]);
      os << "\n";
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
    return os.str();
  }

  // Column widths count code points so the multibyte improper mark aligns.
  auto width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s) w += (c & 0xC0) != 0x80;
    return w;
  };
  std::vector<std::size_t> widths(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < widths.size(); ++i) widths[i] = std::max(widths[i], width(cells[i]));
  };
  measure(t.header);
  for (const auto& row : t.rows) measure(row);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += "  ";
      out += cells[i];
      if (i + 1 < cells.size()) out.append(widths[i] - width(cells[i]), ' ');
    }
    os << out << "\n";
  };
  if (!t.title.empty()) os << t.title << "\n";
  line(t.header);
  for (const auto& row : t.rows) line(row);
  for (const auto& note : t.footnotes) os << note << "\n";
  return os.str();
}

const std::vector<int>& convergence_table_orders() {
  static const std::vector<int> orders{1, 4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 16, 24, 25};
  return orders;
}

const std::vector<std::string>& comparison_table_lambdas() {
  static const std::vector<std::string> lambdas{"0.10", "0.15", "0.20", "0.25", "0.30", "0.35", "0.40", "0.45",
                                                "0.50", "1",    "2",    "4",    "10",   "100",  "400",  "2000"};
  return lambdas;
}

TextTable convergence_table(const CoeffTable& table, const std::vector<std::string>& lambdas,
                            const std::vector<int>& orders, Precision precision) {
  const int digits = display_digits(precision);
  TextTable t;
  t.title = "Convergence with order N (2N = perturbative order)";
  t.header = {"lambda", "N", "E_RS[2N]", "E_PA[N,N]", "E_B[N,N]", "E_CM[N,N]"};
  bool any_improper = false;
  constexpr std::array methods{Method::RS, Method::PADE, Method::BOREL, Method::BOREL_CM};
  std::map<std::pair<Method, int>, PreparedApproximant> prepared;
  for (int N : orders) {
    for (Method m : methods) prepared.emplace(std::pair{m, N}, prepare(m, table, N));
  }
  for (const auto& text : lambdas) {
    const Real lam(parse_rational(text), precision.bits(20));
    for (int N : orders) {
      std::vector<std::string> row{text, std::to_string(N)};
      for (Method m : methods) {
        const auto& p = prepared.at({m, N});
        if (p.screening.proper) {
          row.push_back(table_value(summate(p, table, lam, precision).value, digits));
        } else {
          row.emplace_back(kImproperMark);
          any_improper = true;
        }
      }
      t.rows.push_back(std::move(row));
    }
    const std::string exact =
        lam.is_zero() ? std::string("1") : converged_ground_state(lam, precision, digits + 1).value.to_string(digits);
    t.rows.push_back({text, "exact", exact, exact, exact, exact});
  }
  if (any_improper) {
    t.footnotes.push_back(std::string(kImproperMark) +
                          " improper approximant: denominator has a root in the integration domain");
  }
  t.footnotes.push_back("exact: harmonic-oscillator basis diagonalization");
  return t;
}

Real error_percent(const Real& value, const Real& exact) { return abs(value - exact) / abs(exact) * 100; }

std::string format_percent(const Real& pct) {
  if (!pct.is_zero() && (pct < Real("1e-6", pct.bits()) || pct >= Real(1000000L, pct.bits())))
    return pct.to_scientific(4);
  return pct.to_fixed(8);
}

std::vector<ComparisonRow> comparison_rows(const CoeffTable& table, const std::vector<std::string>& lambdas, int N,
                                           Precision precision) {
  std::vector<ComparisonRow> rows;
  const PreparedApproximant pade = prepare(Method::PADE, table, N);
  const PreparedApproximant borel = prepare(Method::BOREL, table, N);
  const PreparedApproximant borel_cm = prepare(Method::BOREL_CM, table, N);
  for (const auto& text : lambdas) {
    const Real lam(parse_rational(text), precision.bits(20));
    ComparisonRow row{text, lam.is_zero() ? Real(1L, precision.bits())
                                          : converged_ground_state(lam, precision, 12).value,
                      std::nullopt, std::nullopt, std::nullopt};
    auto attempt = [&](const PreparedApproximant& p) -> std::optional<Real> {
      if (!p.screening.proper) return std::nullopt;
      return summate(p, table, lam, precision).value;
    };
    row.pade = attempt(pade);
    row.borel = attempt(borel);
    row.borel_cm = attempt(borel_cm);
    rows.push_back(std::move(row));
  }
  return rows;
}

TextTable comparison_table(const std::vector<ComparisonRow>& rows, int N) {
  const std::string n = std::to_string(N);
  TextTable t;
  t.title = "Comparison with the exact ground-state energy at N=" + n;
  t.header = {"lambda",   "E_PA[" + n + "," + n + "]", "Error(%)", "E_B[" + n + "," + n + "]",
              "Error(%)", "E_CM[" + n + "," + n + "]", "Error(%)", "Exact"};
  bool any_improper = false;
  for (const auto& r : rows) {
    std::vector<std::string> cells{r.lambda};
    for (const auto* v : {&r.pade, &r.borel, &r.borel_cm}) {
      if (*v) {
        cells.push_back((*v)->to_fixed(9));
        cells.push_back(format_percent(error_percent(**v, r.exact)));
      } else {
        cells.emplace_back(kImproperMark);
        cells.emplace_back(kImproperMark);
        any_improper = true;
      }
    }
    cells.push_back(r.exact.to_fixed(9));
    t.rows.push_back(std::move(cells));
  }
  if (any_improper) {
    t.footnotes.push_back(std::string(kImproperMark) +
                          " improper approximant: denominator has a root in the integration domain");
  }
  t.footnotes.push_back("Exact: harmonic-oscillator basis diagonalization; Error(%) = 100|E - Exact|/Exact");
  return t;
}

}  // namespace resumlab
