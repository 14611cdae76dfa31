#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "resumlab/oracle.hpp"
#include "resumlab/rs_series.hpp"
#include "resumlab/summation.hpp"

namespace resumlab {

enum class Format { Text, Csv, Json };

std::optional<Format> parse_format(std::string_view name);

// --- coefficient cache: one line "n<TAB>num/den" per order, ascending, no gaps ---

void write_cache(const std::filesystem::path& path, const CoeffTable& table);
/// Throws CacheCorrupt on any malformed line, gap, or E(0) != 1.
CoeffTable read_cache(const std::filesystem::path& path);

/// Table through at least `order`: reads the cache when it is deep enough,
/// otherwise computes (and rewrites the cache when a path is given).
CoeffTable load_coefficients(int order, const std::optional<std::filesystem::path>& cache);

// --- result rendering ---

/// Significant digits shown in text output: min(P - 10, 15).
int display_digits(Precision precision);
/// Digits written to CSV/JSON: P - 10.
int export_digits(Precision precision);

std::string format_lambda(const Real& lam);

std::string render_result(const SummationResult& r, Format format);
/// Fixed key order, decimal strings for every non-integer number.
std::string result_json(const SummationResult& r);
std::string result_csv_header();
std::string result_csv_row(const SummationResult& r);

std::string render_coefficients(const CoeffTable& table, Format format);

// --- reference tables ---

/// Generic rectangular table with an optional footnote block.
struct TextTable {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footnotes;
};

std::string render_table(const TextTable& t, Format format);

/// Orders shown in the convergence tables.
const std::vector<int>& convergence_table_orders();
/// λ values of the end-to-end comparison table.
const std::vector<std::string>& comparison_table_lambdas();

/// Convergence table for λ values (each block: RS[2N], PA, B, CM per N, then
/// an oracle row).
TextTable convergence_table(const CoeffTable& table, const std::vector<std::string>& lambdas,
                            const std::vector<int>& orders, Precision precision);

struct ComparisonRow {
  std::string lambda;
  Real exact;
  std::optional<Real> pade, borel, borel_cm;
};

/// 100·|value − exact| / exact.
Real error_percent(const Real& value, const Real& exact);
/// Eight decimals, scientific below 1e-6 or at 1e6 and above.
std::string format_percent(const Real& pct);

std::vector<ComparisonRow> comparison_rows(const CoeffTable& table, const std::vector<std::string>& lambdas, int N,
                                           Precision precision);
TextTable comparison_table(const std::vector<ComparisonRow>& rows, int N);

TextTable coefficient_table(const CoeffTable& table, int max_order);

}  // namespace resumlab
