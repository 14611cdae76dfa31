#include "resumlab/rs_series.hpp"

#include <string>

#include "resumlab/errors.hpp"

namespace resumlab {

CoeffTable CoeffTable::compute(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw InvalidOrder("coefficient order must lie in [0, " + std::to_string(kMaxOrder) + "], got " +
                       std::to_string(order));
  }

  CoeffTable table;
  table.energies_.assign(1, Rational(1));
  table.b_.assign(1, {});

  // b(r, k) with the conventions b_0^(0) = 1, b_0^(r>0) = 0 and b_k^(r) = 0
  // outside 1 <= k <= 2r.
  auto b = [&table](int r, int k) -> Rational {
    if (k < 0) return 0;
    if (r == 0) return k == 0 ? 1 : 0;
    if (k == 0 || k > 2 * r) return 0;
    return table.b_[static_cast<std::size_t>(r)][static_cast<std::size_t>(k - 1)];
  };

  for (int n = 1; n <= order; ++n) {
    table.b_.emplace_back(static_cast<std::size_t>(2 * n));
    auto& row = table.b_.back();
    Rational next = 0;  // b_{k+1}^(n); closes with b_{2n+1}^(n) = 0
    for (int k = 2 * n; k >= 1; --k) {
      Rational coupling = 0;
      for (int r = (k + 1) / 2; r <= n - 1; ++r) coupling += b(n - r, 1) * b(r, k);
      Rational bk = (Rational((2 * k + 1) * (2 * k + 2)) * next - b(n - 1, k - 2) - 2 * coupling) / (4 * k);
      row[static_cast<std::size_t>(k - 1)] = bk;
      next = std::move(bk);
    }
    table.energies_.push_back(-2 * row[0]);
  }
  return table;
}

CoeffTable CoeffTable::from_energies(std::vector<Rational> energies) {
  if (energies.empty() || energies[0] != 1) throw InvalidArgument("energy table must start with E(0) = 1");
  CoeffTable table;
  table.energies_ = std::move(energies);
  return table;
}

const Rational& CoeffTable::energy(int n) const {
  if (n < 0 || n > max_order()) throw InvalidOrder("order " + std::to_string(n) + " outside the table");
  return energies_[static_cast<std::size_t>(n)];
}

const std::vector<Rational>& CoeffTable::b_coefficients(int n) const {
  if (!has_wavefunction_data()) throw InvalidArgument("table carries no wavefunction data");
  if (n < 0 || n > max_order()) throw InvalidOrder("order " + std::to_string(n) + " outside the table");
  return b_[static_cast<std::size_t>(n)];
}

RatPoly CoeffTable::wavefunction_polynomial(int n) const {
  if (n == 0) return RatPoly{Rational(1)};
  const auto& row = b_coefficients(n);
  std::vector<Rational> c(2 * row.size() + 1);
  for (std::size_t k = 1; k <= row.size(); ++k) c[2 * k] = row[k - 1];
  return RatPoly(std::move(c));
}

std::vector<Rational> CoeffTable::prefix(int count) const {
  if (count < 0 || count > max_order() + 1) {
    throw InvalidOrder("need " + std::to_string(count) + " coefficients, table has " +
                       std::to_string(max_order() + 1));
  }
  return {energies_.begin(), energies_.begin() + count};
}

Real partial_sum(const CoeffTable& table, int order, const Real& lam, Precision precision) {
  if (order < 0 || order > table.max_order()) {
    throw InvalidOrder("partial sum order " + std::to_string(order) + " exceeds table order " +
                       std::to_string(table.max_order()));
  }
  return poly_eval(RatPoly(table.prefix(order + 1)), lam, precision);
}

Real partial_sum(const CoeffTable& table, int order, const Rational& lam, Precision precision) {
  if (order < 0 || order > table.max_order()) {
    throw InvalidOrder("partial sum order " + std::to_string(order) + " exceeds table order " +
                       std::to_string(table.max_order()));
  }
  return poly_eval(RatPoly(table.prefix(order + 1)), lam, precision);
}

Rational asymptotic_ratio(const CoeffTable& table, int n) {
  return table.energy(n + 1) / table.energy(n);
}

}  // namespace resumlab
