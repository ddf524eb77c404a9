#include "povm_robust/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "povm_robust/error.hpp"

namespace povm {

void require_distribution(std::span<const double> p, double tol) {
  if (p.empty()) throw Error(ErrorCode::InvalidDistribution, "empty probability list");
  double total = 0.0;
  for (double x : p) {
    if (!std::isfinite(x) || x < 0.0)
      throw Error(ErrorCode::InvalidDistribution,
                  "probability entry " + std::to_string(x) + " is negative or non-finite");
    total += x;
  }
  if (std::abs(total - 1.0) > tol)
    throw Error(ErrorCode::InvalidDistribution,
                "probabilities sum to " + std::to_string(total));
}

Povm::Povm(std::vector<ComplexMatrix> elements, double completeness_tol, double psd_tol) {
  if (elements.empty()) throw Error(ErrorCode::InvalidPovm, "a POVM needs at least one element");
  dimension_ = elements.front().rows();
  if (dimension_ == 0) throw Error(ErrorCode::InvalidPovm, "zero-dimensional POVM");
  ComplexMatrix total(dimension_, dimension_);
  for (std::size_t a = 0; a < elements.size(); ++a) {
    auto& e = elements[a];
    if (e.rows() != dimension_ || e.cols() != dimension_)
      throw Error(ErrorCode::SizeMismatch,
                  "element " + std::to_string(a) + " has the wrong shape");
    require_hermitian(e);
    e = e.hermitian_part();
    const double lo = min_eigenvalue(e);
    if (lo < -psd_tol)
      throw Error(ErrorCode::NotPsd, "element " + std::to_string(a) +
                                         " has eigenvalue " + std::to_string(lo));
    total += e;
  }
  const double deviation = total.max_abs_diff(ComplexMatrix::identity(dimension_));
  if (deviation > completeness_tol)
    throw Error(ErrorCode::CompletenessViolation,
                "elements sum to identity only within " + std::to_string(deviation));
  elements_ = std::move(elements);
}

Povm validate_povm(std::vector<ComplexMatrix> candidate, double completeness_tol,
                   double psd_tol) {
  return Povm(std::move(candidate), completeness_tol, psd_tol);
}

StochasticMap::StochasticMap(std::vector<std::vector<double>> rows, double tol) {
  if (rows.empty()) throw Error(ErrorCode::InvalidDistribution, "stochastic map has no inputs");
  outputs_ = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != outputs_)
      throw Error(ErrorCode::SizeMismatch, "stochastic map rows differ in length");
    require_distribution(row, tol);
  }
  rows_ = std::move(rows);
}

StochasticMap identity_map(std::size_t n) {
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1.0;
  return StochasticMap(std::move(rows));
}

StochasticMap constant_map(std::size_t inputs, std::span<const double> q) {
  return StochasticMap(std::vector<std::vector<double>>(
      inputs, std::vector<double>(q.begin(), q.end())));
}

StochasticMap compose(const StochasticMap& first, const StochasticMap& second) {
  if (first.outputs() != second.inputs())
    throw Error(ErrorCode::SizeMismatch, "compose: intermediate alphabet sizes differ");
  std::vector<std::vector<double>> rows(first.inputs(),
                                        std::vector<double>(second.outputs(), 0.0));
  for (std::size_t a = 0; a < first.inputs(); ++a)
    for (std::size_t b = 0; b < first.outputs(); ++b)
      for (std::size_t c = 0; c < second.outputs(); ++c)
        rows[a][c] += second(b, c) * first(a, b);
  return StochasticMap(std::move(rows));
}

StochasticMap random_stochastic_map(std::size_t inputs, std::size_t outputs, Rng& rng) {
  // Rows drawn uniformly from the simplex (normalized exponentials).
  std::exponential_distribution<double> expo(1.0);
  std::vector<std::vector<double>> rows(inputs, std::vector<double>(outputs));
  for (auto& row : rows) {
    double total = 0.0;
    for (auto& x : row) total += (x = expo(rng));
    for (auto& x : row) x /= total;
  }
  return StochasticMap(std::move(rows));
}

StochasticMap random_stochastic_map(std::size_t inputs, std::size_t outputs,
                                    std::uint64_t seed) {
  Rng rng(seed);
  return random_stochastic_map(inputs, outputs, rng);
}

Povm trivial_povm(std::span<const double> q, std::size_t d) {
  require_distribution(q);
  std::vector<ComplexMatrix> elements;
  for (double qa : q) elements.push_back(ComplexMatrix::identity(d) * qa);
  return Povm(std::move(elements));
}

Povm projective_povm(std::span<const ComplexVector> basis) {
  const std::size_t d = basis.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (basis[i].size() != d)
      throw Error(ErrorCode::NotOrthonormal, "basis size must equal the dimension");
    for (std::size_t j = i; j < d; ++j) {
      const Complex ip = inner(basis[i], basis[j]);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(ip - expected) > tol::kOrthonormal)
        throw Error(ErrorCode::NotOrthonormal, "basis vectors " + std::to_string(i) + " and " +
                                                   std::to_string(j) + " are not orthonormal");
    }
  }
  std::vector<ComplexMatrix> elements;
  for (const auto& e : basis) elements.push_back(ComplexMatrix::outer(e));
  return Povm(std::move(elements));
}

Povm rank_one_povm(std::span<const double> weights, std::span<const ComplexVector> states) {
  if (weights.size() != states.size())
    throw Error(ErrorCode::SizeMismatch, "rank_one_povm: weight and state counts differ");
  std::vector<ComplexMatrix> elements;
  for (std::size_t a = 0; a < weights.size(); ++a)
    elements.push_back(ComplexMatrix::outer(states[a]) * weights[a]);
  return Povm(std::move(elements));
}

Povm post_process(const Povm& m, const StochasticMap& map) {
  if (map.inputs() != m.outcomes())
    throw Error(ErrorCode::SizeMismatch, "post_process: map expects " +
                                             std::to_string(map.inputs()) + " outcomes, POVM has " +
                                             std::to_string(m.outcomes()));
  const std::size_t d = m.dimension();
  std::vector<ComplexMatrix> out(map.outputs(), ComplexMatrix(d, d));
  for (std::size_t a = 0; a < m.outcomes(); ++a)
    for (std::size_t b = 0; b < map.outputs(); ++b)
      if (map(a, b) != 0.0) out[b] += m[a] * map(a, b);
  return Povm(std::move(out));
}

Povm depolarize_povm(const Povm& m, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw Error(ErrorCode::EtaOutOfRange, "depolarizing weight must lie in [0,1]");
  const std::size_t d = m.dimension();
  std::vector<ComplexMatrix> out;
  for (const auto& e : m.elements())
    out.push_back(e * (1.0 - eta) +
                  ComplexMatrix::identity(d) * (eta * e.trace().real() / double(d)));
  return Povm(std::move(out));
}

Povm random_povm(std::size_t d, std::size_t o, Rng& rng) {
  if (d == 0 || o == 0) throw Error(ErrorCode::SizeMismatch, "random_povm: d, o must be >= 1");
  if (o == 1) return Povm({ComplexMatrix::identity(d)});
  std::vector<ComplexMatrix> w;
  ComplexMatrix s(d, d);
  for (std::size_t a = 0; a < o; ++a) {
    const auto g = complex_gaussian_matrix(d, d, rng);
    w.push_back((g * g.adjoint()).hermitian_part());
    s += w.back();
  }
  const auto inv_sqrt = apply_spectral(eig_hermitian(s), [](double x) { return 1.0 / std::sqrt(x); });
  for (auto& e : w) e = (inv_sqrt * e * inv_sqrt).hermitian_part();
  return Povm(std::move(w));
}

Povm random_povm(std::size_t d, std::size_t o, std::uint64_t seed) {
  Rng rng(seed);
  return random_povm(d, o, rng);
}

Povm computational_basis_povm(std::size_t d) {
  std::vector<ComplexVector> basis(d, ComplexVector(d));
  for (std::size_t i = 0; i < d; ++i) basis[i][i] = 1.0;
  return projective_povm(basis);
}

Povm fourier_basis_povm(std::size_t d) {
  std::vector<ComplexVector> basis(d, ComplexVector(d));
  const double norm = 1.0 / std::sqrt(double(d));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j)
      basis[k][j] = std::polar(norm, 2.0 * std::numbers::pi * double(j * k) / double(d));
  return projective_povm(basis);
}

Povm qubit_x_povm() {
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<ComplexVector> basis{{h, h}, {h, -h}};
  return projective_povm(basis);
}

namespace {

ComplexVector bloch_state(double polar, double azimuth) {
  return {std::cos(polar / 2.0), std::polar(std::sin(polar / 2.0), azimuth)};
}

}  // namespace

Povm qubit_trine_povm() {
  std::vector<ComplexVector> states;
  for (int k = 0; k < 3; ++k) states.push_back(bloch_state(2.0 * std::numbers::pi * k / 3.0, 0.0));
  const std::vector<double> weights(3, 2.0 / 3.0);
  return rank_one_povm(weights, states);
}

Povm qubit_sic_povm() {
  const double polar = std::acos(-1.0 / 3.0);
  std::vector<ComplexVector> states{bloch_state(0.0, 0.0)};
  for (int k = 0; k < 3; ++k) states.push_back(bloch_state(polar, 2.0 * std::numbers::pi * k / 3.0));
  const std::vector<double> weights(4, 0.5);
  return rank_one_povm(weights, states);
}

}  // namespace povm
