#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "povm_robust/numerics.hpp"

namespace povm {

namespace tol {
inline constexpr double kCompleteness = 1e-8;
inline constexpr double kDistribution = 1e-10;
inline constexpr double kOrthonormal = 1e-9;
}  // namespace tol

/// Checks entries are nonnegative and sum to one; throws InvalidDistribution.
void require_distribution(std::span<const double> p, double tol = tol::kDistribution);

/// A validated POVM {M_a}: Hermitian PSD elements of equal dimension summing
/// to the identity. Outcome labels are element indices and order is kept.
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix> elements,
                double completeness_tol = tol::kCompleteness,
                double psd_tol = tol::kPsd);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t outcomes() const noexcept { return elements_.size(); }
  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
  const ComplexMatrix& operator[](std::size_t a) const { return elements_[a]; }

 private:
  std::size_t dimension_ = 0;
  std::vector<ComplexMatrix> elements_;
};

Povm validate_povm(std::vector<ComplexMatrix> candidate,
                   double completeness_tol = tol::kCompleteness,
                   double psd_tol = tol::kPsd);

/// Conditional distribution p(out|in), stored as rows indexed [in][out].
class StochasticMap {
 public:
  explicit StochasticMap(std::vector<std::vector<double>> rows,
                         double tol = tol::kDistribution);

  std::size_t inputs() const noexcept { return rows_.size(); }
  std::size_t outputs() const noexcept { return outputs_; }
  /// p(out | in)
  double operator()(std::size_t in, std::size_t out) const { return rows_[in][out]; }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }

 private:
  std::size_t outputs_ = 0;
  std::vector<std::vector<double>> rows_;
};

StochasticMap identity_map(std::size_t n);
/// p(b|a) = q(b) for every input a.
StochasticMap constant_map(std::size_t inputs, std::span<const double> q);
/// The map "apply first, then second": p(c|a) = sum_b second(c|b) first(b|a).
StochasticMap compose(const StochasticMap& first, const StochasticMap& second);
StochasticMap random_stochastic_map(std::size_t inputs, std::size_t outputs, Rng& rng);
StochasticMap random_stochastic_map(std::size_t inputs, std::size_t outputs,
                                    std::uint64_t seed);

/// {q(a) I}
Povm trivial_povm(std::span<const double> q, std::size_t d);
/// {|e_a><e_a|} for an orthonormal basis of C^d.
Povm projective_povm(std::span<const ComplexVector> basis);
/// {alpha_a |psi_a><psi_a|}; completeness is checked, not enforced.
Povm rank_one_povm(std::span<const double> weights, std::span<const ComplexVector> states);

/// M'_b = sum_a p(b|a) M_a
Povm post_process(const Povm& m, const StochasticMap& map);
/// (1 - eta) M_a + eta tr[M_a] I / d
Povm depolarize_povm(const Povm& m, double eta);

/// o Wishart draws W_a = G_a G_a^dagger, normalized as S^{-1/2} W_a S^{-1/2}.
Povm random_povm(std::size_t d, std::size_t o, Rng& rng);
Povm random_povm(std::size_t d, std::size_t o, std::uint64_t seed);

// Named measurements used throughout tests and examples.
Povm computational_basis_povm(std::size_t d);
Povm fourier_basis_povm(std::size_t d);
Povm qubit_x_povm();
/// Three qubit states 120 degrees apart on a great circle, weights 2/3.
Povm qubit_trine_povm();
/// Tetrahedral qubit SIC, weights 1/2.
Povm qubit_sic_povm();

}  // namespace povm
