#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "povm_robust/measurement.hpp"

namespace povm {

namespace tol {
inline constexpr double kStateTrace = 1e-9;
}  // namespace tol

/// Throws InvalidEnsemble unless rho is Hermitian, PSD and unit-trace.
void require_density_matrix(const ComplexMatrix& rho, double tol = tol::kStateTrace);

/// States sigma_x with priors p(x). States and priors are renormalized after
/// validation so downstream sums are exact to rounding.
class Ensemble {
 public:
  Ensemble(std::vector<ComplexMatrix> states, std::vector<double> priors,
           double state_tol = tol::kStateTrace, double prior_tol = tol::kDistribution);

  std::size_t dimension() const noexcept { return states_.front().rows(); }
  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<ComplexMatrix>& states() const noexcept { return states_; }
  const std::vector<double>& priors() const noexcept { return priors_; }

 private:
  std::vector<ComplexMatrix> states_;
  std::vector<double> priors_;
};

/// max_x p(x)
double p_guess_classical(const Ensemble& e);

/// sum_a max_x p(x) tr[sigma_x M_a], attained by the argmax relabeling.
double p_guess_with_measurement(const Ensemble& e, const Povm& m);

/// Guess for each outcome a: argmax_x p(x) tr[sigma_x M_a], lowest x on ties.
std::vector<std::size_t> optimal_guesses(const Ensemble& e, const Povm& m);

/// p_guess_with_measurement / p_guess_classical
double advantage(const Ensemble& e, const Povm& m);

/// Uniform ensemble over the dual states of the robustness; its advantage
/// equals 1 + rom(m).
Ensemble optimal_ensemble(const Povm& m);

ComplexVector random_pure_state(std::size_t d, Rng& rng);
/// Ginibre-distributed state of random rank in [1, d].
ComplexMatrix random_density_matrix(std::size_t d, Rng& rng);
/// n random states with priors uniform on the simplex.
Ensemble random_ensemble(std::size_t d, std::size_t n, Rng& rng);
Ensemble random_ensemble(std::size_t d, std::size_t n, std::uint64_t seed);

}  // namespace povm
