#pragma once

#include <optional>
#include <vector>

#include "povm_robust/measurement.hpp"

namespace povm {

namespace tol {
/// Below this robustness a measurement is treated as trivial and no
/// pseudo-mixture is built (the noise POVM would divide by ~0).
inline constexpr double kTrivialRobustness = 1e-9;
inline constexpr double kPseudoMixture = 1e-8;
}  // namespace tol

/// M_a = (1 + r) q(a) I - r N_a
struct PseudoMixture {
  double r = 0.0;
  Povm noise;
  std::vector<double> q;
};

struct RobustnessReport {
  double value = 0.0;
  /// Optimal primal weights: the operator norms ||M_a||.
  std::vector<double> primal_weights;
  /// Optimal dual states: projectors onto a top eigenvector of each M_a.
  std::vector<ComplexMatrix> dual_states;
  /// Absent when the measurement is trivial.
  std::optional<PseudoMixture> pseudo_mixture;

  bool trivial() const noexcept { return !pseudo_mixture.has_value(); }
};

/// Robustness of Measurement, sum_a ||M_a||_inf - 1.
double rom(const Povm& m);

/// Closed-form primal and dual optimizers together with the pseudo-mixture.
/// Ties in the top eigenvalue of M_a pick the first maximal eigenvector of
/// the ascending decomposition.
RobustnessReport rom_report(const Povm& m);

/// The feasible pair N_a = (tr[M_a] I - M_a)/(d-1), q(a) = tr[M_a]/d with
/// r = d - 1. Throws DimensionOne for d = 1.
PseudoMixture uniform_noise_mixture(const Povm& m);

/// True iff every (M_a + r N_a)/(1 + r) is within `tol` (max entry) of q(a) I.
bool verify_pseudo_mixture(const Povm& m, const Povm& noise, const std::vector<double>& q,
                           double r, double tol = tol::kPseudoMixture);

}  // namespace povm
