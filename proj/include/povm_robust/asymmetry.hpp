#pragma once

#include <cstddef>
#include <vector>

#include "povm_robust/discrimination.hpp"
#include "povm_robust/domsdp.hpp"

namespace povm {

namespace tol {
inline constexpr double kGroupUnitary = 1e-9;
inline constexpr double kGroupClosure = 1e-8;
inline constexpr double kSymmetric = 1e-6;
inline constexpr double kSubspaceDrop = 1e-9;
}  // namespace tol

/// A finite group given as explicit unitaries. Closure and the identity are
/// checked up to a global phase, |tr(A^dagger B)| = d.
class GroupRepresentation {
 public:
  explicit GroupRepresentation(std::vector<ComplexMatrix> unitaries,
                               double unitary_tol = tol::kGroupUnitary,
                               double closure_tol = tol::kGroupClosure);

  std::size_t dimension() const noexcept { return unitaries_.front().rows(); }
  std::size_t order() const noexcept { return unitaries_.size(); }
  const std::vector<ComplexMatrix>& unitaries() const noexcept { return unitaries_; }
  std::size_t identity_index() const noexcept { return identity_; }

 private:
  std::vector<ComplexMatrix> unitaries_;
  std::size_t identity_ = 0;
};

/// Cyclic group generated by diag(1, w, w^2, ...), w = exp(2 pi i / d);
/// its twirl is complete dephasing in the computational basis.
GroupRepresentation dephasing_group(std::size_t d);

/// (1/|H|) sum_h U_h rho U_h^dagger
ComplexMatrix twirl(const ComplexMatrix& rho, const GroupRepresentation& g);

bool is_symmetric(const ComplexMatrix& rho, const GroupRepresentation& g,
                  double tol = tol::kSymmetric);

/// Orthonormal basis of the twirl-invariant Hermitian operators.
std::vector<ComplexMatrix> symmetric_subspace_basis(const GroupRepresentation& g,
                                                    double drop_tol = tol::kSubspaceDrop);

/// Uniform ensemble over the orbit {U_h rho U_h^dagger}.
Ensemble orbit_ensemble(const ComplexMatrix& rho, const GroupRepresentation& g);

struct AsymmetryReport {
  double value = 0.0;
  /// sigma~ = (1 + s) sigma: symmetric, dominates rho, trace 1 + value.
  ComplexMatrix dominating_operator;
  /// |H| times the optimal guessing probability of the orbit ensemble.
  double game_advantage = 0.0;
  /// Accessible min-information of the orbit ensemble, in bits.
  double min_info = 0.0;
  SdpSolution solution;
};

/// Robustness of asymmetry as min tr(sigma~) - 1 over symmetric sigma~ >= rho.
/// The game and min-information fields come from separate solves over the
/// orbit ensemble.
AsymmetryReport roa(const ComplexMatrix& rho, const GroupRepresentation& g,
                    const SdpOptions& options = {});

/// Robustness of coherence: roa under dephasing_group(d).
AsymmetryReport roc(const ComplexMatrix& rho, const SdpOptions& options = {});

}  // namespace povm
