#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "povm_robust/discrimination.hpp"
#include "povm_robust/lp.hpp"
#include "povm_robust/measurement.hpp"

namespace povm {

enum class Verdict { Simulable, NotSimulable };

std::string_view to_string(Verdict v) noexcept;

/// Dual solution of the elastic simulation LP. For every pair (a, b):
///   offsets[a] + tr[operators[b] M_a] <= 0,
/// while  sum_a offsets[a] + sum_b tr[operators[b] M'_b] = residual > 0.
struct SimulabilityCertificate {
  std::vector<ComplexMatrix> operators;  // Z_b, one per target outcome
  std::vector<double> offsets;           // u_a, one per source outcome
  double residual = 0.0;                 // l1 distance to the simulable set
};

struct SimulabilityResult {
  Verdict verdict = Verdict::NotSimulable;
  std::optional<StochasticMap> map;
  std::optional<SimulabilityCertificate> certificate;
  std::optional<Ensemble> witness;
  /// p_guess(witness, target) - p_guess(witness, source)
  std::optional<double> gap;
  /// Max entry of |post_process(M, map) - M'| when simulable.
  double reconstruction_residual = 0.0;
};

struct SimulabilityOptions {
  /// Per-coordinate tolerance on the operator equalities.
  double equality_tol = 1e-9;
  double reconstruction_tol = 1e-7;
  double min_gap = 1e-9;
  std::size_t witness_trials = 10000;
  std::uint64_t seed = 0x5eed;
  LpOptions lp;
};

/// p_guess(e, target) - p_guess(e, source)
double guessing_gap(const Ensemble& e, const Povm& source, const Povm& target);

/// Decides whether target_b = sum_a p(b|a) M_a for some stochastic p. The
/// operator equalities are written in the orthonormal Hermitian basis and
/// relaxed by slack pairs whose l1 mass is minimized; a zero optimum gives
/// the map, a positive one gives a separating certificate and a verified
/// discrimination-game witness.
SimulabilityResult is_simulable(const Povm& source, const Povm& target,
                                const SimulabilityOptions& options = {});

/// Shifts every Z_b by the same multiple of the identity until all are PSD,
/// then reads states from the normalized operators and priors from their
/// traces. If that ensemble does not show a gap of at least `min_gap`, a
/// seeded random search over ensembles built from certificate eigenvectors
/// takes over. Throws WitnessSearchExhausted when nothing is found.
Ensemble witness_from_certificate(const Povm& source, const Povm& target,
                                  const SimulabilityCertificate& certificate,
                                  const SimulabilityOptions& options = {});

/// Necessary condition for simulability: no random ensemble lets the target
/// beat the source by more than 1e-9.
bool monotone_suite(const Povm& source, const Povm& target, std::size_t n_ensembles,
                    std::uint64_t seed);

}  // namespace povm
