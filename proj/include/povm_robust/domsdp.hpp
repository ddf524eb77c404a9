#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "povm_robust/discrimination.hpp"
#include "povm_robust/lp.hpp"
#include "povm_robust/measurement.hpp"

namespace povm {

/// minimize tr Y  over  Y = sum_j x_j B_j (x real)  subject to  Y >= K_i.
struct DominanceProgram {
  std::size_t dimension = 0;
  std::vector<ComplexMatrix> basis;
  std::vector<ComplexMatrix> constraints;

  /// Hermitian pieces, matching sizes, and a full-rank Gram matrix of the
  /// basis (smallest eigenvalue above 1e-9 of the largest).
  void validate() const;
};

enum class SdpStatus { Optimal, IterationLimit, Infeasible };

std::string_view to_string(SdpStatus status) noexcept;

struct SdpSolution {
  SdpStatus status = SdpStatus::IterationLimit;
  ComplexMatrix optimizer;
  std::vector<double> coordinates;
  double value = 0.0;
  std::size_t cuts = 0;
  std::size_t rounds = 0;
  /// min_i lambda_min(Y* - K_i)
  double min_slack = 0.0;
  /// Master LP value after each round; nondecreasing.
  std::vector<double> value_history;
};

struct SdpOptions {
  double slack_tol = 1e-7;
  std::size_t max_cuts = 10000;
  LpOptions lp;
  /// When set, one JSON line per round: {"iteration","value","worst_slack"}.
  std::ostream* trace = nullptr;
};

/// Kelley cutting planes. The master LP lives in subspace coordinates; every
/// negative eigenpair (lambda, v) of Y(x) - K_i below -slack_tol yields the
/// cut v^dagger Y(x) v >= v^dagger K_i v. The eigenbases of all K_i seed the
/// first master so that tr Y is bounded from the start.
SdpSolution solve_dominating(const DominanceProgram& program, const SdpOptions& options = {});

/// Robustness via the primal program (per-outcome scalars q(a) with
/// q(a) I >= M_a), embedded block-diagonally. Throws on solver failure.
double rom_via_sdp(const Povm& m, const SdpOptions& options = {});

/// Optimal guessing probability over all measurements: min tr Y s.t.
/// Y >= p(x) sigma_x. Throws on solver failure.
double min_error_guess_value(const Ensemble& e, const SdpOptions& options = {});

}  // namespace povm
