#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "povm_robust/discrimination.hpp"
#include "povm_robust/domsdp.hpp"

namespace povm {

// All entropies and informations are in bits.

/// p(x, g) indexed [x][g].
class JointDistribution {
 public:
  explicit JointDistribution(std::vector<std::vector<double>> p,
                             double tol = tol::kDistribution);

  std::size_t inputs() const noexcept { return p_.size(); }
  std::size_t outputs() const noexcept { return p_.front().size(); }
  double operator()(std::size_t x, std::size_t g) const { return p_[x][g]; }
  const std::vector<std::vector<double>>& rows() const noexcept { return p_; }
  std::vector<double> marginal_input() const;

 private:
  std::vector<std::vector<double>> p_;
};

/// -log2 max_x p(x)
double h_min(std::span<const double> p);
/// -log2 sum_g max_x p(x, g)
double h_min_cond(const JointDistribution& joint);
/// h_min(X) - h_min_cond(X|G)
double i_min(const JointDistribution& joint);

/// p(x, a) = p(x) tr[sigma_x M_a]
JointDistribution joint_from_game(const Ensemble& e, const Povm& m);

struct AccessibleMinInfo {
  double value = 0.0;
  Ensemble witness;
};

/// log2(1 + rom(m)); the witness encoding is the optimal ensemble, decoded
/// by reading the outcome register directly.
AccessibleMinInfo acc_min_info_measurement(const Povm& m);

/// log2(min_error_guess_value(e) / p_guess_classical(e))
double acc_min_info_ensemble(const Ensemble& e, const SdpOptions& options = {});

}  // namespace povm
