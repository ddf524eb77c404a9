#include "povm_robust/single_shot_info.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "povm_robust/error.hpp"
#include "povm_robust/rom.hpp"

namespace povm {

JointDistribution::JointDistribution(std::vector<std::vector<double>> p, double tol) {
  if (p.empty() || p.front().empty())
    throw Error(ErrorCode::InvalidJoint, "joint distribution is empty");
  const std::size_t cols = p.front().size();
  double total = 0.0;
  for (const auto& row : p) {
    if (row.size() != cols) throw Error(ErrorCode::InvalidJoint, "joint distribution is ragged");
    for (double v : row) {
      if (!std::isfinite(v) || v < 0.0)
        throw Error(ErrorCode::InvalidJoint, "joint entry " + std::to_string(v) + " is invalid");
      total += v;
    }
  }
  if (std::abs(total - 1.0) > tol)
    throw Error(ErrorCode::InvalidJoint, "joint distribution sums to " + std::to_string(total));
  p_ = std::move(p);
}

std::vector<double> JointDistribution::marginal_input() const {
  std::vector<double> px;
  px.reserve(p_.size());
  for (const auto& row : p_) {
    double s = 0.0;
    for (double v : row) s += v;
    px.push_back(s);
  }
  return px;
}

double h_min(std::span<const double> p) {
  require_distribution(p);
  return -std::log2(*std::max_element(p.begin(), p.end()));
}

namespace {

double guessing_with_side_information(const JointDistribution& joint) {
  double total = 0.0;
  for (std::size_t g = 0; g < joint.outputs(); ++g) {
    double best = 0.0;
    for (std::size_t x = 0; x < joint.inputs(); ++x) best = std::max(best, joint(x, g));
    total += best;
  }
  return total;
}

}  // namespace

double h_min_cond(const JointDistribution& joint) {
  return -std::log2(guessing_with_side_information(joint));
}

double i_min(const JointDistribution& joint) {
  const auto px = joint.marginal_input();
  const double p_max = *std::max_element(px.begin(), px.end());
  return std::log2(guessing_with_side_information(joint) / p_max);
}

JointDistribution joint_from_game(const Ensemble& e, const Povm& m) {
  if (e.dimension() != m.dimension())
    throw Error(ErrorCode::DimensionMismatch, "joint_from_game: ensemble and POVM dimensions differ");
  std::vector<std::vector<double>> p(e.size(), std::vector<double>(m.outcomes()));
  for (std::size_t x = 0; x < e.size(); ++x)
    for (std::size_t a = 0; a < m.outcomes(); ++a)
      p[x][a] = std::max(0.0, e.priors()[x] * hs_inner(e.states()[x], m[a]).real());
  return JointDistribution(std::move(p));
}

AccessibleMinInfo acc_min_info_measurement(const Povm& m) {
  return {std::log2(1.0 + rom(m)), optimal_ensemble(m)};
}

double acc_min_info_ensemble(const Ensemble& e, const SdpOptions& options) {
  return std::log2(min_error_guess_value(e, options) / p_guess_classical(e));
}

}  // namespace povm
