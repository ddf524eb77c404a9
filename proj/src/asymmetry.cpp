#include "povm_robust/asymmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "povm_robust/error.hpp"
#include "povm_robust/single_shot_info.hpp"

namespace povm {

namespace {

bool equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return std::abs(std::abs(hs_inner(a, b)) - double(a.rows())) <= tol;
}

}  // namespace

GroupRepresentation::GroupRepresentation(std::vector<ComplexMatrix> unitaries,
                                         double unitary_tol, double closure_tol) {
  if (unitaries.empty()) throw Error(ErrorCode::InvalidGroup, "group has no elements");
  const std::size_t d = unitaries.front().rows();
  for (std::size_t h = 0; h < unitaries.size(); ++h) {
    const auto& u = unitaries[h];
    if (u.rows() != d || u.cols() != d)
      throw Error(ErrorCode::InvalidGroup, "group element " + std::to_string(h) + " has the wrong shape");
    if (!u.all_finite() || unitarity_defect(u) > unitary_tol)
      throw Error(ErrorCode::InvalidGroup, "group element " + std::to_string(h) + " is not unitary");
  }
  const auto eye = ComplexMatrix::identity(d);
  auto id = std::find_if(unitaries.begin(), unitaries.end(), [&](const ComplexMatrix& u) {
    return equal_up_to_phase(u, eye, closure_tol);
  });
  if (id == unitaries.end()) throw Error(ErrorCode::InvalidGroup, "group lacks the identity");
  identity_ = std::size_t(id - unitaries.begin());
  for (const auto& a : unitaries)
    for (const auto& b : unitaries) {
      const auto prod = a * b;
      if (std::none_of(unitaries.begin(), unitaries.end(), [&](const ComplexMatrix& u) {
            return equal_up_to_phase(u, prod, closure_tol);
          }))
        throw Error(ErrorCode::InvalidGroup, "group is not closed under multiplication");
    }
  unitaries_ = std::move(unitaries);
}

GroupRepresentation dephasing_group(std::size_t d) {
  std::vector<ComplexMatrix> elements;
  for (std::size_t k = 0; k < d; ++k) {
    ComplexMatrix u(d, d);
    for (std::size_t j = 0; j < d; ++j)
      u(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * double((j * k) % d) / double(d));
    elements.push_back(std::move(u));
  }
  return GroupRepresentation(std::move(elements));
}

ComplexMatrix twirl(const ComplexMatrix& rho, const GroupRepresentation& g) {
  if (rho.rows() != g.dimension() || rho.cols() != g.dimension())
    throw Error(ErrorCode::DimensionMismatch, "twirl: state and group dimensions differ");
  ComplexMatrix out(rho.rows(), rho.cols());
  for (const auto& u : g.unitaries()) out += u * rho * u.adjoint();
  return (out * (1.0 / double(g.order()))).hermitian_part();
}

bool is_symmetric(const ComplexMatrix& rho, const GroupRepresentation& g, double tol) {
  return rho.max_abs_diff(twirl(rho, g)) <= tol;
}

std::vector<ComplexMatrix> symmetric_subspace_basis(const GroupRepresentation& g,
                                                    double drop_tol) {
  std::vector<ComplexMatrix> basis;
  for (const auto& h : hermitian_basis(g.dimension())) {
    auto v = twirl(h, g);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) v -= q * hs_inner(q, v).real();
    const double norm = v.frobenius_norm();
    if (norm > drop_tol) basis.push_back(v * (1.0 / norm));
  }
  return basis;
}

Ensemble orbit_ensemble(const ComplexMatrix& rho, const GroupRepresentation& g) {
  if (rho.rows() != g.dimension() || rho.cols() != g.dimension())
    throw Error(ErrorCode::DimensionMismatch, "orbit_ensemble: state and group dimensions differ");
  std::vector<ComplexMatrix> states;
  for (const auto& u : g.unitaries()) states.push_back((u * rho * u.adjoint()).hermitian_part());
  return Ensemble(std::move(states), std::vector<double>(g.order(), 1.0 / double(g.order())));
}

AsymmetryReport roa(const ComplexMatrix& rho, const GroupRepresentation& g,
                    const SdpOptions& options) {
  if (rho.rows() != g.dimension() || rho.cols() != g.dimension())
    throw Error(ErrorCode::DimensionMismatch, "roa: state and group dimensions differ");
  require_density_matrix(rho);

  DominanceProgram program;
  program.dimension = g.dimension();
  program.basis = symmetric_subspace_basis(g);
  program.constraints = {rho.hermitian_part()};
  auto sol = solve_dominating(program, options);
  if (sol.status != SdpStatus::Optimal)
    throw Error(ErrorCode::SolverFailure,
                std::string("roa: dominating-operator solve ended with status ") +
                    std::string(to_string(sol.status)));

  AsymmetryReport report;
  report.value = std::max(0.0, sol.value - 1.0);
  report.dominating_operator = sol.optimizer;
  const auto orbit = orbit_ensemble(rho, g);
  report.game_advantage = double(g.order()) * min_error_guess_value(orbit, options);
  report.min_info = acc_min_info_ensemble(orbit, options);
  report.solution = std::move(sol);
  return report;
}

AsymmetryReport roc(const ComplexMatrix& rho, const SdpOptions& options) {
  return roa(rho, dephasing_group(rho.rows()), options);
}

}  // namespace povm
