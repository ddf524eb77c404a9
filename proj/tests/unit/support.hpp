#pragma once

#include <gtest/gtest.h>

#include "povm_robust/error.hpp"
#include "povm_robust/numerics.hpp"

namespace povm::testing {

inline ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  return complex_gaussian_matrix(d, d, rng).hermitian_part();
}

inline ::testing::AssertionResult matrices_near(const ComplexMatrix& a, const ComplexMatrix& b,
                                                double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return ::testing::AssertionFailure() << "shape mismatch";
  const double diff = a.max_abs_diff(b);
  if (diff <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max entry difference " << diff << " > " << tol;
}

/// Runs f and checks it throws povm::Error carrying `code`.
template <typename F>
::testing::AssertionResult throws_code(F&& f, ErrorCode code) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() == code) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "threw " << to_string(e.code()) << ": " << e.what();
  }
  return ::testing::AssertionFailure() << "did not throw";
}

}  // namespace povm::testing
