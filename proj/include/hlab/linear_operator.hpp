#pragma once

// Complex matrices standing for continuous linear maps ℂⁿ → ℂᵐ.

#include <complex>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "hlab/metric_core.hpp"

namespace hlab {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// ⟨z, a⟩ = Σ z_i conj(a_i)
Complex inner(const CVector& z, const CVector& a);
double cnorm(const CVector& z);
CVector cadd(const CVector& a, const CVector& b);
CVector csub(const CVector& a, const CVector& b);
CVector cscale(const CVector& a, Complex s);

/// ℂⁿ ↔ ℝ²ⁿ, interleaved (re, im).
CVector to_complex(const Point& x);
Point to_real(const CVector& z);

class LinearOperator {
 public:
  LinearOperator(std::size_t rows, std::size_t cols);
  /// Throws InvalidInput on ragged rows or non-finite entries.
  static LinearOperator from_rows(const std::vector<CVector>& rows);
  static LinearOperator identity(std::size_t n);
  static LinearOperator zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// u vᴴ
  static LinearOperator outer(const CVector& u, const CVector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  CVector apply(const CVector& z) const;
  LinearOperator adjoint() const;
  /// (*this) ∘ rhs
  LinearOperator compose(const LinearOperator& rhs) const;
  LinearOperator scaled(Complex s) const;
  LinearOperator plus(const LinearOperator& rhs) const;
  LinearOperator minus(const LinearOperator& rhs) const;
  /// max |entry| of (*this − rhs)
  double max_abs_diff(const LinearOperator& rhs) const;
  bool is_finite() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

nlohmann::json to_json(const LinearOperator& L);

struct OperatorNormOptions {
  double tolerance = 1e-12;
  std::size_t max_iterations = 10000;
  std::size_t restarts = 2;
  std::uint64_t seed = 0x6e6f726dULL;
};

/// Largest singular value by power iteration on Lᴴ L from seeded random
/// starts (one run plus `restarts`), stopping when the Rayleigh quotient
/// changes by at most tolerance · max(1, λ). Throws ConvergenceError when a run
/// exhausts max_iterations.
double operator_norm(const LinearOperator& L, const OperatorNormOptions& options = {});

}  // namespace hlab
