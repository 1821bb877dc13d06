#include "hlab/linear_operator.hpp"

#include <algorithm>
#include <cmath>

#include "hlab/errors.hpp"
#include "hlab/random.hpp"

namespace hlab {

Complex inner(const CVector& z, const CVector& a) {
  if (z.size() != a.size()) throw InvalidInput("inner product: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(a[i]);
  return s;
}

double cnorm(const CVector& z) {
  double s = 0.0;
  for (const auto& c : z) s += std::norm(c);
  return std::sqrt(s);
}

CVector cadd(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw InvalidInput("vector sum: dimension mismatch");
  CVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

CVector csub(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw InvalidInput("vector difference: dimension mismatch");
  CVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

CVector cscale(const CVector& a, Complex s) {
  CVector r(a);
  for (auto& c : r) c *= s;
  return r;
}

CVector to_complex(const Point& x) {
  if (x.size() % 2 != 0) throw InvalidInput("complex coordinates need an even real dimension");
  CVector z(x.size() / 2);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = {x[2 * i], x[2 * i + 1]};
  return z;
}

Point to_real(const CVector& z) {
  Point x(2 * z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    x[2 * i] = z[i].real();
    x[2 * i + 1] = z[i].imag();
  }
  return x;
}

LinearOperator::LinearOperator(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0)) {
  if (rows == 0 || cols == 0) throw InvalidInput("linear operator needs positive dimensions");
}

LinearOperator LinearOperator::from_rows(const std::vector<CVector>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidInput("linear operator: empty matrix");
  LinearOperator L(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != L.cols_) throw InvalidInput("linear operator: ragged rows");
    for (std::size_t j = 0; j < L.cols_; ++j) L(i, j) = rows[i][j];
  }
  if (!L.is_finite()) throw InvalidInput("linear operator: non-finite entry");
  return L;
}

LinearOperator LinearOperator::identity(std::size_t n) {
  LinearOperator L(n, n);
  for (std::size_t i = 0; i < n; ++i) L(i, i) = 1.0;
  return L;
}

LinearOperator LinearOperator::outer(const CVector& u, const CVector& v) {
  LinearOperator L(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) L(i, j) = u[i] * std::conj(v[j]);
  return L;
}

CVector LinearOperator::apply(const CVector& z) const {
  if (z.size() != cols_) throw InvalidInput("operator apply: dimension mismatch");
  CVector r(rows_, Complex(0.0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * z[j];
  return r;
}

LinearOperator LinearOperator::adjoint() const {
  LinearOperator r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

LinearOperator LinearOperator::compose(const LinearOperator& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidInput("operator composition: dimension mismatch");
  LinearOperator r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex a = (*this)(i, k);
      for (std::size_t j = 0; j < rhs.cols_; ++j) r(i, j) += a * rhs(k, j);
    }
  return r;
}

LinearOperator LinearOperator::scaled(Complex s) const {
  LinearOperator r(*this);
  for (auto& c : r.data_) c *= s;
  return r;
}

LinearOperator LinearOperator::plus(const LinearOperator& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("operator sum: dimension mismatch");
  LinearOperator r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += rhs.data_[i];
  return r;
}

LinearOperator LinearOperator::minus(const LinearOperator& rhs) const {
  return plus(rhs.scaled(-1.0));
}

double LinearOperator::max_abs_diff(const LinearOperator& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("operator difference: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - rhs.data_[i]));
  return m;
}

bool LinearOperator::is_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

nlohmann::json to_json(const LinearOperator& L) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < L.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < L.cols(); ++j) row.push_back({L(i, j).real(), L(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

double operator_norm(const LinearOperator& L, const OperatorNormOptions& options) {
  if (!L.is_finite()) throw InvalidInput("operator norm: non-finite entry");
  const LinearOperator A = L.adjoint().compose(L);
  Rng rng(options.seed);
  double best = 0.0;
  for (std::size_t run = 0; run <= options.restarts; ++run) {
    CVector v(A.cols());
    for (auto& c : v) c = {rng.normal(), rng.normal()};
    v = cscale(v, 1.0 / cnorm(v));
    double lambda = 0.0;
    bool converged = false;
    for (std::size_t it = 0; it < options.max_iterations; ++it) {
      const CVector w = A.apply(v);
      const double next = inner(w, v).real();
      const double wn = cnorm(w);
      if (wn == 0.0) {
        lambda = 0.0;
        converged = true;
        break;
      }
      v = cscale(w, 1.0 / wn);
      if (it > 0 && std::abs(next - lambda) <= options.tolerance * std::max(1.0, next)) {
        lambda = next;
        converged = true;
        break;
      }
      lambda = next;
    }
    if (!converged)
      throw ConvergenceError("operator norm: power iteration did not stabilise", std::sqrt(best),
                             std::sqrt(std::max(lambda, 0.0)));
    best = std::max(best, lambda);
  }
  return std::sqrt(std::max(best, 0.0));
}

}  // namespace hlab
