#pragma once

// Small dense complex linear algebra for (2S+1)-dimensional problems.
//
// Only what the modulator model needs: products, Hermitian eigensolver
// (cyclic Jacobi), and the exponential of skew-Hermitian matrices through
// the spectral decomposition.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eom/errors.hpp"

namespace eom {

using cplx = std::complex<double>;

inline constexpr double HERM_TOL = 1e-12;
inline constexpr double RECON_TOL = 1e-10;

/// Row-major dense complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw ParameterError("ComplexMatrix: dimensions must be >= 1");
    }
  }

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
      throw ParameterError("ComplexMatrix: dimensions must be >= 1");
    }
    if (data_.size() != rows * cols) {
      throw ParameterError("ComplexMatrix: entry count does not match rows*cols");
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const cplx> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  std::span<const cplx> row(std::size_t r) const noexcept {
    return std::span<const cplx>(data_).subspan(r * cols_, cols_);
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  ComplexMatrix& operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw ParameterError("ComplexMatrix: inner dimensions do not match");
    }
    ComplexMatrix out(a.rows_, b.cols_);
    // i-k-j order keeps the inner loop contiguous in both b and out.
    for (std::size_t i = 0; i < a.rows_; ++i) {
      cplx* orow = &out.data_[i * b.cols_];
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        const cplx* brow = &b.data_[k * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) orow[j] += aik * brow[j];
      }
    }
    return out;
  }

  /// Largest entry magnitude.
  double max_abs() const noexcept {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  void check_same_shape(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw ParameterError("ComplexMatrix: shape mismatch");
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<cplx> data_;
};

/// Commutator [a, b] = ab - ba.
inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

/// max |a_ij - b_ij|
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

/// Max deviation of M M^dagger from the identity.
inline double unitarity_defect(const ComplexMatrix& m) {
  return max_abs_diff(m * m.adjoint(), ComplexMatrix::identity(m.rows()));
}

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // eigenvectors in columns
};

namespace detail {

inline double hermitian_defect(const ComplexMatrix& a) {
  double defect = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      defect = std::max(defect, std::abs(a(i, j) - std::conj(a(j, i))));
  return defect;
}

inline double off_diagonal_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += std::norm(a(i, j));
  return 2.0 * s;
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Each rotation first removes the phase of a_pq and then applies the real
/// symmetric Jacobi rotation to the 2x2 block; only rows p and q are
/// recomputed and the matching columns are mirrored by conjugation.
inline EigenDecomposition hermitian_eigen(const ComplexMatrix& input) {
  if (!input.is_square()) {
    throw ParameterError("hermitian_eigen: matrix must be square");
  }
  const double scale = std::max(input.max_abs(), 1e-300);
  if (detail::hermitian_defect(input) > HERM_TOL * scale) {
    throw ParameterError("hermitian_eigen: matrix is not Hermitian");
  }

  const std::size_t n = input.rows();
  ComplexMatrix a = input;
  // Symmetrize exactly; the diagonal becomes real.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }

  // Eigenvectors are accumulated as rows of vt so updates stay contiguous.
  ComplexMatrix vt = ComplexMatrix::identity(n);
  std::vector<cplx> new_p(n), new_q(n);

  double total_norm2 = 0.0;
  for (const auto& x : a.data()) total_norm2 += std::norm(x);
  const double stop2 = total_norm2 * 1e-30;  // (1e-15 relative)^2

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off2 = detail::off_diagonal_norm2(a);
    if (off2 <= stop2) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double b = std::abs(apq);
        if (b == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Late sweeps: drop entries that no longer move either diagonal.
        if (sweep > 3 && std::abs(app) + 100.0 * b == std::abs(app) &&
            std::abs(aqq) + 100.0 * b == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const cplx ph = apq / b;  // e^{i phi}
        const double theta = (aqq - app) / (2.0 * b);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] acting on columns p, q.
        // Rows of U^dagger A U: p' = c a_p - s e^{i phi} a_q,
        //                       q' = s a_p + c e^{i phi} a_q.
        const cplx* rp = &a(p, 0);
        const cplx* rq = &a(q, 0);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx x = rp[k];
          const cplx y = ph * rq[k];
          new_p[k] = c * x - s * y;
          new_q[k] = s * x + c * y;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          a(p, k) = new_p[k];
          a(q, k) = new_q[k];
          a(k, p) = std::conj(new_p[k]);
          a(k, q) = std::conj(new_q[k]);
        }
        a(p, p) = app - t * b;
        a(q, q) = aqq + t * b;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        const cplx phc = std::conj(ph);
        cplx* vp = &vt(p, 0);
        cplx* vq = &vt(q, 0);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx x = vp[k];
          const cplx y = phc * vq[k];
          vp[k] = c * x - s * y;
          vq[k] = s * x + c * y;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = vt(order[c], r);
  }
  return out;
}

/// V diag(f(lambda)) V^dagger for a decomposition of a Hermitian matrix.
template <typename Fn>
ComplexMatrix spectral_function(const EigenDecomposition& eig, Fn&& fn) {
  const std::size_t n = eig.values.size();
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t c = 0; c < n; ++c) {
    const cplx f = fn(eig.values[c]);
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= f;
  }
  return scaled * eig.vectors.adjoint();
}

/// exp(A) for skew-Hermitian A, via the eigendecomposition of iA.
inline ComplexMatrix expm_skew_hermitian(const ComplexMatrix& a) {
  if (!a.is_square()) {
    throw ParameterError("expm_skew_hermitian: matrix must be square");
  }
  const double scale = std::max(a.max_abs(), 1e-300);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (std::abs(a(i, j) + std::conj(a(j, i))) > HERM_TOL * scale) {
        throw ParameterError("expm_skew_hermitian: matrix is not skew-Hermitian");
      }
  // A = -iH with H = iA Hermitian, so exp(A) = V exp(-i lambda) V^dagger.
  const auto eig = hermitian_eigen(cplx{0.0, 1.0} * a);
  return spectral_function(eig, [](double lam) { return std::polar(1.0, -lam); });
}

}  // namespace eom
