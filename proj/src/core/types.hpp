#pragma once
// Shared scalar/matrix aliases and error types for the core library.

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace tc {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;

// Requested field truncation cannot represent the state to tolerance.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The factorized evolution operator is only valid at resonance (delta == omega).
struct OffResonanceError : std::domain_error {
  using std::domain_error::domain_error;
};

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace tc
