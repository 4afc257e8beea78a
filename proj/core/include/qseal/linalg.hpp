#ifndef QSEAL_LINALG_HPP
#define QSEAL_LINALG_HPP

#include <complex>

#include <Eigen/Dense>

namespace qseal {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerance for state invariants (norms, traces, unitarity).
inline constexpr double kStateTol = 1e-10;
// Tolerance for oracle-equivalence checks.
inline constexpr double kOracleTol = 1e-12;
// Dense simulation hard cap.
inline constexpr int kMaxQubits = 12;

// Pauli matrices, indexed 0=I, 1=x, 2=y, 3=z.
const Matrix& pauli(int which);
const Matrix& pauli_i();
const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();
const Matrix& hadamard();
const Matrix& cnot_gate();

Matrix dagger(const Matrix& m);

// Kronecker product; dims multiply.
Matrix kron(const Matrix& a, const Matrix& b);

// Tr(a * b); both square, equal dims.
cdouble trace_inner(const Matrix& a, const Matrix& b);

// max |(M^dag M - I)_{ij}| <= tol
bool is_unitary(const Matrix& m, double tol = kStateTol);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  double norm() const;
  bool is_unit(double tol = kStateTol) const;
  double dot(const BlochVector& o) const;
};

// 1/2 (I + (-1)^sign v.sigma) for unit v; rank-1 projector.
Matrix bloch_projector(const BlochVector& v, int sign);

// Unit ket spanning bloch_projector(v, sign), explicit spherical-angle form.
Vector bloch_ket(const BlochVector& v, int sign);

}  // namespace qseal

#endif
