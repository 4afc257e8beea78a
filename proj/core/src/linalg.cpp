#include "qseal/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace qseal {

namespace {

Matrix make_pauli(int which) {
  Matrix m(2, 2);
  switch (which) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, cdouble(0, -1), cdouble(0, 1), 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli index out of range");
  }
  return m;
}

}  // namespace

const Matrix& pauli(int which) {
  static const Matrix table[4] = {make_pauli(0), make_pauli(1), make_pauli(2), make_pauli(3)};
  if (which < 0 || which > 3) throw std::invalid_argument("pauli index out of range");
  return table[which];
}

const Matrix& pauli_i() { return pauli(0); }
const Matrix& pauli_x() { return pauli(1); }
const Matrix& pauli_y() { return pauli(2); }
const Matrix& pauli_z() { return pauli(3); }

const Matrix& hadamard() {
  static const Matrix h = [] {
    Matrix m(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    m << r, r, r, -r;
    return m;
  }();
  return h;
}

const Matrix& cnot_gate() {
  static const Matrix c = [] {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
  }();
  return c;
}

Matrix dagger(const Matrix& m) { return m.adjoint(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

cdouble trace_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument("trace_inner: dimension mismatch");
  }
  return (a * b).trace();
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  Matrix d = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

bool BlochVector::is_unit(double tol) const { return std::abs(norm() - 1.0) <= tol; }

double BlochVector::dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }

Matrix bloch_projector(const BlochVector& v, int sign) {
  if (!v.is_unit()) throw std::invalid_argument("bloch_projector: vector must be unit norm");
  const double s = (sign & 1) ? -1.0 : 1.0;
  return 0.5 * (pauli_i() + s * (v.x * pauli_x() + v.y * pauli_y() + v.z * pauli_z()));
}

Vector bloch_ket(const BlochVector& v, int sign) {
  if (!v.is_unit()) throw std::invalid_argument("bloch_ket: vector must be unit norm");
  const double theta = std::acos(std::clamp(v.z, -1.0, 1.0));
  const double phi = std::atan2(v.y, v.x);
  Vector k(2);
  if ((sign & 1) == 0) {
    k << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
  } else {
    // orthogonal complement, bloch vector -v
    k << -std::polar(std::sin(theta / 2), -phi), std::cos(theta / 2);
  }
  return k;
}

}  // namespace qseal
