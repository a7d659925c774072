#pragma once

// Dense complex linear algebra for small multi-qubit registers.
//
// Everything here is row-major and sized for at most a few dozen rows: the
// largest matrix the library builds is the 32x32 projector of a five-qubit
// pure state. Subsystem layouts follow the most-significant-first
// convention, so basis index 0b011 of a three-qubit register is |011>.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hawkw {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  // |psi><psi|
  static ComplexMatrix projector(std::span<const Complex> amplitudes);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  const Complex& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  bool is_hermitian(double tol = 1e-12) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(double s, ComplexMatrix m);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

// Largest |a_ij - b_ij|; throws when the dimensions differ.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; indices of `a` are the most significant.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues of a Hermitian matrix in ascending order, by cyclic complex
// Jacobi rotations. Converged once every off-diagonal modulus is below 1e-14.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Real determinant m00*m11 - |m01|^2 of a 2x2 Hermitian matrix.
double det2(const ComplexMatrix& m);

struct DensityValidity {
  double hermitian_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
  bool ok() const noexcept;
};

class DensityMatrix {
 public:
  // Validates shape only; use `validity()` for the physical invariants.
  DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> subsystem_dims);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::span<const std::size_t> subsystem_dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  std::size_t subsystem_count() const noexcept { return dims_.size(); }

  const Complex& operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }

  // Hermitian within 1e-12, unit trace within 1e-12, eigenvalues >= -1e-10.
  DensityValidity validity() const;

 private:
  ComplexMatrix matrix_;
  std::vector<std::size_t> dims_;
};

// Keeps the listed subsystems (any order in `keep`, output in original order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);

class PureState {
 public:
  // Labels are most-significant qubit first. Throws unless normalized to 1e-12.
  PureState(std::vector<std::string> labels, std::vector<Complex> amplitudes);

  std::size_t qubit_count() const noexcept { return labels_.size(); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& amplitude(std::size_t basis_index) const { return amplitudes_.at(basis_index); }

  // Register position of a label; throws if absent.
  std::size_t position(const std::string& label) const;

  double norm() const;
  DensityMatrix density() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Complex> amplitudes_;
};

}  // namespace hawkw
