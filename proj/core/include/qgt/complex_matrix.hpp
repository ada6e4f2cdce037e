#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qgt {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Only 2x2 and 4x4 sizes occur in this
// project, so all algorithms are plain loops; dimensions stay dynamic to
// share one type between operators and two-qubit states.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);

  // Entries are row-major; the count must equal rows*cols and every
  // component must be finite.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Complex>& entries() const { return entries_; }

  bool is_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);

// Kronecker product of two 2x2 matrices in |00>,|01>,|10>,|11> ordering.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);

// Tr(a*b) without forming the product; a and b must be square with equal
// dimension.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues of a hermitian matrix, ascending. Throws std::runtime_error
// if the solver fails to converge.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

}  // namespace qgt
