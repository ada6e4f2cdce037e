#include "qgt/density_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qgt/tolerances.hpp"

namespace qgt {

DensityMatrix validate_density(ComplexMatrix mat) {
  if (mat.rows() != 4 || mat.cols() != 4) {
    throw std::invalid_argument("density matrix must be 4x4");
  }
  if (!mat.is_finite()) {
    throw std::invalid_argument("density matrix has non-finite entries");
  }
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = r; c < 4; ++c) {
      if (std::abs(mat(r, c) - std::conj(mat(c, r))) > kHermitianTol) {
        throw std::invalid_argument("density matrix is not hermitian");
      }
    }
  }
  const Complex tr = trace(mat);
  if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTol) {
    throw std::invalid_argument("density matrix trace is not 1 (got " +
                                std::to_string(tr.real()) + ")");
  }
  const std::vector<double> eigs = hermitian_eigenvalues(mat);
  if (eigs.front() < -kPsdTol) {
    throw std::invalid_argument("density matrix has a negative eigenvalue (" +
                                std::to_string(eigs.front()) + ")");
  }
  return DensityMatrix(std::move(mat));
}

ComplexMatrix partial_transpose_second(const ComplexMatrix& mat) {
  if (mat.rows() != 4 || mat.cols() != 4) {
    throw std::invalid_argument("partial transpose expects a 4x4 matrix");
  }
  ComplexMatrix out(4, 4);
  // Row index 2a+b, column 2a'+b'; transposing the second qubit swaps b
  // with b'.
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t ap = 0; ap < 2; ++ap)
        for (std::size_t bp = 0; bp < 2; ++bp)
          out(2 * a + bp, 2 * ap + b) = mat(2 * a + b, 2 * ap + bp);
  return out;
}

double partial_transpose_min_eig(const DensityMatrix& rho) {
  return hermitian_eigenvalues(partial_transpose_second(rho.matrix())).front();
}

}  // namespace qgt
