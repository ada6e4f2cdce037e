#pragma once

#include "qgt/complex_matrix.hpp"

namespace qgt {

// A validated 4x4 two-qubit state: hermitian, unit trace and positive
// semidefinite within the tolerances of tolerances.hpp. Instances can only
// be produced through validate_density, so holding one is proof the checks
// passed.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const { return mat_; }

  friend DensityMatrix validate_density(ComplexMatrix mat);

 private:
  explicit DensityMatrix(ComplexMatrix mat) : mat_(static_cast<ComplexMatrix&&>(mat)) {}
  ComplexMatrix mat_;
};

// Validates hermiticity, unit trace and positivity, in that order, and
// throws std::invalid_argument naming the first violated invariant.
DensityMatrix validate_density(ComplexMatrix mat);

// Transpose of the second-qubit indices only.
ComplexMatrix partial_transpose_second(const ComplexMatrix& mat);

// Minimum eigenvalue of the partial transpose over the second qubit; a
// negative value certifies entanglement (PPT criterion for two qubits).
double partial_transpose_min_eig(const DensityMatrix& rho);

}  // namespace qgt
