#pragma once

// Cyclic Jacobi rotations for real symmetric matrices, eigenvalues only.

#include <vector>

namespace uefg {

// a: row-major n x n symmetric matrix, destroyed in place. Iterates
// sweeps until the Frobenius norm of the off-diagonal part drops below
// off_tol. Returns eigenvalues sorted ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double>& a, long n,
                                       double off_tol = 1e-10);

}  // namespace uefg
