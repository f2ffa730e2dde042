#pragma once

#include "bfaelm/matrix.hpp"

namespace bfaelm {

// Minimum-norm least-squares solution of H * B = T via SVD. Singular values
// below max(rows, cols) * eps * sigma_max are treated as zero, so rank-deficient
// systems return the Moore-Penrose pseudo-solution instead of failing.
Matrix least_squares_solve(const Matrix& H, const Matrix& T);

}  // namespace bfaelm
