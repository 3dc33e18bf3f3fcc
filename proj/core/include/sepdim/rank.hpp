#pragma once

#include <vector>

#include "sepdim/matrix.hpp"

namespace sepdim {

/*
 * Exact rank via fraction-free (Bareiss) elimination. Rows are first scaled
 * by the lcm of their denominators, which preserves rank and moves the
 * computation to Gaussian integers; a dedicated fast path handles matrices
 * whose entries are all real. Pivoting is "first nonzero in the column" so
 * runs are deterministic.
 */
int rank_exact(const ExactMatrix& m);

/*
 * Column rank profile: the ascending list of pivot column indices found by
 * the elimination above. Because columns are consumed left to right, the
 * rank of the submatrix formed by the first c columns equals the number of
 * profile entries < c. One elimination therefore certifies the ranks of all
 * nested column prefixes at once, which is how whole table rows are probed.
 */
std::vector<int> column_rank_profile(const ExactMatrix& m);

/// Number of singular values above rel_tol * (largest singular value).
int rank_numeric(const ComplexMatrix& m, double rel_tol = 1e-8);

} // namespace sepdim
