#pragma once

#include "circuit.hpp"
#include "cover.hpp"
#include "freeness.hpp"
#include "matrix.hpp"

#include <cstdint>

namespace lincirc
{

/*! \brief Kronecker product B (x) A.
 *
 * Entry ((i-1)*rows(A)+k, (j-1)*cols(A)+l) is B[i,j] * A[k,l]; result
 * dimensions above 4096 are rejected.
 */
BooleanMatrix kronecker( BooleanMatrix const& b, BooleanMatrix const& a );

/* Ingredients of the three-multiplication circuit for B (x) A: square
 * factors of equal size and an overlapping rectangle cover of B
 * (typically from rank_cover or complement_identity_cover). */
struct TensorSpec
{
  BooleanMatrix b;
  BooleanMatrix a;
  RectangleCover cover;
};

/*! \brief Depth-3 OR circuit computing X -> (A(XQ))P^T, i.e. B (x) A.
 *
 * B = PQ^T comes from the cover; inputs and outputs are column-stacked
 * n^2-vectors.  Layer by layer: u[l,c] = OR of column block C_c of row l of
 * X, v[k,c] = OR of u[l,c] over the support of row k of A, and output
 * y[k,i] = OR of v[k,c] over rectangles whose row set contains i.  Wire
 * count is at most 3*r*n^2 for r rectangles.  Note the circuit is OR-only:
 * overlapping rectangles make the same input reach an output along several
 * paths, which OR absorbs but SUM does not.
 */
Circuit tensor_or_circuit( TensorSpec const& spec );

/*! \brief Lower bound rank_SUM(B) * |A| / (s*t) on the SUM wire complexity
 * of B (x) A, rounded up.
 *
 * Requires a free certificate for A; rank_sum_b should come from
 * rank_cover on B in disjoint mode.
 */
uint64_t direct_sum_bound( BooleanMatrix const& b, BooleanMatrix const& a,
                           FreenessCertificate const& cert, uint32_t rank_sum_b );

} // namespace lincirc
