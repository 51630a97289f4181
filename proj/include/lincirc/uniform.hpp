#pragma once

#include "circuit.hpp"
#include "matrix.hpp"

#include <cstdint>
#include <vector>

namespace lincirc
{

/* Code matrix with every k columns linearly independent over GF(2);
 * m = k * t rows, n <= 2^t columns. */
struct CodeMatrix
{
  BooleanMatrix p;
  uint32_t k;
  uint32_t t;
};

/*! \brief Vandermonde-style code matrix over GF(2^t), bit-expanded.
 *
 * Column j is the expansion of (a_j^0, a_j^1, ..., a_j^{k-1}) for the j-th
 * field element a_j; any k columns are independent since the corresponding
 * k x k Vandermonde matrix over GF(2^t) is invertible, and GF(2)-dependence
 * would lift to GF(2^t).
 */
CodeMatrix build_code_matrix( uint32_t t, uint32_t n, uint32_t k );

enum class IndependenceCheck
{
  independent,
  dependent,
  unverified /* subset count above budget */
};

/* Exhaustive rank test of all C(n,k) column subsets, bailing out above
 * `subset_budget` subsets. */
IndependenceCheck check_k_independence( CodeMatrix const& code,
                                        uint64_t subset_budget = 2000000 );

struct UniformSample
{
  BooleanMatrix r;
  BooleanMatrix a; /* P^T R P over GF(2) */
  Circuit circuit; /* XOR circuit extracting a */
};

/*! \brief Sample A = P^T R P with R drawn uniformly from the seed.
 *
 * The circuit is the three-stage composition: depth-1 XOR circuit for the
 * nonzero rows of P, a middle layer for the restriction of R to those rows
 * (an all-zero restricted row becomes a duplicate-child gate computing 0),
 * and the reversal of the first stage for P^T.  Wires <= 2|P| + |R| + 2m.
 */
UniformSample generate_kuniform( CodeMatrix const& code, uint64_t seed );

/* Same composition with a caller-supplied R (m x m). */
UniformSample kuniform_from_r( CodeMatrix const& code, BooleanMatrix r );

struct UniformityReport
{
  uint32_t k = 0;
  uint64_t samples = 0;
  double statistic = 0.0;
  uint32_t dof = 0;
  double critical_001 = 0.0;
  bool pass = false;
  uint64_t seed = 0;
};

/*! \brief Chi-square test of the joint distribution of a k x k submatrix.
 *
 * Draws `samples` independent R, tabulates A[rows x cols] (1-based indices)
 * over its 2^(k*k) values, and compares the statistic against the 0.001
 * critical value at 2^(k*k) - 1 degrees of freedom.  Sampling is split into
 * fixed-size chunks with per-chunk seeds derived from `seed`, and chunk
 * counts merge by summation, so the report does not depend on `threads`.
 * Requires samples >= 100 * 2^(k*k).
 */
UniformityReport uniformity_test( CodeMatrix const& code, uint64_t samples,
                                  std::vector<uint32_t> const& rows,
                                  std::vector<uint32_t> const& cols,
                                  uint64_t seed, uint32_t threads = 1 );

/* 0.001-significance chi-square critical value: exact for the table dofs,
 * Wilson-Hilferty otherwise. */
double chi_square_critical_001( uint32_t dof );

} // namespace lincirc
