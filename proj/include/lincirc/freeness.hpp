#pragma once

#include "matrix.hpp"

#include <cstdint>
#include <vector>

namespace lincirc
{

/* Witness-carrying answer to "does A contain an (s+1) x (t+1) all-ones
 * submatrix?".  Indices in the witness are 1-based. */
struct FreenessCertificate
{
  uint32_t s = 0;
  uint32_t t = 0;
  bool free = false;
  std::vector<uint32_t> witness_rows; /* s+1 rows when free = false */
  std::vector<uint32_t> witness_cols; /* t+1 columns when free = false */
};

/*! \brief Exhaustive (s,t)-freeness test.
 *
 * Enumerates (s+1)-row subsets and counts common columns; requires
 * 1 <= s < n_rows and 1 <= t < n_cols.
 */
FreenessCertificate is_st_free( BooleanMatrix const& a, uint32_t s, uint32_t t );

/* Best lower bound on the OR wire complexity obtainable from freeness:
 * weight(A)/(s*t) rounded up, maximised over free pairs (s,t) within range.
 * s = t = 0 marks the trivial fallback bound 1 when no in-range pair is
 * free. */
struct MpBound
{
  uint32_t s = 0;
  uint32_t t = 0;
  uint64_t bound = 1;
};

MpBound mp_lower_bound( BooleanMatrix const& a, uint32_t max_s, uint32_t max_t );

} // namespace lincirc
