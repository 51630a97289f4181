#pragma once

#include "matrix.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace lincirc
{

/* Combinatorial rectangle: a row subset times a column subset. */
struct Rectangle
{
  BitVec rows;
  BitVec cols;
};

struct RectangleCover
{
  std::vector<Rectangle> rectangles;
  bool disjoint = false;
};

/* Result of the exact rank search; resolved = false means the minimum
 * exceeds the given budget ("unknown above budget"). */
struct RankResult
{
  bool resolved = false;
  uint32_t rank = 0;
  RectangleCover cover;
  uint32_t budget = 0;
};

/*! \brief Minimum rectangle cover of the 1-entries of a.
 *
 * disjoint = false computes rank_OR (overlaps allowed, searched over closed
 * rectangles); disjoint = true computes rank_SUM (entry-disjoint rectangles,
 * branch on the first uncovered entry).  Exact search, intended for small
 * matrices; dimensions above 16 are rejected.
 */
RankResult rank_cover( BooleanMatrix const& a, bool disjoint, uint32_t budget );

/* The explicit 2*ceil(log2 n) rectangle cover of the complement of the
 * identity: for each bit position p and value v, the rows whose index has
 * bit p equal to v against the columns whose index has the opposite bit. */
RectangleCover complement_identity_cover( uint32_t n );

/* True when the rectangles lie inside the 1-entries of a, cover all of
 * them, and (if the cover is flagged disjoint) never overlap. */
bool cover_matches( BooleanMatrix const& a, RectangleCover const& cover );

/* Factorisation A = P Q^T over the boolean semiring: P is n_rows x r with
 * P[i][k] = 1 iff row i lies in rectangle k, Q likewise for columns. */
std::pair<BooleanMatrix, BooleanMatrix> cover_factors( RectangleCover const& cover,
                                                       uint32_t n_rows, uint32_t n_cols );

} // namespace lincirc
