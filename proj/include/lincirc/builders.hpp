#pragma once

#include "circuit.hpp"
#include "matrix.hpp"
#include "semiring.hpp"

namespace lincirc
{

/*! \brief Depth-1 circuit: one gate per row wired to the row's support.
 *
 * Uses exactly weight(A) wires and is valid under all three semirings
 * (children are distinct inputs).  Rows must be nonzero.
 */
Circuit trivial_circuit( BooleanMatrix const& a, Semiring ring );

struct LupanovParams
{
  uint32_t block_width = 2;
};

/*! \brief Depth-2 column-block construction.
 *
 * Columns are split into ceil(n/b) blocks.  For every block, the subsets of
 * its columns that occur as some row restriction are realised by a chain of
 * fan-in-2 gates (subset = smaller subset + one more input, 2 wires each);
 * singleton restrictions connect outputs straight to inputs.  Each output
 * gate then takes one wire per block on which its row is nonempty.  Block
 * supports are disjoint, so the circuit is valid under OR, SUM, and XOR and
 * extracts back to A.  The wire count never exceeds
 * ceil(n/b)*2*(2^b - b - 1) + m*ceil(n/b).
 */
Circuit lupanov_circuit( BooleanMatrix const& a, Semiring ring, LupanovParams p );

/* Worst-case wire count of the construction at block width b. */
uint64_t lupanov_wire_bound( uint32_t n_rows, uint32_t n_cols, uint32_t b );

/* Block width minimising lupanov_wire_bound for an m x n matrix. */
uint32_t lupanov_best_b( uint32_t n_rows, uint32_t n_cols );

} // namespace lincirc
