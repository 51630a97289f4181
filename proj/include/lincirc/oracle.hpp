#pragma once

#include "circuit.hpp"
#include "matrix.hpp"
#include "semiring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lincirc
{

/* Outcome of the exhaustive search; found = false means every circuit needs
 * more than `budget` wires ("unknown above budget"), so budget + 1 is still
 * a proven lower bound. */
struct MinWiresResult
{
  bool found = false;
  uint32_t wires = 0;
  Circuit witness;
  uint32_t budget = 0;
};

/*! \brief Exact minimum wire count of any circuit for A under the ring.
 *
 * Exhaustive iterative deepening over sets of gate supports: a state is the
 * set of values built so far (OR: unions, SUM: disjoint unions, XOR: GF(2)
 * sums of inputs and earlier gates), and a gate of fan-in f costs f wires.
 * Minimal circuits never repeat a value and only build an input singleton
 * when it is itself a target row, which keeps the state space small enough
 * to memoise.  Every output row is a gate of its own, so a row occurring k
 * times costs k - 1 extra fan-in-1 gates on top of the search minimum.
 * Limits: dimensions at most 5, budget at most 20, no zero rows.
 */
MinWiresResult min_wires( BooleanMatrix const& a, Semiring ring, uint32_t wire_budget );

/* Exact counts per ring where the search resolved, plus the pairwise
 * quotients C_X/C_Y for resolved pairs, keyed "or/sum", "xor/or", ... */
struct GapReport
{
  BooleanMatrix matrix;
  std::optional<uint32_t> c_or;
  std::optional<uint32_t> c_sum;
  std::optional<uint32_t> c_xor;
  uint32_t budget = 0;
  std::vector<std::pair<std::string, double>> ratios;
};

GapReport gap_report( BooleanMatrix const& a, uint32_t wire_budget );

} // namespace lincirc
