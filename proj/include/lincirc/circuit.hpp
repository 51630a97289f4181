#pragma once

/*! \file circuit.hpp
 *  \brief Gate-level circuits computing linear maps x -> Ax over OR, SUM, XOR.
 *
 * A circuit is a DAG of unbounded fan-in gates over n input nodes.  Node ids
 * are dense and 1-based: inputs occupy 1..n_inputs, non-input gates follow in
 * topological order.  Every non-input gate lists its children (fan-in >= 1);
 * outputs are references to non-input gates.  The cost measure everywhere is
 * the wire count, i.e. the total number of child references.
 */

#include "bitvec.hpp"
#include "matrix.hpp"
#include "semiring.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lincirc
{

using NodeId = uint32_t;

struct Circuit
{
  Semiring ring = Semiring::OR;
  NodeId n_inputs = 0;
  /* children of each non-input gate, in topological order; duplicates allowed */
  std::vector<std::vector<NodeId>> gates;
  /* ordered list of output references into the gate range */
  std::vector<NodeId> outputs;

  uint32_t n_gates() const { return static_cast<uint32_t>( gates.size() ); }
  uint32_t n_outputs() const { return static_cast<uint32_t>( outputs.size() ); }
  NodeId node_count() const { return n_inputs + n_gates(); }
  bool is_input( NodeId id ) const { return id >= 1 && id <= n_inputs; }
  NodeId gate_id( uint32_t gate_index ) const { return n_inputs + gate_index + 1; }

  std::size_t wire_count() const
  {
    std::size_t w = 0;
    for ( auto const& g : gates )
      w += g.size();
    return w;
  }
};

/* One structural or semantic defect found by validate(). gate = 0 marks
 * circuit-level problems (e.g. a bad output reference). */
struct Violation
{
  NodeId gate = 0;
  std::string message;
};

/*! \brief Checks well-formedness of a circuit.
 *
 * Structural checks for every semiring: child references point to inputs or
 * earlier gates, every gate has fan-in >= 1, outputs reference non-input
 * gates.  Under SUM additionally each gate's children must have pairwise
 * disjoint supports (equivalent to all input-to-gate path counts being at
 * most 1); duplicate children are flagged there as a special case.
 */
std::vector<Violation> validate( Circuit const& c );

/* Input/output vectors carry the semiring tag of the circuit they feed. */
struct Vector
{
  Semiring ring = Semiring::OR;
  std::vector<uint64_t> values;
};

/*! \brief Evaluates the circuit on one input vector, one topological pass. */
Vector evaluate( Circuit const& c, Vector const& x );

/* Raised when SUM extraction meets an input/output pair connected by more
 * than one path; row/col are 1-based. */
class SumPathError : public std::runtime_error
{
public:
  SumPathError( uint32_t row, uint32_t col, uint64_t paths );
  uint32_t row;
  uint32_t col;
  uint64_t paths;
};

/*! \brief Recovers the matrix computed by the circuit.
 *
 * Entry (i, j) is 1 when input j reaches output i: reachability under OR,
 * path-count parity under XOR.  Under SUM every output/input pair must be
 * joined by at most one path, otherwise SumPathError is raised.
 */
BooleanMatrix extract_matrix( Circuit const& c );

/* Support of a node: the set of inputs it depends on, as sorted 1-based
 * indices.  Union semantics under OR and SUM, symmetric difference under
 * XOR.  Inputs are their own singletons. */
std::vector<NodeId> support( Circuit const& c, NodeId node );

/*! \brief Removes gates that do not reach any output, preserving the matrix. */
Circuit prune( Circuit const& c );

/*! \brief Transposes an XOR circuit by reversing every wire.
 *
 * Requires: XOR semiring; every input feeds some gate; every non-output gate
 * feeds some gate; outputs are distinct and feed nothing (prune first if
 * necessary).  The result has one input per former output and one gate per
 * former input, the same wire count, and computes the transposed matrix.
 */
Circuit reverse_xor( Circuit const& c );

/* Circuit file format:
 *   CIRCUIT <OR|SUM|XOR> <n_inputs> <n_gates> <n_outputs>
 *   <gate-id>: <space-separated child ids>     (n_gates lines, topological)
 *   OUTPUTS: <space-separated gate ids>
 * All ids 1-based; gate ids run n_inputs+1 .. n_inputs+n_gates in order. */
std::string format_circuit( Circuit const& c );
Circuit parse_circuit( std::string_view text );

Circuit read_circuit_file( std::string const& path );
void write_circuit_file( std::string const& path, Circuit const& c );

} // namespace lincirc
