#include "lincirc/rewrite.hpp"

#include "lincirc/builders.hpp"
#include "lincirc/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lincirc
{

namespace
{

uint32_t circuit_depth( Circuit const& c )
{
  /* ids are topological: inputs 1..n at depth 0, then gates */
  std::vector<uint32_t> depth( c.n_inputs + c.gates.size() + 1, 0 );
  for ( std::size_t g = 0; g < c.gates.size(); ++g )
  {
    uint32_t longest = 0;
    for ( auto child : c.gates[g] )
      longest = std::max( longest, depth[child] );
    depth[c.n_inputs + 1 + g] = longest + 1;
  }
  uint32_t result = 0;
  for ( auto out : c.outputs )
    result = std::max( result, depth[out] );
  return result;
}

} // namespace

std::pair<Circuit, RewriteReport> rewrite( Circuit const& c, Semiring target,
                                           RewriteStrategy strategy )
{
  if ( c.ring != Semiring::OR )
    throw std::invalid_argument( "rewrite: source must be an OR circuit" );
  if ( target == Semiring::OR )
    throw std::invalid_argument( "rewrite: target must be SUM or XOR" );

  auto const a = extract_matrix( c );
  if ( a.has_zero_row() )
    throw std::invalid_argument( "rewrite: extracted matrix has an all-zero row" );

  Circuit out;
  if ( strategy == RewriteStrategy::depth1 )
    out = trivial_circuit( a, target );
  else if ( a.n_cols() < 2 ) /* block decomposition degenerates to one column */
    out = trivial_circuit( a, target );
  else
    out = lupanov_circuit( a, target, { lupanov_best_b( a.n_rows(), a.n_cols() ) } );

  RewriteReport report;
  report.input_wires = c.wire_count();
  report.output_wires = out.wire_count();
  report.output_depth = circuit_depth( out );
  report.strategy = strategy;
  return { std::move( out ), report };
}

bool equivalent( Circuit const& c1, Circuit const& c2 )
{
  if ( c1.n_inputs != c2.n_inputs || c1.outputs.size() != c2.outputs.size() )
    throw std::invalid_argument( "equivalent: circuits must agree on inputs and outputs" );
  for ( auto const* c : { &c1, &c2 } )
  {
    if ( c->ring == Semiring::SUM && !validate( *c ).empty() )
      throw std::invalid_argument( "equivalent: SUM circuit fails validation" );
  }
  return extract_matrix( c1 ) == extract_matrix( c2 );
}

} // namespace lincirc
