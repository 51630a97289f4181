#include "lincirc/builders.hpp"

#include <map>
#include <stdexcept>

namespace lincirc
{

Circuit trivial_circuit( BooleanMatrix const& a, Semiring ring )
{
  if ( a.has_zero_row() )
    throw std::invalid_argument( "trivial_circuit: matrix has an all-zero row" );

  Circuit c;
  c.ring = ring;
  c.n_inputs = a.n_cols();
  for ( uint32_t i = 0; i < a.n_rows(); ++i )
  {
    std::vector<NodeId> children;
    a.row( i ).for_each_set( [&]( std::size_t j ) { children.push_back( NodeId( j ) + 1 ); } );
    c.gates.push_back( std::move( children ) );
    c.outputs.push_back( c.gate_id( i ) );
  }
  return c;
}

uint64_t lupanov_wire_bound( uint32_t n_rows, uint32_t n_cols, uint32_t b )
{
  uint64_t const blocks = ( n_cols + b - 1 ) / b;
  uint64_t const per_block = 2u * ( ( uint64_t( 1 ) << b ) - b - 1 );
  return blocks * per_block + uint64_t( n_rows ) * blocks;
}

uint32_t lupanov_best_b( uint32_t n_rows, uint32_t n_cols )
{
  uint32_t best = std::min( n_cols, 2u );
  uint64_t best_bound = lupanov_wire_bound( n_rows, n_cols, best );
  for ( uint32_t b = 3; b <= std::min( n_cols, 24u ); ++b )
  {
    uint64_t const bound = lupanov_wire_bound( n_rows, n_cols, b );
    if ( bound < best_bound )
    {
      best = b;
      best_bound = bound;
    }
  }
  return best;
}

Circuit lupanov_circuit( BooleanMatrix const& a, Semiring ring, LupanovParams p )
{
  uint32_t const b = p.block_width;
  if ( b < 2 )
    throw std::invalid_argument( "lupanov_circuit: block width must be at least 2" );
  if ( b > a.n_cols() )
    throw std::invalid_argument( "lupanov_circuit: block width exceeds column count" );
  if ( b > 32 )
    throw std::invalid_argument( "lupanov_circuit: block width too large" );
  if ( a.has_zero_row() )
    throw std::invalid_argument( "lupanov_circuit: matrix has an all-zero row" );

  uint32_t const n = a.n_cols();
  uint32_t const blocks = ( n + b - 1 ) / b;

  Circuit c;
  c.ring = ring;
  c.n_inputs = n;

  /* node for a subset of one block's columns; singletons are the inputs
   * themselves, larger subsets are chained fan-in-2 gates */
  std::vector<std::map<uint32_t, NodeId>> subset_node( blocks );
  auto node_for = [&]( uint32_t block, uint32_t mask, auto&& self ) -> NodeId {
    uint32_t const base = block * b;
    if ( ( mask & ( mask - 1 ) ) == 0 )
    {
      /* singleton: input id */
      uint32_t bit = 0;
      while ( !( mask & ( 1u << bit ) ) )
        ++bit;
      return base + bit + 1;
    }
    auto it = subset_node[block].find( mask );
    if ( it != subset_node[block].end() )
      return it->second;
    uint32_t const top = 31u - uint32_t( __builtin_clz( mask ) );
    NodeId const pred = self( block, mask & ~( 1u << top ), self );
    c.gates.push_back( { pred, base + top + 1 } );
    NodeId const id = c.gate_id( c.n_gates() - 1 );
    subset_node[block].emplace( mask, id );
    return id;
  };

  /* row restrictions per block */
  std::vector<std::vector<uint32_t>> restriction( a.n_rows(),
                                                  std::vector<uint32_t>( blocks, 0 ) );
  for ( uint32_t i = 0; i < a.n_rows(); ++i )
    a.row( i ).for_each_set( [&]( std::size_t j ) {
      restriction[i][j / b] |= 1u << ( j % b );
    } );

  /* middle layer first (keeps ids topological), then output gates */
  for ( uint32_t g = 0; g < blocks; ++g )
    for ( uint32_t i = 0; i < a.n_rows(); ++i )
      if ( restriction[i][g] && ( restriction[i][g] & ( restriction[i][g] - 1 ) ) != 0 )
        node_for( g, restriction[i][g], node_for );

  for ( uint32_t i = 0; i < a.n_rows(); ++i )
  {
    std::vector<NodeId> children;
    for ( uint32_t g = 0; g < blocks; ++g )
      if ( restriction[i][g] )
        children.push_back( node_for( g, restriction[i][g], node_for ) );
    c.gates.push_back( std::move( children ) );
    c.outputs.push_back( c.gate_id( c.n_gates() - 1 ) );
  }
  return c;
}

} // namespace lincirc
