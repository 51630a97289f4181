#include "lincirc/tensor.hpp"

#include <stdexcept>

namespace lincirc
{

namespace
{

constexpr uint64_t max_kronecker_dim = 4096u;

} // namespace

BooleanMatrix kronecker( BooleanMatrix const& b, BooleanMatrix const& a )
{
  uint64_t const rows = uint64_t( b.n_rows() ) * a.n_rows();
  uint64_t const cols = uint64_t( b.n_cols() ) * a.n_cols();
  if ( rows > max_kronecker_dim || cols > max_kronecker_dim )
    throw std::invalid_argument( "kronecker: result exceeds 4096 in a dimension" );

  BooleanMatrix result{ uint32_t( rows ), uint32_t( cols ) };
  for ( uint32_t i = 0; i < b.n_rows(); ++i )
  {
    b.row( i ).for_each_set( [&]( std::size_t j ) {
      for ( uint32_t k = 0; k < a.n_rows(); ++k )
      {
        a.row( k ).for_each_set( [&]( std::size_t l ) {
          result.set( i * a.n_rows() + k, uint32_t( j * a.n_cols() + l ) );
        } );
      }
    } );
  }
  return result;
}

Circuit tensor_or_circuit( TensorSpec const& spec )
{
  auto const& b = spec.b;
  auto const& a = spec.a;
  uint32_t const n = b.n_rows();
  if ( b.n_cols() != n || a.n_rows() != n || a.n_cols() != n )
    throw std::invalid_argument( "tensor_or_circuit: factors must be square of equal size" );
  if ( a.has_zero_row() || b.has_zero_row() )
    throw std::invalid_argument( "tensor_or_circuit: zero row in a factor" );
  if ( !cover_matches( b, spec.cover ) )
    throw std::invalid_argument( "tensor_or_circuit: cover does not match B" );

  uint32_t const r = uint32_t( spec.cover.rectangles.size() );
  Circuit c;
  c.ring = Semiring::OR;
  c.n_inputs = n * n;

  /* input id of X[l,j], column-stacked, all indices 0-based here */
  auto x_id = [&]( uint32_t l, uint32_t j ) { return NodeId( j * n + l + 1 ); };

  /* layer 1: u[l,c] = OR_{j in C_c} X[l,j] */
  std::vector<NodeId> u( std::size_t( n ) * r );
  for ( uint32_t cc = 0; cc < r; ++cc )
  {
    for ( uint32_t l = 0; l < n; ++l )
    {
      std::vector<NodeId> children;
      spec.cover.rectangles[cc].cols.for_each_set(
          [&]( std::size_t j ) { children.push_back( x_id( l, uint32_t( j ) ) ); } );
      c.gates.push_back( std::move( children ) );
      u[std::size_t( cc ) * n + l] = NodeId( c.node_count() );
    }
  }

  /* layer 2: v[k,c] = OR_{l in supp(A_k)} u[l,c] */
  std::vector<NodeId> v( std::size_t( n ) * r );
  for ( uint32_t cc = 0; cc < r; ++cc )
  {
    for ( uint32_t k = 0; k < n; ++k )
    {
      std::vector<NodeId> children;
      a.row( k ).for_each_set(
          [&]( std::size_t l ) { children.push_back( u[std::size_t( cc ) * n + l] ); } );
      c.gates.push_back( std::move( children ) );
      v[std::size_t( cc ) * n + k] = NodeId( c.node_count() );
    }
  }

  /* layer 3: y[k,i] = OR_{c : i in R_c} v[k,c], output slot i*n + k */
  c.outputs.resize( std::size_t( n ) * n );
  for ( uint32_t i = 0; i < n; ++i )
  {
    for ( uint32_t k = 0; k < n; ++k )
    {
      std::vector<NodeId> children;
      for ( uint32_t cc = 0; cc < r; ++cc )
        if ( spec.cover.rectangles[cc].rows.test( i ) )
          children.push_back( v[std::size_t( cc ) * n + k] );
      c.gates.push_back( std::move( children ) );
      c.outputs[std::size_t( i ) * n + k] = NodeId( c.node_count() );
    }
  }
  return c;
}

uint64_t direct_sum_bound( BooleanMatrix const& b, BooleanMatrix const& a,
                           FreenessCertificate const& cert, uint32_t rank_sum_b )
{
  (void)b;
  if ( !cert.free )
    throw std::invalid_argument( "direct_sum_bound: certificate is not free" );
  uint64_t const st = uint64_t( cert.s ) * cert.t;
  return ( uint64_t( rank_sum_b ) * a.weight() + st - 1 ) / st;
}

} // namespace lincirc
