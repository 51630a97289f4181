#include "lincirc/gf2.hpp"

#include <stdexcept>

namespace lincirc
{

namespace
{

/* irreducible polynomial per degree, top bit included (degree 1 is plain
 * GF(2): reduction by x keeps the low bit) */
constexpr uint32_t field_poly[17] = {
    0,       0x2,     0x7,    0xB,    0x13,   0x25,    0x43,    0x83,   0x11B,
    0x211,   0x409,   0x805,  0x1053, 0x201B, 0x402B,  0x8003,  0x1100B };

} // namespace

GF2Field::GF2Field( uint32_t degree )
    : degree_( degree )
{
  if ( degree < 1 || degree > 16 )
    throw std::invalid_argument( "GF2Field: degree must lie in [1, 16]" );
  poly_ = field_poly[degree];
}

uint32_t GF2Field::mul( uint32_t a, uint32_t b ) const
{
  uint32_t result = 0;
  while ( b )
  {
    if ( b & 1u )
      result ^= a;
    b >>= 1u;
    a <<= 1u;
    if ( a & ( 1u << degree_ ) )
      a ^= poly_;
  }
  return result;
}

uint32_t GF2Field::pow( uint32_t a, uint32_t e ) const
{
  uint32_t result = 1;
  while ( e )
  {
    if ( e & 1u )
      result = mul( result, a );
    a = mul( a, a );
    e >>= 1u;
  }
  return result;
}

BooleanMatrix gf2_multiply( BooleanMatrix const& a, BooleanMatrix const& b )
{
  if ( a.n_cols() != b.n_rows() )
    throw std::invalid_argument( "gf2_multiply: inner dimensions differ" );
  BooleanMatrix result{ a.n_rows(), b.n_cols() };
  for ( uint32_t i = 0; i < a.n_rows(); ++i )
  {
    BitVec acc( b.n_cols() );
    a.row( i ).for_each_set( [&]( std::size_t k ) { acc ^= b.row( uint32_t( k ) ); } );
    for ( uint32_t j = 0; j < b.n_cols(); ++j )
      if ( acc.test( j ) )
        result.set( i, j );
  }
  return result;
}

uint32_t gf2_rank( BooleanMatrix const& a )
{
  std::vector<BitVec> rows;
  for ( uint32_t i = 0; i < a.n_rows(); ++i )
    rows.push_back( a.row( i ) );

  uint32_t rank = 0;
  for ( uint32_t col = 0; col < a.n_cols() && rank < rows.size(); ++col )
  {
    uint32_t pivot = rank;
    while ( pivot < rows.size() && !rows[pivot].test( col ) )
      ++pivot;
    if ( pivot == rows.size() )
      continue;
    std::swap( rows[rank], rows[pivot] );
    for ( uint32_t i = 0; i < rows.size(); ++i )
      if ( i != rank && rows[i].test( col ) )
        rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

} // namespace lincirc
