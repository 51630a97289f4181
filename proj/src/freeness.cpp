#include "lincirc/freeness.hpp"

#include <stdexcept>

namespace lincirc
{

namespace
{

/* Depth-first choice of s+1 rows; the running column intersection only
 * shrinks, so branches fall below t+1 common columns early. */
bool find_all_ones_submatrix( BooleanMatrix const& a, uint32_t next_row, uint32_t picked,
                              uint32_t need_rows, uint32_t need_cols, BitVec const& common,
                              std::vector<uint32_t>& rows )
{
  if ( picked == need_rows )
    return true;
  for ( uint32_t r = next_row; r + ( need_rows - picked ) <= a.n_rows(); ++r )
  {
    BitVec refined = common;
    refined &= a.row( r );
    if ( refined.count() < need_cols )
      continue;
    rows.push_back( r );
    if ( find_all_ones_submatrix( a, r + 1, picked + 1, need_rows, need_cols, refined, rows ) )
      return true;
    rows.pop_back();
  }
  return false;
}

} // namespace

FreenessCertificate is_st_free( BooleanMatrix const& a, uint32_t s, uint32_t t )
{
  if ( s < 1 || s + 1 > a.n_rows() || t < 1 || t + 1 > a.n_cols() )
    throw std::invalid_argument( "is_st_free: s, t out of range" );

  FreenessCertificate cert;
  cert.s = s;
  cert.t = t;

  BitVec all_cols( a.n_cols() );
  for ( uint32_t j = 0; j < a.n_cols(); ++j )
    all_cols.set( j );

  std::vector<uint32_t> rows;
  if ( find_all_ones_submatrix( a, 0, 0, s + 1, t + 1, all_cols, rows ) )
  {
    cert.free = false;
    BitVec common = all_cols;
    for ( uint32_t r : rows )
    {
      common &= a.row( r );
      cert.witness_rows.push_back( r + 1 );
    }
    common.for_each_set( [&]( std::size_t j ) {
      if ( cert.witness_cols.size() < t + 1 )
        cert.witness_cols.push_back( uint32_t( j ) + 1 );
    } );
  }
  else
  {
    cert.free = true;
  }
  return cert;
}

MpBound mp_lower_bound( BooleanMatrix const& a, uint32_t max_s, uint32_t max_t )
{
  uint64_t const w = a.weight();
  if ( w == 0 )
    throw std::invalid_argument( "mp_lower_bound: matrix is all-zero" );

  /* any nonzero matrix needs at least one wire */
  MpBound best{ 0, 0, 1 };
  uint32_t const s_hi = std::min( max_s, a.n_rows() - 1 );
  uint32_t const t_hi = std::min( max_t, a.n_cols() - 1 );
  for ( uint32_t s = 1; s <= s_hi; ++s )
    for ( uint32_t t = 1; t <= t_hi; ++t )
    {
      uint64_t const bound = ( w + uint64_t( s ) * t - 1 ) / ( uint64_t( s ) * t );
      if ( bound <= best.bound )
        continue;
      if ( is_st_free( a, s, t ).free )
        best = { s, t, bound };
    }
  return best;
}

} // namespace lincirc
