#include "lincirc/uniform.hpp"

#include "lincirc/builders.hpp"
#include "lincirc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace lincirc
{

namespace
{

uint64_t splitmix64( uint64_t x )
{
  x += 0x9E3779B97F4A7C15ull;
  x = ( x ^ ( x >> 30 ) ) * 0xBF58476D1CE4E5B9ull;
  x = ( x ^ ( x >> 27 ) ) * 0x94D049BB133111EBull;
  return x ^ ( x >> 31 );
}

BooleanMatrix random_gf2_matrix( uint32_t rows, uint32_t cols, std::mt19937_64& rng )
{
  BooleanMatrix m{ rows, cols };
  for ( uint32_t i = 0; i < rows; ++i )
    for ( uint32_t j = 0; j < cols; ++j )
      if ( rng() & 1u )
        m.set( i, j );
  return m;
}

} // namespace

CodeMatrix build_code_matrix( uint32_t t, uint32_t n, uint32_t k )
{
  if ( t < 1 || t > 16 )
    throw std::invalid_argument( "build_code_matrix: t must lie in [1, 16]" );
  if ( n < 1 || ( t < 32 && uint64_t( n ) > ( uint64_t( 1 ) << t ) ) )
    throw std::invalid_argument( "build_code_matrix: need 1 <= n <= 2^t" );
  if ( k < 1 || k > n )
    throw std::invalid_argument( "build_code_matrix: need 1 <= k <= n" );

  GF2Field field( t );
  BooleanMatrix p{ k * t, n };
  for ( uint32_t j = 0; j < n; ++j )
  {
    for ( uint32_t e = 0; e < k; ++e )
    {
      uint32_t const val = field.pow( j, e );
      for ( uint32_t b = 0; b < t; ++b )
        if ( ( val >> b ) & 1u )
          p.set( e * t + b, j );
    }
  }
  return CodeMatrix{ std::move( p ), k, t };
}

IndependenceCheck check_k_independence( CodeMatrix const& code, uint64_t subset_budget )
{
  uint32_t const n = code.p.n_cols();
  uint32_t const k = code.k;
  if ( k > n )
    return IndependenceCheck::dependent;

  uint64_t subsets = 1;
  for ( uint32_t i = 0; i < k; ++i )
  {
    subsets = subsets * ( n - i ) / ( i + 1 );
    if ( subsets > subset_budget )
      return IndependenceCheck::unverified;
  }

  auto const pt = code.p.transpose(); /* columns as rows */
  std::vector<uint32_t> pick( k );
  for ( uint32_t i = 0; i < k; ++i )
    pick[i] = i;
  while ( true )
  {
    BooleanMatrix sub{ k, code.p.n_rows() };
    for ( uint32_t i = 0; i < k; ++i )
      for ( uint32_t j = 0; j < code.p.n_rows(); ++j )
        if ( pt.test( pick[i], j ) )
          sub.set( i, j );
    if ( gf2_rank( sub ) != k )
      return IndependenceCheck::dependent;

    /* next combination */
    uint32_t i = k;
    while ( i > 0 && pick[i - 1] == n - k + i - 1 )
      --i;
    if ( i == 0 )
      break;
    ++pick[i - 1];
    for ( uint32_t j = i; j < k; ++j )
      pick[j] = pick[j - 1] + 1;
  }
  return IndependenceCheck::independent;
}

UniformSample kuniform_from_r( CodeMatrix const& code, BooleanMatrix r )
{
  auto const& p = code.p;
  uint32_t const m = p.n_rows();
  if ( r.n_rows() != m || r.n_cols() != m )
    throw std::invalid_argument( "kuniform_from_r: R must be m x m" );

  /* zero columns would leave stage-1 inputs unconsumed and break the
   * reversal; they cannot occur in a 1-independent code matrix */
  auto const pt = p.transpose();
  if ( pt.has_zero_row() )
    throw std::invalid_argument( "kuniform_from_r: P has a zero column" );

  std::vector<uint32_t> nz;
  for ( uint32_t i = 0; i < m; ++i )
    if ( p.row( i ).any() )
      nz.push_back( i );
  uint32_t const mnz = uint32_t( nz.size() );

  BooleanMatrix pnz{ mnz, p.n_cols() };
  for ( uint32_t i = 0; i < mnz; ++i )
    for ( uint32_t j = 0; j < p.n_cols(); ++j )
      if ( p.test( nz[i], j ) )
        pnz.set( i, j );

  /* stage 1: depth-1 XOR circuit for the nonzero rows of P */
  auto stage1 = trivial_circuit( pnz, Semiring::XOR );
  uint32_t const n = p.n_cols();

  Circuit c;
  c.ring = Semiring::XOR;
  c.n_inputs = n;
  c.gates = stage1.gates; /* same ids: inputs 1..n, gates n+1..n+mnz */

  /* stage 2: R restricted to nonzero rows; an all-zero row still needs a
   * gate for the reversal to consume, so it reads one stage-1 gate twice
   * and cancels to 0 */
  for ( uint32_t bi = 0; bi < mnz; ++bi )
  {
    std::vector<NodeId> children;
    for ( uint32_t ai = 0; ai < mnz; ++ai )
      if ( r.test( nz[bi], nz[ai] ) )
        children.push_back( NodeId( n + 1 + ai ) );
    if ( children.empty() )
      children = { NodeId( n + 1 ), NodeId( n + 1 ) };
    c.gates.push_back( std::move( children ) );
  }

  /* stage 3: graft the reversal of stage 1; its inputs become the stage-2
   * gates and its gates compute P^T.  Reversal inputs 1..mnz line up with
   * the stage-2 gates and reversal gates shift past them, which is the same
   * offset for both. */
  auto rev = reverse_xor( stage1 );
  auto map_id = [&]( NodeId id ) { return NodeId( n + mnz + id ); };
  for ( auto const& gate : rev.gates )
  {
    std::vector<NodeId> children;
    for ( auto child : gate )
      children.push_back( map_id( child ) );
    c.gates.push_back( std::move( children ) );
  }
  for ( auto out : rev.outputs )
    c.outputs.push_back( map_id( out ) );

  auto a = gf2_multiply( gf2_multiply( pt, r ), p );
  return UniformSample{ std::move( r ), std::move( a ), std::move( c ) };
}

UniformSample generate_kuniform( CodeMatrix const& code, uint64_t seed )
{
  std::mt19937_64 rng( seed );
  uint32_t const m = code.p.n_rows();
  return kuniform_from_r( code, random_gf2_matrix( m, m, rng ) );
}

double chi_square_critical_001( uint32_t dof )
{
  switch ( dof )
  {
  case 1: return 10.828;
  case 2: return 13.816;
  case 3: return 16.266;
  case 7: return 24.322;
  case 15: return 37.697;
  case 31: return 61.098;
  case 63: return 103.442;
  default: break;
  }
  /* Wilson-Hilferty approximation at z_{0.999} */
  double const z = 3.090232;
  double const d = double( dof );
  double const term = 1.0 - 2.0 / ( 9.0 * d ) + z * std::sqrt( 2.0 / ( 9.0 * d ) );
  return d * term * term * term;
}

UniformityReport uniformity_test( CodeMatrix const& code, uint64_t samples,
                                  std::vector<uint32_t> const& rows,
                                  std::vector<uint32_t> const& cols,
                                  uint64_t seed, uint32_t threads )
{
  uint32_t const k = code.k;
  uint32_t const n = code.p.n_cols();
  if ( rows.size() != k || cols.size() != k )
    throw std::invalid_argument( "uniformity_test: need k row and k column indices" );
  for ( auto i : rows )
    if ( i < 1 || i > n )
      throw std::invalid_argument( "uniformity_test: row index out of range" );
  for ( auto j : cols )
    if ( j < 1 || j > n )
      throw std::invalid_argument( "uniformity_test: column index out of range" );
  uint32_t const cells = k * k;
  if ( cells > 20 )
    throw std::invalid_argument( "uniformity_test: k too large to tabulate" );
  uint64_t const buckets = uint64_t( 1 ) << cells;
  if ( samples < 100 * buckets )
    throw std::invalid_argument( "uniformity_test: need at least 100 * 2^(k*k) samples" );

  uint32_t const m = code.p.n_rows();
  if ( m > 64 )
    throw std::invalid_argument( "uniformity_test: m above 64" );

  /* selected columns of P as m-bit masks */
  std::vector<uint64_t> pcol_rows( k ), pcol_cols( k );
  auto column_mask = [&]( uint32_t j ) {
    uint64_t mask = 0;
    for ( uint32_t i = 0; i < m; ++i )
      if ( code.p.test( i, j - 1 ) )
        mask |= uint64_t( 1 ) << i;
    return mask;
  };
  for ( uint32_t i = 0; i < k; ++i )
  {
    pcol_rows[i] = column_mask( rows[i] );
    pcol_cols[i] = column_mask( cols[i] );
  }

  constexpr uint64_t chunk_size = 1024;
  uint64_t const n_chunks = ( samples + chunk_size - 1 ) / chunk_size;

  auto run_chunk = [&]( uint64_t chunk, std::vector<uint64_t>& counts ) {
    std::mt19937_64 rng( splitmix64( seed ^ ( 0x517CC1B727220A95ull * ( chunk + 1 ) ) ) );
    uint64_t const begin = chunk * chunk_size;
    uint64_t const todo = std::min( chunk_size, samples - begin );
    std::vector<uint64_t> r_rows( m );
    for ( uint64_t s = 0; s < todo; ++s )
    {
      for ( uint32_t i = 0; i < m; ++i )
      {
        uint64_t mask = 0;
        for ( uint32_t j = 0; j < m; ++j )
          if ( rng() & 1u )
            mask |= uint64_t( 1 ) << j;
        r_rows[i] = mask;
      }
      /* s[a][j2] = (R P)[a, cols[j2]]; then entry (j1, j2) = parity of
       * P-col(rows[j1]) against that column */
      uint64_t value = 0;
      for ( uint32_t j2 = 0; j2 < k; ++j2 )
      {
        uint64_t col = 0;
        for ( uint32_t a = 0; a < m; ++a )
          if ( std::popcount( r_rows[a] & pcol_cols[j2] ) & 1 )
            col |= uint64_t( 1 ) << a;
        for ( uint32_t j1 = 0; j1 < k; ++j1 )
          if ( std::popcount( pcol_rows[j1] & col ) & 1 )
            value |= uint64_t( 1 ) << ( j1 * k + j2 );
      }
      ++counts[value];
    }
  };

  std::vector<uint64_t> counts( buckets, 0 );
  if ( threads <= 1 )
  {
    for ( uint64_t chunk = 0; chunk < n_chunks; ++chunk )
      run_chunk( chunk, counts );
  }
  else
  {
    std::vector<std::vector<uint64_t>> partial( threads, std::vector<uint64_t>( buckets, 0 ) );
    std::vector<std::thread> pool;
    for ( uint32_t t = 0; t < threads; ++t )
    {
      pool.emplace_back( [&, t]() {
        for ( uint64_t chunk = t; chunk < n_chunks; chunk += threads )
          run_chunk( chunk, partial[t] );
      } );
    }
    for ( auto& th : pool )
      th.join();
    for ( auto const& part : partial )
      for ( uint64_t v = 0; v < buckets; ++v )
        counts[v] += part[v];
  }

  double const expected = double( samples ) / double( buckets );
  double stat = 0.0;
  for ( uint64_t v = 0; v < buckets; ++v )
  {
    double const diff = double( counts[v] ) - expected;
    stat += diff * diff / expected;
  }

  UniformityReport report;
  report.k = k;
  report.samples = samples;
  report.statistic = stat;
  report.dof = uint32_t( buckets - 1 );
  report.critical_001 = chi_square_critical_001( report.dof );
  report.pass = stat < report.critical_001;
  report.seed = seed;
  return report;
}

} // namespace lincirc
