#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lincirc/builders.hpp>
#include <lincirc/circuit.hpp>
#include <lincirc/freeness.hpp>
#include <lincirc/gf2.hpp>
#include <lincirc/matrix.hpp>
#include <lincirc/uniform.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

using namespace lincirc;

namespace
{

/* polynomial arithmetic over GF(2)[x] with coefficient masks */

uint32_t poly_degree( uint64_t f )
{
  return 63u - uint32_t( std::countl_zero( f ) );
}

uint64_t poly_mod( uint64_t a, uint64_t f )
{
  while ( a != 0 && poly_degree( a ) >= poly_degree( f ) )
    a ^= f << ( poly_degree( a ) - poly_degree( f ) );
  return a;
}

uint64_t poly_mul_mod( uint64_t a, uint64_t b, uint64_t f )
{
  uint64_t product = 0;
  while ( b )
  {
    if ( b & 1u )
      product ^= a;
    a <<= 1u;
    b >>= 1u;
  }
  return poly_mod( product, f );
}

uint64_t poly_gcd( uint64_t a, uint64_t b )
{
  while ( b != 0 )
  {
    auto const r = poly_mod( a, b );
    a = b;
    b = r;
  }
  return a;
}

/* x^(2^d) mod f by repeated squaring of x */
uint64_t x_power_tower( uint32_t d, uint64_t f )
{
  uint64_t r = poly_mod( 0x2u, f );
  for ( uint32_t i = 0; i < d; ++i )
    r = poly_mul_mod( r, r, f );
  return r;
}

/* f of degree t is irreducible iff x^(2^t) = x (mod f) and, for every prime
 * p dividing t, gcd(x^(2^(t/p)) - x mod f, f) is constant */
bool poly_irreducible( uint64_t f, uint32_t t )
{
  if ( poly_degree( f ) != t )
    return false;
  if ( x_power_tower( t, f ) != poly_mod( 0x2u, f ) )
    return false;
  for ( uint32_t p = 2; p <= t; ++p )
  {
    if ( t % p != 0 )
      continue;
    bool prime = true;
    for ( uint32_t q = 2; q * q <= p; ++q )
      if ( p % q == 0 )
        prime = false;
    if ( !prime )
      continue;
    auto const g = x_power_tower( t / p, f ) ^ poly_mod( 0x2u, f );
    if ( g != 0 && poly_gcd( f, g ) != 1 )
      return false;
  }
  return true;
}

BooleanMatrix matrix_from_rows( std::vector<std::vector<int>> const& rows )
{
  BooleanMatrix m{ uint32_t( rows.size() ), uint32_t( rows[0].size() ) };
  for ( uint32_t i = 0; i < m.n_rows(); ++i )
    for ( uint32_t j = 0; j < m.n_cols(); ++j )
      if ( rows[i][j] )
        m.set( i, j );
  return m;
}

/* independent dense recomputation a[i][j] = sum_{u,v} P[u][i] R[u][v] P[v][j] */
BooleanMatrix dense_ptrp( BooleanMatrix const& p, BooleanMatrix const& r )
{
  uint32_t const m = p.n_rows();
  uint32_t const n = p.n_cols();
  BooleanMatrix a{ n, n };
  for ( uint32_t i = 0; i < n; ++i )
  {
    for ( uint32_t j = 0; j < n; ++j )
    {
      int bit = 0;
      for ( uint32_t u = 0; u < m; ++u )
        for ( uint32_t v = 0; v < m; ++v )
          bit ^= int( p.test( u, i ) ) & int( r.test( u, v ) ) & int( p.test( v, j ) );
      if ( bit )
        a.set( i, j );
    }
  }
  return a;
}

BooleanMatrix r_from_mask( uint32_t m, uint64_t mask )
{
  BooleanMatrix r{ m, m };
  for ( uint32_t i = 0; i < m; ++i )
    for ( uint32_t j = 0; j < m; ++j )
      if ( ( mask >> ( i * m + j ) ) & 1u )
        r.set( i, j );
  return r;
}

} // namespace

TEST_CASE( "field moduli are irreducible of the right degree" )
{
  for ( uint32_t t = 1; t <= 16; ++t )
  {
    GF2Field field( t );
    CHECK( field.degree() == t );
    CHECK( field.size() == ( 1u << t ) );
    CHECK( poly_irreducible( field.modulus(), t ) );
  }
  CHECK_THROWS_AS( GF2Field( 0 ), std::invalid_argument );
  CHECK_THROWS_AS( GF2Field( 17 ), std::invalid_argument );
}

TEST_CASE( "field arithmetic fixtures" )
{
  GF2Field f4( 2 ); /* x^2 + x + 1 */
  CHECK( f4.mul( 2, 2 ) == 3 );
  CHECK( f4.mul( 2, 3 ) == 1 );
  CHECK( f4.add( 2, 3 ) == 1 );

  GF2Field f8( 3 ); /* x^3 + x + 1 */
  CHECK( f8.mul( 2, 4 ) == 3 );
  CHECK( f8.pow( 2, 3 ) == 3 );
  CHECK( f8.pow( 2, 7 ) == 1 );
  CHECK( f8.pow( 0, 0 ) == 1 );
  CHECK( f8.pow( 0, 5 ) == 0 );

  /* every nonzero element of GF(16) has order dividing 15 */
  GF2Field f16( 4 );
  for ( uint32_t a = 1; a < 16; ++a )
    CHECK( f16.pow( a, 15 ) == 1 );
}

TEST_CASE( "gf2 matrix product and rank" )
{
  auto const a = matrix_from_rows( { { 1, 1, 0 }, { 0, 1, 1 } } );
  auto const b = matrix_from_rows( { { 1, 0 }, { 1, 1 }, { 0, 1 } } );
  auto const c = gf2_multiply( a, b );
  CHECK( c == matrix_from_rows( { { 0, 1 }, { 1, 0 } } ) );
  CHECK_THROWS_AS( gf2_multiply( a, a ), std::invalid_argument );

  CHECK( gf2_rank( BooleanMatrix::identity( 4 ) ) == 4 );
  CHECK( gf2_rank( matrix_from_rows( { { 1, 1 }, { 1, 1 } } ) ) == 1 );
  CHECK( gf2_rank( BooleanMatrix{ 3, 3 } ) == 0 );
  CHECK( gf2_rank( matrix_from_rows( { { 1, 1, 0 }, { 0, 1, 1 }, { 1, 0, 1 } } ) ) == 2 );
}

TEST_CASE( "code matrix layout" )
{
  auto const code = build_code_matrix( 3, 8, 2 );
  CHECK( code.p.n_rows() == 6 );
  CHECK( code.p.n_cols() == 8 );
  CHECK( code.k == 2 );
  CHECK( code.t == 3 );

  /* block e = 0 is the bit expansion of 1, block e = 1 of the element j */
  for ( uint32_t j = 0; j < 8; ++j )
  {
    CHECK( code.p.test( 0, j ) );
    CHECK( !code.p.test( 1, j ) );
    CHECK( !code.p.test( 2, j ) );
    CHECK( code.p.test( 3, j ) == bool( j & 1u ) );
    CHECK( code.p.test( 4, j ) == bool( ( j >> 1 ) & 1u ) );
    CHECK( code.p.test( 5, j ) == bool( ( j >> 2 ) & 1u ) );
  }

  auto const flat = build_code_matrix( 2, 4, 1 );
  CHECK( flat.p.n_rows() == 2 );
  for ( uint32_t j = 0; j < 4; ++j )
    CHECK( flat.p.transpose().row( j ).any() );

  CHECK_THROWS_AS( build_code_matrix( 0, 1, 1 ), std::invalid_argument );
  CHECK_THROWS_AS( build_code_matrix( 17, 4, 2 ), std::invalid_argument );
  CHECK_THROWS_AS( build_code_matrix( 2, 5, 1 ), std::invalid_argument );
  CHECK_THROWS_AS( build_code_matrix( 2, 0, 1 ), std::invalid_argument );
  CHECK_THROWS_AS( build_code_matrix( 2, 4, 5 ), std::invalid_argument );
  CHECK_THROWS_AS( build_code_matrix( 2, 4, 0 ), std::invalid_argument );
}

TEST_CASE( "k-independence check" )
{
  CHECK( check_k_independence( build_code_matrix( 3, 8, 2 ) ) == IndependenceCheck::independent );
  CHECK( check_k_independence( build_code_matrix( 4, 16, 3 ) ) == IndependenceCheck::independent );
  CHECK( check_k_independence( build_code_matrix( 4, 16, 4 ) ) == IndependenceCheck::independent );

  CodeMatrix eye{ BooleanMatrix::identity( 4 ), 4, 1 };
  CHECK( check_k_independence( eye ) == IndependenceCheck::independent );

  CodeMatrix repeated{ matrix_from_rows( { { 1, 1 }, { 0, 0 } } ), 2, 1 };
  CHECK( check_k_independence( repeated ) == IndependenceCheck::dependent );

  /* C(16,8) = 12870 subsets exceed a tiny budget */
  auto const wide = build_code_matrix( 4, 16, 8 );
  CHECK( check_k_independence( wide, 100 ) == IndependenceCheck::unverified );
  CHECK( check_k_independence( wide ) == IndependenceCheck::independent );
}

TEST_CASE( "kuniform sample matches dense recomputation" )
{
  auto const code = build_code_matrix( 3, 8, 2 );
  for ( uint64_t seed : { 7u, 19u, 123u } )
  {
    auto const sample = generate_kuniform( code, seed );
    CHECK( sample.a == dense_ptrp( code.p, sample.r ) );
    CHECK( sample.circuit.ring == Semiring::XOR );
    CHECK( sample.circuit.n_inputs == 8 );
    CHECK( sample.circuit.outputs.size() == 8 );
    CHECK( validate( sample.circuit ).empty() );
    CHECK( extract_matrix( sample.circuit ) == sample.a );
    CHECK( sample.circuit.wire_count() <=
           2 * code.p.weight() + sample.r.weight() + 2 * code.p.n_rows() );
  }

  /* identity P turns the construction into A = R */
  CodeMatrix eye{ BooleanMatrix::identity( 4 ), 2, 2 };
  auto const sample = generate_kuniform( eye, 42 );
  CHECK( sample.a == sample.r );
  CHECK( extract_matrix( sample.circuit ) == sample.r );

  /* R = 0 collapses to the zero map */
  auto const zero = kuniform_from_r( code, BooleanMatrix{ 6, 6 } );
  CHECK( zero.a.weight() == 0 );
  CHECK( validate( zero.circuit ).empty() );
  CHECK( extract_matrix( zero.circuit ) == zero.a );
}

TEST_CASE( "kuniform input validation" )
{
  auto const code = build_code_matrix( 3, 8, 2 );
  CHECK_THROWS_AS( kuniform_from_r( code, BooleanMatrix{ 5, 5 } ), std::invalid_argument );

  CodeMatrix broken{ matrix_from_rows( { { 1, 0 }, { 0, 0 } } ), 1, 2 };
  CHECK_THROWS_AS( kuniform_from_r( broken, BooleanMatrix{ 2, 2 } ), std::invalid_argument );
}

TEST_CASE( "k = 1 entries are balanced over all R" )
{
  /* handcrafted P with assorted nonzero columns, m = 2 */
  CodeMatrix code{ matrix_from_rows( { { 1, 0, 1, 1 }, { 0, 1, 1, 0 } } ), 1, 2 };
  uint32_t const m = 2;
  std::vector<uint32_t> ones( 16, 0 );
  for ( uint64_t mask = 0; mask < ( 1u << ( m * m ) ); ++mask )
  {
    auto const sample = kuniform_from_r( code, r_from_mask( m, mask ) );
    CHECK( extract_matrix( sample.circuit ) == sample.a );
    for ( uint32_t i = 0; i < 4; ++i )
      for ( uint32_t j = 0; j < 4; ++j )
        if ( sample.a.test( i, j ) )
          ++ones[i * 4 + j];
  }
  for ( auto const count : ones )
    CHECK( count == 8 );
}

TEST_CASE( "k = 1 entries are balanced over all R at m = 4" )
{
  CodeMatrix code{ matrix_from_rows( { { 1, 0, 1, 0, 1 },
                                       { 0, 1, 1, 0, 0 },
                                       { 0, 0, 1, 1, 0 },
                                       { 0, 0, 0, 1, 1 } } ),
                   1, 4 };
  uint32_t const m = 4;
  std::vector<uint32_t> ones( 25, 0 );
  for ( uint64_t mask = 0; mask < ( uint64_t( 1 ) << ( m * m ) ); ++mask )
  {
    auto const a = dense_ptrp( code.p, r_from_mask( m, mask ) );
    for ( uint32_t i = 0; i < 5; ++i )
      for ( uint32_t j = 0; j < 5; ++j )
        if ( a.test( i, j ) )
          ++ones[i * 5 + j];
  }
  for ( auto const count : ones )
    CHECK( count == 1u << 15 );
}

TEST_CASE( "k = 2 submatrix distribution is exactly uniform over all R" )
{
  auto const code = build_code_matrix( 1, 2, 2 );
  CHECK( code.p == matrix_from_rows( { { 1, 1 }, { 0, 1 } } ) );

  std::vector<uint32_t> counts( 16, 0 );
  for ( uint64_t mask = 0; mask < 16; ++mask )
  {
    auto const sample = kuniform_from_r( code, r_from_mask( 2, mask ) );
    uint32_t value = 0;
    for ( uint32_t i = 0; i < 2; ++i )
      for ( uint32_t j = 0; j < 2; ++j )
        if ( sample.a.test( i, j ) )
          value |= 1u << ( i * 2 + j );
    ++counts[value];
  }
  for ( auto const count : counts )
    CHECK( count == 1 );
}

TEST_CASE( "chi-square critical values" )
{
  CHECK( chi_square_critical_001( 1 ) == doctest::Approx( 10.828 ) );
  CHECK( chi_square_critical_001( 3 ) == doctest::Approx( 16.266 ) );
  CHECK( chi_square_critical_001( 15 ) == doctest::Approx( 37.697 ) );
  CHECK( chi_square_critical_001( 63 ) == doctest::Approx( 103.442 ) );
  /* Wilson-Hilferty for untabulated dof, within one percent of 26.124 */
  CHECK( chi_square_critical_001( 8 ) == doctest::Approx( 26.124 ).epsilon( 0.01 ) );
  CHECK( chi_square_critical_001( 100 ) > chi_square_critical_001( 50 ) );
}

TEST_CASE( "uniformity test accepts generated samples" )
{
  auto const k1 = uniformity_test( build_code_matrix( 3, 8, 1 ), 10000, { 1 }, { 2 }, 5 );
  CHECK( k1.k == 1 );
  CHECK( k1.samples == 10000 );
  CHECK( k1.dof == 1 );
  CHECK( k1.critical_001 == doctest::Approx( 10.828 ) );
  CHECK( k1.statistic < 10.828 );
  CHECK( k1.pass );
  CHECK( k1.seed == 5 );

  auto const k2 = uniformity_test( build_code_matrix( 3, 8, 2 ), 16000, { 1, 2 }, { 3, 4 }, 9 );
  CHECK( k2.dof == 15 );
  CHECK( k2.critical_001 == doctest::Approx( 37.697 ) );
  CHECK( k2.statistic < 37.697 );
  CHECK( k2.pass );

  /* overlapping row and column picks stay uniform */
  auto const diag = uniformity_test( build_code_matrix( 3, 8, 2 ), 16000, { 1, 2 }, { 1, 2 }, 11 );
  CHECK( diag.pass );
}

TEST_CASE( "uniformity test fails maximally on a zero column" )
{
  CodeMatrix broken{ matrix_from_rows( { { 1, 0 }, { 0, 0 } } ), 1, 2 };
  auto const report = uniformity_test( broken, 1000, { 1 }, { 2 }, 3 );
  CHECK( !report.pass );
  /* the tabulated entry is constantly 0, so the statistic hits its maximum */
  CHECK( report.statistic == doctest::Approx( 1000.0 ) );
}

TEST_CASE( "uniformity statistic does not depend on the thread count" )
{
  auto const code = build_code_matrix( 3, 8, 2 );
  auto const one = uniformity_test( code, 4800, { 1, 5 }, { 2, 7 }, 77, 1 );
  auto const four = uniformity_test( code, 4800, { 1, 5 }, { 2, 7 }, 77, 4 );
  CHECK( one.statistic == four.statistic );
  CHECK( one.pass == four.pass );
}

TEST_CASE( "uniformity test input validation" )
{
  auto const code = build_code_matrix( 3, 8, 2 );
  CHECK_THROWS_AS( uniformity_test( code, 100, { 1, 2 }, { 3, 4 }, 1 ), std::invalid_argument );
  CHECK_THROWS_AS( uniformity_test( code, 16000, { 1 }, { 3, 4 }, 1 ), std::invalid_argument );
  CHECK_THROWS_AS( uniformity_test( code, 16000, { 1, 2 }, { 3, 9 }, 1 ), std::invalid_argument );
  CHECK_THROWS_AS( uniformity_test( code, 16000, { 0, 2 }, { 3, 4 }, 1 ), std::invalid_argument );
  CHECK_THROWS_AS(
      uniformity_test( build_code_matrix( 5, 32, 5 ), uint64_t( 1 ) << 32, { 1, 2, 3, 4, 5 },
                       { 6, 7, 8, 9, 10 }, 1 ),
      std::invalid_argument );
}

TEST_CASE( "generated matrices are nearly free at small scale" )
{
  /* union bound over k x k all-ones submatrices: C(n,k)^2 2^(-k^2) */
  auto const code16 = build_code_matrix( 4, 16, 4 );
  uint32_t fail4 = 0, fail5 = 0;
  for ( uint64_t seed = 1; seed <= 200; ++seed )
  {
    auto const sample = generate_kuniform( code16, seed );
    if ( !is_st_free( sample.a, 4, 4 ).free )
      ++fail4;
    if ( !is_st_free( sample.a, 5, 5 ).free )
      ++fail5;
  }
  /* these columns of P are 5-independent, so 5 x 5 submatrices are uniform
   * and the bound at that order is C(16,5)^2 2^(-25) < 0.57 */
  CHECK( fail4 / 200.0 <= 0.57 );
  CHECK( fail5 / 200.0 < 0.1 );

  /* at n = 8 the bound on failing (k-1)-freeness, C(8,4)^2 2^(-16) < 0.075,
   * is itself below the 0.1 threshold */
  auto const code8 = build_code_matrix( 3, 8, 4 );
  uint32_t fail3 = 0;
  for ( uint64_t seed = 1; seed <= 200; ++seed )
  {
    auto const sample = generate_kuniform( code8, seed );
    if ( !is_st_free( sample.a, 3, 3 ).free )
      ++fail3;
  }
  CHECK( fail3 / 200.0 < 0.1 );
}
