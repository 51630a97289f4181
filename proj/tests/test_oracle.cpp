#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lincirc/freeness.hpp>
#include <lincirc/matrix.hpp>
#include <lincirc/oracle.hpp>
#include <lincirc/tensor.hpp>

#include <algorithm>
#include <bit>
#include <random>
#include <vector>

using namespace lincirc;

namespace
{

/* Second opinion for the frozen oracle fixtures: enumerate explicit gate
 * DAGs directly, with no value-deduplication or move-pruning assumptions.
 * Children are arbitrary distinct earlier nodes; a SUM gate additionally
 * needs pairwise disjoint child supports. */
struct NaiveSearch
{
  uint32_t n;
  Semiring ring;
  std::vector<uint32_t> targets; /* one entry per output row, repeats kept */
  std::vector<uint32_t> node_value;  /* inputs then gates */
  std::vector<bool> is_gate;
  bool found = false;

  NaiveSearch( BooleanMatrix const& a, Semiring ring_ ) : n( a.n_cols() ), ring( ring_ )
  {
    for ( uint32_t i = 0; i < a.n_rows(); ++i )
    {
      uint32_t mask = 0;
      a.row( i ).for_each_set( [&]( std::size_t j ) { mask |= 1u << j; } );
      targets.push_back( mask );
    }
    for ( uint32_t i = 0; i < n; ++i )
    {
      node_value.push_back( 1u << i );
      is_gate.push_back( false );
    }
  }

  /* every output row must have a gate of its own */
  uint32_t missing() const
  {
    std::vector<uint32_t> pool;
    for ( std::size_t k = 0; k < node_value.size(); ++k )
      if ( is_gate[k] )
        pool.push_back( node_value[k] );
    uint32_t miss = 0;
    for ( auto t : targets )
    {
      auto it = std::find( pool.begin(), pool.end(), t );
      if ( it != pool.end() )
        pool.erase( it );
      else
        ++miss;
    }
    return miss;
  }

  bool all_realised() const { return missing() == 0; }

  void dfs( uint32_t wires_left )
  {
    if ( found )
      return;
    if ( all_realised() )
    {
      found = true;
      return;
    }
    if ( missing() > wires_left )
      return;

    uint32_t const k = uint32_t( node_value.size() );
    for ( uint32_t subset = 1; subset < ( 1u << k ) && !found; ++subset )
    {
      uint32_t const fanin = uint32_t( std::popcount( subset ) );
      if ( fanin > wires_left )
        continue;
      uint32_t value = 0;
      bool ok = true;
      for ( uint32_t i = 0; i < k; ++i )
      {
        if ( !( ( subset >> i ) & 1u ) )
          continue;
        if ( ring == Semiring::XOR )
        {
          value ^= node_value[i];
        }
        else
        {
          if ( ring == Semiring::SUM && ( value & node_value[i] ) )
          {
            ok = false;
            break;
          }
          value |= node_value[i];
        }
      }
      if ( !ok )
        continue;
      node_value.push_back( value );
      is_gate.push_back( true );
      dfs( wires_left - fanin );
      node_value.pop_back();
      is_gate.pop_back();
    }
  }
};

uint32_t naive_min_wires( BooleanMatrix const& a, Semiring ring, uint32_t cap )
{
  for ( uint32_t w = 1; w <= cap; ++w )
  {
    NaiveSearch s( a, ring );
    s.dfs( w );
    if ( s.found )
      return w;
  }
  return cap + 1;
}

} // namespace

TEST_CASE( "frozen fixtures match the naive DAG enumerator" )
{
  auto i3 = BooleanMatrix::identity( 3 );
  auto comp3 = BooleanMatrix::complement_identity( 3 );
  for ( auto ring : { Semiring::OR, Semiring::SUM, Semiring::XOR } )
  {
    auto ri = min_wires( i3, ring, 10 );
    REQUIRE( ri.found );
    CHECK( ri.wires == 3 );
    CHECK( naive_min_wires( i3, ring, 5 ) == 3 );

    auto rc = min_wires( comp3, ring, 10 );
    REQUIRE( rc.found );
    CHECK( rc.wires == 6 );
    CHECK( naive_min_wires( comp3, ring, 7 ) == 6 );
  }
}

TEST_CASE( "oracle agrees with the naive enumerator on random tiny matrices" )
{
  std::mt19937_64 rng( 555 );
  int compared = 0;
  while ( compared < 15 )
  {
    auto a = BooleanMatrix::random( 2 + rng() % 2, 3, 0.55, rng );
    if ( a.has_zero_row() )
      continue;
    ++compared;
    for ( auto ring : { Semiring::OR, Semiring::SUM, Semiring::XOR } )
    {
      auto r = min_wires( a, ring, 12 );
      REQUIRE( r.found );
      CHECK( r.wires == naive_min_wires( a, ring, 9 ) );
    }
  }
}

TEST_CASE( "permutation tensor fixture: SUM minimum is 4" )
{
  auto perm = kronecker( BooleanMatrix::complement_identity( 2 ), BooleanMatrix::identity( 2 ) );
  auto r = min_wires( perm, Semiring::SUM, 10 );
  REQUIRE( r.found );
  CHECK( r.wires == 4 );
  CHECK( validate( r.witness ).empty() );
  CHECK( extract_matrix( r.witness ) == perm );
}

TEST_CASE( "witnesses validate, extract back, and have the reported wires" )
{
  std::mt19937_64 rng( 808 );
  int done = 0;
  while ( done < 20 )
  {
    auto a = BooleanMatrix::random( 3, 3, 0.5, rng );
    if ( a.has_zero_row() )
      continue;
    ++done;
    for ( auto ring : { Semiring::OR, Semiring::SUM, Semiring::XOR } )
    {
      auto r = min_wires( a, ring, 12 );
      REQUIRE( r.found );
      REQUIRE( validate( r.witness ).empty() );
      CHECK( extract_matrix( r.witness ) == a );
      CHECK( r.witness.wire_count() == r.wires );
      CHECK( r.witness.ring == ring );
    }
  }
}

TEST_CASE( "budget exhaustion is reported, not thrown" )
{
  auto comp3 = BooleanMatrix::complement_identity( 3 );
  auto r = min_wires( comp3, Semiring::OR, 5 );
  CHECK( !r.found );
  CHECK( r.budget == 5 );
}

TEST_CASE( "caps are enforced" )
{
  CHECK_THROWS_AS( min_wires( BooleanMatrix::identity( 6 ), Semiring::OR, 10 ),
                   std::invalid_argument );
  CHECK_THROWS_AS( min_wires( BooleanMatrix::identity( 3 ), Semiring::OR, 21 ),
                   std::invalid_argument );
  BooleanMatrix z( 2, 2 );
  z.set( 0, 0 );
  CHECK_THROWS_AS( min_wires( z, Semiring::OR, 10 ), std::invalid_argument );
}

TEST_CASE( "gap report on the identity: all equal, ratios 1" )
{
  auto g = gap_report( BooleanMatrix::identity( 4 ), 10 );
  REQUIRE( g.c_or.has_value() );
  REQUIRE( g.c_sum.has_value() );
  REQUIRE( g.c_xor.has_value() );
  CHECK( *g.c_or == 4 );
  CHECK( *g.c_sum == 4 );
  CHECK( *g.c_xor == 4 );
  REQUIRE( g.ratios.size() == 6 );
  for ( auto const& [name, value] : g.ratios )
  {
    (void)name;
    CHECK( value == 1.0 );
  }
}

TEST_CASE( "gap report propagates unknowns" )
{
  auto g = gap_report( BooleanMatrix::complement_identity( 3 ), 4 );
  CHECK( !g.c_or.has_value() );
  CHECK( !g.c_sum.has_value() );
  CHECK( !g.c_xor.has_value() );
  CHECK( g.ratios.empty() );
}

TEST_CASE( "full 3x3 sweep: homomorphism inequalities and bound soundness" )
{
  /* every 3x3 matrix whose rows are all nonzero */
  for ( uint32_t r0 = 1; r0 < 8; ++r0 )
  {
    for ( uint32_t r1 = 1; r1 < 8; ++r1 )
    {
      for ( uint32_t r2 = 1; r2 < 8; ++r2 )
      {
        BooleanMatrix a( 3, 3 );
        uint32_t const rows[3] = { r0, r1, r2 };
        for ( uint32_t i = 0; i < 3; ++i )
          for ( uint32_t j = 0; j < 3; ++j )
            if ( ( rows[i] >> j ) & 1u )
              a.set( i, j );

        auto g = gap_report( a, 9 ); /* c_sum <= weight <= 9 */
        REQUIRE( g.c_or.has_value() );
        REQUIRE( g.c_sum.has_value() );
        REQUIRE( g.c_xor.has_value() );
        CHECK( *g.c_or <= *g.c_sum );
        CHECK( *g.c_xor <= *g.c_sum );

        auto mp = mp_lower_bound( a, 2, 2 );
        CHECK( mp.bound <= *g.c_or );
      }
    }
  }
}

TEST_CASE( "all-ones 3x3 shows no gap at this size" )
{
  auto g = gap_report( BooleanMatrix::all_ones( 3, 3 ), 9 );
  REQUIRE( g.c_or.has_value() );
  REQUIRE( g.c_sum.has_value() );
  REQUIRE( g.c_xor.has_value() );
  CHECK( *g.c_or == *g.c_sum );
  CHECK( *g.c_xor == *g.c_sum );
}

TEST_CASE( "mp bound sound on random 4x4 matrices" )
{
  std::mt19937_64 rng( 99 );
  int done = 0;
  while ( done < 50 )
  {
    auto a = BooleanMatrix::random( 4, 4, 0.45, rng );
    if ( a.has_zero_row() )
      continue;
    ++done;
    auto r = min_wires( a, Semiring::OR, 16 );
    REQUIRE( r.found ); /* trivial circuit needs weight <= 16 wires */
    CHECK( mp_lower_bound( a, 3, 3 ).bound <= r.wires );
  }
}

TEST_CASE( "direct_sum_bound is sound against the oracle on tiny tensors" )
{
  /* total kronecker dimension <= 5 */
  std::vector<std::pair<BooleanMatrix, BooleanMatrix>> pairs;
  pairs.emplace_back( BooleanMatrix::complement_identity( 2 ), BooleanMatrix::identity( 2 ) );
  pairs.emplace_back( BooleanMatrix::identity( 2 ), BooleanMatrix::identity( 2 ) );
  pairs.emplace_back( BooleanMatrix::all_ones( 2, 2 ), BooleanMatrix::identity( 2 ) );
  pairs.emplace_back( BooleanMatrix::identity( 2 ), BooleanMatrix::all_ones( 2, 2 ) );
  for ( auto const& [b, a] : pairs )
  {
    auto cert = is_st_free( a, 1, 1 );
    if ( !cert.free )
      continue;
    auto rk = rank_cover( b, true, 8 );
    REQUIRE( rk.resolved );
    auto bound = direct_sum_bound( b, a, cert, rk.rank );
    auto r = min_wires( kronecker( b, a ), Semiring::SUM, 16 );
    REQUIRE( r.found );
    CHECK( bound <= r.wires );
  }
}
