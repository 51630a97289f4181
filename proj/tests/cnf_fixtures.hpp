#pragma once

/* Shared CNF and covering-instance fixtures: a brute-force model counter
 * plus random formula/instance generators. */

#include <lincirc/satbridge.hpp>

#include <cmath>
#include <cstdlib>
#include <random>

namespace testutil
{

using namespace lincirc;

/* assignment enumeration oracle; bit v-1 of a is the value of variable v */
inline uint64_t brute_count( CnfFormula const& f )
{
  uint64_t count = 0;
  for ( uint64_t a = 0; a < ( uint64_t( 1 ) << f.n_vars ); ++a )
  {
    bool ok = true;
    for ( auto const& clause : f.clauses )
    {
      bool sat = false;
      for ( auto lit : clause )
      {
        bool const value = ( a >> ( std::abs( lit ) - 1 ) ) & 1u;
        if ( lit > 0 ? value : !value )
        {
          sat = true;
          break;
        }
      }
      if ( !sat )
      {
        ok = false;
        break;
      }
    }
    if ( ok )
      ++count;
  }
  return count;
}

inline CnfFormula random_cnf( uint32_t n_vars, uint32_t n_clauses, uint32_t width,
                              std::mt19937& rng )
{
  CnfFormula f;
  f.n_vars = n_vars;
  for ( uint32_t c = 0; c < n_clauses; ++c )
  {
    std::vector<int32_t> clause;
    for ( uint32_t l = 0; l < width; ++l )
    {
      int32_t lit = 1 + int32_t( rng() % n_vars );
      if ( rng() & 1u )
        lit = -lit;
      clause.push_back( lit );
    }
    f.clauses.push_back( std::move( clause ) );
  }
  return f;
}

inline CoverInstance random_cover_instance( std::mt19937& rng )
{
  CoverInstance inst;
  uint32_t const n_sets = 1 + rng() % 256;
  inst.m = 1 + rng() % 64;
  for ( uint32_t side = 0; side < 2; ++side )
  {
    auto& sets = side == 0 ? inst.left : inst.right;
    for ( uint32_t i = 0; i < n_sets; ++i )
    {
      BitVec v( inst.m );
      if ( rng() % 10 == 0 )
      {
        /* occasional full set to exercise pruning */
        for ( uint32_t k = 0; k < inst.m; ++k )
          v.set( k );
      }
      else
      {
        for ( uint32_t k = 0; k < inst.m; ++k )
          if ( rng() % 3 )
            v.set( k );
      }
      sets.push_back( std::move( v ) );
    }
  }
  return inst;
}

} // namespace testutil
