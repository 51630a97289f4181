#include "lincirc/satbridge.hpp"

#include "lincirc/rewrite.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lincirc
{

CnfFormula parse_dimacs( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::string line;
  CnfFormula f;
  uint64_t declared_clauses = 0;
  bool seen_header = false;
  std::vector<int32_t> current;
  bool open = false;

  while ( std::getline( in, line ) )
  {
    if ( line.empty() || line[0] == 'c' )
      continue;
    if ( line[0] == 'p' )
    {
      if ( seen_header )
        throw std::invalid_argument( "parse_dimacs: duplicate header" );
      std::istringstream header{ line };
      std::string p, fmt;
      int64_t vars = -1, clauses = -1;
      header >> p >> fmt >> vars >> clauses;
      if ( header.fail() || fmt != "cnf" || vars < 0 || clauses < 0 )
        throw std::invalid_argument( "parse_dimacs: malformed header" );
      f.n_vars = uint32_t( vars );
      declared_clauses = uint64_t( clauses );
      seen_header = true;
      continue;
    }
    if ( !seen_header )
      throw std::invalid_argument( "parse_dimacs: clause before header" );
    std::istringstream body{ line };
    int64_t lit;
    while ( body >> lit )
    {
      if ( lit == 0 )
      {
        f.clauses.push_back( current );
        current.clear();
        open = false;
        continue;
      }
      if ( std::abs( lit ) > int64_t( f.n_vars ) )
        throw std::invalid_argument( "parse_dimacs: literal out of range" );
      current.push_back( int32_t( lit ) );
      open = true;
    }
    if ( !body.eof() )
      throw std::invalid_argument( "parse_dimacs: stray token in clause line" );
  }

  if ( !seen_header )
    throw std::invalid_argument( "parse_dimacs: missing header" );
  if ( open )
    throw std::invalid_argument( "parse_dimacs: clause missing its 0 terminator" );
  if ( f.clauses.size() != declared_clauses )
    throw std::invalid_argument( "parse_dimacs: clause count differs from header" );
  return f;
}

CoverInstance split_to_cover( CnfFormula const& f, uint32_t cap )
{
  if ( f.n_vars > cap )
    throw std::invalid_argument( "split_to_cover: variable count above cap" );

  CoverInstance inst;
  inst.padded = ( f.n_vars % 2 ) != 0;
  uint32_t const n_pad = f.n_vars + ( inst.padded ? 1 : 0 );
  uint32_t const half = n_pad / 2;
  uint32_t const n_sets = 1u << half;
  inst.m = uint32_t( f.clauses.size() );

  /* literal satisfied under assignment word a, where bit b of a is the
   * value of variable base + b + 1 */
  auto satisfied = [&]( int32_t lit, uint32_t base, uint32_t a ) {
    uint32_t const var = uint32_t( std::abs( lit ) );
    if ( var <= base || var > base + half )
      return false;
    bool const value = ( a >> ( var - base - 1 ) ) & 1u;
    return lit > 0 ? value : !value;
  };

  auto build = [&]( uint32_t base ) {
    std::vector<BitVec> sets( n_sets, BitVec( inst.m ) );
    for ( uint32_t a = 0; a < n_sets; ++a )
      for ( uint32_t c = 0; c < inst.m; ++c )
        for ( auto lit : f.clauses[c] )
          if ( satisfied( lit, base, a ) )
          {
            sets[a].set( c );
            break;
          }
    return sets;
  };

  inst.left = build( 0 );
  inst.right = build( half );
  return inst;
}

ComplementCoverCircuit cover_complement_circuit( CoverInstance const& inst )
{
  if ( inst.left.size() != inst.right.size() )
    throw std::invalid_argument( "cover_complement_circuit: set lists differ in length" );
  uint32_t const n_sets = uint32_t( inst.left.size() );

  ComplementCoverCircuit result;
  result.circuit.ring = Semiring::OR;
  result.circuit.n_inputs = n_sets;

  /* middle gates: g_k reads every input j with k outside left[j] */
  std::vector<NodeId> gate_of( inst.m, 0 );
  for ( uint32_t k = 0; k < inst.m; ++k )
  {
    std::vector<NodeId> children;
    for ( uint32_t j = 0; j < n_sets; ++j )
      if ( !inst.left[j].test( k ) )
        children.push_back( j + 1 );
    if ( children.empty() )
    {
      result.pruned_gates.push_back( k );
      continue;
    }
    result.circuit.gates.push_back( std::move( children ) );
    gate_of[k] = result.circuit.n_inputs + result.circuit.n_gates();
  }

  /* output rows: r_i reads every kept g_k with k outside right[i] */
  for ( uint32_t i = 0; i < n_sets; ++i )
  {
    std::vector<NodeId> children;
    for ( uint32_t k = 0; k < inst.m; ++k )
      if ( gate_of[k] != 0 && !inst.right[i].test( k ) )
        children.push_back( gate_of[k] );
    if ( children.empty() )
    {
      result.all_covering.push_back( i );
      continue;
    }
    result.circuit.gates.push_back( std::move( children ) );
    result.circuit.outputs.push_back( result.circuit.n_inputs + result.circuit.n_gates() );
    result.output_rows.push_back( i );
  }
  return result;
}

uint64_t count_covering_pairs( CoverInstance const& inst, CountVia via )
{
  if ( inst.left.size() != inst.right.size() )
    throw std::invalid_argument( "count_covering_pairs: set lists differ in length" );
  uint64_t const n_sets = inst.left.size();
  uint64_t const all_pairs = n_sets * n_sets;

  if ( via == CountVia::direct )
  {
    /* (i, j) is covering iff the complements of the two sets are disjoint */
    auto complement = [&]( BitVec const& v ) {
      BitVec c( inst.m );
      for ( uint32_t k = 0; k < inst.m; ++k )
        if ( !v.test( k ) )
          c.set( k );
      return c;
    };
    std::vector<BitVec> cl, cr;
    cl.reserve( n_sets );
    cr.reserve( n_sets );
    for ( auto const& v : inst.left )
      cl.push_back( complement( v ) );
    for ( auto const& v : inst.right )
      cr.push_back( complement( v ) );
    uint64_t covering = 0;
    for ( auto const& r : cr )
      for ( auto const& l : cl )
        if ( !r.intersects( l ) )
          ++covering;
    return covering;
  }

  auto const built = cover_complement_circuit( inst );
  if ( via == CountVia::pipeline_sum )
  {
    uint64_t abar = 0;
    if ( !built.circuit.outputs.empty() )
    {
      auto const sum = rewrite( built.circuit, Semiring::SUM ).first;
      Vector ones{ Semiring::SUM, std::vector<uint64_t>( sum.n_inputs, 1 ) };
      for ( auto v : evaluate( sum, ones ).values )
        abar += v;
    }
    return all_pairs - abar;
  }

  /* pipeline_xor: parity of the count; the complement weight enters through
   * the parities of the row sums */
  uint64_t parity = all_pairs & 1u;
  if ( !built.circuit.outputs.empty() )
  {
    auto const xored = rewrite( built.circuit, Semiring::XOR ).first;
    Vector ones{ Semiring::XOR, std::vector<uint64_t>( xored.n_inputs, 1 ) };
    for ( auto v : evaluate( xored, ones ).values )
      parity ^= v;
  }
  return parity;
}

uint64_t count_sat( CnfFormula const& f, uint32_t cap )
{
  auto const inst = split_to_cover( f, cap );
  auto const pairs = count_covering_pairs( inst, CountVia::pipeline_sum );
  return inst.padded ? pairs / 2 : pairs;
}

uint64_t parity_sat( CnfFormula const& f, uint32_t cap )
{
  if ( f.n_vars > cap )
    throw std::invalid_argument( "parity_sat: variable count above cap" );
  if ( f.n_vars % 2 == 0 )
    return count_covering_pairs( split_to_cover( f, cap ), CountVia::pipeline_xor );

  /* free padding would double the count and erase the parity; force the
   * dummy variable with a unit clause instead */
  CnfFormula forced = f;
  forced.n_vars += 1;
  forced.clauses.push_back( { int32_t( forced.n_vars ) } );
  auto const inst = split_to_cover( forced, forced.n_vars );
  return count_covering_pairs( inst, CountVia::pipeline_xor );
}

} // namespace lincirc
