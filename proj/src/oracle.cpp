#include "lincirc/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace lincirc
{

namespace
{

constexpr uint32_t max_dim = 5u;
constexpr uint32_t max_budget = 20u;
constexpr uint32_t inf = std::numeric_limits<uint32_t>::max();

/* Search engine for one (matrix, ring) instance.  Values are column
 * supports packed into n-bit masks; a state is the set of values already
 * realised by gates, itself a mask over the 2^n - 1 nonzero values. */
struct Search
{
  uint32_t n;                     /* inputs */
  Semiring ring;
  std::vector<uint32_t> targets;  /* distinct row masks */
  uint32_t target_set = 0;        /* as a value-set mask */
  std::vector<uint32_t> candidates; /* values worth building, ascending */
  uint32_t limit = 0;             /* wire cap of the current deepening pass */
  std::vector<std::pair<uint32_t, uint32_t>> path; /* (value, fanin) moves */
  std::vector<std::pair<uint32_t, uint32_t>> best_path;
  bool found = false;
  /* state -> largest remaining budget that already failed from there */
  std::unordered_map<uint64_t, uint32_t> failed;

  Search( BooleanMatrix const& a, Semiring ring_ )
      : n( a.n_cols() ), ring( ring_ )
  {
    for ( uint32_t i = 0; i < a.n_rows(); ++i )
    {
      uint32_t mask = 0;
      a.row( i ).for_each_set( [&]( std::size_t j ) { mask |= 1u << j; } );
      if ( mask == 0 )
        throw std::invalid_argument( "min_wires: zero row has no realisation" );
      if ( !( target_set & value_bit( mask ) ) )
      {
        targets.push_back( mask );
        target_set |= value_bit( mask );
      }
    }

    /* under OR and SUM every useful support lies inside a target row;
     * under XOR any nonzero value can appear as an intermediate */
    for ( uint32_t v = 1; v < ( 1u << n ); ++v )
    {
      bool useful = ring == Semiring::XOR;
      for ( auto t : targets )
        useful = useful || ( v & ~t ) == 0;
      /* a non-target singleton duplicates an input: never part of a
       * minimal circuit */
      if ( std::popcount( v ) == 1 && !( target_set & value_bit( v ) ) )
        useful = false;
      if ( useful )
        candidates.push_back( v );
    }
  }

  static uint64_t value_bit( uint32_t value ) { return uint64_t( 1 ) << ( value - 1 ); }

  /* admissible remainder: each missing target needs its own gate, of
   * fan-in 1 for input singletons and at least 2 otherwise */
  uint32_t heuristic( uint64_t state ) const
  {
    uint32_t h = 0;
    for ( auto t : targets )
      if ( !( state & value_bit( t ) ) )
        h += std::popcount( t ) == 1 ? 1u : 2u;
    return h;
  }

  /* cheapest fan-in realising `value` from inputs plus the state's values;
   * optionally reports the children chosen (as value masks) */
  uint32_t min_fanin( uint32_t value, uint64_t state,
                      std::vector<uint32_t>* children = nullptr ) const
  {
    std::vector<uint32_t> avail;
    for ( uint32_t i = 0; i < n; ++i )
      avail.push_back( 1u << i );
    for ( uint32_t v = 1; v < ( 1u << n ); ++v )
      if ( state & value_bit( v ) )
        avail.push_back( v );

    uint32_t const space = 1u << n;
    std::vector<uint32_t> dist( space, inf );
    std::vector<std::pair<uint32_t, uint32_t>> from( space, { inf, 0 } );
    dist[0] = 0;

    if ( ring == Semiring::XOR )
    {
      /* breadth-first over GF(2) sums; repeated use of a value cancels, so
       * shortest counts equal distinct-children fan-ins */
      std::vector<uint32_t> frontier{ 0 };
      while ( !frontier.empty() && dist[value] == inf )
      {
        std::vector<uint32_t> next;
        for ( auto w : frontier )
        {
          for ( auto a : avail )
          {
            uint32_t to = w ^ a;
            if ( dist[to] == inf )
            {
              dist[to] = dist[w] + 1;
              from[to] = { w, a };
              next.push_back( to );
            }
          }
        }
        frontier = std::move( next );
      }
    }
    else
    {
      /* covered-so-far DP; SUM children must stay disjoint */
      for ( uint32_t w = 0; w < space; ++w )
      {
        if ( dist[w] == inf )
          continue;
        for ( auto a : avail )
        {
          if ( ( a & ~value ) != 0 )
            continue;
          if ( ring == Semiring::SUM && ( a & w ) != 0 )
            continue;
          uint32_t to = w | a;
          if ( to == w )
            continue;
          if ( dist[w] + 1 < dist[to] )
          {
            dist[to] = dist[w] + 1;
            from[to] = { w, a };
          }
        }
      }
    }

    if ( children && dist[value] != inf )
    {
      children->clear();
      for ( uint32_t w = value; w != 0; w = from[w].first )
        children->push_back( from[w].second );
      std::reverse( children->begin(), children->end() );
    }
    return dist[value];
  }

  bool done( uint64_t state ) const { return ( state & target_set ) == target_set; }

  void dfs( uint64_t state, uint32_t spent )
  {
    if ( done( state ) )
    {
      best_path = path;
      found = true;
      return;
    }
    uint32_t const h = heuristic( state );
    if ( spent + h > limit )
      return;
    auto it = failed.find( state );
    if ( it != failed.end() && limit - spent <= it->second )
      return;

    /* cheap moves first, values ascending for determinism */
    std::vector<std::pair<uint32_t, uint32_t>> moves; /* (fanin, value) */
    for ( auto v : candidates )
    {
      if ( state & value_bit( v ) )
        continue;
      uint32_t f = min_fanin( v, state );
      if ( f != inf && spent + f <= limit )
        moves.emplace_back( f, v );
    }
    std::sort( moves.begin(), moves.end() );

    for ( auto [f, v] : moves )
    {
      path.emplace_back( v, f );
      dfs( state | value_bit( v ), spent + f );
      path.pop_back();
      if ( found )
        return;
    }

    auto& slot = failed[state];
    slot = std::max( slot, limit - spent );
  }

  /* replay the winning move sequence into an explicit circuit; rows seen a
   * second time get their own fan-in-1 gate reading the first one */
  Circuit build_witness( BooleanMatrix const& a ) const
  {
    Circuit c;
    c.ring = ring;
    c.n_inputs = n;
    std::unordered_map<uint32_t, NodeId> node_of; /* value -> gate id */
    auto id_of = [&]( uint32_t value ) {
      if ( std::popcount( value ) == 1 && !node_of.count( value ) )
        return NodeId( std::countr_zero( value ) + 1 );
      return node_of.at( value );
    };

    uint64_t state = 0;
    for ( auto [v, f] : best_path )
    {
      std::vector<uint32_t> child_values;
      uint32_t got = min_fanin( v, state, &child_values );
      (void)got;
      std::vector<NodeId> children;
      for ( auto cv : child_values )
        children.push_back( id_of( cv ) );
      c.gates.push_back( std::move( children ) );
      node_of[v] = NodeId( c.node_count() );
      state |= value_bit( v );
    }

    std::unordered_map<uint32_t, bool> used;
    for ( uint32_t i = 0; i < a.n_rows(); ++i )
    {
      uint32_t mask = 0;
      a.row( i ).for_each_set( [&]( std::size_t j ) { mask |= 1u << j; } );
      if ( !used[mask] )
      {
        used[mask] = true;
        c.outputs.push_back( node_of.at( mask ) );
      }
      else
      {
        c.gates.push_back( { node_of.at( mask ) } );
        c.outputs.push_back( NodeId( c.node_count() ) );
      }
    }
    return c;
  }
};

} // namespace

MinWiresResult min_wires( BooleanMatrix const& a, Semiring ring, uint32_t wire_budget )
{
  if ( a.n_rows() > max_dim || a.n_cols() > max_dim )
    throw std::invalid_argument( "min_wires: matrix larger than 5 x 5" );
  if ( wire_budget > max_budget )
    throw std::invalid_argument( "min_wires: budget above 20" );

  MinWiresResult result;
  result.budget = wire_budget;

  Search search( a, ring );
  /* each output is its own gate: a row occurring twice needs a second gate,
   * optimally a fan-in-1 reader of the first, adding exactly one wire */
  uint32_t const extra = a.n_rows() - uint32_t( search.targets.size() );
  if ( extra > wire_budget )
    return result;
  uint32_t const start = search.heuristic( 0 );
  for ( uint32_t limit = start; limit + extra <= wire_budget; ++limit )
  {
    search.limit = limit;
    search.failed.clear();
    search.dfs( 0, 0 );
    if ( search.found )
    {
      result.found = true;
      result.wires = limit + extra;
      result.witness = search.build_witness( a );
      return result;
    }
  }
  return result;
}

GapReport gap_report( BooleanMatrix const& a, uint32_t wire_budget )
{
  GapReport report{ a, {}, {}, {}, wire_budget, {} };
  auto run = [&]( Semiring ring ) -> std::optional<uint32_t> {
    auto r = min_wires( a, ring, wire_budget );
    if ( r.found )
      return r.wires;
    return {};
  };
  report.c_or = run( Semiring::OR );
  report.c_sum = run( Semiring::SUM );
  report.c_xor = run( Semiring::XOR );

  std::pair<char const*, std::optional<uint32_t>> const vals[] = {
      { "or", report.c_or }, { "sum", report.c_sum }, { "xor", report.c_xor } };
  for ( int x = 0; x < 3; ++x )
  {
    for ( int y = 0; y < 3; ++y )
    {
      if ( x == y || !vals[x].second || !vals[y].second )
        continue;
      report.ratios.emplace_back( std::string( vals[x].first ) + "/" + vals[y].first,
                                  double( *vals[x].second ) / double( *vals[y].second ) );
    }
  }
  return report;
}

} // namespace lincirc
