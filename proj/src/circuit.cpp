#include "lincirc/circuit.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace lincirc
{

namespace
{

/* First structural defect, or empty string.  Ops that need a well-formed DAG
 * (evaluate, extract, support, prune, reverse_xor) throw on these; validate()
 * reports them all without throwing. */
std::string first_structural_defect( Circuit const& c )
{
  if ( c.n_inputs < 1 )
    return "circuit has no inputs";
  for ( uint32_t g = 0; g < c.n_gates(); ++g )
  {
    NodeId id = c.gate_id( g );
    if ( c.gates[g].empty() )
      return "gate " + std::to_string( id ) + " has fan-in 0";
    for ( NodeId child : c.gates[g] )
    {
      if ( child < 1 || child > c.node_count() )
        return "gate " + std::to_string( id ) + " references unknown node " + std::to_string( child );
      if ( child >= id )
        return "gate " + std::to_string( id ) + " breaks topological order (child " +
               std::to_string( child ) + ")";
    }
  }
  for ( NodeId out : c.outputs )
  {
    if ( out < 1 || out > c.node_count() )
      return "output references unknown node " + std::to_string( out );
    if ( c.is_input( out ) )
      return "output references input " + std::to_string( out );
  }
  return {};
}

void require_structure( Circuit const& c )
{
  auto defect = first_structural_defect( c );
  if ( !defect.empty() )
    throw std::invalid_argument( "malformed circuit: " + defect );
}

/* Supports of all nodes under the circuit's semiring (union for OR/SUM,
 * symmetric difference for XOR); index 0 unused. */
std::vector<BitVec> node_supports( Circuit const& c )
{
  std::vector<BitVec> supp( c.node_count() + 1, BitVec( c.n_inputs ) );
  for ( NodeId j = 1; j <= c.n_inputs; ++j )
    supp[j].set( j - 1 );
  for ( uint32_t g = 0; g < c.n_gates(); ++g )
  {
    NodeId id = c.gate_id( g );
    for ( NodeId child : c.gates[g] )
    {
      if ( c.ring == Semiring::XOR )
        supp[id] ^= supp[child];
      else
        supp[id] |= supp[child];
    }
  }
  return supp;
}

uint64_t saturating_add( uint64_t a, uint64_t b )
{
  return a > std::numeric_limits<uint64_t>::max() - b ? std::numeric_limits<uint64_t>::max()
                                                      : a + b;
}

} // namespace

std::vector<Violation> validate( Circuit const& c )
{
  std::vector<Violation> out;
  if ( c.n_inputs < 1 )
    out.push_back( { 0, "circuit has no inputs" } );
  bool structure_ok = true;
  for ( uint32_t g = 0; g < c.n_gates(); ++g )
  {
    NodeId id = c.gate_id( g );
    if ( c.gates[g].empty() )
    {
      out.push_back( { id, "fan-in 0" } );
      structure_ok = false;
    }
    for ( NodeId child : c.gates[g] )
    {
      if ( child < 1 || child > c.node_count() )
      {
        out.push_back( { id, "child reference " + std::to_string( child ) + " out of range" } );
        structure_ok = false;
      }
      else if ( child >= id )
      {
        out.push_back( { id, "child reference " + std::to_string( child ) +
                                 " breaks topological order" } );
        structure_ok = false;
      }
    }
  }
  for ( NodeId o : c.outputs )
  {
    if ( o < 1 || o > c.node_count() )
      out.push_back( { 0, "output reference " + std::to_string( o ) + " out of range" } );
    else if ( c.is_input( o ) )
      out.push_back( { 0, "output reference " + std::to_string( o ) + " is an input" } );
  }

  /* SUM semantics: children of each gate must have pairwise disjoint
   * supports; only meaningful once the DAG itself is sound. */
  if ( c.ring == Semiring::SUM && structure_ok && c.n_inputs >= 1 )
  {
    auto supp = node_supports( c );
    for ( uint32_t g = 0; g < c.n_gates(); ++g )
    {
      NodeId id = c.gate_id( g );
      auto children = c.gates[g];
      std::sort( children.begin(), children.end() );
      if ( std::adjacent_find( children.begin(), children.end() ) != children.end() )
      {
        out.push_back( { id, "duplicate children under SUM" } );
        continue;
      }
      BitVec seen( c.n_inputs );
      for ( NodeId child : c.gates[g] )
      {
        if ( seen.intersects( supp[child] ) )
        {
          out.push_back( { id, "children supports overlap under SUM" } );
          break;
        }
        seen |= supp[child];
      }
    }
  }
  return out;
}

Vector evaluate( Circuit const& c, Vector const& x )
{
  require_structure( c );
  if ( x.ring != c.ring )
    throw std::invalid_argument( "evaluate: semiring mismatch" );
  if ( x.values.size() != c.n_inputs )
    throw std::invalid_argument( "evaluate: input length mismatch" );
  if ( c.ring != Semiring::SUM )
  {
    for ( auto v : x.values )
      if ( v > 1 )
        throw std::invalid_argument( "evaluate: entries must be 0/1 under OR and XOR" );
  }

  std::vector<uint64_t> value( c.node_count() + 1, 0 );
  for ( NodeId j = 1; j <= c.n_inputs; ++j )
    value[j] = x.values[j - 1];
  for ( uint32_t g = 0; g < c.n_gates(); ++g )
  {
    NodeId id = c.gate_id( g );
    uint64_t acc = 0;
    for ( NodeId child : c.gates[g] )
    {
      switch ( c.ring )
      {
      case Semiring::OR:
        acc |= value[child];
        break;
      case Semiring::SUM:
        acc = saturating_add( acc, value[child] );
        break;
      case Semiring::XOR:
        acc ^= value[child];
        break;
      }
    }
    value[id] = acc;
  }

  Vector y;
  y.ring = c.ring;
  y.values.reserve( c.outputs.size() );
  for ( NodeId o : c.outputs )
    y.values.push_back( value[o] );
  return y;
}

SumPathError::SumPathError( uint32_t row_, uint32_t col_, uint64_t paths_ )
    : std::runtime_error( "SUM extraction: path count " + std::to_string( paths_ ) + " at (" +
                          std::to_string( row_ ) + ", " + std::to_string( col_ ) + ")" ),
      row( row_ ), col( col_ ), paths( paths_ )
{
}

BooleanMatrix extract_matrix( Circuit const& c )
{
  require_structure( c );
  if ( c.outputs.empty() )
    throw std::invalid_argument( "extract_matrix: circuit has no outputs" );

  if ( c.ring != Semiring::SUM )
  {
    auto supp = node_supports( c ); /* reachability resp. path parity */
    BooleanMatrix a( c.n_outputs(), c.n_inputs );
    for ( uint32_t i = 0; i < c.n_outputs(); ++i )
      a.row( i ) = supp[c.outputs[i]];
    return a;
  }

  /* SUM: per-node path counts from every input, saturating. */
  auto const n = c.n_inputs;
  constexpr uint32_t cap = std::numeric_limits<uint32_t>::max();
  std::vector<uint32_t> count( std::size_t( c.node_count() + 1 ) * n, 0 );
  auto at = [&]( NodeId id, uint32_t j ) -> uint32_t& { return count[std::size_t( id ) * n + j]; };
  for ( NodeId j = 1; j <= n; ++j )
    at( j, j - 1 ) = 1;
  for ( uint32_t g = 0; g < c.n_gates(); ++g )
  {
    NodeId id = c.gate_id( g );
    for ( NodeId child : c.gates[g] )
      for ( uint32_t j = 0; j < n; ++j )
      {
        uint64_t s = uint64_t( at( id, j ) ) + at( child, j );
        at( id, j ) = s > cap ? cap : uint32_t( s );
      }
  }
  BooleanMatrix a( c.n_outputs(), n );
  for ( uint32_t i = 0; i < c.n_outputs(); ++i )
    for ( uint32_t j = 0; j < n; ++j )
    {
      uint32_t paths = at( c.outputs[i], j );
      if ( paths > 1 )
        throw SumPathError( i + 1, j + 1, paths );
      if ( paths == 1 )
        a.set( i, j );
    }
  return a;
}

std::vector<NodeId> support( Circuit const& c, NodeId node )
{
  require_structure( c );
  if ( node < 1 || node > c.node_count() )
    throw std::invalid_argument( "support: unknown gate reference " + std::to_string( node ) );
  auto supp = node_supports( c );
  std::vector<NodeId> out;
  supp[node].for_each_set( [&]( std::size_t j ) { out.push_back( NodeId( j ) + 1 ); } );
  return out;
}

Circuit prune( Circuit const& c )
{
  require_structure( c );
  std::vector<bool> useful( c.node_count() + 1, false );
  std::vector<NodeId> stack;
  for ( NodeId o : c.outputs )
    if ( !useful[o] )
    {
      useful[o] = true;
      stack.push_back( o );
    }
  while ( !stack.empty() )
  {
    NodeId id = stack.back();
    stack.pop_back();
    if ( c.is_input( id ) )
      continue;
    for ( NodeId child : c.gates[id - c.n_inputs - 1] )
      if ( !useful[child] )
      {
        useful[child] = true;
        stack.push_back( child );
      }
  }

  Circuit r;
  r.ring = c.ring;
  r.n_inputs = c.n_inputs;
  std::vector<NodeId> remap( c.node_count() + 1, 0 );
  for ( NodeId j = 1; j <= c.n_inputs; ++j )
    remap[j] = j;
  for ( uint32_t g = 0; g < c.n_gates(); ++g )
  {
    NodeId id = c.gate_id( g );
    if ( !useful[id] )
      continue;
    std::vector<NodeId> children;
    children.reserve( c.gates[g].size() );
    for ( NodeId child : c.gates[g] )
      children.push_back( remap[child] );
    r.gates.push_back( std::move( children ) );
    remap[id] = r.gate_id( uint32_t( r.gates.size() ) - 1 );
  }
  for ( NodeId o : c.outputs )
    r.outputs.push_back( remap[o] );
  return r;
}

Circuit reverse_xor( Circuit const& c )
{
  require_structure( c );
  if ( c.ring != Semiring::XOR )
    throw std::invalid_argument( "reverse_xor: circuit must use the XOR semiring" );

  /* consumers of each node, with wire multiplicity, in gate order */
  std::vector<std::vector<NodeId>> consumers( c.node_count() + 1 );
  for ( uint32_t g = 0; g < c.n_gates(); ++g )
    for ( NodeId child : c.gates[g] )
      consumers[child].push_back( c.gate_id( g ) );

  /* output position per gate (1-based), 0 when not an output */
  std::vector<NodeId> output_pos( c.node_count() + 1, 0 );
  for ( uint32_t i = 0; i < c.n_outputs(); ++i )
  {
    NodeId o = c.outputs[i];
    if ( output_pos[o] != 0 )
      throw std::invalid_argument( "reverse_xor: output gates must be distinct" );
    output_pos[o] = i + 1;
  }
  for ( NodeId j = 1; j <= c.n_inputs; ++j )
    if ( consumers[j].empty() )
      throw std::invalid_argument( "reverse_xor: input " + std::to_string( j ) +
                                   " feeds no gate" );
  for ( uint32_t g = 0; g < c.n_gates(); ++g )
  {
    NodeId id = c.gate_id( g );
    if ( output_pos[id] != 0 && !consumers[id].empty() )
      throw std::invalid_argument( "reverse_xor: output gate " + std::to_string( id ) +
                                   " also feeds other gates" );
    if ( output_pos[id] == 0 && consumers[id].empty() )
      throw std::invalid_argument( "reverse_xor: gate " + std::to_string( id ) +
                                   " reaches no output (prune first)" );
  }

  /* Reverse every wire.  Former outputs become the inputs of the result;
   * walking original ids downwards keeps the reversed gate list topological.
   * Former inputs come out as the last gates and are designated as outputs. */
  Circuit r;
  r.ring = Semiring::XOR;
  r.n_inputs = c.n_outputs();
  std::vector<NodeId> newid( c.node_count() + 1, 0 );
  for ( NodeId id = c.node_count(); id >= 1; --id )
  {
    if ( output_pos[id] != 0 )
    {
      newid[id] = output_pos[id];
      continue;
    }
    std::vector<NodeId> children;
    children.reserve( consumers[id].size() );
    for ( NodeId v : consumers[id] )
      children.push_back( newid[v] );
    r.gates.push_back( std::move( children ) );
    newid[id] = r.gate_id( uint32_t( r.gates.size() ) - 1 );
  }
  for ( NodeId j = 1; j <= c.n_inputs; ++j )
    r.outputs.push_back( newid[j] );
  return r;
}

std::string format_circuit( Circuit const& c )
{
  std::string out = "CIRCUIT ";
  out += to_string( c.ring );
  out += " " + std::to_string( c.n_inputs ) + " " + std::to_string( c.n_gates() ) + " " +
         std::to_string( c.n_outputs() ) + "\n";
  for ( uint32_t g = 0; g < c.n_gates(); ++g )
  {
    out += std::to_string( c.gate_id( g ) ) + ":";
    for ( NodeId child : c.gates[g] )
      out += " " + std::to_string( child );
    out += "\n";
  }
  out += "OUTPUTS:";
  for ( NodeId o : c.outputs )
    out += " " + std::to_string( o );
  out += "\n";
  return out;
}

namespace
{

std::vector<std::string> split_tokens( std::string const& line )
{
  std::vector<std::string> tokens;
  std::istringstream in( line );
  std::string t;
  while ( in >> t )
    tokens.push_back( t );
  return tokens;
}

uint64_t parse_count( std::string const& token, char const* what )
{
  uint64_t v = 0;
  for ( char ch : token )
  {
    if ( ch < '0' || ch > '9' )
      throw std::runtime_error( std::string( "circuit file: malformed " ) + what + " '" + token +
                                "'" );
    v = v * 10 + uint64_t( ch - '0' );
    if ( v > 100'000'000ull )
      throw std::runtime_error( std::string( "circuit file: " ) + what + " out of range" );
  }
  return v;
}

std::string next_content_line( std::istream& in )
{
  std::string line;
  while ( std::getline( in, line ) )
  {
    if ( !line.empty() && line.back() == '\r' )
      line.pop_back();
    if ( !line.empty() )
      return line;
  }
  throw std::runtime_error( "circuit file: unexpected end of file" );
}

} // namespace

Circuit parse_circuit( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  auto header = split_tokens( next_content_line( in ) );
  if ( header.size() != 5 || header[0] != "CIRCUIT" )
    throw std::runtime_error( "circuit file: malformed header" );
  auto ring = semiring_from_string( header[1] );
  if ( !ring )
    throw std::runtime_error( "circuit file: unknown semiring '" + header[1] + "'" );

  Circuit c;
  c.ring = *ring;
  c.n_inputs = NodeId( parse_count( header[2], "input count" ) );
  auto const n_gates = parse_count( header[3], "gate count" );
  auto const n_outputs = parse_count( header[4], "output count" );
  NodeId const node_count = c.n_inputs + NodeId( n_gates );

  for ( uint64_t g = 0; g < n_gates; ++g )
  {
    auto tokens = split_tokens( next_content_line( in ) );
    NodeId const expected = c.n_inputs + NodeId( g ) + 1;
    if ( tokens.empty() || tokens[0] != std::to_string( expected ) + ":" )
      throw std::runtime_error( "circuit file: expected gate line for id " +
                                std::to_string( expected ) );
    if ( tokens.size() < 2 )
      throw std::runtime_error( "circuit file: gate " + std::to_string( expected ) +
                                " lists no children" );
    std::vector<NodeId> children;
    for ( std::size_t t = 1; t < tokens.size(); ++t )
    {
      auto const child = parse_count( tokens[t], "child id" );
      if ( child < 1 || child > node_count )
        throw std::runtime_error( "circuit file: child id " + tokens[t] + " out of range" );
      children.push_back( NodeId( child ) );
    }
    c.gates.push_back( std::move( children ) );
  }

  auto tokens = split_tokens( next_content_line( in ) );
  if ( tokens.empty() || tokens[0] != "OUTPUTS:" )
    throw std::runtime_error( "circuit file: missing OUTPUTS line" );
  if ( tokens.size() != n_outputs + 1 )
    throw std::runtime_error( "circuit file: output count does not match header" );
  for ( std::size_t t = 1; t < tokens.size(); ++t )
  {
    auto const o = parse_count( tokens[t], "output id" );
    if ( o < 1 || o > node_count )
      throw std::runtime_error( "circuit file: output id " + tokens[t] + " out of range" );
    c.outputs.push_back( NodeId( o ) );
  }
  return c;
}

Circuit read_circuit_file( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open circuit file: " + path );
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_circuit( buffer.str() );
}

void write_circuit_file( std::string const& path, Circuit const& c )
{
  std::ofstream out( path );
  if ( !out )
    throw std::runtime_error( "cannot write circuit file: " + path );
  out << format_circuit( c );
}

} // namespace lincirc
