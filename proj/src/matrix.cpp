#include "lincirc/matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lincirc
{

BooleanMatrix::BooleanMatrix( uint32_t n_rows, uint32_t n_cols )
    : n_rows_( n_rows ), n_cols_( n_cols )
{
  if ( n_rows == 0 || n_cols == 0 )
    throw std::invalid_argument( "matrix dimensions must be at least 1" );
  rows_.assign( n_rows, BitVec( n_cols ) );
}

BooleanMatrix BooleanMatrix::identity( uint32_t n )
{
  BooleanMatrix a( n, n );
  for ( uint32_t i = 0; i < n; ++i )
    a.set( i, i );
  return a;
}

BooleanMatrix BooleanMatrix::all_ones( uint32_t n_rows, uint32_t n_cols )
{
  BooleanMatrix a( n_rows, n_cols );
  for ( uint32_t i = 0; i < n_rows; ++i )
    for ( uint32_t j = 0; j < n_cols; ++j )
      a.set( i, j );
  return a;
}

BooleanMatrix BooleanMatrix::complement_identity( uint32_t n )
{
  BooleanMatrix a = all_ones( n, n );
  for ( uint32_t i = 0; i < n; ++i )
    a.set( i, i, false );
  return a;
}

BooleanMatrix BooleanMatrix::from_rows( std::vector<std::string> const& rows )
{
  if ( rows.empty() || rows[0].empty() )
    throw std::invalid_argument( "matrix dimensions must be at least 1" );
  BooleanMatrix a( static_cast<uint32_t>( rows.size() ),
                   static_cast<uint32_t>( rows[0].size() ) );
  for ( uint32_t i = 0; i < a.n_rows(); ++i )
  {
    if ( rows[i].size() != a.n_cols() )
      throw std::invalid_argument( "matrix rows have unequal length" );
    for ( uint32_t j = 0; j < a.n_cols(); ++j )
    {
      if ( rows[i][j] == '1' )
        a.set( i, j );
      else if ( rows[i][j] != '0' )
        throw std::invalid_argument( "matrix entries must be 0 or 1" );
    }
  }
  return a;
}

BooleanMatrix BooleanMatrix::random( uint32_t n_rows, uint32_t n_cols, double density,
                                     std::mt19937_64& rng )
{
  BooleanMatrix a( n_rows, n_cols );
  std::bernoulli_distribution bit( density );
  for ( uint32_t i = 0; i < n_rows; ++i )
    for ( uint32_t j = 0; j < n_cols; ++j )
      if ( bit( rng ) )
        a.set( i, j );
  return a;
}

uint64_t BooleanMatrix::weight() const
{
  uint64_t w = 0;
  for ( auto const& r : rows_ )
    w += r.count();
  return w;
}

bool BooleanMatrix::has_zero_row() const
{
  for ( auto const& r : rows_ )
    if ( r.none() )
      return true;
  return false;
}

BooleanMatrix BooleanMatrix::transpose() const
{
  BooleanMatrix t( n_cols_, n_rows_ );
  for ( uint32_t i = 0; i < n_rows_; ++i )
    rows_[i].for_each_set( [&]( std::size_t j ) { t.set( static_cast<uint32_t>( j ), i ); } );
  return t;
}

std::string format_matrix( BooleanMatrix const& a )
{
  std::string out = "MATRIX " + std::to_string( a.n_rows() ) + " " + std::to_string( a.n_cols() ) + "\n";
  for ( uint32_t i = 0; i < a.n_rows(); ++i )
  {
    for ( uint32_t j = 0; j < a.n_cols(); ++j )
      out.push_back( a.test( i, j ) ? '1' : '0' );
    out.push_back( '\n' );
  }
  return out;
}

BooleanMatrix parse_matrix( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::string keyword;
  long long n_rows = 0, n_cols = 0;
  if ( !( in >> keyword >> n_rows >> n_cols ) || keyword != "MATRIX" )
    throw std::runtime_error( "matrix file: malformed header" );
  if ( n_rows < 1 || n_cols < 1 )
    throw std::runtime_error( "matrix file: dimensions must be at least 1" );
  std::vector<std::string> rows;
  std::string line;
  std::getline( in, line ); /* rest of header line */
  while ( static_cast<long long>( rows.size() ) < n_rows && std::getline( in, line ) )
  {
    if ( !line.empty() && line.back() == '\r' )
      line.pop_back();
    if ( line.empty() )
      continue;
    if ( static_cast<long long>( line.size() ) != n_cols )
      throw std::runtime_error( "matrix file: row length does not match header" );
    rows.push_back( line );
  }
  if ( static_cast<long long>( rows.size() ) != n_rows )
    throw std::runtime_error( "matrix file: fewer rows than header declares" );
  return BooleanMatrix::from_rows( rows );
}

BooleanMatrix read_matrix_file( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open matrix file: " + path );
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix( buffer.str() );
}

void write_matrix_file( std::string const& path, BooleanMatrix const& a )
{
  std::ofstream out( path );
  if ( !out )
    throw std::runtime_error( "cannot write matrix file: " + path );
  out << format_matrix( a );
}

} // namespace lincirc
