#pragma once

#include "bitvec.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace lincirc
{

/*! \brief Dense 0/1 matrix with bitset rows.
 *
 * Rows and columns are addressed 0-based in code; the 1-based convention of
 * the file format and reports is applied at the interface boundary only.
 * Both dimensions are at least 1.
 */
class BooleanMatrix
{
public:
  BooleanMatrix( uint32_t n_rows, uint32_t n_cols );

  static BooleanMatrix identity( uint32_t n );
  static BooleanMatrix all_ones( uint32_t n_rows, uint32_t n_cols );
  /* complement of the identity: ones everywhere off the diagonal */
  static BooleanMatrix complement_identity( uint32_t n );
  static BooleanMatrix from_rows( std::vector<std::string> const& rows );
  static BooleanMatrix random( uint32_t n_rows, uint32_t n_cols, double density,
                               std::mt19937_64& rng );

  uint32_t n_rows() const { return n_rows_; }
  uint32_t n_cols() const { return n_cols_; }

  bool test( uint32_t row, uint32_t col ) const { return rows_[row].test( col ); }
  void set( uint32_t row, uint32_t col, bool value = true ) { rows_[row].set( col, value ); }

  BitVec const& row( uint32_t i ) const { return rows_[i]; }
  BitVec& row( uint32_t i ) { return rows_[i]; }

  uint64_t weight() const;
  uint64_t row_weight( uint32_t i ) const { return rows_[i].count(); }
  bool has_zero_row() const;

  BooleanMatrix transpose() const;

  friend bool operator==( BooleanMatrix const& a, BooleanMatrix const& b )
  {
    return a.n_rows_ == b.n_rows_ && a.n_cols_ == b.n_cols_ && a.rows_ == b.rows_;
  }
  friend bool operator!=( BooleanMatrix const& a, BooleanMatrix const& b ) { return !( a == b ); }

private:
  uint32_t n_rows_;
  uint32_t n_cols_;
  std::vector<BitVec> rows_;
};

/* Matrix file format: "MATRIX <n_rows> <n_cols>" followed by n_rows lines of
 * 0/1 characters without separators.  format/parse round-trip bit-exactly. */
std::string format_matrix( BooleanMatrix const& a );
BooleanMatrix parse_matrix( std::string_view text );

BooleanMatrix read_matrix_file( std::string const& path );
void write_matrix_file( std::string const& path, BooleanMatrix const& a );

} // namespace lincirc
