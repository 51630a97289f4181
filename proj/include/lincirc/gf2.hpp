#pragma once

#include "matrix.hpp"

#include <cstdint>

namespace lincirc
{

/*! \brief Arithmetic in GF(2^t) with elements packed as t-bit integers.
 *
 * Multiplication reduces modulo a fixed irreducible polynomial per degree;
 * degrees 1 through 16 are supported.
 */
class GF2Field
{
public:
  explicit GF2Field( uint32_t degree );

  uint32_t degree() const { return degree_; }
  uint32_t size() const { return 1u << degree_; }

  uint32_t add( uint32_t a, uint32_t b ) const { return a ^ b; }
  uint32_t mul( uint32_t a, uint32_t b ) const;
  uint32_t pow( uint32_t a, uint32_t e ) const; /* pow(0, 0) = 1 */

  uint32_t modulus() const { return poly_; }

private:
  uint32_t degree_;
  uint32_t poly_;
};

/* Product over GF(2): row i of the result is the XOR of the rows of b
 * selected by row i of a. */
BooleanMatrix gf2_multiply( BooleanMatrix const& a, BooleanMatrix const& b );

/* Rank over GF(2) by row elimination. */
uint32_t gf2_rank( BooleanMatrix const& a );

} // namespace lincirc
