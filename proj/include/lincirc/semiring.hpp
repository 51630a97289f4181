#pragma once

#include <optional>
#include <string_view>

namespace lincirc
{

/* The three wire-counting models: boolean OR, non-negative integer SUM
 * (cancellation-free), and GF(2) XOR. */
enum class Semiring
{
  OR,
  SUM,
  XOR
};

inline char const* to_string( Semiring ring )
{
  switch ( ring )
  {
  case Semiring::OR:
    return "OR";
  case Semiring::SUM:
    return "SUM";
  default:
    return "XOR";
  }
}

inline std::optional<Semiring> semiring_from_string( std::string_view name )
{
  if ( name == "OR" || name == "or" )
    return Semiring::OR;
  if ( name == "SUM" || name == "sum" )
    return Semiring::SUM;
  if ( name == "XOR" || name == "xor" )
    return Semiring::XOR;
  return std::nullopt;
}

} // namespace lincirc
