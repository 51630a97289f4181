#pragma once

#include "circuit.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

namespace lincirc
{

enum class RewriteStrategy
{
  depth1, /* trivial depth-1 rebuild, weight(A) wires */
  lupanov /* depth-2 column-block construction */
};

inline char const* to_string( RewriteStrategy strategy )
{
  return strategy == RewriteStrategy::depth1 ? "depth1" : "lupanov";
}

inline std::optional<RewriteStrategy> rewrite_strategy_from_string( std::string_view name )
{
  if ( name == "depth1" )
    return RewriteStrategy::depth1;
  if ( name == "lupanov" )
    return RewriteStrategy::lupanov;
  return std::nullopt;
}

struct RewriteReport
{
  uint64_t input_wires = 0;
  uint64_t output_wires = 0;
  uint32_t output_depth = 0;
  RewriteStrategy strategy = RewriteStrategy::depth1;
};

/*! \brief Rebuild an OR circuit under the SUM or XOR semiring.
 *
 * Extracts the computed matrix and synthesises a fresh circuit for it; the
 * input topology is never preserved.  Work is quadratic in the circuit size
 * (extraction dominates), and no sub-quadratic path is attempted.
 */
std::pair<Circuit, RewriteReport> rewrite( Circuit const& c, Semiring target,
                                           RewriteStrategy strategy = RewriteStrategy::depth1 );

/*! \brief Exact equivalence of the computed matrices.
 *
 * Both circuits must agree on input and output counts; SUM circuits must
 * pass validate() before extraction.  Semiring tags themselves are not
 * compared.
 */
bool equivalent( Circuit const& c1, Circuit const& c2 );

} // namespace lincirc
