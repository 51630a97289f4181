#pragma once

#include "bitvec.hpp"
#include "circuit.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lincirc
{

/* CNF formula over variables 1..n_vars; clauses are lists of nonzero signed
 * literals.  An empty clause is allowed and makes the formula trivially
 * unsatisfiable. */
struct CnfFormula
{
  uint32_t n_vars = 0;
  std::vector<std::vector<int32_t>> clauses;

  bool has_empty_clause() const
  {
    for ( auto const& clause : clauses )
      if ( clause.empty() )
        return true;
    return false;
  }
};

/*! \brief Strict DIMACS cnf reader.
 *
 * Comment lines start with 'c'; the header is "p cnf <vars> <clauses>";
 * clauses are 0-terminated literal runs that may span lines.  Rejected:
 * missing or malformed header, literals out of range, a clause left open at
 * end of input, and a clause count differing from the header.
 */
CnfFormula parse_dimacs( std::string_view text );

/* Covering-pair instance: sets over the universe [m].  A pair (i, j) is
 * covering when left[j] and right[i] together cover all of [m]. */
struct CoverInstance
{
  uint32_t m = 0;
  std::vector<BitVec> left;
  std::vector<BitVec> right;
  /* a free dummy variable was appended to make the split even; every
   * covering-pair count is then exactly twice the assignment count */
  bool padded = false;
};

/*! \brief Meet-in-the-middle split of a formula into a covering-pair instance.
 *
 * Variables 1..n/2 go left, the rest right, with one free dummy variable
 * appended as the last right variable when n is odd.  left[s] is the set of
 * clauses with a left literal satisfied by assignment s (bit i of s is the
 * value of variable i+1), right[t] likewise; the number of satisfying
 * assignments equals the number of covering pairs (twice that when padded).
 */
CoverInstance split_to_cover( CnfFormula const& f, uint32_t cap = 30 );

/* Depth-2 OR circuit for the complement of the covering-pair matrix, with a
 * side ledger for the parts the construction must leave out: middle gates
 * fed by no input (their column is in every left set) and output rows whose
 * right set, together with pruned columns, already covers [m] (these rows
 * are covering pairs with every j and extract as all-zero rows). */
struct ComplementCoverCircuit
{
  Circuit circuit;
  std::vector<uint32_t> pruned_gates;
  std::vector<uint32_t> all_covering;
  /* instance row index of each circuit output, in order */
  std::vector<uint32_t> output_rows;
};

/*! \brief Builds the complement-cover circuit for an instance.
 *
 * Input j feeds middle gate g_k exactly when k is outside left[j]; output i
 * reads g_k exactly when k is outside right[i].  Extraction gives the
 * complement of the covering-pair matrix restricted to the kept rows, and
 * the circuit as constructed has at most 2*N*m wires.
 */
ComplementCoverCircuit cover_complement_circuit( CoverInstance const& inst );

enum class CountVia
{
  direct,       /* bitset loop over all pairs */
  pipeline_sum, /* complement circuit, rewrite to SUM, evaluate on all-ones */
  pipeline_xor  /* same over GF(2); yields the parity only */
};

/*! \brief Counts covering pairs of an instance.
 *
 * The pipelines compute N^2 - |complement| by evaluating the rewritten
 * complement circuit on the all-ones vector; excluded rows contribute
 * nothing to the complement weight, so the identity needs no adjustment.
 * Under pipeline_xor the return value is the parity of the count, not the
 * count.
 */
uint64_t count_covering_pairs( CoverInstance const& inst, CountVia via );

/*! \brief #SAT through the covering-pair pipeline (matches brute force). */
uint64_t count_sat( CnfFormula const& f, uint32_t cap = 30 );

/*! \brief Parity of #SAT through the GF(2) pipeline.
 *
 * A free dummy variable would erase the parity by doubling the count, so an
 * odd formula is normalised with a forced variable instead: a fresh variable
 * constrained by a unit clause, which keeps the count unchanged.
 */
uint64_t parity_sat( CnfFormula const& f, uint32_t cap = 30 );

} // namespace lincirc
