#pragma once

#include <forge/circuit.hpp>
#include <forge/pstring.hpp>

#include <cstdint>
#include <span>

namespace forge
{

enum class solve_mode
{
  strict, ///< at most ceil(log2(max(m, 2))) inputs
  lenient
};

struct solve_result
{
  bool sat = false;
  bit_string witness; ///< lexicographically smallest satisfying assignment
  std::uint64_t evaluations = 0;
};

struct family_result
{
  bool sat = false;
  std::size_t index = 0;
  bit_string witness;
  std::uint64_t evaluations = 0;
};

/// ceil(log2(max(m, 2)))
std::size_t strict_input_limit( std::size_t gates );

/*! \brief Exhaustive satisfiability check.
 *
 * Assignments are enumerated 64 at a time in lexicographic order (input 0
 * is the most significant bit). With `jobs` > 1 the space is split into
 * contiguous ranges; the answer does not depend on `jobs`. Throws
 * `TooManyInputs`.
 */
solve_result solve( const circuit& c, solve_mode mode = solve_mode::strict, unsigned jobs = 1 );

/// Smallest satisfiable index; `TooManyInputs` names the offending index.
family_result solve_family( std::span<const circuit> family, solve_mode mode = solve_mode::strict,
                            unsigned jobs = 1 );

} // namespace forge
