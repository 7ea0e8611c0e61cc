#pragma once

#include <forge/circuit.hpp>
#include <forge/machine.hpp>
#include <forge/pstring.hpp>

#include <cstdint>
#include <variant>
#include <vector>

namespace forge
{

struct hardwired
{
  char symbol;
};

struct exposed_bit
{
  std::uint32_t index;
};

using cell_interface = std::variant<hardwired, exposed_bit>;

struct compile_spec
{
  const machine* tm = nullptr;
  std::uint64_t time_bound = 1;
  std::vector<cell_interface> input; ///< one entry per input position
};

struct compile_options
{
  /// Constant folding, structural hashing and sparse head tracking. Without
  /// folding the full (T+1) x (T+1) grid is built and the gate count is
  /// exactly `raw_gate_count`.
  bool fold = true;
};

/*! \brief Tableau construction.
 *
 * The result has one input per exposed position and outputs 1 iff the
 * machine accepts within the time bound. Exposed bit b stands for the
 * character '0' + b. Throws `SpecInvariantViolation` when T = 0, n > T or
 * the exposed indices are not dense.
 */
circuit compile( const compile_spec& spec, const compile_options& options = {} );

/*! \brief Gate count of the unfolded construction.
 *
 * With Q' non-halting states, S symbols, e exposed positions and
 * G = Q'S + Q' + S(1 + 2Q'S) + Q'(6Q'S - 1) + 12Q'S gates per cell and step:
 * m = 2 + e + T(T+1)G + T.
 */
std::uint64_t raw_gate_count( const machine& tm, std::uint64_t time_bound, std::uint64_t exposed );

/// The circuit with the first `expose` placeholders of x as inputs; throws
/// `ExposeTooLarge`.
circuit compile_on_pstring( const machine& tm, const pstring& x, std::size_t expose, std::uint64_t time_bound,
                            const compile_options& options = {} );

} // namespace forge
