#pragma once

#include <forge/bound_expr.hpp>
#include <forge/machine.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace forge
{

/*! \brief Fixture library.
 *
 * Names: `all_zeros`, `parity`, `equal_halves`, `loop`, and the parametric
 * verifiers `cnf_verifier:<vars>`, `clique_verifier:<k>:<id_bits>`,
 * `circuit_verifier:<nodes>:<inputs>`. The bare names of the parametric
 * verifiers use small defaults. Throws `UnknownBuiltin`.
 */
machine builtin( std::string_view name );

/// A time bound under which the named fixture halts on every input.
bound_expr builtin_time_bound( std::string_view name );

std::vector<std::string> builtin_names();

/// Accepts exactly the strings over {0}.
machine all_zeros_machine();
/// Accepts strings over {0,1} with an odd number of ones.
machine parity_machine();
/// Accepts ww for w over {0,1}.
machine equal_halves_machine();
/// Never halts.
machine loop_machine();

/*! \brief Verifier for the placeholder CNF encoding with `num_vars` variables.
 *
 * Tape: `num_vars` assignment bits, then per clause a run of literals
 * `1 s i_1..i_b` (s = 1 negates, i = variable index, b = id bits) closed by
 * `0`, then blank. Accepts iff every clause has a true literal.
 */
machine cnf_verifier( std::size_t num_vars );
bound_expr cnf_verifier_time();

/*! \brief Verifier for the placeholder k-clique encoding.
 *
 * Tape: k vertex ids of `id_bits` bits each, then records `0 id` (vertex)
 * and `1 u w` (edge), then blank. Accepts iff the ids are listed vertices,
 * pairwise distinct and pairwise adjacent.
 */
machine clique_verifier( std::size_t k, std::size_t id_bits );
bound_expr clique_verifier_time( std::size_t k );

/*! \brief Verifier for the placeholder circuit encoding.
 *
 * Tape: `num_inputs` assignment bits followed by `serialize(c)` as bits for
 * a circuit with `num_nodes` nodes. Accepts iff the circuit outputs 1.
 */
machine circuit_verifier( std::size_t num_nodes, std::size_t num_inputs );
bound_expr circuit_verifier_time();

} // namespace forge
