#pragma once

#include <forge/bound_expr.hpp>
#include <forge/circuit.hpp>
#include <forge/machine.hpp>
#include <forge/pstring.hpp>
#include <forge/solver.hpp>
#include <forge/universe.hpp>

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace forge
{

/*! \brief Language given by a universe, a verifier and witness/time bounds.
 *
 * x is a member iff x is in the universe and some prefix filling of at most
 * w(|x|) placeholders is accepted by the verifier within t(|x|) steps.
 * Padding layers (innermost first) wrap the universe as 1^{k-1} 0 x with
 * k = f(|x|) - |x|; the bounds are always evaluated at the unpadded length.
 */
struct dtiwi_instance
{
  std::string name;
  universe_template universe;
  std::shared_ptr<const machine> verifier;
  std::string verifier_name;
  bound_expr witness;
  bound_expr time;
  std::vector<bound_expr> pad;
};

/// 1^{k-1} 0 x with k = f(|x|) - |x|; throws `PaddingUnderflow`.
pstring pad( const bound_expr& f, const pstring& x );
/// Strips the maximal 1-prefix and one 0; throws `MalformedPadding`.
pstring unpad( const pstring& y );

/// The unpadded core of y when y has the padded shape of every layer and,
/// with `check_lengths`, the length f(|inner|) required by each layer.
std::optional<pstring> strip_layers( const dtiwi_instance& inst, const pstring& y, bool check_lengths = true );
/// Shape and core membership; the layer lengths are checked by the verifier side.
bool in_universe( const dtiwi_instance& inst, const pstring& y );

struct bruteforce_report
{
  bool in_universe = false;
  std::uint64_t fillings = 0;
  std::uint64_t timeouts = 0;
  std::optional<bit_string> witness;
};

bool decide_bruteforce( const dtiwi_instance& inst, const pstring& y, bruteforce_report* report = nullptr );

struct circuit_options
{
  std::optional<std::uint64_t> time_override;
  solve_mode mode = solve_mode::lenient;
  unsigned jobs = 1;
};

struct family_member
{
  std::size_t index;
  circuit_stats stats;
  bool strict_ok; ///< inputs <= ceil(log2(max(m, 2)))
  bool sat;
};

struct circuit_report
{
  bool in_universe = false;
  std::vector<family_member> family;
  std::optional<std::size_t> index;
  std::optional<bit_string> witness;
  std::uint64_t evaluations = 0;
};

/*! \brief Decides membership through the circuit family C_0, ..., C_k.
 *
 * C_i exposes the first i placeholders of the unpadded input, with
 * k = min(w(n), pcount). Members are solved in index order.
 */
bool decide_via_circuits( const dtiwi_instance& inst, const pstring& y, const circuit_options& options = {},
                          circuit_report* report = nullptr );

/// Closure universe and witness bound w; throws `SplitMismatch` unless the
/// instance's witness bound equals w + w' on sampled lengths.
dtiwi_instance translation_transform( const dtiwi_instance& inst, const bound_expr& w, const bound_expr& w_prime );

/// Adds a padding layer; throws `PaddingUnderflow` unless f(n) > n on sampled lengths.
dtiwi_instance padding_transform( const dtiwi_instance& inst, const bound_expr& f );

/// Lint: w(n) <= n on sampled lengths.
bool witness_bound_within_length( const dtiwi_instance& inst, std::uint64_t n_max = 1024 );

/*! \brief Line-oriented manifest.
 *
 *     name: sat-example
 *     universe: p^3{01}*
 *     verifier: cnf_verifier:3      (builtin name or machine file)
 *     witness: 3
 *     time: n^2 + 3*n + 4
 *     pad: n^2                      (optional, repeatable)
 *
 * Relative machine paths resolve against `base`. Throws `ParseError`.
 */
dtiwi_instance parse_manifest( std::string_view text, const std::filesystem::path& base = {} );
dtiwi_instance load_manifest( const std::filesystem::path& path );
std::string to_manifest( const dtiwi_instance& inst );

} // namespace forge
