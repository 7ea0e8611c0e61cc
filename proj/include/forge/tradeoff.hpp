#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace forge
{

using rational = boost::multiprecision::cpp_rational;

enum class precision
{
  exact,   ///< rational arithmetic
  floating ///< 64-bit floats, compared with `float_tolerance`
};

constexpr double float_tolerance = 1e-9;

/// `FORGE_PRECISION` = `rational` (default) or `float`.
precision precision_from_env();

/// Accepts `3/2`, `1.5` or `2`; throws `ParseError`.
rational parse_rational( std::string_view text );
std::string decimal( const rational& r, int digits = 12 );

/*! \brief One row of the exponent/witness trade-off.
 *
 * z = sum_{i=0..k} alpha^i, exponent = alpha^{k+1}, ratio = exponent / z.
 * The exact fields are set in exact mode; the float fields always.
 */
struct tradeoff_row
{
  std::uint64_t k;
  rational z, exponent, ratio;
  double z_f, exponent_f, ratio_f;
};

/// Rows for k = 0..k_max; throws `AlphaOutOfRange` unless 1 <= alpha < 2.
std::vector<tradeoff_row> tradeoff_table( const rational& alpha, std::uint64_t k_max, precision mode );

/// Smallest k with alpha^{k+1} / (alpha^{k+1} - 1) <= 1 + eps. Throws
/// `AlphaOutOfRange` unless 1 < alpha < 2 and `EpsilonNonpositive`.
std::uint64_t required_k_for_epsilon( const rational& alpha, const rational& epsilon );

/// target^{1/(k+1)}; throws `AlphaOutOfRange` unless target > 1.
double required_base_alpha( double target_alpha, std::uint64_t k );

/*! \brief One induction step of the speed-up argument.
 *
 * Step j starts from witness factor z(alpha, j) at time exponent alpha^j,
 * applies the translation step, then pads with f(n) = n^{alpha^{j+1}} and
 * ends at time exponent alpha^{j+1}.
 */
struct schedule_step
{
  std::uint64_t j;
  rational exponent_in;
  rational witness_factor;
  rational pad_exponent;
  rational exponent_out;
  std::string class_in, translation, padding, class_out;
};

std::vector<schedule_step> speedup_schedule( const rational& alpha, std::uint64_t k );

} // namespace forge
