#pragma once

#include <forge/bound_expr.hpp>
#include <forge/pstring.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace forge
{

/*! \brief Linear-time string universe given as a pattern.
 *
 * Atoms are `0`, `1`, `p` or a class such as `{01}`, optionally followed by
 * `^k`, `^(expr)` (a count in the input length n) or `*`. At most one atom
 * may carry `*`. Membership is one left-to-right pass. Throws
 * `TemplateParseError`.
 */
class universe_template
{
public:
  struct atom
  {
    std::uint8_t mask; ///< bit 0: '0', bit 1: '1', bit 2: 'p'
    enum class quantity
    {
      once,
      repeat,
      star
    } count = quantity::once;
    std::optional<bound_expr> times;
  };

  static universe_template parse( std::string_view text );

  bool contains( const pstring& x ) const;
  /// Every atom that admits 'p' also admits '0' and '1'.
  universe_template closure_template() const;
  std::string text() const;
  const std::vector<atom>& atoms() const noexcept { return atoms_; }

  /// Every member of length n (exponential; for small-scale checks).
  std::vector<pstring> members( std::size_t n ) const;

private:
  std::vector<atom> atoms_;
};

} // namespace forge
