#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace forge
{

/*! \brief Integer-valued function of the input length n.
 *
 * Grammar (whitespace insensitive):
 *
 *     expr   := term ('+' term)*
 *     term   := factor ('*' factor)*
 *     factor := atom ('^' atom)?
 *     atom   := integer | 'n' | '(' expr ')'
 *             | 'log2ceil' '(' expr ')' | 'cdiv' '(' expr ',' expr ')'
 *
 * Evaluation uses checked 64-bit arithmetic and throws `BoundOverflow`.
 */
class bound_expr
{
public:
  struct node;

  bound_expr();
  /// Throws `BoundParseError`.
  static bound_expr parse( std::string_view text );
  static bound_expr constant( std::uint64_t value );

  std::uint64_t operator()( std::uint64_t n ) const;
  const std::string& text() const noexcept { return text_; }

  /// Samples n in [1, n_max]; false when a value decreases or overflows.
  bool is_monotone( std::uint64_t n_max = 1u << 16 ) const;

private:
  std::shared_ptr<const node> root_;
  std::string text_;
};

std::uint64_t log2ceil( std::uint64_t n );

} // namespace forge
