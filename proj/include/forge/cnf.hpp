#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace forge
{

struct literal
{
  std::uint32_t var;
  bool negated;

  friend bool operator==( const literal&, const literal& ) = default;
};

/// CNF over variables 0..num_vars-1.
struct cnf
{
  std::size_t num_vars = 0;
  std::vector<std::vector<literal>> clauses;

  bool evaluate( const std::vector<bool>& assignment ) const;
};

/// DIMACS `p cnf V C` format (1-based signed literals, 0-terminated clauses).
/// Throws `ParseError` or `VariableOutOfRange`.
cnf parse_dimacs_cnf( std::string_view text );

} // namespace forge
