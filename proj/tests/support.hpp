#pragma once

#include <forge/pstring.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace forge::test
{

/// Every string of length n over `alphabet`, in counting order.
inline std::vector<std::string> all_strings( std::size_t n, const std::string& alphabet )
{
  std::vector<std::string> out{ "" };
  for ( std::size_t i = 0; i < n; ++i )
  {
    std::vector<std::string> next;
    for ( const auto& s : out )
      for ( char c : alphabet )
        next.push_back( s + c );
    out = std::move( next );
  }
  return out;
}

inline std::vector<bool> bits_of( std::uint64_t value, std::size_t width )
{
  std::vector<bool> v( width );
  for ( std::size_t i = 0; i < width; ++i )
    v[i] = ( value >> ( width - 1 - i ) ) & 1;
  return v;
}

inline std::string bit_text( std::uint64_t value, std::size_t width )
{
  std::string s;
  for ( auto b : bits_of( value, width ) )
    s += b ? '1' : '0';
  return s;
}

/// Replaces placeholders left to right with the characters of `r`.
inline std::string fill_by_hand( std::string x, const std::string& r )
{
  std::size_t used = 0;
  for ( auto& c : x )
    if ( c == 'p' && used < r.size() )
      c = r[used++];
  return x;
}

} // namespace forge::test
