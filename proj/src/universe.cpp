#include <forge/universe.hpp>

#include <forge/error.hpp>

#include <cctype>

namespace forge
{

namespace
{

std::uint8_t char_mask( char c )
{
  switch ( c )
  {
  case '0':
    return 1;
  case '1':
    return 2;
  case 'p':
    return 4;
  default:
    return 0;
  }
}

std::uint8_t symbol_mask( symbol s ) { return std::uint8_t( 1u << static_cast<unsigned>( s ) ); }

std::string mask_text( std::uint8_t m )
{
  std::string chars;
  for ( char c : { '0', '1', 'p' } )
    if ( m & char_mask( c ) )
      chars += c;
  return chars.size() == 1 ? chars : "{" + chars + "}";
}

} // namespace

universe_template universe_template::parse( std::string_view text )
{
  universe_template u;
  bool star = false;
  std::size_t i = 0;
  auto fail = [&]( const std::string& what ) {
    throw error( "TemplateParseError", what + " at position " + std::to_string( i ) );
  };
  while ( i < text.size() )
  {
    if ( std::isspace( static_cast<unsigned char>( text[i] ) ) )
    {
      ++i;
      continue;
    }
    atom a{ 0, atom::quantity::once, std::nullopt };
    if ( text[i] == '{' )
    {
      ++i;
      while ( i < text.size() && text[i] != '}' )
      {
        if ( !char_mask( text[i] ) )
          fail( "bad class character" );
        a.mask |= char_mask( text[i++] );
      }
      if ( i == text.size() || a.mask == 0 )
        fail( "unterminated or empty class" );
      ++i;
    }
    else
    {
      a.mask = char_mask( text[i] );
      if ( !a.mask )
        fail( "unexpected character" );
      ++i;
    }
    if ( i < text.size() && text[i] == '*' )
    {
      if ( star )
        fail( "more than one '*'" );
      star = true;
      a.count = atom::quantity::star;
      ++i;
    }
    else if ( i < text.size() && text[i] == '^' )
    {
      ++i;
      std::size_t end = i;
      if ( i < text.size() && text[i] == '(' )
      {
        int depth = 0;
        for ( ; end < text.size(); ++end )
        {
          depth += text[end] == '(';
          depth -= text[end] == ')';
          if ( depth == 0 )
            break;
        }
        if ( end == text.size() )
          fail( "unbalanced parenthesis" );
        ++end;
      }
      else
        while ( end < text.size() && std::isdigit( static_cast<unsigned char>( text[end] ) ) )
          ++end;
      if ( end == i )
        fail( "missing repeat count" );
      const bool wrapped = text[i] == '(';
      try
      {
        a.times = bound_expr::parse( wrapped ? text.substr( i + 1, end - i - 2 ) : text.substr( i, end - i ) );
      }
      catch ( const error& e )
      {
        fail( e.detail() );
      }
      a.count = atom::quantity::repeat;
      i = end;
    }
    u.atoms_.push_back( std::move( a ) );
  }
  return u;
}

bool universe_template::contains( const pstring& x ) const
{
  const auto n = x.length();
  std::uint64_t fixed = 0;
  for ( const auto& a : atoms_ )
  {
    if ( a.count == atom::quantity::once )
      ++fixed;
    else if ( a.count == atom::quantity::repeat )
    {
      fixed += ( *a.times )( n );
      if ( fixed > n )
        return false;
    }
  }
  if ( fixed > n )
    return false;
  std::uint64_t star_len = n - fixed;
  bool has_star = false;
  std::size_t pos = 0;
  for ( const auto& a : atoms_ )
  {
    std::uint64_t len = 1;
    if ( a.count == atom::quantity::repeat )
      len = ( *a.times )( n );
    else if ( a.count == atom::quantity::star )
    {
      len = star_len;
      has_star = true;
    }
    for ( std::uint64_t k = 0; k < len; ++k, ++pos )
      if ( !( a.mask & symbol_mask( x[pos] ) ) )
        return false;
  }
  return has_star || star_len == 0;
}

universe_template universe_template::closure_template() const
{
  auto u = *this;
  for ( auto& a : u.atoms_ )
    if ( a.mask & 4 )
      a.mask |= 3;
  return u;
}

std::string universe_template::text() const
{
  std::string s;
  for ( const auto& a : atoms_ )
  {
    s += mask_text( a.mask );
    if ( a.count == atom::quantity::star )
      s += '*';
    else if ( a.count == atom::quantity::repeat )
    {
      const auto& t = a.times->text();
      const bool digits = !t.empty() && t.find_first_not_of( "0123456789" ) == std::string::npos;
      s += digits ? "^" + t : "^(" + t + ")";
    }
  }
  return s;
}

std::vector<pstring> universe_template::members( std::size_t n ) const
{
  std::vector<pstring> out;
  std::vector<symbol> chars( n, symbol::zero );
  std::uint64_t total = 1;
  for ( std::size_t i = 0; i < n; ++i )
    total *= 3;
  for ( std::uint64_t code = 0; code < total; ++code )
  {
    auto c = code;
    for ( std::size_t i = n; i-- > 0; c /= 3 )
      chars[i] = static_cast<symbol>( c % 3 );
    pstring x( chars );
    if ( contains( x ) )
      out.push_back( std::move( x ) );
  }
  return out;
}

} // namespace forge
