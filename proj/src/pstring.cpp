#include <forge/pstring.hpp>

#include <forge/error.hpp>

#include <algorithm>

namespace forge
{

char to_char( symbol s )
{
  switch ( s )
  {
  case symbol::zero:
    return '0';
  case symbol::one:
    return '1';
  default:
    return 'p';
  }
}

bit_string bit_string::parse( std::string_view text )
{
  std::vector<bool> bits;
  bits.reserve( text.size() );
  for ( std::size_t i = 0; i < text.size(); ++i )
  {
    if ( text[i] != '0' && text[i] != '1' )
      throw error( "IllegalCharacter", "position " + std::to_string( i ) );
    bits.push_back( text[i] == '1' );
  }
  return bit_string( std::move( bits ) );
}

bit_string bit_string::from_uint( std::uint64_t value, std::size_t width )
{
  std::vector<bool> bits( width );
  for ( std::size_t i = 0; i < width; ++i )
    bits[i] = ( value >> ( width - 1 - i ) ) & 1u;
  return bit_string( std::move( bits ) );
}

std::string bit_string::str() const
{
  std::string s;
  s.reserve( bits_.size() );
  for ( bool b : bits_ )
    s.push_back( b ? '1' : '0' );
  return s;
}

pstring::pstring( std::vector<symbol> chars ) : chars_( std::move( chars ) )
{
  for ( std::size_t i = 0; i < chars_.size(); ++i )
    if ( chars_[i] == symbol::placeholder )
      positions_.push_back( i );
}

pstring pstring::parse( std::string_view text )
{
  std::vector<symbol> chars;
  chars.reserve( text.size() );
  for ( std::size_t i = 0; i < text.size(); ++i )
  {
    switch ( text[i] )
    {
    case '0':
      chars.push_back( symbol::zero );
      break;
    case '1':
      chars.push_back( symbol::one );
      break;
    case 'p':
      chars.push_back( symbol::placeholder );
      break;
    default:
      throw error( "IllegalCharacter", "position " + std::to_string( i ) );
    }
  }
  return pstring( std::move( chars ) );
}

std::string pstring::str() const
{
  std::string s;
  s.reserve( chars_.size() );
  for ( auto c : chars_ )
    s.push_back( to_char( c ) );
  return s;
}

pstring apply_filling( const pstring& x, const bit_string& r )
{
  auto chars = x.chars();
  const auto limit = std::min( r.size(), x.pcount() );
  for ( std::size_t i = 0; i < limit; ++i )
    chars[x.positions()[i]] = r[i] ? symbol::one : symbol::zero;
  return pstring( std::move( chars ) );
}

bool refines( const pstring& x, const pstring& y )
{
  if ( x.length() != y.length() )
    return false;
  for ( std::size_t i = 0; i < x.length(); ++i )
  {
    if ( x[i] == y[i] )
      continue;
    if ( y[i] != symbol::placeholder || x[i] == symbol::placeholder )
      return false;
  }
  return true;
}

std::set<pstring> closure_of( const std::set<pstring>& language )
{
  std::set<pstring> result;
  for ( const auto& y : language )
  {
    // each placeholder independently stays, becomes 0, or becomes 1
    const auto& pos = y.positions();
    std::vector<std::uint8_t> choice( pos.size(), 0 );
    while ( true )
    {
      auto chars = y.chars();
      for ( std::size_t i = 0; i < pos.size(); ++i )
        chars[pos[i]] = static_cast<symbol>( ( choice[i] + 2 ) % 3 );
      result.emplace( std::move( chars ) );

      std::size_t i = 0;
      while ( i < choice.size() && ++choice[i] == 3 )
        choice[i++] = 0;
      if ( i == choice.size() )
        break;
    }
  }
  return result;
}

filling_enumerator::filling_enumerator( pstring x, std::size_t w )
    : x_( std::move( x ) ), max_len_( std::min( w, x_.pcount() ) )
{
}

std::uint64_t filling_enumerator::total() const noexcept
{
  return ( std::uint64_t{ 2 } << max_len_ ) - 1;
}

bool filling_enumerator::next( bit_string& r, pstring& image )
{
  if ( done_ )
    return false;
  r = bit_string::from_uint( value_, len_ );
  image = apply_filling( x_, r );

  if ( ++value_ == ( std::uint64_t{ 1 } << len_ ) )
  {
    value_ = 0;
    if ( ++len_ > max_len_ )
      done_ = true;
  }
  return true;
}

std::vector<std::pair<bit_string, pstring>> enumerate_fillings( const pstring& x, std::size_t w )
{
  filling_enumerator e( x, w );
  std::vector<std::pair<bit_string, pstring>> out;
  out.reserve( e.total() );
  bit_string r;
  pstring image;
  while ( e.next( r, image ) )
    out.emplace_back( r, image );
  return out;
}

std::vector<bool> ternary_to_binary( const pstring& x )
{
  std::vector<bool> bits;
  bits.reserve( 2 * x.length() );
  for ( auto c : x.chars() )
  {
    const auto code = static_cast<unsigned>( c );
    bits.push_back( code & 2u );
    bits.push_back( code & 1u );
  }
  return bits;
}

} // namespace forge
