#include <forge/bound_expr.hpp>

#include <forge/error.hpp>

#include <cctype>
#include <limits>
#include <vector>

namespace forge
{

struct bound_expr::node
{
  enum class kind
  {
    number,
    var,
    add,
    mul,
    pow,
    log2ceil,
    cdiv
  };
  kind k;
  std::uint64_t value = 0;
  std::shared_ptr<const node> lhs, rhs;
};

namespace
{

using node_ptr = std::shared_ptr<const bound_expr::node>;
using kind = bound_expr::node::kind;

node_ptr make( kind k, node_ptr lhs = nullptr, node_ptr rhs = nullptr, std::uint64_t value = 0 )
{
  return std::make_shared<const bound_expr::node>( bound_expr::node{ k, value, std::move( lhs ), std::move( rhs ) } );
}

class parser
{
public:
  explicit parser( std::string_view text ) : text_( text ) {}

  node_ptr parse()
  {
    auto e = expr();
    skip();
    if ( pos_ != text_.size() )
      fail( "unexpected trailing input" );
    return e;
  }

private:
  [[noreturn]] void fail( const std::string& what ) const
  {
    throw error( "BoundParseError", what + " at offset " + std::to_string( pos_ ) + " in '" + std::string( text_ ) + "'" );
  }

  void skip()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
      ++pos_;
  }

  bool accept( char c )
  {
    skip();
    if ( pos_ < text_.size() && text_[pos_] == c )
    {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect( char c )
  {
    if ( !accept( c ) )
      fail( std::string( "expected '" ) + c + "'" );
  }

  bool keyword( std::string_view word )
  {
    skip();
    if ( text_.substr( pos_, word.size() ) == word )
    {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  node_ptr expr()
  {
    auto lhs = term();
    while ( accept( '+' ) )
      lhs = make( kind::add, lhs, term() );
    return lhs;
  }

  node_ptr term()
  {
    auto lhs = factor();
    while ( accept( '*' ) )
      lhs = make( kind::mul, lhs, factor() );
    return lhs;
  }

  node_ptr factor()
  {
    auto base = atom();
    if ( accept( '^' ) )
      return make( kind::pow, base, atom() );
    return base;
  }

  node_ptr atom()
  {
    skip();
    if ( pos_ >= text_.size() )
      fail( "unexpected end" );
    if ( accept( '(' ) )
    {
      auto e = expr();
      expect( ')' );
      return e;
    }
    if ( keyword( "log2ceil" ) )
    {
      expect( '(' );
      auto e = expr();
      expect( ')' );
      return make( kind::log2ceil, e );
    }
    if ( keyword( "cdiv" ) )
    {
      expect( '(' );
      auto a = expr();
      expect( ',' );
      auto b = expr();
      expect( ')' );
      return make( kind::cdiv, a, b );
    }
    if ( text_[pos_] == 'n' )
    {
      ++pos_;
      return make( kind::var );
    }
    if ( std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      std::uint64_t v = 0;
      while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
      {
        const std::uint64_t d = text_[pos_++] - '0';
        if ( v > ( std::numeric_limits<std::uint64_t>::max() - d ) / 10 )
          fail( "integer literal too large" );
        v = v * 10 + d;
      }
      return make( kind::number, nullptr, nullptr, v );
    }
    fail( "unexpected character" );
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void overflow()
{
  throw error( "BoundOverflow", "bound expression exceeds 64 bits" );
}

std::uint64_t checked_add( std::uint64_t a, std::uint64_t b )
{
  std::uint64_t r;
  if ( __builtin_add_overflow( a, b, &r ) )
    overflow();
  return r;
}

std::uint64_t checked_mul( std::uint64_t a, std::uint64_t b )
{
  std::uint64_t r;
  if ( __builtin_mul_overflow( a, b, &r ) )
    overflow();
  return r;
}

std::uint64_t eval( const bound_expr::node& e, std::uint64_t n )
{
  switch ( e.k )
  {
  case kind::number:
    return e.value;
  case kind::var:
    return n;
  case kind::add:
    return checked_add( eval( *e.lhs, n ), eval( *e.rhs, n ) );
  case kind::mul:
    return checked_mul( eval( *e.lhs, n ), eval( *e.rhs, n ) );
  case kind::pow:
  {
    const auto base = eval( *e.lhs, n );
    const auto exp = eval( *e.rhs, n );
    if ( base <= 1 )
      return exp == 0 ? 1 : base;
    std::uint64_t r = 1;
    for ( std::uint64_t i = 0; i < exp; ++i )
      r = checked_mul( r, base );
    return r;
  }
  case kind::log2ceil:
    return log2ceil( eval( *e.lhs, n ) );
  case kind::cdiv:
  {
    const auto a = eval( *e.lhs, n );
    const auto b = eval( *e.rhs, n );
    if ( b == 0 )
      throw error( "BoundDivisionByZero", "cdiv with zero divisor" );
    return a / b + ( a % b != 0 );
  }
  }
  return 0;
}

} // namespace

std::uint64_t log2ceil( std::uint64_t n )
{
  std::uint64_t r = 0;
  while ( r < 64 && ( std::uint64_t{ 1 } << r ) < n )
    ++r;
  return r;
}

bound_expr::bound_expr() : root_( make( kind::number ) ), text_( "0" ) {}

bound_expr bound_expr::parse( std::string_view text )
{
  bound_expr e;
  e.root_ = parser( text ).parse();
  e.text_ = std::string( text );
  return e;
}

bound_expr bound_expr::constant( std::uint64_t value )
{
  return parse( std::to_string( value ) );
}

std::uint64_t bound_expr::operator()( std::uint64_t n ) const
{
  return eval( *root_, n );
}

bool bound_expr::is_monotone( std::uint64_t n_max ) const
{
  try
  {
    std::uint64_t prev = ( *this )( 1 );
    for ( std::uint64_t n = 2; n <= n_max; ++n )
    {
      const auto v = ( *this )( n );
      if ( v < prev )
        return false;
      prev = v;
    }
  }
  catch ( const error& )
  {
    return false;
  }
  return true;
}

} // namespace forge
