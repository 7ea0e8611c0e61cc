#include <forge/tradeoff.hpp>

#include <forge/error.hpp>

#include <cmath>
#include <cstdlib>

namespace forge
{

namespace
{

void check_alpha( const rational& alpha )
{
  if ( alpha < 1 || alpha >= 2 )
    throw error( "AlphaOutOfRange", "alpha must lie in [1, 2), got " + alpha.str() );
}

double to_double( const rational& r ) { return r.convert_to<double>(); }

} // namespace

precision precision_from_env()
{
  const char* v = std::getenv( "FORGE_PRECISION" );
  if ( v == nullptr || std::string_view( v ) == "rational" || std::string_view( v ).empty() )
    return precision::exact;
  if ( std::string_view( v ) == "float" )
    return precision::floating;
  throw error( "ParseError", std::string( "FORGE_PRECISION must be 'rational' or 'float', got '" ) + v + "'" );
}

rational parse_rational( std::string_view text )
{
  using boost::multiprecision::cpp_int;
  auto integer = [&]( std::string_view s ) {
    if ( s.empty() || s.find_first_not_of( "0123456789" ) != std::string_view::npos )
      throw error( "ParseError", "not a number: '" + std::string( text ) + "'" );
    return cpp_int( std::string( s ) );
  };
  if ( const auto slash = text.find( '/' ); slash != std::string_view::npos )
  {
    const auto den = integer( text.substr( slash + 1 ) );
    if ( den == 0 )
      throw error( "ParseError", "zero denominator" );
    return rational( integer( text.substr( 0, slash ) ), den );
  }
  if ( const auto dot = text.find( '.' ); dot != std::string_view::npos )
  {
    const auto frac = text.substr( dot + 1 );
    const auto whole = text.substr( 0, dot );
    cpp_int scale = 1;
    for ( std::size_t i = 0; i < frac.size(); ++i )
      scale *= 10;
    const cpp_int w = whole.empty() ? cpp_int( 0 ) : integer( whole );
    const cpp_int f = frac.empty() ? cpp_int( 0 ) : integer( frac );
    return rational( w * scale + f, scale );
  }
  return rational( integer( text ) );
}

std::string decimal( const rational& r, int digits )
{
  using boost::multiprecision::cpp_int;
  cpp_int scale = 1;
  for ( int i = 0; i < digits; ++i )
    scale *= 10;
  const bool neg = r < 0;
  const rational a = neg ? rational( -r ) : r;
  // round half up at the last digit
  cpp_int scaled = ( numerator( a ) * scale * 2 + denominator( a ) ) / ( denominator( a ) * 2 );
  const cpp_int whole = scaled / scale;
  std::string frac = cpp_int( scaled % scale ).str();
  frac.insert( 0, digits - frac.size(), '0' );
  while ( !frac.empty() && frac.back() == '0' )
    frac.pop_back();
  return ( neg ? "-" : "" ) + whole.str() + ( frac.empty() ? "" : "." + frac );
}

std::vector<tradeoff_row> tradeoff_table( const rational& alpha, std::uint64_t k_max, precision mode )
{
  check_alpha( alpha );
  std::vector<tradeoff_row> rows;
  if ( mode == precision::exact )
  {
    rational power = alpha, z = 1;
    for ( std::uint64_t k = 0; k <= k_max; ++k )
    {
      // power = alpha^{k+1}, z = sum_{i<=k} alpha^i
      const rational ratio = power / z;
      rows.push_back( { k, z, power, ratio, to_double( z ), to_double( power ), to_double( ratio ) } );
      z += power;
      power *= alpha;
    }
    return rows;
  }
  const double a = to_double( alpha );
  for ( std::uint64_t k = 0; k <= k_max; ++k )
  {
    const double exponent = std::pow( a, static_cast<double>( k + 1 ) );
    const double z = a == 1.0 ? static_cast<double>( k + 1 ) : ( exponent - 1 ) / ( a - 1 );
    rows.push_back( { k, 0, 0, 0, z, exponent, exponent / z } );
  }
  return rows;
}

std::uint64_t required_k_for_epsilon( const rational& alpha, const rational& epsilon )
{
  if ( alpha <= 1 || alpha >= 2 )
    throw error( "AlphaOutOfRange", "alpha must lie in (1, 2), got " + alpha.str() );
  if ( epsilon <= 0 )
    throw error( "EpsilonNonpositive", epsilon.str() );
  // a / (a - 1) <= 1 + eps  <=>  a >= (1 + eps) / eps
  const rational threshold = ( 1 + epsilon ) / epsilon;
  rational power = alpha;
  std::uint64_t k = 0;
  while ( power < threshold )
  {
    power *= alpha;
    ++k;
  }
  return k;
}

double required_base_alpha( double target_alpha, std::uint64_t k )
{
  if ( !( target_alpha > 1 ) )
    throw error( "AlphaOutOfRange", "target alpha must exceed 1" );
  return std::pow( target_alpha, 1.0 / static_cast<double>( k + 1 ) );
}

std::vector<schedule_step> speedup_schedule( const rational& alpha, std::uint64_t k )
{
  check_alpha( alpha );
  std::vector<schedule_step> steps;
  rational exponent = 1, z = 1;
  for ( std::uint64_t j = 0; j <= k; ++j )
  {
    schedule_step s;
    s.j = j;
    s.exponent_in = exponent;
    s.witness_factor = z;
    s.pad_exponent = exponent * alpha;
    s.exponent_out = s.pad_exponent;
    const auto zt = decimal( z ), ein = decimal( exponent ), eout = decimal( s.exponent_out );
    s.class_in = "DTIWI(n^" + ein + ", " + zt + "*log n)";
    s.translation = "split " + zt + "*log n into the filled part and a free part of log n";
    s.padding = "f(n) = n^" + eout;
    s.class_out = "DTIME(n^" + eout + ")";
    steps.push_back( std::move( s ) );
    exponent *= alpha;
    z += exponent;
  }
  return steps;
}

} // namespace forge
