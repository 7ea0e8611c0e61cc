#include <forge/dtiwi.hpp>

#include <forge/builtins.hpp>
#include <forge/compiler.hpp>
#include <forge/error.hpp>

#include <fstream>
#include <sstream>

namespace forge
{

namespace
{

std::vector<std::uint64_t> sample_lengths()
{
  std::vector<std::uint64_t> ns;
  for ( std::uint64_t n = 1; n <= 256; ++n )
    ns.push_back( n );
  for ( std::uint64_t n = 512; n <= ( 1u << 16 ); n *= 2 )
    ns.push_back( n );
  return ns;
}

} // namespace

pstring pad( const bound_expr& f, const pstring& x )
{
  const auto n = x.length();
  const auto target = f( n );
  if ( target <= n )
    throw error( "PaddingUnderflow", "f(" + std::to_string( n ) + ") = " + std::to_string( target ) );
  std::vector<symbol> chars( target - n - 1, symbol::one );
  chars.push_back( symbol::zero );
  chars.insert( chars.end(), x.chars().begin(), x.chars().end() );
  return pstring( std::move( chars ) );
}

pstring unpad( const pstring& y )
{
  std::size_t i = 0;
  while ( i < y.length() && y[i] == symbol::one )
    ++i;
  if ( i == y.length() || y[i] != symbol::zero )
    throw error( "MalformedPadding", "no 0 after the 1-prefix" );
  return pstring( std::vector<symbol>( y.chars().begin() + i + 1, y.chars().end() ) );
}

std::optional<pstring> strip_layers( const dtiwi_instance& inst, const pstring& y, bool check_lengths )
{
  auto x = y;
  for ( auto f = inst.pad.rbegin(); f != inst.pad.rend(); ++f )
  {
    pstring inner;
    try
    {
      inner = unpad( x );
    }
    catch ( const error& )
    {
      return std::nullopt;
    }
    if ( check_lengths && ( *f )( inner.length() ) != x.length() )
      return std::nullopt;
    x = std::move( inner );
  }
  return x;
}

bool in_universe( const dtiwi_instance& inst, const pstring& y )
{
  const auto core = strip_layers( inst, y, false );
  return core && inst.universe.contains( *core );
}

bool decide_bruteforce( const dtiwi_instance& inst, const pstring& y, bruteforce_report* report )
{
  bruteforce_report local;
  auto& r = report ? *report : local;
  r = {};
  if ( !in_universe( inst, y ) )
    return false;
  r.in_universe = true;
  // padded inputs of the wrong length are rejected before the verifier runs
  const auto core = strip_layers( inst, y );
  if ( !core )
    return false;

  const auto n = core->length();
  const auto w = inst.witness( n );
  const auto t = inst.time( n );
  filling_enumerator fillings( *core, w );
  bit_string filling;
  pstring image;
  while ( fillings.next( filling, image ) )
  {
    ++r.fillings;
    const auto result = run( *inst.verifier, image, t );
    if ( result.outcome == verdict::timeout )
      ++r.timeouts;
    if ( result.outcome == verdict::accept )
    {
      r.witness = filling;
      return true;
    }
  }
  return false;
}

bool decide_via_circuits( const dtiwi_instance& inst, const pstring& y, const circuit_options& options,
                          circuit_report* report )
{
  circuit_report local;
  auto& r = report ? *report : local;
  r = {};
  if ( !in_universe( inst, y ) )
    return false;
  r.in_universe = true;
  // padded inputs of the wrong length are rejected before the verifier runs
  const auto core = strip_layers( inst, y );
  if ( !core )
    return false;

  const auto n = core->length();
  const auto t = options.time_override.value_or( inst.time( n ) );
  const auto last = std::min<std::uint64_t>( inst.witness( n ), core->pcount() );
  for ( std::size_t i = 0; i <= last; ++i )
  {
    const auto c = compile_on_pstring( *inst.verifier, *core, i, t );
    const auto s = stats( c );
    const auto solved = solve( c, options.mode, options.jobs );
    r.evaluations += solved.evaluations;
    r.family.push_back( { i, s, s.inputs <= strict_input_limit( s.gates ), solved.sat } );
    if ( solved.sat )
    {
      r.index = i;
      r.witness = solved.witness;
      return true;
    }
  }
  return false;
}

dtiwi_instance translation_transform( const dtiwi_instance& inst, const bound_expr& w, const bound_expr& w_prime )
{
  for ( const auto n : sample_lengths() )
  {
    if ( inst.witness( n ) != w( n ) + w_prime( n ) )
      throw error( "SplitMismatch", "w(" + std::to_string( n ) + ") + w'(" + std::to_string( n ) +
                                        ") differs from the witness bound" );
  }
  auto out = inst;
  out.name = inst.name + "+translate";
  out.universe = inst.universe.closure_template();
  out.witness = w;
  return out;
}

dtiwi_instance padding_transform( const dtiwi_instance& inst, const bound_expr& f )
{
  for ( const auto n : sample_lengths() )
    if ( f( n ) <= n )
      throw error( "PaddingUnderflow", "f(" + std::to_string( n ) + ") = " + std::to_string( f( n ) ) );
  auto out = inst;
  out.name = inst.name + "+pad";
  out.pad.push_back( f );
  return out;
}

bool witness_bound_within_length( const dtiwi_instance& inst, std::uint64_t n_max )
{
  for ( std::uint64_t n = 1; n <= n_max; ++n )
    if ( inst.witness( n ) > n )
      return false;
  return true;
}

dtiwi_instance parse_manifest( std::string_view text, const std::filesystem::path& base )
{
  dtiwi_instance inst;
  bool has_universe = false, has_verifier = false, has_witness = false, has_time = false;
  std::istringstream in{ std::string( text ) };
  std::string line;
  std::size_t lineno = 0;
  while ( std::getline( in, line ) )
  {
    ++lineno;
    if ( const auto hash = line.find( '#' ); hash != std::string::npos )
      line.erase( hash );
    const auto colon = line.find( ':' );
    auto trim = []( std::string s ) {
      const auto b = s.find_first_not_of( " \t\r" );
      const auto e = s.find_last_not_of( " \t\r" );
      return b == std::string::npos ? std::string{} : s.substr( b, e - b + 1 );
    };
    if ( trim( line ).empty() )
      continue;
    if ( colon == std::string::npos )
      throw error( "ParseError", "line " + std::to_string( lineno ) + ": expected 'key: value'" );
    const auto key = trim( line.substr( 0, colon ) );
    const auto value = trim( line.substr( colon + 1 ) );
    try
    {
      if ( key == "name" )
        inst.name = value;
      else if ( key == "universe" )
      {
        inst.universe = universe_template::parse( value );
        has_universe = true;
      }
      else if ( key == "verifier" )
      {
        inst.verifier_name = value;
        const auto path = base / value;
        if ( std::filesystem::is_regular_file( path ) )
        {
          std::ifstream f( path );
          std::stringstream buf;
          buf << f.rdbuf();
          inst.verifier = std::make_shared<machine>( parse_machine( buf.str() ) );
        }
        else
          inst.verifier = std::make_shared<machine>( builtin( value ) );
        has_verifier = true;
      }
      else if ( key == "witness" )
      {
        inst.witness = bound_expr::parse( value );
        has_witness = true;
      }
      else if ( key == "time" )
      {
        inst.time = bound_expr::parse( value );
        has_time = true;
      }
      else if ( key == "pad" )
        inst.pad.push_back( bound_expr::parse( value ) );
      else
        throw error( "ParseError", "unknown key '" + key + "'" );
    }
    catch ( const error& e )
    {
      throw error( "ParseError", "line " + std::to_string( lineno ) + ": " + e.what() );
    }
  }
  if ( !has_universe || !has_verifier || !has_witness || !has_time )
    throw error( "ParseError", "manifest needs universe, verifier, witness and time" );
  return inst;
}

dtiwi_instance load_manifest( const std::filesystem::path& path )
{
  std::ifstream f( path );
  if ( !f )
    throw error( "FileNotFound", path.string() );
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_manifest( buf.str(), path.parent_path() );
}

std::string to_manifest( const dtiwi_instance& inst )
{
  std::ostringstream out;
  if ( !inst.name.empty() )
    out << "name: " << inst.name << '\n';
  out << "universe: " << inst.universe.text() << '\n';
  out << "verifier: " << inst.verifier_name << '\n';
  out << "witness: " << inst.witness.text() << '\n';
  out << "time: " << inst.time.text() << '\n';
  for ( const auto& f : inst.pad )
    out << "pad: " << f.text() << '\n';
  return out.str();
}

} // namespace forge
