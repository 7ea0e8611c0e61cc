#include <forge/selftest.hpp>

#include <forge/builtins.hpp>
#include <forge/compiler.hpp>
#include <forge/dtiwi.hpp>
#include <forge/encoders.hpp>
#include <forge/random.hpp>
#include <forge/solver.hpp>
#include <forge/tradeoff.hpp>

namespace forge
{

namespace
{

void tally( suite_result& s, bool ok ) { ( ok ? s.passed : s.failed )++; }

suite_result fillings( rng& gen )
{
  suite_result s{ "fillings" };
  tally( s, apply_filling( pstring::parse( "11p01p0p" ), bit_string::parse( "0110" ) ).str() == "11001101" );
  tally( s, closure_of( { pstring::parse( "0p1p" ) } ).size() == 9 );
  for ( int t = 0; t < 50; ++t )
  {
    const auto x = random_pstring( gen, 8, gen() % 7 );
    const auto w = gen() % 8;
    const auto all = enumerate_fillings( x, w );
    const auto expect = ( std::uint64_t{ 1 } << ( std::min<std::size_t>( w, x.pcount() ) + 1 ) ) - 1;
    tally( s, all.size() == expect );
  }
  return s;
}

suite_result compiler( rng& )
{
  suite_result s{ "compiler" };
  for ( const auto* name : { "all_zeros", "parity", "equal_halves" } )
  {
    const auto tm = builtin( name );
    for ( std::size_t n = 1; n <= 6; ++n )
    {
      const auto x = pstring::parse( std::string( n, 'p' ) );
      const auto T = builtin_time_bound( name )( n );
      const auto c = compile_on_pstring( tm, x, n, T );
      for ( std::uint64_t a = 0; a < ( 1u << n ); ++a )
      {
        const auto r = bit_string::from_uint( a, n );
        tally( s, evaluate( c, r ) == ( run( tm, apply_filling( x, r ), T ).outcome == verdict::accept ) );
      }
    }
  }
  return s;
}

suite_result solver( rng& gen )
{
  suite_result s{ "solver" };
  for ( int t = 0; t < 20; ++t )
  {
    const auto inputs = 1 + gen() % 8;
    const auto c = random_circuit( gen, inputs, 10 + gen() % 40 );
    const auto r = solve( c, solve_mode::lenient );
    std::optional<bit_string> first;
    for ( std::uint64_t a = 0; a < ( 1u << inputs ) && !first; ++a )
      if ( evaluate( c, bit_string::from_uint( a, inputs ) ) )
        first = bit_string::from_uint( a, inputs );
    tally( s, r.sat == first.has_value() && ( !first || r.witness == *first ) );
  }
  return s;
}

suite_result pipeline( rng& gen )
{
  suite_result s{ "pipeline" };
  for ( int t = 0; t < 10; ++t )
  {
    const auto f = random_cnf( gen, 2 + gen() % 2, 1 + gen() % 2, 2 );
    const auto e = encode_sat( f );
    tally( s, decide_via_circuits( e.instance, e.input ) == decide_bruteforce( e.instance, e.input ) );
  }
  return s;
}

suite_result clique( rng& gen )
{
  suite_result s{ "clique" };
  for ( int t = 0; t < 10; ++t )
  {
    const auto g = random_graph( gen, 3 + gen() % 4, 50 );
    const auto k = 2 + gen() % 2;
    const bool oracle = find_clique_by_subsets( g, k ).has_value();
    const bool gadget = solve( clique_gadget_circuit( g, k ), solve_mode::lenient ).sat;
    const auto e = encode_clique( g, k );
    tally( s, oracle == gadget && oracle == decide_bruteforce( e.instance, e.input ) );
  }
  return s;
}

suite_result tradeoff()
{
  suite_result s{ "tradeoff" };
  const rational alpha( 3, 2 );
  for ( const auto& row : tradeoff_table( alpha, 20, precision::exact ) )
  {
    rational power = 1;
    for ( std::uint64_t i = 0; i <= row.k; ++i )
      power *= alpha;
    tally( s, row.z * ( alpha - 1 ) == power - 1 );
  }
  tally( s, required_k_for_epsilon( alpha, 1 ) == 1 );
  return s;
}

} // namespace

std::vector<suite_result> run_selftest( std::uint64_t seed )
{
  rng gen( seed );
  std::vector<suite_result> out;
  out.push_back( fillings( gen ) );
  out.push_back( compiler( gen ) );
  out.push_back( solver( gen ) );
  out.push_back( pipeline( gen ) );
  out.push_back( clique( gen ) );
  out.push_back( tradeoff() );
  return out;
}

} // namespace forge
