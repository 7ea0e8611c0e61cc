#include <doctest.h>

#include <forge/circuit.hpp>
#include <forge/cnf.hpp>
#include <forge/error.hpp>
#include <forge/random.hpp>
#include <forge/solver.hpp>

#include <optional>

using namespace forge;

namespace
{

std::optional<std::uint64_t> first_satisfying( const circuit& c )
{
  const auto n = c.num_inputs();
  for ( std::uint64_t a = 0; a < ( std::uint64_t{ 1 } << n ); ++a )
    if ( evaluate( c, bit_string::from_uint( a, n ) ) )
      return a;
  return std::nullopt;
}

circuit padded_and()
{
  // AND(x0, x1) behind a chain of double negations so that m >= 4
  return parse_circuit_text( R"(inputs: 2
a = INPUT 0
b = INPUT 1
c = AND a b
d = NOT c
e = NOT d
f = AND e c
)" );
}

} // namespace

TEST_CASE( "solve examples" )
{
  const auto r = solve( padded_and() );
  CHECK( r.sat );
  CHECK( r.witness.str() == "11" );

  const cnf contra{ 1, { { { 0, false } }, { { 0, true } } } };
  const auto u = solve( cnf_to_circuit( contra ), solve_mode::lenient );
  CHECK_FALSE( u.sat );
  CHECK( u.evaluations == 2 );
}

TEST_CASE( "strict input discipline" )
{
  CHECK( strict_input_limit( 0 ) == 1 );
  CHECK( strict_input_limit( 1 ) == 1 );
  CHECK( strict_input_limit( 2 ) == 1 );
  CHECK( strict_input_limit( 3 ) == 2 );
  CHECK( strict_input_limit( 4 ) == 2 );
  CHECK( strict_input_limit( 5 ) == 3 );
  const auto and2 =
      circuit( { { gate_kind::input, 0, 0 }, { gate_kind::input, 1, 0 }, { gate_kind::and_gate, 0, 1 } }, 2 );
  try
  {
    solve( and2, solve_mode::strict );
    FAIL( "expected TooManyInputs" );
  }
  catch ( const error& e )
  {
    CHECK( e.kind() == "TooManyInputs" );
  }
  CHECK( solve( and2, solve_mode::lenient ).sat );
}

TEST_CASE( "random circuits against full enumeration" )
{
  rng gen( 41 );
  for ( int t = 0; t < 50; ++t )
  {
    const auto n = gen() % 11;
    const auto c = random_circuit( gen, n, 5 + gen() % 80 );
    const auto oracle = first_satisfying( c );
    for ( unsigned jobs : { 1u, 3u, 8u } )
    {
      const auto r = solve( c, solve_mode::lenient, jobs );
      REQUIRE( r.sat == oracle.has_value() );
      CHECK( r.evaluations <= ( std::uint64_t{ 1 } << n ) );
      if ( oracle )
      {
        CHECK( r.witness == bit_string::from_uint( *oracle, n ) );
        CHECK( evaluate( c, r.witness ) );
      }
    }
    if ( n <= strict_input_limit( c.num_gates() ) )
    {
      const auto s = solve( c, solve_mode::strict );
      CHECK( s.sat == oracle.has_value() );
      CHECK( s.evaluations <= 2 * std::max<std::size_t>( c.num_gates(), 1 ) );
    }
  }
}

TEST_CASE( "wide circuits cross block boundaries" )
{
  // satisfied only by the all-ones assignment of 9 inputs
  circuit_builder b( 9 );
  std::vector<circuit_builder::signal> xs;
  for ( std::size_t i = 0; i < 9; ++i )
    xs.push_back( b.input( i ) );
  const auto c = b.build( b.and_all( xs ) );
  for ( unsigned jobs : { 1u, 2u, 8u } )
  {
    const auto r = solve( c, solve_mode::lenient, jobs );
    CHECK( r.sat );
    CHECK( r.witness.str() == "111111111" );
  }
  CHECK( solve( c, solve_mode::lenient ).evaluations == 512 );
}

TEST_CASE( "solve_family" )
{
  const circuit zero( { { gate_kind::constant, 0, 0 } }, 0 );
  const circuit one( { { gate_kind::constant, 1, 0 } }, 0 );
  std::vector<circuit> fam{ zero, one };
  const auto r = solve_family( fam );
  CHECK( r.sat );
  CHECK( r.index == 1 );
  CHECK_FALSE( solve_family( std::vector<circuit>{} ).sat );
  CHECK_FALSE( solve_family( std::vector<circuit>{ zero, zero } ).sat );

  const auto and2 =
      circuit( { { gate_kind::input, 0, 0 }, { gate_kind::input, 1, 0 }, { gate_kind::and_gate, 0, 1 } }, 2 );
  std::vector<circuit> bad{ zero, and2 };
  try
  {
    solve_family( bad, solve_mode::strict );
    FAIL( "expected TooManyInputs" );
  }
  catch ( const error& e )
  {
    CHECK( e.kind() == "TooManyInputs" );
    CHECK( std::string( e.what() ).find( "member 1" ) != std::string::npos );
  }
}
