#include <doctest.h>

#include "support.hpp"

#include <forge/compiler.hpp>
#include <forge/dtiwi.hpp>
#include <forge/encoders.hpp>
#include <forge/error.hpp>
#include <forge/random.hpp>
#include <forge/solver.hpp>

#include <algorithm>

using namespace forge;
using forge::test::bits_of;

namespace
{

std::string kind_of( auto&& fn )
{
  try
  {
    fn();
  }
  catch ( const error& e )
  {
    return e.kind();
  }
  return "none";
}

bool satisfiable_by_hand( const cnf& f )
{
  for ( std::uint64_t a = 0; a < ( std::uint64_t{ 1 } << f.num_vars ); ++a )
    if ( f.evaluate( bits_of( a, f.num_vars ) ) )
      return true;
  return false;
}

bool is_clique( const graph& g, const std::vector<std::size_t>& ids )
{
  for ( std::size_t i = 0; i < ids.size(); ++i )
  {
    if ( ids[i] >= g.num_vertices() )
      return false;
    for ( std::size_t j = i + 1; j < ids.size(); ++j )
      if ( ids[i] == ids[j] || !g.adjacent( ids[i], ids[j] ) )
        return false;
  }
  return true;
}

} // namespace

TEST_CASE( "SAT encoding layout" )
{
  // (x0 or not x1) with v = 2, b = 1
  cnf f;
  f.num_vars = 2;
  f.clauses = { { { 0, false }, { 1, true } } };
  const auto e = encode_sat( f );
  CHECK( e.input.str() == "pp" "100" "111" "0" );
  CHECK( e.instance.witness( e.input.length() ) == 2 );
  CHECK( e.input.pcount() == 2 );
  CHECK( kind_of( [] { encode_sat( cnf{} ); } ) == "InvalidFormula" );
  cnf bad;
  bad.num_vars = 1;
  bad.clauses = { { { 3, false } } };
  CHECK( kind_of( [&] { encode_sat( bad ); } ) == "VariableOutOfRange" );
}

TEST_CASE( "SAT encoding decides satisfiability" )
{
  rng gen( 11 );
  for ( int t = 0; t < 20; ++t )
  {
    const std::size_t vars = 1 + gen() % 6;
    const auto f = random_cnf( gen, vars, 1 + gen() % 8, 3 );
    const auto e = encode_sat( f );
    REQUIRE( e.input.pcount() == vars );
    bruteforce_report r;
    const bool got = decide_bruteforce( e.instance, e.input, &r );
    CHECK( got == satisfiable_by_hand( f ) );
    CHECK( r.timeouts == 0 );
    if ( got )
    {
      auto a = r.witness->bits();
      a.resize( vars, false );
      CHECK( f.evaluate( a ) );
    }
    if ( t < 6 )
      CHECK( decide_via_circuits( e.instance, e.input ) == got );
  }
}

TEST_CASE( "circuit-SAT encoding" )
{
  // x0 and not x1
  circuit c( { { gate_kind::input, 0 }, { gate_kind::input, 1 }, { gate_kind::not_gate, 1 },
               { gate_kind::and_gate, 0, 2 } },
             2 );
  const auto e = encode_circuit_sat( c );
  CHECK( e.input.pcount() == 2 );
  CHECK( e.input.length() == 2 + 8 * serialize( c ).size() );
  bruteforce_report r;
  CHECK( decide_bruteforce( e.instance, e.input, &r ) );
  CHECK( r.witness->str() == "10" );

  rng gen( 5 );
  for ( int t = 0; t < 30; ++t )
  {
    const std::size_t inputs = 1 + gen() % 8;
    const auto rc = random_circuit( gen, inputs, inputs + gen() % 12 );
    const auto re = encode_circuit_sat( rc );
    const auto expected = solve( rc, solve_mode::lenient );
    bruteforce_report br;
    REQUIRE( decide_bruteforce( re.instance, re.input, &br ) == expected.sat );
    CHECK( br.timeouts == 0 );
    if ( expected.sat )
    {
      auto w = br.witness->bits();
      w.resize( inputs, false );
      CHECK( evaluate( rc, bit_string( w ) ) );
    }
  }
}

TEST_CASE( "circuit-SAT witness bound covers the inputs" )
{
  rng gen( 17 );
  for ( int t = 0; t < 10; ++t )
  {
    const std::size_t inputs = 1 + gen() % 20;
    const auto c = random_circuit( gen, inputs, 1 + gen() % 20 );
    const auto e = encode_circuit_sat( c );
    CHECK( e.instance.witness( e.input.length() ) >= inputs );
    CHECK( e.input.pcount() == inputs );
  }
}

TEST_CASE( "clique encoding examples" )
{
  const graph k3( 3, { { 0, 1 }, { 1, 2 }, { 0, 2 } } );
  const graph p3( 3, { { 0, 1 }, { 1, 2 } } );
  const auto e = encode_clique( k3, 3 );
  // b = 2: p^6, vertices 000 001 010, edges 1 00 01, 1 00 10, 1 01 10
  CHECK( e.input.str() == "pppppp" "000" "001" "010" "10001" "10010" "10110" );
  bruteforce_report r;
  CHECK( decide_bruteforce( e.instance, e.input, &r ) );
  CHECK( is_clique( k3, decode_clique_witness( *r.witness, 3, 2 ) ) );
  CHECK( decide_via_circuits( e.instance, e.input ) );

  const auto f = encode_clique( p3, 3 );
  CHECK_FALSE( decide_bruteforce( f.instance, f.input ) );
  CHECK_FALSE( decide_via_circuits( f.instance, f.input ) );
  CHECK( decide_via_circuits( encode_clique( p3, 2 ).instance, encode_clique( p3, 2 ).input ) );

  CHECK( kind_of( [&] { encode_clique( k3, 0 ); } ) == "KOutOfRange" );
  CHECK( kind_of( [&] { encode_clique( k3, 4 ); } ) == "KOutOfRange" );
  CHECK( kind_of( [] { graph( 2, { { 0, 0 } } ); } ) == "InvalidGraph" );
  CHECK( kind_of( [] { graph( 2, { { 0, 2 } } ); } ) == "InvalidGraph" );
}

TEST_CASE( "clique paths agree on random graphs" )
{
  rng gen( 23 );
  for ( int t = 0; t < 25; ++t )
  {
    const std::size_t v = 2 + gen() % 7;
    const std::size_t k = 1 + gen() % std::min<std::size_t>( v, 3 );
    const auto g = random_graph( gen, v, 20 + gen() % 70 );
    const bool expected = find_clique_by_subsets( g, k ).has_value();
    const auto gadget = solve( clique_gadget_circuit( g, k ), solve_mode::lenient );
    CHECK( gadget.sat == expected );
    if ( gadget.sat )
      CHECK( is_clique( g, decode_clique_witness( gadget.witness, k, id_bits( v ) ) ) );
    const auto e = encode_clique( g, k );
    circuit_report r;
    CHECK( decide_via_circuits( e.instance, e.input, {}, &r ) == expected );
    if ( expected )
      CHECK( is_clique( g, decode_clique_witness( *r.witness, k, id_bits( v ) ) ) );
    if ( k * id_bits( v ) <= 8 )
      CHECK( decide_bruteforce( e.instance, e.input ) == expected );
  }
}

TEST_CASE( "gadget circuit and compiled verifier compute the same function" )
{
  rng gen( 29 );
  for ( int t = 0; t < 6; ++t )
  {
    const std::size_t v = 3 + gen() % 6;
    const std::size_t k = 2 + gen() % 2;
    const auto g = random_graph( gen, v, 60 );
    const auto e = encode_clique( g, k );
    const auto& x = e.input;
    const auto compiled = compile_on_pstring( *e.instance.verifier, x, x.pcount(), e.instance.time( x.length() ) );
    const auto gadget = clique_gadget_circuit( g, k );
    REQUIRE( gadget.num_inputs() == compiled.num_inputs() );
    for ( std::uint64_t a = 0; a < ( std::uint64_t{ 1 } << x.pcount() ); ++a )
    {
      const auto r = bit_string::from_uint( a, x.pcount() );
      REQUIRE( evaluate( gadget, r ) == evaluate( compiled, r ) );
    }
  }
}

TEST_CASE( "gadget on small fixed graphs" )
{
  CHECK( solve( clique_gadget_circuit( graph( 3, { { 0, 1 }, { 1, 2 }, { 0, 2 } } ), 3 ) ).sat );
  CHECK_FALSE( solve( clique_gadget_circuit( graph( 4, {} ), 2 ), solve_mode::lenient ).sat );
  CHECK( solve( clique_gadget_circuit( graph( 4, {} ), 1 ), solve_mode::lenient ).sat );
  // v = 5 leaves ids 5..7 out of range
  const graph g( 5, { { 3, 4 } } );
  const auto s = solve( clique_gadget_circuit( g, 2 ), solve_mode::lenient );
  REQUIRE( s.sat );
  CHECK( decode_clique_witness( s.witness, 2, 3 ) == std::vector<std::size_t>{ 3, 4 } );
}

TEST_CASE( "clique encoding length stays within the documented constants" )
{
  rng gen( 3 );
  for ( int t = 0; t < 200; ++t )
  {
    const std::size_t v = 1 + gen() % 16;
    const auto g = random_graph( gen, v, gen() % 101 );
    const std::size_t k = 1 + gen() % std::min<std::size_t>( v, 4 );
    const auto e = encode_clique( g, k );
    const auto b = id_bits( v );
    const auto ve = v + g.num_edges();
    CHECK( e.input.length() >= ve * b );
    CHECK( e.input.length() <= 3 * ve * b );
    CHECK( e.input.length() == k * b + v * ( 1 + b ) + g.num_edges() * ( 1 + 2 * b ) );
  }
}

TEST_CASE( "DIMACS graphs" )
{
  const auto g = parse_dimacs_graph( "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n" );
  CHECK( g.num_vertices() == 3 );
  CHECK( g.num_edges() == 3 );
  CHECK( g.adjacent( 2, 0 ) );
  CHECK( parse_dimacs_graph( "p col 2 1\ne 1 2\n" ).num_edges() == 1 );
  CHECK( kind_of( [] { parse_dimacs_graph( "e 1 2\n" ); } ) == "ParseError" );
  CHECK( kind_of( [] { parse_dimacs_graph( "p edge 3 2\ne 1 2\n" ); } ) == "ParseError" );
  CHECK( kind_of( [] { parse_dimacs_graph( "p edge 3 1\ne 1 x\n" ); } ) == "ParseError" );
  CHECK( kind_of( [] { parse_dimacs_graph( "p edge 3 1\ne 1 4\n" ); } ) != "none" );
  CHECK( id_bits( 1 ) == 1 );
  CHECK( id_bits( 2 ) == 1 );
  CHECK( id_bits( 5 ) == 3 );
  CHECK( id_bits( 16 ) == 4 );
}
