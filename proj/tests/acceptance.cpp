// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "support.hpp"

#include <forge/builtins.hpp>
#include <forge/compiler.hpp>
#include <forge/dtiwi.hpp>
#include <forge/encoders.hpp>
#include <forge/error.hpp>
#include <forge/random.hpp>
#include <forge/solver.hpp>
#include <forge/tradeoff.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace forge;
using forge::test::all_strings;
using forge::test::bit_text;
using forge::test::fill_by_hand;

namespace
{

struct verdict_line
{
  bool pass = true;
  std::ostringstream detail;

  void fail( const std::string& why )
  {
    if ( pass )
      detail << "first failure: " << why << "; ";
    pass = false;
  }
};

bool accepts( const machine& tm, const pstring& x, std::uint64_t T ) { return run( tm, x, T ).outcome == verdict::accept; }

dtiwi_instance make_instance( const std::string& universe, const std::string& verifier, const std::string& witness,
                              const std::string& time )
{
  dtiwi_instance inst;
  inst.name = verifier;
  inst.universe = universe_template::parse( universe );
  inst.verifier = std::make_shared<machine>( builtin( verifier ) );
  inst.verifier_name = verifier;
  inst.witness = bound_expr::parse( witness );
  inst.time = bound_expr::parse( time );
  return inst;
}

// 1. worked examples -------------------------------------------------------

void worked_examples( verdict_line& v )
{
  const auto filled = apply_filling( parse_pstring( "11p01p0p" ), bit_string::parse( "0110" ) ).str();
  if ( filled != "11001101" )
    v.fail( "apply_filling gave " + filled );

  const std::set<std::string> expected = { "0p1p", "0p10", "0p11", "001p", "0010",
                                           "0011", "011p", "0110", "0111" };
  std::set<std::string> got;
  for ( const auto& s : closure_of( { parse_pstring( "0p1p" ) } ) )
    got.insert( s.str() );
  if ( got != expected )
    v.fail( "closure_of({0p1p}) has " + std::to_string( got.size() ) + " elements" );
  v.detail << "apply_filling = " << filled << ", |closure| = " << got.size();
}

// 2. compiler soundness ----------------------------------------------------

struct interface_check
{
  std::size_t interfaces = 0, assignments = 0, mismatches = 0;
};

/// Exposes `positions` of x (index order given by `order`) and compares every
/// assignment against direct execution.
void check_interface( const machine& tm, const std::string& x, const std::vector<std::size_t>& positions,
                      const std::vector<std::uint32_t>& order, std::uint64_t T, interface_check& out )
{
  compile_spec spec;
  spec.tm = &tm;
  spec.time_bound = T;
  for ( char c : x )
    spec.input.push_back( hardwired{ c } );
  for ( std::size_t i = 0; i < positions.size(); ++i )
    spec.input[positions[i]] = exposed_bit{ order[i] };
  const auto c = compile( spec );
  ++out.interfaces;
  const auto e = positions.size();
  const std::uint64_t total = std::uint64_t{ 1 } << e;
  std::vector<std::uint64_t> words( e ), scratch;
  for ( std::uint64_t base = 0; base < total; base += 64 )
  {
    // lane l holds assignment base + l, input 0 being the most significant bit
    std::fill( words.begin(), words.end(), 0 );
    const auto lanes = std::min<std::uint64_t>( 64, total - base );
    for ( std::uint64_t l = 0; l < lanes; ++l )
      for ( std::size_t i = 0; i < e; ++i )
        if ( ( ( base + l ) >> ( e - 1 - i ) ) & 1 )
          words[i] |= std::uint64_t{ 1 } << l;
    const auto results = evaluate_lanes( c, words, scratch );
    for ( std::uint64_t l = 0; l < lanes; ++l )
    {
      const auto bits = bit_string::from_uint( base + l, e );
      auto y = x;
      for ( std::size_t i = 0; i < e; ++i )
        y[positions[i]] = bits[order[i]] ? '1' : '0';
      ++out.assignments;
      if ( ( ( results >> l ) & 1 ) != accepts( tm, parse_pstring( y ), T ) )
        ++out.mismatches;
    }
  }
}

void compiler_soundness( verdict_line& v )
{
  rng gen( 2024 );
  interface_check total;
  std::size_t machines = 0;

  // simple fixtures: every exposed subset of every string of length <= 5
  for ( const auto* name : { "all_zeros", "parity", "equal_halves", "loop" } )
  {
    const auto tm = builtin( name );
    const auto bound = builtin_time_bound( name );
    ++machines;
    for ( std::size_t n = 1; n <= 5; ++n )
      for ( std::uint32_t mask = 0; mask < ( 1u << n ); ++mask )
      {
        std::vector<std::size_t> positions;
        for ( std::size_t j = 0; j < n; ++j )
          if ( ( mask >> j ) & 1 )
            positions.push_back( j );
        std::vector<std::uint32_t> order( positions.size() );
        std::iota( order.begin(), order.end(), 0u );
        for ( const auto& rest : all_strings( n - positions.size(), "01p" ) )
        {
          std::string x( n, '0' );
          for ( std::size_t j = 0, r = 0; j < n; ++j )
            if ( !( ( mask >> j ) & 1 ) )
              x[j] = rest[r++];
          check_interface( tm, x, positions, order, bound( n ), total );
          std::reverse( order.begin(), order.end() );
          check_interface( tm, x, positions, order, bound( n ), total );
          std::reverse( order.begin(), order.end() );
        }
      }
    // ten exposed bits at random positions in longer strings, shuffled indices
    for ( int t = 0; t < 6; ++t )
    {
      const std::size_t n = 10 + gen() % 5;
      std::string x = random_pstring( gen, n, gen() % 3 ).str();
      std::vector<std::size_t> all( n );
      std::iota( all.begin(), all.end(), 0 );
      std::shuffle( all.begin(), all.end(), gen );
      std::vector<std::size_t> positions( all.begin(), all.begin() + 10 );
      std::sort( positions.begin(), positions.end() );
      std::vector<std::uint32_t> order( 10 );
      std::iota( order.begin(), order.end(), 0u );
      std::shuffle( order.begin(), order.end(), gen );
      check_interface( tm, x, positions, order, bound( n ), total );
    }
  }

  // verifier fixtures: witness cells plus further exposed cells, up to ten bits
  auto verifier_case = [&]( const encoded& e, std::size_t max_exposed ) {
    const auto& x = e.input.str();
    const auto T = e.instance.time( x.size() );
    std::vector<std::size_t> positions = e.input.positions();
    std::vector<std::size_t> others;
    for ( std::size_t j = 0; j < x.size(); ++j )
      if ( x[j] != 'p' )
        others.push_back( j );
    std::shuffle( others.begin(), others.end(), gen );
    const auto extra = std::min<std::size_t>( others.size(), max_exposed - positions.size() );
    positions.insert( positions.end(), others.begin(), others.begin() + gen() % ( extra + 1 ) );
    std::sort( positions.begin(), positions.end() );
    std::vector<std::uint32_t> order( positions.size() );
    std::iota( order.begin(), order.end(), 0u );
    std::shuffle( order.begin(), order.end(), gen );
    auto hard = x;
    for ( auto j : positions )
      hard[j] = '0';
    check_interface( *e.instance.verifier, hard, positions, order, T, total );
  };
  machines += 3;
  const circuit negation( { { gate_kind::input, 0 }, { gate_kind::not_gate, 0 } }, 1 );
  const circuit conjunction( { { gate_kind::input, 0 }, { gate_kind::input, 1 }, { gate_kind::and_gate, 0, 1 } },
                             2 );
  for ( int t = 0; t < 6; ++t )
  {
    verifier_case( encode_sat( random_cnf( gen, 2 + gen() % 2, 2, 2 ) ), 10 );
    verifier_case( encode_clique( random_graph( gen, 2 + gen() % 3, 60 ), 1 + gen() % 2 ), 10 );
    verifier_case( encode_circuit_sat( t % 2 ? negation : conjunction ), 4 );
  }

  if ( total.mismatches != 0 )
    v.fail( std::to_string( total.mismatches ) + " mismatching assignments" );
  if ( machines < 5 )
    v.fail( "fewer than 5 machines" );
  v.detail << machines << " machines, " << total.interfaces << " interfaces, " << total.assignments
           << " assignments, " << total.mismatches << " mismatches";
}

// 3. circuit family vs brute force ------------------------------------------

void pipeline_equivalence( verdict_line& v )
{
  rng gen( 77 );
  const std::vector<std::string> universes = { "{01p}*", "{01p}*", "{01p}*", "p^2{01p}*", "{01}p{01p}*", "{0p}*" };
  const std::vector<std::string> witnesses = { "0", "1", "2", "3", "log2ceil(n)", "cdiv(n, 3)", "n" };
  const std::vector<std::string> verifiers = { "parity", "all_zeros", "equal_halves" };
  std::size_t pairs = 0, members = 0, in_universe = 0, mismatches = 0;

  auto compare = [&]( const dtiwi_instance& inst, const pstring& x ) {
    if ( x.length() > 24 || x.pcount() > 10 )
      return;
    bruteforce_report br;
    circuit_report cr;
    const bool expected = decide_bruteforce( inst, x, &br );
    const bool got = decide_via_circuits( inst, x, {}, &cr );
    ++pairs;
    members += expected;
    in_universe += br.in_universe;
    if ( got != expected )
    {
      ++mismatches;
      v.fail( inst.name + " on " + x.str() );
    }
    else if ( got && apply_filling( x, *cr.witness ) != apply_filling( x, *br.witness ) &&
              !accepts( *inst.verifier, apply_filling( x, *cr.witness ), inst.time( x.length() ) ) )
      v.fail( "circuit witness rejected on " + x.str() );
  };

  for ( int t = 0; t < 90; ++t )
  {
    const auto& name = verifiers[gen() % verifiers.size()];
    auto inst = make_instance( universes[gen() % universes.size()], name, witnesses[gen() % witnesses.size()],
                               builtin_time_bound( name ).text() );
    inst.name = name + " over " + inst.universe.text() + " with w = " + inst.witness.text();
    const std::size_t n = 1 + gen() % 24;
    const std::size_t p = gen() % ( std::min<std::size_t>( n, 10 ) + 1 );
    compare( inst, random_pstring( gen, n, p ) );
  }
  // encoded instances, intact and with random cells turned into placeholders
  for ( int t = 0; t < 40; ++t )
  {
    encoded e = t % 2 == 0 ? encode_sat( random_cnf( gen, 2 + gen() % 2, 1 + gen() % 2, 2 ) )
                           : encode_clique( random_graph( gen, 3, 40 + gen() % 60 ), 2 );
    if ( e.input.length() > 24 )
      continue;
    compare( e.instance, e.input );
    auto s = e.input.str();
    for ( int k = 0; k < 2; ++k )
      s[gen() % s.size()] = "01p"[gen() % 3];
    compare( e.instance, parse_pstring( s ) );
  }
  if ( pairs < 100 )
    v.fail( "only " + std::to_string( pairs ) + " pairs" );
  v.detail << pairs << " pairs (" << in_universe << " in universe, " << members << " members), " << mismatches
           << " mismatches";
}

// 4. translation and padding laws --------------------------------------------

bool only_bits_outside( const std::string& x, std::initializer_list<std::size_t> free )
{
  for ( std::size_t i = 0; i < x.size(); ++i )
    if ( x[i] == 'p' && std::find( free.begin(), free.end(), i ) == free.end() )
      return false;
  return true;
}

bool odd_ones( const std::string& s )
{
  std::size_t ones = 0;
  for ( char c : s )
  {
    if ( c == 'p' )
      return false;
    ones += c == '1';
  }
  return ones % 2 == 1;
}

void transform_laws( verdict_line& v )
{
  std::size_t checked = 0, failures = 0;
  auto expect = [&]( bool ok, const std::string& what ) {
    ++checked;
    if ( !ok )
    {
      ++failures;
      v.fail( what );
    }
  };

  // toy 1: parity over p{01}p{01}*, witness 2 = 1 + 1
  {
    const auto inst = make_instance( "p{01}p{01}*", "parity", "2", "n + 1" );
    const auto out = translation_transform( inst, bound_expr::parse( "1" ), bound_expr::parse( "1" ) );
    for ( std::size_t n = 0; n <= 10; ++n )
      for ( const auto& s : all_strings( n, "01p" ) )
      {
        // x in Clo(U) and some filling of at most one placeholder has odd parity
        bool expected = n >= 3 && only_bits_outside( s, { 0, 2 } ) &&
                        ( odd_ones( s ) || odd_ones( fill_by_hand( s, "0" ) ) || odd_ones( fill_by_hand( s, "1" ) ) );
        expect( decide_bruteforce( out, parse_pstring( s ) ) == expected, "translation toy 1 on " + s );
      }
  }
  // toy 2: all_zeros over {0p}*, witness n + 1 = n + 1
  {
    const auto inst = make_instance( "{0p}*", "all_zeros", "n + 1", "n + 1" );
    const auto out = translation_transform( inst, bound_expr::parse( "n" ), bound_expr::parse( "1" ) );
    for ( std::size_t n = 0; n <= 10; ++n )
      for ( const auto& s : all_strings( n, "01p" ) )
      {
        const bool expected = s.find( '1' ) == std::string::npos;
        expect( decide_bruteforce( out, parse_pstring( s ) ) == expected, "translation toy 2 on " + s );
      }
    // zero split agrees with the original instance on its universe
    const auto same = translation_transform( inst, bound_expr::parse( "n + 1" ), bound_expr::parse( "0" ) );
    for ( std::size_t n = 0; n <= 10; ++n )
      for ( const auto& x : inst.universe.members( n ) )
        expect( decide_bruteforce( same, x ) == decide_bruteforce( inst, x ), "zero split on " + x.str() );
  }

  // padding: membership equivalence and codec round trips
  struct pad_case
  {
    const char* verifier;
    const char* witness;
    const char* f;
  };
  for ( const auto& pc : { pad_case{ "equal_halves", "1", "n^2 + 1" }, pad_case{ "parity", "2", "2*n + 3" } } )
  {
    const auto inst = make_instance( "{01p}*", pc.verifier, pc.witness, builtin_time_bound( pc.verifier ).text() );
    const auto f = bound_expr::parse( pc.f );
    const auto out = padding_transform( inst, f );
    for ( std::size_t n = 0; n <= 6; ++n )
      for ( const auto& s : all_strings( n, "01p" ) )
      {
        const auto x = parse_pstring( s );
        const auto y = pad( f, x );
        expect( y.length() == f( n ), "pad length" );
        expect( unpad( y ) == x, "unpad(pad(x)) for " + s );
        expect( strip_layers( out, y ) == x, "strip_layers for " + s );
        expect( decide_bruteforce( out, y ) == decide_bruteforce( inst, x ), std::string( pc.verifier ) + " on " + s );
      }
  }
  // pad(unpad(y)) = y on the padded universe
  {
    const auto f = bound_expr::parse( "2*n + 3" );
    for ( std::size_t n = 1; n <= 12; ++n )
      for ( const auto& s : all_strings( n, "01p" ) )
      {
        pstring core;
        try
        {
          core = unpad( parse_pstring( s ) );
        }
        catch ( const error& )
        {
          continue;
        }
        if ( f( core.length() ) == n )
          expect( pad( f, core ).str() == s, "pad(unpad(y)) for " + s );
      }
  }
  v.detail << checked << " checks, " << failures << " failures";
}

// 5. solver ----------------------------------------------------------------

circuit with_contradiction( const circuit& c )
{
  auto nodes = c.nodes();
  const auto out = c.output();
  std::uint32_t in0 = 0;
  while ( !( nodes[in0].kind == gate_kind::input && nodes[in0].a == 0 ) )
    ++in0;
  const auto n = static_cast<std::uint32_t>( nodes.size() );
  nodes.push_back( { gate_kind::not_gate, in0 } );
  nodes.push_back( { gate_kind::and_gate, out, n } );
  nodes.push_back( { gate_kind::and_gate, n + 1, in0 } );
  return circuit( std::move( nodes ), c.num_inputs() );
}

void solver_oracle( verdict_line& v )
{
  rng gen( 5150 );
  std::size_t sat = 0, strict_runs = 0, mismatches = 0;
  for ( int t = 0; t < 50; ++t )
  {
    const std::size_t inputs = 1 + gen() % 10;
    // every fifth circuit is large enough for the strict limit
    const bool strict_sized = t % 5 == 0 && inputs <= 7;
    const std::size_t gates = strict_sized ? ( std::size_t{ 1 } << inputs ) + gen() % 50 : 1 + gen() % 40;
    auto c = random_circuit( gen, inputs, gates );
    if ( t % 3 == 0 )
      c = with_contradiction( c );

    std::optional<bit_string> first;
    for ( std::uint64_t a = 0; a < ( std::uint64_t{ 1 } << inputs ) && !first; ++a )
    {
      const auto bits = bit_string::from_uint( a, inputs );
      if ( evaluate( c, bits ) )
        first = bits;
    }
    sat += first.has_value();

    const auto r1 = solve( c, solve_mode::lenient, 1 );
    const auto r8 = solve( c, solve_mode::lenient, 8 );
    bool ok = r1.sat == first.has_value() && ( !first || r1.witness == *first );
    ok = ok && r8.sat == r1.sat && r8.witness == r1.witness;
    ok = ok && r1.evaluations <= ( std::uint64_t{ 1 } << inputs ) && r8.evaluations <= ( std::uint64_t{ 1 } << inputs );
    if ( inputs <= strict_input_limit( c.num_gates() ) )
    {
      ++strict_runs;
      const auto s1 = solve( c, solve_mode::strict, 1 );
      const auto s8 = solve( c, solve_mode::strict, 8 );
      ok = ok && s1.sat == r1.sat && s1.witness == r1.witness && s8.sat == r1.sat && s8.witness == r1.witness;
      ok = ok && s1.evaluations <= 2 * c.num_gates() && s8.evaluations <= 2 * c.num_gates();
    }
    if ( !ok )
    {
      ++mismatches;
      v.fail( "circuit " + std::to_string( t ) );
    }
  }
  if ( strict_runs == 0 )
    v.fail( "no strict-mode circuit" );
  v.detail << "50 circuits (" << sat << " SAT), " << strict_runs << " strict, " << mismatches << " mismatches";
}

// 6. clique pipeline -------------------------------------------------------

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

void clique_pipeline( verdict_line& v )
{
  const auto start = std::chrono::steady_clock::now();
  rng gen( 4242 );
  std::size_t found = 0, disagreements = 0;
  for ( int t = 0; t < 40; ++t )
  {
    const std::size_t vcount = t < 10 ? 16 : 4 + gen() % 13;
    const std::size_t k = 2 + gen() % 3;
    const auto g = random_graph( gen, vcount, 10 + gen() % 60 );
    const bool subsets = find_clique_by_subsets( g, k ).has_value();
    const auto gadget = solve( clique_gadget_circuit( g, k ), solve_mode::lenient );
    const auto e = encode_clique( g, k );
    circuit_report r;
    const bool pipeline = decide_via_circuits( e.instance, e.input, {}, &r );
    found += subsets;
    bool ok = gadget.sat == subsets && pipeline == subsets;
    if ( gadget.sat )
      ok = ok && is_clique( g, decode_clique_witness( gadget.witness, k, id_bits( vcount ) ) );
    if ( pipeline )
      ok = ok && is_clique( g, decode_clique_witness( *r.witness, k, id_bits( vcount ) ) );
    if ( !ok )
    {
      ++disagreements;
      v.fail( "graph " + std::to_string( t ) );
    }
  }

  // two-path equality: gadget circuit vs compiled verifier on every assignment
  std::size_t compared = 0, differing = 0;
  for ( std::size_t vcount = 2; vcount <= 8; ++vcount )
    for ( std::size_t k = 1; k <= std::min<std::size_t>( 3, vcount ); ++k )
      for ( int rep = 0; rep < 2; ++rep )
      {
        const auto g = random_graph( gen, vcount, rep == 0 ? 50 : 85 );
        const auto e = encode_clique( g, k );
        const auto& x = e.input;
        const auto compiled = compile_on_pstring( *e.instance.verifier, x, x.pcount(), e.instance.time( x.length() ) );
        const auto gadget = clique_gadget_circuit( g, k );
        for ( std::uint64_t a = 0; a < ( std::uint64_t{ 1 } << x.pcount() ); ++a )
        {
          const auto bits = bit_string::from_uint( a, x.pcount() );
          ++compared;
          differing += evaluate( compiled, bits ) != evaluate( gadget, bits );
        }
      }
  if ( differing )
    v.fail( std::to_string( differing ) + " differing assignments" );

  const auto seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  if ( seconds > 600 )
    v.fail( "took longer than 10 minutes" );
  char buf[32];
  std::snprintf( buf, sizeof buf, "%.1f", seconds );
  v.detail << "40 graphs (" << found << " with a clique), " << disagreements << " disagreements; " << compared
           << " two-path assignments, " << differing << " differing; " << buf << " s";
}

// 7. trade-off arithmetic --------------------------------------------------

void tradeoff_arithmetic( verdict_line& v )
{
  std::size_t rows = 0;
  for ( const auto* a : { "3/2", "11/10" } )
  {
    const auto alpha = parse_rational( a );
    rational power = 1;
    for ( const auto& r : tradeoff_table( alpha, 60, precision::exact ) )
    {
      power *= alpha;
      ++rows;
      if ( r.z * ( alpha - 1 ) != power - 1 || r.exponent != power )
        v.fail( std::string( "identity at alpha = " ) + a + ", k = " + std::to_string( r.k ) );
    }
  }
  for ( const auto* a : { "1.1", "1.5", "1.9", "3/2", "11/10" } )
  {
    const auto alpha = parse_rational( a );
    const double floor = alpha.convert_to<double>() - 1;
    for ( auto mode : { precision::exact, precision::floating } )
    {
      const auto table = tradeoff_table( alpha, 60, mode );
      for ( std::size_t k = 0; k < table.size(); ++k )
      {
        if ( table[k].ratio_f < floor - float_tolerance )
          v.fail( std::string( "ratio below alpha - 1 at alpha = " ) + a );
        if ( k > 0 && table[k].ratio_f > table[k - 1].ratio_f + float_tolerance )
          v.fail( std::string( "ratio increases at alpha = " ) + a );
      }
    }
  }
  const auto k = required_k_for_epsilon( parse_rational( "1.5" ), 1 );
  if ( k != 1 )
    v.fail( "required_k(1.5, 1) = " + std::to_string( k ) );
  v.detail << rows << " exact rows, required_k(1.5, 1) = " << k;
}

// 8. encoding lengths ------------------------------------------------------

std::size_t layout_bits( const circuit& c )
{
  const std::size_t largest = std::max<std::size_t>( { c.size(), c.num_inputs(), 1 } );
  std::size_t w = 0;
  while ( ( std::size_t{ 1 } << w ) < largest )
    ++w;
  std::size_t bits = 64;
  for ( const auto& g : c.nodes() )
  {
    switch ( g.kind )
    {
    case gate_kind::and_gate:
    case gate_kind::or_gate:
      bits += 3 + 2 * w;
      break;
    case gate_kind::not_gate:
    case gate_kind::input:
      bits += 3 + w;
      break;
    case gate_kind::constant:
      bits += 3 + 1;
      break;
    }
  }
  return bits;
}

void encoding_lengths( verdict_line& v )
{
  rng gen( 8888 );
  std::size_t circuits = 0, bad = 0;
  for ( int t = 0; t < 1000; ++t )
  {
    const std::size_t inputs = 1 + gen() % 40;
    auto c = random_circuit( gen, inputs, gen() % 300 );
    if ( t % 4 == 0 )
    {
      // constants are part of the layout too
      auto nodes = c.nodes();
      const auto out = c.output();
      nodes.push_back( { gate_kind::constant, static_cast<std::uint32_t>( gen() % 2 ) } );
      nodes.push_back( { gate_kind::or_gate, out, static_cast<std::uint32_t>( nodes.size() - 1 ) } );
      c = circuit( std::move( nodes ), inputs );
    }
    const auto bytes = serialize( c );
    const auto bits = layout_bits( c );
    ++circuits;
    if ( serialized_bits( c ) != bits || bytes.size() != ( bits + 7 ) / 8 || !( deserialize( bytes ) == c ) )
    {
      ++bad;
      v.fail( "circuit " + std::to_string( t ) );
    }
  }

  std::size_t graphs = 0;
  double lo = 1e9, hi = 0;
  for ( int t = 0; t < 200; ++t )
  {
    const std::size_t vcount = 1 + gen() % 16;
    const auto g = random_graph( gen, vcount, gen() % 101 );
    const auto e = encode_clique( g, 1 + gen() % std::min<std::size_t>( vcount, 4 ) );
    const double scale = double( vcount + g.num_edges() ) * double( id_bits( vcount ) );
    const double ratio = double( e.input.length() ) / scale;
    lo = std::min( lo, ratio );
    hi = std::max( hi, ratio );
    ++graphs;
    if ( ratio < 1.0 || ratio > 3.0 )
      v.fail( "clique length ratio " + std::to_string( ratio ) );
  }
  char buf[64];
  std::snprintf( buf, sizeof buf, "%.3f..%.3f", lo, hi );
  v.detail << circuits << " circuit layouts, " << bad << " off; " << graphs << " clique lengths, |x| / ((v+e) b) in "
           << buf;
}

} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<void( verdict_line& )>>> criteria = {
      { "worked examples", worked_examples },
      { "compiler soundness", compiler_soundness },
      { "circuit family equals brute force", pipeline_equivalence },
      { "translation and padding laws", transform_laws },
      { "solver against enumeration", solver_oracle },
      { "clique pipeline", clique_pipeline },
      { "trade-off arithmetic", tradeoff_arithmetic },
      { "encoding lengths", encoding_lengths },
  };
  bool all = true;
  for ( std::size_t i = 0; i < criteria.size(); ++i )
  {
    verdict_line v;
    const auto start = std::chrono::steady_clock::now();
    try
    {
      criteria[i].second( v );
    }
    catch ( const std::exception& e )
    {
      v.fail( std::string( "exception: " ) + e.what() );
    }
    const auto seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
    std::printf( "%s %zu %s: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                 v.detail.str().c_str(), seconds );
    std::fflush( stdout );
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
