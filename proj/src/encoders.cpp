#include <forge/encoders.hpp>

#include <forge/builtins.hpp>
#include <forge/error.hpp>

#include <sstream>

namespace forge
{

namespace
{

void append_bits( std::vector<symbol>& out, std::uint64_t value, std::size_t width )
{
  for ( std::size_t i = width; i-- > 0; )
    out.push_back( ( ( value >> i ) & 1 ) ? symbol::one : symbol::zero );
}

void check_k( const graph& g, std::size_t k )
{
  if ( k < 1 || k > g.num_vertices() )
    throw error( "KOutOfRange", "k = " + std::to_string( k ) + " with " + std::to_string( g.num_vertices() ) +
                                    " vertices" );
}

dtiwi_instance make_instance( std::string name, std::size_t placeholders, const std::string& verifier,
                              const std::string& witness, bound_expr time )
{
  dtiwi_instance inst;
  inst.name = std::move( name );
  inst.universe = universe_template::parse( "p^" + std::to_string( placeholders ) + "{01}*" );
  inst.verifier_name = verifier;
  inst.verifier = std::make_shared<machine>( builtin( verifier ) );
  inst.witness = bound_expr::parse( witness );
  inst.time = std::move( time );
  return inst;
}

} // namespace

graph::graph( std::size_t num_vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges )
    : v_( num_vertices )
{
  for ( auto [u, w] : edges )
  {
    if ( u >= v_ || w >= v_ )
      throw error( "InvalidGraph", "edge endpoint out of range" );
    if ( u == w )
      throw error( "InvalidGraph", "self-loop at " + std::to_string( u ) );
    edges_.emplace( std::min( u, w ), std::max( u, w ) );
  }
}

bool graph::adjacent( std::size_t u, std::size_t w ) const
{
  return edges_.count( { std::min( u, w ), std::max( u, w ) } ) > 0;
}

graph parse_dimacs_graph( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::size_t v = 0, declared = 0;
  bool header = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t lineno = 0;
  for ( std::string line; std::getline( in, line ); )
  {
    ++lineno;
    std::istringstream words( line );
    std::string first;
    if ( !( words >> first ) || first == "c" )
      continue;
    if ( first == "p" )
    {
      std::string kind;
      if ( !( words >> kind >> v >> declared ) || ( kind != "edge" && kind != "col" ) )
        throw error( "ParseError", "line " + std::to_string( lineno ) + ": bad 'p edge' header" );
      header = true;
      continue;
    }
    if ( first != "e" || !header )
      throw error( "ParseError", "line " + std::to_string( lineno ) + ": expected an edge line" );
    std::size_t u = 0, w = 0;
    if ( !( words >> u >> w ) || u == 0 || w == 0 )
      throw error( "ParseError", "line " + std::to_string( lineno ) + ": bad edge" );
    edges.emplace_back( u - 1, w - 1 );
  }
  if ( !header )
    throw error( "ParseError", "missing 'p edge' header" );
  if ( edges.size() != declared )
    throw error( "ParseError", "header declares " + std::to_string( declared ) + " edges, found " +
                                   std::to_string( edges.size() ) );
  return graph( v, edges );
}

std::size_t id_bits( std::size_t num_vertices )
{
  return std::max<std::size_t>( 1, log2ceil( num_vertices ) );
}

encoded encode_sat( const cnf& formula )
{
  const auto v = formula.num_vars;
  if ( v == 0 )
    throw error( "InvalidFormula", "at least one variable required" );
  const auto b = id_bits( v );
  std::vector<symbol> chars( v, symbol::placeholder );
  for ( const auto& clause : formula.clauses )
  {
    for ( const auto& l : clause )
    {
      if ( l.var >= v )
        throw error( "VariableOutOfRange", "variable " + std::to_string( l.var ) );
      chars.push_back( symbol::one );
      chars.push_back( l.negated ? symbol::one : symbol::zero );
      append_bits( chars, l.var, b );
    }
    chars.push_back( symbol::zero );
  }
  auto inst = make_instance( "sat", v, "cnf_verifier:" + std::to_string( v ), std::to_string( v ),
                             cnf_verifier_time() );
  return { pstring( std::move( chars ) ), std::move( inst ) };
}

encoded encode_circuit_sat( const circuit& c )
{
  const auto inputs = c.num_inputs();
  std::vector<symbol> chars( inputs, symbol::placeholder );
  for ( const auto byte : serialize( c ) )
    append_bits( chars, byte, 8 );
  auto inst = make_instance( "circuit-sat", inputs,
                             "circuit_verifier:" + std::to_string( c.size() ) + ":" + std::to_string( inputs ),
                             "cdiv(n, log2ceil(n))", circuit_verifier_time() );
  pstring x( std::move( chars ) );
  if ( inst.witness( x.length() ) < inputs )
    throw error( "WitnessBoundTooSmall", "circuit has more inputs than the witness bound allows" );
  return { std::move( x ), std::move( inst ) };
}

encoded encode_clique( const graph& g, std::size_t k )
{
  check_k( g, k );
  const auto b = id_bits( g.num_vertices() );
  std::vector<symbol> chars( k * b, symbol::placeholder );
  for ( std::size_t u = 0; u < g.num_vertices(); ++u )
  {
    chars.push_back( symbol::zero );
    append_bits( chars, u, b );
  }
  for ( const auto& [u, w] : g.edges() )
  {
    chars.push_back( symbol::one );
    append_bits( chars, u, b );
    append_bits( chars, w, b );
  }
  auto inst = make_instance( "clique", k * b, "clique_verifier:" + std::to_string( k ) + ":" + std::to_string( b ),
                             std::to_string( k ) + "*log2ceil(n)", clique_verifier_time( k ) );
  pstring x( std::move( chars ) );
  if ( inst.witness( x.length() ) < k * b )
    throw error( "WitnessBoundTooSmall", "encoding too short for the witness bound" );
  return { std::move( x ), std::move( inst ) };
}

circuit clique_gadget_circuit( const graph& g, std::size_t k )
{
  check_k( g, k );
  const auto v = g.num_vertices();
  const auto b = id_bits( v );
  circuit_builder cb( k * b );
  using signal = circuit_builder::signal;

  auto bit = [&]( std::size_t slot, std::size_t i ) { return cb.input( slot * b + i ); };

  // id < v, comparing MSB first against the constant v
  auto less_than_v = [&]( std::size_t slot ) {
    signal lt = cb.constant( false ), eq = cb.constant( true );
    for ( std::size_t i = 0; i < b; ++i )
    {
      const bool vb = ( v >> ( b - 1 - i ) ) & 1;
      const auto x = bit( slot, i );
      if ( vb )
      {
        lt = cb.or_( lt, cb.and_( eq, cb.not_( x ) ) );
        eq = cb.and_( eq, x );
      }
      else
        eq = cb.and_( eq, cb.not_( x ) );
    }
    // ids are b bits wide, so v >= 2^b means every id is in range
    return ( v >> b ) ? cb.constant( true ) : lt;
  };

  auto equal = [&]( std::size_t a, std::size_t c ) {
    std::vector<signal> same;
    for ( std::size_t i = 0; i < b; ++i )
      same.push_back( cb.not_( cb.xor_( bit( a, i ), bit( c, i ) ) ) );
    return cb.and_all( same );
  };

  // multiplexer tree over the 2b selector bits (slot a first, then slot c)
  auto adjacency = [&]( std::size_t a, std::size_t c ) {
    const std::size_t sel = 2 * b;
    std::vector<signal> level;
    for ( std::size_t code = 0; code < ( std::size_t{ 1 } << sel ); ++code )
    {
      const auto u = code >> b, w = code & ( ( std::size_t{ 1 } << b ) - 1 );
      level.push_back( cb.constant( u < v && w < v && g.adjacent( u, w ) ) );
    }
    for ( std::size_t i = sel; i-- > 0; )
    {
      const auto s = i < b ? bit( a, i ) : bit( c, i - b );
      std::vector<signal> up;
      for ( std::size_t j = 0; j + 1 < level.size(); j += 2 )
        up.push_back( cb.mux( s, level[j + 1], level[j] ) );
      level = std::move( up );
    }
    return level.front();
  };

  std::vector<signal> checks;
  for ( std::size_t a = 0; a < k; ++a )
    checks.push_back( less_than_v( a ) );
  for ( std::size_t a = 0; a < k; ++a )
    for ( std::size_t c = a + 1; c < k; ++c )
    {
      checks.push_back( cb.not_( equal( a, c ) ) );
      checks.push_back( adjacency( a, c ) );
    }
  return cb.build( cb.and_all( checks ) );
}

std::vector<std::size_t> decode_clique_witness( const bit_string& bits, std::size_t k, std::size_t bits_per_id )
{
  std::vector<std::size_t> ids( k, 0 );
  for ( std::size_t a = 0; a < k; ++a )
    for ( std::size_t i = 0; i < bits_per_id; ++i )
    {
      const auto pos = a * bits_per_id + i;
      ids[a] = 2 * ids[a] + ( pos < bits.size() && bits[pos] );
    }
  return ids;
}

std::optional<std::vector<std::size_t>> find_clique_by_subsets( const graph& g, std::size_t k )
{
  check_k( g, k );
  std::vector<std::size_t> pick;
  std::optional<std::vector<std::size_t>> found;
  auto extend = [&]( auto&& self, std::size_t from ) -> bool {
    if ( pick.size() == k )
    {
      found = pick;
      return true;
    }
    for ( std::size_t u = from; u < g.num_vertices(); ++u )
    {
      bool ok = true;
      for ( auto x : pick )
        ok = ok && g.adjacent( x, u );
      if ( !ok )
        continue;
      pick.push_back( u );
      if ( self( self, u + 1 ) )
        return true;
      pick.pop_back();
    }
    return false;
  };
  extend( extend, 0 );
  return found;
}

} // namespace forge
