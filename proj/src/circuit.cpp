#include <forge/circuit.hpp>

#include <forge/error.hpp>

#include <algorithm>
#include <limits>

namespace forge
{

circuit::circuit( std::vector<gate> nodes, std::size_t num_inputs )
    : nodes_( std::move( nodes ) ), num_inputs_( num_inputs )
{
  if ( nodes_.empty() )
    throw error( "InvalidCircuit", "circuit has no nodes" );
  std::vector<bool> seen( num_inputs_, false );
  for ( std::uint32_t i = 0; i < nodes_.size(); ++i )
  {
    const auto& g = nodes_[i];
    switch ( g.kind )
    {
    case gate_kind::input:
      if ( g.a >= num_inputs_ )
        throw error( "BadInputIndex", "input " + std::to_string( g.a ) );
      if ( seen[g.a] )
        throw error( "DuplicateInput", "input " + std::to_string( g.a ) );
      seen[g.a] = true;
      break;
    case gate_kind::constant:
      if ( g.a > 1 )
        throw error( "InvalidCircuit", "constant must be 0 or 1" );
      ++num_gates_;
      break;
    case gate_kind::not_gate:
      if ( g.a >= i )
        throw error( "ForwardReference", "node " + std::to_string( i ) );
      ++num_gates_;
      break;
    case gate_kind::and_gate:
    case gate_kind::or_gate:
      if ( g.a >= i || g.b >= i )
        throw error( "ForwardReference", "node " + std::to_string( i ) );
      ++num_gates_;
      break;
    }
  }
}

bool evaluate( const circuit& c, const bit_string& assignment )
{
  if ( assignment.size() != c.num_inputs() )
    throw error( "AssignmentLengthMismatch",
                 std::to_string( assignment.size() ) + " bits for " + std::to_string( c.num_inputs() ) + " inputs" );
  std::vector<bool> v( c.size() );
  const auto& nodes = c.nodes();
  for ( std::size_t i = 0; i < nodes.size(); ++i )
  {
    const auto& g = nodes[i];
    switch ( g.kind )
    {
    case gate_kind::input:
      v[i] = assignment[g.a];
      break;
    case gate_kind::constant:
      v[i] = g.a != 0;
      break;
    case gate_kind::not_gate:
      v[i] = !v[g.a];
      break;
    case gate_kind::and_gate:
      v[i] = v[g.a] && v[g.b];
      break;
    case gate_kind::or_gate:
      v[i] = v[g.a] || v[g.b];
      break;
    }
  }
  return v.back();
}

std::uint64_t evaluate_lanes( const circuit& c, std::span<const std::uint64_t> input_words,
                              std::vector<std::uint64_t>& v )
{
  const auto& nodes = c.nodes();
  v.resize( nodes.size() );
  for ( std::size_t i = 0; i < nodes.size(); ++i )
  {
    const auto& g = nodes[i];
    switch ( g.kind )
    {
    case gate_kind::input:
      v[i] = input_words[g.a];
      break;
    case gate_kind::constant:
      v[i] = g.a ? ~std::uint64_t{ 0 } : 0;
      break;
    case gate_kind::not_gate:
      v[i] = ~v[g.a];
      break;
    case gate_kind::and_gate:
      v[i] = v[g.a] & v[g.b];
      break;
    case gate_kind::or_gate:
      v[i] = v[g.a] | v[g.b];
      break;
    }
  }
  return v.back();
}

circuit specialize( const circuit& c, const std::map<std::size_t, bool>& partial )
{
  for ( const auto& [index, value] : partial )
    if ( index >= c.num_inputs() )
      throw error( "BadInputIndex", "input " + std::to_string( index ) );

  std::vector<std::size_t> renumber( c.num_inputs() );
  std::size_t remaining = 0;
  for ( std::size_t i = 0; i < c.num_inputs(); ++i )
    if ( !partial.count( i ) )
      renumber[i] = remaining++;

  circuit_builder b( remaining );
  std::vector<circuit_builder::signal> map( c.size() );
  const auto& nodes = c.nodes();
  for ( std::size_t i = 0; i < nodes.size(); ++i )
  {
    const auto& g = nodes[i];
    switch ( g.kind )
    {
    case gate_kind::input:
      if ( const auto it = partial.find( g.a ); it != partial.end() )
        map[i] = b.constant( it->second );
      else
        map[i] = b.input( renumber[g.a] );
      break;
    case gate_kind::constant:
      map[i] = b.constant( g.a != 0 );
      break;
    case gate_kind::not_gate:
      map[i] = b.not_( map[g.a] );
      break;
    case gate_kind::and_gate:
      map[i] = b.and_( map[g.a], map[g.b] );
      break;
    case gate_kind::or_gate:
      map[i] = b.or_( map[g.a], map[g.b] );
      break;
    }
  }
  return b.build( map.back() );
}

circuit_stats stats( const circuit& c )
{
  std::vector<std::size_t> depth( c.size(), 0 );
  const auto& nodes = c.nodes();
  for ( std::size_t i = 0; i < nodes.size(); ++i )
  {
    const auto& g = nodes[i];
    switch ( g.kind )
    {
    case gate_kind::input:
    case gate_kind::constant:
      break;
    case gate_kind::not_gate:
      depth[i] = depth[g.a] + 1;
      break;
    default:
      depth[i] = std::max( depth[g.a], depth[g.b] ) + 1;
    }
  }
  return { c.num_gates(), c.num_inputs(), depth.back() };
}

circuit cnf_to_circuit( const cnf& formula )
{
  circuit_builder b( formula.num_vars );
  std::vector<circuit_builder::signal> clause_out;
  for ( const auto& clause : formula.clauses )
  {
    if ( clause.empty() )
    {
      clause_out.push_back( b.constant( false ) );
      continue;
    }
    std::vector<circuit_builder::signal> lits;
    for ( const auto& l : clause )
    {
      if ( l.var >= formula.num_vars )
        throw error( "VariableOutOfRange", "variable " + std::to_string( l.var ) );
      const auto x = b.input( l.var );
      lits.push_back( l.negated ? b.not_( x ) : x );
    }
    clause_out.push_back( b.or_all( lits ) );
  }
  if ( clause_out.empty() )
    return b.build( b.constant( true ) );
  return b.build( b.and_all( clause_out ) );
}

// builder

circuit_builder::circuit_builder( std::size_t num_inputs, bool fold )
    : num_inputs_( num_inputs ), fold_( fold ), inputs_( num_inputs, std::numeric_limits<signal>::max() ),
      const_{ std::numeric_limits<signal>::max(), std::numeric_limits<signal>::max() }
{
}

circuit_builder::signal circuit_builder::add( gate g )
{
  if ( fold_ )
  {
    const std::uint64_t key = ( std::uint64_t( g.kind ) << 60 ) | ( std::uint64_t( g.a ) << 30 ) | g.b;
    const auto [it, fresh] = strash_.emplace( key, static_cast<signal>( nodes_.size() ) );
    if ( !fresh )
      return it->second;
  }
  nodes_.push_back( g );
  return static_cast<signal>( nodes_.size() - 1 );
}

circuit_builder::signal circuit_builder::input( std::size_t index )
{
  if ( index >= num_inputs_ )
    throw error( "BadInputIndex", "input " + std::to_string( index ) );
  if ( inputs_[index] == std::numeric_limits<signal>::max() )
  {
    nodes_.push_back( { gate_kind::input, static_cast<std::uint32_t>( index ), 0 } );
    inputs_[index] = static_cast<signal>( nodes_.size() - 1 );
  }
  return inputs_[index];
}

circuit_builder::signal circuit_builder::constant( bool value )
{
  if ( !fold_ )
    return add( { gate_kind::constant, value, 0 } );
  auto& c = const_[value];
  if ( c == std::numeric_limits<signal>::max() )
  {
    nodes_.push_back( { gate_kind::constant, value, 0 } );
    c = static_cast<signal>( nodes_.size() - 1 );
  }
  return c;
}

bool circuit_builder::is_constant( signal s, bool value ) const
{
  return nodes_[s].kind == gate_kind::constant && ( nodes_[s].a != 0 ) == value;
}

circuit_builder::signal circuit_builder::not_( signal a )
{
  if ( fold_ )
  {
    const auto& g = nodes_[a];
    if ( g.kind == gate_kind::constant )
      return constant( g.a == 0 );
    if ( g.kind == gate_kind::not_gate )
      return g.a;
  }
  return add( { gate_kind::not_gate, a, 0 } );
}

circuit_builder::signal circuit_builder::and_( signal a, signal b )
{
  if ( fold_ )
  {
    if ( is_constant( a, false ) || is_constant( b, false ) )
      return constant( false );
    if ( is_constant( a, true ) )
      return b;
    if ( is_constant( b, true ) || a == b )
      return a;
    const auto& ga = nodes_[a];
    const auto& gb = nodes_[b];
    if ( ( ga.kind == gate_kind::not_gate && ga.a == b ) || ( gb.kind == gate_kind::not_gate && gb.a == a ) )
      return constant( false );
    if ( a > b )
      std::swap( a, b );
  }
  return add( { gate_kind::and_gate, a, b } );
}

circuit_builder::signal circuit_builder::or_( signal a, signal b )
{
  if ( fold_ )
  {
    if ( is_constant( a, true ) || is_constant( b, true ) )
      return constant( true );
    if ( is_constant( a, false ) )
      return b;
    if ( is_constant( b, false ) || a == b )
      return a;
    const auto& ga = nodes_[a];
    const auto& gb = nodes_[b];
    if ( ( ga.kind == gate_kind::not_gate && ga.a == b ) || ( gb.kind == gate_kind::not_gate && gb.a == a ) )
      return constant( true );
    if ( a > b )
      std::swap( a, b );
  }
  return add( { gate_kind::or_gate, a, b } );
}

circuit_builder::signal circuit_builder::xor_( signal a, signal b )
{
  return or_( and_( a, not_( b ) ), and_( not_( a ), b ) );
}

circuit_builder::signal circuit_builder::mux( signal sel, signal then_, signal else_ )
{
  if ( then_ == else_ )
    return then_;
  return or_( and_( sel, then_ ), and_( not_( sel ), else_ ) );
}

circuit_builder::signal circuit_builder::and_all( std::span<const signal> xs )
{
  if ( xs.empty() )
    return constant( true );
  auto acc = xs[0];
  for ( std::size_t i = 1; i < xs.size(); ++i )
    acc = and_( acc, xs[i] );
  return acc;
}

circuit_builder::signal circuit_builder::or_all( std::span<const signal> xs )
{
  if ( xs.empty() )
    return constant( false );
  auto acc = xs[0];
  for ( std::size_t i = 1; i < xs.size(); ++i )
    acc = or_( acc, xs[i] );
  return acc;
}

circuit circuit_builder::build( signal output, bool prune ) const
{
  if ( !prune )
  {
    if ( output + 1 != nodes_.size() )
      throw error( "InvalidCircuit", "unpruned build requires the output to be the last node" );
    return circuit( nodes_, num_inputs_ );
  }
  std::vector<bool> live( output + 1, false );
  live[output] = true;
  for ( std::size_t i = output + 1; i-- > 0; )
  {
    if ( !live[i] )
      continue;
    const auto& g = nodes_[i];
    if ( g.kind == gate_kind::not_gate )
      live[g.a] = true;
    else if ( g.kind == gate_kind::and_gate || g.kind == gate_kind::or_gate )
      live[g.a] = live[g.b] = true;
  }
  std::vector<std::uint32_t> index( output + 1 );
  std::vector<gate> out;
  for ( std::size_t i = 0; i <= output; ++i )
  {
    if ( !live[i] )
      continue;
    auto g = nodes_[i];
    if ( g.kind == gate_kind::not_gate )
      g.a = index[g.a];
    else if ( g.kind == gate_kind::and_gate || g.kind == gate_kind::or_gate )
    {
      g.a = index[g.a];
      g.b = index[g.b];
    }
    index[i] = static_cast<std::uint32_t>( out.size() );
    out.push_back( g );
  }
  return circuit( std::move( out ), num_inputs_ );
}

} // namespace forge
