#include <forge/circuit.hpp>

#include <forge/bound_expr.hpp>
#include <forge/error.hpp>

#include <algorithm>
#include <sstream>

namespace forge
{

namespace
{

class bit_writer
{
public:
  void put( std::uint64_t value, std::size_t width )
  {
    for ( std::size_t i = width; i-- > 0; )
    {
      if ( bits_ % 8 == 0 )
        bytes_.push_back( 0 );
      if ( ( value >> i ) & 1u )
        bytes_.back() |= std::uint8_t( 0x80u >> ( bits_ % 8 ) );
      ++bits_;
    }
  }

  std::vector<std::uint8_t> take() { return std::move( bytes_ ); }

private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bits_ = 0;
};

class bit_reader
{
public:
  explicit bit_reader( std::span<const std::uint8_t> bytes ) : bytes_( bytes ) {}

  std::uint64_t get( std::size_t width )
  {
    if ( pos_ + width > 8 * bytes_.size() )
      throw error( "TruncatedPayload", "payload ends inside a node" );
    std::uint64_t v = 0;
    for ( std::size_t i = 0; i < width; ++i, ++pos_ )
      v = ( v << 1 ) | ( ( bytes_[pos_ / 8] >> ( 7 - pos_ % 8 ) ) & 1u );
    return v;
  }

  std::size_t position() const noexcept { return pos_; }

private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

unsigned opcode_of( gate_kind k )
{
  switch ( k )
  {
  case gate_kind::input:
    return opcode::input;
  case gate_kind::constant:
    return opcode::constant;
  case gate_kind::not_gate:
    return opcode::not_gate;
  case gate_kind::and_gate:
    return opcode::and_gate;
  default:
    return opcode::or_gate;
  }
}

std::size_t node_bits( gate_kind k, std::size_t w )
{
  switch ( k )
  {
  case gate_kind::constant:
    return 3 + 1;
  case gate_kind::input:
  case gate_kind::not_gate:
    return 3 + w;
  default:
    return 3 + 2 * w;
  }
}

} // namespace

std::size_t operand_width( std::size_t num_nodes, std::size_t num_inputs )
{
  return log2ceil( std::max<std::size_t>( { num_nodes, num_inputs, 1 } ) );
}

std::size_t serialized_bits( const circuit& c )
{
  const auto w = operand_width( c.size(), c.num_inputs() );
  std::size_t bits = 64;
  for ( const auto& g : c.nodes() )
    bits += node_bits( g.kind, w );
  return bits;
}

std::vector<std::uint8_t> serialize( const circuit& c )
{
  const auto w = operand_width( c.size(), c.num_inputs() );
  bit_writer out;
  out.put( c.size(), 32 );
  out.put( c.num_inputs(), 32 );
  for ( const auto& g : c.nodes() )
  {
    out.put( opcode_of( g.kind ), 3 );
    switch ( g.kind )
    {
    case gate_kind::constant:
      out.put( g.a, 1 );
      break;
    case gate_kind::input:
    case gate_kind::not_gate:
      out.put( g.a, w );
      break;
    default:
      out.put( g.a, w );
      out.put( g.b, w );
    }
  }
  return out.take();
}

circuit deserialize( std::span<const std::uint8_t> bytes )
{
  if ( bytes.size() < 8 )
    throw error( "MalformedHeader", "fewer than 8 header bytes" );
  bit_reader in( bytes );
  const auto n = in.get( 32 );
  const auto inputs = in.get( 32 );
  if ( n == 0 )
    throw error( "MalformedHeader", "zero nodes" );
  if ( n > 8 * bytes.size() )
    throw error( "MalformedHeader", "node count exceeds payload" );
  const auto w = operand_width( n, inputs );

  auto operand = [&]( std::size_t self ) {
    const auto ref = in.get( w );
    if ( ref >= n )
      throw error( "DanglingReference", "node " + std::to_string( self ) + " references " + std::to_string( ref ) );
    if ( ref >= self )
      throw error( "ForwardReference", "node " + std::to_string( self ) + " references " + std::to_string( ref ) );
    return static_cast<std::uint32_t>( ref );
  };

  std::vector<gate> nodes;
  nodes.reserve( n );
  for ( std::size_t i = 0; i < n; ++i )
  {
    const auto op = in.get( 3 );
    switch ( op )
    {
    case opcode::input:
    {
      const auto idx = in.get( w );
      if ( idx >= inputs )
        throw error( "DanglingReference", "input index " + std::to_string( idx ) );
      nodes.push_back( { gate_kind::input, static_cast<std::uint32_t>( idx ), 0 } );
      break;
    }
    case opcode::constant:
      nodes.push_back( { gate_kind::constant, static_cast<std::uint32_t>( in.get( 1 ) ), 0 } );
      break;
    case opcode::not_gate:
      nodes.push_back( { gate_kind::not_gate, operand( i ), 0 } );
      break;
    case opcode::and_gate:
    case opcode::or_gate:
    {
      const auto a = operand( i );
      const auto b = operand( i );
      nodes.push_back( { op == opcode::and_gate ? gate_kind::and_gate : gate_kind::or_gate, a, b } );
      break;
    }
    default:
      throw error( "BadOpcode", "node " + std::to_string( i ) );
    }
  }
  const auto end = in.position();
  if ( ( end + 7 ) / 8 != bytes.size() )
    throw error( "MalformedHeader", "trailing bytes after the last node" );
  for ( auto pos = end; pos < 8 * bytes.size(); ++pos )
    if ( ( bytes[pos / 8] >> ( 7 - pos % 8 ) ) & 1u )
      throw error( "MalformedHeader", "nonzero padding" );
  return circuit( std::move( nodes ), inputs );
}

circuit parse_circuit_text( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::size_t inputs = 0;
  bool have_inputs = false;
  struct line_gate
  {
    std::size_t line;
    std::string name, op;
    std::vector<std::string> args;
  };
  std::vector<line_gate> lines;
  std::string output_name;

  std::size_t line_no = 0;
  for ( std::string line; std::getline( in, line ); )
  {
    ++line_no;
    if ( const auto hash = line.find( '#' ); hash != std::string::npos )
      line.erase( hash );
    std::istringstream words( line );
    std::vector<std::string> w;
    for ( std::string s; words >> s; )
      w.push_back( s );
    if ( w.empty() )
      continue;
    auto fail = [&]( const std::string& what ) {
      throw error( "ParseError", "line " + std::to_string( line_no ) + ": " + what );
    };
    if ( w[0] == "inputs:" && w.size() == 2 )
    {
      inputs = std::stoul( w[1] );
      have_inputs = true;
    }
    else if ( w[0] == "output:" && w.size() == 2 )
      output_name = w[1];
    else if ( w.size() >= 3 && w[1] == "=" )
      lines.push_back( { line_no, w[0], w[2], std::vector<std::string>( w.begin() + 3, w.end() ) } );
    else
      fail( "expected 'name = OP args'" );
  }
  if ( lines.empty() )
    throw error( "ParseError", "no gates" );

  if ( !have_inputs )
    for ( const auto& l : lines )
      if ( l.op == "INPUT" && l.args.size() == 1 )
        inputs = std::max<std::size_t>( inputs, std::stoul( l.args[0] ) + 1 );

  circuit_builder b( inputs, false );
  std::map<std::string, circuit_builder::signal> names;
  for ( const auto& l : lines )
  {
    auto fail = [&]( const std::string& what ) {
      throw error( "ParseError", "line " + std::to_string( l.line ) + ": " + what );
    };
    auto ref = [&]( const std::string& name ) {
      const auto it = names.find( name );
      if ( it == names.end() )
        fail( "undefined gate '" + name + "'" );
      return it->second;
    };
    auto arity = [&]( std::size_t k ) {
      if ( l.args.size() != k )
        fail( l.op + " takes " + std::to_string( k ) + " argument(s)" );
    };
    circuit_builder::signal s;
    if ( l.op == "INPUT" )
    {
      arity( 1 );
      s = b.input( std::stoul( l.args[0] ) );
    }
    else if ( l.op == "CONST" )
    {
      arity( 1 );
      if ( l.args[0] != "0" && l.args[0] != "1" )
        fail( "CONST takes 0 or 1" );
      s = b.constant( l.args[0] == "1" );
    }
    else if ( l.op == "NOT" )
    {
      arity( 1 );
      s = b.not_( ref( l.args[0] ) );
    }
    else if ( l.op == "AND" || l.op == "OR" )
    {
      arity( 2 );
      s = l.op == "AND" ? b.and_( ref( l.args[0] ), ref( l.args[1] ) ) : b.or_( ref( l.args[0] ), ref( l.args[1] ) );
    }
    else
      fail( "unknown gate '" + l.op + "'" );
    if ( !names.emplace( l.name, s ).second )
      fail( "duplicate gate name '" + l.name + "'" );
  }
  if ( !output_name.empty() && !names.count( output_name ) )
    throw error( "ParseError", "unknown output '" + output_name + "'" );
  const auto out = names.at( output_name.empty() ? lines.back().name : output_name );
  if ( out + 1 == b.size() )
    return b.build( out, false );
  return b.build( out );
}

std::string to_text( const circuit& c )
{
  std::ostringstream out;
  out << "inputs: " << c.num_inputs() << '\n';
  const auto& nodes = c.nodes();
  for ( std::size_t i = 0; i < nodes.size(); ++i )
  {
    const auto& g = nodes[i];
    out << 'g' << i << " = ";
    switch ( g.kind )
    {
    case gate_kind::input:
      out << "INPUT " << g.a;
      break;
    case gate_kind::constant:
      out << "CONST " << g.a;
      break;
    case gate_kind::not_gate:
      out << "NOT g" << g.a;
      break;
    case gate_kind::and_gate:
      out << "AND g" << g.a << " g" << g.b;
      break;
    case gate_kind::or_gate:
      out << "OR g" << g.a << " g" << g.b;
      break;
    }
    out << '\n';
  }
  return out.str();
}

bool cnf::evaluate( const std::vector<bool>& assignment ) const
{
  for ( const auto& clause : clauses )
  {
    bool sat = false;
    for ( const auto& l : clause )
      sat = sat || ( assignment.at( l.var ) != l.negated );
    if ( !sat )
      return false;
  }
  return true;
}

cnf parse_dimacs_cnf( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  cnf f;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<literal> current;
  for ( std::string line; std::getline( in, line ); )
  {
    std::istringstream words( line );
    std::string first;
    if ( !( words >> first ) || first == "c" || first[0] == 'c' || first == "%" )
      continue;
    if ( first == "p" )
    {
      std::string kind;
      if ( !( words >> kind >> f.num_vars >> declared_clauses ) || kind != "cnf" )
        throw error( "ParseError", "bad DIMACS header" );
      header = true;
      continue;
    }
    if ( !header )
      throw error( "ParseError", "clause before 'p cnf' header" );
    std::istringstream all( line );
    for ( long lit; all >> lit; )
    {
      if ( lit == 0 )
      {
        f.clauses.push_back( std::move( current ) );
        current.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>( lit < 0 ? -lit : lit );
      if ( var > f.num_vars )
        throw error( "VariableOutOfRange", "variable " + std::to_string( var ) );
      current.push_back( { static_cast<std::uint32_t>( var - 1 ), lit < 0 } );
    }
  }
  if ( !header )
    throw error( "ParseError", "missing 'p cnf' header" );
  if ( !current.empty() )
    f.clauses.push_back( std::move( current ) );
  return f;
}

} // namespace forge
