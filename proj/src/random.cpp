#include <forge/random.hpp>

#include <algorithm>
#include <numeric>

namespace forge
{

namespace
{

std::size_t pick( rng& gen, std::size_t bound ) { return std::uniform_int_distribution<std::size_t>( 0, bound - 1 )( gen ); }

} // namespace

circuit random_circuit( rng& gen, std::size_t inputs, std::size_t gates )
{
  std::vector<gate> nodes;
  for ( std::size_t i = 0; i < inputs; ++i )
    nodes.push_back( { gate_kind::input, static_cast<std::uint32_t>( i ), 0 } );
  for ( std::size_t g = 0; g < gates; ++g )
  {
    const auto n = static_cast<std::uint32_t>( nodes.size() );
    if ( n == 0 || pick( gen, 20 ) == 0 )
    {
      nodes.push_back( { gate_kind::constant, static_cast<std::uint32_t>( pick( gen, 2 ) ), 0 } );
      continue;
    }
    const auto a = static_cast<std::uint32_t>( pick( gen, n ) );
    const auto b = static_cast<std::uint32_t>( pick( gen, n ) );
    switch ( pick( gen, 5 ) )
    {
    case 0:
      nodes.push_back( { gate_kind::not_gate, a, 0 } );
      break;
    case 1:
    case 2:
      nodes.push_back( { gate_kind::and_gate, a, b } );
      break;
    default:
      nodes.push_back( { gate_kind::or_gate, a, b } );
    }
  }
  if ( gates == 0 )
    nodes.push_back( { gate_kind::constant, 1, 0 } );
  return circuit( std::move( nodes ), inputs );
}

cnf random_cnf( rng& gen, std::size_t vars, std::size_t clauses, std::size_t width )
{
  cnf f;
  f.num_vars = vars;
  for ( std::size_t c = 0; c < clauses; ++c )
  {
    std::vector<literal> clause;
    for ( std::size_t l = 0; l < width; ++l )
      clause.push_back( { static_cast<std::uint32_t>( pick( gen, vars ) ), pick( gen, 2 ) == 1 } );
    f.clauses.push_back( std::move( clause ) );
  }
  return f;
}

graph random_graph( rng& gen, std::size_t v, unsigned percent )
{
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for ( std::size_t u = 0; u < v; ++u )
    for ( std::size_t w = u + 1; w < v; ++w )
      if ( pick( gen, 100 ) < percent )
        edges.emplace_back( u, w );
  return graph( v, edges );
}

pstring random_pstring( rng& gen, std::size_t length, std::size_t placeholders )
{
  std::vector<symbol> chars( length );
  for ( auto& c : chars )
    c = pick( gen, 2 ) ? symbol::one : symbol::zero;
  std::vector<std::size_t> idx( length );
  std::iota( idx.begin(), idx.end(), 0 );
  std::shuffle( idx.begin(), idx.end(), gen );
  for ( std::size_t i = 0; i < std::min( placeholders, length ); ++i )
    chars[idx[i]] = symbol::placeholder;
  return pstring( std::move( chars ) );
}

} // namespace forge
