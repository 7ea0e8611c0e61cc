#pragma once

#include <forge/error.hpp>
#include <forge/machine.hpp>

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace forge
{

/*! \brief What a generated machine does on one (state, symbol) pair. */
template<class State>
struct rule_action
{
  enum class kind
  {
    go,
    accept,
    reject
  };
  kind what = kind::reject;
  State next{};
  char write = '_';
  direction move = direction::stay;

  static rule_action go( State next, char write, direction move ) { return { kind::go, std::move( next ), write, move }; }
  static rule_action accept() { return { kind::accept, State{}, 0, direction::stay }; }
  static rule_action reject() { return { kind::reject, State{}, 0, direction::stay }; }
  static rule_action halt( bool accepting ) { return accepting ? accept() : reject(); }
};

/*! \brief Generates a `machine` from a rule over structured control states.
 *
 * Starting from `start`, every state reachable through `rule` is numbered in
 * breadth-first order. Halting actions write the scanned symbol back and do
 * not move. `State` must be totally ordered.
 */
template<class State, class Rule>
machine generate_machine( const std::vector<char>& alphabet, const State& start, Rule&& rule,
                          std::size_t state_limit = 1u << 20 )
{
  std::map<State, std::uint32_t> ids;
  std::deque<State> queue;
  std::vector<std::vector<std::optional<transition>>> rows;

  // ids 0 and 1 are reserved for accept and reject
  constexpr std::uint32_t acc = 0, rej = 1;
  auto intern = [&]( const State& s ) {
    auto [it, fresh] = ids.emplace( s, static_cast<std::uint32_t>( ids.size() + 2 ) );
    if ( fresh )
    {
      if ( ids.size() > state_limit )
        throw error( "InvalidMachine", "generated machine exceeds state limit" );
      queue.push_back( s );
    }
    return it->second;
  };

  intern( start );
  while ( !queue.empty() )
  {
    const State s = queue.front();
    queue.pop_front();
    std::vector<std::optional<transition>> row( alphabet.size() );
    for ( std::uint8_t c = 0; c < alphabet.size(); ++c )
    {
      const rule_action<State> a = rule( s, alphabet[c] );
      switch ( a.what )
      {
      case rule_action<State>::kind::accept:
        row[c] = transition{ acc, c, direction::stay };
        break;
      case rule_action<State>::kind::reject:
        row[c] = transition{ rej, c, direction::stay };
        break;
      default:
      {
        std::uint8_t w = 0;
        while ( w < alphabet.size() && alphabet[w] != a.write )
          ++w;
        if ( w == alphabet.size() )
          throw error( "InvalidMachine", "rule writes a symbol outside the alphabet" );
        row[c] = transition{ intern( a.next ), w, a.move };
      }
      }
    }
    rows.push_back( std::move( row ) );
  }

  const auto n = rows.size() + 2;
  std::vector<std::string> names( n );
  names[acc] = "acc";
  names[rej] = "rej";
  for ( std::size_t i = 2; i < n; ++i )
    names[i] = "s" + std::to_string( i - 2 );

  std::vector<std::optional<transition>> table( n * alphabet.size() );
  for ( std::size_t i = 0; i < rows.size(); ++i )
    for ( std::size_t c = 0; c < alphabet.size(); ++c )
      table[( i + 2 ) * alphabet.size() + c] = rows[i][c];

  return machine( std::move( names ), 2, acc, rej, alphabet, std::move( table ) );
}

} // namespace forge
