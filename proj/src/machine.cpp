#include <forge/machine.hpp>

#include <forge/error.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace forge
{

machine::machine( std::vector<std::string> states, std::uint32_t start, std::uint32_t accept, std::uint32_t reject,
                  std::vector<char> alphabet, std::vector<std::optional<transition>> table )
    : states_( std::move( states ) ), start_( start ), accept_( accept ), reject_( reject ),
      alphabet_( std::move( alphabet ) ), table_( std::move( table ) )
{
  if ( alphabet_.size() > max_symbols )
    throw error( "AlphabetTooLarge", std::to_string( alphabet_.size() ) + " symbols" );
  const auto n = states_.size();
  if ( start_ >= n || accept_ >= n || reject_ >= n )
    throw error( "InvalidMachine", "start/accept/reject out of range" );
  if ( accept_ == reject_ )
    throw error( "InvalidMachine", "accept and reject coincide" );
  if ( is_halting( start_ ) )
    throw error( "InvalidMachine", "start state must not halt" );
  for ( char c : { '0', '1', 'p', blank } )
    if ( !symbol_index( c ) )
      throw error( "InvalidMachine", std::string( "alphabet lacks '" ) + c + "'" );
  for ( std::size_t i = 0; i < alphabet_.size(); ++i )
    if ( std::count( alphabet_.begin(), alphabet_.end(), alphabet_[i] ) != 1 )
      throw error( "InvalidMachine", "duplicate symbol" );
  if ( table_.size() != n * alphabet_.size() )
    throw error( "InvalidMachine", "transition table has wrong size" );

  for ( std::uint32_t q = 0; q < n; ++q )
    for ( std::size_t s = 0; s < alphabet_.size(); ++s )
    {
      const auto& t = table_[q * alphabet_.size() + s];
      if ( is_halting( q ) )
      {
        if ( t )
          throw error( "InvalidMachine", "transition leaves halting state " + states_[q] );
        continue;
      }
      if ( !t )
        throw error( "NonTotalTransitions", states_[q] + " on '" + alphabet_[s] + "'" );
      if ( t->next >= n || t->write >= alphabet_.size() )
        throw error( "InvalidMachine", "transition target out of range" );
    }

  blank_ = *symbol_index( blank );
  input_codes_[0] = *symbol_index( '0' );
  input_codes_[1] = *symbol_index( '1' );
  input_codes_[2] = *symbol_index( 'p' );
}

std::optional<std::uint8_t> machine::symbol_index( char c ) const noexcept
{
  const auto it = std::find( alphabet_.begin(), alphabet_.end(), c );
  if ( it == alphabet_.end() )
    return std::nullopt;
  return static_cast<std::uint8_t>( it - alphabet_.begin() );
}

std::string to_string( verdict v )
{
  switch ( v )
  {
  case verdict::accept:
    return "accept";
  case verdict::reject:
    return "reject";
  default:
    return "timeout";
  }
}

namespace
{

std::vector<std::uint8_t> load_tape( const machine& tm, const pstring& input, std::size_t min_size )
{
  std::vector<std::uint8_t> tape( std::max( min_size, input.length() ), tm.blank_index() );
  for ( std::size_t i = 0; i < input.length(); ++i )
    tape[i] = tm.index_of( input[i] );
  return tape;
}

/// One transition in place. Returns false when `state` already halts.
bool advance( const machine& tm, std::vector<std::uint8_t>& tape, std::size_t& head, std::uint32_t& state )
{
  if ( tm.is_halting( state ) )
    return false;
  if ( head >= tape.size() )
    tape.resize( head + 1, tm.blank_index() );
  const auto& t = tm.step( state, tape[head] );
  tape[head] = t.write;
  state = t.next;
  if ( t.move == direction::right )
    ++head;
  else if ( t.move == direction::left && head > 0 )
    --head;
  return true;
}

verdict final_verdict( const machine& tm, std::uint32_t state )
{
  if ( state == tm.accept() )
    return verdict::accept;
  if ( state == tm.reject() )
    return verdict::reject;
  return verdict::timeout;
}

} // namespace

run_result run( const machine& tm, const pstring& input, std::uint64_t time_bound )
{
  auto tape = load_tape( tm, input, 1 );
  std::size_t head = 0;
  std::uint32_t state = tm.start();
  std::uint64_t steps = 0;
  while ( steps < time_bound && advance( tm, tape, head, state ) )
    ++steps;
  return { final_verdict( tm, state ), steps };
}

tableau run_trace( const machine& tm, const pstring& input, std::uint64_t time_bound )
{
  const auto width = static_cast<std::size_t>( time_bound ) + 1;
  auto tape = load_tape( tm, input, width );
  std::size_t head = 0;
  std::uint32_t state = tm.start();
  std::uint64_t steps = 0;

  tableau t;
  t.rows.reserve( width );
  auto window = [&] { return std::vector<std::uint8_t>( tape.begin(), tape.begin() + width ); };
  t.rows.push_back( { window(), head, state } );
  for ( std::uint64_t i = 0; i < time_bound; ++i )
  {
    if ( advance( tm, tape, head, state ) )
      ++steps;
    t.rows.push_back( { window(), head, state } );
  }
  t.result = { final_verdict( tm, state ), steps };
  return t;
}

namespace
{

std::vector<std::string> split_words( const std::string& line )
{
  std::istringstream in( line );
  std::vector<std::string> words;
  for ( std::string w; in >> w; )
    words.push_back( w );
  return words;
}

} // namespace

machine parse_machine( std::string_view text )
{
  std::vector<std::string> states;
  std::map<std::string, std::uint32_t> state_ids;
  std::string start, accept, reject;
  std::vector<char> alphabet;
  struct pending
  {
    std::size_t line;
    std::vector<std::string> words;
  };
  std::vector<pending> rules;

  std::istringstream in{ std::string( text ) };
  std::size_t line_no = 0;
  for ( std::string line; std::getline( in, line ); )
  {
    ++line_no;
    if ( const auto hash = line.find( '#' ); hash != std::string::npos )
      line.erase( hash );
    auto fail = [&]( const std::string& what ) {
      throw error( "ParseError", "line " + std::to_string( line_no ) + ": " + what );
    };
    const auto colon = line.find( ':' );
    if ( colon != std::string::npos && line.find( "->" ) == std::string::npos )
    {
      const auto key = split_words( line.substr( 0, colon ) );
      const auto values = split_words( line.substr( colon + 1 ) );
      if ( key.size() != 1 )
        fail( "malformed header" );
      if ( key[0] == "states" )
        states = values;
      else if ( key[0] == "alphabet" )
      {
        for ( const auto& v : values )
        {
          if ( v.size() != 1 )
            fail( "alphabet symbols are single characters" );
          alphabet.push_back( v[0] );
        }
      }
      else if ( key[0] == "start" || key[0] == "accept" || key[0] == "reject" )
      {
        if ( values.size() != 1 )
          fail( "expected one state name" );
        ( key[0] == "start" ? start : key[0] == "accept" ? accept : reject ) = values[0];
      }
      else
        fail( "unknown header '" + key[0] + "'" );
      continue;
    }
    auto words = split_words( line );
    if ( words.empty() )
      continue;
    if ( words.size() != 6 || words[2] != "->" )
      fail( "expected 'q s -> q' s' D'" );
    rules.push_back( { line_no, std::move( words ) } );
  }

  if ( alphabet.size() > machine::max_symbols )
    throw error( "AlphabetTooLarge", std::to_string( alphabet.size() ) + " symbols" );
  for ( std::uint32_t i = 0; i < states.size(); ++i )
    if ( !state_ids.emplace( states[i], i ).second )
      throw error( "ParseError", "duplicate state " + states[i] );
  auto state_of = [&]( const std::string& name, std::size_t line ) {
    const auto it = state_ids.find( name );
    if ( it == state_ids.end() )
      throw error( "ParseError", "line " + std::to_string( line ) + ": unknown state '" + name + "'" );
    return it->second;
  };
  auto symbol_of = [&]( const std::string& name, std::size_t line ) {
    const auto it = name.size() == 1 ? std::find( alphabet.begin(), alphabet.end(), name[0] ) : alphabet.end();
    if ( it == alphabet.end() )
      throw error( "ParseError", "line " + std::to_string( line ) + ": unknown symbol '" + name + "'" );
    return static_cast<std::uint8_t>( it - alphabet.begin() );
  };

  std::vector<std::optional<transition>> table( states.size() * alphabet.size() );
  for ( const auto& r : rules )
  {
    const auto q = state_of( r.words[0], r.line );
    const auto s = symbol_of( r.words[1], r.line );
    const auto next = state_of( r.words[3], r.line );
    const auto write = symbol_of( r.words[4], r.line );
    direction d;
    if ( r.words[5] == "L" )
      d = direction::left;
    else if ( r.words[5] == "R" )
      d = direction::right;
    else if ( r.words[5] == "S" )
      d = direction::stay;
    else
      throw error( "ParseError", "line " + std::to_string( r.line ) + ": direction must be L, R or S" );
    auto& slot = table[q * alphabet.size() + s];
    if ( slot )
      throw error( "ParseError", "line " + std::to_string( r.line ) + ": duplicate transition" );
    slot = transition{ next, write, d };
  }

  return machine( std::move( states ), state_of( start, 0 ), state_of( accept, 0 ), state_of( reject, 0 ),
                  std::move( alphabet ), std::move( table ) );
}

std::string to_text( const machine& tm )
{
  std::ostringstream out;
  const auto& names = tm.state_names();
  out << "states:";
  for ( const auto& s : names )
    out << ' ' << s;
  out << "\nstart: " << names[tm.start()] << "\naccept: " << names[tm.accept()] << "\nreject: " << names[tm.reject()]
      << "\nalphabet:";
  for ( char c : tm.alphabet() )
    out << ' ' << c;
  out << '\n';
  static constexpr char dirs[] = { 'L', 'R', 'S' };
  for ( std::uint32_t q = 0; q < tm.num_states(); ++q )
  {
    if ( tm.is_halting( q ) )
      continue;
    for ( std::uint8_t s = 0; s < tm.num_symbols(); ++s )
    {
      const auto& t = tm.step( q, s );
      out << names[q] << ' ' << tm.alphabet()[s] << " -> " << names[t.next] << ' ' << tm.alphabet()[t.write] << ' '
          << dirs[static_cast<int>( t.move )] << '\n';
    }
  }
  return out.str();
}

} // namespace forge
