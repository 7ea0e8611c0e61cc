#include <forge/builtins.hpp>

#include <forge/circuit.hpp>
#include <forge/error.hpp>
#include <forge/machine_builder.hpp>

#include <compare>
#include <sstream>

namespace forge
{

namespace
{

constexpr auto L = direction::left;
constexpr auto R = direction::right;
constexpr auto S = direction::stay;

bool is_bit( char c ) { return c == '0' || c == '1'; }

// Cell 0 is rewritten with a left-end marker so machines can find it again.
char mark_left_end( char c ) { return c == '0' ? 'E' : 'F'; }
bool is_left_end( char c ) { return c == 'E' || c == 'F'; }
bool left_end_bit( char c ) { return c == 'F'; }

const char* all_zeros_text = R"(# accepts 0*
states: q0 qa qr
start: q0
accept: qa
reject: qr
alphabet: 0 1 p _
q0 0 -> q0 0 R
q0 1 -> qr 1 S
q0 p -> qr p S
q0 _ -> qa _ S
)";

} // namespace

machine all_zeros_machine()
{
  return parse_machine( all_zeros_text );
}

machine parity_machine()
{
  using A = rule_action<int>;
  return generate_machine( { '0', '1', 'p', '_' }, 0, []( int odd, char c ) {
    switch ( c )
    {
    case '0':
      return A::go( odd, c, R );
    case '1':
      return A::go( 1 - odd, c, R );
    case '_':
      return A::halt( odd == 1 );
    default:
      return A::reject();
    }
  } );
}

machine loop_machine()
{
  using A = rule_action<int>;
  return generate_machine( { '0', '1', 'p', '_' }, 0, []( int, char c ) { return A::go( 0, c, R ); } );
}

machine equal_halves_machine()
{
  // a/b mark the left half (0/1), c/d the right half; 'p' marks compared cells
  enum phase
  {
    pair_left,
    to_end,
    mark_right,
    back,
    seek_right,
    seek_right_end,
    take,
    carry
  };
  struct state
  {
    int ph = pair_left;
    int bit = 0;
    auto operator<=>( const state& ) const = default;
  };
  using A = rule_action<state>;
  auto st = []( int ph, int bit = 0 ) { return state{ ph, bit }; };

  return generate_machine( { '0', '1', 'p', '_', 'a', 'b', 'c', 'd' }, state{}, [&]( const state& s, char c ) -> A {
    const bool right_mark = c == 'c' || c == 'd';
    const bool left_mark = c == 'a' || c == 'b';
    switch ( s.ph )
    {
    case pair_left:
      if ( is_bit( c ) )
        return A::go( st( to_end ), c == '0' ? 'a' : 'b', R );
      if ( c == '_' )
        return A::accept();
      if ( right_mark )
        return A::go( st( seek_right ), c, S );
      return A::reject();
    case to_end:
      if ( is_bit( c ) )
        return A::go( st( to_end ), c, R );
      if ( right_mark || c == '_' )
        return A::go( st( mark_right ), c, L );
      return A::reject();
    case mark_right:
      if ( is_bit( c ) )
        return A::go( st( back ), c == '0' ? 'c' : 'd', L );
      return A::reject();
    case back:
      if ( is_bit( c ) )
        return A::go( st( back ), c, L );
      if ( left_mark )
        return A::go( st( pair_left ), c, R );
      return A::reject();
    case seek_right:
      if ( right_mark )
        return A::go( st( seek_right_end ), c, R );
      if ( c == 'p' )
        return A::go( st( seek_right ), c, R );
      if ( c == '_' )
        return A::accept();
      return A::reject();
    case seek_right_end:
      if ( right_mark )
        return A::go( st( seek_right_end ), c, R );
      if ( c == 'p' || c == '_' )
        return A::go( st( take ), c, L );
      return A::reject();
    case take:
      if ( right_mark )
        return A::go( st( carry, c == 'd' ), 'p', L );
      return A::reject();
    default: // carry
      if ( right_mark || c == 'p' )
        return A::go( s, c, L );
      if ( left_mark )
        return ( ( c == 'b' ) == ( s.bit == 1 ) ) ? A::go( st( seek_right ), 'p', R ) : A::reject();
      return A::reject();
    }
  } );
}

machine cnf_verifier( std::size_t num_vars )
{
  if ( num_vars == 0 )
    throw error( "InvalidMachine", "cnf verifier needs at least one variable" );
  const int v = static_cast<int>( num_vars );
  const int b = static_cast<int>( std::max<std::uint64_t>( 1, log2ceil( num_vars ) ) );

  enum phase
  {
    init,
    clause,
    sign,
    index,
    to_left,
    walk,
    to_marker,
    skip
  };
  struct state
  {
    int ph = init;
    int i = 0;   // cell counter / remaining moves
    int idx = 0; // variable index being read
    int neg = 0;
    int csat = 0; // current clause satisfied
    int fail = 0;
    auto operator<=>( const state& ) const = default;
  };
  using A = rule_action<state>;

  return generate_machine( { '0', '1', 'p', '_', 'E', 'F', 'M' }, state{}, [&]( const state& s, char c ) -> A {
    auto next = s;
    auto literal_value = [&]( bool value ) {
      next.csat |= ( value != ( s.neg == 1 ) );
      next.ph = to_marker;
      return A::go( next, c, R );
    };
    switch ( s.ph )
    {
    case init:
    {
      if ( !is_bit( c ) )
        return A::reject();
      next.i = s.i + 1;
      next.ph = next.i < v ? init : clause;
      if ( next.ph == clause )
        next.i = 0;
      return A::go( next, s.i == 0 ? mark_left_end( c ) : c, R );
    }
    case clause:
      if ( c == '1' )
      {
        next.ph = sign;
        return A::go( next, 'M', R );
      }
      if ( c == '0' )
      {
        next.fail |= !s.csat;
        next.csat = 0;
        return A::go( next, c, R );
      }
      if ( c == '_' )
        return A::halt( s.fail == 0 );
      return A::reject();
    case sign:
      if ( !is_bit( c ) )
        return A::reject();
      next.neg = c == '1';
      next.ph = index;
      next.i = 0;
      next.idx = 0;
      return A::go( next, c, R );
    case index:
      if ( !is_bit( c ) )
        return A::reject();
      next.idx = 2 * s.idx + ( c == '1' );
      if ( s.i + 1 < b )
      {
        next.i = s.i + 1;
        return A::go( next, c, R );
      }
      if ( next.idx >= v )
        return A::reject();
      next.ph = to_left;
      next.i = 0;
      return A::go( next, c, L );
    case to_left:
      if ( !is_left_end( c ) )
        return A::go( s, c, L );
      if ( s.idx == 0 )
        return literal_value( left_end_bit( c ) );
      next.ph = walk;
      next.i = s.idx - 1;
      return A::go( next, c, R );
    case walk:
      if ( s.i > 0 )
      {
        next.i = s.i - 1;
        return A::go( next, c, R );
      }
      if ( !is_bit( c ) )
        return A::reject();
      return literal_value( c == '1' );
    case to_marker:
      if ( c != 'M' )
        return A::go( s, c, R );
      next.ph = skip;
      next.i = b + 1;
      next.idx = 0;
      next.neg = 0;
      return A::go( next, '1', R );
    default: // skip
      next.i = s.i - 1;
      if ( next.i == 0 )
        next.ph = clause;
      return A::go( next, c, R );
    }
  } );
}

bound_expr cnf_verifier_time()
{
  return bound_expr::parse( "n^2 + 3*n + 4" );
}

namespace
{

std::vector<std::pair<int, int>> clique_jobs( int k )
{
  std::vector<std::pair<int, int>> jobs;
  for ( int a = 0; a < k; ++a )
    jobs.emplace_back( a, -1 );
  for ( int a = 0; a < k; ++a )
    for ( int c = a + 1; c < k; ++c )
      jobs.emplace_back( a, c );
  return jobs;
}

} // namespace

machine clique_verifier( std::size_t k, std::size_t id_bits )
{
  if ( k == 0 || id_bits == 0 )
    throw error( "InvalidMachine", "clique verifier needs k >= 1 and id_bits >= 1" );
  const int b = static_cast<int>( id_bits );
  const int width = static_cast<int>( k ) * b;
  const auto jobs = clique_jobs( static_cast<int>( k ) );
  const int num_jobs = static_cast<int>( jobs.size() );

  enum phase
  {
    init,
    to_left,
    fetch,
    scan
  };
  enum record
  {
    none,
    vertex,
    edge
  };
  struct state
  {
    int ph = init;
    int job = 0;
    int pos = 0;
    int xa = 0, xc = 0;
    int rec = none;
    int f1 = 0, f2 = 0;
    int found = 0;
    int fail = 0;
    auto operator<=>( const state& ) const = default;
  };
  using A = rule_action<state>;

  return generate_machine( { '0', '1', 'p', '_', 'E', 'F' }, state{}, [&]( const state& s, char c ) -> A {
    auto next = s;
    const auto [ja, jc] = jobs[s.job];
    auto bit_of = [&]( int x, int i ) { return ( x >> ( b - 1 - i ) ) & 1; };

    auto fetch_step = [&]( bool bit ) -> A {
      const int slot = s.pos / b;
      if ( slot == ja )
        next.xa = 2 * s.xa + bit;
      if ( slot == jc )
        next.xc = 2 * s.xc + bit;
      next.pos = s.pos + 1;
      if ( next.pos < width )
        next.ph = fetch;
      else
      {
        next.ph = scan;
        next.pos = 0;
        next.rec = none;
        next.found = 0;
      }
      return A::go( next, c, R );
    };

    switch ( s.ph )
    {
    case init:
      if ( !is_bit( c ) )
        return A::reject();
      if ( s.pos + 1 < width )
      {
        next.pos = s.pos + 1;
        return A::go( next, s.pos == 0 ? mark_left_end( c ) : c, R );
      }
      next.ph = to_left;
      next.pos = 0;
      return A::go( next, s.pos == 0 ? mark_left_end( c ) : c, S );
    case to_left:
      if ( is_left_end( c ) )
        return fetch_step( left_end_bit( c ) );
      return A::go( s, c, L );
    case fetch:
      if ( !is_bit( c ) )
        return A::reject();
      return fetch_step( c == '1' );
    default: // scan
      if ( s.rec == none )
      {
        if ( c == '0' || c == '1' )
        {
          next.rec = c == '0' ? vertex : edge;
          next.pos = 0;
          // only the flags relevant to the current job are tracked
          next.f1 = ( c == '0' ) == ( jc < 0 );
          next.f2 = c == '1' && jc >= 0;
          return A::go( next, c, R );
        }
        if ( c != '_' )
          return A::reject();
        const bool bad = !s.found || ( jc >= 0 && s.xa == s.xc );
        const int fail = s.fail | bad;
        if ( s.job + 1 == num_jobs )
          return A::halt( fail == 0 );
        return A::go( state{ to_left, s.job + 1, 0, 0, 0, none, 0, 0, 0, fail }, c, L );
      }
      if ( !is_bit( c ) )
        return A::reject();
      {
        const int bit = c == '1';
        const int len = s.rec == vertex ? b : 2 * b;
        if ( s.rec == vertex )
          next.f1 = s.f1 && bit == bit_of( s.xa, s.pos );
        else if ( s.pos < b )
        {
          next.f1 = s.f1 && bit == bit_of( s.xa, s.pos );
          next.f2 = s.f2 && bit == bit_of( s.xc, s.pos );
        }
        else
        {
          next.f1 = s.f1 && bit == bit_of( s.xc, s.pos - b );
          next.f2 = s.f2 && bit == bit_of( s.xa, s.pos - b );
        }
        next.pos = s.pos + 1;
        if ( next.pos == len )
        {
          next.found = s.found | next.f1 | next.f2;
          next.rec = none;
          next.pos = 0;
          next.f1 = next.f2 = 0;
        }
        return A::go( next, c, R );
      }
    }
  } );
}

bound_expr clique_verifier_time( std::size_t k )
{
  const auto jobs = k + k * ( k - 1 ) / 2;
  std::ostringstream e;
  e << ( 2 * jobs + 1 ) << "*n + " << ( 2 * jobs + 2 );
  return bound_expr::parse( e.str() );
}

machine circuit_verifier( std::size_t num_nodes, std::size_t num_inputs )
{
  if ( num_nodes == 0 )
    throw error( "InvalidMachine", "circuit verifier needs at least one node" );
  const int n_nodes = static_cast<int>( num_nodes );
  const int n_inputs = static_cast<int>( num_inputs );
  const int w = static_cast<int>( operand_width( num_nodes, num_inputs ) );
  const int prefix = n_inputs + 64; // cell of the first record

  auto header_bit = [&]( int pos ) {
    const int h = pos - n_inputs;
    const std::uint64_t value = h < 32 ? num_nodes : num_inputs;
    return static_cast<int>( ( value >> ( 31 - h % 32 ) ) & 1u );
  };
  auto field_len = [&]( int op ) { return ( op & 3 ) == 0 ? 2 * w : ( op & 3 ) == 1 ? w : 1; };

  enum phase
  {
    init,
    to_left,
    walk_witness,
    prefix_skip,
    rec_b0,
    rec_b1,
    rec_b2,
    rec_skip,
    cur_b1,
    cur_b2,
    cur_field
  };
  enum goal
  {
    find,    // locate the first unevaluated record, counting evaluated ones
    target,  // skip `rem` records, then read a stored value
    write,   // locate the first unevaluated record and store `val`
    witness, // read assignment bit `a`
  };
  struct state
  {
    int ph = init;
    int goal = find;
    int pos = 0; // init position / remaining moves / field position
    int rem = 0; // records left to skip
    int cnt = 0; // evaluated records seen
    int op = 0;
    int a = 0, b = 0;
    int stage = 0;
    int val = 0;
    int hi = 0; // second opcode bit while skipping
    auto operator<=>( const state& ) const = default;
  };
  using A = rule_action<state>;

  auto enter_prefix = [&]( state s, int moves ) {
    // called when moving right with `moves` cells left before the first record
    s.ph = moves == 0 ? rec_b0 : prefix_skip;
    s.pos = moves;
    return s;
  };

  return generate_machine(
      { '0', '1', 'p', '_', 'E', 'F', 'V', 'W' }, state{}, [&]( const state& s, char c ) -> A {
        auto next = s;
        const bool evaluated = c == 'V' || c == 'W';
        const bool stored = c == 'W';

        auto skip_record_from_b1 = [&]( state t ) {
          t.ph = rec_b1;
          return A::go( t, c, R );
        };

        switch ( s.ph )
        {
        case init:
        {
          if ( !is_bit( c ) )
            return A::reject();
          if ( s.pos >= n_inputs && ( c == '1' ) != ( header_bit( s.pos ) == 1 ) )
            return A::reject();
          const char out = s.pos == 0 ? mark_left_end( c ) : c;
          if ( s.pos + 1 < prefix )
          {
            next.pos = s.pos + 1;
            return A::go( next, out, R );
          }
          return A::go( state{ rec_b0, find }, out, R );
        }
        case to_left:
          if ( !is_left_end( c ) )
            return A::go( s, c, L );
          if ( s.goal == witness )
          {
            if ( s.a == 0 )
              return A::go( enter_prefix( state{ 0, write, 0, 0, 0, 0, 0, 0, 0, left_end_bit( c ) }, prefix - 1 ), c, R );
            next.ph = walk_witness;
            next.pos = s.a - 1;
            return A::go( next, c, R );
          }
          return A::go( enter_prefix( s, prefix - 1 ), c, R );
        case walk_witness:
          if ( s.pos > 0 )
          {
            next.pos = s.pos - 1;
            return A::go( next, c, R );
          }
          if ( !is_bit( c ) )
            return A::reject();
          return A::go( enter_prefix( state{ 0, write, 0, 0, 0, 0, 0, 0, 0, c == '1' }, prefix - s.a - 1 ), c, R );
        case prefix_skip:
          return A::go( enter_prefix( s, s.pos - 1 ), c, R );
        case rec_b0:
          if ( evaluated )
          {
            switch ( s.goal )
            {
            case find:
              if ( s.cnt + 1 == n_nodes )
                return A::halt( stored );
              next.cnt = s.cnt + 1;
              return skip_record_from_b1( next );
            case target:
              if ( s.rem > 0 )
              {
                next.rem = s.rem - 1;
                return skip_record_from_b1( next );
              }
              if ( s.op == opcode::not_gate )
                return skip_record_from_b1( state{ 0, write, 0, 0, 0, 0, 0, 0, 0, !stored } );
              if ( s.stage == 0 )
                return A::go( state{ to_left, target, 0, s.b, 0, s.op, 0, 0, 1, stored }, c, L );
              {
                const int result = s.op == opcode::and_gate ? ( s.val && stored ) : ( s.val || stored );
                return skip_record_from_b1( state{ 0, write, 0, 0, 0, 0, 0, 0, 0, result } );
              }
            default:
              return skip_record_from_b1( next );
            }
          }
          if ( !is_bit( c ) )
            return A::reject();
          switch ( s.goal )
          {
          case find:
            return A::go( state{ cur_b1, find, 0, 0, 0, c == '1' }, c, R );
          case write:
            return A::go( state{ to_left, find }, s.val ? 'W' : 'V', L );
          default: // a target at or after the current record
            return A::reject();
          }
        case rec_b1:
          if ( !is_bit( c ) )
            return A::reject();
          next.ph = rec_b2;
          next.hi = c == '1';
          return A::go( next, c, R );
        case rec_b2:
        {
          if ( !is_bit( c ) )
            return A::reject();
          const int low = 2 * s.hi + ( c == '1' );
          if ( low == 3 )
            return A::reject();
          next.hi = 0;
          const int len = field_len( low );
          next.ph = len == 0 ? rec_b0 : rec_skip;
          next.pos = len;
          return A::go( next, c, R );
        }
        case rec_skip:
          if ( !is_bit( c ) )
            return A::reject();
          next.pos = s.pos - 1;
          next.ph = next.pos == 0 ? rec_b0 : rec_skip;
          return A::go( next, c, R );
        case cur_b1:
        case cur_b2:
        case cur_field:
        {
          if ( !is_bit( c ) )
            return A::reject();
          const int bit = c == '1';
          int len;
          if ( s.ph == cur_b1 )
          {
            next.ph = cur_b2;
            next.op = 2 * s.op + bit;
            return A::go( next, c, R );
          }
          if ( s.ph == cur_b2 )
          {
            next.op = 2 * s.op + bit;
            if ( ( next.op & 3 ) == 3 )
              return A::reject();
            next.pos = 0;
            len = field_len( next.op );
            if ( len > 0 )
            {
              next.ph = cur_field;
              return A::go( next, c, R );
            }
          }
          else
          {
            len = field_len( s.op );
            if ( ( s.op & 3 ) == 0 && s.pos >= w )
              next.b = 2 * s.b + bit;
            else
              next.a = 2 * s.a + bit;
            next.pos = s.pos + 1;
            if ( next.pos < len )
              return A::go( next, c, R );
          }
          // the record is fully read: dispatch on the opcode
          const int op = next.op;
          if ( op == opcode::constant )
            return A::go( state{ to_left, write, 0, 0, 0, 0, 0, 0, 0, next.a }, c, L );
          if ( op == opcode::input )
          {
            if ( next.a >= n_inputs )
              return A::reject();
            return A::go( state{ to_left, witness, 0, 0, 0, 0, next.a }, c, L );
          }
          if ( op == opcode::not_gate )
            return A::go( state{ to_left, target, 0, next.a, 0, op }, c, L );
          return A::go( state{ to_left, target, 0, next.a, 0, op, 0, next.b, 0 }, c, L );
        }
        }
        return A::reject();
      } );
}

bound_expr circuit_verifier_time()
{
  return bound_expr::parse( "3*n^2 + 4*n + 8" );
}

machine builtin( std::string_view name )
{
  std::vector<std::string> parts;
  {
    std::string token;
    std::istringstream in{ std::string( name ) };
    while ( std::getline( in, token, ':' ) )
      parts.push_back( token );
  }
  if ( parts.empty() )
    throw error( "UnknownBuiltin", std::string( name ) );
  auto num = [&]( std::size_t i ) {
    try
    {
      return static_cast<std::size_t>( std::stoul( parts.at( i ) ) );
    }
    catch ( const std::exception& )
    {
      throw error( "UnknownBuiltin", std::string( name ) );
    }
  };
  const auto& base = parts[0];
  if ( parts.size() == 1 )
  {
    if ( base == "all_zeros" )
      return all_zeros_machine();
    if ( base == "parity" )
      return parity_machine();
    if ( base == "equal_halves" )
      return equal_halves_machine();
    if ( base == "loop" )
      return loop_machine();
    if ( base == "cnf_verifier" )
      return cnf_verifier( 3 );
    if ( base == "clique_verifier" )
      return clique_verifier( 3, 2 );
    if ( base == "circuit_verifier" )
      return circuit_verifier( 4, 2 );
  }
  if ( base == "cnf_verifier" && parts.size() == 2 )
    return cnf_verifier( num( 1 ) );
  if ( base == "clique_verifier" && parts.size() == 3 )
    return clique_verifier( num( 1 ), num( 2 ) );
  if ( base == "circuit_verifier" && parts.size() == 3 )
    return circuit_verifier( num( 1 ), num( 2 ) );
  throw error( "UnknownBuiltin", std::string( name ) );
}

bound_expr builtin_time_bound( std::string_view name )
{
  const std::string n( name );
  if ( n == "all_zeros" || n == "parity" )
    return bound_expr::parse( "n + 1" );
  if ( n == "equal_halves" )
    return bound_expr::parse( "n^2 + 3*n + 2" );
  if ( n == "loop" )
    return bound_expr::parse( "n + 1" );
  if ( n.starts_with( "cnf_verifier" ) )
    return cnf_verifier_time();
  if ( n.starts_with( "circuit_verifier" ) )
    return circuit_verifier_time();
  if ( n.starts_with( "clique_verifier" ) )
  {
    const auto first = n.find( ':' );
    const std::size_t k = first == std::string::npos ? 3 : std::stoul( n.substr( first + 1 ) );
    return clique_verifier_time( k );
  }
  throw error( "UnknownBuiltin", n );
}

std::vector<std::string> builtin_names()
{
  return { "all_zeros", "parity", "equal_halves", "loop", "cnf_verifier", "clique_verifier", "circuit_verifier" };
}

} // namespace forge
