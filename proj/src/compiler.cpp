#include <forge/compiler.hpp>

#include <forge/error.hpp>

#include <algorithm>
#include <map>

namespace forge
{

namespace
{

using signal = circuit_builder::signal;

struct validated
{
  std::size_t exposed = 0;
};

validated validate( const compile_spec& spec )
{
  if ( spec.tm == nullptr )
    throw error( "SpecInvariantViolation", "no machine" );
  if ( spec.time_bound == 0 )
    throw error( "SpecInvariantViolation", "time bound must be at least 1" );
  if ( spec.input.size() > spec.time_bound )
    throw error( "SpecInvariantViolation", "input length exceeds time bound" );
  std::vector<bool> seen;
  for ( const auto& cell : spec.input )
  {
    if ( const auto* h = std::get_if<hardwired>( &cell ) )
    {
      if ( !spec.tm->symbol_index( h->symbol ) )
        throw error( "SymbolNotInAlphabet", std::string( 1, h->symbol ) );
      continue;
    }
    const auto idx = std::get<exposed_bit>( cell ).index;
    if ( idx >= seen.size() )
      seen.resize( idx + 1, false );
    if ( seen[idx] )
      throw error( "SpecInvariantViolation", "exposed index " + std::to_string( idx ) + " used twice" );
    seen[idx] = true;
  }
  if ( std::find( seen.begin(), seen.end(), false ) != seen.end() )
    throw error( "SpecInvariantViolation", "exposed indices are not dense" );
  return { seen.size() };
}

// one-hot symbol signals of the initial row
std::vector<std::vector<signal>> initial_symbols( const compile_spec& spec, circuit_builder& b, signal zero,
                                                  signal one, std::size_t width )
{
  const auto& tm = *spec.tm;
  const auto nsym = tm.num_symbols();
  std::vector<std::vector<signal>> sym( width, std::vector<signal>( nsym, zero ) );
  for ( std::size_t j = 0; j < width; ++j )
  {
    if ( j >= spec.input.size() )
    {
      sym[j][tm.blank_index()] = one;
      continue;
    }
    if ( const auto* h = std::get_if<hardwired>( &spec.input[j] ) )
    {
      sym[j][*tm.symbol_index( h->symbol )] = one;
      continue;
    }
    const auto x = b.input( std::get<exposed_bit>( spec.input[j] ).index );
    sym[j][tm.index_of( symbol::zero )] = b.not_( x );
    sym[j][tm.index_of( symbol::one )] = x;
  }
  return sym;
}

std::size_t target_cell( std::size_t j, direction d )
{
  switch ( d )
  {
  case direction::left:
    return j == 0 ? 0 : j - 1;
  case direction::right:
    return j + 1;
  default:
    return j;
  }
}

circuit compile_folded( const compile_spec& spec, std::size_t exposed )
{
  const auto& tm = *spec.tm;
  const auto T = spec.time_bound;
  const auto nsym = tm.num_symbols();
  circuit_builder b( exposed );
  const auto zero = b.constant( false );
  const auto one = b.constant( true );

  auto sym = initial_symbols( spec, b, zero, one, T + 1 );

  // sparse heads: cell -> (state -> signal); absent entries are constant 0
  using head_row = std::map<std::size_t, std::map<std::uint32_t, signal>>;
  head_row heads;
  heads[0][tm.start()] = one;

  auto accumulate = [&]( std::map<std::uint32_t, signal>& m, std::uint32_t q, signal s ) {
    auto [it, fresh] = m.emplace( q, s );
    if ( !fresh )
      it->second = b.or_( it->second, s );
  };

  for ( std::uint64_t t = 0; t < T; ++t )
  {
    bool active = false;
    head_row next;
    for ( const auto& [j, states] : heads )
    {
      std::vector<signal> writes( nsym, zero );
      signal moving = zero;
      for ( const auto& [q, h] : states )
      {
        if ( tm.is_halting( q ) )
        {
          accumulate( next[j], q, h );
          continue;
        }
        active = true;
        moving = b.or_( moving, h );
        for ( std::uint8_t s = 0; s < nsym; ++s )
        {
          const auto a = b.and_( h, sym[j][s] );
          if ( b.is_constant( a, false ) )
            continue;
          const auto& tr = tm.step( q, s );
          writes[tr.write] = b.or_( writes[tr.write], a );
          accumulate( next[target_cell( j, tr.move )], tr.next, a );
        }
      }
      if ( b.is_constant( moving, false ) )
        continue;
      // exactly one head signal is true per row, so a lone head cell moves
      // unless it has halted
      if ( heads.size() == 1 )
      {
        signal halted = zero;
        for ( const auto& [q, h] : states )
          if ( tm.is_halting( q ) )
            halted = b.or_( halted, h );
        moving = b.not_( halted );
      }
      const auto keep = b.not_( moving );
      for ( std::uint8_t s = 0; s < nsym; ++s )
        sym[j][s] = b.or_( b.and_( keep, sym[j][s] ), writes[s] );
    }
    // drop heads that folded to constant 0
    for ( auto it = next.begin(); it != next.end(); )
    {
      std::erase_if( it->second, [&]( const auto& e ) { return b.is_constant( e.second, false ); } );
      it = it->second.empty() ? next.erase( it ) : std::next( it );
    }
    heads = std::move( next );
    if ( !active )
      break; // every run has halted; later rows repeat this one
  }

  signal out = zero;
  for ( const auto& [j, states] : heads )
    if ( const auto it = states.find( tm.accept() ); it != states.end() )
      out = b.or_( out, it->second );
  return b.build( out );
}

circuit compile_raw( const compile_spec& spec, std::size_t exposed )
{
  const auto& tm = *spec.tm;
  const auto T = spec.time_bound;
  const auto width = T + 1;
  const auto nsym = tm.num_symbols();
  const auto nstates = tm.num_states();
  circuit_builder b( exposed, false );
  const auto zero = b.constant( false );
  const auto one = b.constant( true );

  std::vector<std::uint32_t> live, halting;
  for ( std::uint32_t q = 0; q < nstates; ++q )
    ( tm.is_halting( q ) ? halting : live ).push_back( q );

  auto sym = initial_symbols( spec, b, zero, one, width );
  std::vector<std::vector<signal>> head( width, std::vector<signal>( nstates, zero ) );
  head[0][tm.start()] = one;

  auto or_chain = [&]( const std::vector<signal>& xs ) {
    signal acc = xs.front();
    for ( std::size_t i = 1; i < xs.size(); ++i )
      acc = b.or_( acc, xs[i] );
    return acc;
  };

  for ( std::uint64_t t = 0; t < T; ++t )
  {
    // a[j][qi * nsym + s] for live states
    std::vector<std::vector<signal>> a( width );
    for ( std::size_t j = 0; j < width; ++j )
      for ( const auto q : live )
        for ( std::uint8_t s = 0; s < nsym; ++s )
          a[j].push_back( b.and_( head[j][q], sym[j][s] ) );

    auto source = [&]( std::size_t j, long offset, std::size_t k ) {
      const long src = static_cast<long>( j ) + offset;
      if ( src < 0 || src >= static_cast<long>( width ) )
        return zero;
      return a[src][k];
    };

    std::vector<std::vector<signal>> next_sym( width ), next_head( width, std::vector<signal>( nstates, zero ) );
    for ( std::size_t j = 0; j < width; ++j )
    {
      std::vector<signal> hs;
      for ( const auto q : live )
        hs.push_back( head[j][q] );
      const auto keep = b.not_( or_chain( hs ) );

      for ( std::uint8_t s2 = 0; s2 < nsym; ++s2 )
      {
        std::vector<signal> terms{ b.and_( keep, sym[j][s2] ) };
        for ( std::size_t qi = 0; qi < live.size(); ++qi )
          for ( std::uint8_t s = 0; s < nsym; ++s )
          {
            const bool sel = tm.step( live[qi], s ).write == s2;
            terms.push_back( b.and_( a[j][qi * nsym + s], sel ? one : zero ) );
          }
        next_sym[j].push_back( or_chain( terms ) );
      }

      // the three source cells: left neighbour moving right, right neighbour
      // moving left, this cell staying; at cell 0 the first slot is a left move
      // blocked by the edge
      auto arrives = [&]( std::uint32_t q2, int slot, std::size_t k ) {
        const auto& tr = tm.step( live[k / nsym], static_cast<std::uint8_t>( k % nsym ) );
        if ( tr.next != q2 )
          return false;
        switch ( slot )
        {
        case 0:
          return j == 0 ? tr.move == direction::left : tr.move == direction::right;
        case 1:
          return tr.move == direction::left;
        default:
          return tr.move == direction::stay;
        }
      };
      auto incoming = [&]( std::uint32_t q2, std::vector<signal>& terms ) {
        for ( int slot = 0; slot < 3; ++slot )
          for ( std::size_t k = 0; k < live.size() * nsym; ++k )
          {
            const long offset = slot == 0 ? ( j == 0 ? 0 : -1 ) : slot == 1 ? 1 : 0;
            terms.push_back( b.and_( source( j, offset, k ), arrives( q2, slot, k ) ? one : zero ) );
          }
      };
      for ( const auto q2 : live )
      {
        std::vector<signal> terms;
        incoming( q2, terms );
        next_head[j][q2] = or_chain( terms );
      }
      for ( const auto q2 : halting )
      {
        std::vector<signal> terms{ head[j][q2] };
        incoming( q2, terms );
        next_head[j][q2] = or_chain( terms );
      }
    }
    sym = std::move( next_sym );
    head = std::move( next_head );
  }

  std::vector<signal> acc;
  for ( std::size_t j = 0; j < width; ++j )
    acc.push_back( head[j][tm.accept()] );
  return b.build( or_chain( acc ), false );
}

} // namespace

circuit compile( const compile_spec& spec, const compile_options& options )
{
  const auto v = validate( spec );
  return options.fold ? compile_folded( spec, v.exposed ) : compile_raw( spec, v.exposed );
}

std::uint64_t raw_gate_count( const machine& tm, std::uint64_t time_bound, std::uint64_t exposed )
{
  std::uint64_t qn = 0;
  for ( std::uint32_t q = 0; q < tm.num_states(); ++q )
    qn += !tm.is_halting( q );
  const std::uint64_t s = tm.num_symbols();
  const std::uint64_t g = qn * s + qn + s * ( 1 + 2 * qn * s ) + qn * ( 6 * qn * s - 1 ) + 12 * qn * s;
  const auto t = time_bound;
  return 2 + exposed + t * ( t + 1 ) * g + t;
}

circuit compile_on_pstring( const machine& tm, const pstring& x, std::size_t expose, std::uint64_t time_bound,
                            const compile_options& options )
{
  if ( expose > x.pcount() )
    throw error( "ExposeTooLarge", std::to_string( expose ) + " > " + std::to_string( x.pcount() ) );
  compile_spec spec{ &tm, time_bound, {} };
  const auto& pos = x.positions();
  for ( std::size_t j = 0; j < x.length(); ++j )
    spec.input.push_back( hardwired{ to_char( x[j] ) } );
  for ( std::size_t i = 0; i < expose; ++i )
    spec.input[pos[i]] = exposed_bit{ static_cast<std::uint32_t>( i ) };
  return compile( spec, options );
}

} // namespace forge
