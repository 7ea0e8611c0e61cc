#include <forge/solver.hpp>

#include <forge/bound_expr.hpp>
#include <forge/error.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>
#include <vector>

namespace forge
{

namespace
{

constexpr std::size_t max_enumerable_inputs = 48;

struct range_hit
{
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t evaluations = 0;
};

// Scans [begin, end) in blocks of 64 and stops at the first satisfying
// assignment or once `best` proves the range cannot improve the answer.
range_hit scan( const circuit& c, std::uint64_t begin, std::uint64_t end, const std::atomic<std::uint64_t>& best )
{
  const auto n = c.num_inputs();
  std::vector<std::uint64_t> words( n ), scratch;
  range_hit r;
  for ( std::uint64_t base = begin; base < end; base += 64 )
  {
    if ( base > best.load( std::memory_order_relaxed ) )
      break;
    const auto lanes = std::min<std::uint64_t>( 64, end - base );
    for ( std::size_t i = 0; i < n; ++i )
    {
      const auto shift = n - 1 - i;
      std::uint64_t w = 0;
      if ( shift >= 6 )
        w = ( ( base >> shift ) & 1 ) ? ~std::uint64_t{ 0 } : 0;
      else
        for ( std::uint64_t l = 0; l < lanes; ++l )
          w |= ( ( ( base + l ) >> shift ) & 1 ) << l;
      words[i] = w;
    }
    auto out = evaluate_lanes( c, words, scratch );
    if ( lanes < 64 )
      out &= ( std::uint64_t{ 1 } << lanes ) - 1;
    if ( out )
    {
      const auto lane = static_cast<std::uint64_t>( std::countr_zero( out ) );
      r.evaluations += lane + 1;
      r.first = base + lane;
      return r;
    }
    r.evaluations += lanes;
  }
  return r;
}

} // namespace

std::size_t strict_input_limit( std::size_t gates )
{
  return static_cast<std::size_t>( log2ceil( std::max<std::uint64_t>( gates, 2 ) ) );
}

solve_result solve( const circuit& c, solve_mode mode, unsigned jobs )
{
  const auto n = c.num_inputs();
  if ( mode == solve_mode::strict && n > strict_input_limit( c.num_gates() ) )
    throw error( "TooManyInputs",
                 std::to_string( n ) + " inputs for " + std::to_string( c.num_gates() ) + " gates" );
  if ( n > max_enumerable_inputs )
    throw error( "TooManyInputs", std::to_string( n ) + " inputs exceed the enumeration limit" );

  const std::uint64_t total = std::uint64_t{ 1 } << n;
  std::atomic<std::uint64_t> best{ std::numeric_limits<std::uint64_t>::max() };
  std::atomic<std::uint64_t> evaluations{ 0 };

  jobs = std::max( 1u, jobs );
  // block-aligned contiguous ranges, a few per worker for balance
  const std::uint64_t blocks = ( total + 63 ) / 64;
  const std::uint64_t parts = jobs == 1 ? 1 : std::min<std::uint64_t>( blocks, 4ull * jobs );
  const std::uint64_t per = ( blocks + parts - 1 ) / parts * 64;
  std::atomic<std::uint64_t> next_part{ 0 };

  auto worker = [&] {
    for ( ;; )
    {
      const auto p = next_part.fetch_add( 1 );
      if ( p >= parts )
        return;
      const auto begin = p * per;
      if ( begin >= total || begin > best.load() )
        continue;
      const auto hit = scan( c, begin, std::min( total, begin + per ), best );
      evaluations += hit.evaluations;
      auto cur = best.load();
      while ( hit.first < cur && !best.compare_exchange_weak( cur, hit.first ) )
      {
      }
    }
  };

  if ( jobs == 1 )
    worker();
  else
  {
    std::vector<std::jthread> pool;
    for ( unsigned i = 0; i < jobs; ++i )
      pool.emplace_back( worker );
  }

  solve_result r;
  r.evaluations = evaluations.load();
  if ( best.load() != std::numeric_limits<std::uint64_t>::max() )
  {
    r.sat = true;
    r.witness = bit_string::from_uint( best.load(), n );
  }
  return r;
}

family_result solve_family( std::span<const circuit> family, solve_mode mode, unsigned jobs )
{
  family_result r;
  for ( std::size_t i = 0; i < family.size(); ++i )
  {
    solve_result s;
    try
    {
      s = solve( family[i], mode, jobs );
    }
    catch ( const error& e )
    {
      throw error( e.kind(), "family member " + std::to_string( i ) + ": " + e.detail() );
    }
    r.evaluations += s.evaluations;
    if ( s.sat )
    {
      r.sat = true;
      r.index = i;
      r.witness = s.witness;
      return r;
    }
  }
  return r;
}

} // namespace forge
