#pragma once

#include <forge/pstring.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace forge
{

enum class direction : std::uint8_t
{
  left,
  right,
  stay
};

struct transition
{
  std::uint32_t next;
  std::uint8_t write;
  direction move;
};

/*! \brief Single-tape deterministic machine over at most 8 tape symbols.
 *
 * The alphabet always contains '0', '1', 'p' and the blank '_'. The
 * transition table is total on non-halting states; halting states have no
 * outgoing transitions. Moving left from cell 0 leaves the head in place.
 */
class machine
{
public:
  static constexpr std::size_t max_symbols = 8;
  static constexpr char blank = '_';

  /// Validates every invariant; throws `NonTotalTransitions`,
  /// `AlphabetTooLarge` or `InvalidMachine`.
  machine( std::vector<std::string> states, std::uint32_t start, std::uint32_t accept, std::uint32_t reject,
           std::vector<char> alphabet,
           std::vector<std::optional<transition>> table );

  std::size_t num_states() const noexcept { return states_.size(); }
  std::size_t num_symbols() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& state_names() const noexcept { return states_; }
  const std::vector<char>& alphabet() const noexcept { return alphabet_; }
  std::uint32_t start() const noexcept { return start_; }
  std::uint32_t accept() const noexcept { return accept_; }
  std::uint32_t reject() const noexcept { return reject_; }
  bool is_halting( std::uint32_t q ) const noexcept { return q == accept_ || q == reject_; }

  const transition& step( std::uint32_t q, std::uint8_t s ) const { return *table_[q * alphabet_.size() + s]; }

  /// Index of a tape character; nullopt when absent.
  std::optional<std::uint8_t> symbol_index( char c ) const noexcept;
  std::uint8_t blank_index() const noexcept { return blank_; }
  std::uint8_t index_of( forge::symbol s ) const noexcept { return input_codes_[static_cast<std::size_t>( s )]; }

private:
  std::vector<std::string> states_;
  std::uint32_t start_, accept_, reject_;
  std::vector<char> alphabet_;
  std::vector<std::optional<transition>> table_;
  std::uint8_t blank_ = 0;
  std::uint8_t input_codes_[3] = {};
};

enum class verdict
{
  accept,
  reject,
  timeout
};

std::string to_string( verdict v );

struct run_result
{
  verdict outcome;
  std::uint64_t steps;

  friend bool operator==( const run_result&, const run_result& ) = default;
};

struct configuration
{
  std::vector<std::uint8_t> tape; ///< window of time_bound + 1 cells
  std::size_t head;
  std::uint32_t state;

  friend bool operator==( const configuration&, const configuration& ) = default;
};

/// time_bound + 1 configurations; rows after halting repeat the halting row.
struct tableau
{
  std::vector<configuration> rows;
  run_result result;
};

run_result run( const machine& tm, const pstring& input, std::uint64_t time_bound );
tableau run_trace( const machine& tm, const pstring& input, std::uint64_t time_bound );

/*! \brief Line-oriented text format.
 *
 *     states: q0 q1 qa qr
 *     start: q0
 *     accept: qa
 *     reject: qr
 *     alphabet: 0 1 p _
 *     q0 0 -> q1 1 R
 *
 * '#' starts a comment. Throws `ParseError` with the line number.
 */
machine parse_machine( std::string_view text );
std::string to_text( const machine& tm );

} // namespace forge
