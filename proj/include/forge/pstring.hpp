#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace forge
{

/// Characters of the ternary input alphabet. The numeric values double as the
/// 2-bit binary code used when a ternary string is fed to a circuit.
enum class symbol : std::uint8_t
{
  zero = 0,
  one = 1,
  placeholder = 2
};

char to_char( symbol s );

/*! \brief Bit string used as a prefix filling or a circuit assignment. */
class bit_string
{
public:
  bit_string() = default;
  explicit bit_string( std::vector<bool> bits ) : bits_( std::move( bits ) ) {}

  /// Parses a string of '0'/'1'. Throws `IllegalCharacter`.
  static bit_string parse( std::string_view text );
  /// The `width` low bits of `value`, most significant first.
  static bit_string from_uint( std::uint64_t value, std::size_t width );

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[]( std::size_t i ) const { return bits_[i]; }
  const std::vector<bool>& bits() const noexcept { return bits_; }

  std::string str() const;

  friend bool operator==( const bit_string&, const bit_string& ) = default;
  friend auto operator<=>( const bit_string& a, const bit_string& b ) { return a.bits_ <=> b.bits_; }

private:
  std::vector<bool> bits_;
};

/*! \brief Immutable string over {0,1,p} with cached placeholder positions.
 *
 * `positions()` always equals the ascending indices of placeholder characters.
 */
class pstring
{
public:
  pstring() = default;
  explicit pstring( std::vector<symbol> chars );

  /// Throws `IllegalCharacter` naming the first offending position.
  static pstring parse( std::string_view text );

  std::size_t length() const noexcept { return chars_.size(); }
  std::size_t pcount() const noexcept { return positions_.size(); }
  const std::vector<std::size_t>& positions() const noexcept { return positions_; }
  const std::vector<symbol>& chars() const noexcept { return chars_; }
  symbol operator[]( std::size_t i ) const { return chars_[i]; }

  std::string str() const;

  friend bool operator==( const pstring& a, const pstring& b ) { return a.chars_ == b.chars_; }
  friend bool operator<( const pstring& a, const pstring& b ) { return a.chars_ < b.chars_; }

private:
  std::vector<symbol> chars_;
  std::vector<std::size_t> positions_;
};

inline pstring parse_pstring( std::string_view text ) { return pstring::parse( text ); }

/// Prefix filling: the i-th placeholder becomes r[i] for i < min(|r|, pcount(x)).
pstring apply_filling( const pstring& x, const bit_string& r );

/// x refines y: equal length and x arises from y by filling some placeholders.
bool refines( const pstring& x, const pstring& y );

/// All strings refining some member of `language`.
std::set<pstring> closure_of( const std::set<pstring>& language );

/*! \brief Single-pass stream of distinct prefix-filling images.
 *
 * Yields (r, apply_filling(x, r)) for every r with |r| <= min(w, pcount(x)),
 * shortest first and lexicographic within a length.
 */
class filling_enumerator
{
public:
  filling_enumerator( pstring x, std::size_t w );

  bool next( bit_string& r, pstring& image );

  /// Number of pairs the stream yields in total: 2^{min(w,pcount)+1} - 1.
  std::uint64_t total() const noexcept;

private:
  pstring x_;
  std::size_t max_len_;
  std::size_t len_ = 0;
  std::uint64_t value_ = 0;
  bool done_ = false;
};

std::vector<std::pair<bit_string, pstring>> enumerate_fillings( const pstring& x, std::size_t w );

/// Binary code for ternary symbols and the blank: 0->00, 1->01, p->10, blank->11.
std::vector<bool> ternary_to_binary( const pstring& x );

} // namespace forge
