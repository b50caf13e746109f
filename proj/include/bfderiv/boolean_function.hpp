#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"

namespace bfderiv
{

/*! \brief Truth table of a Boolean function f: F_2^n -> F_2.

  Bit x of the table holds f(x), where input (x_1, ..., x_n) is the integer
  whose bit (j - 1) equals x_j.  The table is stored packed in 64-bit words;
  bits beyond 2^n in the last word are always zero.
*/
class BooleanFunction
{
public:
  BooleanFunction() = default;

  explicit BooleanFunction( int n )
      : n_( n )
  {
    check_dimension( n );
    words_.assign( word_count( n ), 0u );
  }

  template<typename Fn>
  static BooleanFunction from_predicate( int n, Fn&& fn )
  {
    BooleanFunction f( n );
    for ( std::uint32_t x = 0; x < f.size(); ++x )
    {
      if ( fn( x ) )
      {
        f.set( x, true );
      }
    }
    return f;
  }

  static BooleanFunction constant( int n, bool value )
  {
    BooleanFunction f( n );
    if ( value )
    {
      std::fill( f.words_.begin(), f.words_.end(), ~std::uint64_t{ 0 } );
      f.mask_tail();
    }
    return f;
  }

  int num_vars() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return std::uint32_t{ 1 } << n_; }

  bool get( std::uint32_t x ) const noexcept { return ( words_[x >> 6] >> ( x & 63u ) ) & 1u; }
  bool operator()( std::uint32_t x ) const noexcept { return get( x ); }

  void set( std::uint32_t x, bool value ) noexcept
  {
    const auto bit = std::uint64_t{ 1 } << ( x & 63u );
    if ( value )
      words_[x >> 6] |= bit;
    else
      words_[x >> 6] &= ~bit;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  BooleanFunction& operator^=( const BooleanFunction& other )
  {
    require_same_dimension( other );
    for ( std::size_t i = 0; i < words_.size(); ++i )
    {
      words_[i] ^= other.words_[i];
    }
    return *this;
  }

  friend BooleanFunction operator^( BooleanFunction lhs, const BooleanFunction& rhs )
  {
    lhs ^= rhs;
    return lhs;
  }

  friend bool operator==( const BooleanFunction&, const BooleanFunction& ) = default;

  static std::size_t word_count( int n ) noexcept
  {
    return n <= 6 ? 1u : ( std::size_t{ 1 } << ( n - 6 ) );
  }

  /// Clears the padding bits of a single-word table with n < 6.
  void mask_tail() noexcept
  {
    if ( n_ < 6 )
    {
      words_[0] &= ( std::uint64_t{ 1 } << size() ) - 1u;
    }
  }

  void require_same_dimension( const BooleanFunction& other ) const
  {
    if ( other.n_ != n_ )
    {
      throw std::invalid_argument( "Boolean functions have different dimensions" );
    }
  }

private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

namespace detail
{

/* masks selecting positions whose bit j is 0 */
inline constexpr std::uint64_t low_half_mask[] = {
    0x5555555555555555ull,
    0x3333333333333333ull,
    0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull,
    0x0000ffff0000ffffull,
    0x00000000ffffffffull };

/// Permutes bit positions p -> p ^ a inside one word, for a < 64.
inline std::uint64_t xor_permute_word( std::uint64_t w, std::uint32_t a ) noexcept
{
  for ( int j = 0; j < 6; ++j )
  {
    if ( ( a >> j ) & 1u )
    {
      const int s = 1 << j;
      w = ( ( w >> s ) & low_half_mask[j] ) | ( ( w & low_half_mask[j] ) << s );
    }
  }
  return w;
}

/// dst(x) = src(x ^ a); dst must already have src's dimension.
inline void translate_into( std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint32_t a ) noexcept
{
  const std::uint32_t a_hi = a >> 6;
  const std::uint32_t a_lo = a & 63u;
  for ( std::size_t w = 0; w < src.size(); ++w )
  {
    dst[w] = xor_permute_word( src[w ^ a_hi], a_lo );
  }
}

/// popcount of (f ^ f translated by a), i.e. wt(D_a f), without allocation.
inline std::int64_t derivative_weight_packed( std::span<const std::uint64_t> src, std::uint32_t a ) noexcept
{
  const std::uint32_t a_hi = a >> 6;
  const std::uint32_t a_lo = a & 63u;
  std::int64_t total = 0;
  for ( std::size_t w = 0; w < src.size(); ++w )
  {
    total += std::popcount( src[w] ^ xor_permute_word( src[w ^ a_hi], a_lo ) );
  }
  return total;
}

inline void check_direction( const BooleanFunction& f, std::uint32_t a )
{
  if ( a >= f.size() )
  {
    throw std::out_of_range( "direction " + std::to_string( a ) + " outside F_2^" + std::to_string( f.num_vars() ) );
  }
}

} // namespace detail

inline std::int64_t weight( const BooleanFunction& f ) noexcept
{
  std::int64_t total = 0;
  for ( auto w : f.words() )
  {
    total += std::popcount( w );
  }
  return total;
}

/// F(f) = W_f(0) = 2^n - 2 wt(f).
inline std::int64_t fourier( const BooleanFunction& f ) noexcept
{
  return pow2( f.num_vars() ) - 2 * weight( f );
}

inline bool is_balanced( const BooleanFunction& f ) noexcept
{
  return 2 * weight( f ) == pow2( f.num_vars() );
}

inline bool is_constant( const BooleanFunction& f ) noexcept
{
  const auto w = weight( f );
  return w == 0 || w == pow2( f.num_vars() );
}

/// x -> f(x + a)
inline BooleanFunction translate( const BooleanFunction& f, std::uint32_t a )
{
  detail::check_direction( f, a );
  BooleanFunction g( f.num_vars() );
  detail::translate_into( g.words(), f.words(), a );
  return g;
}

/// First-order derivative D_a f(x) = f(x + a) + f(x).  D_0 f is the zero function.
inline BooleanFunction derivative( const BooleanFunction& f, std::uint32_t a )
{
  auto g = translate( f, a );
  g ^= f;
  return g;
}

/// D_b D_a f(x) = f(x) + f(x + a) + f(x + b) + f(x + a + b).
inline BooleanFunction second_derivative( const BooleanFunction& f, std::uint32_t a, std::uint32_t b )
{
  detail::check_direction( f, b );
  return derivative( derivative( f, a ), b );
}

/// wt(D_a f) by a direct pass over the packed table.
inline std::int64_t derivative_weight( const BooleanFunction& f, std::uint32_t a )
{
  detail::check_direction( f, a );
  return detail::derivative_weight_packed( f.words(), a );
}

// ---------------------------------------------------------------------------
// Text and binary formats
// ---------------------------------------------------------------------------

namespace detail
{

inline std::string_view trim( std::string_view s )
{
  const auto first = s.find_first_not_of( " \t\r\n" );
  if ( first == std::string_view::npos )
  {
    return {};
  }
  const auto last = s.find_last_not_of( " \t\r\n" );
  return s.substr( first, last - first + 1 );
}

/// Parses an "n=<k>" header line; returns -1 when the line is not a header.
inline int parse_dimension_header( std::string_view line )
{
  line = trim( line );
  if ( line.size() < 3 || line.substr( 0, 2 ) != "n=" )
  {
    return -1;
  }
  int n = 0;
  for ( char c : line.substr( 2 ) )
  {
    if ( c < '0' || c > '9' || n > max_dimension )
    {
      throw parse_error( "bad dimension header '" + std::string( line ) + "'" );
    }
    n = n * 10 + ( c - '0' );
  }
  return n;
}

inline int log2_exact( std::size_t length )
{
  if ( length == 0 || ( length & ( length - 1 ) ) != 0 )
  {
    return -1;
  }
  return std::countr_zero( length );
}

} // namespace detail

/// Parses a truth table from a string of '0'/'1' characters, index 0 first.
inline BooleanFunction truth_table_from_bits( std::string_view bits )
{
  bits = detail::trim( bits );
  const int n = detail::log2_exact( bits.size() );
  if ( n < 1 )
  {
    throw parse_error( "truth table length " + std::to_string( bits.size() ) + " is not 2^n with n >= 1" );
  }
  if ( n > max_dimension )
  {
    throw size_error( "truth table with n = " + std::to_string( n ) + " exceeds the dimension cap" );
  }
  BooleanFunction f( n );
  for ( std::uint32_t x = 0; x < bits.size(); ++x )
  {
    const char c = bits[x];
    if ( c != '0' && c != '1' )
    {
      throw parse_error( std::string( "invalid truth table character '" ) + c + "'" );
    }
    f.set( x, c == '1' );
  }
  return f;
}

/// Reads the text format: optional "n=<k>" header line followed by one line of 2^n bits.
inline BooleanFunction read_truth_table_text( std::istream& in )
{
  std::string line;
  int declared = -1;
  std::string bits;
  while ( std::getline( in, line ) )
  {
    const auto t = detail::trim( line );
    if ( t.empty() )
    {
      continue;
    }
    if ( declared < 0 && bits.empty() )
    {
      if ( const int n = detail::parse_dimension_header( t ); n >= 0 )
      {
        declared = n;
        continue;
      }
    }
    if ( !bits.empty() )
    {
      throw parse_error( "truth table must be a single line" );
    }
    bits = std::string( t );
  }
  if ( bits.empty() )
  {
    throw parse_error( "empty truth table" );
  }
  auto f = truth_table_from_bits( bits );
  if ( declared >= 0 && declared != f.num_vars() )
  {
    throw parse_error( "header n=" + std::to_string( declared ) + " disagrees with table length" );
  }
  return f;
}

inline std::string to_bit_string( const BooleanFunction& f )
{
  std::string out( f.size(), '0' );
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    if ( f.get( x ) )
    {
      out[x] = '1';
    }
  }
  return out;
}

inline std::string write_truth_table_text( const BooleanFunction& f )
{
  return "n=" + std::to_string( f.num_vars() ) + "\n" + to_bit_string( f ) + "\n";
}

/// Binary format: little-endian packed bits, bit x in byte x / 8 at position x % 8.
inline std::vector<std::uint8_t> to_binary( const BooleanFunction& f )
{
  if ( f.num_vars() < 3 )
  {
    throw std::invalid_argument( "binary truth tables need n >= 3" );
  }
  std::vector<std::uint8_t> bytes( f.size() / 8 );
  for ( std::size_t i = 0; i < bytes.size(); ++i )
  {
    bytes[i] = static_cast<std::uint8_t>( f.words()[i / 8] >> ( 8 * ( i % 8 ) ) );
  }
  return bytes;
}

inline BooleanFunction from_binary( std::span<const std::uint8_t> bytes )
{
  const int n = detail::log2_exact( bytes.size() * 8 );
  if ( n < 3 )
  {
    throw parse_error( "binary truth table size " + std::to_string( bytes.size() ) + " is not 2^(n-3) bytes" );
  }
  if ( n > max_dimension )
  {
    throw size_error( "binary truth table exceeds the dimension cap" );
  }
  BooleanFunction f( n );
  auto words = f.words();
  for ( std::size_t i = 0; i < bytes.size(); ++i )
  {
    words[i / 8] |= std::uint64_t{ bytes[i] } << ( 8 * ( i % 8 ) );
  }
  return f;
}

} // namespace bfderiv
