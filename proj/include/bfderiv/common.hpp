#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bfderiv
{

/// Largest supported number of input variables.
inline constexpr int max_dimension = 20;

/// Hard cap for vectorial analysis; keeps every vectorial total inside int64.
inline constexpr int max_vectorial_dimension = 14;

using wide_int = __int128;

/// Malformed textual input (truth tables, LUTs, specs, reports).
class parse_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A computation refused because the requested size exceeds a guard.
class size_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

inline int parity( std::uint64_t v ) noexcept
{
  return std::popcount( v ) & 1;
}

/// Dot product a.x over F_2 with x_1 stored in the least significant bit.
inline int dot( std::uint32_t a, std::uint32_t x ) noexcept
{
  return parity( a & x );
}

inline void check_dimension( int n, int cap = max_dimension )
{
  if ( n < 1 || n > cap )
  {
    throw std::invalid_argument( "dimension " + std::to_string( n ) + " outside [1, " + std::to_string( cap ) + "]" );
  }
}

inline std::string to_string( wide_int v )
{
  if ( v == 0 )
  {
    return "0";
  }
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>( -( v + 1 ) ) + 1 : static_cast<unsigned __int128>( v );
  std::string digits;
  while ( u != 0 )
  {
    digits.insert( digits.begin(), static_cast<char>( '0' + static_cast<int>( u % 10 ) ) );
    u /= 10;
  }
  return negative ? "-" + digits : digits;
}

/// Exact integer square root; returns -1 when v is not a perfect square.
inline std::int64_t exact_sqrt( std::int64_t v )
{
  if ( v < 0 )
  {
    return -1;
  }
  std::int64_t lo = 0, hi = 3037000499LL;
  while ( lo < hi )
  {
    const std::int64_t mid = lo + ( hi - lo + 1 ) / 2;
    if ( mid * mid <= v )
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo * lo == v ? lo : -1;
}

inline constexpr std::int64_t pow2( int e ) noexcept
{
  return std::int64_t{ 1 } << e;
}

} // namespace bfderiv
