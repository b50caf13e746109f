#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "common.hpp"

namespace bfderiv
{

/// Polynomial-basis coordinates of an element of GF(2^n).
using field_element = std::uint32_t;

namespace gf2poly
{

/// Polynomials over F_2 packed as bitmasks (bit i = coefficient of x^i).
using poly = std::uint64_t;

inline int deg( poly p ) noexcept
{
  return p == 0 ? -1 : std::bit_width( p ) - 1;
}

inline poly mod( poly a, poly m ) noexcept
{
  const int dm = deg( m );
  for ( int da = deg( a ); da >= dm; da = deg( a ) )
  {
    a ^= m << ( da - dm );
  }
  return a;
}

/// a * b mod m for deg(a), deg(b) < deg(m) <= 31.
inline poly mulmod( poly a, poly b, poly m ) noexcept
{
  poly r = 0;
  while ( b != 0 )
  {
    if ( b & 1u )
      r ^= a;
    b >>= 1;
    a <<= 1;
  }
  return mod( r, m );
}

inline poly gcd( poly a, poly b ) noexcept
{
  while ( b != 0 )
  {
    a = mod( a, b );
    std::swap( a, b );
  }
  return a;
}

/// Rabin's test: x^{2^n} = x mod m and gcd(x^{2^{n/q}} - x, m) = 1 for primes q | n.
inline bool is_irreducible( poly m ) noexcept
{
  const int n = deg( m );
  if ( n < 1 )
    return false;
  const auto x_pow_2k = [&]( int k ) {
    poly t = mod( 2, m );
    for ( int i = 0; i < k; ++i )
      t = mulmod( t, t, m );
    return t;
  };
  const poly x = mod( 2, m );
  if ( x_pow_2k( n ) != x )
    return false;
  for ( int q = 2; q <= n; ++q )
  {
    bool prime = true;
    for ( int d = 2; d * d <= q; ++d )
      prime = prime && q % d != 0;
    if ( prime && n % q == 0 && gcd( x_pow_2k( n / q ) ^ x, m ) != 1 )
      return false;
  }
  return true;
}

} // namespace gf2poly

/// Lowest-weight, numerically smallest irreducible polynomial of each degree 1..20.
inline constexpr std::array<std::uint32_t, max_dimension + 1> default_moduli = {
    0u,
    0x3u, 0x7u, 0xbu, 0x13u, 0x25u, 0x43u, 0x83u, 0x11bu, 0x203u, 0x409u,
    0x805u, 0x1009u, 0x201bu, 0x4021u, 0x8003u, 0x1002bu, 0x20009u, 0x40009u, 0x80027u, 0x100009u };

/*! \brief Arithmetic context for GF(2^n) = F_2[x] / (modulus).

  The constructor rejects moduli that are not irreducible of degree n.
*/
class FieldContext
{
public:
  FieldContext( int n, std::uint32_t modulus )
      : n_( n ), modulus_( modulus )
  {
    check_dimension( n );
    if ( gf2poly::deg( modulus ) != n )
    {
      throw std::invalid_argument( "modulus " + std::to_string( modulus ) + " does not have degree " + std::to_string( n ) );
    }
    if ( !gf2poly::is_irreducible( modulus ) )
    {
      throw std::invalid_argument( "modulus " + std::to_string( modulus ) + " is reducible" );
    }
    // Tr is F_2-linear: record Tr of each basis element x^i
    for ( int i = 0; i < n; ++i )
    {
      if ( trace_by_definition( field_element{ 1 } << i ) )
      {
        trace_mask_ |= field_element{ 1 } << i;
      }
    }
  }

  explicit FieldContext( int n )
      : FieldContext( n, checked_default( n ) )
  {
  }

  int dimension() const noexcept { return n_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t order() const noexcept { return std::uint32_t{ 1 } << n_; }

  /// Carry-less product reduced modulo the field polynomial.
  field_element mul( field_element a, field_element b ) const noexcept
  {
    field_element r = 0;
    const field_element top = field_element{ 1 } << n_;
    while ( b != 0 )
    {
      if ( b & 1u )
        r ^= a;
      b >>= 1;
      a <<= 1;
      if ( a & top )
        a ^= modulus_;
    }
    return r;
  }

  /// Square-and-multiply; pow(a, 0) = 1 for every a, including 0.
  field_element pow( field_element a, std::uint64_t e ) const noexcept
  {
    field_element r = 1;
    while ( e != 0 )
    {
      if ( e & 1u )
        r = mul( r, a );
      a = mul( a, a );
      e >>= 1;
    }
    return r;
  }

  /// a^{2^n - 2}; maps 0 to 0.
  field_element inverse( field_element a ) const noexcept
  {
    return a == 0 ? 0 : pow( a, order() - 2u );
  }

  /// Absolute trace Tr(z) = z + z^2 + ... + z^{2^{n-1}}.
  int trace( field_element z ) const noexcept
  {
    return parity( z & trace_mask_ );
  }

  int trace_by_definition( field_element z ) const noexcept
  {
    field_element sum = 0, t = z;
    for ( int i = 0; i < n_; ++i )
    {
      sum ^= t;
      t = mul( t, t );
    }
    return static_cast<int>( sum );
  }

  bool contains( field_element a ) const noexcept { return a < order(); }

private:
  static std::uint32_t checked_default( int n )
  {
    check_dimension( n );
    return default_moduli[static_cast<std::size_t>( n )];
  }

  int n_;
  std::uint32_t modulus_;
  field_element trace_mask_ = 0;
};

/// Parses a modulus given as "poly=0b1011", "poly=0xB", "0b1011", "0xB" or decimal.
inline std::uint32_t parse_modulus( std::string_view text )
{
  if ( text.starts_with( "poly=" ) )
  {
    text.remove_prefix( 5 );
  }
  int base = 10;
  if ( text.starts_with( "0b" ) || text.starts_with( "0B" ) )
  {
    base = 2;
    text.remove_prefix( 2 );
  }
  else if ( text.starts_with( "0x" ) || text.starts_with( "0X" ) )
  {
    base = 16;
    text.remove_prefix( 2 );
  }
  if ( text.empty() )
  {
    throw parse_error( "empty modulus" );
  }
  std::uint64_t value = 0;
  for ( char c : text )
  {
    int digit;
    if ( c >= '0' && c <= '9' )
      digit = c - '0';
    else if ( c >= 'a' && c <= 'f' )
      digit = c - 'a' + 10;
    else if ( c >= 'A' && c <= 'F' )
      digit = c - 'A' + 10;
    else
      digit = 99;
    if ( digit >= base )
    {
      throw parse_error( "invalid modulus '" + std::string( text ) + "'" );
    }
    value = value * static_cast<std::uint64_t>( base ) + static_cast<std::uint64_t>( digit );
    if ( value > ( std::uint64_t{ 1 } << ( max_dimension + 1 ) ) )
    {
      throw parse_error( "modulus too large" );
    }
  }
  return static_cast<std::uint32_t>( value );
}

} // namespace bfderiv
