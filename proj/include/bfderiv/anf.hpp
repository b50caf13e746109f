#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>

#include "boolean_function.hpp"

namespace bfderiv
{

/// Algebraic normal form; coefficient I (a subset bitmask) is a_I.
struct AnfPolynomial
{
  BooleanFunction coeffs;

  int num_vars() const noexcept { return coeffs.num_vars(); }
  bool coefficient( std::uint32_t monomial ) const noexcept { return coeffs.get( monomial ); }
  friend bool operator==( const AnfPolynomial&, const AnfPolynomial& ) = default;
};

namespace detail
{

/* masks selecting positions whose bit j is 1 */
inline constexpr std::uint64_t high_half_mask[] = {
    0xaaaaaaaaaaaaaaaaull,
    0xccccccccccccccccull,
    0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull,
    0xffff0000ffff0000ull,
    0xffffffff00000000ull };

/// Binary Moebius transform on a packed table; an involution.
inline BooleanFunction moebius( BooleanFunction f )
{
  auto words = f.words();
  const int n = f.num_vars();
  for ( int j = 0; j < std::min( n, 6 ); ++j )
  {
    const int s = 1 << j;
    for ( auto& w : words )
    {
      w ^= ( w << s ) & high_half_mask[j];
    }
  }
  for ( int j = 6; j < n; ++j )
  {
    const std::size_t stride = std::size_t{ 1 } << ( j - 6 );
    for ( std::size_t i = 0; i < words.size(); ++i )
    {
      if ( i & stride )
      {
        words[i] ^= words[i ^ stride];
      }
    }
  }
  return f;
}

} // namespace detail

inline AnfPolynomial anf( const BooleanFunction& f )
{
  return AnfPolynomial{ detail::moebius( f ) };
}

inline BooleanFunction to_truth_table( const AnfPolynomial& p )
{
  return detail::moebius( p.coeffs );
}

/// Largest monomial size with a nonzero coefficient; 0 for the zero polynomial.
inline int degree( const AnfPolynomial& p ) noexcept
{
  int d = 0;
  const auto words = p.coeffs.words();
  for ( std::size_t i = 0; i < words.size(); ++i )
  {
    auto w = words[i];
    while ( w != 0 )
    {
      const auto bit = static_cast<std::uint32_t>( std::countr_zero( w ) );
      const auto monomial = static_cast<std::uint32_t>( i * 64 + bit );
      d = std::max( d, std::popcount( monomial ) );
      w &= w - 1;
    }
  }
  return d;
}

inline int degree( const BooleanFunction& f )
{
  return degree( anf( f ) );
}

} // namespace bfderiv
