#pragma once

#include <bit>
#include <cstdint>
#include <optional>

#include "anf.hpp"
#include "walsh.hpp"

namespace bfderiv
{

struct Classification
{
  bool is_balanced = false;
  bool is_bent = false;
  bool is_semi_bent = false;
  std::optional<int> plateaued_order;
  bool is_partially_bent = false;
  bool is_quadratic = false;

  friend bool operator==( const Classification&, const Classification& ) = default;
};

/// Nonlinearity required of a semi-bent function on n variables.
inline std::int64_t semi_bent_nonlinearity( int n ) noexcept
{
  return n % 2 == 1 ? pow2( n - 1 ) - pow2( ( n - 1 ) / 2 ) : pow2( n - 1 ) - pow2( n / 2 );
}

inline bool is_bent( const WalshSpectrum& s ) noexcept
{
  if ( s.n % 2 != 0 )
  {
    return false;
  }
  const auto target = pow2( s.n / 2 );
  for ( auto w : s.values )
  {
    if ( w != target && w != -target )
      return false;
  }
  return true;
}

inline bool is_semi_bent( const WalshSpectrum& s ) noexcept
{
  return nonlinearity( s ) == semi_bent_nonlinearity( s.n );
}

/// Even r with all nonzero W_f^2 equal to 2^{2n-r}; nullopt when not plateaued.
inline std::optional<int> plateaued_order( const WalshSpectrum& s )
{
  std::int64_t value = 0;
  for ( auto w : s.values )
  {
    if ( w == 0 )
      continue;
    const auto sq = w * w;
    if ( value == 0 )
      value = sq;
    else if ( sq != value )
      return std::nullopt;
  }
  if ( value == 0 || !std::has_single_bit( static_cast<std::uint64_t>( value ) ) )
  {
    return std::nullopt;
  }
  const int r = 2 * s.n - std::countr_zero( static_cast<std::uint64_t>( value ) );
  if ( r < 0 || r > s.n || r % 2 != 0 )
  {
    return std::nullopt;
  }
  return r;
}

/// Every derivative balanced or constant.
inline bool is_partially_bent( const BooleanFunction& f )
{
  const auto full = pow2( f.num_vars() );
  for ( auto w : derivative_weights( f ) )
  {
    if ( w != 0 && w != full && 2 * w != full )
      return false;
  }
  return true;
}

inline Classification classify( const BooleanFunction& f )
{
  const auto spectrum = walsh_transform( f );
  Classification c;
  c.is_balanced = spectrum.values[0] == 0;
  c.is_bent = is_bent( spectrum );
  c.is_semi_bent = is_semi_bent( spectrum );
  c.plateaued_order = plateaued_order( spectrum );
  c.is_partially_bent = is_partially_bent( f );
  c.is_quadratic = degree( f ) == 2;
  return c;
}

} // namespace bfderiv
