#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

#include "boolean_function.hpp"

namespace bfderiv
{

/// W_f(a) for every a in F_2^n; values[0] = F(f).
struct WalshSpectrum
{
  int n = 0;
  std::vector<std::int64_t> values;

  std::int64_t operator[]( std::uint32_t a ) const { return values[a]; }
  friend bool operator==( const WalshSpectrum&, const WalshSpectrum& ) = default;
};

/// In-place unnormalised Walsh-Hadamard butterfly.
inline void fast_walsh_hadamard( std::span<std::int64_t> v ) noexcept
{
  for ( std::size_t half = 1; half < v.size(); half <<= 1 )
  {
    for ( std::size_t block = 0; block < v.size(); block += 2 * half )
    {
      for ( std::size_t i = block; i < block + half; ++i )
      {
        const auto u = v[i];
        const auto w = v[i + half];
        v[i] = u + w;
        v[i + half] = u - w;
      }
    }
  }
}

/// Full spectrum W_f(a) = sum_x (-1)^{f(x) + a.x} in O(n 2^n).
inline WalshSpectrum walsh_transform( const BooleanFunction& f )
{
  WalshSpectrum s{ f.num_vars(), std::vector<std::int64_t>( f.size() ) };
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    s.values[x] = f.get( x ) ? -1 : 1;
  }
  fast_walsh_hadamard( s.values );
  return s;
}

inline std::int64_t max_abs_walsh( const WalshSpectrum& s ) noexcept
{
  std::int64_t m = 0;
  for ( auto w : s.values )
  {
    m = std::max( m, w < 0 ? -w : w );
  }
  return m;
}

/// N(f) = 2^{n-1} - max_a |W_f(a)| / 2
inline std::int64_t nonlinearity( const WalshSpectrum& s ) noexcept
{
  return pow2( s.n - 1 ) - max_abs_walsh( s ) / 2;
}

inline std::int64_t nonlinearity( const BooleanFunction& f )
{
  return nonlinearity( walsh_transform( f ) );
}

/// sum_a W_f(a)^2; equals 2^{2n} for every f.
inline wide_int walsh_square_sum( const WalshSpectrum& s ) noexcept
{
  wide_int total = 0;
  for ( auto w : s.values )
  {
    total += wide_int( w ) * w;
  }
  return total;
}

/// Fourth power moment sum_a W_f(a)^4.
inline wide_int walsh_fourth_moment( const WalshSpectrum& s ) noexcept
{
  wide_int total = 0;
  for ( auto w : s.values )
  {
    const wide_int sq = wide_int( w ) * w;
    total += sq * sq;
  }
  return total;
}

/*! \brief Autocorrelation AC(a) = sum_x (-1)^{f(x) + f(x + a)} = F(D_a f).

  Obtained from the spectrum as the inverse transform of W_f^2, so the whole
  table costs two butterflies.
*/
inline std::vector<std::int64_t> autocorrelation( const WalshSpectrum& s )
{
  std::vector<std::int64_t> ac( s.values.size() );
  std::transform( s.values.begin(), s.values.end(), ac.begin(), []( auto w ) { return w * w; } );
  fast_walsh_hadamard( ac );
  for ( auto& v : ac )
  {
    v >>= s.n;
  }
  return ac;
}

inline std::vector<std::int64_t> autocorrelation( const BooleanFunction& f )
{
  return autocorrelation( walsh_transform( f ) );
}

/// wt(D_a f) for every a, derived from the autocorrelation: (2^n - AC(a)) / 2.
inline std::vector<std::int64_t> derivative_weights( const BooleanFunction& f )
{
  auto w = autocorrelation( f );
  const auto full = pow2( f.num_vars() );
  for ( auto& v : w )
  {
    v = ( full - v ) / 2;
  }
  return w;
}

} // namespace bfderiv
