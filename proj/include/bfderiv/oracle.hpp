#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "boolean_function.hpp"
#include "vectorial.hpp"
#include "walsh.hpp"

/*! \file oracle.hpp
  \brief Definitional, brute-force versions of the fast computations.

  Nothing here goes through the Walsh butterfly or the closed forms; every
  total is a literal loop over derivative truth tables.
*/

namespace bfderiv::oracle
{

inline constexpr int max_walsh_dimension = 14;
inline constexpr int max_s2_dimension = 10;
inline constexpr int max_ddt_dimension = 12;

inline void guard( int n, int cap, const char* what )
{
  if ( n > cap )
  {
    throw size_error( std::string( what ) + " is limited to n <= " + std::to_string( cap ) );
  }
}

/// W_f(a) = sum_x (-1)^{f(x) + a.x}, O(4^n).
inline WalshSpectrum naive_walsh( const BooleanFunction& f )
{
  guard( f.num_vars(), max_walsh_dimension, "naive_walsh" );
  WalshSpectrum s{ f.num_vars(), std::vector<std::int64_t>( f.size(), 0 ) };
  for ( std::uint32_t a = 0; a < f.size(); ++a )
  {
    std::int64_t sum = 0;
    for ( std::uint32_t x = 0; x < f.size(); ++x )
      sum += ( f.get( x ) ^ dot( a, x ) ) ? -1 : 1;
    s.values[a] = sum;
  }
  return s;
}

/// sum_{a != 0} wt(D_a f)
inline std::int64_t naive_s1( const BooleanFunction& f )
{
  std::int64_t total = 0;
  for ( std::uint32_t a = 1; a < f.size(); ++a )
    total += weight( derivative( f, a ) );
  return total;
}

/// sum_{a != 0} wt(D_a f)^2
inline std::int64_t naive_s1_sq( const BooleanFunction& f )
{
  std::int64_t total = 0;
  for ( std::uint32_t a = 1; a < f.size(); ++a )
  {
    const auto w = weight( derivative( f, a ) );
    total += w * w;
  }
  return total;
}

/// sum_{a != 0} F(D_a f)^2 from enumerated derivatives.
inline std::int64_t naive_derivative_fourier_energy( const BooleanFunction& f )
{
  std::int64_t total = 0;
  for ( std::uint32_t a = 1; a < f.size(); ++a )
  {
    const auto F = fourier( derivative( f, a ) );
    total += F * F;
  }
  return total;
}

/// sum_{a,b != 0} wt(D_b D_a f)
inline std::int64_t naive_s2( const BooleanFunction& f )
{
  guard( f.num_vars(), max_s2_dimension, "naive_s2" );
  std::int64_t total = 0;
  for ( std::uint32_t a = 1; a < f.size(); ++a )
  {
    const auto da = derivative( f, a );
    for ( std::uint32_t b = 1; b < f.size(); ++b )
      total += detail::derivative_weight_packed( da.words(), b );
  }
  return total;
}

struct DifferentialResult
{
  std::uint32_t delta = 0;
  bool is_apn = false;
};

/// delta(F) by counting |{x : F(x + a) + F(x) = b}| for every pair (a, b).
inline DifferentialResult naive_ddt_apn( const VectorialFunction& F )
{
  guard( F.num_vars(), max_ddt_dimension, "naive_ddt_apn" );
  std::uint32_t delta = 0;
  for ( std::uint32_t a = 1; a < F.size(); ++a )
  {
    for ( std::uint32_t b = 0; b < F.size(); ++b )
    {
      std::uint32_t count = 0;
      for ( std::uint32_t x = 0; x < F.size(); ++x )
        count += ( F( x ^ a ) ^ F( x ) ) == b;
      delta = std::max( delta, count );
    }
  }
  return { delta, delta == 2 };
}

struct NaiveVectorialTotals
{
  std::int64_t vs1 = 0;
  std::int64_t vs1_sq = 0;
  std::int64_t vs2 = 0;
  std::vector<std::int64_t> per_direction_s2;
};

/// vs1, vs1_sq, vs2 and the per-direction totals by literal enumeration of components and derivatives.
inline NaiveVectorialTotals naive_vectorial_totals( const VectorialFunction& F )
{
  guard( F.num_vars(), max_s2_dimension, "naive_vectorial_totals" );
  NaiveVectorialTotals t;
  t.per_direction_s2.assign( F.size(), 0 );
  for ( std::uint32_t lambda = 1; lambda < F.size(); ++lambda )
  {
    const auto f = component( F, lambda );
    for ( std::uint32_t a = 1; a < F.size(); ++a )
    {
      const auto da = derivative( f, a );
      const auto w = weight( da );
      t.vs1 += w;
      t.vs1_sq += w * w;
      for ( std::uint32_t b = 1; b < F.size(); ++b )
      {
        const auto w2 = detail::derivative_weight_packed( da.words(), b );
        t.vs2 += w2;
        t.per_direction_s2[a] += w2;
      }
    }
  }
  return t;
}

} // namespace bfderiv::oracle
