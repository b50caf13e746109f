#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "walsh.hpp"

namespace bfderiv
{

/*! \brief V(f): the directions a for which D_a f is constant.

  `constants` lists every element of the span in increasing order together
  with the constant value of D_a f.
*/
struct LinearSpace
{
  int dim = 0;
  std::vector<std::uint32_t> basis;
  std::vector<std::pair<std::uint32_t, bool>> constants;

  bool contains( std::uint32_t a ) const
  {
    return std::binary_search( constants.begin(), constants.end(), std::pair{ a, false },
                               []( const auto& l, const auto& r ) { return l.first < r.first; } );
  }
};

namespace detail
{

/// Reduces v against an echelon basis keyed by leading bit.
inline std::uint32_t reduce( std::uint32_t v, const std::vector<std::uint32_t>& echelon )
{
  for ( auto b : echelon )
  {
    v = std::min( v, v ^ b );
  }
  return v;
}

} // namespace detail

inline LinearSpace linear_space( const BooleanFunction& f )
{
  const auto weights = derivative_weights( f );
  const auto full = pow2( f.num_vars() );

  LinearSpace space;
  std::vector<std::uint32_t> echelon;
  for ( std::uint32_t a = 0; a < f.size(); ++a )
  {
    if ( weights[a] != 0 && weights[a] != full )
    {
      continue;
    }
    space.constants.emplace_back( a, weights[a] == full );
    if ( const auto r = detail::reduce( a, echelon ); r != 0 )
    {
      echelon.push_back( r );
      std::sort( echelon.begin(), echelon.end(), std::greater<>() );
      space.basis.push_back( a );
    }
  }
  space.dim = static_cast<int>( space.basis.size() );

  // a subspace has exactly 2^dim elements
  if ( space.constants.size() != ( std::size_t{ 1 } << space.dim ) )
  {
    throw std::logic_error( "linear structures of f are not closed under addition" );
  }
  return space;
}

} // namespace bfderiv
