#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "anf.hpp"
#include "boolean_function.hpp"
#include "gf2n.hpp"

namespace bfderiv
{

/// Where a vectorial function came from; recorded in reports.
struct Provenance
{
  std::string kind = "lut"; // lut | power | univariate | catalog
  std::string name;
  std::optional<std::uint64_t> exponent;
  std::vector<field_element> coefficients;
  std::optional<std::uint32_t> modulus;
};

/// F: F_2^n -> F_2^n as a lookup table.
class VectorialFunction
{
public:
  VectorialFunction() = default;

  VectorialFunction( int n, std::vector<std::uint32_t> lut, Provenance provenance = {} )
      : n_( n ), lut_( std::move( lut ) ), provenance_( std::move( provenance ) )
  {
    check_dimension( n );
    if ( lut_.size() != ( std::size_t{ 1 } << n ) )
    {
      throw std::invalid_argument( "LUT length " + std::to_string( lut_.size() ) + " is not 2^" + std::to_string( n ) );
    }
    for ( auto v : lut_ )
    {
      if ( v >= lut_.size() )
      {
        throw std::invalid_argument( "LUT entry " + std::to_string( v ) + " outside F_2^" + std::to_string( n ) );
      }
    }
  }

  static VectorialFunction identity( int n )
  {
    check_dimension( n );
    std::vector<std::uint32_t> lut( std::size_t{ 1 } << n );
    for ( std::uint32_t x = 0; x < lut.size(); ++x )
      lut[x] = x;
    return VectorialFunction( n, std::move( lut ), Provenance{ "catalog", "identity", {}, {}, {} } );
  }

  int num_vars() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return std::uint32_t{ 1 } << n_; }
  std::uint32_t operator()( std::uint32_t x ) const { return lut_[x]; }
  const std::vector<std::uint32_t>& lut() const noexcept { return lut_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  Provenance& provenance() noexcept { return provenance_; }

  friend bool operator==( const VectorialFunction& l, const VectorialFunction& r ) { return l.n_ == r.n_ && l.lut_ == r.lut_; }

private:
  int n_ = 0;
  std::vector<std::uint32_t> lut_;
  Provenance provenance_;
};

/// Component F_lambda(x) = lambda . F(x), lambda != 0.
inline BooleanFunction component( const VectorialFunction& F, std::uint32_t lambda )
{
  if ( lambda == 0 || lambda >= F.size() )
  {
    throw std::invalid_argument( "component mask " + std::to_string( lambda ) + " must lie in [1, 2^n)" );
  }
  BooleanFunction f( F.num_vars() );
  for ( std::uint32_t x = 0; x < F.size(); ++x )
  {
    if ( dot( lambda, F( x ) ) )
      f.set( x, true );
  }
  return f;
}

inline bool is_permutation( const VectorialFunction& F )
{
  std::vector<bool> seen( F.size(), false );
  for ( auto v : F.lut() )
  {
    if ( seen[v] )
      return false;
    seen[v] = true;
  }
  return true;
}

/// delta_F(a, b) for all a, b; row-major 2^n x 2^n.
class DifferenceDistributionTable
{
public:
  static constexpr int max_materialized_dimension = 12;

  explicit DifferenceDistributionTable( const VectorialFunction& F )
      : n_( F.num_vars() )
  {
    if ( n_ > max_materialized_dimension )
    {
      throw size_error( "DDT materialisation is limited to n <= 12" );
    }
    const std::size_t size = F.size();
    counts_.assign( size * size, 0u );
    for ( std::uint32_t a = 0; a < size; ++a )
    {
      auto* row = &counts_[a * size];
      for ( std::uint32_t x = 0; x < size; ++x )
        ++row[F( x ) ^ F( x ^ a )];
    }
  }

  int num_vars() const noexcept { return n_; }
  std::uint32_t at( std::uint32_t a, std::uint32_t b ) const { return counts_[( std::size_t{ a } << n_ ) + b]; }

  std::span<const std::uint32_t> row( std::uint32_t a ) const
  {
    return std::span<const std::uint32_t>( counts_ ).subspan( std::size_t{ a } << n_, std::size_t{ 1 } << n_ );
  }

private:
  int n_;
  std::vector<std::uint32_t> counts_;
};

inline DifferenceDistributionTable ddt( const VectorialFunction& F )
{
  return DifferenceDistributionTable( F );
}

/// delta(F) = max over a != 0 and all b, streamed one row at a time.
inline std::uint32_t differential_uniformity( const VectorialFunction& F )
{
  std::vector<std::uint32_t> row( F.size() );
  std::uint32_t best = 0;
  for ( std::uint32_t a = 1; a < F.size(); ++a )
  {
    std::fill( row.begin(), row.end(), 0u );
    for ( std::uint32_t x = 0; x < F.size(); ++x )
      ++row[F( x ) ^ F( x ^ a )];
    best = std::max( best, *std::max_element( row.begin(), row.end() ) );
  }
  return best;
}

inline bool is_apn( const VectorialFunction& F )
{
  return differential_uniformity( F ) == 2;
}

inline VectorialFunction from_power( const FieldContext& ctx, std::uint64_t d )
{
  if ( d >= ctx.order() )
  {
    throw std::invalid_argument( "exponent " + std::to_string( d ) + " exceeds 2^n - 1" );
  }
  std::vector<std::uint32_t> lut( ctx.order() );
  for ( field_element x = 0; x < ctx.order(); ++x )
    lut[x] = ctx.pow( x, d );
  return VectorialFunction( ctx.dimension(), std::move( lut ), Provenance{ "power", {}, d, {}, ctx.modulus() } );
}

/// Evaluates F(x) = sum_i coeffs[i] x^i pointwise (Horner).
inline VectorialFunction from_univariate( const FieldContext& ctx, std::span<const field_element> coeffs )
{
  if ( coeffs.size() > ctx.order() )
  {
    throw std::invalid_argument( "more than 2^n univariate coefficients" );
  }
  for ( auto c : coeffs )
  {
    if ( !ctx.contains( c ) )
      throw std::invalid_argument( "coefficient " + std::to_string( c ) + " is not a field element" );
  }
  std::vector<std::uint32_t> lut( ctx.order() );
  for ( field_element x = 0; x < ctx.order(); ++x )
  {
    field_element acc = 0;
    for ( auto it = coeffs.rbegin(); it != coeffs.rend(); ++it )
      acc = ctx.mul( acc, x ) ^ *it;
    lut[x] = acc;
  }
  return VectorialFunction( ctx.dimension(), std::move( lut ),
                            Provenance{ "univariate", {}, {}, std::vector<field_element>( coeffs.begin(), coeffs.end() ), ctx.modulus() } );
}

/// max{ w_2(i) : coeffs[i] != 0 }, the algebraic degree read off the univariate form.
inline int univariate_degree( std::span<const field_element> coeffs ) noexcept
{
  int d = 0;
  for ( std::size_t i = 0; i < coeffs.size(); ++i )
  {
    if ( coeffs[i] != 0 )
      d = std::max( d, std::popcount( i ) );
  }
  return d;
}

/// Coordinate function f_i = e_i . F.
inline BooleanFunction coordinate( const VectorialFunction& F, int i )
{
  return component( F, std::uint32_t{ 1 } << i );
}

/*! \brief deg(F) = max over lambda != 0 of deg(F_lambda).

  Each component's ANF is the XOR of coordinate ANFs, so the maximum is
  reached on a coordinate.
*/
inline int degree( const VectorialFunction& F )
{
  int d = 0;
  for ( int i = 0; i < F.num_vars(); ++i )
    d = std::max( d, degree( coordinate( F, i ) ) );
  return d;
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

namespace detail
{

inline std::uint64_t parse_unsigned( std::string_view token )
{
  token = trim( token );
  int base = 10;
  if ( token.starts_with( "0x" ) || token.starts_with( "0X" ) )
  {
    base = 16;
    token.remove_prefix( 2 );
  }
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars( token.data(), end, value, base );
  if ( token.empty() || ec != std::errc() || ptr != end )
  {
    throw parse_error( "invalid integer '" + std::string( token ) + "'" );
  }
  return value;
}

inline std::vector<std::string_view> split( std::string_view s, char sep )
{
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while ( true )
  {
    const auto pos = s.find( sep, start );
    parts.push_back( s.substr( start, pos == std::string_view::npos ? std::string_view::npos : pos - start ) );
    if ( pos == std::string_view::npos )
      break;
    start = pos + 1;
  }
  return parts;
}

} // namespace detail

/// Whitespace-separated decimal or 0x-hex values with an optional "n=<k>" header.
inline VectorialFunction read_lut_text( std::istream& in )
{
  std::string token;
  int declared = -1;
  std::vector<std::uint32_t> values;
  while ( in >> token )
  {
    if ( values.empty() && declared < 0 )
    {
      if ( const int n = detail::parse_dimension_header( token ); n >= 0 )
      {
        declared = n;
        continue;
      }
    }
    const auto v = detail::parse_unsigned( token );
    if ( v > ( std::uint64_t{ 1 } << max_dimension ) )
      throw parse_error( "LUT value " + token + " too large" );
    values.push_back( static_cast<std::uint32_t>( v ) );
    if ( values.size() > ( std::size_t{ 1 } << max_dimension ) )
      throw size_error( "LUT exceeds the dimension cap" );
  }
  const int n = detail::log2_exact( values.size() );
  if ( n < 1 )
  {
    throw parse_error( "LUT length " + std::to_string( values.size() ) + " is not 2^n with n >= 1" );
  }
  if ( declared >= 0 && declared != n )
  {
    throw parse_error( "header n=" + std::to_string( declared ) + " disagrees with LUT length" );
  }
  for ( auto v : values )
  {
    if ( v >= values.size() )
      throw parse_error( "LUT value " + std::to_string( v ) + " outside F_2^" + std::to_string( n ) );
  }
  return VectorialFunction( n, std::move( values ) );
}

inline std::string write_lut_text( const VectorialFunction& F )
{
  std::ostringstream out;
  out << "n=" << F.num_vars() << '\n';
  for ( std::uint32_t x = 0; x < F.size(); ++x )
  {
    out << F( x ) << ( ( x + 1 ) % 16 == 0 || x + 1 == F.size() ? '\n' : ' ' );
  }
  return out.str();
}

struct PowerSpec
{
  int n = 0;
  std::uint64_t exponent = 0;
  std::optional<std::uint32_t> modulus;
};

struct UnivariateSpec
{
  int n = 0;
  std::vector<field_element> coefficients;
  std::optional<std::uint32_t> modulus;
};

namespace detail
{

inline int parse_spec_dimension( std::string_view value )
{
  const auto n = parse_unsigned( value );
  if ( n < 1 || n > static_cast<std::uint64_t>( max_dimension ) )
    throw parse_error( "dimension " + std::string( value ) + " outside [1, 20]" );
  return static_cast<int>( n );
}

} // namespace detail

/// "n=<k>,d=<int>[,poly=<mask>]"
inline PowerSpec parse_power_spec( std::string_view text )
{
  PowerSpec spec;
  bool has_n = false, has_d = false;
  for ( auto part : detail::split( detail::trim( text ), ',' ) )
  {
    const auto eq = part.find( '=' );
    if ( eq == std::string_view::npos )
      throw parse_error( "malformed power spec element '" + std::string( part ) + "'" );
    const auto key = detail::trim( part.substr( 0, eq ) );
    const auto value = part.substr( eq + 1 );
    if ( key == "n" )
    {
      spec.n = detail::parse_spec_dimension( value );
      has_n = true;
    }
    else if ( key == "d" )
    {
      spec.exponent = detail::parse_unsigned( value );
      has_d = true;
    }
    else if ( key == "poly" )
      spec.modulus = parse_modulus( detail::trim( value ) );
    else
      throw parse_error( "unknown power spec key '" + std::string( key ) + "'" );
  }
  if ( !has_n || !has_d )
    throw parse_error( "power spec needs n= and d=" );
  return spec;
}

/// "n=<k>,coeffs=<c_0,c_1,...>[,poly=<mask>]"; bare items continue the coefficient list.
inline UnivariateSpec parse_univariate_spec( std::string_view text )
{
  UnivariateSpec spec;
  bool has_n = false, in_coeffs = false;
  for ( auto part : detail::split( detail::trim( text ), ',' ) )
  {
    const auto eq = part.find( '=' );
    if ( eq == std::string_view::npos )
    {
      if ( !in_coeffs )
        throw parse_error( "malformed univariate spec element '" + std::string( part ) + "'" );
      spec.coefficients.push_back( static_cast<field_element>( detail::parse_unsigned( part ) ) );
      continue;
    }
    in_coeffs = false;
    const auto key = detail::trim( part.substr( 0, eq ) );
    const auto value = part.substr( eq + 1 );
    if ( key == "n" )
    {
      spec.n = detail::parse_spec_dimension( value );
      has_n = true;
    }
    else if ( key == "coeffs" )
    {
      in_coeffs = true;
      spec.coefficients.push_back( static_cast<field_element>( detail::parse_unsigned( value ) ) );
    }
    else if ( key == "poly" )
      spec.modulus = parse_modulus( detail::trim( value ) );
    else
      throw parse_error( "unknown univariate spec key '" + std::string( key ) + "'" );
  }
  if ( !has_n || spec.coefficients.empty() )
    throw parse_error( "univariate spec needs n= and coeffs=" );
  return spec;
}

inline FieldContext make_context( int n, std::optional<std::uint32_t> modulus )
{
  return modulus ? FieldContext( n, *modulus ) : FieldContext( n );
}

inline VectorialFunction from_power_spec( const PowerSpec& spec )
{
  return from_power( make_context( spec.n, spec.modulus ), spec.exponent );
}

inline VectorialFunction from_univariate_spec( const UnivariateSpec& spec )
{
  return from_univariate( make_context( spec.n, spec.modulus ), spec.coefficients );
}

} // namespace bfderiv
