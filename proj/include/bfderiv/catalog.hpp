#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "classify.hpp"
#include "metrics.hpp"
#include "vectorial.hpp"

namespace bfderiv::catalog
{

/// x^{2^k + 1}; APN whenever gcd(k, n) = 1.
inline VectorialFunction gold( int n, int k, std::optional<std::uint32_t> modulus = {} )
{
  check_dimension( n );
  if ( k < 1 || k >= n || std::gcd( k, n ) != 1 )
  {
    throw std::invalid_argument( "gold(n, k) needs 1 <= k < n and gcd(k, n) = 1" );
  }
  auto F = from_power( make_context( n, modulus ), ( std::uint64_t{ 1 } << k ) + 1 );
  F.provenance().kind = "catalog";
  F.provenance().name = "gold";
  return F;
}

/// x^{2^{2k} - 2^k + 1} with gcd(k, n) = 1.
inline VectorialFunction kasami( int n, int k, std::optional<std::uint32_t> modulus = {} )
{
  check_dimension( n );
  if ( k < 1 || k >= n || std::gcd( k, n ) != 1 )
  {
    throw std::invalid_argument( "kasami(n, k) needs 1 <= k < n and gcd(k, n) = 1" );
  }
  const std::uint64_t d = ( std::uint64_t{ 1 } << ( 2 * k ) ) - ( std::uint64_t{ 1 } << k ) + 1;
  const auto ctx = make_context( n, modulus );
  // reduce modulo 2^n - 1 so that the exponent is a valid LUT parameter (x^0 handled separately)
  const std::uint64_t group = ctx.order() - 1u;
  auto F = from_power( ctx, d % group == 0 ? group : d % group );
  F.provenance().kind = "catalog";
  F.provenance().name = "kasami";
  F.provenance().exponent = d;
  return F;
}

/// x^{2^n - 2}, i.e. x^{-1} with 0 -> 0.
inline VectorialFunction inverse_map( int n, std::optional<std::uint32_t> modulus = {} )
{
  const auto ctx = make_context( n, modulus );
  std::vector<std::uint32_t> lut( ctx.order() );
  for ( field_element x = 0; x < ctx.order(); ++x )
    lut[x] = ctx.inverse( x );
  return VectorialFunction( n, std::move( lut ), Provenance{ "catalog", "inverse", ctx.order() - 2u, {}, ctx.modulus() } );
}

/*! \brief APN permutation of F_2^6, affine-equivalent to Dillon's permutation.

  Obtained from the open butterfly over GF(2^3) = F_2[x]/(x^3 + x + 1):
  with R_k(t) = (t + x k)^3 + k^3, (u, v) maps to (l, R_l(v)) where
  l = R_v^{-1}(u); input u + 8 v, output l + 8 R_l(v).
*/
inline constexpr std::array<std::uint32_t, 64> dillon_lut = {
    0, 17, 39, 50, 27, 12, 61, 46, 51, 42, 8, 53, 6, 41, 52, 63,
    14, 11, 21, 36, 34, 9, 24, 7, 45, 10, 19, 32, 22, 47, 1, 44,
    31, 40, 5, 30, 26, 59, 49, 60, 20, 23, 18, 29, 38, 3, 25, 48,
    33, 2, 35, 28, 37, 56, 54, 55, 58, 15, 13, 4, 16, 43, 62, 57 };

inline constexpr std::uint64_t dillon_checksum = 0x78fc704d076ddbfdull;

/// FNV-1a over the LUT values (one byte each for n <= 8).
inline std::uint64_t fnv1a( std::span<const std::uint32_t> values ) noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for ( auto v : values )
  {
    h ^= v;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline VectorialFunction dillon_permutation()
{
  if ( fnv1a( dillon_lut ) != dillon_checksum )
  {
    throw std::runtime_error( "dillon fixture checksum mismatch" );
  }
  VectorialFunction F( 6, std::vector<std::uint32_t>( dillon_lut.begin(), dillon_lut.end() ),
                       Provenance{ "catalog", "dillon", {}, {}, {} } );
  if ( !is_permutation( F ) || differential_uniformity( F ) != 2 )
  {
    throw std::runtime_error( "dillon fixture is not an APN permutation" );
  }
  return F;
}

/*! \brief Canonical quadratic forms.

  balanced:   x_1x_2 + ... + x_{2k-1}x_{2k} + x_{2k+1}, k <= (n - 1) / 2
  unbalanced: x_1x_2 + ... + x_{2k-1}x_{2k} + c,        k <= n / 2
*/
inline BooleanFunction quadratic_canonical( int n, int k, bool balanced, bool c = false )
{
  check_dimension( n );
  const int limit = balanced ? ( n - 1 ) / 2 : n / 2;
  if ( k < 0 || k > limit )
  {
    throw std::invalid_argument( "k = " + std::to_string( k ) + " out of range for the canonical quadratic form" );
  }
  return BooleanFunction::from_predicate( n, [&]( std::uint32_t x ) {
    int v = 0;
    for ( int i = 0; i < k; ++i )
      v ^= ( ( x >> ( 2 * i ) ) & ( x >> ( 2 * i + 1 ) ) ) & 1u;
    v ^= balanced ? ( ( x >> ( 2 * k ) ) & 1u ) : static_cast<unsigned>( c );
    return v != 0;
  } );
}

/// f(x, y) = x . pi(y) + g(y) with x the low n/2 bits and y the high n/2 bits.
inline BooleanFunction maiorana_mcfarland( int n, std::span<const std::uint32_t> pi, const BooleanFunction& g )
{
  check_dimension( n );
  if ( n % 2 != 0 )
    throw std::invalid_argument( "Maiorana-McFarland needs even n" );
  const int m = n / 2;
  const std::uint32_t half = std::uint32_t{ 1 } << m;
  if ( pi.size() != half || g.num_vars() != m )
    throw std::invalid_argument( "pi and g must be defined on F_2^{n/2}" );
  std::vector<bool> seen( half, false );
  for ( auto v : pi )
  {
    if ( v >= half || seen[v] )
      throw std::invalid_argument( "pi is not a permutation of F_2^{n/2}" );
    seen[v] = true;
  }
  return BooleanFunction::from_predicate( n, [&]( std::uint32_t z ) {
    const auto x = z & ( half - 1 );
    const auto y = z >> m;
    return ( dot( x, pi[y] ) ^ static_cast<int>( g.get( y ) ) ) != 0;
  } );
}

/// Seeded random permutation pi and random g.
inline BooleanFunction maiorana_mcfarland( int n, std::uint64_t seed )
{
  if ( n < 2 || n % 2 != 0 )
    throw std::invalid_argument( "Maiorana-McFarland needs even n >= 2" );
  const int m = n / 2;
  std::mt19937_64 rng( seed );
  std::vector<std::uint32_t> pi( std::size_t{ 1 } << m );
  std::iota( pi.begin(), pi.end(), 0u );
  std::shuffle( pi.begin(), pi.end(), rng );
  auto g = BooleanFunction::from_predicate( m, [&]( std::uint32_t ) { return ( rng() & 1u ) != 0; } );
  return maiorana_mcfarland( n, pi, g );
}

/// Exactly 2^{n-1} ones, positions uniformly shuffled; deterministic per seed.
inline BooleanFunction random_balanced( int n, std::uint64_t seed )
{
  check_dimension( n );
  std::vector<std::uint32_t> order( std::size_t{ 1 } << n );
  std::iota( order.begin(), order.end(), 0u );
  std::mt19937_64 rng( seed );
  std::shuffle( order.begin(), order.end(), rng );
  BooleanFunction f( n );
  for ( std::size_t i = 0; i < order.size() / 2; ++i )
    f.set( order[i], true );
  return f;
}

/// Uniformly random truth table.
inline BooleanFunction random_function( int n, std::uint64_t seed )
{
  check_dimension( n );
  std::mt19937_64 rng( seed );
  BooleanFunction f( n );
  for ( auto& w : f.words() )
    w = rng();
  f.mask_tail();
  return f;
}

/// Uniformly random LUT (not necessarily bijective).
inline VectorialFunction random_lut( int n, std::uint64_t seed )
{
  check_dimension( n );
  std::mt19937_64 rng( seed );
  std::vector<std::uint32_t> lut( std::size_t{ 1 } << n );
  for ( auto& v : lut )
    v = static_cast<std::uint32_t>( rng() >> ( 64 - n ) );
  return VectorialFunction( n, std::move( lut ), Provenance{ "catalog", "random-lut", {}, {}, {} } );
}

/// Uniformly random permutation.
inline VectorialFunction random_permutation( int n, std::uint64_t seed )
{
  check_dimension( n );
  std::mt19937_64 rng( seed );
  std::vector<std::uint32_t> lut( std::size_t{ 1 } << n );
  std::iota( lut.begin(), lut.end(), 0u );
  std::shuffle( lut.begin(), lut.end(), rng );
  return VectorialFunction( n, std::move( lut ), Provenance{ "catalog", "random-permutation", {}, {}, {} } );
}

// ---------------------------------------------------------------------------
// Catalog entries
// ---------------------------------------------------------------------------

/// Declared properties; re-measured by verify_entry, never trusted.
struct ExpectedProperties
{
  std::optional<bool> is_permutation;
  std::optional<bool> is_apn;
  std::optional<std::uint32_t> delta;
  std::optional<std::int64_t> vs1;
  std::optional<std::int64_t> vs1_sq;
  std::optional<std::int64_t> vs2;
  std::optional<bool> is_balanced;
  std::optional<bool> is_bent;
  std::optional<std::int64_t> weight;
  std::optional<std::int64_t> s1;
  std::optional<std::int64_t> s2;
  std::string note;
};

struct CatalogParameters
{
  int n = 0;
  int k = 1;
  std::uint64_t seed = 0;
  bool balanced = false;
  bool constant = false;
  std::optional<std::uint32_t> modulus = std::nullopt;
};

struct CatalogEntry
{
  std::string name;
  std::string kind; // power | lut-fixture | quadratic-form | maiorana-mcfarland | random-balanced | random-lut
  CatalogParameters parameters;
  ExpectedProperties expected;
  std::variant<BooleanFunction, VectorialFunction> function;

  bool is_vectorial() const noexcept { return std::holds_alternative<VectorialFunction>( function ); }
};

struct CatalogListing
{
  const char* name;
  const char* description;
};

inline constexpr std::array<CatalogListing, 9> listing = { {
    { "identity", "identity permutation x (vectorial, --n)" },
    { "gold", "Gold power map x^(2^k+1), gcd(k,n)=1 (vectorial, --n --k)" },
    { "kasami", "Kasami power map x^(2^2k-2^k+1), gcd(k,n)=1 (vectorial, --n --k)" },
    { "inverse", "inverse map x^(2^n-2), 0 -> 0 (vectorial, --n)" },
    { "dillon", "APN permutation of dimension 6, affine-equivalent to Dillon's (vectorial)" },
    { "random-lut", "seeded uniformly random LUT (vectorial, --n --seed)" },
    { "quadratic", "canonical quadratic form with k products (Boolean, --n --k [--balanced] [--c])" },
    { "mm", "Maiorana-McFarland bent function, seeded pi and g (Boolean, even --n, --seed)" },
    { "random-balanced", "seeded random balanced function (Boolean, --n --seed)" },
} };

namespace detail
{

inline ExpectedProperties apn_expectations( int n, bool permutation )
{
  ExpectedProperties e;
  e.is_apn = true;
  e.delta = 2;
  e.is_permutation = permutation;
  e.vs2 = apn_s2_bound( n );
  if ( permutation )
  {
    e.vs1 = permutation_s1_bound( n );
    e.vs1_sq = apn_permutation_s1sq_bound( n );
  }
  return e;
}

} // namespace detail

/// Builds a named entry with its declared properties (not yet verified).
inline CatalogEntry make_entry( const std::string& name, const CatalogParameters& p )
{
  CatalogEntry e{ name, "power", p, {}, BooleanFunction{} };
  const int n = p.n;
  if ( name == "identity" )
  {
    e.kind = "power";
    e.function = VectorialFunction::identity( n );
    e.expected.is_permutation = true;
    e.expected.is_apn = n == 1;
    e.expected.delta = static_cast<std::uint32_t>( pow2( n ) );
    e.expected.vs1 = permutation_s1_bound( n );
    e.expected.vs2 = 0;
  }
  else if ( name == "gold" )
  {
    e.function = gold( n, p.k, p.modulus );
    e.expected = detail::apn_expectations( n, n % 2 == 1 );
    if ( n % 2 == 0 )
      e.expected.vs1 = quadratic_apn_s1( n );
    e.expected.note = "permutation iff n odd";
  }
  else if ( name == "kasami" )
  {
    e.function = kasami( n, p.k, p.modulus );
    e.expected = detail::apn_expectations( n, n % 2 == 1 );
    if ( n % 2 == 0 )
      e.expected.vs1 = quadratic_apn_s1( n );
  }
  else if ( name == "inverse" )
  {
    e.function = inverse_map( n, p.modulus );
    e.expected.is_permutation = true;
    e.expected.delta = n % 2 == 1 ? 2u : 4u;
    e.expected.is_apn = n % 2 == 1;
    e.expected.vs1 = permutation_s1_bound( n );
    if ( n % 2 == 1 )
      e.expected = detail::apn_expectations( n, true );
  }
  else if ( name == "dillon" )
  {
    e.kind = "lut-fixture";
    e.parameters.n = 6;
    e.function = dillon_permutation();
    e.expected = detail::apn_expectations( 6, true );
    e.expected.note = "open-butterfly form; affine-equivalent to Dillon's permutation";
  }
  else if ( name == "random-lut" )
  {
    e.kind = "random-lut";
    e.function = random_lut( n, p.seed );
  }
  else if ( name == "quadratic" )
  {
    e.kind = "quadratic-form";
    auto f = quadratic_canonical( n, p.k, p.balanced, p.constant );
    if ( p.balanced )
    {
      e.expected.is_balanced = true;
      e.expected.weight = pow2( n - 1 );
      e.expected.s1 = pow2( 2 * n - 1 );
    }
    else
    {
      e.expected.is_balanced = false;
      const auto offset = pow2( n - p.k - 1 );
      e.expected.weight = p.constant ? pow2( n - 1 ) + offset : pow2( n - 1 ) - offset;
      e.expected.is_bent = 2 * p.k == n;
      // dim V(f) = n - 2k
      e.expected.s1 = closed_form_s1( FunctionClass::quadratic( n - 2 * p.k ), n );
    }
    e.function = std::move( f );
  }
  else if ( name == "mm" )
  {
    e.kind = "maiorana-mcfarland";
    e.function = maiorana_mcfarland( n, p.seed );
    e.expected.is_bent = true;
    e.expected.s1 = closed_form_s1( FunctionClass::bent(), n );
    e.expected.s2 = closed_form_s2( FunctionClass::bent(), n );
  }
  else if ( name == "random-balanced" )
  {
    e.kind = "random-balanced";
    e.function = random_balanced( n, p.seed );
    e.expected.is_balanced = true;
    e.expected.weight = pow2( n - 1 );
    e.expected.s1 = pow2( 2 * n - 1 );
  }
  else
  {
    throw std::invalid_argument( "unknown catalog entry '" + name + "'" );
  }
  return e;
}

/// Re-measures every declared property; returns one message per mismatch.
inline std::vector<std::string> verify_entry( const CatalogEntry& e )
{
  std::vector<std::string> mismatches;
  const auto check = [&]( const char* what, const auto& declared, const auto& measured ) {
    if ( declared && *declared != measured )
      mismatches.push_back( e.name + ": " + what + " declared " + std::to_string( *declared ) + ", measured " + std::to_string( measured ) );
  };
  if ( const auto* F = std::get_if<VectorialFunction>( &e.function ) )
  {
    const auto& x = e.expected;
    check( "is_permutation", x.is_permutation, is_permutation( *F ) );
    if ( x.delta || x.is_apn )
    {
      const auto delta = differential_uniformity( *F );
      check( "delta", x.delta, delta );
      check( "is_apn", x.is_apn, delta == 2 );
    }
    if ( x.vs1 || x.vs1_sq || x.vs2 )
    {
      const auto p = vectorial_profile( *F );
      check( "vs1", x.vs1, p.vs1 );
      check( "vs1_sq", x.vs1_sq, p.vs1_sq );
      check( "vs2", x.vs2, p.vs2 );
    }
  }
  else
  {
    const auto& f = std::get<BooleanFunction>( e.function );
    const auto& x = e.expected;
    check( "weight", x.weight, weight( f ) );
    check( "is_balanced", x.is_balanced, is_balanced( f ) );
    check( "is_bent", x.is_bent, is_bent( walsh_transform( f ) ) );
    check( "s1", x.s1, s1_total( f ) );
    check( "s2", x.s2, s2_total( f ) );
  }
  return mismatches;
}

/// make_entry followed by verify_entry; throws on any mismatch.
inline CatalogEntry load_entry( const std::string& name, const CatalogParameters& p )
{
  auto e = make_entry( name, p );
  if ( const auto bad = verify_entry( e ); !bad.empty() )
  {
    throw std::runtime_error( "catalog entry failed verification: " + bad.front() );
  }
  return e;
}

/// Every vectorial catalog function defined in dimension n.
inline std::vector<CatalogEntry> vectorial_entries( int n )
{
  std::vector<CatalogEntry> out;
  out.push_back( make_entry( "identity", { .n = n } ) );
  for ( int k = 1; k < n; ++k )
  {
    if ( std::gcd( k, n ) == 1 )
      out.push_back( make_entry( "gold", { .n = n, .k = k } ) );
  }
  for ( int k = 2; k < n; ++k )
  {
    if ( std::gcd( k, n ) == 1 )
      out.push_back( make_entry( "kasami", { .n = n, .k = k } ) );
  }
  out.push_back( make_entry( "inverse", { .n = n } ) );
  if ( n == 6 )
    out.push_back( make_entry( "dillon", { .n = 6 } ) );
  return out;
}

} // namespace bfderiv::catalog
