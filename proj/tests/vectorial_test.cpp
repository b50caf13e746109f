#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include <bfderiv/catalog.hpp>
#include <bfderiv/vectorial.hpp>

using namespace bfderiv;

namespace
{

VectorialFunction cube( int n ) { return from_power( FieldContext( n ), 3 ); }

} // namespace

TEST( Vectorial, component_examples )
{
  EXPECT_EQ( to_bit_string( component( VectorialFunction::identity( 2 ), 1 ) ), "0101" );
  const auto c = component( from_power( FieldContext( 3, 0b1011 ), 3 ), 1 );
  EXPECT_EQ( weight( c ), 4 );
  EXPECT_THROW( component( cube( 3 ), 0 ), std::invalid_argument );
  EXPECT_THROW( component( cube( 3 ), 8 ), std::invalid_argument );
}

TEST( Vectorial, construction_errors )
{
  EXPECT_THROW( VectorialFunction( 2, { 0, 1, 2 } ), std::invalid_argument );
  EXPECT_THROW( VectorialFunction( 2, { 0, 1, 2, 4 } ), std::invalid_argument );
  EXPECT_THROW( from_power( FieldContext( 3 ), 8 ), std::invalid_argument );
}

TEST( Vectorial, is_permutation_examples )
{
  for ( int n = 1; n <= 8; ++n )
    EXPECT_TRUE( is_permutation( VectorialFunction::identity( n ) ) );
  EXPECT_TRUE( is_permutation( from_power( FieldContext( 3, 0b1011 ), 3 ) ) );
  EXPECT_FALSE( is_permutation( cube( 4 ) ) );
}

TEST( Vectorial, permutation_iff_all_components_balanced )
{
  std::vector<VectorialFunction> samples;
  for ( int n = 2; n <= 8; ++n )
  {
    for ( const auto& e : catalog::vectorial_entries( n ) )
      samples.push_back( std::get<VectorialFunction>( e.function ) );
    samples.push_back( catalog::random_permutation( n, n ) );
    samples.push_back( catalog::random_lut( n, n ) );
  }
  for ( const auto& F : samples )
  {
    bool balanced = true;
    for ( std::uint32_t l = 1; l < F.size(); ++l )
      balanced = balanced && is_balanced( component( F, l ) );
    EXPECT_EQ( is_permutation( F ), balanced );
  }
}

TEST( Vectorial, ddt_examples )
{
  const auto g = from_power( FieldContext( 3, 0b1011 ), 3 );
  EXPECT_EQ( differential_uniformity( g ), 2u );
  EXPECT_TRUE( is_apn( g ) );
  for ( int n = 1; n <= 6; ++n )
  {
    const auto id = VectorialFunction::identity( n );
    EXPECT_EQ( differential_uniformity( id ), 1u << n );
    EXPECT_EQ( is_apn( id ), n == 1 );
  }
  const auto inv8 = catalog::inverse_map( 8 );
  EXPECT_EQ( differential_uniformity( inv8 ), 4u );
  EXPECT_FALSE( is_apn( inv8 ) );
}

TEST( Vectorial, ddt_row_sums_and_parity )
{
  std::vector<VectorialFunction> samples{ cube( 5 ), catalog::inverse_map( 6 ), catalog::random_lut( 4, 1 ), catalog::random_lut( 6, 2 ) };
  for ( const auto& F : samples )
  {
    const auto table = ddt( F );
    for ( std::uint32_t a = 0; a < F.size(); ++a )
    {
      std::uint32_t sum = 0;
      for ( std::uint32_t b = 0; b < F.size(); ++b )
      {
        sum += table.at( a, b );
        if ( a != 0 )
        {
          EXPECT_EQ( table.at( a, b ) % 2, 0u );
        }
      }
      EXPECT_EQ( sum, F.size() );
    }
    EXPECT_EQ( table.at( 0, 0 ), F.size() );
  }
}

TEST( Vectorial, streaming_uniformity_matches_table )
{
  for ( int n = 2; n <= 7; ++n )
  {
    const auto F = catalog::random_lut( n, 100 + n );
    const auto table = ddt( F );
    std::uint32_t best = 0;
    for ( std::uint32_t a = 1; a < F.size(); ++a )
      for ( std::uint32_t b = 0; b < F.size(); ++b )
        best = std::max( best, table.at( a, b ) );
    EXPECT_EQ( differential_uniformity( F ), best );
  }
  EXPECT_THROW( ddt( VectorialFunction::identity( 13 ) ), size_error );
}

TEST( Vectorial, from_power_examples )
{
  for ( int n = 1; n <= 6; ++n )
    EXPECT_EQ( from_power( FieldContext( n ), 1 ), VectorialFunction::identity( n ) );
  EXPECT_TRUE( is_apn( from_power( FieldContext( 3, 0b1011 ), 3 ) ) );
  const auto c4 = cube( 4 );
  EXPECT_TRUE( is_apn( c4 ) );
  EXPECT_FALSE( is_permutation( c4 ) );
  EXPECT_EQ( c4.provenance().exponent, 3u );
  EXPECT_EQ( c4.provenance().modulus, default_moduli[4] );
}

TEST( Vectorial, from_univariate_examples )
{
  const FieldContext ctx( 3, 0b1011 );
  const std::vector<field_element> linear{ 0, 1 };
  EXPECT_EQ( from_univariate( ctx, linear ), VectorialFunction::identity( 3 ) );
  const std::vector<field_element> cubic{ 0, 0, 0, 1 };
  EXPECT_EQ( from_univariate( ctx, cubic ), from_power( ctx, 3 ) );
  const std::vector<field_element> constant{ 5 };
  const auto k = from_univariate( ctx, constant );
  EXPECT_TRUE( std::all_of( k.lut().begin(), k.lut().end(), []( auto v ) { return v == 5; } ) );
  EXPECT_EQ( differential_uniformity( k ), 8u );
  const std::vector<field_element> too_long( 9, 1 );
  EXPECT_THROW( from_univariate( ctx, too_long ), std::invalid_argument );
}

TEST( Vectorial, univariate_degree_matches_anf )
{
  std::mt19937_64 rng( 5 );
  for ( int n = 3; n <= 6; ++n )
  {
    const FieldContext ctx( n );
    for ( int trial = 0; trial < 10; ++trial )
    {
      // sparse random polynomial
      std::vector<field_element> coeffs( ctx.order(), 0 );
      for ( int t = 0; t < 3; ++t )
        coeffs[rng() % ctx.order()] = static_cast<field_element>( rng() % ctx.order() ) | 1u;
      const auto F = from_univariate( ctx, coeffs );
      if ( std::all_of( F.lut().begin(), F.lut().end(), [&]( auto v ) { return v == F.lut()[0]; } ) )
        continue;
      EXPECT_LE( degree( F ), univariate_degree( coeffs ) );
    }
    // single monomials: exact equality for d < 2^n - 1
    for ( std::uint64_t d = 1; d + 1 < ctx.order(); ++d )
    {
      std::vector<field_element> mono( d + 1, 0 );
      mono[d] = 1;
      EXPECT_EQ( degree( from_univariate( ctx, mono ) ), univariate_degree( mono ) ) << "n=" << n << " d=" << d;
    }
  }
}

TEST( Vectorial, degree_examples )
{
  for ( int n = 1; n <= 6; ++n )
    EXPECT_EQ( degree( VectorialFunction::identity( n ) ), 1 );
  EXPECT_EQ( degree( cube( 6 ) ), 2 );
  EXPECT_EQ( degree( catalog::inverse_map( 6 ) ), 5 );
}

TEST( Vectorial, dot_and_trace_component_weights_agree )
{
  for ( int n = 2; n <= 6; ++n )
  {
    const FieldContext ctx( n );
    for ( std::uint64_t d : { 3ull, 5ull, 7ull, 13ull, ( 1ull << n ) - 2 } )
    {
      if ( d >= ctx.order() )
        continue;
      const auto F = from_power( ctx, d );
      std::vector<std::int64_t> dot_weights, trace_weights;
      for ( std::uint32_t l = 1; l < F.size(); ++l )
      {
        dot_weights.push_back( weight( component( F, l ) ) );
        std::int64_t w = 0;
        for ( std::uint32_t x = 0; x < F.size(); ++x )
          w += ctx.trace( ctx.mul( l, F( x ) ) );
        trace_weights.push_back( w );
      }
      std::sort( dot_weights.begin(), dot_weights.end() );
      std::sort( trace_weights.begin(), trace_weights.end() );
      EXPECT_EQ( dot_weights, trace_weights ) << "n=" << n << " d=" << d;
    }
  }
}

TEST( Vectorial, lut_text_round_trip )
{
  for ( int n : { 1, 3, 6 } )
  {
    const auto F = catalog::random_lut( n, 9 );
    std::istringstream in( write_lut_text( F ) );
    EXPECT_EQ( read_lut_text( in ), F );
  }
  std::istringstream hex( "0x0 0x1 0x3 0x2" );
  EXPECT_EQ( read_lut_text( hex ).lut(), ( std::vector<std::uint32_t>{ 0, 1, 3, 2 } ) );
}

TEST( Vectorial, lut_parse_errors )
{
  std::istringstream short_lut( "0 1 2" );
  EXPECT_THROW( read_lut_text( short_lut ), parse_error );
  std::istringstream out_of_range( "0 1 2 9" );
  EXPECT_ANY_THROW( read_lut_text( out_of_range ) );
  std::istringstream junk( "0 1 two 3" );
  EXPECT_THROW( read_lut_text( junk ), parse_error );
  std::istringstream header( "n=3\n0 1 2 3" );
  EXPECT_THROW( read_lut_text( header ), parse_error );
}

TEST( Vectorial, descriptor_strings )
{
  const auto p = parse_power_spec( "n=4,d=3" );
  EXPECT_EQ( p.n, 4 );
  EXPECT_EQ( p.exponent, 3u );
  EXPECT_FALSE( p.modulus );
  const auto q = parse_power_spec( "n=3,d=3,poly=0b1011" );
  EXPECT_EQ( q.modulus, 11u );
  EXPECT_EQ( from_power_spec( q ), from_power( FieldContext( 3, 0b1011 ), 3 ) );
  const auto h = parse_power_spec( "n=3,d=3,poly=0xB" );
  EXPECT_EQ( h.modulus, 11u );

  const auto u = parse_univariate_spec( "n=3,coeffs=0,0,0,1,poly=0b1011" );
  EXPECT_EQ( u.n, 3 );
  EXPECT_EQ( u.coefficients, ( std::vector<field_element>{ 0, 0, 0, 1 } ) );
  EXPECT_EQ( from_univariate_spec( u ), from_power( FieldContext( 3, 0b1011 ), 3 ) );

  EXPECT_THROW( parse_power_spec( "n=4" ), parse_error );
  EXPECT_THROW( parse_power_spec( "d=3" ), parse_error );
  EXPECT_THROW( parse_power_spec( "n=4,d=x" ), parse_error );
  EXPECT_THROW( parse_power_spec( "n=4,d=3,q=1" ), parse_error );
  EXPECT_THROW( parse_univariate_spec( "coeffs=1" ), parse_error );
  EXPECT_THROW( from_power_spec( parse_power_spec( "n=3,d=3,poly=0b1001" ) ), std::invalid_argument );
}
