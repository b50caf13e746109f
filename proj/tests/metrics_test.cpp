#include <random>

#include <gtest/gtest.h>

#include <bfderiv/bfderiv.hpp>

using namespace bfderiv;

namespace
{

BooleanFunction and2() { return truth_table_from_bits( "0001" ); }

BooleanFunction quad3()
{
  return BooleanFunction::from_predicate( 3, []( std::uint32_t x ) { return ( ( x & ( x >> 1 ) ) ^ ( x >> 2 ) ) & 1u; } );
}

VectorialFunction gold( int n ) { return catalog::gold( n, 1 ); }

} // namespace

TEST( ScalarMetrics, s1_examples )
{
  EXPECT_EQ( s1_total( and2() ), 6 );
  for ( int n = 1; n <= 8; ++n )
  {
    EXPECT_EQ( s1_total( BooleanFunction::constant( n, false ) ), 0 );
    EXPECT_EQ( s1_total( BooleanFunction::constant( n, true ) ), 0 );
    EXPECT_EQ( s1_total( catalog::random_balanced( n, n ) ), pow2( 2 * n - 1 ) );
  }
}

TEST( ScalarMetrics, s1_via_fourier_examples )
{
  EXPECT_EQ( s1_via_fourier( and2() ), 6 );
  EXPECT_EQ( s1_via_fourier( quad3() ), 32 );
  EXPECT_EQ( s1_via_fourier( BooleanFunction::constant( 3, true ) ), 0 );
}

TEST( ScalarMetrics, weight_from_s1_examples )
{
  EXPECT_EQ( weight_from_s1( 6, 2, Branch::minus ), 1 );
  EXPECT_EQ( weight_from_s1( 6, 2, Branch::plus ), 3 );
  for ( int n = 1; n <= 10; ++n )
  {
    EXPECT_EQ( weight_from_s1( pow2( 2 * n - 1 ), n, Branch::minus ), pow2( n - 1 ) );
    EXPECT_EQ( weight_from_s1( pow2( 2 * n - 1 ), n, Branch::plus ), pow2( n - 1 ) );
  }
  EXPECT_EQ( weight_from_s1( 0, 3, Branch::minus ), 0 );
  EXPECT_EQ( weight_from_s1( 0, 3, Branch::plus ), 8 );
}

TEST( ScalarMetrics, weight_from_s1_rejects_unrealizable_totals )
{
  EXPECT_THROW( weight_from_s1( 5, 2, Branch::minus ), std::invalid_argument ); // radicand 6
  EXPECT_THROW( weight_from_s1( 7, 2, Branch::minus ), std::invalid_argument ); // radicand 2
  EXPECT_THROW( weight_from_s1( 9, 2, Branch::minus ), std::invalid_argument ); // negative radicand
}

TEST( ScalarMetrics, ell_examples )
{
  EXPECT_EQ( ell_parameter( quad3() ), 0 );
  EXPECT_EQ( ell_parameter( BooleanFunction::constant( 4, false ) ), 8 );
  EXPECT_EQ( ell_parameter( BooleanFunction::constant( 4, true ) ), 8 );
  EXPECT_EQ( ell_parameter( and2() ), 1 );
}

TEST( ScalarMetrics, s2_examples )
{
  EXPECT_EQ( s2_total( and2() ), 24 );
  EXPECT_EQ( s1_sq_total( and2() ), 12 );
  EXPECT_EQ( s2_total( BooleanFunction::constant( 5, true ) ), 0 );
  EXPECT_EQ( s2_total( catalog::maiorana_mcfarland( 4, 1 ) ), 1920 );
  EXPECT_EQ( s2_total( catalog::quadratic_canonical( 4, 2, false ) ), 1920 );
}

TEST( ScalarMetrics, s2_via_walsh_moment_examples )
{
  EXPECT_EQ( s2_via_walsh_moment( and2() ), 24 );
  EXPECT_EQ( s2_via_walsh_moment( BooleanFunction::constant( 2, false ) ), 0 );
  // four nonzero Walsh values, each +-4
  EXPECT_EQ( walsh_fourth_moment( walsh_transform( quad3() ) ), 1024 );
  EXPECT_EQ( s2_via_walsh_moment( quad3() ), 192 );
  EXPECT_EQ( s2_total( quad3() ), 192 );
  EXPECT_EQ( oracle::naive_s2( quad3() ), 192 );
}

TEST( ScalarMetrics, paths_agree_on_every_function_of_three_variables )
{
  for ( std::uint32_t t = 0; t < 256; ++t )
  {
    const auto f = BooleanFunction::from_predicate( 3, [&]( std::uint32_t x ) { return ( t >> x ) & 1u; } );
    const auto s2 = s2_total( f );
    EXPECT_EQ( s1_total( f ), oracle::naive_s1( f ) );
    EXPECT_EQ( s1_via_fourier( f ), s1_total( f ) );
    EXPECT_EQ( s1_sq_total( f ), oracle::naive_s1_sq( f ) );
    EXPECT_EQ( s2, oracle::naive_s2( f ) );
    EXPECT_EQ( s2, s2_via_walsh_moment( f ) );
    EXPECT_EQ( s2, s2_via_derivative_fourier( f ) );
    EXPECT_EQ( derivative_fourier_energy( f ), oracle::naive_derivative_fourier_energy( f ) );
  }
}

TEST( ScalarMetrics, perfect_square_and_bounds )
{
  std::mt19937_64 rng( 7 );
  for ( int n = 1; n <= 10; ++n )
  {
    for ( int trial = 0; trial < 40; ++trial )
    {
      const auto f = catalog::random_function( n, rng() );
      const auto s1 = s1_total( f );
      const auto root = exact_sqrt( pow2( 2 * n ) - 2 * s1 );
      ASSERT_GE( root, 0 );
      EXPECT_EQ( root % 2, 0 );
      EXPECT_EQ( root, 2 * ell_parameter( f ) );
      EXPECT_LE( s1, pow2( 2 * n - 1 ) );
      EXPECT_EQ( s1 == pow2( 2 * n - 1 ), is_balanced( f ) );
      const auto s2 = s2_total( f );
      EXPECT_LE( s2, pow2( 2 * n - 1 ) * ( pow2( n ) - 1 ) );
      EXPECT_EQ( s2 == pow2( 2 * n - 1 ) * ( pow2( n ) - 1 ), is_bent( walsh_transform( f ) ) );
      const auto w = weight( f );
      EXPECT_EQ( weight_from_s1( s1, n, w <= pow2( n - 1 ) ? Branch::minus : Branch::plus ), w );
    }
  }
}

TEST( ScalarMetrics, s2_bound_equality_iff_bent )
{
  for ( std::uint32_t t = 0; t < 16; ++t )
  {
    const auto f = BooleanFunction::from_predicate( 2, [&]( std::uint32_t x ) { return ( t >> x ) & 1u; } );
    EXPECT_EQ( s2_total( f ) == 24, is_bent( walsh_transform( f ) ) );
  }
  std::mt19937_64 rng( 8 );
  for ( int n : { 4, 6 } )
  {
    for ( std::uint64_t seed = 0; seed < 20; ++seed )
    {
      const auto bent = catalog::maiorana_mcfarland( n, seed );
      EXPECT_EQ( s2_total( bent ), closed_form_s2( FunctionClass::bent(), n ) );
      auto perturbed = bent;
      const std::uint32_t x = rng() % perturbed.size();
      perturbed.set( x, !perturbed( x ) );
      EXPECT_LT( s2_total( perturbed ), closed_form_s2( FunctionClass::bent(), n ) );
    }
  }
}

TEST( ScalarMetrics, closed_form_examples )
{
  EXPECT_EQ( closed_form_s1( FunctionClass::bent(), 4 ), 120 );
  EXPECT_EQ( closed_form_s1( FunctionClass::quadratic( 1 ), 3 ), 24 );
  EXPECT_EQ( closed_form_s1( FunctionClass::plateaued( 2 ), 3 ), 24 );
  EXPECT_EQ( closed_form_s1( FunctionClass::balanced(), 3 ), 32 );
  EXPECT_EQ( closed_form_s2( FunctionClass::bent(), 2 ), 24 );
  for ( int n = 1; n <= 10; ++n )
    EXPECT_EQ( closed_form_s2( FunctionClass::partially_bent( 0 ), n ), 0 );
  EXPECT_EQ( closed_form_s2( FunctionClass::partially_bent( 1 ), 3 ), 192 );
}

TEST( ScalarMetrics, closed_form_errors )
{
  EXPECT_THROW( closed_form_s1( FunctionClass::bent(), 3 ), std::invalid_argument );
  EXPECT_THROW( closed_form_s1( FunctionClass::quadratic( 5 ), 4 ), std::invalid_argument );
  EXPECT_THROW( closed_form_s1( FunctionClass::plateaued( 3 ), 4 ), std::invalid_argument );
  EXPECT_THROW( closed_form_s1( FunctionClass::partially_bent( 3 ), 4 ), std::invalid_argument );
  EXPECT_THROW( closed_form_s2( FunctionClass::partially_bent( 2 ), 3 ), std::invalid_argument );
  EXPECT_THROW( closed_form_s2( FunctionClass::plateaued( 2 ), 4 ), std::invalid_argument );
}

TEST( ScalarMetrics, closed_forms_match_measured_classes )
{
  for ( int n = 2; n <= 8; ++n )
  {
    for ( int k = 1; 2 * k <= n; ++k )
    {
      for ( bool c : { false, true } )
      {
        const auto f = catalog::quadratic_canonical( n, k, false, c );
        const auto v = linear_space( f );
        EXPECT_EQ( v.dim, n - 2 * k );
        EXPECT_EQ( s1_total( f ), closed_form_s1( FunctionClass::quadratic( v.dim ), n ) );
        const int h = ( n - v.dim ) / 2;
        EXPECT_EQ( s2_total( f ), closed_form_s2( FunctionClass::partially_bent( h ), n ) );
        const auto r = plateaued_order( walsh_transform( f ) );
        ASSERT_TRUE( r.has_value() );
        EXPECT_EQ( s1_total( f ), closed_form_s1( FunctionClass::plateaued( *r ), n ) );
      }
    }
  }
}

TEST( ScalarMetrics, profile_is_consistent )
{
  const auto p = scalar_profile( and2() );
  EXPECT_EQ( p.n, 2 );
  EXPECT_EQ( p.weight, 1 );
  EXPECT_EQ( p.s1, 6 );
  EXPECT_EQ( p.s1_sq, 12 );
  EXPECT_EQ( p.s2, 24 );
  EXPECT_EQ( p.ell, 1 );
  EXPECT_EQ( p.walsh4, 64 );
}

TEST( VectorialMetrics, profile_examples )
{
  EXPECT_EQ( vectorial_profile( VectorialFunction::identity( 2 ) ).vs1, 24 );
  const auto d = vectorial_profile( catalog::dillon_permutation() );
  EXPECT_EQ( d.vs1, 129024 );
  EXPECT_EQ( d.vs1_sq, 4257792 );
  EXPECT_EQ( d.vs2, 7999488 );
  EXPECT_EQ( d.fsq, 516096 );
  EXPECT_EQ( vectorial_profile( gold( 4 ) ).vs1, 1680 );
}

TEST( VectorialMetrics, profile_matches_oracle_and_is_thread_independent )
{
  std::vector<VectorialFunction> samples{ gold( 3 ), gold( 4 ), catalog::inverse_map( 5 ), catalog::random_lut( 4, 3 ), catalog::random_lut( 5, 4 ),
                                          catalog::random_permutation( 6, 5 ), catalog::dillon_permutation(), VectorialFunction::identity( 3 ) };
  for ( const auto& F : samples )
  {
    const auto p = vectorial_profile( F, 1 );
    const auto naive = oracle::naive_vectorial_totals( F );
    EXPECT_EQ( p.vs1, naive.vs1 );
    EXPECT_EQ( p.vs1_sq, naive.vs1_sq );
    EXPECT_EQ( p.vs2, naive.vs2 );
    EXPECT_EQ( p.per_direction_s2, naive.per_direction_s2 );
    const auto q = vectorial_profile( F, 4 );
    EXPECT_EQ( q.vs1, p.vs1 );
    EXPECT_EQ( q.vs2, p.vs2 );
    EXPECT_EQ( q.fsq, p.fsq );
    EXPECT_EQ( q.per_direction_s2, p.per_direction_s2 );
    EXPECT_EQ( q.per_direction_fsq, p.per_direction_fsq );
  }
  // threaded path for n > 6
  const auto F = catalog::random_lut( 8, 6 );
  const auto p1 = vectorial_profile( F, 1 );
  const auto p8 = vectorial_profile( F, 8 );
  EXPECT_EQ( p1.vs2, p8.vs2 );
  EXPECT_EQ( p1.per_direction_fsq, p8.per_direction_fsq );
}

TEST( VectorialMetrics, profile_size_cap )
{
  EXPECT_THROW( vectorial_profile( VectorialFunction::identity( max_vectorial_dimension + 1 ) ), size_error );
}

TEST( VectorialMetrics, permutation_check_examples )
{
  const auto id = check_permutation_by_s1( vectorial_profile( VectorialFunction::identity( 3 ) ) );
  EXPECT_EQ( id.relation, Relation::equal );
  EXPECT_TRUE( id.verdict );
  const auto g = check_permutation_by_s1( vectorial_profile( gold( 4 ) ) );
  EXPECT_EQ( g.relation, Relation::below_bound );
  EXPECT_FALSE( g.verdict );
  EXPECT_EQ( g.gap(), 1920 - 1680 );
  EXPECT_TRUE( check_permutation_by_s1( vectorial_profile( catalog::dillon_permutation() ) ).verdict );
}

TEST( VectorialMetrics, apn_permutation_squared_examples )
{
  const auto d = check_apn_permutation_by_s1sq( vectorial_profile( catalog::dillon_permutation() ) );
  EXPECT_EQ( d.relation, Relation::equal );
  EXPECT_TRUE( d.verdict );
  const auto g = check_apn_permutation_by_s1sq( vectorial_profile( catalog::gold( 3, 1, 0b1011 ) ) );
  EXPECT_EQ( g.actual, 1120 );
  EXPECT_TRUE( g.verdict );
  const auto id = check_apn_permutation_by_s1sq( vectorial_profile( VectorialFunction::identity( 3 ) ) );
  EXPECT_EQ( id.actual, 1792 );
  EXPECT_EQ( id.relation, Relation::above_bound );
  EXPECT_FALSE( id.verdict );
  // non-bijective APN: verdict false regardless of value
  EXPECT_FALSE( check_apn_permutation_by_s1sq( vectorial_profile( gold( 4 ) ) ).verdict );
}

TEST( VectorialMetrics, apn_s2_examples )
{
  const auto g = check_apn_by_s2( vectorial_profile( gold( 4 ) ) );
  EXPECT_EQ( g.expected, 26880 );
  EXPECT_TRUE( g.verdict );
  for ( int n = 2; n <= 6; ++n )
  {
    const auto id = check_apn_by_s2( vectorial_profile( VectorialFunction::identity( n ) ) );
    EXPECT_EQ( id.actual, 0 );
    EXPECT_FALSE( id.verdict );
  }
  const auto inv = check_apn_by_s2( vectorial_profile( catalog::inverse_map( 8 ) ) );
  EXPECT_EQ( inv.relation, Relation::below_bound );
  EXPECT_FALSE( inv.verdict );
}

TEST( VectorialMetrics, per_direction_examples )
{
  const auto per = check_apn_per_direction( vectorial_profile( gold( 4 ) ) );
  ASSERT_EQ( per.size(), 15u );
  EXPECT_TRUE( all_verdicts( per ) );
  for ( const auto& o : per )
    EXPECT_EQ( o.actual, apn_direction_s2_bound( 4 ) );
  const auto id = vectorial_profile( VectorialFunction::identity( 4 ) );
  for ( const auto& o : check_apn_per_direction( id ) )
  {
    EXPECT_EQ( o.actual, 0 );
    EXPECT_FALSE( o.verdict );
  }
  EXPECT_FALSE( check_apn_per_direction_global( id ).verdict );
}

TEST( VectorialMetrics, per_direction_matches_ddt_rows )
{
  for ( const auto& F : { catalog::random_lut( 4, 1 ), catalog::inverse_map( 4 ), gold( 5 ), catalog::random_permutation( 5, 2 ) } )
  {
    const auto table = ddt( F );
    const auto per = check_apn_per_direction( vectorial_profile( F ) );
    for ( std::uint32_t a = 1; a < F.size(); ++a )
    {
      const auto row = table.row( a );
      const bool row_apn = *std::max_element( row.begin(), row.end() ) == 2;
      EXPECT_EQ( per[a - 1].verdict, row_apn );
      EXPECT_NE( per[a - 1].relation, Relation::above_bound );
    }
  }
}

TEST( VectorialMetrics, fsq_examples )
{
  const auto g3 = check_fsq_bounds( vectorial_profile( gold( 3 ) ) );
  EXPECT_TRUE( g3.global.verdict );
  EXPECT_TRUE( g3.per_direction.verdict );
  const auto g4 = vectorial_profile( gold( 4 ) );
  EXPECT_TRUE( check_fsq_bounds( g4 ).global.verdict );
  // fsq counts a = 0, where every component contributes 2^{2n}
  const auto n = g4.n;
  EXPECT_EQ( g4.fsq, ( pow2( n ) - 1 ) * pow2( 3 * n ) - 2 * g4.vs2 );

  const int m = 3;
  const VectorialFunction constant( m, std::vector<std::uint32_t>( 8, 5 ) );
  const auto c = vectorial_profile( constant );
  EXPECT_EQ( c.fsq, pow2( 2 * m ) * pow2( m ) * ( pow2( m ) - 1 ) );
  const auto o = check_fsq_bounds( c );
  EXPECT_EQ( o.global.relation, Relation::above_bound );
  EXPECT_FALSE( o.global.verdict );
  EXPECT_FALSE( o.per_direction.verdict );
}

TEST( VectorialMetrics, quadratic_apn_examples )
{
  const auto g6 = check_quadratic_apn_s1( gold( 6 ) );
  EXPECT_EQ( g6.outcome.actual, 124992 );
  EXPECT_TRUE( g6.outcome.verdict );
  EXPECT_EQ( g6.census.bent, 42 );
  EXPECT_EQ( g6.census.semi_bent, 21 );
  EXPECT_TRUE( g6.hypotheses_hold );
  EXPECT_TRUE( g6.census_split_matches );

  const auto g4 = check_quadratic_apn_s1( gold( 4 ) );
  EXPECT_EQ( g4.outcome.actual, 1680 );
  EXPECT_EQ( g4.census.bent, 10 );
  EXPECT_EQ( g4.census.semi_bent, 5 );

  const auto k8 = check_quadratic_apn_s1( catalog::kasami( 8, 3 ) );
  EXPECT_EQ( k8.outcome.actual, 8290560 );
  EXPECT_TRUE( k8.outcome.verdict );
  EXPECT_FALSE( k8.is_quadratic );
  EXPECT_FALSE( k8.hypotheses_hold );

  const auto inv = check_quadratic_apn_s1( catalog::inverse_map( 4 ) );
  EXPECT_FALSE( inv.hypotheses_hold );
}

TEST( VectorialMetrics, apn_characterizations_agree )
{
  std::vector<VectorialFunction> samples;
  for ( int n = 2; n <= 8; ++n )
    for ( const auto& e : catalog::vectorial_entries( n ) )
      samples.push_back( std::get<VectorialFunction>( e.function ) );
  for ( int n = 2; n <= 5; ++n )
    for ( std::uint64_t seed = 0; seed < 25; ++seed )
      samples.push_back( catalog::random_lut( n, seed ) );
  for ( const auto& F : samples )
  {
    const auto p = vectorial_profile( F );
    const bool apn = is_apn( F );
    EXPECT_EQ( check_apn_by_s2( p ).verdict, apn );
    EXPECT_EQ( check_apn_per_direction_global( p ).verdict, apn );
    const auto fsq = check_fsq_bounds( p );
    EXPECT_EQ( fsq.global.verdict, apn );
    EXPECT_EQ( fsq.per_direction.verdict, apn );
    EXPECT_EQ( check_permutation_by_s1( p ).verdict, is_permutation( F ) );
  }
}

TEST( VectorialMetrics, bounds )
{
  EXPECT_EQ( permutation_s1_bound( 6 ), 129024 );
  EXPECT_EQ( apn_permutation_s1sq_bound( 6 ), 4257792 );
  EXPECT_EQ( apn_permutation_s1sq_bound( 3 ), 1120 );
  EXPECT_EQ( apn_s2_bound( 4 ), 26880 );
  EXPECT_EQ( apn_s2_bound( 6 ), 7999488 );
  EXPECT_EQ( quadratic_apn_s1( 4 ), 1680 );
  EXPECT_EQ( quadratic_apn_s1( 6 ), 124992 );
  EXPECT_EQ( quadratic_apn_s1( 8 ), 8290560 );
  EXPECT_EQ( apn_direction_s2_bound( 4 ), 1792 );
  EXPECT_EQ( apn_fsq_bound( 3 ), 896 );
  EXPECT_EQ( apn_direction_fsq_bound( 3 ), 128 );
}

TEST( Outcome, relation_and_gap )
{
  const auto below = equality_outcome( "x", 10, 7 );
  EXPECT_EQ( below.relation, Relation::below_bound );
  EXPECT_EQ( below.gap(), 3 );
  EXPECT_FALSE( below.verdict );
  const auto above = equality_outcome( "x", 10, 12 );
  EXPECT_EQ( above.relation, Relation::above_bound );
  EXPECT_EQ( above.gap(), -2 );
  const auto eq = equality_outcome( "x", 10, 10 );
  EXPECT_TRUE( eq.verdict );
  EXPECT_STREQ( to_string( eq.relation ), "equal" );
}
