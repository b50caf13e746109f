#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "classify.hpp"
#include "linear_space.hpp"
#include "metrics.hpp"
#include "oracle.hpp"

/*! \file verify.hpp
  \brief Cross-checks each derivative-total predicate against an
  independently measured property (bijection, DDT, spectrum, enumeration).
*/

namespace bfderiv
{

struct VerificationCheck
{
  std::string theorem;
  std::string detail;
  bool consistent = false;
};

struct VerificationResult
{
  std::vector<VerificationCheck> checks;

  bool passed() const noexcept
  {
    return std::all_of( checks.begin(), checks.end(), []( const auto& c ) { return c.consistent; } );
  }
};

inline const std::vector<std::string>& vectorial_theorems()
{
  static const std::vector<std::string> names = { "perm-s1", "apn-perm-s1sq", "apn-s2", "apn-per-direction", "fsq", "quadratic-apn-s1" };
  return names;
}

inline const std::vector<std::string>& scalar_theorems()
{
  static const std::vector<std::string> names = { "weight-s1", "fourier-s1", "ell-square", "fourier-derivatives", "s2-from-s1sq", "s2-balanced", "s2-derivative-fourier",
                                                   "walsh4", "balanced-s1", "bent-s2", "partially-bent-s2", "plateaued-s1" };
  return names;
}

/// Expands "all" and rejects names that do not apply to the input kind.
inline std::vector<std::string> resolve_theorems( const std::vector<std::string>& requested, bool vectorial )
{
  const auto& known = vectorial ? vectorial_theorems() : scalar_theorems();
  if ( requested.empty() || std::find( requested.begin(), requested.end(), "all" ) != requested.end() )
    return known;
  for ( const auto& t : requested )
  {
    if ( std::find( known.begin(), known.end(), t ) == known.end() )
      throw parse_error( "unknown theorem '" + t + "' for " + ( vectorial ? "vectorial" : "Boolean" ) + " input" );
  }
  return requested;
}

namespace detail
{

inline std::string describe( const PredicateOutcome& o )
{
  return o.name + " expected=" + std::to_string( o.expected ) + " actual=" + std::to_string( o.actual ) + " relation=" + to_string( o.relation ) +
         " verdict=" + ( o.verdict ? "true" : "false" );
}

inline std::string yes_no( bool b ) { return b ? "true" : "false"; }

} // namespace detail

/*! \brief Runs the selected vectorial predicates.

  A check is consistent when the predicate's verdict agrees with the property
  measured without derivative totals.  With `use_oracle` the fast totals are
  also compared against literal enumeration and the DDT against the naive
  triple loop.
*/
inline VerificationResult verify_vectorial( const VectorialFunction& F, const std::vector<std::string>& theorems, bool use_oracle )
{
  VerificationResult result;
  const auto profile = vectorial_profile( F );
  const bool bijective = is_permutation( F );
  const auto delta = differential_uniformity( F );
  const bool apn = delta == 2;
  const auto add = [&]( std::string theorem, const std::string& detail, bool ok ) { result.checks.push_back( { std::move( theorem ), detail, ok } ); };

  for ( const auto& t : resolve_theorems( theorems, true ) )
  {
    if ( t == "perm-s1" )
    {
      const auto o = check_permutation_by_s1( profile );
      add( t, detail::describe( o ) + " bijection=" + detail::yes_no( bijective ), o.verdict == bijective && o.relation != Relation::above_bound );
    }
    else if ( t == "apn-perm-s1sq" )
    {
      const auto o = check_apn_permutation_by_s1sq( profile );
      // for permutations the total never drops below the bound
      const bool bound_ok = !bijective || o.relation != Relation::below_bound;
      add( t, detail::describe( o ) + " bijection=" + detail::yes_no( bijective ) + " ddt_apn=" + detail::yes_no( apn ), o.verdict == ( bijective && apn ) && bound_ok );
    }
    else if ( t == "apn-s2" )
    {
      const auto o = check_apn_by_s2( profile );
      add( t, detail::describe( o ) + " ddt_delta=" + std::to_string( delta ), o.verdict == apn && o.relation != Relation::above_bound );
    }
    else if ( t == "apn-per-direction" )
    {
      const auto per = check_apn_per_direction( profile );
      bool ok = true;
      for ( std::uint32_t a = 1; a < F.size(); ++a )
      {
        std::vector<std::uint32_t> row( F.size(), 0 );
        for ( std::uint32_t x = 0; x < F.size(); ++x )
          ++row[F( x ) ^ F( x ^ a )];
        const bool row_apn = *std::max_element( row.begin(), row.end() ) == 2;
        ok = ok && per[a - 1].verdict == row_apn && per[a - 1].relation != Relation::above_bound;
      }
      const auto global = check_apn_per_direction_global( profile );
      add( t, detail::describe( global ) + " ddt_apn=" + detail::yes_no( apn ), ok && global.verdict == apn );
    }
    else if ( t == "fsq" )
    {
      const auto o = check_fsq_bounds( profile );
      const bool ok = o.global.verdict == apn && o.per_direction.verdict == apn && o.global.relation != Relation::below_bound;
      add( t, detail::describe( o.global ) + "; " + detail::describe( o.per_direction ) + " ddt_apn=" + detail::yes_no( apn ), ok );
    }
    else if ( t == "quadratic-apn-s1" )
    {
      const auto q = check_quadratic_apn_s1( F, profile );
      // the equality is only implied when the hypotheses hold
      add( t,
           detail::describe( q.outcome ) + " hypotheses=" + detail::yes_no( q.hypotheses_hold ) + " census(bent=" + std::to_string( q.census.bent ) +
               ",semi_bent=" + std::to_string( q.census.semi_bent ) + ") split=" + detail::yes_no( q.census_split_matches ),
           !q.hypotheses_hold || ( q.outcome.verdict && q.census_split_matches ) );
    }
  }

  if ( use_oracle )
  {
    if ( F.num_vars() <= oracle::max_ddt_dimension )
    {
      const auto naive = oracle::naive_ddt_apn( F );
      add( "oracle-ddt", "naive delta=" + std::to_string( naive.delta ) + " fast delta=" + std::to_string( delta ), naive.delta == delta );
    }
    if ( F.num_vars() <= 8 )
    {
      const auto naive = oracle::naive_vectorial_totals( F );
      const bool ok = naive.vs1 == profile.vs1 && naive.vs1_sq == profile.vs1_sq && naive.vs2 == profile.vs2 && naive.per_direction_s2 == profile.per_direction_s2;
      add( "oracle-totals",
           "naive vs1=" + std::to_string( naive.vs1 ) + " vs1_sq=" + std::to_string( naive.vs1_sq ) + " vs2=" + std::to_string( naive.vs2 ), ok );
    }
    else
    {
      add( "oracle-totals", "skipped: literal enumeration limited to n <= 8", true );
    }
  }
  return result;
}

/// Scalar identities and characterisations, each checked against a second route.
inline VerificationResult verify_scalar( const BooleanFunction& f, const std::vector<std::string>& theorems, bool use_oracle )
{
  VerificationResult result;
  const int n = f.num_vars();
  const auto add = [&]( std::string theorem, const std::string& detail, bool ok ) { result.checks.push_back( { std::move( theorem ), detail, ok } ); };
  const auto spectrum = walsh_transform( f );
  const auto c = classify( f );
  const auto s1 = s1_total( f );
  const auto s2 = s2_total( f );
  // direct enumeration of derivative weights through the packed tables
  std::int64_t enum_s1 = 0, enum_s1_sq = 0, enum_fourier_sum = 0, enum_energy = 0;
  for ( std::uint32_t a = 0; a < f.size(); ++a )
  {
    const auto w = derivative_weight( f, a );
    const auto F = pow2( n ) - 2 * w;
    enum_fourier_sum += F;
    if ( a != 0 )
    {
      enum_s1 += w;
      enum_s1_sq += w * w;
      enum_energy += F * F;
    }
  }
  const auto full_s2_bound = pow2( 2 * n - 1 ) * ( pow2( n ) - 1 );
  const auto num = []( std::int64_t v ) { return std::to_string( v ); };

  for ( const auto& t : resolve_theorems( theorems, false ) )
  {
    if ( t == "weight-s1" )
      add( t, "closed=" + num( s1 ) + " enumerated=" + num( enum_s1 ), s1 == enum_s1 );
    else if ( t == "fourier-s1" )
      add( t, "fourier=" + num( s1_via_fourier( f ) ) + " enumerated=" + num( enum_s1 ), s1_via_fourier( f ) == enum_s1 );
    else if ( t == "ell-square" )
    {
      const auto ell = ell_parameter( f );
      const auto w = weight( f );
      bool recovered = false;
      try
      {
        recovered = weight_from_s1( enum_s1, n, w <= pow2( n - 1 ) ? Branch::minus : Branch::plus ) == w;
      }
      catch ( const std::invalid_argument& )
      {
      }
      add( t, "ell=" + num( ell ) + " 2^{2n-1}-2ell^2=" + num( pow2( 2 * n - 1 ) - 2 * ell * ell ), recovered && enum_s1 == pow2( 2 * n - 1 ) - 2 * ell * ell && ell <= pow2( n - 1 ) );
    }
    else if ( t == "fourier-derivatives" )
    {
      const auto F = fourier( f );
      add( t, "F(f)^2=" + num( F * F ) + " sum_a F(D_a f)=" + num( enum_fourier_sum ), F * F == enum_fourier_sum );
    }
    else if ( t == "s2-from-s1sq" )
    {
      const auto rhs = pow2( n + 1 ) * enum_s1 - 2 * enum_s1_sq;
      add( t, "s2=" + num( s2 ) + " 2^{n+1}s1-2s1_sq=" + num( rhs ), s2 == rhs );
    }
    else if ( t == "s2-balanced" )
    {
      const auto rhs = pow2( 3 * n ) - 2 * enum_s1_sq;
      // the balanced specialisation holds iff f is balanced
      add( t, "s2=" + num( s2 ) + " 2^{3n}-2s1_sq=" + num( rhs ) + " balanced=" + detail::yes_no( c.is_balanced ), ( s2 == rhs ) == c.is_balanced );
    }
    else if ( t == "s2-derivative-fourier" )
    {
      const auto rhs = full_s2_bound - enum_energy / 2;
      add( t, "s2=" + num( s2 ) + " derivative-fourier=" + num( rhs ), s2 == rhs );
    }
    else if ( t == "walsh4" )
    {
      const auto via = s2_via_walsh_moment( spectrum );
      add( t, "s2=" + num( s2 ) + " walsh-moment=" + num( via ), s2 == via );
    }
    else if ( t == "balanced-s1" )
    {
      const auto o = equality_outcome( "balanced-s1", pow2( 2 * n - 1 ), s1 );
      add( t, detail::describe( o ) + " balanced=" + detail::yes_no( c.is_balanced ), o.verdict == c.is_balanced && o.relation != Relation::above_bound );
    }
    else if ( t == "bent-s2" )
    {
      const auto o = equality_outcome( "bent-s2", full_s2_bound, s2 );
      add( t, detail::describe( o ) + " spectrum-bent=" + detail::yes_no( c.is_bent ), o.verdict == c.is_bent && o.relation != Relation::above_bound );
    }
    else if ( t == "partially-bent-s2" )
    {
      if ( !c.is_partially_bent )
      {
        add( t, "not applicable: f is not partially-bent", true );
        continue;
      }
      const int h = ( n - linear_space( f ).dim ) / 2;
      const auto expected = closed_form_s2( FunctionClass::partially_bent( h ), n );
      add( t, "h=" + std::to_string( h ) + " closed=" + num( expected ) + " s2=" + num( s2 ), expected == s2 );
    }
    else if ( t == "plateaued-s1" )
    {
      if ( !c.plateaued_order )
      {
        add( t, "not applicable: f is not plateaued", true );
        continue;
      }
      const auto expected = c.is_balanced ? pow2( 2 * n - 1 ) : closed_form_s1( FunctionClass::plateaued( *c.plateaued_order ), n );
      add( t, "r=" + std::to_string( *c.plateaued_order ) + " closed=" + num( expected ) + " s1=" + num( enum_s1 ), expected == enum_s1 );
    }
  }

  if ( use_oracle )
  {
    if ( n <= oracle::max_walsh_dimension )
      add( "oracle-walsh", "naive vs fast spectrum", oracle::naive_walsh( f ) == spectrum );
    add( "oracle-s1", "naive s1=" + num( oracle::naive_s1( f ) ), oracle::naive_s1( f ) == s1 );
    add( "oracle-s1-sq", "naive s1_sq=" + num( oracle::naive_s1_sq( f ) ), oracle::naive_s1_sq( f ) == s1_sq_total( f ) );
    if ( n <= oracle::max_s2_dimension )
      add( "oracle-s2", "naive s2=" + num( oracle::naive_s2( f ) ), oracle::naive_s2( f ) == s2 );
  }
  return result;
}

} // namespace bfderiv
