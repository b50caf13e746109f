#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "classify.hpp"
#include "vectorial.hpp"
#include "walsh.hpp"

namespace bfderiv
{

// ---------------------------------------------------------------------------
// Predicate outcomes
// ---------------------------------------------------------------------------

/// Where the measured value sits relative to the theorem's expected value.
enum class Relation
{
  equal,
  below_bound,
  above_bound
};

inline const char* to_string( Relation r ) noexcept
{
  switch ( r )
  {
  case Relation::equal:
    return "equal";
  case Relation::below_bound:
    return "below-bound";
  case Relation::above_bound:
    return "above-bound";
  }
  return "?";
}

inline Relation compare( std::int64_t actual, std::int64_t expected ) noexcept
{
  return actual == expected ? Relation::equal : ( actual < expected ? Relation::below_bound : Relation::above_bound );
}

struct PredicateOutcome
{
  std::string name;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  Relation relation = Relation::equal;
  bool verdict = false;

  /// expected - actual; nonzero gaps quantify how far a function is from equality.
  std::int64_t gap() const noexcept { return expected - actual; }
};

inline PredicateOutcome equality_outcome( std::string name, std::int64_t expected, std::int64_t actual )
{
  const auto rel = compare( actual, expected );
  return PredicateOutcome{ std::move( name ), expected, actual, rel, rel == Relation::equal };
}

// ---------------------------------------------------------------------------
// Scalar totals
// ---------------------------------------------------------------------------

/// sum_{a != 0} wt(D_a f) = 2 wt(f) (2^n - wt(f)).
inline std::int64_t s1_total( const BooleanFunction& f ) noexcept
{
  const auto w = weight( f );
  return 2 * w * ( pow2( f.num_vars() ) - w );
}

/// 2^{2n-1} - F(f)^2 / 2
inline std::int64_t s1_via_fourier( const BooleanFunction& f ) noexcept
{
  const auto F = fourier( f );
  return pow2( 2 * f.num_vars() - 1 ) - F * F / 2;
}

enum class Branch
{
  minus,
  plus
};

/*! \brief Recovers wt(f) from the first-order total.

  wt(f) = 2^{n-1} +- sqrt(2^{2n} - 2 s1) / 2.  Throws std::invalid_argument
  when the radicand is not the square of an even integer, i.e. when no
  Boolean function on n variables has this total.
*/
inline std::int64_t weight_from_s1( std::int64_t s1, int n, Branch branch )
{
  check_dimension( n );
  const auto radicand = pow2( 2 * n ) - 2 * s1;
  const auto root = exact_sqrt( radicand );
  if ( root < 0 || root % 2 != 0 )
  {
    throw std::invalid_argument( "s1 = " + std::to_string( s1 ) + " is not realisable on " + std::to_string( n ) + " variables" );
  }
  return branch == Branch::minus ? pow2( n - 1 ) - root / 2 : pow2( n - 1 ) + root / 2;
}

/// l with s1 = 2^{2n-1} - 2 l^2; l = |2^{n-1} - wt(f)|.
inline std::int64_t ell_parameter( const BooleanFunction& f ) noexcept
{
  const auto d = pow2( f.num_vars() - 1 ) - weight( f );
  return d < 0 ? -d : d;
}

/// sum_{a != 0} wt(D_a f)^2
inline std::int64_t s1_sq_total( const BooleanFunction& f )
{
  const auto weights = derivative_weights( f );
  std::int64_t total = 0;
  for ( std::size_t a = 1; a < weights.size(); ++a )
    total += weights[a] * weights[a];
  return total;
}

/// sum_{a,b != 0} wt(D_b D_a f) = 2^{n+1} s1 - 2 s1_sq.
inline std::int64_t s2_total( const BooleanFunction& f )
{
  return pow2( f.num_vars() + 1 ) * s1_total( f ) - 2 * s1_sq_total( f );
}

/// sum_{a,b != 0} wt(D_b D_a f) = 2^{3n-1} - sum_a W_f(a)^4 / 2^{n+1}.
inline std::int64_t s2_via_walsh_moment( const WalshSpectrum& s )
{
  const wide_int moment = walsh_fourth_moment( s );
  return static_cast<std::int64_t>( wide_int( pow2( 3 * s.n - 1 ) ) - ( moment >> ( s.n + 1 ) ) );
}

inline std::int64_t s2_via_walsh_moment( const BooleanFunction& f )
{
  return s2_via_walsh_moment( walsh_transform( f ) );
}

/// sum_{a != 0} F(D_a f)^2, the autocorrelation energy off zero.
inline std::int64_t derivative_fourier_energy( const BooleanFunction& f )
{
  const auto ac = autocorrelation( f );
  std::int64_t total = 0;
  for ( std::size_t a = 1; a < ac.size(); ++a )
    total += ac[a] * ac[a];
  return total;
}

/// sum_{a,b != 0} wt(D_b D_a f) = 2^{2n-1}(2^n - 1) - (1/2) sum_{a != 0} F^2(D_a f).
inline std::int64_t s2_via_derivative_fourier( const BooleanFunction& f )
{
  const int n = f.num_vars();
  return pow2( 2 * n - 1 ) * ( pow2( n ) - 1 ) - derivative_fourier_energy( f ) / 2;
}

struct ScalarDerivativeProfile
{
  int n = 0;
  std::int64_t weight = 0;
  std::int64_t s1 = 0;
  std::int64_t s1_sq = 0;
  std::int64_t s2 = 0;
  std::int64_t ell = 0;
  wide_int walsh4 = 0;
};

inline ScalarDerivativeProfile scalar_profile( const BooleanFunction& f )
{
  ScalarDerivativeProfile p;
  p.n = f.num_vars();
  p.weight = weight( f );
  p.s1 = s1_total( f );
  p.s1_sq = s1_sq_total( f );
  p.s2 = pow2( p.n + 1 ) * p.s1 - 2 * p.s1_sq;
  p.ell = ell_parameter( f );
  p.walsh4 = walsh_fourth_moment( walsh_transform( f ) );
  return p;
}

// ---------------------------------------------------------------------------
// Closed forms for function classes
// ---------------------------------------------------------------------------

/// Class parameter: k = dim V(f) for quadratics, h for partially-bent, r for plateaued.
struct FunctionClass
{
  enum class Kind
  {
    quadratic,
    bent,
    partially_bent,
    plateaued,
    balanced
  };

  Kind kind;
  int parameter = 0;

  static FunctionClass quadratic( int k ) { return { Kind::quadratic, k }; }
  static FunctionClass bent() { return { Kind::bent, 0 }; }
  static FunctionClass partially_bent( int h ) { return { Kind::partially_bent, h }; }
  static FunctionClass plateaued( int r ) { return { Kind::plateaued, r }; }
  static FunctionClass balanced() { return { Kind::balanced, 0 }; }
};

/// Expected first-order total for an unbalanced member of the class (balanced kind: 2^{2n-1}).
inline std::int64_t closed_form_s1( FunctionClass c, int n )
{
  check_dimension( n );
  const auto base = pow2( 2 * n - 1 );
  const auto out_of_range = [&] { return std::invalid_argument( "class parameter " + std::to_string( c.parameter ) + " out of range for n = " + std::to_string( n ) ); };
  switch ( c.kind )
  {
  case FunctionClass::Kind::balanced:
    return base;
  case FunctionClass::Kind::bent:
    if ( n % 2 != 0 )
      throw std::invalid_argument( "bent functions need even n" );
    return base - pow2( n - 1 );
  case FunctionClass::Kind::quadratic:
    if ( c.parameter < 0 || c.parameter > n )
      throw out_of_range();
    return base - pow2( n + c.parameter - 1 );
  case FunctionClass::Kind::partially_bent:
    if ( c.parameter < 0 || 2 * c.parameter > n )
      throw out_of_range();
    return base - pow2( 2 * n - 2 * c.parameter - 1 );
  case FunctionClass::Kind::plateaued:
    if ( c.parameter < 0 || c.parameter > n || c.parameter % 2 != 0 )
      throw out_of_range();
    return base - pow2( 2 * n - c.parameter - 1 );
  }
  throw std::invalid_argument( "unknown function class" );
}

/// Expected second-order total: bent 2^{2n-1}(2^n - 1), partially-bent 2^{2n-1}(2^n - 2^{n-2h}).
inline std::int64_t closed_form_s2( FunctionClass c, int n )
{
  check_dimension( n );
  switch ( c.kind )
  {
  case FunctionClass::Kind::bent:
    if ( n % 2 != 0 )
      throw std::invalid_argument( "bent functions need even n" );
    return pow2( 2 * n - 1 ) * ( pow2( n ) - 1 );
  case FunctionClass::Kind::partially_bent:
    if ( c.parameter < 0 || 2 * c.parameter > n )
      throw std::invalid_argument( "h = " + std::to_string( c.parameter ) + " out of range for n = " + std::to_string( n ) );
    return pow2( 2 * n - 1 ) * ( pow2( n ) - pow2( n - 2 * c.parameter ) );
  default:
    throw std::invalid_argument( "no second-order closed form for this class" );
  }
}

// ---------------------------------------------------------------------------
// Vectorial totals
// ---------------------------------------------------------------------------

struct ComponentCensus
{
  int bent = 0;
  int semi_bent = 0;
  int unbalanced_semi_bent = 0;
  int balanced = 0;
  int total = 0;

  friend bool operator==( const ComponentCensus&, const ComponentCensus& ) = default;
};

/*! \brief All derivative totals of a vectorial function, summed over components.

  per_direction_s2[a] = sum_{lambda, b != 0} wt(D_b D_a F_lambda) and
  per_direction_fsq[a] = sum_{lambda} F^2(D_a F_lambda) (lambda = 0 included);
  index 0 of both is left at zero.
*/
struct VectorialDerivativeProfile
{
  int n = 0;
  std::int64_t vs1 = 0;
  std::int64_t vs1_sq = 0;
  std::int64_t vs2 = 0;
  std::int64_t fsq = 0;
  std::vector<std::int64_t> per_direction_s2;
  std::vector<std::int64_t> per_direction_fsq;
  ComponentCensus census;
};

namespace detail
{

inline void accumulate_component( VectorialDerivativeProfile& p, const BooleanFunction& f )
{
  const int n = p.n;
  const auto full = pow2( n );
  const auto spectrum = walsh_transform( f );
  const auto ac = autocorrelation( spectrum );

  std::int64_t energy = 0;
  for ( std::uint32_t a = 1; a < ac.size(); ++a )
  {
    const auto wt = ( full - ac[a] ) / 2;
    const auto sq = ac[a] * ac[a];
    p.vs1 += wt;
    p.vs1_sq += wt * wt;
    energy += sq;
    // sum_{b != 0} wt(D_b g) = 2^{2n-1} - F(g)^2 / 2 with g = D_a f
    p.per_direction_s2[a] += pow2( 2 * n - 1 ) - sq / 2;
    p.per_direction_fsq[a] += sq;
  }
  p.vs2 += pow2( 2 * n - 1 ) * ( full - 1 ) - energy / 2;
  p.fsq += energy + full * full;

  ++p.census.total;
  if ( spectrum.values[0] == 0 )
    ++p.census.balanced;
  if ( is_bent( spectrum ) )
    ++p.census.bent;
  if ( is_semi_bent( spectrum ) )
  {
    ++p.census.semi_bent;
    if ( spectrum.values[0] != 0 )
      ++p.census.unbalanced_semi_bent;
  }
}

inline VectorialDerivativeProfile empty_profile( int n )
{
  VectorialDerivativeProfile p;
  p.n = n;
  p.per_direction_s2.assign( std::size_t{ 1 } << n, 0 );
  p.per_direction_fsq.assign( std::size_t{ 1 } << n, 0 );
  return p;
}

inline void merge_into( VectorialDerivativeProfile& into, const VectorialDerivativeProfile& part )
{
  into.vs1 += part.vs1;
  into.vs1_sq += part.vs1_sq;
  into.vs2 += part.vs2;
  into.fsq += part.fsq;
  for ( std::size_t a = 0; a < into.per_direction_s2.size(); ++a )
  {
    into.per_direction_s2[a] += part.per_direction_s2[a];
    into.per_direction_fsq[a] += part.per_direction_fsq[a];
  }
  into.census.bent += part.census.bent;
  into.census.semi_bent += part.census.semi_bent;
  into.census.unbalanced_semi_bent += part.census.unbalanced_semi_bent;
  into.census.balanced += part.census.balanced;
  into.census.total += part.census.total;
}

} // namespace detail

/*! \brief Computes every vectorial total from the component spectra.

  Components are distributed over `threads` workers (0 picks the hardware
  concurrency); partial sums are exact integers, so the result does not
  depend on the thread count.
*/
inline VectorialDerivativeProfile vectorial_profile( const VectorialFunction& F, unsigned threads = 0 )
{
  const int n = F.num_vars();
  if ( n > max_vectorial_dimension )
  {
    throw size_error( "vectorial analysis is limited to n <= " + std::to_string( max_vectorial_dimension ) );
  }
  const std::uint32_t components = F.size() - 1;
  if ( threads == 0 )
    threads = std::max( 1u, std::thread::hardware_concurrency() );
  // small inputs are not worth a thread
  if ( n <= 6 )
    threads = 1;
  threads = std::min( threads, components );

  std::vector<VectorialDerivativeProfile> parts( threads, detail::empty_profile( n ) );
  const auto work = [&]( unsigned t ) {
    for ( std::uint32_t lambda = 1 + t; lambda <= components; lambda += threads )
      detail::accumulate_component( parts[t], component( F, lambda ) );
  };
  if ( threads == 1 )
  {
    work( 0 );
  }
  else
  {
    std::vector<std::thread> pool;
    for ( unsigned t = 0; t < threads; ++t )
      pool.emplace_back( work, t );
    for ( auto& th : pool )
      th.join();
  }

  auto profile = detail::empty_profile( n );
  for ( const auto& part : parts )
    detail::merge_into( profile, part );
  // lambda = 0 contributes F^2(0) = 2^{2n} to every direction
  for ( std::size_t a = 1; a < profile.per_direction_fsq.size(); ++a )
    profile.per_direction_fsq[a] += pow2( 2 * n );
  return profile;
}

// Bounds from the characterisation theorems.

inline std::int64_t permutation_s1_bound( int n ) { return pow2( 2 * n - 1 ) * ( pow2( n ) - 1 ); }
inline std::int64_t apn_permutation_s1sq_bound( int n ) { return pow2( 2 * n - 1 ) * ( pow2( n ) - 1 ) * ( pow2( n - 1 ) + 1 ); }
inline std::int64_t apn_s2_bound( int n ) { return pow2( 2 * n - 1 ) * ( pow2( n ) - 1 ) * ( pow2( n ) - 2 ); }
inline std::int64_t apn_direction_s2_bound( int n ) { return pow2( 2 * n - 1 ) * ( pow2( n ) - 2 ); }
inline std::int64_t apn_fsq_bound( int n ) { return pow2( 2 * n + 1 ) * ( pow2( n ) - 1 ); }
inline std::int64_t apn_direction_fsq_bound( int n ) { return pow2( 2 * n + 1 ); }
inline std::int64_t quadratic_apn_s1( int n ) { return pow2( n - 1 ) * ( pow2( n ) - 1 ) * ( pow2( n ) - 2 ); }

/// vs1 <= 2^{2n-1}(2^n - 1), equality iff F is a permutation.
inline PredicateOutcome check_permutation_by_s1( const VectorialDerivativeProfile& p )
{
  return equality_outcome( "perm-s1", permutation_s1_bound( p.n ), p.vs1 );
}

/// For permutations vs1_sq >= 2^{2n-1}(2^n-1)(2^{n-1}+1), equality iff APN; false for non-permutations.
inline PredicateOutcome check_apn_permutation_by_s1sq( const VectorialDerivativeProfile& p )
{
  auto outcome = equality_outcome( "apn-perm-s1sq", apn_permutation_s1sq_bound( p.n ), p.vs1_sq );
  outcome.verdict = outcome.verdict && p.vs1 == permutation_s1_bound( p.n );
  return outcome;
}

/// vs2 <= 2^{2n-1}(2^n-1)(2^n-2), equality iff APN.
inline PredicateOutcome check_apn_by_s2( const VectorialDerivativeProfile& p )
{
  return equality_outcome( "apn-s2", apn_s2_bound( p.n ), p.vs2 );
}

/// One outcome per direction a != 0 (entry a - 1); F is APN iff all are equal.
inline std::vector<PredicateOutcome> check_apn_per_direction( const VectorialDerivativeProfile& p )
{
  std::vector<PredicateOutcome> out;
  out.reserve( p.per_direction_s2.size() - 1 );
  for ( std::size_t a = 1; a < p.per_direction_s2.size(); ++a )
    out.push_back( equality_outcome( "apn-direction-" + std::to_string( a ), apn_direction_s2_bound( p.n ), p.per_direction_s2[a] ) );
  return out;
}

inline bool all_verdicts( const std::vector<PredicateOutcome>& outcomes ) noexcept
{
  return std::all_of( outcomes.begin(), outcomes.end(), []( const auto& o ) { return o.verdict; } );
}

/// Aggregate of check_apn_per_direction: actual is the smallest per-direction total.
inline PredicateOutcome check_apn_per_direction_global( const VectorialDerivativeProfile& p )
{
  const auto per = check_apn_per_direction( p );
  const auto lowest = std::min_element( per.begin(), per.end(), []( const auto& l, const auto& r ) { return l.actual < r.actual; } );
  auto outcome = equality_outcome( "apn-per-direction", apn_direction_s2_bound( p.n ), lowest->actual );
  outcome.verdict = all_verdicts( per );
  return outcome;
}

struct FsqOutcomes
{
  PredicateOutcome global;
  PredicateOutcome per_direction;
};

/*! \brief Lower bounds on squared derivative Fourier coefficients.

  global: sum_{lambda != 0, a} F^2(D_a F_lambda) >= 2^{2n+1}(2^n - 1).
  per_direction: sum_lambda F^2(D_a F_lambda) >= 2^{2n+1} for every a != 0;
  reported with the largest direction as `actual`, verdict true iff every
  direction meets the bound with equality.
*/
inline FsqOutcomes check_fsq_bounds( const VectorialDerivativeProfile& p )
{
  FsqOutcomes out{ equality_outcome( "fsq", apn_fsq_bound( p.n ), p.fsq ), {} };
  const auto begin = p.per_direction_fsq.begin() + 1;
  const auto [lo, hi] = std::minmax_element( begin, p.per_direction_fsq.end() );
  out.per_direction = equality_outcome( "fsq-per-direction", apn_direction_fsq_bound( p.n ), *hi );
  out.per_direction.verdict = *lo == *hi && *hi == apn_direction_fsq_bound( p.n );
  return out;
}

struct QuadraticApnOutcome
{
  PredicateOutcome outcome;
  ComponentCensus census;
  bool is_quadratic = false;
  bool is_apn = false;
  /// Quadratic, APN, and every component bent or unbalanced semi-bent.
  bool hypotheses_hold = false;
  /// Exactly 2(2^n - 1)/3 bent and (2^n - 1)/3 semi-bent components.
  bool census_split_matches = false;
};

/// vs1 = 2^{n-1}(2^n-1)(2^n-2) for quadratic APN functions with bent and unbalanced semi-bent components.
inline QuadraticApnOutcome check_quadratic_apn_s1( const VectorialFunction& F, const VectorialDerivativeProfile& p )
{
  QuadraticApnOutcome out;
  out.outcome = equality_outcome( "quadratic-apn-s1", quadratic_apn_s1( p.n ), p.vs1 );
  out.census = p.census;
  out.is_quadratic = degree( F ) == 2;
  out.is_apn = is_apn( F );
  const auto& c = p.census;
  out.hypotheses_hold = out.is_quadratic && out.is_apn && c.bent + c.unbalanced_semi_bent == c.total && c.semi_bent == c.unbalanced_semi_bent;
  const std::int64_t components = pow2( p.n ) - 1;
  out.census_split_matches = components % 3 == 0 && 3 * c.bent == 2 * components && 3 * c.semi_bent == components;
  return out;
}

inline QuadraticApnOutcome check_quadratic_apn_s1( const VectorialFunction& F )
{
  return check_quadratic_apn_s1( F, vectorial_profile( F ) );
}

} // namespace bfderiv
