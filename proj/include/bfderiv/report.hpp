#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "linear_space.hpp"
#include "metrics.hpp"

namespace bfderiv
{

inline constexpr int report_schema_version = 1;

/// Where the analysed function came from.
struct InputInfo
{
  std::string kind; // tt | lut | power | univariate | catalog
  std::string source;
  std::optional<std::uint32_t> modulus;
  std::optional<std::uint64_t> seed;
};

/*! \brief Versioned key/value report.

  One "key: value" per line, keys in a fixed order.  Every number is an
  exact integer; booleans are "true"/"false"; absent values are "none".
*/
class AnalysisReport
{
public:
  using Field = std::pair<std::string, std::string>;

  void add( std::string key, std::string value ) { fields_.emplace_back( std::move( key ), std::move( value ) ); }
  void add( std::string key, bool value ) { add( std::move( key ), std::string( value ? "true" : "false" ) ); }
  void add( std::string key, const char* value ) { add( std::move( key ), std::string( value ) ); }
  void add( std::string key, std::int64_t value ) { add( std::move( key ), std::to_string( value ) ); }
  void add( std::string key, int value ) { add( std::move( key ), std::to_string( value ) ); }
  void add( std::string key, std::uint32_t value ) { add( std::move( key ), std::to_string( value ) ); }
  void add( std::string key, std::uint64_t value ) { add( std::move( key ), std::to_string( value ) ); }

  void add_outcome( const PredicateOutcome& o )
  {
    const auto prefix = "predicate." + o.name + ".";
    add( prefix + "expected", o.expected );
    add( prefix + "actual", o.actual );
    add( prefix + "gap", o.gap() );
    add( prefix + "relation", to_string( o.relation ) );
    add( prefix + "verdict", o.verdict );
  }

  const std::vector<Field>& fields() const noexcept { return fields_; }

  std::optional<std::string> get( std::string_view key ) const
  {
    for ( const auto& [k, v] : fields_ )
    {
      if ( k == key )
        return v;
    }
    return std::nullopt;
  }

  std::string render() const
  {
    std::string out;
    for ( const auto& [k, v] : fields_ )
      out += k + ": " + v + "\n";
    return out;
  }

  static AnalysisReport parse( std::string_view text )
  {
    AnalysisReport r;
    std::istringstream in{ std::string( text ) };
    std::string line;
    while ( std::getline( in, line ) )
    {
      if ( line.empty() )
        continue;
      const auto sep = line.find( ": " );
      if ( sep == std::string::npos || sep == 0 )
        throw parse_error( "malformed report line '" + line + "'" );
      r.add( line.substr( 0, sep ), line.substr( sep + 2 ) );
    }
    if ( r.get( "schema_version" ) != std::to_string( report_schema_version ) )
      throw parse_error( "unsupported report schema" );
    return r;
  }

  /// Fields except timing metadata, for comparing two runs.
  std::vector<Field> stable_fields() const
  {
    std::vector<Field> out;
    for ( const auto& f : fields_ )
    {
      if ( !f.first.starts_with( "timing." ) )
        out.push_back( f );
    }
    return out;
  }

private:
  std::vector<Field> fields_;
};

namespace detail
{

inline void add_input( AnalysisReport& r, const InputInfo& info )
{
  r.add( "schema_version", report_schema_version );
  r.add( "input.kind", info.kind );
  r.add( "input.source", info.source.empty() ? std::string( "none" ) : info.source );
  std::ostringstream modulus;
  if ( info.modulus )
    modulus << "0x" << std::hex << *info.modulus;
  r.add( "input.modulus", info.modulus ? modulus.str() : std::string( "none" ) );
  r.add( "input.seed", info.seed ? std::to_string( *info.seed ) : std::string( "none" ) );
}

} // namespace detail

inline AnalysisReport scalar_report( const BooleanFunction& f, const InputInfo& info )
{
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  detail::add_input( r, info );

  const int n = f.num_vars();
  const auto spectrum = walsh_transform( f );
  const auto c = classify( f );
  const auto profile = scalar_profile( f );

  r.add( "scalar.n", n );
  r.add( "scalar.weight", profile.weight );
  r.add( "scalar.balanced", c.is_balanced );
  r.add( "scalar.nonlinearity", nonlinearity( spectrum ) );
  r.add( "scalar.degree", degree( f ) );
  r.add( "scalar.linear_space_dim", linear_space( f ).dim );
  r.add( "scalar.bent", c.is_bent );
  r.add( "scalar.semi_bent", c.is_semi_bent );
  r.add( "scalar.plateaued_order", c.plateaued_order ? std::to_string( *c.plateaued_order ) : std::string( "none" ) );
  r.add( "scalar.partially_bent", c.is_partially_bent );
  r.add( "scalar.quadratic", c.is_quadratic );
  r.add( "scalar.s1", profile.s1 );
  r.add( "scalar.s1_sq", profile.s1_sq );
  r.add( "scalar.s2", profile.s2 );
  r.add( "scalar.ell", profile.ell );
  r.add( "scalar.walsh4", to_string( profile.walsh4 ) );

  r.add_outcome( equality_outcome( "balanced-s1", pow2( 2 * n - 1 ), profile.s1 ) );
  r.add_outcome( equality_outcome( "bent-s2", pow2( 2 * n - 1 ) * ( pow2( n ) - 1 ), profile.s2 ) );

  const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>( std::chrono::steady_clock::now() - start );
  r.add( "timing.elapsed_us", static_cast<std::int64_t>( elapsed.count() ) );
  return r;
}

inline AnalysisReport vectorial_report( const VectorialFunction& F, const InputInfo& info )
{
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  detail::add_input( r, info );

  const auto profile = vectorial_profile( F );
  const auto delta = differential_uniformity( F );
  const auto quad = check_quadratic_apn_s1( F, profile );

  r.add( "vectorial.n", F.num_vars() );
  r.add( "vectorial.is_permutation", is_permutation( F ) );
  r.add( "vectorial.delta", delta );
  r.add( "vectorial.is_apn", delta == 2 );
  r.add( "vectorial.degree", degree( F ) );
  r.add( "vectorial.vs1", profile.vs1 );
  r.add( "vectorial.vs1_sq", profile.vs1_sq );
  r.add( "vectorial.vs2", profile.vs2 );
  r.add( "vectorial.fsq", profile.fsq );
  r.add( "vectorial.component_convention", "dot-product" );
  r.add( "vectorial.census.components", profile.census.total );
  r.add( "vectorial.census.bent", profile.census.bent );
  r.add( "vectorial.census.semi_bent", profile.census.semi_bent );
  r.add( "vectorial.census.unbalanced_semi_bent", profile.census.unbalanced_semi_bent );
  r.add( "vectorial.census.balanced", profile.census.balanced );

  r.add_outcome( check_permutation_by_s1( profile ) );
  r.add_outcome( check_apn_permutation_by_s1sq( profile ) );
  r.add_outcome( check_apn_by_s2( profile ) );
  r.add_outcome( check_apn_per_direction_global( profile ) );
  const auto fsq = check_fsq_bounds( profile );
  r.add_outcome( fsq.global );
  r.add_outcome( fsq.per_direction );
  r.add_outcome( quad.outcome );
  r.add( "quadratic-apn.hypotheses_hold", quad.hypotheses_hold );
  r.add( "quadratic-apn.census_split_matches", quad.census_split_matches );

  const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>( std::chrono::steady_clock::now() - start );
  r.add( "timing.elapsed_us", static_cast<std::int64_t>( elapsed.count() ) );
  return r;
}

/*! \brief Recomputes each predicate's gap, relation and verdict from its raw fields.

  Returns one message per inconsistency.  Aggregated predicates whose verdict
  depends on more than expected/actual (apn-perm-s1sq, apn-per-direction,
  fsq-per-direction) are checked for implication only: a true verdict
  requires equality.
*/
inline std::vector<std::string> check_report_consistency( const AnalysisReport& r )
{
  std::vector<std::string> problems;
  for ( const auto& [key, value] : r.fields() )
  {
    if ( !key.starts_with( "predicate." ) || !key.ends_with( ".verdict" ) )
      continue;
    const auto prefix = key.substr( 0, key.size() - std::string_view( "verdict" ).size() );
    const auto name = prefix.substr( 10, prefix.size() - 11 );
    const auto expected = std::stoll( r.get( prefix + "expected" ).value_or( "0" ) );
    const auto actual = std::stoll( r.get( prefix + "actual" ).value_or( "0" ) );
    const auto gap = std::stoll( r.get( prefix + "gap" ).value_or( "0" ) );
    const auto relation = r.get( prefix + "relation" ).value_or( "" );
    const bool verdict = value == "true";
    if ( gap != expected - actual )
      problems.push_back( name + ": gap does not match expected - actual" );
    if ( relation != to_string( compare( actual, expected ) ) )
      problems.push_back( name + ": relation does not match the raw values" );
    const bool aggregated = name == "apn-perm-s1sq" || name == "apn-per-direction" || name == "fsq-per-direction";
    if ( aggregated ? ( verdict && expected != actual ) : ( verdict != ( expected == actual ) ) )
      problems.push_back( name + ": verdict does not match the raw values" );
  }
  return problems;
}

} // namespace bfderiv
