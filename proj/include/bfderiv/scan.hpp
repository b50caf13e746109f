#pragma once

#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "catalog.hpp"
#include "metrics.hpp"

namespace bfderiv
{

struct ScanRow
{
  std::string id; // exponent, seed or catalog name
  std::uint32_t delta = 0;
  bool is_permutation = false;
  bool is_apn = false;
  std::int64_t vs1 = 0;
  std::int64_t vs1_sq = 0;
  std::int64_t vs2 = 0;
  bool perm_s1 = false;
  bool apn_perm_s1sq = false;
  bool apn_s2 = false;
  bool apn_per_direction = false;
  bool fsq = false;
};

inline ScanRow scan_function( std::string id, const VectorialFunction& F )
{
  const auto p = vectorial_profile( F, 1 );
  ScanRow row;
  row.id = std::move( id );
  row.delta = differential_uniformity( F );
  row.is_permutation = is_permutation( F );
  row.is_apn = row.delta == 2;
  row.vs1 = p.vs1;
  row.vs1_sq = p.vs1_sq;
  row.vs2 = p.vs2;
  row.perm_s1 = check_permutation_by_s1( p ).verdict;
  row.apn_perm_s1sq = check_apn_permutation_by_s1sq( p ).verdict;
  row.apn_s2 = check_apn_by_s2( p ).verdict;
  row.apn_per_direction = check_apn_per_direction_global( p ).verdict;
  const auto fsq = check_fsq_bounds( p );
  row.fsq = fsq.global.verdict && fsq.per_direction.verdict;
  return row;
}

inline std::string scan_header()
{
  return "# id,delta,is_permutation,is_apn,vs1,vs1_sq,vs2,perm_s1,apn_perm_s1sq,apn_s2,apn_per_direction,fsq";
}

inline std::string format_row( const ScanRow& r )
{
  const auto b = []( bool v ) { return v ? "1" : "0"; };
  return r.id + "," + std::to_string( r.delta ) + "," + b( r.is_permutation ) + "," + b( r.is_apn ) + "," + std::to_string( r.vs1 ) + "," +
         std::to_string( r.vs1_sq ) + "," + std::to_string( r.vs2 ) + "," + b( r.perm_s1 ) + "," + b( r.apn_perm_s1sq ) + "," + b( r.apn_s2 ) + "," +
         b( r.apn_per_direction ) + "," + b( r.fsq );
}

/// Evaluates jobs in parallel; rows come back in job order.
template<typename Job>
std::vector<ScanRow> run_scan( std::size_t count, Job&& job )
{
  std::vector<ScanRow> rows( count );
  const unsigned workers = std::max( 1u, std::min<unsigned>( std::thread::hardware_concurrency(), static_cast<unsigned>( count ) ) );
  std::vector<std::thread> pool;
  for ( unsigned t = 0; t < workers; ++t )
  {
    pool.emplace_back( [&, t] {
      for ( std::size_t i = t; i < count; i += workers )
        rows[i] = job( i );
    } );
  }
  for ( auto& th : pool )
    th.join();
  return rows;
}

/// Every power map x^d, d = 0 .. 2^n - 1.
inline std::vector<ScanRow> scan_power_family( int n, std::optional<std::uint32_t> modulus = {} )
{
  const auto ctx = make_context( n, modulus );
  return run_scan( ctx.order(), [&]( std::size_t d ) { return scan_function( std::to_string( d ), from_power( ctx, d ) ); } );
}

/// `count` random LUTs with seeds seed, seed + 1, ...
inline std::vector<ScanRow> scan_random_family( int n, std::size_t count, std::uint64_t seed )
{
  return run_scan( count, [&]( std::size_t i ) { return scan_function( std::to_string( seed + i ), catalog::random_lut( n, seed + i ) ); } );
}

inline std::vector<ScanRow> scan_catalog_family( int n )
{
  const auto entries = catalog::vectorial_entries( n );
  return run_scan( entries.size(), [&]( std::size_t i ) {
    const auto& e = entries[i];
    const auto label = e.name + ( e.name == "gold" || e.name == "kasami" ? "-k" + std::to_string( e.parameters.k ) : std::string() );
    return scan_function( label, std::get<VectorialFunction>( e.function ) );
  } );
}

} // namespace bfderiv
