// Command-line front end: analyze, verify, scan and catalog.
//
// Exit codes: 0 success, 1 internal error, 2 parse error, 3 resource cap,
// 4 verification mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include <bfderiv/bfderiv.hpp>

namespace
{

using namespace bfderiv;

constexpr int exit_parse = 2;
constexpr int exit_cap = 3;
constexpr int exit_mismatch = 4;

constexpr int scalar_cap = 16;
constexpr int vectorial_cap = 10;

struct InputOptions
{
  std::string tt;
  std::string lut;
  std::string power;
  std::string univariate;
  std::string catalog;
  std::string poly;
  int n = 0;
  int k = 1;
  std::uint64_t seed = 0;
  bool balanced = false;
  bool constant = false;
  bool allow_large = false;
};

struct LoadedInput
{
  std::variant<BooleanFunction, VectorialFunction> function;
  InputInfo info;
};

void add_input_options( CLI::App& cmd, InputOptions& o )
{
  cmd.add_option( "--tt", o.tt, "truth table bits or file (text or binary)" );
  cmd.add_option( "--lut", o.lut, "LUT file" );
  cmd.add_option( "--power", o.power, "power map spec n=<k>,d=<int>[,poly=<mask>]" );
  cmd.add_option( "--univariate", o.univariate, "univariate spec n=<k>,coeffs=<c0,c1,...>[,poly=<mask>]" );
  cmd.add_option( "--catalog", o.catalog, "catalog entry name (see `catalog list`)" );
  cmd.add_option( "--poly", o.poly, "irreducible modulus override (0b..., 0x... or decimal)" );
  cmd.add_option( "--n", o.n, "dimension for catalog entries" );
  cmd.add_option( "--k", o.k, "catalog parameter k" );
  cmd.add_option( "--seed", o.seed, "seed for random catalog entries" );
  cmd.add_flag( "--balanced", o.balanced, "balanced canonical quadratic form" );
  cmd.add_flag( "--c", o.constant, "constant term of the unbalanced canonical quadratic form" );
  cmd.add_flag( "--allow-large", o.allow_large, "lift the default size caps" );
}

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw parse_error( "cannot open '" + path + "'" );
  return std::string( std::istreambuf_iterator<char>( in ), {} );
}

bool looks_like_text( const std::string& bytes )
{
  return bytes.find_first_not_of( "01n=23456789 \t\r\n" ) == std::string::npos;
}

BooleanFunction load_truth_table( const std::string& arg )
{
  if ( !arg.empty() && arg.find_first_not_of( "01" ) == std::string::npos )
    return truth_table_from_bits( arg );
  const auto bytes = read_file( arg );
  if ( looks_like_text( bytes ) )
  {
    std::istringstream in( bytes );
    return read_truth_table_text( in );
  }
  const auto* data = reinterpret_cast<const std::uint8_t*>( bytes.data() );
  return from_binary( std::span<const std::uint8_t>( data, bytes.size() ) );
}

catalog::CatalogParameters catalog_parameters( const InputOptions& o )
{
  catalog::CatalogParameters p;
  p.n = o.n;
  p.k = o.k;
  p.seed = o.seed;
  p.balanced = o.balanced;
  p.constant = o.constant;
  if ( !o.poly.empty() )
    p.modulus = parse_modulus( o.poly );
  return p;
}

LoadedInput load_input( const InputOptions& o )
{
  const int given = !o.tt.empty() + !o.lut.empty() + !o.power.empty() + !o.univariate.empty() + !o.catalog.empty();
  if ( given != 1 )
    throw parse_error( "exactly one of --tt, --lut, --power, --univariate, --catalog is required" );

  std::optional<std::uint32_t> poly;
  if ( !o.poly.empty() )
    poly = parse_modulus( o.poly );

  if ( !o.tt.empty() )
    return { load_truth_table( o.tt ), { "tt", o.tt, {}, {} } };
  if ( !o.lut.empty() )
  {
    std::istringstream in( read_file( o.lut ) );
    return { read_lut_text( in ), { "lut", o.lut, {}, {} } };
  }
  if ( !o.power.empty() )
  {
    auto spec = parse_power_spec( o.power );
    if ( poly )
      spec.modulus = poly;
    auto F = from_power_spec( spec );
    return { F, { "power", o.power, F.provenance().modulus, {} } };
  }
  if ( !o.univariate.empty() )
  {
    auto spec = parse_univariate_spec( o.univariate );
    if ( poly )
      spec.modulus = poly;
    auto F = from_univariate_spec( spec );
    return { F, { "univariate", o.univariate, F.provenance().modulus, {} } };
  }

  auto params = catalog_parameters( o );
  if ( o.catalog == "dillon" )
    params.n = 6;
  if ( params.n == 0 )
    throw parse_error( "catalog entry '" + o.catalog + "' needs --n" );
  auto entry = catalog::load_entry( o.catalog, params );
  InputInfo info{ "catalog", o.catalog + ":n=" + std::to_string( params.n ) + ",k=" + std::to_string( params.k ), {}, {} };
  if ( o.catalog.starts_with( "random" ) || o.catalog == "mm" )
    info.seed = o.seed;
  if ( const auto* F = std::get_if<VectorialFunction>( &entry.function ) )
    info.modulus = F->provenance().modulus;
  return { std::move( entry.function ), info };
}

void enforce_caps( const LoadedInput& in, bool allow_large )
{
  const bool vectorial = std::holds_alternative<VectorialFunction>( in.function );
  const int n = vectorial ? std::get<VectorialFunction>( in.function ).num_vars() : std::get<BooleanFunction>( in.function ).num_vars();
  const int cap = vectorial ? vectorial_cap : scalar_cap;
  if ( n <= cap )
    return;
  if ( !allow_large )
    throw size_error( "n = " + std::to_string( n ) + " exceeds the default cap " + std::to_string( cap ) + " (use --allow-large)" );
  // vectorial: 2^n components, each two butterflies of n 2^n steps; scalar: a few butterflies
  const double ops = vectorial ? 2.0 * n * std::ldexp( 1.0, 2 * n ) : 8.0 * n * std::ldexp( 1.0, n );
  std::fprintf( stderr, "warning: n = %d above the default cap; estimated %.3g basic operations\n", n, ops );
}

void emit( const std::string& text, const std::string& out_path )
{
  if ( out_path.empty() )
  {
    std::cout << text;
    return;
  }
  std::ofstream out( out_path, std::ios::binary );
  if ( !out )
    throw std::runtime_error( "cannot write '" + out_path + "'" );
  out << text;
}

std::vector<std::string> split_list( const std::string& s )
{
  std::vector<std::string> out;
  std::stringstream ss( s );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    if ( !item.empty() )
      out.push_back( item );
  }
  return out;
}

int cmd_analyze( const InputOptions& o, const std::string& format, const std::string& out_path )
{
  const auto in = load_input( o );
  enforce_caps( in, o.allow_large );
  std::string text;
  if ( const auto* F = std::get_if<VectorialFunction>( &in.function ) )
  {
    if ( format == "rows" )
      text = scan_header() + "\n" + format_row( scan_function( in.info.source, *F ) ) + "\n";
    else
      text = vectorial_report( *F, in.info ).render();
  }
  else
  {
    if ( format == "rows" )
      throw parse_error( "--format rows applies to vectorial input only" );
    text = scalar_report( std::get<BooleanFunction>( in.function ), in.info ).render();
  }
  emit( text, out_path );
  return 0;
}

int cmd_verify_report( const LoadedInput& in, const std::string& report_path, const std::string& out_path )
{
  const auto claimed = AnalysisReport::parse( read_file( report_path ) );
  auto problems = check_report_consistency( claimed );
  const auto recomputed = std::holds_alternative<VectorialFunction>( in.function ) ? vectorial_report( std::get<VectorialFunction>( in.function ), in.info )
                                                                                   : scalar_report( std::get<BooleanFunction>( in.function ), in.info );
  const auto expected = recomputed.stable_fields();
  const auto actual = claimed.stable_fields();
  for ( const auto& [key, value] : expected )
  {
    const auto got = claimed.get( key );
    if ( !got )
      problems.push_back( key + ": missing (expected " + value + ")" );
    else if ( *got != value )
      problems.push_back( key + ": report says " + *got + ", recomputed " + value );
  }
  for ( const auto& [key, value] : actual )
  {
    if ( !recomputed.get( key ) )
      problems.push_back( key + ": unexpected field" );
  }
  std::string text;
  for ( const auto& p : problems )
    text += "DIFF " + p + "\n";
  text += problems.empty() ? "verify: pass\n" : "verify: MISMATCH\n";
  emit( text, out_path );
  return problems.empty() ? 0 : exit_mismatch;
}

int cmd_verify( const InputOptions& o, const std::string& theorems, bool use_oracle, const std::string& report_path, const std::string& out_path )
{
  const auto in = load_input( o );
  enforce_caps( in, o.allow_large );
  if ( !report_path.empty() )
    return cmd_verify_report( in, report_path, out_path );
  const auto selected = split_list( theorems );
  const auto result = std::holds_alternative<VectorialFunction>( in.function )
                          ? verify_vectorial( std::get<VectorialFunction>( in.function ), selected, use_oracle )
                          : verify_scalar( std::get<BooleanFunction>( in.function ), selected, use_oracle );
  std::string text;
  for ( const auto& c : result.checks )
    text += std::string( c.consistent ? "PASS " : "FAIL " ) + c.theorem + ": " + c.detail + "\n";
  text += result.passed() ? "verify: pass\n" : "verify: MISMATCH\n";
  emit( text, out_path );
  return result.passed() ? 0 : exit_mismatch;
}

int cmd_scan( const std::string& family, int n, std::size_t count, std::uint64_t seed, const std::string& poly, bool allow_large, const std::string& out_path )
{
  if ( n < 1 )
    throw parse_error( "scan needs --n" );
  if ( n > vectorial_cap && !allow_large )
    throw size_error( "scan with n = " + std::to_string( n ) + " exceeds the default cap (use --allow-large)" );
  std::optional<std::uint32_t> modulus;
  if ( !poly.empty() )
    modulus = parse_modulus( poly );
  std::vector<ScanRow> rows;
  if ( family == "power" )
    rows = scan_power_family( n, modulus );
  else if ( family == "random-lut" )
    rows = scan_random_family( n, count, seed );
  else if ( family == "catalog" )
    rows = scan_catalog_family( n );
  else
    throw parse_error( "unknown family '" + family + "' (power, random-lut, catalog)" );
  std::string text = scan_header() + "\n";
  for ( const auto& r : rows )
    text += format_row( r ) + "\n";
  emit( text, out_path );
  return 0;
}

int cmd_catalog_list()
{
  for ( const auto& l : catalog::listing )
    std::cout << l.name << "\t" << l.description << "\n";
  return 0;
}

int cmd_catalog_get( const std::string& name, InputOptions o, bool binary, const std::string& out_path )
{
  o.catalog = name;
  const auto in = load_input( o );
  if ( const auto* F = std::get_if<VectorialFunction>( &in.function ) )
  {
    emit( write_lut_text( *F ), out_path );
    return 0;
  }
  const auto& f = std::get<BooleanFunction>( in.function );
  if ( binary )
  {
    const auto bytes = to_binary( f );
    emit( std::string( bytes.begin(), bytes.end() ), out_path );
  }
  else
  {
    emit( write_truth_table_text( f ), out_path );
  }
  return 0;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Derivative-weight analysis of Boolean and vectorial Boolean functions" };
  app.require_subcommand( 1 );

  InputOptions analyze_in, verify_in, get_in;
  std::string format = "report", out_path, theorems = "all", family, poly, entry_name, report_path;
  bool use_oracle = false, binary = false, allow_large = false;
  int scan_n = 0;
  std::size_t count = 100;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand( "analyze", "full report for one function" );
  add_input_options( *analyze, analyze_in );
  analyze->add_option( "--format", format, "report | rows" )->check( CLI::IsMember( { "report", "rows" } ) );
  analyze->add_option( "--out", out_path, "output file" );

  auto* verify = app.add_subcommand( "verify", "check theorem predicates against independent measurements" );
  add_input_options( *verify, verify_in );
  verify->add_option( "--theorems", theorems, "comma-separated theorem names or 'all'" );
  verify->add_flag( "--oracle", use_oracle, "also compare against brute-force enumeration" );
  verify->add_option( "--report", report_path, "check a saved report against a recomputation of the input" );
  verify->add_option( "--out", out_path, "output file" );

  auto* scan = app.add_subcommand( "scan", "one row per function of a family" );
  scan->add_option( "--family", family, "power | random-lut | catalog" )->required();
  scan->add_option( "--n", scan_n, "dimension" )->required();
  scan->add_option( "--count", count, "number of random LUTs" );
  scan->add_option( "--seed", seed, "first seed for random LUTs" );
  scan->add_option( "--poly", poly, "modulus override" );
  scan->add_flag( "--allow-large", allow_large, "lift the default size cap" );
  scan->add_option( "--out", out_path, "output file" );

  auto* cat = app.add_subcommand( "catalog", "list or export catalog functions" );
  cat->require_subcommand( 1 );
  auto* list = cat->add_subcommand( "list", "list catalog entries" );
  auto* get = cat->add_subcommand( "get", "write a catalog function as LUT or truth table" );
  get->add_option( "name", entry_name, "entry name" )->required();
  add_input_options( *get, get_in );
  get->add_flag( "--binary", binary, "binary truth-table output" );
  get->add_option( "--out", out_path, "output file" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return exit_parse;
  }

  try
  {
    if ( *analyze )
      return cmd_analyze( analyze_in, format, out_path );
    if ( *verify )
      return cmd_verify( verify_in, theorems, use_oracle, report_path, out_path );
    if ( *scan )
      return cmd_scan( family, scan_n, count, seed, poly, allow_large, out_path );
    if ( *list )
      return cmd_catalog_list();
    if ( *get )
      return cmd_catalog_get( entry_name, get_in, binary, out_path );
  }
  catch ( const parse_error& e )
  {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_parse;
  }
  catch ( const size_error& e )
  {
    std::cerr << "size cap: " << e.what() << "\n";
    return exit_cap;
  }
  catch ( const std::invalid_argument& e )
  {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_parse;
  }
  catch ( const std::out_of_range& e )
  {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_parse;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
