#include <CLI11.hpp>
#include <json.hpp>

#include <lincirc/builders.hpp>
#include <lincirc/circuit.hpp>
#include <lincirc/cover.hpp>
#include <lincirc/freeness.hpp>
#include <lincirc/matrix.hpp>
#include <lincirc/oracle.hpp>
#include <lincirc/rewrite.hpp>
#include <lincirc/satbridge.hpp>
#include <lincirc/semiring.hpp>
#include <lincirc/tensor.hpp>
#include <lincirc/uniform.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace lincirc;

namespace
{

void emit( json const& j )
{
  std::cout << j.dump( 2 ) << "\n";
}

Semiring ring_from_flag( std::string const& name )
{
  auto const ring = semiring_from_string( name );
  if ( !ring )
    throw std::invalid_argument( "unknown semiring: " + name );
  return *ring;
}

std::vector<uint32_t> parse_index_list( std::string const& text )
{
  std::vector<uint32_t> values;
  std::string token;
  std::istringstream in{ text };
  while ( std::getline( in, token, ',' ) )
    values.push_back( uint32_t( std::stoul( token ) ) );
  return values;
}

std::vector<uint64_t> parse_vector_arg( std::string const& text )
{
  std::vector<uint64_t> values;
  if ( text.find( ',' ) != std::string::npos )
  {
    std::string token;
    std::istringstream in{ text };
    while ( std::getline( in, token, ',' ) )
      values.push_back( std::stoull( token ) );
    return values;
  }
  for ( char ch : text )
  {
    if ( ch < '0' || ch > '9' )
      throw std::invalid_argument( "eval: input vector must be digits or comma-separated" );
    values.push_back( uint64_t( ch - '0' ) );
  }
  return values;
}

/*! \brief Replaces the extension of `path` (or appends one) to name an artifact. */
std::string derive_out( std::string const& path, std::string const& ext )
{
  auto const dot = path.find_last_of( '.' );
  auto const slash = path.find_last_of( '/' );
  if ( dot == std::string::npos || ( slash != std::string::npos && dot < slash ) )
    return path + ext;
  return path.substr( 0, dot ) + ext;
}

json indices_json( BitVec const& v )
{
  json out = json::array();
  v.for_each_set( [&]( std::size_t i ) { out.push_back( i + 1 ); } );
  return out;
}

json rank_json( RankResult const& r )
{
  json rects = json::array();
  for ( auto const& rect : r.cover.rectangles )
    rects.push_back( { { "rows", indices_json( rect.rows ) },
                       { "cols", indices_json( rect.cols ) } } );
  return { { "resolved", r.resolved },
           { "rank", r.resolved ? json( r.rank ) : json() },
           { "budget", r.budget },
           { "rectangles", rects } };
}

void run_gen( std::string const& kind, uint32_t n, uint32_t rows, uint32_t cols,
              double density, uint32_t t, uint32_t k, uint64_t seed,
              std::string const& out_arg, std::string const& circuit_out )
{
  auto const out = out_arg.empty() ? kind + "-" + std::to_string( n ) + ".mat" : out_arg;
  json report;
  BooleanMatrix a{ 1, 1 };
  if ( kind == "identity" )
    a = BooleanMatrix::identity( n );
  else if ( kind == "complement-identity" )
    a = BooleanMatrix::complement_identity( n );
  else if ( kind == "ones" )
    a = BooleanMatrix::all_ones( rows ? rows : n, cols ? cols : n );
  else if ( kind == "random" )
  {
    std::mt19937_64 rng( seed );
    a = BooleanMatrix::random( rows ? rows : n, cols ? cols : n, density, rng );
  }
  else /* kuniform */
  {
    auto const code = build_code_matrix( t, n, k );
    auto sample = generate_kuniform( code, seed );
    a = sample.a;
    report["t"] = t;
    report["k"] = k;
    report["wires"] = sample.circuit.wire_count();
    if ( !circuit_out.empty() )
      write_circuit_file( circuit_out, sample.circuit );
  }
  write_matrix_file( out, a );
  report["kind"] = kind;
  report["n_rows"] = a.n_rows();
  report["n_cols"] = a.n_cols();
  report["weight"] = a.weight();
  report["seed"] = seed;
  report["out"] = out;
  emit( report );
}

void run_build( std::string const& method, std::string const& ring_name, uint32_t b,
                std::string const& in, std::string const& out_arg )
{
  auto const out = out_arg.empty() ? derive_out( in, ".circ" ) : out_arg;
  auto const a = read_matrix_file( in );
  auto const ring = ring_from_flag( ring_name );
  Circuit c;
  json report;
  if ( method == "trivial" )
    c = trivial_circuit( a, ring );
  else
  {
    uint32_t const width = b ? b : lupanov_best_b( a.n_rows(), a.n_cols() );
    c = lupanov_circuit( a, ring, { width } );
    report["b"] = width;
  }
  write_circuit_file( out, c );
  report["method"] = method;
  report["ring"] = to_string( ring );
  report["n_rows"] = a.n_rows();
  report["n_cols"] = a.n_cols();
  report["wires"] = c.wire_count();
  report["out"] = out;
  emit( report );
}

void run_analyze( std::string const& in, uint32_t s, uint32_t t, uint32_t mp_s,
                  uint32_t mp_t, uint32_t budget )
{
  auto const a = read_matrix_file( in );
  json report;
  report["n_rows"] = a.n_rows();
  report["n_cols"] = a.n_cols();
  report["weight"] = a.weight();

  if ( s >= 1 && s < a.n_rows() && t >= 1 && t < a.n_cols() )
  {
    auto const cert = is_st_free( a, s, t );
    json f = { { "s", cert.s }, { "t", cert.t }, { "free", cert.free } };
    if ( !cert.free )
    {
      f["witness_rows"] = cert.witness_rows;
      f["witness_cols"] = cert.witness_cols;
    }
    report["freeness"] = f;
  }
  else
    report["freeness"] = nullptr;

  if ( a.weight() > 0 && a.n_rows() > 1 && a.n_cols() > 1 )
  {
    auto const mp = mp_lower_bound( a, std::min( mp_s, a.n_rows() - 1 ),
                                    std::min( mp_t, a.n_cols() - 1 ) );
    report["mp"] = { { "s", mp.s }, { "t", mp.t }, { "bound", mp.bound } };
  }
  else
    report["mp"] = nullptr;

  if ( a.n_rows() <= 16 && a.n_cols() <= 16 )
  {
    report["rank_or"] = rank_json( rank_cover( a, false, budget ) );
    report["rank_sum"] = rank_json( rank_cover( a, true, budget ) );
  }
  else
  {
    report["rank_or"] = nullptr;
    report["rank_sum"] = nullptr;
  }
  emit( report );
}

void run_rewrite( std::string const& in, std::string const& target_name,
                  std::string const& strategy_name, std::string const& out_arg )
{
  auto const out =
      out_arg.empty() ? derive_out( in, "." + target_name + ".circ" ) : out_arg;
  auto const c = read_circuit_file( in );
  auto const target = ring_from_flag( target_name );
  auto const strategy = rewrite_strategy_from_string( strategy_name );
  if ( !strategy )
    throw std::invalid_argument( "unknown strategy: " + strategy_name );
  auto const [rewritten, report] = rewrite( c, target, *strategy );
  write_circuit_file( out, rewritten );
  emit( { { "input_wires", report.input_wires },
          { "output_wires", report.output_wires },
          { "output_depth", report.output_depth },
          { "strategy", to_string( report.strategy ) },
          { "target", to_string( target ) },
          { "out", out } } );
}

void run_eval( std::string const& in, std::string const& x_text )
{
  auto const c = read_circuit_file( in );
  Vector x{ c.ring, parse_vector_arg( x_text ) };
  auto const y = evaluate( c, x );
  emit( { { "ring", to_string( c.ring ) }, { "x", x.values }, { "y", y.values } } );
}

void run_satcount( std::string const& in, std::string const& mode, std::string const& via )
{
  auto const f = parse_dimacs( [&]() {
    std::ifstream file( in );
    if ( !file )
      throw std::runtime_error( "cannot read " + in );
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }() );

  auto const start = std::chrono::steady_clock::now();
  uint64_t result = 0;
  if ( via == "direct" )
  {
    auto const inst = split_to_cover( f );
    auto const pairs = count_covering_pairs( inst, CountVia::direct );
    result = inst.padded ? pairs / 2 : pairs;
    if ( mode == "parity" )
      result &= 1u;
  }
  else
    result = mode == "parity" ? parity_sat( f ) : count_sat( f );
  auto const stop = std::chrono::steady_clock::now();
  double const elapsed =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>( stop - start )
          .count();

  emit( { { "n", f.n_vars },
          { "m", f.clauses.size() },
          { "count_or_parity", result },
          { "via", via },
          { "elapsed_ms", elapsed } } );
}

void run_oracle( std::string const& in, std::string const& ring_name, uint32_t budget,
                 std::string const& out )
{
  auto const a = read_matrix_file( in );
  if ( ring_name == "all" )
  {
    auto const g = gap_report( a, budget );
    json ratios = json::object();
    for ( auto const& [key, value] : g.ratios )
      ratios[key] = value;
    emit( { { "budget", g.budget },
            { "c_or", g.c_or ? json( *g.c_or ) : json() },
            { "c_sum", g.c_sum ? json( *g.c_sum ) : json() },
            { "c_xor", g.c_xor ? json( *g.c_xor ) : json() },
            { "ratios", ratios } } );
    return;
  }
  auto const result = min_wires( a, ring_from_flag( ring_name ), budget );
  if ( result.found && !out.empty() )
    write_circuit_file( out, result.witness );
  emit( { { "ring", ring_name },
          { "found", result.found },
          { "wires", result.found ? json( result.wires ) : json() },
          { "budget", result.budget } } );
}

void run_uniformity( uint32_t t, uint32_t n, uint32_t k, uint64_t samples,
                     std::string const& rows, std::string const& cols, uint64_t seed,
                     uint32_t threads )
{
  auto const code = build_code_matrix( t, n, k );
  auto const report = uniformity_test( code, samples, parse_index_list( rows ),
                                       parse_index_list( cols ), seed, threads );
  emit( { { "k", report.k },
          { "samples", report.samples },
          { "statistic", report.statistic },
          { "dof", report.dof },
          { "critical_001", report.critical_001 },
          { "pass", report.pass },
          { "seed", report.seed } } );
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "gate-level circuits for linear maps over OR, SUM, and XOR" };
  app.require_subcommand( 1 );

  /* gen */
  auto* gen = app.add_subcommand( "gen", "generate a matrix artifact" );
  std::string gen_kind, gen_out, gen_circuit_out;
  uint32_t gen_n = 4, gen_rows = 0, gen_cols = 0, gen_t = 4, gen_k = 2;
  double gen_density = 0.5;
  uint64_t gen_seed = 1;
  gen->add_option( "--kind", gen_kind, "matrix family" )
      ->required()
      ->check( CLI::IsMember( { "identity", "complement-identity", "ones", "random",
                                "kuniform" } ) );
  gen->add_option( "--n", gen_n, "square dimension / code length" );
  gen->add_option( "--rows", gen_rows, "row count override" );
  gen->add_option( "--cols", gen_cols, "column count override" );
  gen->add_option( "--density", gen_density, "one-density for random" );
  gen->add_option( "--t", gen_t, "field degree for kuniform" );
  gen->add_option( "--k", gen_k, "uniformity order for kuniform" );
  gen->add_option( "--seed", gen_seed, "random seed" );
  gen->add_option( "--out", gen_out, "matrix file path" );
  gen->add_option( "--circuit-out", gen_circuit_out, "circuit file path (kuniform)" );
  gen->callback( [&]() {
    run_gen( gen_kind, gen_n, gen_rows, gen_cols, gen_density, gen_t, gen_k, gen_seed,
             gen_out, gen_circuit_out );
  } );

  /* build */
  auto* build = app.add_subcommand( "build", "build a circuit from a matrix" );
  std::string build_method, build_ring, build_in, build_out;
  uint32_t build_b = 0;
  build->add_option( "--method", build_method, "construction" )
      ->required()
      ->check( CLI::IsMember( { "trivial", "lupanov" } ) );
  build->add_option( "--ring", build_ring, "semiring" )
      ->required()
      ->check( CLI::IsMember( { "or", "sum", "xor" } ) );
  build->add_option( "--b", build_b, "lupanov block width (0 = best)" );
  build->add_option( "--in", build_in, "matrix file" )->required();
  build->add_option( "--out", build_out, "circuit file path" );
  build->callback(
      [&]() { run_build( build_method, build_ring, build_b, build_in, build_out ); } );

  /* analyze */
  auto* analyze = app.add_subcommand( "analyze", "weight, freeness, bounds, ranks" );
  std::string analyze_in;
  uint32_t analyze_s = 1, analyze_t = 1, analyze_mp_s = 6, analyze_mp_t = 6,
           analyze_budget = 16;
  analyze->add_option( "--in", analyze_in, "matrix file" )->required();
  analyze->add_option( "--s", analyze_s, "freeness row parameter" );
  analyze->add_option( "--t", analyze_t, "freeness column parameter" );
  analyze->add_option( "--mp-s", analyze_mp_s, "lower-bound sweep cap on s" );
  analyze->add_option( "--mp-t", analyze_mp_t, "lower-bound sweep cap on t" );
  analyze->add_option( "--budget", analyze_budget, "rank search budget" );
  analyze->callback( [&]() {
    run_analyze( analyze_in, analyze_s, analyze_t, analyze_mp_s, analyze_mp_t,
                 analyze_budget );
  } );

  /* rewrite */
  auto* rewrite_cmd = app.add_subcommand( "rewrite", "rebuild an OR circuit under SUM/XOR" );
  std::string rw_in, rw_target, rw_strategy = "depth1", rw_out;
  rewrite_cmd->add_option( "--in", rw_in, "circuit file" )->required();
  rewrite_cmd->add_option( "--target", rw_target, "target semiring" )
      ->required()
      ->check( CLI::IsMember( { "sum", "xor" } ) );
  rewrite_cmd->add_option( "--strategy", rw_strategy, "construction" )
      ->check( CLI::IsMember( { "depth1", "lupanov" } ) );
  rewrite_cmd->add_option( "--out", rw_out, "circuit file path" );
  rewrite_cmd->callback( [&]() { run_rewrite( rw_in, rw_target, rw_strategy, rw_out ); } );

  /* eval */
  auto* eval_cmd = app.add_subcommand( "eval", "evaluate a circuit on a vector" );
  std::string eval_in, eval_x;
  eval_cmd->add_option( "--in", eval_in, "circuit file" )->required();
  eval_cmd->add_option( "--x", eval_x, "input vector (bits or comma-separated)" )
      ->required();
  eval_cmd->callback( [&]() { run_eval( eval_in, eval_x ); } );

  /* satcount */
  auto* satcount = app.add_subcommand( "satcount", "count or parity of CNF models" );
  std::string sat_in, sat_mode = "count", sat_via = "pipeline";
  satcount->add_option( "--in", sat_in, "DIMACS cnf file" )->required();
  satcount->add_option( "--mode", sat_mode, "count or parity" )
      ->check( CLI::IsMember( { "count", "parity" } ) );
  satcount->add_option( "--via", sat_via, "counting route" )
      ->check( CLI::IsMember( { "direct", "pipeline" } ) );
  satcount->callback( [&]() { run_satcount( sat_in, sat_mode, sat_via ); } );

  /* oracle */
  auto* oracle = app.add_subcommand( "oracle", "exhaustive minimum wire search" );
  std::string oracle_in, oracle_ring = "all", oracle_out;
  uint32_t oracle_budget = 20;
  oracle->add_option( "--in", oracle_in, "matrix file" )->required();
  oracle->add_option( "--ring", oracle_ring, "semiring or all" )
      ->check( CLI::IsMember( { "or", "sum", "xor", "all" } ) );
  oracle->add_option( "--budget", oracle_budget, "wire budget" );
  oracle->add_option( "--out", oracle_out, "witness circuit path" );
  oracle->callback( [&]() { run_oracle( oracle_in, oracle_ring, oracle_budget, oracle_out ); } );

  /* uniformity */
  auto* uniformity = app.add_subcommand( "uniformity", "chi-square submatrix test" );
  uint32_t uni_t = 3, uni_n = 8, uni_k = 2, uni_threads = 1;
  uint64_t uni_samples = 16000, uni_seed = 1;
  std::string uni_rows, uni_cols;
  uniformity->add_option( "--t", uni_t, "field degree" );
  uniformity->add_option( "--n", uni_n, "code length" );
  uniformity->add_option( "--k", uni_k, "uniformity order" );
  uniformity->add_option( "--samples", uni_samples, "sample count" );
  uniformity->add_option( "--rows", uni_rows, "comma-separated 1-based rows" )->required();
  uniformity->add_option( "--cols", uni_cols, "comma-separated 1-based columns" )->required();
  uniformity->add_option( "--seed", uni_seed, "random seed" );
  uniformity->add_option( "--threads", uni_threads, "worker threads" );
  uniformity->callback( [&]() {
    run_uniformity( uni_t, uni_n, uni_k, uni_samples, uni_rows, uni_cols, uni_seed,
                    uni_threads );
  } );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    int const code = app.exit( e );
    return code == 0 ? 0 : 2;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
