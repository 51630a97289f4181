#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <lincirc/builders.hpp>
#include <lincirc/circuit.hpp>
#include <lincirc/cover.hpp>
#include <lincirc/freeness.hpp>
#include <lincirc/gf2.hpp>
#include <lincirc/matrix.hpp>
#include <lincirc/oracle.hpp>
#include <lincirc/rewrite.hpp>
#include <lincirc/satbridge.hpp>
#include <lincirc/semiring.hpp>
#include <lincirc/tensor.hpp>
#include <lincirc/uniform.hpp>

#include <random>
#include <sstream>

namespace py = pybind11;
using namespace lincirc;

namespace
{

std::vector<uint32_t> one_based_indices( BitVec const& v )
{
  std::vector<uint32_t> out;
  v.for_each_set( [&]( std::size_t i ) { out.push_back( uint32_t( i ) + 1 ); } );
  return out;
}

BitVec from_one_based( std::size_t size, std::vector<uint32_t> const& indices )
{
  BitVec v( size );
  for ( uint32_t i : indices )
    v.set( i - 1 );
  return v;
}

} // namespace

PYBIND11_MODULE( _core, m )
{
  m.doc() = "gate-level circuits for linear maps over OR, SUM, and XOR";

  py::enum_<Semiring>( m, "Semiring" )
      .value( "OR", Semiring::OR )
      .value( "SUM", Semiring::SUM )
      .value( "XOR", Semiring::XOR );

  /* ---- matrices ---- */
  py::class_<BooleanMatrix>( m, "BooleanMatrix" )
      .def( py::init<uint32_t, uint32_t>(), py::arg( "n_rows" ), py::arg( "n_cols" ) )
      .def_static( "identity", &BooleanMatrix::identity )
      .def_static( "all_ones", &BooleanMatrix::all_ones )
      .def_static( "complement_identity", &BooleanMatrix::complement_identity )
      .def_static( "from_rows", &BooleanMatrix::from_rows,
                   "build from strings of 0/1 characters" )
      .def_static(
          "random",
          []( uint32_t n_rows, uint32_t n_cols, double density, uint64_t seed ) {
            std::mt19937_64 rng( seed );
            return BooleanMatrix::random( n_rows, n_cols, density, rng );
          },
          py::arg( "n_rows" ), py::arg( "n_cols" ), py::arg( "density" ),
          py::arg( "seed" ) )
      .def_property_readonly( "n_rows", &BooleanMatrix::n_rows )
      .def_property_readonly( "n_cols", &BooleanMatrix::n_cols )
      .def( "test", &BooleanMatrix::test, py::arg( "row" ), py::arg( "col" ) )
      .def( "set", &BooleanMatrix::set, py::arg( "row" ), py::arg( "col" ),
            py::arg( "value" ) = true )
      .def( "weight", &BooleanMatrix::weight )
      .def( "row_weight", &BooleanMatrix::row_weight )
      .def( "has_zero_row", &BooleanMatrix::has_zero_row )
      .def( "transpose", &BooleanMatrix::transpose )
      .def( "row",
            []( BooleanMatrix const& a, uint32_t i ) {
              std::vector<uint32_t> cols;
              a.row( i ).for_each_set(
                  [&]( std::size_t j ) { cols.push_back( uint32_t( j ) ); } );
              return cols;
            },
            "0-based column indices of the 1-entries of row i" )
      .def( "__eq__", []( BooleanMatrix const& a, BooleanMatrix const& b ) { return a == b; } )
      .def( "__ne__", []( BooleanMatrix const& a, BooleanMatrix const& b ) { return a != b; } )
      .def( "__str__", []( BooleanMatrix const& a ) { return format_matrix( a ); } )
      .def( "__repr__", []( BooleanMatrix const& a ) {
        std::ostringstream out;
        out << "BooleanMatrix(" << a.n_rows() << "x" << a.n_cols() << ", weight="
            << a.weight() << ")";
        return out.str();
      } );

  m.def( "format_matrix", &format_matrix );
  m.def( "parse_matrix", []( std::string const& text ) { return parse_matrix( text ); } );
  m.def( "read_matrix_file", &read_matrix_file );
  m.def( "write_matrix_file", &write_matrix_file );

  /* ---- circuits ---- */
  py::class_<Violation>( m, "Violation" )
      .def_readonly( "gate", &Violation::gate )
      .def_readonly( "message", &Violation::message )
      .def( "__repr__", []( Violation const& v ) {
        return "Violation(gate=" + std::to_string( v.gate ) + ", '" + v.message + "')";
      } );

  py::class_<Vector>( m, "Vector" )
      .def( py::init( []( Semiring ring, std::vector<uint64_t> values ) {
              return Vector{ ring, std::move( values ) };
            } ),
            py::arg( "ring" ), py::arg( "values" ) )
      .def_readwrite( "ring", &Vector::ring )
      .def_readwrite( "values", &Vector::values );

  py::class_<Circuit>( m, "Circuit" )
      .def( py::init<>() )
      .def_readwrite( "ring", &Circuit::ring )
      .def_readwrite( "n_inputs", &Circuit::n_inputs )
      .def_readwrite( "gates", &Circuit::gates )
      .def_readwrite( "outputs", &Circuit::outputs )
      .def( "n_gates", &Circuit::n_gates )
      .def( "n_outputs", &Circuit::n_outputs )
      .def( "node_count", &Circuit::node_count )
      .def( "is_input", &Circuit::is_input )
      .def( "gate_id", &Circuit::gate_id )
      .def( "wire_count", &Circuit::wire_count )
      .def( "__str__", []( Circuit const& c ) { return format_circuit( c ); } )
      .def( "__repr__", []( Circuit const& c ) {
        std::ostringstream out;
        out << "Circuit(" << to_string( c.ring ) << ", inputs=" << c.n_inputs
            << ", gates=" << c.n_gates() << ", wires=" << c.wire_count() << ")";
        return out.str();
      } );

  m.def( "validate", &validate );
  m.def( "evaluate", &evaluate );
  m.def( "extract_matrix", &extract_matrix );
  m.def( "support", &support, "sorted 1-based input indices a node depends on" );
  m.def( "prune", &prune );
  m.def( "reverse_xor", &reverse_xor );
  m.def( "format_circuit", &format_circuit );
  m.def( "parse_circuit", []( std::string const& text ) { return parse_circuit( text ); } );
  m.def( "read_circuit_file", &read_circuit_file );
  m.def( "write_circuit_file", &write_circuit_file );

  /* ---- builders ---- */
  m.def( "trivial_circuit", &trivial_circuit, py::arg( "a" ), py::arg( "ring" ) );
  m.def(
      "lupanov_circuit",
      []( BooleanMatrix const& a, Semiring ring, uint32_t block_width ) {
        return lupanov_circuit( a, ring, { block_width } );
      },
      py::arg( "a" ), py::arg( "ring" ), py::arg( "block_width" ) = 2 );
  m.def( "lupanov_wire_bound", &lupanov_wire_bound );
  m.def( "lupanov_best_b", &lupanov_best_b );

  /* ---- freeness ---- */
  py::class_<FreenessCertificate>( m, "FreenessCertificate" )
      .def_readonly( "s", &FreenessCertificate::s )
      .def_readonly( "t", &FreenessCertificate::t )
      .def_readonly( "free", &FreenessCertificate::free )
      .def_readonly( "witness_rows", &FreenessCertificate::witness_rows )
      .def_readonly( "witness_cols", &FreenessCertificate::witness_cols );

  py::class_<MpBound>( m, "MpBound" )
      .def_readonly( "s", &MpBound::s )
      .def_readonly( "t", &MpBound::t )
      .def_readonly( "bound", &MpBound::bound );

  m.def( "is_st_free", &is_st_free, py::arg( "a" ), py::arg( "s" ), py::arg( "t" ) );
  m.def( "mp_lower_bound", &mp_lower_bound, py::arg( "a" ), py::arg( "max_s" ),
         py::arg( "max_t" ) );

  /* ---- rectangle covers ---- */
  py::class_<Rectangle>( m, "Rectangle" )
      .def_property_readonly(
          "rows", []( Rectangle const& r ) { return one_based_indices( r.rows ); } )
      .def_property_readonly(
          "cols", []( Rectangle const& r ) { return one_based_indices( r.cols ); } );

  py::class_<RectangleCover>( m, "RectangleCover" )
      .def_readonly( "rectangles", &RectangleCover::rectangles )
      .def_readonly( "disjoint", &RectangleCover::disjoint );

  m.def(
      "make_rectangle_cover",
      []( uint32_t n_rows, uint32_t n_cols,
          std::vector<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>> const& rects,
          bool disjoint ) {
        RectangleCover cover;
        cover.disjoint = disjoint;
        for ( auto const& [rows, cols] : rects )
          cover.rectangles.push_back(
              { from_one_based( n_rows, rows ), from_one_based( n_cols, cols ) } );
        return cover;
      },
      py::arg( "n_rows" ), py::arg( "n_cols" ), py::arg( "rectangles" ),
      py::arg( "disjoint" ) = false,
      "build a cover from (rows, cols) pairs of 1-based index lists" );

  py::class_<RankResult>( m, "RankResult" )
      .def_readonly( "resolved", &RankResult::resolved )
      .def_readonly( "rank", &RankResult::rank )
      .def_readonly( "cover", &RankResult::cover )
      .def_readonly( "budget", &RankResult::budget );

  m.def( "rank_cover", &rank_cover, py::arg( "a" ), py::arg( "disjoint" ),
         py::arg( "budget" ) );
  m.def( "complement_identity_cover", &complement_identity_cover );
  m.def( "cover_matches", &cover_matches );
  m.def( "cover_factors", &cover_factors, py::arg( "cover" ), py::arg( "n_rows" ),
         py::arg( "n_cols" ) );

  /* ---- tensor ---- */
  m.def( "kronecker", &kronecker, py::arg( "b" ), py::arg( "a" ) );
  m.def(
      "tensor_or_circuit",
      []( BooleanMatrix const& b, BooleanMatrix const& a, RectangleCover const& cover ) {
        return tensor_or_circuit( TensorSpec{ b, a, cover } );
      },
      py::arg( "b" ), py::arg( "a" ), py::arg( "cover" ) );
  m.def( "direct_sum_bound", &direct_sum_bound, py::arg( "b" ), py::arg( "a" ),
         py::arg( "cert" ), py::arg( "rank_sum_b" ) );

  /* ---- oracle ---- */
  py::class_<MinWiresResult>( m, "MinWiresResult" )
      .def_readonly( "found", &MinWiresResult::found )
      .def_readonly( "wires", &MinWiresResult::wires )
      .def_readonly( "witness", &MinWiresResult::witness )
      .def_readonly( "budget", &MinWiresResult::budget );

  py::class_<GapReport>( m, "GapReport" )
      .def_readonly( "matrix", &GapReport::matrix )
      .def_readonly( "c_or", &GapReport::c_or )
      .def_readonly( "c_sum", &GapReport::c_sum )
      .def_readonly( "c_xor", &GapReport::c_xor )
      .def_readonly( "budget", &GapReport::budget )
      .def_readonly( "ratios", &GapReport::ratios );

  m.def( "min_wires", &min_wires, py::arg( "a" ), py::arg( "ring" ),
         py::arg( "wire_budget" ) );
  m.def( "gap_report", &gap_report, py::arg( "a" ), py::arg( "wire_budget" ) );

  /* ---- GF(2) ---- */
  py::class_<GF2Field>( m, "GF2Field" )
      .def( py::init<uint32_t>(), py::arg( "degree" ) )
      .def_property_readonly( "degree", &GF2Field::degree )
      .def_property_readonly( "size", &GF2Field::size )
      .def_property_readonly( "modulus", &GF2Field::modulus )
      .def( "add", &GF2Field::add )
      .def( "mul", &GF2Field::mul )
      .def( "pow", &GF2Field::pow );

  m.def( "gf2_multiply", &gf2_multiply );
  m.def( "gf2_rank", &gf2_rank );

  /* ---- k-uniform generator ---- */
  py::class_<CodeMatrix>( m, "CodeMatrix" )
      .def( py::init( []( BooleanMatrix p, uint32_t k, uint32_t t ) {
              return CodeMatrix{ std::move( p ), k, t };
            } ),
            py::arg( "p" ), py::arg( "k" ), py::arg( "t" ) )
      .def_readwrite( "p", &CodeMatrix::p )
      .def_readwrite( "k", &CodeMatrix::k )
      .def_readwrite( "t", &CodeMatrix::t );

  py::enum_<IndependenceCheck>( m, "IndependenceCheck" )
      .value( "independent", IndependenceCheck::independent )
      .value( "dependent", IndependenceCheck::dependent )
      .value( "unverified", IndependenceCheck::unverified );

  py::class_<UniformSample>( m, "UniformSample" )
      .def_readonly( "r", &UniformSample::r )
      .def_readonly( "a", &UniformSample::a )
      .def_readonly( "circuit", &UniformSample::circuit );

  py::class_<UniformityReport>( m, "UniformityReport" )
      .def_readonly( "k", &UniformityReport::k )
      .def_readonly( "samples", &UniformityReport::samples )
      .def_readonly( "statistic", &UniformityReport::statistic )
      .def_readonly( "dof", &UniformityReport::dof )
      .def_readonly( "critical_001", &UniformityReport::critical_001 )
      .def_readonly( "pass_", &UniformityReport::pass )
      .def_readonly( "seed", &UniformityReport::seed );

  m.def( "build_code_matrix", &build_code_matrix, py::arg( "t" ), py::arg( "n" ),
         py::arg( "k" ) );
  m.def( "check_k_independence", &check_k_independence, py::arg( "code" ),
         py::arg( "subset_budget" ) = 2000000 );
  m.def( "generate_kuniform", &generate_kuniform, py::arg( "code" ), py::arg( "seed" ) );
  m.def( "kuniform_from_r", &kuniform_from_r, py::arg( "code" ), py::arg( "r" ) );
  m.def( "uniformity_test", &uniformity_test, py::arg( "code" ), py::arg( "samples" ),
         py::arg( "rows" ), py::arg( "cols" ), py::arg( "seed" ),
         py::arg( "threads" ) = 1 );
  m.def( "chi_square_critical_001", &chi_square_critical_001 );

  /* ---- rewriting ---- */
  py::enum_<RewriteStrategy>( m, "RewriteStrategy" )
      .value( "depth1", RewriteStrategy::depth1 )
      .value( "lupanov", RewriteStrategy::lupanov );

  py::class_<RewriteReport>( m, "RewriteReport" )
      .def_readonly( "input_wires", &RewriteReport::input_wires )
      .def_readonly( "output_wires", &RewriteReport::output_wires )
      .def_readonly( "output_depth", &RewriteReport::output_depth )
      .def_readonly( "strategy", &RewriteReport::strategy );

  m.def( "rewrite", &rewrite, py::arg( "c" ), py::arg( "target" ),
         py::arg( "strategy" ) = RewriteStrategy::depth1 );
  m.def( "equivalent", &equivalent, py::arg( "c1" ), py::arg( "c2" ) );

  /* ---- CNF counting ---- */
  py::class_<CnfFormula>( m, "CnfFormula" )
      .def( py::init<>() )
      .def_readwrite( "n_vars", &CnfFormula::n_vars )
      .def_readwrite( "clauses", &CnfFormula::clauses )
      .def( "has_empty_clause", &CnfFormula::has_empty_clause );

  py::class_<CoverInstance>( m, "CoverInstance" )
      .def_readonly( "m", &CoverInstance::m )
      .def_readonly( "padded", &CoverInstance::padded )
      .def_property_readonly( "left",
                              []( CoverInstance const& inst ) {
                                std::vector<std::vector<uint32_t>> out;
                                for ( auto const& v : inst.left )
                                  out.push_back( one_based_indices( v ) );
                                return out;
                              } )
      .def_property_readonly( "right", []( CoverInstance const& inst ) {
        std::vector<std::vector<uint32_t>> out;
        for ( auto const& v : inst.right )
          out.push_back( one_based_indices( v ) );
        return out;
      } );

  m.def(
      "make_cover_instance",
      []( uint32_t m_size, std::vector<std::vector<uint32_t>> const& left,
          std::vector<std::vector<uint32_t>> const& right, bool padded ) {
        CoverInstance inst;
        inst.m = m_size;
        inst.padded = padded;
        for ( auto const& indices : left )
          inst.left.push_back( from_one_based( m_size, indices ) );
        for ( auto const& indices : right )
          inst.right.push_back( from_one_based( m_size, indices ) );
        return inst;
      },
      py::arg( "m" ), py::arg( "left" ), py::arg( "right" ), py::arg( "padded" ) = false,
      "build an instance from 1-based element lists" );

  py::class_<ComplementCoverCircuit>( m, "ComplementCoverCircuit" )
      .def_readonly( "circuit", &ComplementCoverCircuit::circuit )
      .def_readonly( "pruned_gates", &ComplementCoverCircuit::pruned_gates )
      .def_readonly( "all_covering", &ComplementCoverCircuit::all_covering )
      .def_readonly( "output_rows", &ComplementCoverCircuit::output_rows );

  py::enum_<CountVia>( m, "CountVia" )
      .value( "direct", CountVia::direct )
      .value( "pipeline_sum", CountVia::pipeline_sum )
      .value( "pipeline_xor", CountVia::pipeline_xor );

  m.def( "parse_dimacs",
         []( std::string const& text ) { return parse_dimacs( text ); } );
  m.def( "split_to_cover", &split_to_cover, py::arg( "f" ), py::arg( "cap" ) = 30 );
  m.def( "cover_complement_circuit", &cover_complement_circuit );
  m.def( "count_covering_pairs", &count_covering_pairs, py::arg( "inst" ),
         py::arg( "via" ) );
  m.def( "count_sat", &count_sat, py::arg( "f" ), py::arg( "cap" ) = 30 );
  m.def( "parity_sat", &parity_sat, py::arg( "f" ), py::arg( "cap" ) = 30 );
}
