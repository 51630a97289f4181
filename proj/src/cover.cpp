#include "lincirc/cover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lincirc
{

namespace
{

constexpr uint32_t max_rank_dim = 16u;

/* The 1-entries of the matrix, numbered row-major; coverage states are bit
 * vectors over this numbering. */
struct CellSpace
{
  explicit CellSpace( BooleanMatrix const& a )
      : index( a.n_rows() * a.n_cols(), -1 )
  {
    for ( uint32_t i = 0; i < a.n_rows(); ++i )
    {
      a.row( i ).for_each_set( [&]( std::size_t j ) {
        index[i * a.n_cols() + j] = int32_t( cells.size() );
        cells.emplace_back( i, uint32_t( j ) );
      } );
    }
  }

  std::vector<std::pair<uint32_t, uint32_t>> cells;
  std::vector<int32_t> index;
};

BitVec rectangle_cells( CellSpace const& space, BooleanMatrix const& a,
                        BitVec const& rows, BitVec const& cols )
{
  BitVec cov( space.cells.size() );
  rows.for_each_set( [&]( std::size_t i ) {
    cols.for_each_set( [&]( std::size_t j ) {
      cov.set( uint32_t( space.index[i * a.n_cols() + j] ) );
    } );
  } );
  return cov;
}

/* Greedy maximum set of pairwise incompatible uncovered cells: any rectangle
 * of a cover contains at most one of them, so the size bounds the number of
 * rectangles still needed.  Two cells are compatible when both cross entries
 * are 1 (and, for disjoint covers, also still uncovered). */
uint32_t fooling_bound( CellSpace const& space, BooleanMatrix const& a,
                        BitVec const& covered, bool disjoint )
{
  std::vector<uint32_t> chosen;
  for ( uint32_t c = 0; c < space.cells.size(); ++c )
  {
    if ( covered.test( c ) )
      continue;
    auto [i1, j1] = space.cells[c];
    bool clash = false;
    for ( auto other : chosen )
    {
      auto [i2, j2] = space.cells[other];
      bool compatible = a.test( i1, j2 ) && a.test( i2, j1 );
      if ( compatible && disjoint )
      {
        compatible = !covered.test( uint32_t( space.index[i1 * a.n_cols() + j2] ) ) &&
                     !covered.test( uint32_t( space.index[i2 * a.n_cols() + j1] ) );
      }
      if ( compatible )
      {
        clash = true;
        break;
      }
    }
    if ( !clash )
      chosen.push_back( c );
  }
  return uint32_t( chosen.size() );
}

/* All maximal all-ones rectangles.  Every column set of a maximal rectangle
 * is the support intersection of some row subset, so enumerating row subsets
 * and closing back over rows finds each one; the coverage sets form an
 * antichain, hence no further domination filtering is needed. */
std::vector<Rectangle> maximal_rectangles( BooleanMatrix const& a )
{
  std::vector<Rectangle> rects;
  std::set<std::vector<uint64_t>> seen;
  uint32_t const n = a.n_rows();
  for ( uint32_t mask = 1; mask < ( 1u << n ); ++mask )
  {
    BitVec cols( a.n_cols() );
    bool first = true;
    for ( uint32_t i = 0; i < n; ++i )
    {
      if ( !( ( mask >> i ) & 1u ) )
        continue;
      if ( first )
      {
        cols = a.row( i );
        first = false;
      }
      else
      {
        cols &= a.row( i );
      }
    }
    if ( cols.none() || !seen.insert( cols.words() ).second )
      continue;
    BitVec rows( n );
    for ( uint32_t i = 0; i < n; ++i )
    {
      if ( cols.is_subset_of( a.row( i ) ) )
        rows.set( i );
    }
    rects.push_back( Rectangle{ rows, cols } );
  }
  return rects;
}

/* Minimum set cover over the maximal rectangles, branching on the uncovered
 * cell with the fewest remaining candidates. */
struct OverlapSearch
{
  CellSpace const& space;
  BooleanMatrix const& a;
  std::vector<Rectangle> rects;
  std::vector<BitVec> rect_cov;
  uint32_t bound; /* strictly better than this, or give up */
  std::vector<uint32_t> current;
  std::vector<uint32_t> best_pick;
  uint32_t best = 0;

  OverlapSearch( CellSpace const& space_, BooleanMatrix const& a_, uint32_t budget )
      : space( space_ ), a( a_ ), rects( maximal_rectangles( a_ ) ), bound( budget + 1 )
  {
    for ( auto const& r : rects )
      rect_cov.push_back( rectangle_cells( space, a, r.rows, r.cols ) );
  }

  void seed_greedy()
  {
    BitVec covered( space.cells.size() );
    std::vector<uint32_t> pick;
    while ( covered.count() < space.cells.size() )
    {
      uint32_t best_r = 0, best_gain = 0;
      for ( uint32_t r = 0; r < rects.size(); ++r )
      {
        BitVec gain = rect_cov[r];
        gain &= covered;
        uint32_t g = uint32_t( rect_cov[r].count() - gain.count() );
        if ( g > best_gain )
        {
          best_gain = g;
          best_r = r;
        }
      }
      pick.push_back( best_r );
      covered |= rect_cov[best_r];
    }
    if ( pick.size() < bound )
    {
      bound = uint32_t( pick.size() );
      best = bound;
      best_pick = pick;
    }
  }

  void run( BitVec& covered )
  {
    if ( covered.count() == space.cells.size() )
    {
      best = uint32_t( current.size() );
      best_pick = current;
      bound = best;
      return;
    }
    if ( current.size() + fooling_bound( space, a, covered, false ) >= bound )
      return;

    /* cell with the fewest covering rectangles */
    uint32_t branch_cell = 0, fewest = uint32_t( rects.size() ) + 1;
    for ( uint32_t c = 0; c < space.cells.size(); ++c )
    {
      if ( covered.test( c ) )
        continue;
      uint32_t k = 0;
      for ( auto const& cov : rect_cov )
        k += cov.test( c );
      if ( k < fewest )
      {
        fewest = k;
        branch_cell = c;
      }
    }

    std::vector<uint32_t> cand;
    for ( uint32_t r = 0; r < rects.size(); ++r )
      if ( rect_cov[r].test( branch_cell ) )
        cand.push_back( r );
    std::sort( cand.begin(), cand.end(), [&]( uint32_t x, uint32_t y ) {
      BitVec gx = rect_cov[x], gy = rect_cov[y];
      gx &= covered;
      gy &= covered;
      return rect_cov[x].count() - gx.count() > rect_cov[y].count() - gy.count();
    } );

    for ( auto r : cand )
    {
      BitVec saved = covered;
      covered |= rect_cov[r];
      current.push_back( r );
      run( covered );
      current.pop_back();
      covered = saved;
      if ( current.size() + 1 >= bound )
        break; /* even one more rectangle cannot beat the bound */
    }
  }
};

/* Minimum partition into rectangles.  Branch on the first uncovered cell in
 * row-major order: every partition assigns it to exactly one rectangle, so
 * enumerating all uncovered all-ones rectangles through that cell visits each
 * partition once. */
struct DisjointSearch
{
  CellSpace const& space;
  BooleanMatrix const& a;
  uint32_t bound;
  std::vector<Rectangle> current;
  std::vector<Rectangle> best_pick;
  uint32_t best = 0;
  bool found = false;

  DisjointSearch( CellSpace const& space_, BooleanMatrix const& a_, uint32_t budget )
      : space( space_ ), a( a_ ), bound( budget + 1 )
  {
  }

  void seed_greedy( BitVec covered )
  {
    /* one maximal row-interval rectangle per visit of the first free cell */
    std::vector<Rectangle> pick;
    for ( uint32_t c = 0; c < space.cells.size(); ++c )
    {
      if ( covered.test( c ) )
        continue;
      auto [i, j] = space.cells[c];
      (void)j;
      BitVec rows( a.n_rows() ), cols( a.n_cols() );
      rows.set( i );
      a.row( i ).for_each_set( [&]( std::size_t col ) {
        if ( !covered.test( uint32_t( space.index[i * a.n_cols() + col] ) ) )
          cols.set( col );
      } );
      covered |= rectangle_cells( space, a, rows, cols );
      pick.push_back( Rectangle{ rows, cols } );
    }
    if ( pick.size() < bound )
    {
      bound = uint32_t( pick.size() );
      best = bound;
      best_pick = pick;
      found = true;
    }
  }

  void run( BitVec& covered )
  {
    if ( covered.count() == space.cells.size() )
    {
      best = uint32_t( current.size() );
      best_pick = current;
      bound = best;
      found = true;
      return;
    }
    if ( current.size() + 1 >= bound )
      return;
    if ( current.size() + fooling_bound( space, a, covered, true ) >= bound )
      return;

    uint32_t branch_cell = 0;
    while ( covered.test( branch_cell ) )
      ++branch_cell;
    auto [bi, bj] = space.cells[branch_cell];

    /* rows that could join a rectangle through (bi, bj) */
    std::vector<uint32_t> row_cand;
    std::vector<BitVec> row_free;
    BitVec free_bi( a.n_cols() );
    for ( uint32_t r = 0; r < a.n_rows(); ++r )
    {
      if ( r == bi || !a.test( r, bj ) ||
           covered.test( uint32_t( space.index[r * a.n_cols() + bj] ) ) )
        continue;
      row_cand.push_back( r );
    }
    auto free_cols_of = [&]( uint32_t r ) {
      BitVec f( a.n_cols() );
      a.row( r ).for_each_set( [&]( std::size_t col ) {
        if ( !covered.test( uint32_t( space.index[r * a.n_cols() + col] ) ) )
          f.set( col );
      } );
      return f;
    };
    free_bi = free_cols_of( bi );
    for ( auto r : row_cand )
      row_free.push_back( free_cols_of( r ) );

    std::vector<std::pair<Rectangle, BitVec>> cand;
    uint32_t const k = uint32_t( row_cand.size() );
    for ( uint32_t rmask = 0; rmask < ( 1u << k ); ++rmask )
    {
      BitVec rows( a.n_rows() );
      rows.set( bi );
      BitVec allowed = free_bi;
      for ( uint32_t r = 0; r < k; ++r )
      {
        if ( ( rmask >> r ) & 1u )
        {
          rows.set( row_cand[r] );
          allowed &= row_free[r];
        }
      }
      /* bj stays allowed by construction; enumerate column subsets around it */
      std::vector<uint32_t> col_opts;
      allowed.for_each_set( [&]( std::size_t col ) {
        if ( uint32_t( col ) != bj )
          col_opts.push_back( uint32_t( col ) );
      } );
      uint32_t const kc = uint32_t( col_opts.size() );
      for ( uint32_t cmask = 0; cmask < ( 1u << kc ); ++cmask )
      {
        BitVec cols( a.n_cols() );
        cols.set( bj );
        for ( uint32_t c = 0; c < kc; ++c )
          if ( ( cmask >> c ) & 1u )
            cols.set( col_opts[c] );
        cand.emplace_back( Rectangle{ rows, cols },
                           rectangle_cells( space, a, rows, cols ) );
      }
    }
    std::sort( cand.begin(), cand.end(), []( auto const& x, auto const& y ) {
      return x.second.count() > y.second.count();
    } );

    for ( auto const& [rect, cov] : cand )
    {
      BitVec saved = covered;
      covered |= cov;
      current.push_back( rect );
      run( covered );
      current.pop_back();
      covered = saved;
    }
  }
};

} // namespace

RankResult rank_cover( BooleanMatrix const& a, bool disjoint, uint32_t budget )
{
  if ( a.n_rows() > max_rank_dim || a.n_cols() > max_rank_dim )
    throw std::invalid_argument( "rank_cover: matrix larger than 16 x 16" );

  RankResult result;
  result.budget = budget;
  result.cover.disjoint = disjoint;

  CellSpace space( a );
  if ( space.cells.empty() )
  {
    result.resolved = true; /* the empty cover */
    return result;
  }
  if ( budget == 0 )
    return result;

  if ( disjoint )
  {
    DisjointSearch search( space, a, budget );
    BitVec covered( space.cells.size() );
    search.seed_greedy( covered );
    search.run( covered );
    if ( search.found && search.best <= budget )
    {
      result.resolved = true;
      result.rank = search.best;
      result.cover.rectangles = search.best_pick;
    }
  }
  else
  {
    OverlapSearch search( space, a, budget );
    search.seed_greedy();
    BitVec covered( space.cells.size() );
    search.run( covered );
    if ( search.best != 0 && search.best <= budget )
    {
      result.resolved = true;
      result.rank = search.best;
      for ( auto r : search.best_pick )
        result.cover.rectangles.push_back( search.rects[r] );
    }
  }
  return result;
}

RectangleCover complement_identity_cover( uint32_t n )
{
  if ( n < 2 )
    throw std::invalid_argument( "complement_identity_cover: n must be at least 2" );
  uint32_t bits = 0;
  while ( ( 1u << bits ) < n )
    ++bits;

  RectangleCover cover;
  for ( uint32_t p = 0; p < bits; ++p )
  {
    for ( uint32_t v = 0; v < 2; ++v )
    {
      Rectangle rect{ BitVec( n ), BitVec( n ) };
      for ( uint32_t idx = 0; idx < n; ++idx )
      {
        if ( ( ( idx >> p ) & 1u ) == v )
          rect.rows.set( idx );
        else
          rect.cols.set( idx );
      }
      cover.rectangles.push_back( rect );
    }
  }
  return cover;
}

bool cover_matches( BooleanMatrix const& a, RectangleCover const& cover )
{
  BooleanMatrix covered( a.n_rows(), a.n_cols() );
  for ( auto const& rect : cover.rectangles )
  {
    if ( rect.rows.size() != a.n_rows() || rect.cols.size() != a.n_cols() )
      return false;
    if ( rect.rows.none() || rect.cols.none() )
      return false;
    bool ok = true;
    rect.rows.for_each_set( [&]( std::size_t i ) {
      rect.cols.for_each_set( [&]( std::size_t j ) {
        if ( !a.test( uint32_t( i ), uint32_t( j ) ) )
          ok = false;
        else if ( cover.disjoint && covered.test( uint32_t( i ), uint32_t( j ) ) )
          ok = false;
        covered.set( uint32_t( i ), uint32_t( j ) );
      } );
    } );
    if ( !ok )
      return false;
  }
  return covered == a;
}

std::pair<BooleanMatrix, BooleanMatrix> cover_factors( RectangleCover const& cover,
                                                       uint32_t n_rows, uint32_t n_cols )
{
  if ( cover.rectangles.empty() )
    throw std::invalid_argument( "cover_factors: empty cover has no factorisation" );
  uint32_t const r = uint32_t( cover.rectangles.size() );
  BooleanMatrix p( n_rows, r ), q( n_cols, r );
  for ( uint32_t k = 0; k < r; ++k )
  {
    cover.rectangles[k].rows.for_each_set( [&]( std::size_t i ) { p.set( uint32_t( i ), k ); } );
    cover.rectangles[k].cols.for_each_set( [&]( std::size_t j ) { q.set( uint32_t( j ), k ); } );
  }
  return { p, q };
}

} // namespace lincirc
