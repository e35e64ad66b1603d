#pragma once

// Square completion in the universal cover: quadrants, rows, columns, plane
// windows and rectangle closure.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqc/complex.hpp"
#include "sqc/link.hpp"

namespace sqc {

  // A finite patch of a flat plane. Cell (i, j) is the unit square
  // [i, i+1] x [j, j+1]; B(i, j) labels the segment [i, i+1] x {j} (read west
  // to east) and L(i, j) the segment {i} x [j, j+1] (read south to north).
  // Entries are optional so that partially filled windows can be stored.
  class GridWindow {
   public:
    GridWindow() = default;
    GridWindow(int i0, int j0, int width, int height);

    int i0() const noexcept {
      return _i0;
    }
    int j0() const noexcept {
      return _j0;
    }
    int width() const noexcept {
      return _w;
    }
    int height() const noexcept {
      return _h;
    }

    bool has_cell(int i, int j) const noexcept {
      return i >= _i0 && i < _i0 + _w && j >= _j0 && j < _j0 + _h;
    }

    // i in [i0, i0+w), j in [j0, j0+h]
    std::optional<DirectedEdge> const& B(int i, int j) const {
      return _b.at(b_index(i, j));
    }
    // i in [i0, i0+w], j in [j0, j0+h)
    std::optional<DirectedEdge> const& L(int i, int j) const {
      return _l.at(l_index(i, j));
    }
    std::optional<Placement> const& cell(int i, int j) const {
      return _cells.at(c_index(i, j));
    }

    void set_B(int i, int j, std::optional<DirectedEdge> d) {
      _b.at(b_index(i, j)) = d;
    }
    void set_L(int i, int j, std::optional<DirectedEdge> d) {
      _l.at(l_index(i, j)) = d;
    }
    void set_cell(int i, int j, std::optional<Placement> p) {
      _cells.at(c_index(i, j)) = p;
    }

    // Horizontal word along row line j, vertical word along column line i.
    // Throws ValidationError if an entry is missing.
    Word row(int j) const;
    Word column(int i) const;
    Word south() const {
      return row(_j0);
    }
    Word north() const {
      return row(_j0 + _h);
    }
    Word west() const {
      return column(_i0);
    }
    Word east() const {
      return column(_i0 + _w);
    }

    bool complete() const noexcept;

    GridWindow sub(int i0, int j0, int width, int height) const;
    GridWindow translated(int di, int dj) const;

    // Copies every set entry of other into this window (coordinates must be
    // inside). Throws ValidationError on a disagreement.
    void paste(GridWindow const& other);

    bool operator==(GridWindow const&) const = default;

   private:
    std::size_t b_index(int i, int j) const;
    std::size_t l_index(int i, int j) const;
    std::size_t c_index(int i, int j) const;

    int                                      _i0 = 0;
    int                                      _j0 = 0;
    int                                      _w  = 0;
    int                                      _h  = 0;
    std::vector<std::optional<DirectedEdge>> _b;
    std::vector<std::optional<DirectedEdge>> _l;
    std::vector<std::optional<Placement>>    _cells;
  };

  // Checks the corner relation on every filled cell and vertex agreement at
  // every grid point. Returns a description of the first failure.
  std::optional<std::string> check_window(UniversalCover const& cover,
                                          GridWindow const&     w);

  enum class DevelopmentStatus : std::uint8_t {
    complete,
    stuck,
    budget_exhausted
  };

  std::string to_string(DevelopmentStatus s);

  struct DevelopmentResult {
    DevelopmentStatus status = DevelopmentStatus::complete;
    GridWindow        window;  // partially filled unless complete
    // Set when stuck: the cell and the corner key without an image.
    int          stuck_i = 0;
    int          stuck_j = 0;
    DirectedEdge missing_bottom;
    DirectedEdge missing_left;
    std::size_t  cells = 0;

    bool complete() const noexcept {
      return status == DevelopmentStatus::complete;
    }
  };

  struct DevelopOptions {
    std::size_t cell_budget = 100'000'000;
  };

  // Fills the |bottom| x |left| rectangle north-east of the common origin in
  // raster order (rows south to north, cells west to east). Throws
  // ValidationError on non-composable input.
  DevelopmentResult develop_quadrant(UniversalCover const& cover,
                                     Word const&           bottom,
                                     Word const&           left,
                                     DevelopOptions const& opt = {});

  // Column-major variant used to check order independence.
  DevelopmentResult develop_quadrant_columns(UniversalCover const& cover,
                                             Word const&           bottom,
                                             Word const&           left,
                                             DevelopOptions const& opt = {});

  struct Closure {
    bool              closed = false;
    Word              top;
    Word              right;
    DevelopmentResult development;
  };

  // Throws DevelopmentError when the rectangle cannot be developed.
  Closure rectangle_closes(UniversalCover const& cover,
                           Word const&           left,
                           Word const&           bottom,
                           DevelopOptions const& opt = {});

  // One row of squares over row_bottom with west side left. Throws
  // DevelopmentError naming the cell on a missing key.
  std::pair<Word, DirectedEdge> develop_row(UniversalCover const& cover,
                                            Word const&           row_bottom,
                                            DirectedEdge          left);
  // In-place variant for hot loops: row is overwritten with the top word.
  DirectedEdge develop_row_in_place(UniversalCover const& cover,
                                    Word&                 row,
                                    DirectedEdge          left);

  // Inverse of develop_row: recovers (row_bottom, left) from (row_top, right).
  std::pair<Word, DirectedEdge> develop_west(UniversalCover const& cover,
                                             Word const&           row_top,
                                             DirectedEdge          right);

  // One column of squares east of column_left with south side bottom:
  // returns (column_right, top).
  std::pair<Word, DirectedEdge> develop_column(UniversalCover const& cover,
                                               Word const&  column_left,
                                               DirectedEdge bottom);
  // Inverse of develop_column: recovers (column_left, bottom) from
  // (column_right, top).
  std::pair<Word, DirectedEdge> develop_column_west(
      UniversalCover const& cover,
      Word const&           column_right,
      DirectedEdge          top);

  enum class Quadrant : std::uint8_t { ne, nw, se, sw };

  std::string to_string(Quadrant q);

  // Mirror images about the vertical line i = 0 and the horizontal line
  // j = 0. Cell (i, j) goes to (-i-1, j) or (i, -j-1); edges crossing the
  // mirror are inverted; orientations are composed with the reflection.
  GridWindow reflect_horizontal(GridWindow const& w);
  GridWindow reflect_vertical(GridWindow const& w);

  // Develops a quadrant at the origin vertex from two outward rays: the
  // horizontal ray runs east (NE, SE) or west (NW, SW) away from the origin
  // and the vertical ray north or south. The result is in plane coordinates:
  // e.g. the NW quadrant occupies cells i < 0, j >= 0.
  DevelopmentResult develop_quadrant_in(UniversalCover const& cover,
                                        Quadrant              q,
                                        Word const&           horizontal,
                                        Word const&           vertical,
                                        DevelopOptions const& opt = {});

  // Four outward rays from one vertex.
  struct PlaneAxes {
    Word north;
    Word east;
    Word south;
    Word west;
  };

  // The axes of the periodic lines v^oo and h^oo through the base of two
  // loops, long enough for radius n.
  PlaneAxes periodic_axes(Word const& vertical,
                          Word const& horizontal,
                          std::size_t n);

  // Develops cells [-n, n) x [-n, n) around the common origin of the axes.
  DevelopmentResult develop_plane_window(UniversalCover const& cover,
                                         PlaneAxes const&      axes,
                                         int                   n,
                                         DevelopOptions const& opt = {});

  // Plain-text grid dump; see docs/formats.md.
  std::string dump_window(SquareComplex const& c, GridWindow const& w);
  GridWindow  parse_window(SquareComplex const& c, std::string_view text);

}  // namespace sqc
