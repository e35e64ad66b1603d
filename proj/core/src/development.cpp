#include "sqc/development.hpp"

#include <map>

#include "sqc/error.hpp"

namespace sqc {

  ////////////////////////////////////////////////////////////////////////
  // GridWindow
  ////////////////////////////////////////////////////////////////////////

  GridWindow::GridWindow(int i0, int j0, int width, int height)
      : _i0(i0), _j0(j0), _w(width), _h(height) {
    if (width < 0 || height < 0) {
      throw ValidationError("window dimensions must be non-negative");
    }
    _b.resize(static_cast<std::size_t>(width) * (height + 1));
    _l.resize(static_cast<std::size_t>(width + 1) * height);
    _cells.resize(static_cast<std::size_t>(width) * height);
  }

  std::size_t GridWindow::b_index(int i, int j) const {
    if (i < _i0 || i >= _i0 + _w || j < _j0 || j > _j0 + _h) {
      throw ValidationError("B(" + std::to_string(i) + ", " + std::to_string(j)
                            + ") is outside the window");
    }
    return static_cast<std::size_t>(j - _j0) * _w + (i - _i0);
  }

  std::size_t GridWindow::l_index(int i, int j) const {
    if (i < _i0 || i > _i0 + _w || j < _j0 || j >= _j0 + _h) {
      throw ValidationError("L(" + std::to_string(i) + ", " + std::to_string(j)
                            + ") is outside the window");
    }
    return static_cast<std::size_t>(j - _j0) * (_w + 1) + (i - _i0);
  }

  std::size_t GridWindow::c_index(int i, int j) const {
    if (!has_cell(i, j)) {
      throw ValidationError("cell (" + std::to_string(i) + ", "
                            + std::to_string(j) + ") is outside the window");
    }
    return static_cast<std::size_t>(j - _j0) * _w + (i - _i0);
  }

  Word GridWindow::row(int j) const {
    Word w;
    w.reserve(_w);
    for (int i = _i0; i < _i0 + _w; ++i) {
      auto const& d = B(i, j);
      if (!d) {
        throw ValidationError("row " + std::to_string(j) + " has a gap");
      }
      w.push_back(*d);
    }
    return w;
  }

  Word GridWindow::column(int i) const {
    Word w;
    w.reserve(_h);
    for (int j = _j0; j < _j0 + _h; ++j) {
      auto const& d = L(i, j);
      if (!d) {
        throw ValidationError("column " + std::to_string(i) + " has a gap");
      }
      w.push_back(*d);
    }
    return w;
  }

  bool GridWindow::complete() const noexcept {
    for (auto const& x : _b) {
      if (!x) {
        return false;
      }
    }
    for (auto const& x : _l) {
      if (!x) {
        return false;
      }
    }
    for (auto const& x : _cells) {
      if (!x) {
        return false;
      }
    }
    return true;
  }

  GridWindow GridWindow::sub(int i0, int j0, int width, int height) const {
    GridWindow out(i0, j0, width, height);
    for (int j = j0; j <= j0 + height; ++j) {
      for (int i = i0; i < i0 + width; ++i) {
        out.set_B(i, j, B(i, j));
      }
    }
    for (int j = j0; j < j0 + height; ++j) {
      for (int i = i0; i <= i0 + width; ++i) {
        out.set_L(i, j, L(i, j));
      }
      for (int i = i0; i < i0 + width; ++i) {
        out.set_cell(i, j, cell(i, j));
      }
    }
    return out;
  }

  GridWindow GridWindow::translated(int di, int dj) const {
    GridWindow out = *this;
    out._i0 += di;
    out._j0 += dj;
    return out;
  }

  void GridWindow::paste(GridWindow const& o) {
    auto merge = [](auto& slot, auto const& value, char const* what, int i,
                    int j) {
      if (!value) {
        return;
      }
      if (slot && *slot != *value) {
        throw ValidationError(std::string("windows disagree at ") + what + "("
                              + std::to_string(i) + ", " + std::to_string(j)
                              + ")");
      }
      slot = value;
    };
    for (int j = o._j0; j <= o._j0 + o._h; ++j) {
      for (int i = o._i0; i < o._i0 + o._w; ++i) {
        merge(_b.at(b_index(i, j)), o.B(i, j), "B", i, j);
      }
    }
    for (int j = o._j0; j < o._j0 + o._h; ++j) {
      for (int i = o._i0; i <= o._i0 + o._w; ++i) {
        merge(_l.at(l_index(i, j)), o.L(i, j), "L", i, j);
      }
      for (int i = o._i0; i < o._i0 + o._w; ++i) {
        merge(_cells.at(c_index(i, j)), o.cell(i, j), "cell", i, j);
      }
    }
  }

  std::optional<std::string> check_window(UniversalCover const& cover,
                                          GridWindow const&     w) {
    auto const& c = cover.complex();
    auto        at = [](int i, int j) {
      return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
    };
    for (int j = w.j0(); j < w.j0() + w.height(); ++j) {
      for (int i = w.i0(); i < w.i0() + w.width(); ++i) {
        auto const& p = w.cell(i, j);
        if (!p) {
          continue;
        }
        auto b = w.B(i, j), l = w.L(i, j), t = w.B(i, j + 1),
             r = w.L(i + 1, j);
        if (!b || !l || !t || !r) {
          return "cell " + at(i, j) + " has an unlabeled side";
        }
        auto e = cover.lookup(*b, *l);
        if (!e || e->placement != *p || e->top != *t || e->right != *r) {
          return "cell " + at(i, j) + " violates the corner relation";
        }
      }
    }
    std::map<std::pair<int, int>, VertexId> vertex;
    auto assign = [&](int i, int j, VertexId v) -> bool {
      auto [it, inserted] = vertex.emplace(std::pair{i, j}, v);
      return inserted || it->second == v;
    };
    for (int j = w.j0(); j <= w.j0() + w.height(); ++j) {
      for (int i = w.i0(); i < w.i0() + w.width(); ++i) {
        if (auto d = w.B(i, j);
            d
            && (!assign(i, j, c.origin(*d))
                || !assign(i + 1, j, c.terminus(*d)))) {
          return "grid point near B" + at(i, j) + " has two vertices";
        }
      }
    }
    for (int j = w.j0(); j < w.j0() + w.height(); ++j) {
      for (int i = w.i0(); i <= w.i0() + w.width(); ++i) {
        if (auto d = w.L(i, j);
            d
            && (!assign(i, j, c.origin(*d))
                || !assign(i, j + 1, c.terminus(*d)))) {
          return "grid point near L" + at(i, j) + " has two vertices";
        }
      }
    }
    return std::nullopt;
  }

  std::string to_string(DevelopmentStatus s) {
    switch (s) {
      case DevelopmentStatus::complete:
        return "complete";
      case DevelopmentStatus::stuck:
        return "stuck";
      default:
        return "budget_exhausted";
    }
  }

  std::string to_string(Quadrant q) {
    switch (q) {
      case Quadrant::ne:
        return "NE";
      case Quadrant::nw:
        return "NW";
      case Quadrant::se:
        return "SE";
      default:
        return "SW";
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Quadrants
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void require_axes(SquareComplex const& c,
                      Word const&          bottom,
                      Word const&          left) {
      if (!is_composable(c, bottom) || !is_composable(c, left)) {
        throw ValidationError("quadrant sides are not composable words");
      }
      if (!bottom.empty() && !left.empty()
          && c.origin(bottom.front()) != c.origin(left.front())) {
        throw ValidationError("quadrant sides start at different vertices");
      }
    }

    DevelopmentResult develop(UniversalCover const& cover,
                              Word const&           bottom,
                              Word const&           left,
                              DevelopOptions const& opt,
                              bool                  column_major) {
      require_axes(cover.complex(), bottom, left);
      int               w = static_cast<int>(bottom.size());
      int               h = static_cast<int>(left.size());
      DevelopmentResult r;
      r.window = GridWindow(0, 0, w, h);
      auto& win = r.window;
      for (int i = 0; i < w; ++i) {
        win.set_B(i, 0, bottom[i]);
      }
      for (int j = 0; j < h; ++j) {
        win.set_L(0, j, left[j]);
      }
      int outer = column_major ? w : h;
      int inner = column_major ? h : w;
      for (int a = 0; a < outer; ++a) {
        for (int b = 0; b < inner; ++b) {
          int i = column_major ? a : b;
          int j = column_major ? b : a;
          if (r.cells >= opt.cell_budget) {
            r.status = DevelopmentStatus::budget_exhausted;
            return r;
          }
          auto bb = *win.B(i, j);
          auto ll = *win.L(i, j);
          auto e  = cover.lookup(bb, ll);
          if (!e) {
            r.status         = DevelopmentStatus::stuck;
            r.stuck_i        = i;
            r.stuck_j        = j;
            r.missing_bottom = bb;
            r.missing_left   = ll;
            return r;
          }
          win.set_cell(i, j, e->placement);
          win.set_B(i, j + 1, e->top);
          win.set_L(i + 1, j, e->right);
          ++r.cells;
        }
      }
      return r;
    }

    std::string cell_name(std::size_t i) {
      return "cell " + std::to_string(i);
    }

  }  // namespace

  DevelopmentResult develop_quadrant(UniversalCover const& cover,
                                     Word const&           bottom,
                                     Word const&           left,
                                     DevelopOptions const& opt) {
    return develop(cover, bottom, left, opt, false);
  }

  DevelopmentResult develop_quadrant_columns(UniversalCover const& cover,
                                             Word const&           bottom,
                                             Word const&           left,
                                             DevelopOptions const& opt) {
    return develop(cover, bottom, left, opt, true);
  }

  Closure rectangle_closes(UniversalCover const& cover,
                           Word const&           left,
                           Word const&           bottom,
                           DevelopOptions const& opt) {
    Closure out;
    out.development = develop_quadrant(cover, bottom, left, opt);
    if (!out.development.complete()) {
      throw DevelopmentError("rectangle development "
                             + to_string(out.development.status) + " at ("
                             + std::to_string(out.development.stuck_i) + ", "
                             + std::to_string(out.development.stuck_j) + ")");
    }
    out.top    = out.development.window.north();
    out.right  = out.development.window.east();
    out.closed = out.top == bottom && out.right == left;
    return out;
  }

  DirectedEdge develop_row_in_place(UniversalCover const& cover,
                                    Word&                 row,
                                    DirectedEdge          left) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      auto e = cover.lookup(row[i], left);
      if (!e) {
        auto const& c = cover.complex();
        throw DevelopmentError(cell_name(i) + ": no square with corner ("
                               + c.format(row[i]) + ", " + c.format(left)
                               + ")");
      }
      row[i] = e->top;
      left   = e->right;
    }
    return left;
  }

  std::pair<Word, DirectedEdge> develop_row(UniversalCover const& cover,
                                            Word const&           row_bottom,
                                            DirectedEdge          left) {
    Word row  = row_bottom;
    auto last = develop_row_in_place(cover, row, left);
    return {std::move(row), last};
  }

  std::pair<Word, DirectedEdge> develop_west(UniversalCover const& cover,
                                             Word const&           row_top,
                                             DirectedEdge          right) {
    auto const& c = cover.complex();
    Word        row(row_top.size());
    for (std::size_t k = row_top.size(); k-- > 0;) {
      // The rotated copy of the cell has its SW corner at our NE corner.
      auto e = cover.lookup(row_top[k].inverse(), right.inverse());
      if (!e) {
        auto v = c.terminus(row_top[k]);
        throw DevelopmentError(
            cell_name(k) + ": no square with north-east corner ("
            + c.format(row_top[k]) + ", " + c.format(right) + ")"
            + (cover.complete_at(v) ? "" : "; vertex '" + c.vertex_name(v)
                                               + "' is not complete"));
      }
      row[k] = e->top.inverse();
      right  = e->right.inverse();
    }
    return {std::move(row), right};
  }

  std::pair<Word, DirectedEdge> develop_column(UniversalCover const& cover,
                                               Word const&  column_left,
                                               DirectedEdge bottom) {
    Word right(column_left.size());
    for (std::size_t j = 0; j < column_left.size(); ++j) {
      auto e = cover.lookup(bottom, column_left[j]);
      if (!e) {
        auto const& c = cover.complex();
        throw DevelopmentError(cell_name(j) + ": no square with corner ("
                               + c.format(bottom) + ", "
                               + c.format(column_left[j]) + ")");
      }
      right[j] = e->right;
      bottom   = e->top;
    }
    return {std::move(right), bottom};
  }

  std::pair<Word, DirectedEdge> develop_column_west(
      UniversalCover const& cover,
      Word const&           column_right,
      DirectedEdge          top) {
    Word left(column_right.size());
    for (std::size_t k = column_right.size(); k-- > 0;) {
      auto e = cover.lookup(top.inverse(), column_right[k].inverse());
      if (!e) {
        auto const& c = cover.complex();
        throw DevelopmentError(cell_name(k) + ": no square with north-east "
                               "corner ("
                               + c.format(top) + ", "
                               + c.format(column_right[k]) + ")");
      }
      left[k] = e->right.inverse();
      top     = e->top.inverse();
    }
    return {std::move(left), top};
  }

  ////////////////////////////////////////////////////////////////////////
  // Reflections
  ////////////////////////////////////////////////////////////////////////

  GridWindow reflect_horizontal(GridWindow const& w) {
    GridWindow out(-(w.i0() + w.width()), w.j0(), w.width(), w.height());
    for (int j = w.j0(); j <= w.j0() + w.height(); ++j) {
      for (int i = w.i0(); i < w.i0() + w.width(); ++i) {
        if (auto d = w.B(i, j)) {
          out.set_B(-i - 1, j, d->inverse());
        }
      }
    }
    for (int j = w.j0(); j < w.j0() + w.height(); ++j) {
      for (int i = w.i0(); i <= w.i0() + w.width(); ++i) {
        out.set_L(-i, j, w.L(i, j));
      }
      for (int i = w.i0(); i < w.i0() + w.width(); ++i) {
        if (auto p = w.cell(i, j)) {
          out.set_cell(-i - 1, j,
                       Placement{p->square, mirror_horizontal(p->orientation)});
        }
      }
    }
    return out;
  }

  GridWindow reflect_vertical(GridWindow const& w) {
    GridWindow out(w.i0(), -(w.j0() + w.height()), w.width(), w.height());
    for (int j = w.j0(); j <= w.j0() + w.height(); ++j) {
      for (int i = w.i0(); i < w.i0() + w.width(); ++i) {
        out.set_B(i, -j, w.B(i, j));
      }
    }
    for (int j = w.j0(); j < w.j0() + w.height(); ++j) {
      for (int i = w.i0(); i <= w.i0() + w.width(); ++i) {
        if (auto d = w.L(i, j)) {
          out.set_L(i, -j - 1, d->inverse());
        }
      }
      for (int i = w.i0(); i < w.i0() + w.width(); ++i) {
        if (auto p = w.cell(i, j)) {
          out.set_cell(i, -j - 1,
                       Placement{p->square, mirror_vertical(p->orientation)});
        }
      }
    }
    return out;
  }

  DevelopmentResult develop_quadrant_in(UniversalCover const& cover,
                                        Quadrant              q,
                                        Word const&           horizontal,
                                        Word const&           vertical,
                                        DevelopOptions const& opt) {
    // Reflecting a western or southern quadrant onto the north-east turns
    // the outward rays into ordinary quadrant sides.
    auto r = develop_quadrant(cover, horizontal, vertical, opt);
    bool west  = q == Quadrant::nw || q == Quadrant::sw;
    bool south = q == Quadrant::se || q == Quadrant::sw;
    if (west) {
      r.window  = reflect_horizontal(r.window);
      r.stuck_i = -r.stuck_i - 1;
    }
    if (south) {
      r.window  = reflect_vertical(r.window);
      r.stuck_j = -r.stuck_j - 1;
    }
    return r;
  }

  PlaneAxes periodic_axes(Word const& vertical,
                          Word const& horizontal,
                          std::size_t n) {
    if (vertical.empty() || horizontal.empty()) {
      throw ValidationError("periodic axes need non-empty loops");
    }
    auto cycle = [n](Word const& w) {
      Word out;
      out.reserve(n);
      for (std::size_t k = 0; k < n; ++k) {
        out.push_back(w[k % w.size()]);
      }
      return out;
    };
    return PlaneAxes{cycle(vertical),
                     cycle(horizontal),
                     cycle(inverse(vertical)),
                     cycle(inverse(horizontal))};
  }

  DevelopmentResult develop_plane_window(UniversalCover const& cover,
                                         PlaneAxes const&      axes,
                                         int                   n,
                                         DevelopOptions const& opt) {
    auto take = [n](Word const& w) {
      if (w.size() < static_cast<std::size_t>(n)) {
        throw ValidationError("plane axis shorter than the radius");
      }
      return Word(w.begin(), w.begin() + n);
    };
    Word north = take(axes.north), east = take(axes.east),
         south = take(axes.south), west = take(axes.west);
    auto const& c = cover.complex();
    if (n > 0) {
      VertexId v = c.origin(north.front());
      for (auto const* w : {&east, &south, &west}) {
        if (c.origin(w->front()) != v) {
          throw ValidationError("plane axes start at different vertices");
        }
      }
    }
    DevelopmentResult out;
    out.window = GridWindow(-n, -n, 2 * n, 2 * n);
    DevelopOptions budget = opt;
    struct Part {
      Quadrant    q;
      Word const* h;
      Word const* v;
    };
    for (Part p : {Part{Quadrant::ne, &east, &north},
                   Part{Quadrant::nw, &west, &north},
                   Part{Quadrant::se, &east, &south},
                   Part{Quadrant::sw, &west, &south}}) {
      auto r = develop_quadrant_in(cover, p.q, *p.h, *p.v, budget);
      out.window.paste(r.window);
      out.cells += r.cells;
      budget.cell_budget -= std::min(budget.cell_budget, r.cells);
      if (!r.complete()) {
        out.status         = r.status;
        out.stuck_i        = r.stuck_i;
        out.stuck_j        = r.stuck_j;
        out.missing_bottom = r.missing_bottom;
        out.missing_left   = r.missing_left;
        return out;
      }
    }
    return out;
  }

}  // namespace sqc
