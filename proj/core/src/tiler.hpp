#pragma once

// Partial tilings of a rectangle or a torus by placed squares, with undo.
// Used by the census and the generic torus search.

#include <cstdint>
#include <vector>

#include "sqc/complex.hpp"
#include "sqc/development.hpp"

namespace sqc::detail {

  class Tiler {
   public:
    static constexpr std::int32_t empty = -1;

    // Rectangle of cells [i0, i0+w) x [j0, j0+h), or with wrap the torus
    // (Z/w) x (Z/h) at the origin.
    Tiler(SquareComplex const& c, int i0, int j0, int w, int h, bool wrap)
        : _c(c), _i0(i0), _j0(j0), _w(w), _h(h), _wrap(wrap) {
      _b.assign(static_cast<std::size_t>(w) * (wrap ? h : h + 1), empty);
      _l.assign(static_cast<std::size_t>(wrap ? w : w + 1) * h, empty);
      _cells.assign(static_cast<std::size_t>(w) * h, empty);
      for (SquareId s = 0; s < c.number_of_squares(); ++s) {
        for (int o = 0; o < orientation_count; ++o) {
          _frames.push_back(c.placed_frame({s, static_cast<Orientation>(o)}));
        }
      }
    }

    std::size_t placements() const noexcept {
      return _frames.size();
    }
    static Placement placement(std::size_t p) {
      return {static_cast<SquareId>(p / orientation_count),
              static_cast<Orientation>(p % orientation_count)};
    }

    // Records of what place() set, for undo().
    struct Mark {
      std::size_t trail;
    };

    Mark mark() const noexcept {
      return {_trail.size()};
    }

    void undo(Mark m) {
      while (_trail.size() > m.trail) {
        auto [which, idx] = _trail.back();
        _trail.pop_back();
        (which == 0 ? _b : which == 1 ? _l : _cells)[idx] = empty;
      }
    }

    // Places p at (i, j) if it agrees with every known side and keeps the
    // four germs at each corner distinct. On failure nothing changes.
    bool place(int i, int j, std::size_t p) {
      Frame const& f = _frames[p];
      auto         m = mark();
      if (!set(0, b_idx(i, j), f.bottom) || !set(0, b_idx(i, j + 1), f.top)
          || !set(1, l_idx(i, j), f.left) || !set(1, l_idx(i + 1, j), f.right)
          || !corners_ok(i, j)) {
        undo(m);
        return false;
      }
      _cells[c_idx(i, j)] = static_cast<std::int32_t>(p);
      _trail.push_back({2, c_idx(i, j)});
      return true;
    }

    bool placed(int i, int j) const {
      return _cells[c_idx(i, j)] != empty;
    }

    GridWindow window() const {
      GridWindow w(_i0, _j0, _w, _h);
      auto       edge = [](std::int32_t code) -> std::optional<DirectedEdge> {
        if (code == empty) {
          return std::nullopt;
        }
        return DirectedEdge::from_code(static_cast<std::uint32_t>(code));
      };
      for (int j = _j0; j <= _j0 + _h; ++j) {
        for (int i = _i0; i < _i0 + _w; ++i) {
          w.set_B(i, j, edge(_b[b_idx(i, j)]));
        }
      }
      for (int j = _j0; j < _j0 + _h; ++j) {
        for (int i = _i0; i <= _i0 + _w; ++i) {
          w.set_L(i, j, edge(_l[l_idx(i, j)]));
        }
        for (int i = _i0; i < _i0 + _w; ++i) {
          auto p = _cells[c_idx(i, j)];
          if (p != empty) {
            w.set_cell(i, j, placement(static_cast<std::size_t>(p)));
          }
        }
      }
      return w;
    }

   private:
    static int mod(int a, int m) {
      return ((a % m) + m) % m;
    }

    // Out-of-range indices map to npos (rectangle borders only).
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t b_idx(int i, int j) const {
      if (_wrap) {
        return static_cast<std::size_t>(mod(j, _h)) * _w + mod(i, _w);
      }
      if (i < _i0 || i >= _i0 + _w || j < _j0 || j > _j0 + _h) {
        return npos;
      }
      return static_cast<std::size_t>(j - _j0) * _w + (i - _i0);
    }
    std::size_t l_idx(int i, int j) const {
      if (_wrap) {
        return static_cast<std::size_t>(mod(j, _h)) * _w + mod(i, _w);
      }
      if (i < _i0 || i > _i0 + _w || j < _j0 || j >= _j0 + _h) {
        return npos;
      }
      return static_cast<std::size_t>(j - _j0) * (_w + 1) + (i - _i0);
    }
    std::size_t c_idx(int i, int j) const {
      if (_wrap) {
        return static_cast<std::size_t>(mod(j, _h)) * _w + mod(i, _w);
      }
      return static_cast<std::size_t>(j - _j0) * _w + (i - _i0);
    }

    std::int32_t get(int which, std::size_t idx) const {
      if (idx == npos) {
        return empty;
      }
      return (which == 0 ? _b : _l)[idx];
    }

    bool set(int which, std::size_t idx, DirectedEdge d) {
      auto& v    = which == 0 ? _b : _l;
      auto  code = static_cast<std::int32_t>(d.code());
      if (v[idx] == empty) {
        v[idx] = code;
        _trail.push_back({which, idx});
        return true;
      }
      return v[idx] == code;
    }

    bool vertex_ok(int x, int y) const {
      auto e  = get(0, b_idx(x, y));
      auto w  = get(0, b_idx(x - 1, y));
      auto n  = get(1, l_idx(x, y));
      auto s  = get(1, l_idx(x, y - 1));
      if (e != empty && w != empty && e == (w ^ 1)) {
        return false;
      }
      return !(n != empty && s != empty && n == (s ^ 1));
    }

    bool corners_ok(int i, int j) const {
      return vertex_ok(i, j) && vertex_ok(i + 1, j) && vertex_ok(i, j + 1)
             && vertex_ok(i + 1, j + 1);
    }

    SquareComplex const& _c;
    int                  _i0, _j0, _w, _h;
    bool                 _wrap;
    std::vector<Frame>   _frames;
    std::vector<std::int32_t> _b, _l, _cells;
    std::vector<std::pair<int, std::size_t>> _trail;
  };

}  // namespace sqc::detail
