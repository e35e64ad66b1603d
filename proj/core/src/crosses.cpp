#include <algorithm>
#include <array>

#include "sqc/error.hpp"
#include "sqc/zcomplex.hpp"

namespace sqc {

  std::string to_string(Side s) {
    switch (s) {
      case Side::north:
        return "north";
      case Side::east:
        return "east";
      case Side::south:
        return "south";
      default:
        return "west";
    }
  }

  Placement ArmSpec::cell(std::size_t k) const {
    if (k == 0 || cycle.empty()) {
      throw ValidationError("arm cells are numbered from 1");
    }
    if (k <= prefix.size()) {
      return prefix[k - 1];
    }
    return cycle[(k - 1 - prefix.size()) % cycle.size()];
  }

  ArmSpec const& CrossSpec::arm(Side s) const {
    switch (s) {
      case Side::north:
        return north;
      case Side::east:
        return east;
      case Side::south:
        return south;
      default:
        return west;
    }
  }

  namespace {

    // Sides of a placed frame by direction.
    DirectedEdge side_of(Frame const& f, Side s) {
      switch (s) {
        case Side::north:
          return f.top;
        case Side::east:
          return f.right;
        case Side::south:
          return f.bottom;
        default:
          return f.left;
      }
    }

    Side opposite(Side s) {
      return static_cast<Side>((static_cast<int>(s) + 2) % 4);
    }

    // The two sides of an arm cell that run along the arm.
    std::array<Side, 2> flanks(Side s) {
      if (s == Side::north || s == Side::south) {
        return {Side::west, Side::east};
      }
      return {Side::south, Side::north};
    }

    using ArmState = std::array<std::uint32_t, 3>;

    ArmState state_of(Frame const& f, Side dir) {
      auto fl = flanks(dir);
      return {side_of(f, dir).code(), side_of(f, fl[0]).code(),
              side_of(f, fl[1]).code()};
    }

    // next may follow prev in an arm heading in direction dir.
    bool follows(Frame const& prev, Frame const& next, Side dir) {
      if (side_of(next, opposite(dir)) != side_of(prev, dir)) {
        return false;
      }
      for (Side fl : flanks(dir)) {
        if (side_of(next, fl) == side_of(prev, fl).inverse()) {
          return false;
        }
      }
      return true;
    }

    class ArmSearch {
     public:
      ArmSearch(SquareComplex const& c, SquareId s, Side dir,
                CrossOptions const& opt)
          : _c(c), _s(s), _dir(dir), _opt(opt) {
        for (SquareId q = 0; q < c.number_of_squares(); ++q) {
          if (opt.base_once && q == s) {
            continue;
          }
          for (int o = 0; o < orientation_count; ++o) {
            _candidates.push_back({q, static_cast<Orientation>(o)});
          }
        }
      }

      std::vector<ArmSpec> run() {
        _arms.clear();
        dfs(_c.placed_frame({_s, Orientation::identity}));
        std::sort(_arms.begin(), _arms.end());
        return _arms;
      }

     private:
      void dfs(Frame const& prev) {
        for (auto p : _candidates) {
          Frame f = _c.placed_frame(p);
          if (!follows(prev, f, _dir)) {
            continue;
          }
          auto st = state_of(f, _dir);
          _path.push_back(p);
          auto hit = std::find(_states.begin(), _states.end(), st);
          if (hit != _states.end()) {
            emit(static_cast<std::size_t>(hit - _states.begin()));
          } else {
            if (_path.size() > _opt.max_arm_depth) {
              throw BudgetExhausted(to_string(_dir) + " arm did not close "
                                    "within the depth bound");
            }
            _states.push_back(st);
            dfs(f);
            _states.pop_back();
          }
          _path.pop_back();
        }
      }

      // The state after path[j] recurs after the last cell.
      void emit(std::size_t j) {
        ArmSpec a;
        a.prefix.assign(_path.begin(), _path.begin() + j + 1);
        a.cycle.assign(_path.begin() + j + 1, _path.end());
        while (!a.prefix.empty() && a.prefix.back() == a.cycle.back()) {
          std::rotate(a.cycle.rbegin(), a.cycle.rbegin() + 1, a.cycle.rend());
          a.prefix.pop_back();
        }
        _arms.push_back(std::move(a));
      }

      SquareComplex const&   _c;
      SquareId               _s;
      Side                   _dir;
      CrossOptions const&    _opt;
      std::vector<Placement> _candidates;
      std::vector<Placement> _path;
      std::vector<ArmState>  _states;
      std::vector<ArmSpec>   _arms;
    };

    // Germs of the four grid directions at a vertex must be distinct.
    bool corner_ok(DirectedEdge east,
                   DirectedEdge north,
                   DirectedEdge west_in,
                   DirectedEdge south_in) {
      return east != west_in.inverse() && north != south_in.inverse();
    }

  }  // namespace

  std::vector<CrossSpec> enumerate_crosses(UniversalCover const& z,
                                           SquareId              s,
                                           CrossOptions const&   opt) {
    auto const& c = z.complex();
    if (s >= c.number_of_squares()) {
      throw ValidationError("unknown base square");
    }
    std::array<std::vector<ArmSpec>, 4> arms;
    for (int d = 0; d < 4; ++d) {
      arms[d] = ArmSearch(c, s, static_cast<Side>(d), opt).run();
    }
    Frame const            f = c.placed_frame({s, Orientation::identity});
    std::vector<CrossSpec> out;
    for (auto const& n : arms[0]) {
      for (auto const& e : arms[1]) {
        for (auto const& so : arms[2]) {
          for (auto const& w : arms[3]) {
            Frame fn = c.placed_frame(n.cell(1)), fe = c.placed_frame(e.cell(1)),
                  fs = c.placed_frame(so.cell(1)), fw = c.placed_frame(w.cell(1));
            bool ok = corner_ok(fe.top, fn.right, f.top, f.right)
                      && corner_ok(f.top, fn.left, fw.top, f.left)
                      && corner_ok(fe.bottom, f.right, f.bottom, fs.right)
                      && corner_ok(f.bottom, f.left, fw.bottom, fs.left);
            if (ok) {
              out.push_back(CrossSpec{{s, Orientation::identity}, n, e, so, w});
            }
          }
        }
      }
    }
    return out;
  }

  Word arm_side_loop(SquareComplex const& c,
                     ArmSpec const&       arm,
                     Side                 arm_side,
                     bool                 right_or_top) {
    auto fl   = flanks(arm_side);
    Side side = right_or_top ? fl[1] : fl[0];
    Word w;
    for (auto p : arm.cycle) {
      w.push_back(side_of(c.placed_frame(p), side));
    }
    if (arm_side == Side::south || arm_side == Side::west) {
      // Cells run away from the base square: read the loop outward.
      w = inverse(w);
    }
    return w;
  }

  AxisPair ne_axes(SquareComplex const& c, CrossSpec const& cross) {
    return AxisPair{arm_side_loop(c, cross.north, Side::north, true),
                    arm_side_loop(c, cross.east, Side::east, true)};
  }

  ExtendedCross extend_cross(UniversalCover const& z,
                             CrossSpec const&      cross,
                             int                   n,
                             DevelopOptions const& opt) {
    auto const&   c = z.complex();
    ExtendedCross out;
    auto&         r   = out.development;
    r.window          = GridWindow(-n, -n, 2 * n + 1, 2 * n + 1);
    auto&     win     = r.window;
    auto      put     = [&](int i, int j, Placement p) {
      Frame f = c.placed_frame(p);
      GridWindow one(i, j, 1, 1);
      one.set_cell(i, j, p);
      one.set_B(i, j, f.bottom);
      one.set_B(i, j + 1, f.top);
      one.set_L(i, j, f.left);
      one.set_L(i + 1, j, f.right);
      win.paste(one);
    };
    put(0, 0, cross.base);
    Word ne_h, ne_v, nw_h, nw_v, se_h, se_v, sw_h, sw_v;
    for (int k = 1; k <= n; ++k) {
      auto pn = cross.north.cell(k), pe = cross.east.cell(k),
           ps = cross.south.cell(k), pw = cross.west.cell(k);
      put(0, k, pn);
      put(k, 0, pe);
      put(0, -k, ps);
      put(-k, 0, pw);
      Frame fn = c.placed_frame(pn), fe = c.placed_frame(pe),
            fs = c.placed_frame(ps), fw = c.placed_frame(pw);
      ne_h.push_back(fe.top);
      ne_v.push_back(fn.right);
      nw_h.push_back(fw.top.inverse());
      nw_v.push_back(fn.left);
      se_h.push_back(fe.bottom);
      se_v.push_back(fs.right.inverse());
      sw_h.push_back(fw.bottom.inverse());
      sw_v.push_back(fs.left.inverse());
    }
    struct Part {
      Quadrant    q;
      Word const* h;
      Word const* v;
      int         di, dj;
    };
    DevelopOptions budget = opt;
    for (Part p : {Part{Quadrant::ne, &ne_h, &ne_v, 1, 1},
                   Part{Quadrant::nw, &nw_h, &nw_v, 0, 1},
                   Part{Quadrant::se, &se_h, &se_v, 1, 0},
                   Part{Quadrant::sw, &sw_h, &sw_v, 0, 0}}) {
      auto q = develop_quadrant_in(z, p.q, *p.h, *p.v, budget);
      win.paste(q.window.translated(p.di, p.dj));
      r.cells += q.cells;
      budget.cell_budget -= std::min(budget.cell_budget, q.cells);
      if (!q.complete()) {
        r.status         = q.status;
        r.stuck_i        = q.stuck_i + p.di;
        r.stuck_j        = q.stuck_j + p.dj;
        r.missing_bottom = q.missing_bottom;
        r.missing_left   = q.missing_left;
        return out;
      }
    }
    out.unique = true;
    return out;
  }

}  // namespace sqc
