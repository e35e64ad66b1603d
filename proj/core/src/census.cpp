#include <algorithm>
#include <atomic>
#include <mutex>

#include "sqc/error.hpp"
#include "sqc/parallel.hpp"
#include "sqc/zcomplex.hpp"
#include "tiler.hpp"

namespace sqc {

  bool PlaneCensusReport::all_matched() const {
    return std::none_of(matches.begin(), matches.end(),
                        [](int m) { return m < 0; });
  }

  namespace {

    // Ring by ring around the centre: the four arm cells first, then each
    // quadrant's new cells in an order where both inward neighbours of a
    // cell are already placed.
    std::vector<std::pair<int, int>> ring_order(int n) {
      std::vector<std::pair<int, int>> out;
      for (int r = 1; r <= n; ++r) {
        out.insert(out.end(), {{0, r}, {r, 0}, {0, -r}, {-r, 0}});
        for (int sx : {1, -1}) {
          for (int sy : {1, -1}) {
            for (int j = 1; j < r; ++j) {
              out.emplace_back(sx * r, sy * j);
            }
            for (int i = 1; i <= r; ++i) {
              out.emplace_back(sx * i, sy * r);
            }
          }
        }
      }
      return out;
    }

    struct Census {
      SquareComplex const&                    c;
      std::vector<std::pair<int, int>> const& order;
      std::uint64_t                           budget;
      std::size_t                             skip;
      std::atomic<std::uint64_t>&             nodes;
      std::vector<GridWindow>                 found;

      void run(detail::Tiler& t, std::size_t k) {
        if (k == order.size()) {
          found.push_back(t.window());
          return;
        }
        auto [i, j] = order[k];
        for (std::size_t p = 0; p < t.placements(); ++p) {
          if (p / orientation_count == skip) {
            continue;
          }
          if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget) {
            throw BudgetExhausted("census exhausted its node budget");
          }
          auto m = t.mark();
          if (t.place(i, j, p)) {
            run(t, k + 1);
            t.undo(m);
          }
        }
      }
    };

  }  // namespace

  PlaneCensusReport bounded_plane_census(UniversalCover const&         z,
                                         SquareId                      s,
                                         int                           radius,
                                         std::vector<CrossSpec> const& crosses,
                                         CensusOptions const&          opt) {
    if (radius < 0) {
      throw ValidationError("census radius must be non-negative");
    }
    auto const&       c = z.complex();
    PlaneCensusReport r;
    r.radius   = radius;
    int  side  = 2 * radius + 1;
    auto order = ring_order(radius);

    detail::Tiler root(c, -radius, -radius, side, side, false);
    if (!root.place(0, 0, static_cast<std::size_t>(s) * orientation_count)) {
      throw ValidationError("base square cannot be placed");
    }
    std::size_t skip = opt.base_once ? static_cast<std::size_t>(s)
                                     : static_cast<std::size_t>(-1);
    std::atomic<std::uint64_t> nodes{0};
    std::vector<std::vector<GridWindow>> branches;
    if (order.empty()) {
      branches.push_back({root.window()});
    } else {
      // Top-level branches: the choices for the first arm cell.
      std::vector<std::size_t> first;
      auto [i, j] = order.front();
      for (std::size_t p = 0; p < root.placements(); ++p) {
        if (p / orientation_count == skip) {
          continue;
        }
        auto m = root.mark();
        if (root.place(i, j, p)) {
          first.push_back(p);
          root.undo(m);
        }
      }
      branches.resize(first.size());
      try {
        parallel_for(first.size(), opt.threads, [&](std::size_t b) {
          detail::Tiler t = root;
          t.place(i, j, first[b]);
          Census census{c, order, opt.node_budget, skip, nodes, {}};
          census.run(t, 1);
          branches[b] = std::move(census.found);
        });
      } catch (BudgetExhausted const&) {
        r.budget_exhausted = true;
      }
    }
    r.nodes = nodes.load();
    for (auto& b : branches) {
      for (auto& w : b) {
        r.windows.push_back(std::move(w));
      }
    }
    std::vector<GridWindow> planes;
    for (auto const& cross : crosses) {
      auto e = extend_cross(z, cross, radius);
      planes.push_back(e.development.complete() ? e.development.window
                                                : GridWindow{});
    }
    for (auto const& w : r.windows) {
      auto it = std::find(planes.begin(), planes.end(), w);
      r.matches.push_back(it == planes.end()
                              ? -1
                              : static_cast<int>(it - planes.begin()));
    }
    return r;
  }

  PeriodicVerdict is_window_in_periodic_plane(UniversalCover const& c,
                                              GridWindow const&     window,
                                              int                   bound,
                                              std::string const&    base_square,
                                              unsigned              threads) {
    PeriodicVerdict v;
    if (c.complete()) {
      v.certificate = periodize_window(c, window);
      return v;
    }
    auto s = c.complex().find_square(base_square);
    bool contains = false;
    if (s) {
      for (int j = window.j0(); j < window.j0() + window.height(); ++j) {
        for (int i = window.i0(); i < window.i0() + window.width(); ++i) {
          auto const& p = window.cell(i, j);
          contains      = contains || (p && p->square == *s);
        }
      }
    }
    if (!contains) {
      throw ValidationError(
          "unsupported: the complex is not complete and the window does not "
          "contain the base square");
    }
    v.refutation = certify_no_periodic_plane(c, *s, bound, threads);
    return v;
  }

}  // namespace sqc
