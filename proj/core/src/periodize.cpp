#include "sqc/periodize.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <unordered_map>

#include "sqc/error.hpp"

namespace sqc {

  ////////////////////////////////////////////////////////////////////////
  // Holonomy
  ////////////////////////////////////////////////////////////////////////

  DirectedEdge HolonomyPermutation::operator()(DirectedEdge h) const {
    auto it = std::lower_bound(germs.begin(), germs.end(), h);
    if (it == germs.end() || *it != h) {
      throw ValidationError("germ is not at the holonomy base");
    }
    return image[it - germs.begin()];
  }

  std::size_t HolonomyPermutation::cycle_length(DirectedEdge h) const {
    std::size_t  n = 1;
    DirectedEdge g = (*this)(h);
    while (g != h) {
      g = (*this)(g);
      if (++n > germs.size()) {
        throw ValidationError("holonomy is not a permutation");
      }
    }
    return n;
  }

  HolonomyPermutation HolonomyPermutation::compose(
      HolonomyPermutation const& then) const {
    HolonomyPermutation out;
    out.base  = base;
    out.germs = germs;
    for (auto const& d : image) {
      out.image.push_back(then(d));
    }
    return out;
  }

  bool HolonomyPermutation::is_bijection() const {
    auto sorted = image;
    std::sort(sorted.begin(), sorted.end());
    return sorted == germs;
  }

  HolonomyPermutation holonomy(UniversalCover const& cover, Word const& w) {
    auto const& c = cover.complex();
    if (!is_closed(c, w)) {
      throw ValidationError("holonomy needs a closed word");
    }
    for (auto d : w) {
      if (c.edge_class(d) != EdgeClass::vertical) {
        throw ValidationError("holonomy needs a vertical word");
      }
    }
    HolonomyPermutation p;
    p.base = c.origin(w.front());
    for (EdgeId e = 0; e < c.number_of_edges(); ++e) {
      if (c.edge(e).cls != EdgeClass::horizontal) {
        continue;
      }
      for (bool rev : {false, true}) {
        DirectedEdge d(e, rev);
        if (c.origin(d) == p.base) {
          p.germs.push_back(d);
        }
      }
    }
    std::sort(p.germs.begin(), p.germs.end());
    for (auto h : p.germs) {
      p.image.push_back(develop_column(cover, w, h).second);
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Periodization
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string state_key(Word const& column, DirectedEdge last) {
      std::string s((column.size() + 1) * sizeof(std::uint32_t), '\0');
      for (std::size_t i = 0; i < column.size(); ++i) {
        auto code = column[i].code();
        std::memcpy(s.data() + i * sizeof(code), &code, sizeof(code));
      }
      auto code = last.code();
      std::memcpy(s.data() + column.size() * sizeof(code), &code, sizeof(code));
      return s;
    }

    // Closed, cyclically reduced vertical words v.v' with |v'| <= max, in
    // order of increasing |v'| and then lexicographically by code.
    std::vector<Word> vertical_closures(SquareComplex const& c,
                                        Word const&          v,
                                        std::size_t          max) {
      std::vector<DirectedEdge> letters;
      for (EdgeId e = 0; e < c.number_of_edges(); ++e) {
        if (c.edge(e).cls == EdgeClass::vertical) {
          letters.emplace_back(e, false);
          letters.emplace_back(e, true);
        }
      }
      std::vector<Word> out;
      std::vector<Word> layer{v};
      for (std::size_t len = 0; len <= max; ++len) {
        std::vector<Word> next;
        for (auto const& w : layer) {
          if (is_closed(c, w) && is_cyclically_reduced(w)) {
            out.push_back(w);
          }
          if (len == max) {
            continue;
          }
          for (auto d : letters) {
            if (c.origin(d) == c.terminus(w.back()) && d != w.back().inverse()) {
              Word x = w;
              x.push_back(d);
              next.push_back(std::move(x));
            }
          }
        }
        layer = std::move(next);
      }
      return out;
    }

    // Least q > 0 with the q-th iterate of the |V|-row block map fixing u,
    // or 0 once q |V| exceeds max_period.
    std::size_t block_orbit(UniversalCover const& cover,
                            Word const&           u,
                            Word const&           V,
                            std::size_t           max_period) {
      Word row = u;
      for (std::size_t q = 1; q * V.size() <= max_period; ++q) {
        for (auto d : V) {
          develop_row_in_place(cover, row, d);
        }
        if (row == u) {
          return q;
        }
      }
      return 0;
    }

    struct ColumnState {
      Word          column;
      DirectedEdge  last;
      std::uint32_t parent;
    };

    // Horizontal letters g with a vertically periodic column east of the
    // state, searched breadth first until the column equals target.
    std::optional<Word> close_columns(UniversalCover const&     cover,
                                      Word const&               start,
                                      DirectedEdge              last,
                                      DirectedEdge              first,
                                      Word const&               target,
                                      std::size_t               budget,
                                      std::size_t&              states) {
      auto const&               c = cover.complex();
      std::vector<DirectedEdge> letters;
      for (EdgeId e = 0; e < c.number_of_edges(); ++e) {
        if (c.edge(e).cls == EdgeClass::horizontal) {
          letters.emplace_back(e, false);
          letters.emplace_back(e, true);
        }
      }
      constexpr auto none = static_cast<std::uint32_t>(-1);
      std::vector<ColumnState>                       nodes;
      std::unordered_map<std::string, std::uint32_t> seen;
      nodes.push_back({start, last, none});
      seen.emplace(state_key(start, last), 0);
      auto path_to = [&](std::uint32_t k) {
        Word path;
        for (; k != 0; k = nodes[k].parent) {
          path.push_back(nodes[k].last);
        }
        std::reverse(path.begin(), path.end());
        return path;
      };
      for (std::uint32_t head = 0; head < nodes.size(); ++head) {
        for (auto g : letters) {
          auto const& node = nodes[head];
          if (g == node.last.inverse()
              || c.origin(g) != c.origin(node.column.front())) {
            continue;
          }
          auto [right, top] = develop_column(cover, node.column, g);
          if (top != g) {
            continue;
          }
          if (right == target && g != first.inverse()) {
            nodes.push_back({std::move(right), g, head});
            states += nodes.size();
            return path_to(static_cast<std::uint32_t>(nodes.size() - 1));
          }
          auto key = state_key(right, g);
          if (seen.contains(key)) {
            continue;
          }
          if (nodes.size() >= budget) {
            states += nodes.size();
            return std::nullopt;
          }
          seen.emplace(std::move(key), static_cast<std::uint32_t>(nodes.size()));
          nodes.push_back({std::move(right), g, head});
        }
      }
      states += nodes.size();
      return std::nullopt;
    }

  }  // namespace

  TorusCertificate periodize_window(UniversalCover const&   cover,
                                    GridWindow const&       window,
                                    PeriodizeOptions const& opt,
                                    PeriodizeStats*         stats) {
    if (!cover.complete()) {
      throw ValidationError("periodization needs a complete square complex");
    }
    if (window.width() < 1 || window.height() < 1 || !window.complete()) {
      throw ValidationError("periodization needs a complete non-empty window");
    }
    if (auto bad = check_window(cover, window)) {
      throw ValidationError("window is inconsistent: " + *bad);
    }
    auto const& c = cover.complex();
    Word        u = window.south();
    Word        v = window.west();
    if (!is_reduced(u) || !is_reduced(v)) {
      throw ValidationError("window sides are not reduced");
    }
    PeriodizeStats local;
    auto&          st = stats != nullptr ? *stats : local;
    st                = PeriodizeStats{};
    for (auto const& V : vertical_closures(c, v, opt.max_extension)) {
      ++st.attempts;
      std::size_t q = block_orbit(cover, u, V, opt.max_period);
      if (q == 0) {
        continue;
      }
      Word V0   = power(V, q);
      auto rect = develop_quadrant(cover, u, V0);
      Word Lw   = rect.window.east();
      Word tail;
      if (!(Lw == V0 && is_cyclically_reduced(u))) {
        auto found = close_columns(cover, Lw, u.back(), u.front(), V0,
                                   opt.state_budget, st.states);
        if (!found) {
          continue;
        }
        tail = std::move(*found);
      }
      Word U = u;
      U.insert(U.end(), tail.begin(), tail.end());
      st.extension        = V.size() - v.size();
      st.appended_columns = tail.size();
      TorusCertificate cert;
      cert.base   = c.origin(U.front());
      cert.H      = static_cast<int>(U.size());
      cert.P      = static_cast<int>(V0.size());
      cert.domain = develop_quadrant(cover, U, V0).window;
      return cert;
    }
    throw BudgetExhausted("no torus found within the periodization budget");
  }

  VerifyResult verify_torus(UniversalCover const&   cover,
                            TorusCertificate const& cert) {
    auto fail = [](std::string s) {
      return VerifyResult{false, std::move(s)};
    };
    auto const& c = cover.complex();
    auto const& d = cert.domain;
    int         H = cert.H, P = cert.P;
    if (H < 1 || P < 1 || d.i0() != 0 || d.j0() != 0 || d.width() != H
        || d.height() != P) {
      return fail("domain is not an H x P window at the origin");
    }
    auto at = [](char const* what, int i, int j) {
      return std::string(what) + "(" + std::to_string(i) + ", "
             + std::to_string(j) + ")";
    };
    // Sides.
    std::vector<DirectedEdge> bottom(H), left(P);
    for (int i = 0; i < H; ++i) {
      if (!d.B(i, 0)) {
        return fail(at("B", i, 0) + " is missing");
      }
      bottom[i] = *d.B(i, 0);
    }
    for (int j = 0; j < P; ++j) {
      if (!d.L(0, j)) {
        return fail(at("L", 0, j) + " is missing");
      }
      left[j] = *d.L(0, j);
    }
    if (c.origin(bottom[0]) != cert.base) {
      return fail("base vertex does not match the domain");
    }
    // Independent raster replay over rolling buffers.
    std::vector<DirectedEdge> row = bottom;
    for (int j = 0; j < P; ++j) {
      DirectedEdge l = left[j];
      for (int i = 0; i < H; ++i) {
        auto e = cover.corners().lookup(row[i], l);
        if (!e) {
          return fail(at("cell ", i, j) + ": no square with corner ("
                      + c.format(row[i]) + ", " + c.format(l) + ")");
        }
        if (d.cell(i, j) != e->placement) {
          return fail(at("cell ", i, j) + ": stored "
                      + (d.cell(i, j) ? c.format(*d.cell(i, j)) : "nothing")
                      + ", developed " + c.format(e->placement));
        }
        if (d.B(i, j + 1) != e->top) {
          return fail(at("B", i, j + 1) + ": stored "
                      + (d.B(i, j + 1) ? c.format(*d.B(i, j + 1)) : "nothing")
                      + ", developed " + c.format(e->top));
        }
        if (d.L(i + 1, j) != e->right) {
          return fail(at("L", i + 1, j) + ": stored "
                      + (d.L(i + 1, j) ? c.format(*d.L(i + 1, j)) : "nothing")
                      + ", developed " + c.format(e->right));
        }
        row[i] = e->top;
        l      = e->right;
      }
      if (l != left[j]) {
        return fail(at("L", H, j) + ": east side " + c.format(l)
                    + " differs from west side " + c.format(left[j]));
      }
    }
    for (int i = 0; i < H; ++i) {
      if (row[i] != bottom[i]) {
        return fail(at("B", i, P) + ": north side " + c.format(row[i])
                    + " differs from south side " + c.format(bottom[i]));
      }
    }
    for (int j = 0; j < P; ++j) {
      Word r;
      for (int i = 0; i < H; ++i) {
        r.push_back(*d.B(i, j));
      }
      if (!is_cyclically_reduced(r)) {
        return fail("row " + std::to_string(j) + " is not cyclically reduced");
      }
    }
    for (int i = 0; i < H; ++i) {
      Word col;
      for (int j = 0; j < P; ++j) {
        col.push_back(*d.L(i, j));
      }
      if (!is_cyclically_reduced(col)) {
        return fail("column " + std::to_string(i)
                    + " is not cyclically reduced");
      }
    }
    return VerifyResult{true, {}};
  }

  std::optional<std::pair<int, int>> find_window_in_torus(
      TorusCertificate const& cert,
      GridWindow const&       w) {
    auto const& d   = cert.domain;
    int         H   = cert.H, P = cert.P;
    auto        mod = [](int a, int m) { return ((a % m) + m) % m; };
    for (int b = 0; b < P; ++b) {
      for (int a = 0; a < H; ++a) {
        bool ok = true;
        for (int j = 0; ok && j <= w.height(); ++j) {
          for (int i = 0; ok && i <= w.width(); ++i) {
            int ti = mod(a + i, H), tj = mod(b + j, P);
            if (i < w.width()
                && w.B(w.i0() + i, w.j0() + j) != d.B(ti, tj)) {
              ok = false;
            }
            if (j < w.height()
                && w.L(w.i0() + i, w.j0() + j) != d.L(ti, tj)) {
              ok = false;
            }
            if (i < w.width() && j < w.height()
                && w.cell(w.i0() + i, w.j0() + j) != d.cell(ti, tj)) {
              ok = false;
            }
          }
        }
        if (ok) {
          return std::pair{a, b};
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cylinders
  ////////////////////////////////////////////////////////////////////////

  CylinderCertificate strip_certificate(UniversalCover const& cover,
                                        AxisPair const&       axes,
                                        int                   n,
                                        OrbitOptions const&   opt) {
    auto orbit = strip_period(cover, axes, n, opt);
    if (orbit.budget_exhausted) {
      throw BudgetExhausted("strip period search exhausted its budget");
    }
    if (orbit.preperiod != 0) {
      throw ValidationError("strip is only eventually periodic");
    }
    CylinderCertificate cert;
    cert.n    = n;
    cert.P    = static_cast<int>(orbit.period);
    cert.axes = axes;
    Word bottom, left;
    for (int i = 0; i < n; ++i) {
      bottom.push_back(axes.horizontal[i % axes.horizontal.size()]);
    }
    for (int j = 0; j < cert.P; ++j) {
      left.push_back(axes.vertical[j % axes.vertical.size()]);
    }
    cert.period = develop_quadrant(cover, bottom, left).window;
    return cert;
  }

  VerifyResult verify_cylinder(UniversalCover const&      cover,
                               CylinderCertificate const& cert) {
    auto fail = [](std::string s) {
      return VerifyResult{false, std::move(s)};
    };
    auto const& w = cert.period;
    if (w.i0() != 0 || w.j0() != 0 || w.width() != cert.n
        || w.height() != cert.P || cert.P < 1) {
      return fail("period window has the wrong shape");
    }
    if (cert.P % static_cast<int>(cert.axes.vertical.size()) != 0) {
      return fail("period is not a multiple of the vertical axis length");
    }
    if (!w.complete()) {
      return fail("period window is incomplete");
    }
    for (int j = 0; j < cert.P; ++j) {
      if (*w.L(0, j) != cert.axes.vertical[j % cert.axes.vertical.size()]) {
        return fail("west side is not the vertical axis");
      }
    }
    for (int i = 0; i < cert.n; ++i) {
      if (*w.B(i, 0)
          != cert.axes.horizontal[i % cert.axes.horizontal.size()]) {
        return fail("south side is not the horizontal axis");
      }
    }
    auto replay = develop_quadrant(cover, w.south(), w.west());
    if (!replay.complete() || !(replay.window == w)) {
      return fail("replayed strip differs from the stored period");
    }
    if (w.north() != w.south()) {
      return fail("north side differs from south side");
    }
    return VerifyResult{true, {}};
  }

}  // namespace sqc
