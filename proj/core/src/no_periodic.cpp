#include <algorithm>

#include "sqc/error.hpp"
#include "sqc/parallel.hpp"
#include "sqc/zcomplex.hpp"
#include "tiler.hpp"

namespace sqc {

  namespace {

    // The first letter where the rectangle fails to close, or nothing.
    std::optional<NonClosure> mismatch(Closure const& cl,
                                       Word const&    left,
                                       Word const&    bottom) {
      NonClosure e;
      for (std::size_t i = 0; i < bottom.size(); ++i) {
        if (cl.top[i] != bottom[i]) {
          e.side     = 'N';
          e.index    = static_cast<int>(i);
          e.expected = bottom[i];
          e.actual   = cl.top[i];
          return e;
        }
      }
      for (std::size_t j = 0; j < left.size(); ++j) {
        if (cl.right[j] != left[j]) {
          e.side     = 'E';
          e.index    = static_cast<int>(j);
          e.expected = left[j];
          e.actual   = cl.right[j];
          return e;
        }
      }
      return std::nullopt;
    }

    AxisPair designated_axes(UniversalCover const& z, SquareId s) {
      auto crosses = enumerate_crosses(z, s);
      if (crosses.empty()) {
        throw ValidationError("no cross through the base square");
      }
      return ne_axes(z.complex(), crosses.front());
    }

  }  // namespace

  NoPeriodicCertificate certify_no_periodic_plane(UniversalCover const& z,
                                                  SquareId              s,
                                                  int                   bound,
                                                  unsigned threads) {
    if (bound < 1) {
      throw ValidationError("bound must be positive");
    }
    NoPeriodicCertificate cert;
    cert.bound = bound;
    cert.base  = s;
    cert.axes  = designated_axes(z, s);
    std::size_t const                       per_sign = static_cast<std::size_t>(bound) * bound;
    std::size_t const                       total    = 4 * per_sign;
    std::vector<NonClosure>                 results(total);
    std::vector<char>                       closed(total, 0);
    std::vector<std::uint64_t>              cells(total, 0);
    parallel_for(total, threads, [&](std::size_t idx) {
      int  sign    = static_cast<int>(idx / per_sign);
      int  sv      = (sign & 2) != 0 ? -1 : 1;
      int  sh      = (sign & 1) != 0 ? -1 : 1;
      int  k       = static_cast<int>((idx % per_sign) / bound) + 1;
      int  l       = static_cast<int>(idx % bound) + 1;
      Word left    = signed_power(cert.axes.vertical, sv * k);
      Word bottom  = signed_power(cert.axes.horizontal, sh * l);
      auto cl      = rectangle_closes(z, left, bottom);
      cells[idx]   = cl.development.cells;
      auto m       = mismatch(cl, left, bottom);
      NonClosure e = m.value_or(NonClosure{});
      e.sign_vertical   = sv;
      e.sign_horizontal = sh;
      e.k               = k;
      e.l               = l;
      results[idx]      = e;
      closed[idx]       = m ? 0 : 1;
    });
    for (std::size_t idx = 0; idx < total; ++idx) {
      cert.cells += cells[idx];
      (closed[idx] ? cert.counterexamples : cert.entries)
          .push_back(results[idx]);
    }
    return cert;
  }

  bool replay_witness(UniversalCover const&        z,
                      NoPeriodicCertificate const& cert,
                      NonClosure const&            entry) {
    Word left   = signed_power(cert.axes.vertical, entry.sign_vertical * entry.k);
    Word bottom = signed_power(cert.axes.horizontal,
                               entry.sign_horizontal * entry.l);
    auto cl     = rectangle_closes(z, left, bottom);
    auto m      = mismatch(cl, left, bottom);
    if (!m) {
      return false;
    }
    return m->side == entry.side && m->index == entry.index
           && m->expected == entry.expected && m->actual == entry.actual;
  }

  PeriodicPlaneSearch search_periodic_plane_through(UniversalCover const& z,
                                                    SquareId              s,
                                                    int                   bound,
                                                    std::uint64_t node_budget) {
    auto const&         c = z.complex();
    PeriodicPlaneSearch out;
    out.bound = bound;
    for (int H = 1; H <= bound && !out.torus; ++H) {
      for (int P = 1; P <= bound && !out.torus; ++P) {
        detail::Tiler t(c, 0, 0, H, P, true);
        if (!t.place(0, 0, static_cast<std::size_t>(s) * orientation_count)) {
          continue;
        }
        // Raster order after the base cell.
        auto rec = [&](auto&& self, int k) -> bool {
          if (k == H * P) {
            return true;
          }
          int i = k % H, j = k / H;
          for (std::size_t p = 0; p < t.placements(); ++p) {
            if (++out.nodes > node_budget) {
              throw BudgetExhausted("torus search exhausted its node budget");
            }
            auto m = t.mark();
            if (t.place(i, j, p)) {
              if (self(self, k + 1)) {
                return true;
              }
              t.undo(m);
            }
          }
          return false;
        };
        if (rec(rec, 1)) {
          TorusCertificate cert;
          cert.base   = c.origin(c.placed_frame({s, Orientation::identity})
                                   .bottom);
          cert.H      = H;
          cert.P      = P;
          cert.domain = t.window();
          out.torus   = cert;
        }
      }
    }
    return out;
  }

}  // namespace sqc
