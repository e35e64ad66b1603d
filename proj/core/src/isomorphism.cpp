#include <limits>

#include "sqc/link.hpp"

namespace sqc {

  namespace {

    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();

    struct Search {
      SquareComplex const&       a;
      SquareComplex const&       b;
      std::vector<std::uint32_t> vmap, vinv, emap, einv, smap;
      std::vector<char>          sused;

      // Binds edge ea to eb (same direction), recording what was newly set
      // so the caller can undo it.
      bool bind_edge(EdgeId ea, EdgeId eb, std::vector<EdgeId>& new_edges,
                     std::vector<VertexId>& new_vertices) {
        if (emap[ea] != unset || einv[eb] != unset) {
          return emap[ea] == eb;
        }
        auto const& x = a.edge(ea);
        auto const& y = b.edge(eb);
        if (x.cls != y.cls) {
          return false;
        }
        for (auto [va, vb] : {std::pair{x.origin, y.origin},
                              std::pair{x.terminus, y.terminus}}) {
          if (vmap[va] == unset && vinv[vb] == unset) {
            vmap[va] = vb;
            vinv[vb] = va;
            new_vertices.push_back(va);
          } else if (vmap[va] != vb) {
            return false;
          }
        }
        emap[ea] = eb;
        einv[eb] = ea;
        new_edges.push_back(ea);
        return true;
      }

      void undo(std::vector<EdgeId> const&   new_edges,
                std::vector<VertexId> const& new_vertices) {
        for (auto e : new_edges) {
          einv[emap[e]] = unset;
          emap[e]       = unset;
        }
        for (auto v : new_vertices) {
          vinv[vmap[v]] = unset;
          vmap[v]       = unset;
        }
      }

      bool squares(SquareId s) {
        if (s == a.number_of_squares()) {
          return edges(0);
        }
        Frame const& fa = a.square(s).frame;
        for (SquareId t = 0; t < b.number_of_squares(); ++t) {
          if (sused[t]) {
            continue;
          }
          Frame const& fb = b.square(t).frame;
          std::vector<EdgeId>   ne;
          std::vector<VertexId> nv;
          bool                  ok = true;
          for (auto [da, db] : {std::pair{fa.bottom, fb.bottom},
                                std::pair{fa.right, fb.right},
                                std::pair{fa.top, fb.top},
                                std::pair{fa.left, fb.left}}) {
            if (da.reversed() != db.reversed()
                || !bind_edge(da.edge(), db.edge(), ne, nv)) {
              ok = false;
              break;
            }
          }
          if (ok) {
            smap[s]  = t;
            sused[t] = 1;
            if (squares(s + 1)) {
              return true;
            }
            sused[t] = 0;
          }
          undo(ne, nv);
        }
        return false;
      }

      bool edges(EdgeId e) {
        if (e == a.number_of_edges()) {
          return vertices();
        }
        if (emap[e] != unset) {
          return edges(e + 1);
        }
        for (EdgeId f = 0; f < b.number_of_edges(); ++f) {
          std::vector<EdgeId>   ne;
          std::vector<VertexId> nv;
          if (bind_edge(e, f, ne, nv) && edges(e + 1)) {
            return true;
          }
          undo(ne, nv);
        }
        return false;
      }

      // Isolated vertices pair up arbitrarily.
      bool vertices() {
        VertexId next = 0;
        for (VertexId v = 0; v < a.number_of_vertices(); ++v) {
          if (vmap[v] != unset) {
            continue;
          }
          while (next < b.number_of_vertices() && vinv[next] != unset) {
            ++next;
          }
          if (next == b.number_of_vertices()) {
            return false;
          }
          vmap[v]    = next;
          vinv[next] = v;
        }
        return true;
      }
    };

  }  // namespace

  std::optional<Isomorphism> find_isomorphism(SquareComplex const& a,
                                              SquareComplex const& b) {
    if (a.number_of_vertices() != b.number_of_vertices()
        || a.number_of_edges() != b.number_of_edges()
        || a.number_of_squares() != b.number_of_squares()) {
      return std::nullopt;
    }
    Search s{a,
             b,
             std::vector<std::uint32_t>(a.number_of_vertices(), unset),
             std::vector<std::uint32_t>(b.number_of_vertices(), unset),
             std::vector<std::uint32_t>(a.number_of_edges(), unset),
             std::vector<std::uint32_t>(b.number_of_edges(), unset),
             std::vector<std::uint32_t>(a.number_of_squares(), unset),
             std::vector<char>(b.number_of_squares(), 0)};
    if (!s.squares(0)) {
      return std::nullopt;
    }
    return Isomorphism{s.vmap, s.emap, s.smap};
  }

}  // namespace sqc
