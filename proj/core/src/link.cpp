#include "sqc/link.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "sqc/error.hpp"

namespace sqc {

  LinkGraph::LinkGraph(VertexId v, std::vector<DirectedEdge> germs)
      : _vertex(v), _germs(std::move(germs)), _adjacent(_germs.size()) {}

  std::optional<std::uint32_t> LinkGraph::node_of(DirectedEdge germ) const {
    auto it = std::find(_germs.begin(), _germs.end(), germ);
    if (it == _germs.end()) {
      return std::nullopt;
    }
    return static_cast<std::uint32_t>(it - _germs.begin());
  }

  void LinkGraph::add_arc(DirectedEdge a,
                          DirectedEdge b,
                          SquareId     s,
                          Orientation  o) {
    auto na = node_of(a);
    auto nb = node_of(b);
    if (!na || !nb) {
      throw ValidationError("corner germ is not at the link vertex");
    }
    auto idx = static_cast<std::uint32_t>(_arcs.size());
    _arcs.push_back(Arc{*na, *nb, s, o});
    _adjacent[*na].emplace_back(*nb, idx);
    if (*na != *nb) {
      _adjacent[*nb].emplace_back(*na, idx);
    }
  }

  std::optional<std::size_t> LinkGraph::girth() const {
    constexpr auto        none = std::numeric_limits<std::size_t>::max();
    std::size_t           best = none;
    std::vector<std::size_t> dist(_germs.size());
    std::vector<std::uint32_t> parent_arc(_germs.size());
    for (auto const& a : _arcs) {
      if (a.from == a.to) {
        return 1;
      }
    }
    for (std::uint32_t start = 0; start < _germs.size(); ++start) {
      std::fill(dist.begin(), dist.end(), none);
      dist[start]       = 0;
      parent_arc[start] = std::numeric_limits<std::uint32_t>::max();
      std::deque<std::uint32_t> queue{start};
      while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        if (2 * dist[u] + 1 >= best) {
          break;
        }
        for (auto [w, arc] : _adjacent[u]) {
          if (arc == parent_arc[u]) {
            continue;
          }
          if (dist[w] == none) {
            dist[w]       = dist[u] + 1;
            parent_arc[w] = arc;
            queue.push_back(w);
          } else {
            best = std::min(best, dist[u] + dist[w] + 1);
          }
        }
      }
    }
    if (best == none) {
      return std::nullopt;
    }
    return best;
  }

  std::optional<std::size_t> LinkGraph::distance(std::uint32_t a,
                                                 std::uint32_t b) const {
    constexpr auto           none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(_germs.size(), none);
    dist.at(a) = 0;
    std::deque<std::uint32_t> queue{a};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      if (u == b) {
        return dist[u];
      }
      for (auto [w, arc] : _adjacent[u]) {
        (void) arc;
        if (dist[w] == none) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return std::nullopt;
  }

  namespace {

    std::vector<DirectedEdge> germs_at(SquareComplex const& c, VertexId v) {
      std::vector<DirectedEdge> out;
      for (EdgeId e = 0; e < c.number_of_edges(); ++e) {
        if (c.edge(e).origin == v) {
          out.emplace_back(e, false);
        }
        if (c.edge(e).terminus == v) {
          out.emplace_back(e, true);
        }
      }
      return out;
    }

  }  // namespace

  std::vector<LinkGraph> links(SquareComplex const& c) {
    std::vector<LinkGraph> out;
    out.reserve(c.number_of_vertices());
    for (VertexId v = 0; v < c.number_of_vertices(); ++v) {
      out.emplace_back(v, germs_at(c, v));
    }
    for (SquareId s = 0; s < c.number_of_squares(); ++s) {
      for (int k = 0; k < orientation_count; ++k) {
        auto  o = static_cast<Orientation>(k);
        Frame f = c.placed_frame({s, o});
        out[c.origin(f.bottom)].add_arc(f.bottom, f.left, s, o);
      }
    }
    return out;
  }

  LinkGraph link(SquareComplex const& c, VertexId v) {
    if (v >= c.number_of_vertices()) {
      throw ValidationError("unknown vertex");
    }
    return links(c)[v];
  }

  NpcReport check_npc(SquareComplex const& c) {
    NpcReport r;
    for (auto const& g : links(c)) {
      auto girth = g.girth();
      bool ok    = !girth || *girth >= 4;
      r.vertices.push_back({g.vertex(), girth, ok});
      r.pass = r.pass && ok;
    }
    return r;
  }

  VhReport check_vh(SquareComplex const& c, bool infer) {
    VhReport r;
    r.classes.resize(c.number_of_edges());
    for (EdgeId e = 0; e < c.number_of_edges(); ++e) {
      r.classes[e] = c.edge(e).cls;
      if (r.classes[e] == EdgeClass::unclassified && !infer) {
        throw ValidationError("edge '" + c.edge(e).name
                              + "' is unclassified and inference is off");
      }
    }
    // Frames fix the classes: b, t horizontal and l, r vertical. Inference
    // assigns them; a second, different assignment is a failure.
    auto require = [&](Square const& s, DirectedEdge d, EdgeClass want,
                       char const* side) {
      auto& cls = r.classes[d.edge()];
      if (cls == EdgeClass::unclassified) {
        cls = want;
      } else if (cls != want) {
        r.pass = false;
        r.failures.push_back("square '" + s.name + "': side " + side + " ("
                             + c.edge(d.edge()).name + ") is "
                             + to_string(cls) + ", expected "
                             + to_string(want));
      }
    };
    for (auto const& s : c.squares()) {
      require(s, s.frame.bottom, EdgeClass::horizontal, "b");
      require(s, s.frame.top, EdgeClass::horizontal, "t");
      require(s, s.frame.left, EdgeClass::vertical, "l");
      require(s, s.frame.right, EdgeClass::vertical, "r");
    }
    return r;
  }

  BipartiteReport check_complete_bipartite(SquareComplex const& c,
                                           VertexId             v) {
    BipartiteReport r;
    r.vertex = v;
    auto g   = link(c, v);
    std::vector<std::uint32_t> hs;
    std::vector<std::uint32_t> vs;
    for (std::uint32_t i = 0; i < g.germs().size(); ++i) {
      auto cls = c.edge_class(g.germs()[i]);
      if (cls == EdgeClass::horizontal) {
        hs.push_back(i);
      } else if (cls == EdgeClass::vertical) {
        vs.push_back(i);
      }
    }
    r.horizontal_germs = hs.size();
    r.vertical_germs   = vs.size();
    r.arcs             = g.arcs().size();
    std::vector<std::size_t> count(g.germs().size() * g.germs().size(), 0);
    for (auto const& a : g.arcs()) {
      auto ca = c.edge_class(g.germs()[a.from]);
      auto cb = c.edge_class(g.germs()[a.to]);
      if (ca == cb || ca == EdgeClass::unclassified
          || cb == EdgeClass::unclassified) {
        ++r.same_class_arcs;
        continue;
      }
      auto h  = ca == EdgeClass::horizontal ? a.from : a.to;
      auto vv = ca == EdgeClass::horizontal ? a.to : a.from;
      ++count[h * g.germs().size() + vv];
    }
    for (auto h : hs) {
      for (auto vv : vs) {
        auto k = count[h * g.germs().size() + vv];
        if (k == 0) {
          ++r.missing_pairs;
        } else if (k > 1) {
          ++r.repeated_pairs;
        }
      }
    }
    r.pass = !hs.empty() && !vs.empty() && r.missing_pairs == 0
             && r.repeated_pairs == 0 && r.same_class_arcs == 0;
    return r;
  }

  bool is_complete_square_complex(SquareComplex const& c) {
    for (VertexId v = 0; v < c.number_of_vertices(); ++v) {
      if (!check_complete_bipartite(c, v).pass) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // CornerTable
  ////////////////////////////////////////////////////////////////////////

  CornerTable::CornerTable(SquareComplex const& c)
      : _stride(c.number_of_directed_edges()),
        _slots(_stride * _stride),
        _filled(_stride * _stride, 0) {
    for (SquareId s = 0; s < c.number_of_squares(); ++s) {
      for (int k = 0; k < orientation_count; ++k) {
        Placement p{s, static_cast<Orientation>(k)};
        Frame     f = c.placed_frame(p);
        auto      i = index(f.bottom, f.left);
        if (_filled[i]) {
          auto const& other = _slots[i].placement;
          throw DuplicateCornerError(
              "corner (" + c.format(f.bottom) + ", " + c.format(f.left)
              + ") is shared by " + c.format(other) + " and " + c.format(p));
        }
        _filled[i] = 1;
        _slots[i]  = Entry{p, f.top, f.right};
        ++_size;
      }
    }
  }

  std::vector<CornerTable::KeyedEntry> CornerTable::entries() const {
    std::vector<KeyedEntry> out;
    out.reserve(_size);
    for (std::size_t i = 0; i < _slots.size(); ++i) {
      if (_filled[i]) {
        out.push_back(KeyedEntry{
            DirectedEdge::from_code(static_cast<std::uint32_t>(i / _stride)),
            DirectedEdge::from_code(static_cast<std::uint32_t>(i % _stride)),
            _slots[i]});
      }
    }
    return out;
  }

  std::optional<std::size_t> angle(SquareComplex const& c,
                                   VertexId             v,
                                   DirectedEdge         germ1,
                                   DirectedEdge         germ2) {
    auto g  = link(c, v);
    auto n1 = g.node_of(germ1);
    auto n2 = g.node_of(germ2);
    if (!n1 || !n2) {
      throw ValidationError("germ " + c.format(!n1 ? germ1 : germ2)
                            + " is not incident at vertex '"
                            + c.vertex_name(v) + "'");
    }
    return g.distance(*n1, *n2);
  }

  UniversalCover::UniversalCover(SquareComplex c)
      : _complex(std::move(c)),
        _corners(_complex),
        _complete(_complex.number_of_vertices(), 0) {
    _all_complete = true;
    for (VertexId v = 0; v < _complex.number_of_vertices(); ++v) {
      _complete[v]  = check_complete_bipartite(_complex, v).pass ? 1 : 0;
      _all_complete = _all_complete && _complete[v] != 0;
    }
  }

}  // namespace sqc
