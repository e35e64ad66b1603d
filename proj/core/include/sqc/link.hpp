#pragma once

// Local geometry of a squared complex: vertex links, the combinatorial
// nonpositive-curvature test, VH structure, completeness, and the corner
// table that drives every development.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqc/complex.hpp"

namespace sqc {

  // Nodes are germs: the germ of directed edge d sits at origin(d). Arcs are
  // square corners.
  class LinkGraph {
   public:
    struct Arc {
      std::uint32_t from;  // node indices
      std::uint32_t to;
      SquareId      square;
      Orientation   corner;
    };

    LinkGraph() = default;
    LinkGraph(VertexId v, std::vector<DirectedEdge> germs);

    VertexId vertex() const noexcept {
      return _vertex;
    }
    std::vector<DirectedEdge> const& germs() const noexcept {
      return _germs;
    }
    std::vector<Arc> const& arcs() const noexcept {
      return _arcs;
    }
    std::optional<std::uint32_t> node_of(DirectedEdge germ) const;

    void add_arc(DirectedEdge a, DirectedEdge b, SquareId s, Orientation o);

    // Length of the shortest cycle (1 for a loop arc, 2 for a doubled arc);
    // nullopt when the link is a forest.
    std::optional<std::size_t> girth() const;
    // nullopt when the germs lie in different components.
    std::optional<std::size_t> distance(std::uint32_t a, std::uint32_t b) const;

   private:
    VertexId                  _vertex = 0;
    std::vector<DirectedEdge> _germs;
    std::vector<Arc>          _arcs;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>
        _adjacent;  // (neighbour, arc index)
  };

  LinkGraph              link(SquareComplex const& c, VertexId v);
  std::vector<LinkGraph> links(SquareComplex const& c);

  struct NpcReport {
    struct Vertex {
      VertexId                   vertex;
      std::optional<std::size_t> girth;  // nullopt: acyclic
      bool                       pass;
    };
    std::vector<Vertex> vertices;
    bool                pass = true;
  };

  // Pass iff every link has girth >= 4 (so no loops or doubled arcs).
  NpcReport check_npc(SquareComplex const& c);

  struct VhReport {
    bool                     pass = true;
    std::vector<EdgeClass>   classes;  // declared or inferred, per edge
    std::vector<std::string> failures;
  };

  // With infer == false an unclassified edge raises ValidationError; with
  // infer == true classes propagate through squares (b ~ t, l ~ r, b != l).
  VhReport check_vh(SquareComplex const& c, bool infer = false);

  struct BipartiteReport {
    VertexId    vertex;
    bool        pass = false;
    std::size_t horizontal_germs = 0;
    std::size_t vertical_germs   = 0;
    std::size_t arcs             = 0;
    std::size_t missing_pairs    = 0;
    std::size_t repeated_pairs   = 0;
    std::size_t same_class_arcs  = 0;
  };

  BipartiteReport check_complete_bipartite(SquareComplex const& c, VertexId v);
  bool            is_complete_square_complex(SquareComplex const& c);

  // Partial map (bottom, left) -> (placement, top, right).
  class CornerTable {
   public:
    struct Entry {
      Placement    placement;
      DirectedEdge top;
      DirectedEdge right;
    };

    CornerTable() = default;
    // Throws DuplicateCornerError naming both squares when two corners share
    // a key.
    explicit CornerTable(SquareComplex const& c);

    std::optional<Entry> lookup(DirectedEdge bottom,
                                DirectedEdge left) const noexcept {
      std::size_t i = index(bottom, left);
      if (i >= _slots.size() || !_filled[i]) {
        return std::nullopt;
      }
      return _slots[i];
    }

    std::size_t size() const noexcept {
      return _size;
    }

    struct KeyedEntry {
      DirectedEdge bottom;
      DirectedEdge left;
      Entry        entry;
    };
    std::vector<KeyedEntry> entries() const;

   private:
    std::size_t index(DirectedEdge b, DirectedEdge l) const noexcept {
      return static_cast<std::size_t>(b.code()) * _stride + l.code();
    }

    std::size_t        _stride = 0;
    std::size_t        _size   = 0;
    std::vector<Entry> _slots;
    std::vector<char>  _filled;
  };

  // Angle between two germs at v in units of pi/2 (link distance);
  // nullopt means infinite. Throws ValidationError if a germ is not at v.
  std::optional<std::size_t> angle(SquareComplex const& c,
                                   VertexId             v,
                                   DirectedEdge         germ1,
                                   DirectedEdge         germ2);

  // A complex together with its corner table: the object every development
  // in the universal cover works against.
  class UniversalCover {
   public:
    explicit UniversalCover(SquareComplex c);

    SquareComplex const& complex() const noexcept {
      return _complex;
    }
    CornerTable const& corners() const noexcept {
      return _corners;
    }
    bool complete_at(VertexId v) const {
      return _complete.at(v) != 0;
    }
    bool complete() const noexcept {
      return _all_complete;
    }

    std::optional<CornerTable::Entry> lookup(DirectedEdge bottom,
                                             DirectedEdge left) const noexcept {
      return _corners.lookup(bottom, left);
    }

   private:
    SquareComplex     _complex;
    CornerTable       _corners;
    std::vector<char> _complete;
    bool              _all_complete = false;
  };

  // Squares-preserving bijection between two complexes, ignoring names.
  struct Isomorphism {
    std::vector<VertexId> vertices;  // A vertex -> B vertex
    std::vector<EdgeId>   edges;
    std::vector<SquareId> squares;
  };

  std::optional<Isomorphism> find_isomorphism(SquareComplex const& a,
                                              SquareComplex const& b);

}  // namespace sqc
