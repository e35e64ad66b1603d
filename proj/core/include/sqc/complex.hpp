#pragma once

// Squared 2-complexes: vertices, oriented edges with a vertical/horizontal
// class, and squares given by a fixed frame (bottom, right, top, left).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sqc {

  using VertexId = std::uint32_t;
  using EdgeId   = std::uint32_t;
  using SquareId = std::uint32_t;

  enum class EdgeClass : std::uint8_t { vertical, horizontal, unclassified };

  char        to_char(EdgeClass c) noexcept;
  std::string to_string(EdgeClass c);

  // An edge traversed forwards or backwards. code() is a dense index in
  // [0, 2 * number_of_edges) used by lookup tables.
  class DirectedEdge {
   public:
    constexpr DirectedEdge() noexcept = default;
    constexpr explicit DirectedEdge(EdgeId e, bool reversed = false) noexcept
        : _code(2 * e + (reversed ? 1 : 0)) {}

    static constexpr DirectedEdge from_code(std::uint32_t code) noexcept {
      DirectedEdge d;
      d._code = code;
      return d;
    }

    constexpr EdgeId edge() const noexcept {
      return _code / 2;
    }
    constexpr bool reversed() const noexcept {
      return (_code & 1U) != 0;
    }
    constexpr std::uint32_t code() const noexcept {
      return _code;
    }
    constexpr DirectedEdge inverse() const noexcept {
      return from_code(_code ^ 1U);
    }

    constexpr auto operator<=>(DirectedEdge const&) const noexcept = default;

   private:
    std::uint32_t _code = 0;
  };

  using Word = std::vector<DirectedEdge>;

  // b and t are read west to east, l and r south to north.
  struct Frame {
    DirectedEdge bottom;
    DirectedEdge right;
    DirectedEdge top;
    DirectedEdge left;

    auto operator<=>(Frame const&) const noexcept = default;
  };

  // The four placements of a square in a VH-grid, indexed by which corner
  // of the frame sits at the south-west corner of the grid cell:
  //   identity        SW corner, key (b, l)
  //   flip_horizontal SE corner, key (b-, r)
  //   rotate_half     NE corner, key (t-, r-)
  //   flip_vertical   NW corner, key (t, l-)
  enum class Orientation : std::uint8_t {
    identity        = 0,
    flip_horizontal = 1,
    rotate_half     = 2,
    flip_vertical   = 3
  };

  inline constexpr int orientation_count = 4;

  constexpr Orientation mirror_horizontal(Orientation o) noexcept {
    return static_cast<Orientation>(static_cast<std::uint8_t>(o) ^ 1U);
  }
  constexpr Orientation mirror_vertical(Orientation o) noexcept {
    return static_cast<Orientation>(3U - static_cast<std::uint8_t>(o));
  }

  Frame place(Frame const& f, Orientation o) noexcept;

  struct Placement {
    SquareId    square      = 0;
    Orientation orientation = Orientation::identity;

    auto operator<=>(Placement const&) const noexcept = default;
  };

  struct Edge {
    std::string name;
    VertexId    origin   = 0;
    VertexId    terminus = 0;
    EdgeClass   cls      = EdgeClass::unclassified;
  };

  struct Square {
    std::string name;
    Frame       frame;
  };

  class SquareComplex {
   public:
    VertexId add_vertex(std::string name);
    EdgeId   add_edge(std::string name,
                      VertexId    origin,
                      VertexId    terminus,
                      EdgeClass   cls);
    // Throws ValidationError naming the failing corner when the frame does
    // not close up.
    SquareId add_square(std::string name, Frame const& frame);

    void set_edge_class(EdgeId e, EdgeClass cls);

    std::size_t number_of_vertices() const noexcept {
      return _vertices.size();
    }
    std::size_t number_of_edges() const noexcept {
      return _edges.size();
    }
    std::size_t number_of_squares() const noexcept {
      return _squares.size();
    }
    std::size_t number_of_directed_edges() const noexcept {
      return 2 * _edges.size();
    }

    std::string const& vertex_name(VertexId v) const {
      return _vertices.at(v);
    }
    Edge const& edge(EdgeId e) const {
      return _edges.at(e);
    }
    Square const& square(SquareId s) const {
      return _squares.at(s);
    }
    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }
    std::vector<Square> const& squares() const noexcept {
      return _squares;
    }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<EdgeId>   find_edge(std::string_view name) const;
    std::optional<SquareId> find_square(std::string_view name) const;

    VertexId origin(DirectedEdge d) const {
      auto const& e = _edges.at(d.edge());
      return d.reversed() ? e.terminus : e.origin;
    }
    VertexId terminus(DirectedEdge d) const {
      return origin(d.inverse());
    }
    EdgeClass edge_class(DirectedEdge d) const {
      return _edges.at(d.edge()).cls;
    }

    Frame placed_frame(Placement p) const {
      return place(_squares.at(p.square).frame, p.orientation);
    }

    // "name" for forward traversal, "name-" for backward.
    std::string format(DirectedEdge d) const;
    std::string format(Word const& w) const;
    std::string format(Placement p) const;
    // Accepts "name", "name-", and powers "name^k" / "name-^k" (words only).
    DirectedEdge parse_directed_edge(std::string_view token) const;
    Word         parse_word(std::string_view text) const;

    // Names of everything, with a prefix: used by gluing and renaming.
    SquareComplex with_prefix(std::string_view prefix) const;

   private:
    std::vector<std::string>                  _vertices;
    std::vector<Edge>                         _edges;
    std::vector<Square>                       _squares;
    std::unordered_map<std::string, VertexId> _vertex_index;
    std::unordered_map<std::string, EdgeId>   _edge_index;
    std::unordered_map<std::string, SquareId> _square_index;
  };

  // '.complex' files. See docs/formats.md.
  SquareComplex parse_complex(std::string_view text);
  std::string   serialize_complex(SquareComplex const& c);
  SquareComplex load_complex(std::string const& path);
  std::string   read_text_file(std::string const& path);

  // Word utilities.
  bool is_composable(SquareComplex const& c, Word const& w);
  bool is_closed(SquareComplex const& c, Word const& w);
  bool is_reduced(Word const& w);
  bool is_cyclically_reduced(Word const& w);
  Word inverse(Word const& w);
  Word power(DirectedEdge d, int k);  // k < 0 repeats d.inverse()
  Word power(Word const& w, std::size_t k);

}  // namespace sqc
