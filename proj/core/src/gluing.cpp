#include <filesystem>
#include <numeric>
#include <sstream>

#include "sqc/error.hpp"
#include "sqc/zcomplex.hpp"

namespace sqc {

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      // The smaller index becomes the representative.
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          _parent[std::max(a, b)] = std::min(a, b);
        }
      }

     private:
      std::vector<std::size_t> _parent;
    };

    bool ends_with(std::string const& s, std::string_view suffix) {
      return s.size() >= suffix.size()
             && s.compare(s.size() - suffix.size(), suffix.size(), suffix)
                    == 0;
    }

  }  // namespace

  GlueTable parse_glue(std::string_view text, std::string const& base_dir) {
    GlueTable          t;
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream       ls(line);
      std::vector<std::string> tok;
      for (std::string s; ls >> s;) {
        tok.push_back(s);
      }
      if (tok.empty()) {
        continue;
      }
      if (tok[0] == "part" && tok.size() == 3) {
        for (auto const& p : t.parts) {
          if (p.alias == tok[1]) {
            throw ParseError(line_no, "duplicate part alias '" + tok[1] + "'");
          }
        }
        auto path = std::filesystem::path(base_dir) / tok[2];
        try {
          t.parts.push_back({tok[1], load_complex(path.string())});
        } catch (ParseError const& e) {
          throw ParseError(line_no, "in part '" + tok[1] + "': " + e.what());
        }
      } else if (tok[0] == "glue" && tok.size() == 3) {
        t.identifications.emplace_back(tok[1], tok[2]);
      } else {
        throw ParseError(line_no, "expected 'part <alias> <file>' or "
                                  "'glue <alias.edge> <alias.edge>'");
      }
    }
    return t;
  }

  GlueTable load_glue(std::string const& path) {
    auto dir = std::filesystem::path(path).parent_path().string();
    try {
      return parse_glue(read_text_file(path), dir.empty() ? "." : dir);
    } catch (ParseError const& e) {
      throw ParseError(e.line(), path + ": " + e.message());
    }
  }

  SquareComplex build_z(GlueTable const& table) {
    // Disjoint union with qualified names.
    SquareComplex all;
    for (auto const& part : table.parts) {
      auto q = part.complex.with_prefix(part.alias + ".");
      auto v0 = static_cast<VertexId>(all.number_of_vertices());
      auto e0 = static_cast<EdgeId>(all.number_of_edges());
      for (VertexId v = 0; v < q.number_of_vertices(); ++v) {
        all.add_vertex(q.vertex_name(v));
      }
      for (auto const& e : q.edges()) {
        all.add_edge(e.name, v0 + e.origin, v0 + e.terminus, e.cls);
      }
      auto shift = [e0](DirectedEdge d) {
        return DirectedEdge(e0 + d.edge(), d.reversed());
      };
      for (auto const& s : q.squares()) {
        all.add_square(s.name, Frame{shift(s.frame.bottom),
                                     shift(s.frame.right),
                                     shift(s.frame.top),
                                     shift(s.frame.left)});
      }
    }
    UnionFind vertices(all.number_of_vertices());
    UnionFind edges(all.number_of_edges());
    for (auto const& [a, b] : table.identifications) {
      auto ea = all.find_edge(a);
      auto eb = all.find_edge(b);
      if (!ea || !eb) {
        throw ValidationError("gluing names unknown edge '" + (!ea ? a : b)
                              + "'");
      }
      auto const& x = all.edge(*ea);
      auto const& y = all.edge(*eb);
      if (x.cls != y.cls) {
        throw ValidationError("gluing " + a + " (" + to_string(x.cls) + ") to "
                              + b + " (" + to_string(y.cls)
                              + "): class mismatch");
      }
      if ((x.origin == x.terminus) != (y.origin == y.terminus)) {
        throw ValidationError("gluing " + a + " to " + b
                              + ": endpoints mismatch (loop against arc)");
      }
      edges.unite(*ea, *eb);
      vertices.unite(x.origin, y.origin);
      vertices.unite(x.terminus, y.terminus);
    }
    // Quotient: representatives in order of first appearance.
    SquareComplex         out;
    std::vector<VertexId> vnew(all.number_of_vertices());
    for (VertexId v = 0; v < all.number_of_vertices(); ++v) {
      auto r = static_cast<VertexId>(vertices.find(v));
      vnew[v] = r == v ? out.add_vertex(all.vertex_name(v)) : vnew[r];
    }
    std::vector<EdgeId> enew(all.number_of_edges());
    for (EdgeId e = 0; e < all.number_of_edges(); ++e) {
      auto        r = static_cast<EdgeId>(edges.find(e));
      auto const& x = all.edge(e);
      if (r == e) {
        enew[e] = out.add_edge(x.name, vnew[x.origin], vnew[x.terminus], x.cls);
      } else {
        enew[e] = enew[r];
      }
    }
    auto map = [&](DirectedEdge d) {
      return DirectedEdge(enew[d.edge()], d.reversed());
    };
    for (auto const& s : all.squares()) {
      out.add_square(s.name, Frame{map(s.frame.bottom),
                                   map(s.frame.right),
                                   map(s.frame.top),
                                   map(s.frame.left)});
    }
    return out;
  }

  SquareComplex load_any(std::string const& path) {
    if (ends_with(path, ".glue")) {
      return build_z(load_glue(path));
    }
    return load_complex(path);
  }

}  // namespace sqc
