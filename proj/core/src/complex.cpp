#include "sqc/complex.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "sqc/error.hpp"

namespace sqc {

  namespace {

    std::vector<std::string_view> split_tokens(std::string_view line) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < line.size()) {
        while (i < line.size()
               && (line[i] == ' ' || line[i] == '\t' || line[i] == ','
                   || line[i] == '\r')) {
          ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t'
               && line[j] != ',' && line[j] != '\r') {
          ++j;
        }
        if (j > i) {
          out.push_back(line.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    bool valid_name(std::string_view name) {
      if (name.empty() || name.back() == '-') {
        return false;
      }
      for (char ch : name) {
        if (ch == '#' || ch == '=' || ch == '^' || ch == ' ' || ch == '\t') {
          return false;
        }
      }
      return true;
    }

    EdgeClass parse_class(std::string_view s) {
      if (s == "v") {
        return EdgeClass::vertical;
      }
      if (s == "h") {
        return EdgeClass::horizontal;
      }
      if (s == "u") {
        return EdgeClass::unclassified;
      }
      throw Error("edge class must be one of v, h, u; got '" + std::string(s)
                  + "'");
    }

  }  // namespace

  char to_char(EdgeClass c) noexcept {
    switch (c) {
      case EdgeClass::vertical:
        return 'v';
      case EdgeClass::horizontal:
        return 'h';
      default:
        return 'u';
    }
  }

  std::string to_string(EdgeClass c) {
    switch (c) {
      case EdgeClass::vertical:
        return "vertical";
      case EdgeClass::horizontal:
        return "horizontal";
      default:
        return "unclassified";
    }
  }

  Frame place(Frame const& f, Orientation o) noexcept {
    switch (o) {
      case Orientation::identity:
        return f;
      case Orientation::flip_horizontal:
        return {f.bottom.inverse(), f.left, f.top.inverse(), f.right};
      case Orientation::rotate_half:
        return {f.top.inverse(),
                f.left.inverse(),
                f.bottom.inverse(),
                f.right.inverse()};
      case Orientation::flip_vertical:
      default:
        return {f.top, f.right.inverse(), f.bottom, f.left.inverse()};
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // SquareComplex
  ////////////////////////////////////////////////////////////////////////

  VertexId SquareComplex::add_vertex(std::string name) {
    if (!valid_name(name)) {
      throw ValidationError("invalid vertex name '" + name + "'");
    }
    if (_vertex_index.contains(name)) {
      throw ValidationError("duplicate vertex '" + name + "'");
    }
    auto id = static_cast<VertexId>(_vertices.size());
    _vertex_index.emplace(name, id);
    _vertices.push_back(std::move(name));
    return id;
  }

  EdgeId SquareComplex::add_edge(std::string name,
                                 VertexId    origin,
                                 VertexId    terminus,
                                 EdgeClass   cls) {
    if (!valid_name(name)) {
      throw ValidationError("invalid edge name '" + name + "'");
    }
    if (_edge_index.contains(name)) {
      throw ValidationError("duplicate edge '" + name + "'");
    }
    if (origin >= _vertices.size() || terminus >= _vertices.size()) {
      throw ValidationError("edge '" + name + "' references unknown vertex");
    }
    auto id = static_cast<EdgeId>(_edges.size());
    _edge_index.emplace(name, id);
    _edges.push_back(Edge{std::move(name), origin, terminus, cls});
    return id;
  }

  SquareId SquareComplex::add_square(std::string name, Frame const& f) {
    if (!valid_name(name)) {
      throw ValidationError("invalid square name '" + name + "'");
    }
    if (_square_index.contains(name)) {
      throw ValidationError("duplicate square '" + name + "'");
    }
    for (DirectedEdge d : {f.bottom, f.right, f.top, f.left}) {
      if (d.edge() >= _edges.size()) {
        throw ValidationError("square '" + name + "' references unknown edge");
      }
    }
    auto fail = [&](char const* corner) {
      throw ValidationError("square '" + name + "': frame does not close at "
                            + corner + " corner");
    };
    if (origin(f.bottom) != origin(f.left)) {
      fail("SW");
    }
    if (terminus(f.bottom) != origin(f.right)) {
      fail("SE");
    }
    if (terminus(f.left) != origin(f.top)) {
      fail("NW");
    }
    if (terminus(f.top) != terminus(f.right)) {
      fail("NE");
    }
    auto id = static_cast<SquareId>(_squares.size());
    _square_index.emplace(name, id);
    _squares.push_back(Square{std::move(name), f});
    return id;
  }

  void SquareComplex::set_edge_class(EdgeId e, EdgeClass cls) {
    _edges.at(e).cls = cls;
  }

  std::optional<VertexId> SquareComplex::find_vertex(
      std::string_view name) const {
    auto it = _vertex_index.find(std::string(name));
    if (it == _vertex_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<EdgeId> SquareComplex::find_edge(std::string_view name) const {
    auto it = _edge_index.find(std::string(name));
    if (it == _edge_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<SquareId> SquareComplex::find_square(
      std::string_view name) const {
    auto it = _square_index.find(std::string(name));
    if (it == _square_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::string SquareComplex::format(DirectedEdge d) const {
    std::string s = _edges.at(d.edge()).name;
    if (d.reversed()) {
      s += '-';
    }
    return s;
  }

  std::string SquareComplex::format(Word const& w) const {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        s += ' ';
      }
      s += format(w[i]);
    }
    return s;
  }

  std::string SquareComplex::format(Placement p) const {
    return _squares.at(p.square).name + "@"
           + std::to_string(static_cast<int>(p.orientation));
  }

  DirectedEdge SquareComplex::parse_directed_edge(std::string_view tok) const {
    bool reversed = false;
    if (!tok.empty() && tok.back() == '-') {
      reversed = true;
      tok.remove_suffix(1);
    }
    auto e = find_edge(tok);
    if (!e) {
      throw ValidationError("undeclared edge '" + std::string(tok) + "'");
    }
    return DirectedEdge(*e, reversed);
  }

  Word SquareComplex::parse_word(std::string_view text) const {
    Word w;
    for (auto tok : split_tokens(text)) {
      int  k     = 1;
      auto caret = tok.find('^');
      if (caret != std::string_view::npos) {
        auto exp = tok.substr(caret + 1);
        auto [p, ec]
            = std::from_chars(exp.data(), exp.data() + exp.size(), k);
        if (ec != std::errc() || p != exp.data() + exp.size()) {
          throw ValidationError("bad exponent in '" + std::string(tok) + "'");
        }
        tok = tok.substr(0, caret);
      }
      DirectedEdge d = parse_directed_edge(tok);
      if (k < 0) {
        d = d.inverse();
        k = -k;
      }
      w.insert(w.end(), static_cast<std::size_t>(k), d);
    }
    return w;
  }

  SquareComplex SquareComplex::with_prefix(std::string_view prefix) const {
    SquareComplex out;
    std::string   p(prefix);
    for (auto const& v : _vertices) {
      out.add_vertex(p + v);
    }
    for (auto const& e : _edges) {
      out.add_edge(p + e.name, e.origin, e.terminus, e.cls);
    }
    for (auto const& s : _squares) {
      out.add_square(p + s.name, s.frame);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  SquareComplex parse_complex(std::string_view text) {
    SquareComplex c;
    std::size_t   line_no = 0;
    std::size_t   pos     = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      pos                   = end + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto tok = split_tokens(line);
      if (tok.empty()) {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      try {
        if (tok[0] == "vertex") {
          if (tok.size() != 2) {
            throw ParseError(line_no, "expected 'vertex <name>'");
          }
          c.add_vertex(std::string(tok[1]));
        } else if (tok[0] == "edge") {
          if (tok.size() != 5) {
            throw ParseError(
                line_no, "expected 'edge <name> <origin> <terminus> <v|h>'");
          }
          auto o = c.find_vertex(tok[2]);
          auto t = c.find_vertex(tok[3]);
          if (!o || !t) {
            throw ParseError(line_no,
                             "undeclared vertex '"
                                 + std::string(!o ? tok[2] : tok[3]) + "'");
          }
          c.add_edge(std::string(tok[1]), *o, *t, parse_class(tok[4]));
        } else if (tok[0] == "square") {
          if (tok.size() != 6) {
            throw ParseError(line_no,
                             "expected 'square <name> b=.. r=.. t=.. l=..'");
          }
          std::optional<DirectedEdge> side[4];  // b r t l
          for (std::size_t i = 2; i < 6; ++i) {
            auto eq = tok[i].find('=');
            if (eq != 1) {
              throw ParseError(line_no,
                               "bad side '" + std::string(tok[i]) + "'");
            }
            int slot = std::string_view("brtl").find(tok[i][0]);
            if (slot < 0 || side[slot]) {
              throw ParseError(line_no,
                               "bad or repeated side '" + std::string(tok[i])
                                   + "'");
            }
            side[slot] = c.parse_directed_edge(tok[i].substr(2));
          }
          c.add_square(std::string(tok[1]),
                       Frame{*side[0], *side[1], *side[2], *side[3]});
        } else {
          throw ParseError(line_no,
                           "unknown directive '" + std::string(tok[0]) + "'");
        }
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(line_no, e.what());
      }
      if (end == text.size()) {
        break;
      }
    }
    return c;
  }

  std::string serialize_complex(SquareComplex const& c) {
    std::ostringstream out;
    for (std::size_t v = 0; v < c.number_of_vertices(); ++v) {
      out << "vertex " << c.vertex_name(static_cast<VertexId>(v)) << '\n';
    }
    for (auto const& e : c.edges()) {
      out << "edge " << e.name << ' ' << c.vertex_name(e.origin) << ' '
          << c.vertex_name(e.terminus) << ' ' << to_char(e.cls) << '\n';
    }
    for (auto const& s : c.squares()) {
      out << "square " << s.name << " b=" << c.format(s.frame.bottom)
          << " r=" << c.format(s.frame.right) << " t=" << c.format(s.frame.top)
          << " l=" << c.format(s.frame.left) << '\n';
    }
    return out.str();
  }

  std::string read_text_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw FileError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  SquareComplex load_complex(std::string const& path) {
    try {
      return parse_complex(read_text_file(path));
    } catch (ParseError const& e) {
      throw ParseError(e.line(), path + ": " + e.message());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  bool is_composable(SquareComplex const& c, Word const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (c.terminus(w[i - 1]) != c.origin(w[i])) {
        return false;
      }
    }
    return true;
  }

  bool is_closed(SquareComplex const& c, Word const& w) {
    return !w.empty() && is_composable(c, w)
           && c.terminus(w.back()) == c.origin(w.front());
  }

  bool is_reduced(Word const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1].inverse()) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclically_reduced(Word const& w) {
    return is_reduced(w)
           && (w.size() < 2 || w.front() != w.back().inverse());
  }

  Word inverse(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(it->inverse());
    }
    return out;
  }

  Word power(DirectedEdge d, int k) {
    if (k < 0) {
      return Word(static_cast<std::size_t>(-k), d.inverse());
    }
    return Word(static_cast<std::size_t>(k), d);
  }

  Word power(Word const& w, std::size_t k) {
    Word out;
    out.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

}  // namespace sqc
