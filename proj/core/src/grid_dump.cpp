#include <charconv>
#include <sstream>

#include "sqc/development.hpp"
#include "sqc/error.hpp"

namespace sqc {

  namespace {

    constexpr std::string_view header = "# sqc grid window v1";

    int to_int(std::string const& s, std::size_t line) {
      int  v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size()) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
      }
      return v;
    }

    Placement parse_placement(SquareComplex const& c,
                              std::string const&   tok,
                              std::size_t          line) {
      auto at = tok.rfind('@');
      if (at == std::string::npos) {
        throw ParseError(line, "expected square@orientation, got '" + tok + "'");
      }
      auto s = c.find_square(tok.substr(0, at));
      int  o = to_int(tok.substr(at + 1), line);
      if (!s || o < 0 || o >= orientation_count) {
        throw ParseError(line, "bad placement '" + tok + "'");
      }
      return Placement{*s, static_cast<Orientation>(o)};
    }

  }  // namespace

  std::string dump_window(SquareComplex const& c, GridWindow const& w) {
    std::ostringstream out;
    out << header << '\n';
    out << "window " << w.i0() << ' ' << w.j0() << ' ' << w.width() << ' '
        << w.height() << '\n';
    auto edge = [&](std::optional<DirectedEdge> const& d) {
      return d ? c.format(*d) : std::string(".");
    };
    for (int j = w.j0(); j <= w.j0() + w.height(); ++j) {
      out << "H " << j;
      for (int i = w.i0(); i < w.i0() + w.width(); ++i) {
        out << ' ' << edge(w.B(i, j));
      }
      out << '\n';
    }
    for (int j = w.j0(); j < w.j0() + w.height(); ++j) {
      out << "V " << j;
      for (int i = w.i0(); i <= w.i0() + w.width(); ++i) {
        out << ' ' << edge(w.L(i, j));
      }
      out << '\n';
    }
    for (int j = w.j0(); j < w.j0() + w.height(); ++j) {
      out << "C " << j;
      for (int i = w.i0(); i < w.i0() + w.width(); ++i) {
        auto const& p = w.cell(i, j);
        out << ' ' << (p ? c.format(*p) : std::string("."));
      }
      out << '\n';
    }
    return out.str();
  }

  GridWindow parse_window(SquareComplex const& c, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        line_no = 0;
    std::optional<GridWindow> w;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream       ls(line);
      std::vector<std::string> tok;
      for (std::string t; ls >> t;) {
        tok.push_back(t);
      }
      if (tok.empty()) {
        continue;
      }
      if (tok[0] == "window") {
        if (tok.size() != 5 || w) {
          throw ParseError(line_no, "expected one 'window i0 j0 w h' line");
        }
        w.emplace(to_int(tok[1], line_no), to_int(tok[2], line_no),
                  to_int(tok[3], line_no), to_int(tok[4], line_no));
        continue;
      }
      if (!w) {
        throw ParseError(line_no, "'window' line must come first");
      }
      if (tok.size() < 2 || tok[0].size() != 1) {
        throw ParseError(line_no, "unknown line");
      }
      int  j      = to_int(tok[1], line_no);
      char kind   = tok[0][0];
      int  expect = kind == 'V' ? w->width() + 1 : w->width();
      if (static_cast<int>(tok.size()) - 2 != expect) {
        throw ParseError(line_no, "expected " + std::to_string(expect)
                                      + " entries");
      }
      try {
        for (int k = 0; k < expect; ++k) {
          auto const& t = tok[2 + k];
          int         i = w->i0() + k;
          if (t == ".") {
            continue;
          }
          switch (kind) {
            case 'H':
              w->set_B(i, j, c.parse_directed_edge(t));
              break;
            case 'V':
              w->set_L(i, j, c.parse_directed_edge(t));
              break;
            case 'C':
              w->set_cell(i, j, parse_placement(c, t, line_no));
              break;
            default:
              throw ParseError(line_no, "unknown line kind '" + tok[0] + "'");
          }
        }
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(line_no, e.what());
      }
    }
    if (!w) {
      throw ParseError(0, "missing 'window' line");
    }
    return *w;
  }

}  // namespace sqc
