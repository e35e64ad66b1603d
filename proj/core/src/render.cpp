#include "sqc/render.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>

#include "sqc/error.hpp"

namespace sqc {

  std::string to_string(RenderFormat f) {
    return f == RenderFormat::svg ? "svg" : "txt";
  }

  RenderFormat parse_render_format(std::string_view s) {
    if (s == "svg") {
      return RenderFormat::svg;
    }
    if (s == "txt") {
      return RenderFormat::txt;
    }
    throw ValidationError("unknown render format '" + std::string(s)
                          + "' (expected svg or txt)");
  }

  EdgeStyle default_style(std::string_view name) {
    auto dot = name.rfind('.');
    auto key = dot == std::string_view::npos ? name : name.substr(dot + 1);
    if (key == "a") {
      return {"#ffffff", 0};
    }
    if (key == "b") {
      return {"#8c8c8c", 0};
    }
    if (key == "c") {
      return {"#000000", 0};
    }
    if (key == "x") {
      return {"#000000", 1};
    }
    if (key == "y") {
      return {"#000000", 2};
    }
    static constexpr std::array<char const*, 8> colours = {
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
        "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
    // FNV-1a, so the choice does not depend on the standard library.
    std::uint32_t h = 2166136261U;
    for (char ch : name) {
      h = (h ^ static_cast<unsigned char>(ch)) * 16777619U;
    }
    return {colours[h % colours.size()], 0};
  }

  RenderSpec default_render_spec(SquareComplex const& c, RenderFormat format) {
    RenderSpec spec;
    spec.format = format;
    for (auto const& e : c.edges()) {
      spec.palette.emplace(e.name, default_style(e.name));
    }
    return spec;
  }

  namespace {

    EdgeStyle style_of(SquareComplex const& c,
                       RenderSpec const&    spec,
                       DirectedEdge         d) {
      auto const& name = c.edge(d.edge()).name;
      auto        it   = spec.palette.find(name);
      return it != spec.palette.end() ? it->second : default_style(name);
    }

    class Svg {
     public:
      Svg(SquareComplex const& c, GridWindow const& w, RenderSpec const& spec)
          : _c(c), _w(w), _spec(spec), _cs(spec.cell_size) {}

      std::string run() {
        int width  = _w.width() * _cs + 2 * margin;
        int height = _w.height() * _cs + 2 * margin;
        _out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
             << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
             << height << "\">\n";
        _out << "<style>.cell{fill:#e8e4d8;stroke:none}"
                ".outline{stroke:#000000;stroke-width:5}"
                ".edge{stroke-width:3;stroke-linecap:square}"
                ".missing{stroke:#bbbbbb;stroke-width:1;stroke-dasharray:4 3}"
                ".tick{stroke-width:2}"
                ".label{font:11px monospace;text-anchor:middle;"
                "dominant-baseline:middle;fill:#333333}</style>\n";
        cells();
        for (int j = _w.j0(); j <= _w.j0() + _w.height(); ++j) {
          for (int i = _w.i0(); i < _w.i0() + _w.width(); ++i) {
            segment(x(i), y(j), x(i + 1), y(j), _w.B(i, j));
          }
        }
        for (int j = _w.j0(); j < _w.j0() + _w.height(); ++j) {
          for (int i = _w.i0(); i <= _w.i0() + _w.width(); ++i) {
            segment(x(i), y(j), x(i), y(j + 1), _w.L(i, j));
          }
        }
        _out << "</svg>\n";
        return _out.str();
      }

     private:
      static constexpr int margin = 16;

      int x(int i) const {
        return margin + (i - _w.i0()) * _cs;
      }
      int y(int j) const {
        return margin + (_w.j0() + _w.height() - j) * _cs;
      }

      void cells() {
        for (int j = _w.j0() + _w.height() - 1; j >= _w.j0(); --j) {
          for (int i = _w.i0(); i < _w.i0() + _w.width(); ++i) {
            _out << "<rect class=\"cell\" x=\"" << x(i) << "\" y=\"" << y(j + 1)
                 << "\" width=\"" << _cs << "\" height=\"" << _cs << "\"/>\n";
            auto const& p = _w.cell(i, j);
            if (_spec.labels && p) {
              _out << "<text class=\"label\" x=\"" << x(i) + _cs / 2
                   << "\" y=\"" << y(j + 1) + _cs / 2 << "\">"
                   << _c.format(*p) << "</text>\n";
            }
          }
        }
      }

      void line(char const* cls, double x1, double y1, double x2, double y2,
                std::string const& stroke) {
        _out << "<line class=\"" << cls << "\" x1=\"" << x1 << "\" y1=\"" << y1
             << "\" x2=\"" << x2 << "\" y2=\"" << y2 << '"';
        if (!stroke.empty()) {
          _out << " stroke=\"" << stroke << '"';
        }
        _out << "/>\n";
      }

      // The segment runs from (x1, y1) to (x2, y2) in the reading direction
      // of its label.
      void segment(int x1, int y1, int x2, int y2,
                   std::optional<DirectedEdge> const& d) {
        if (!d) {
          line("missing", x1, y1, x2, y2, "");
          return;
        }
        auto st = style_of(_c, _spec, *d);
        if (st.stroke == "#ffffff") {
          line("outline", x1, y1, x2, y2, "");
        }
        line("edge", x1, y1, x2, y2, st.stroke);
        if (st.arrows == 0) {
          return;
        }
        // Unit vector along the underlying edge.
        double ux = (x2 - x1) / static_cast<double>(_cs);
        double uy = (y2 - y1) / static_cast<double>(_cs);
        if (d->reversed()) {
          ux = -ux;
          uy = -uy;
        }
        double mx = (x1 + x2) / 2.0, my = (y1 + y2) / 2.0;
        double const len = 6;
        for (int k = 0; k < st.arrows; ++k) {
          double tx = mx + ux * (4 * k - 2 * (st.arrows - 1) + 3);
          double ty = my + uy * (4 * k - 2 * (st.arrows - 1) + 3);
          // Two strokes back from the tip, at 45 degrees to the edge.
          line("tick", tx, ty, tx - len * (ux + uy), ty - len * (uy - ux),
               st.stroke == "#ffffff" ? "#000000" : st.stroke);
          line("tick", tx, ty, tx - len * (ux - uy), ty - len * (uy + ux),
               st.stroke == "#ffffff" ? "#000000" : st.stroke);
        }
      }

      SquareComplex const& _c;
      GridWindow const&    _w;
      RenderSpec const&    _spec;
      int                  _cs;
      std::ostringstream   _out;
    };

    std::string centred(std::string const& s, std::size_t width, char fill) {
      if (s.size() >= width) {
        return s;
      }
      std::size_t left = (width - s.size()) / 2;
      return std::string(left, fill) + s
             + std::string(width - s.size() - left, fill);
    }

    // ANSI foreground from a hex colour, mapped to the 8 basic colours.
    std::string ansi(std::string const& hex) {
      if (hex.size() != 7) {
        return "";
      }
      auto channel = [&](int k) {
        return std::stoi(hex.substr(1 + 2 * k, 2), nullptr, 16) >= 128 ? 1 : 0;
      };
      int code = 30 + channel(0) + 2 * channel(1) + 4 * channel(2);
      if (hex == "#8c8c8c") {
        return "\x1b[90m";
      }
      return "\x1b[" + std::to_string(code == 30 ? 39 : code) + "m";
    }

    std::string render_text(SquareComplex const& c,
                            GridWindow const&    w,
                            RenderSpec const&    spec) {
      auto label = [&](std::optional<DirectedEdge> const& d) {
        return d ? c.format(*d) : std::string(".");
      };
      std::size_t lw = 1, cw = 3;
      for (int j = w.j0(); j <= w.j0() + w.height(); ++j) {
        for (int i = w.i0(); i <= w.i0() + w.width(); ++i) {
          if (i < w.i0() + w.width()) {
            cw = std::max(cw, label(w.B(i, j)).size() + 2);
          }
          if (j < w.j0() + w.height()) {
            lw = std::max(lw, label(w.L(i, j)).size());
            if (i < w.i0() + w.width() && w.cell(i, j)) {
              cw = std::max(cw, c.format(*w.cell(i, j)).size() + 2);
            }
          }
        }
      }
      auto paint = [&](std::string text, std::optional<DirectedEdge> const& d) {
        if (!spec.color || !d) {
          return text;
        }
        return ansi(style_of(c, spec, *d).stroke) + text + "\x1b[0m";
      };
      std::ostringstream out;
      for (int j = w.j0() + w.height(); j >= w.j0(); --j) {
        std::string row;
        for (int i = w.i0(); i < w.i0() + w.width(); ++i) {
          row += centred("+", lw, ' ');
          row += paint(centred(label(w.B(i, j)), cw, '-'), w.B(i, j));
        }
        row += centred("+", lw, ' ');
        out << row << '\n';
        if (j == w.j0()) {
          break;
        }
        int cj = j - 1;
        row.clear();
        for (int i = w.i0(); i <= w.i0() + w.width(); ++i) {
          row += paint(centred(label(w.L(i, cj)), lw, ' '), w.L(i, cj));
          if (i < w.i0() + w.width()) {
            auto const& p = w.cell(i, cj);
            row += centred(p && spec.labels ? c.format(*p) : "", cw, ' ');
          }
        }
        out << row << '\n';
      }
      return out.str();
    }

  }  // namespace

  std::string render_window(SquareComplex const& c,
                            GridWindow const&    w,
                            RenderSpec const&    spec) {
    if (spec.format == RenderFormat::txt) {
      return render_text(c, w, spec);
    }
    return Svg(c, w, spec).run();
  }

}  // namespace sqc
