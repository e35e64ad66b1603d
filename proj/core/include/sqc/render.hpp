#pragma once

// SVG and plain-text pictures of grid windows.

#include <map>
#include <string>
#include <string_view>

#include "sqc/complex.hpp"
#include "sqc/development.hpp"

namespace sqc {

  enum class RenderFormat : std::uint8_t { svg, txt };

  std::string  to_string(RenderFormat f);
  RenderFormat parse_render_format(std::string_view s);

  // A stroke colour and 0, 1 or 2 arrowheads showing the edge's direction.
  struct EdgeStyle {
    std::string stroke = "#000000";
    int         arrows = 0;
    bool operator==(EdgeStyle const&) const = default;
  };

  struct RenderSpec {
    RenderFormat                     format = RenderFormat::svg;
    std::map<std::string, EdgeStyle> palette;  // by edge name
    int                              cell_size = 48;
    bool                             labels    = true;
    // ANSI colours in text output.
    bool color = false;
  };

  // a, b, c are white, grey and black; x and y carry one and two arrows.
  // Qualified names ("X.a") use their last component. Other names get a
  // colour from a fixed list chosen by a hash of the name.
  EdgeStyle default_style(std::string_view edge_name);

  // A spec whose palette lists every edge of c.
  RenderSpec default_render_spec(SquareComplex const& c,
                                 RenderFormat         format = RenderFormat::svg);

  // Deterministic: equal inputs give byte-identical output. Edges missing
  // from spec.palette fall back to default_style.
  std::string render_window(SquareComplex const& c,
                            GridWindow const&    w,
                            RenderSpec const&    spec);

}  // namespace sqc
