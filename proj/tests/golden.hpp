#pragma once

// The renders pinned by tests/golden/.

#include <string>
#include <vector>

#include "sqc/render.hpp"
#include "sqc/zcomplex.hpp"

namespace sqc::test {

  struct GoldenRender {
    std::string file;
    std::string text;
  };

  inline std::vector<GoldenRender> golden_renders() {
    auto x = load_complex(std::string(SQC_DATA_DIR) + "/X.complex");
    UniversalCover xc(x);
    UniversalCover zc(load_complex(std::string(SQC_DATA_DIR) + "/Z.complex"));
    auto const&    z = zc.complex();

    // The north-east quadrant of the plane spanned by c and y.
    auto pi = develop_quadrant(xc, x.parse_word("y^6"), x.parse_word("c^6")).window;
    auto cross = extend_cross(zc, enumerate_crosses(zc, *z.find_square("s"))[0], 3)
                     .development.window;

    std::vector<GoldenRender> out;
    out.push_back({"pi_6x6.svg", render_window(x, pi, default_render_spec(x))});
    out.push_back({"pi_6x6.txt",
                   render_window(x, pi, default_render_spec(x, RenderFormat::txt))});
    out.push_back({"z_cross_r3.svg", render_window(z, cross, default_render_spec(z))});
    out.push_back({"z_cross_r3.txt",
                   render_window(z, cross, default_render_spec(z, RenderFormat::txt))});
    return out;
  }

}  // namespace sqc::test
