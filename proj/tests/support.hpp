#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "sqc/complex.hpp"
#include "sqc/development.hpp"
#include "sqc/link.hpp"

namespace sqc::test {

  inline std::string data(std::string const& name) {
    return std::string(SQC_DATA_DIR) + "/" + name;
  }

  inline UniversalCover const& x_cover() {
    static UniversalCover c(load_complex(data("X.complex")));
    return c;
  }

  inline UniversalCover const& z_cover() {
    static UniversalCover c(load_complex(data("Z.complex")));
    return c;
  }

  // Cells [-n, n)^2 of the plane spanned by the periodic lines c and y.
  inline GridWindow const& pi_plane() {
    static GridWindow w = [] {
      auto const& c = x_cover().complex();
      return develop_plane_window(
                 x_cover(),
                 periodic_axes(c.parse_word("c"), c.parse_word("y"), 16), 16)
          .window;
    }();
    return w;
  }

  using Rng = std::mt19937_64;

  // A random freely reduced word of the given class and length. Every edge
  // of a one-vertex complex is a loop, so any such word is composable.
  inline Word random_word(SquareComplex const& c, EdgeClass cls,
                          std::size_t len, Rng& rng, bool positive = false) {
    std::vector<DirectedEdge> letters;
    for (EdgeId e = 0; e < c.number_of_edges(); ++e) {
      if (c.edge(e).cls == cls) {
        letters.emplace_back(e, false);
        if (!positive) {
          letters.emplace_back(e, true);
        }
      }
    }
    Word w;
    while (w.size() < len) {
      auto d = letters[std::uniform_int_distribution<std::size_t>(
          0, letters.size() - 1)(rng)];
      if (!w.empty() && d == w.back().inverse()) {
        continue;
      }
      w.push_back(d);
    }
    return w;
  }

  // A random word that is cyclically reduced as well.
  inline Word random_cyclic_word(SquareComplex const& c, EdgeClass cls,
                                 std::size_t len, Rng& rng) {
    for (;;) {
      auto w = random_word(c, cls, len, rng);
      if (is_cyclically_reduced(w)) {
        return w;
      }
    }
  }

  inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }

}  // namespace sqc::test
