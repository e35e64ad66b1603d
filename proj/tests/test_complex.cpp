#include <doctest.h>

#include "sqc/complex.hpp"
#include "sqc/error.hpp"
#include "sqc/zcomplex.hpp"
#include "support.hpp"

using namespace sqc;

TEST_SUITE("complex") {
  TEST_CASE("shipped complexes parse with the expected sizes") {
    struct Case {
      char const* file;
      std::size_t v, e, s;
    };
    for (auto c : {Case{"X.complex", 1, 5, 6}, Case{"torus.complex", 1, 2, 1},
                   Case{"Y.complex", 4, 12, 5}, Case{"Z.complex", 4, 15, 14}}) {
      CAPTURE(c.file);
      auto x = load_complex(test::data(c.file));
      CHECK(x.number_of_vertices() == c.v);
      CHECK(x.number_of_edges() == c.e);
      CHECK(x.number_of_squares() == c.s);
    }
  }

  TEST_CASE("serialize then parse is the identity") {
    for (auto f : {"X.complex", "Y.complex", "Z.complex", "torus.complex"}) {
      auto a    = load_complex(test::data(f));
      auto text = serialize_complex(a);
      auto b    = parse_complex(text);
      CHECK(serialize_complex(b) == text);
      REQUIRE(b.number_of_squares() == a.number_of_squares());
      for (SquareId s = 0; s < a.number_of_squares(); ++s) {
        CHECK(a.square(s).name == b.square(s).name);
        CHECK(a.square(s).frame == b.square(s).frame);
      }
    }
  }

  TEST_CASE("parse errors carry line numbers") {
    auto bad = [](std::string const& text) -> std::size_t {
      try {
        parse_complex(text);
      } catch (ParseError const& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(bad("vertex o\nedge a o o q\n") == 2);
    CHECK(bad("vertex o\nedge a o p v\n") == 2);
    CHECK(bad("vertex o\nedge a o o v\nedge x o o h\nsquare s b=x r=a t=x\n")
          == 4);
    CHECK(bad("vertex o\nedge a o o v\nedge x o o h\n"
              "square s b=x r=a t=x l=a q=x\n")
          == 4);
    CHECK(bad("vertex o\nfrob\n") == 2);
    CHECK(bad("vertex o\nvertex o\n") == 2);
  }

  TEST_CASE("frames must close at every corner") {
    SquareComplex c;
    auto          p = c.add_vertex("p");
    auto          q = c.add_vertex("q");
    auto          x = c.add_edge("x", p, q, EdgeClass::horizontal);
    auto          a = c.add_edge("a", p, p, EdgeClass::vertical);
    // The bottom ends at q but the right side starts at p.
    CHECK_THROWS_WITH_AS(
        c.add_square("s", Frame{DirectedEdge(x), DirectedEdge(a),
                                DirectedEdge(x), DirectedEdge(a)}),
        doctest::Contains("SE corner"), ValidationError);
  }

  TEST_CASE("names are checked") {
    SquareComplex c;
    CHECK_THROWS_AS(c.add_vertex("a#b"), ValidationError);
    CHECK_THROWS_AS(c.add_vertex("x-"), ValidationError);
    auto o = c.add_vertex("o");
    CHECK_THROWS_AS(c.add_vertex("o"), ValidationError);
    c.add_edge("a", o, o, EdgeClass::vertical);
    CHECK_THROWS_AS(c.add_edge("a", o, o, EdgeClass::vertical),
                    ValidationError);
    CHECK_THROWS_AS(c.add_edge("b^2", o, o, EdgeClass::vertical),
                    ValidationError);
  }

  TEST_CASE("word parsing and formatting") {
    auto const& c = test::x_cover().complex();
    auto        w = c.parse_word("c^3 y- x,a");
    CHECK(w.size() == 6);
    CHECK(c.format(w) == "c c c y- x a");
    CHECK(c.parse_word("c^-2") == inverse(c.parse_word("c c")));
    CHECK(c.parse_word("") .empty());
    CHECK_THROWS_AS(c.parse_word("q"), ValidationError);
    CHECK_THROWS_AS(c.parse_word("c^z"), ValidationError);
  }

  TEST_CASE("word predicates") {
    auto const& y = load_complex(test::data("Y.complex"));
    CHECK(is_composable(y, y.parse_word("s_b s_r")));
    CHECK_FALSE(is_composable(y, y.parse_word("s_b s_b")));
    CHECK(is_closed(y, y.parse_word("s_b s_r s_t- s_l-")));
    CHECK_FALSE(is_closed(y, y.parse_word("s_b s_r")));
    auto const& x = test::x_cover().complex();
    CHECK(is_reduced(x.parse_word("c a c-")));
    CHECK_FALSE(is_reduced(x.parse_word("c a a- c")));
    CHECK(is_cyclically_reduced(x.parse_word("c a")));
    CHECK_FALSE(is_cyclically_reduced(x.parse_word("c a c-")));
    CHECK(inverse(inverse(x.parse_word("c a y-"))) == x.parse_word("c a y-"));
    CHECK(power(x.parse_word("c a"), 3).size() == 6);
  }

  TEST_CASE("property: power and inverse agree with signed powers") {
    test::Rng   rng(7);
    auto const& c = test::x_cover().complex();
    for (int t = 0; t < 200; ++t) {
      auto d = DirectedEdge(static_cast<EdgeId>(test::uniform(rng, 0, 4)),
                            test::uniform(rng, 0, 1) == 1);
      int  k = test::uniform(rng, -6, 6);
      auto w = power(d, k);
      CHECK(w.size() == static_cast<std::size_t>(std::abs(k)));
      CHECK(inverse(w) == power(d, -k));
      CHECK(c.parse_word(c.format(w)) == w);
    }
  }

  TEST_CASE("gluing builds Z from its parts") {
    auto built = build_z(load_glue(test::data("Z.glue")));
    CHECK(built.number_of_squares() == 14);
    CHECK(built.number_of_edges() == 15);
    CHECK(built.number_of_vertices() == 4);
    CHECK(find_isomorphism(built, test::z_cover().complex()).has_value());
    CHECK(built.find_square("Y.s").has_value());
    // The merged edge keeps the name of its first member.
    CHECK(built.find_edge("Y.lne").has_value());
    CHECK_FALSE(built.find_edge("X.c").has_value());
  }

  TEST_CASE("gluing rejects class and endpoint mismatches") {
    auto t = load_glue(test::data("Z.glue"));
    auto c = t;
    c.identifications.emplace_back("Y.lnw", "Tsw.h1");
    CHECK_THROWS_WITH_AS(build_z(c), doctest::Contains("class mismatch"),
                         ValidationError);
    auto d = t;
    d.identifications.emplace_back("Y.s_b", "Tsw.h1");
    CHECK_THROWS_WITH_AS(build_z(d), doctest::Contains("endpoints"),
                         ValidationError);
    auto e = t;
    e.identifications.emplace_back("Y.nope", "Tsw.h1");
    CHECK_THROWS_AS(build_z(e), ValidationError);
    CHECK_THROWS_AS(parse_glue("part Y\n", "."), ParseError);
  }

  TEST_CASE("isomorphism detects a different complex") {
    auto const& x = test::x_cover().complex();
    auto        y = load_complex(test::data("Y.complex"));
    CHECK_FALSE(find_isomorphism(x, y).has_value());
    CHECK(find_isomorphism(x, parse_complex(serialize_complex(x))).has_value());
  }
}
