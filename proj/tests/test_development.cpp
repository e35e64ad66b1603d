#include <doctest.h>

#include "sqc/development.hpp"
#include "sqc/error.hpp"
#include "support.hpp"

using namespace sqc;

namespace {

  Word vertical(test::Rng& rng, std::size_t len, bool cyclic = false) {
    auto const& c = test::x_cover().complex();
    return cyclic ? test::random_cyclic_word(c, EdgeClass::vertical, len, rng)
                  : test::random_word(c, EdgeClass::vertical, len, rng);
  }

  Word horizontal(test::Rng& rng, std::size_t len, bool cyclic = false) {
    auto const& c = test::x_cover().complex();
    return cyclic ? test::random_cyclic_word(c, EdgeClass::horizontal, len, rng)
                  : test::random_word(c, EdgeClass::horizontal, len, rng);
  }

}  // namespace

TEST_SUITE("development") {
  TEST_CASE("a single square") {
    auto const& c = test::x_cover().complex();
    auto r = develop_quadrant(test::x_cover(), c.parse_word("x"),
                              c.parse_word("a"));
    REQUIRE(r.complete());
    CHECK(r.cells == 1);
    CHECK(c.format(r.window.north()) == "x");
    CHECK(c.format(r.window.east()) == "b");
    CHECK(c.square(r.window.cell(0, 0)->square).name == "ax");
  }

  TEST_CASE("property: every quadrant in X develops (10^4 random cases)") {
    test::Rng rng(1);
    for (int t = 0; t < 10000; ++t) {
      auto b = horizontal(rng, static_cast<std::size_t>(test::uniform(rng, 1, 6)));
      auto l = vertical(rng, static_cast<std::size_t>(test::uniform(rng, 1, 6)));
      auto r = develop_quadrant(test::x_cover(), b, l);
      REQUIRE(r.complete());
      CHECK(r.window.south() == b);
      CHECK(r.window.west() == l);
      if (t % 100 == 0) {
        CHECK_FALSE(check_window(test::x_cover(), r.window).has_value());
      }
    }
  }

  TEST_CASE("property: development is deterministic and order independent") {
    test::Rng rng(2);
    for (int t = 0; t < 300; ++t) {
      auto b = horizontal(rng, static_cast<std::size_t>(test::uniform(rng, 1, 10)));
      auto l = vertical(rng, static_cast<std::size_t>(test::uniform(rng, 1, 10)));
      auto r1 = develop_quadrant(test::x_cover(), b, l);
      auto r2 = develop_quadrant(test::x_cover(), b, l);
      auto r3 = develop_quadrant_columns(test::x_cover(), b, l);
      CHECK(r1.window == r2.window);
      CHECK(r1.window == r3.window);
    }
  }

  TEST_CASE("property: overlapping developments agree (restriction)") {
    test::Rng rng(3);
    for (int t = 0; t < 300; ++t) {
      auto b  = horizontal(rng, 9);
      auto l  = vertical(rng, 9);
      auto big = develop_quadrant(test::x_cover(), b, l).window;
      int  w  = test::uniform(rng, 1, 9);
      int  h  = test::uniform(rng, 1, 9);
      auto small = develop_quadrant(test::x_cover(), Word(b.begin(), b.begin() + w),
                                    Word(l.begin(), l.begin() + h))
                       .window;
      CHECK(big.sub(0, 0, w, h) == small);
      // A window starting inside agrees with the big one as well.
      int i0 = test::uniform(rng, 0, 8), j0 = test::uniform(rng, 0, 8);
      int w2 = test::uniform(rng, 1, 9 - i0), h2 = test::uniform(rng, 1, 9 - j0);
      auto inner = develop_quadrant(test::x_cover(),
                                    big.sub(i0, j0, w2, h2).south(),
                                    big.sub(i0, j0, w2, h2).west())
                       .window.translated(i0, j0);
      CHECK(big.sub(i0, j0, w2, h2) == inner);
    }
  }

  TEST_CASE("property: develop_west inverts develop_row (10^3 random cases)") {
    test::Rng rng(4);
    for (int t = 0; t < 1000; ++t) {
      auto row  = horizontal(rng, static_cast<std::size_t>(test::uniform(rng, 1, 12)));
      auto left = vertical(rng, 1).front();
      auto [top, right] = develop_row(test::x_cover(), row, left);
      auto [row2, left2] = develop_west(test::x_cover(), top, right);
      CHECK(row2 == row);
      CHECK(left2 == left);
    }
  }

  TEST_CASE("property: develop_column_west inverts develop_column") {
    test::Rng rng(5);
    for (int t = 0; t < 1000; ++t) {
      auto col    = vertical(rng, static_cast<std::size_t>(test::uniform(rng, 1, 12)));
      auto bottom = horizontal(rng, 1).front();
      auto [right, top] = develop_column(test::x_cover(), col, bottom);
      auto [col2, bottom2] = develop_column_west(test::x_cover(), right, top);
      CHECK(col2 == col);
      CHECK(bottom2 == bottom);
    }
  }

  TEST_CASE("develop_row_in_place matches develop_row") {
    test::Rng rng(6);
    for (int t = 0; t < 200; ++t) {
      auto row  = horizontal(rng, 7);
      auto left = vertical(rng, 1).front();
      auto [top, right] = develop_row(test::x_cover(), row, left);
      auto r2 = develop_row_in_place(test::x_cover(), row, left);
      CHECK(row == top);
      CHECK(r2 == right);
    }
  }

  TEST_CASE("property: reflecting twice is the identity") {
    test::Rng rng(7);
    for (int t = 0; t < 200; ++t) {
      auto w = develop_quadrant(test::x_cover(), horizontal(rng, 5),
                                vertical(rng, 4))
                   .window;
      CHECK(reflect_horizontal(reflect_horizontal(w)) == w);
      CHECK(reflect_vertical(reflect_vertical(w)) == w);
      CHECK(reflect_horizontal(reflect_vertical(w))
            == reflect_vertical(reflect_horizontal(w)));
      CHECK_FALSE(check_window(test::x_cover(), reflect_horizontal(w)).has_value());
      CHECK_FALSE(check_window(test::x_cover(), reflect_vertical(w)).has_value());
    }
  }

  TEST_CASE("quadrants from outward rays") {
    test::Rng   rng(8);
    auto const& cover = test::x_cover();
    for (int t = 0; t < 100; ++t) {
      auto h = horizontal(rng, 4);
      auto v = vertical(rng, 3);
      for (auto q : {Quadrant::ne, Quadrant::nw, Quadrant::se, Quadrant::sw}) {
        CAPTURE(to_string(q));
        auto r = develop_quadrant_in(cover, q, h, v);
        REQUIRE(r.complete());
        CHECK_FALSE(check_window(cover, r.window).has_value());
        bool east  = q == Quadrant::ne || q == Quadrant::se;
        bool north = q == Quadrant::ne || q == Quadrant::nw;
        CHECK(r.window.i0() == (east ? 0 : -4));
        CHECK(r.window.j0() == (north ? 0 : -3));
        // The horizontal ray lies on the line j = 0 read away from the origin.
        Word along = r.window.row(0);
        CHECK((east ? along : inverse(along)) == h);
        Word up = r.window.column(0);
        CHECK((north ? up : inverse(up)) == v);
      }
    }
  }

  TEST_CASE("plane windows from periodic axes") {
    auto const& c    = test::x_cover().complex();
    auto        axes = periodic_axes(c.parse_word("c a"), c.parse_word("y"), 6);
    auto        r    = develop_plane_window(test::x_cover(), axes, 6);
    REQUIRE(r.complete());
    CHECK(r.window.i0() == -6);
    CHECK(r.window.width() == 12);
    CHECK_FALSE(check_window(test::x_cover(), r.window).has_value());
    auto up = r.window.column(0);
    REQUIRE(up.size() == 12);
    CHECK(c.format(Word(up.begin() + 6, up.end())) == "c a c a c a");
    auto east = r.window.row(0);
    CHECK(c.format(Word(east.begin() + 6, east.end())) == "y y y y y y");
  }

  TEST_CASE("rectangle closure") {
    UniversalCover t(load_complex(test::data("torus.complex")));
    auto const&    tc = t.complex();
    auto cl = rectangle_closes(t, tc.parse_word("v1^3"), tc.parse_word("h1^5"));
    CHECK(cl.closed);
    auto const& c = test::x_cover().complex();
    CHECK_FALSE(
        rectangle_closes(test::x_cover(), c.parse_word("c"), c.parse_word("y")).closed);
  }

  TEST_CASE("stuck developments name the missing corner") {
    UniversalCover y(load_complex(test::data("Y.complex")));
    auto const&    c = y.complex();
    auto r = develop_quadrant(y, c.parse_word("msw"), c.parse_word("lsw"));
    CHECK(r.status == DevelopmentStatus::stuck);
    CHECK(r.stuck_i == 0);
    CHECK(r.stuck_j == 0);
    CHECK(c.format(r.missing_bottom) == "msw");
    CHECK(c.format(r.missing_left) == "lsw");
    CHECK_THROWS_AS(rectangle_closes(y, c.parse_word("lsw"), c.parse_word("msw")),
                    DevelopmentError);
    CHECK_THROWS_AS(develop_quadrant(y, c.parse_word("s_b s_b"), c.parse_word("s_l")),
                    ValidationError);
  }

  TEST_CASE("cell budgets are reported separately from stuck") {
    auto const&    c = test::x_cover().complex();
    DevelopOptions opt;
    opt.cell_budget = 5;
    auto r = develop_quadrant(test::x_cover(), c.parse_word("y^3"),
                              c.parse_word("c^3"), opt);
    CHECK(r.status == DevelopmentStatus::budget_exhausted);
  }

  TEST_CASE("grid dump round trip") {
    test::Rng   rng(9);
    auto const& c = test::x_cover().complex();
    for (int t = 0; t < 50; ++t) {
      auto w = develop_quadrant(test::x_cover(), horizontal(rng, 4), vertical(rng, 3))
                   .window.translated(test::uniform(rng, -5, 5),
                                      test::uniform(rng, -5, 5));
      CHECK(parse_window(c, dump_window(c, w)) == w);
    }
    GridWindow partial(0, 0, 2, 1);
    partial.set_B(1, 0, c.parse_directed_edge("y-"));
    CHECK(parse_window(c, dump_window(c, partial)) == partial);
    CHECK_FALSE(partial.complete());
    CHECK_THROWS_AS(parse_window(c, "# sqc grid window v1\nwindow 0 0 1\n"),
                    ParseError);
  }

  TEST_CASE("paste rejects disagreement") {
    auto const& c = test::x_cover().complex();
    GridWindow  a(0, 0, 1, 1), b(0, 0, 1, 1);
    a.set_B(0, 0, c.parse_directed_edge("x"));
    b.set_B(0, 0, c.parse_directed_edge("y"));
    CHECK_THROWS_AS(a.paste(b), ValidationError);
  }
}
