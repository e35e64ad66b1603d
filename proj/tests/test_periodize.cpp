#include <doctest.h>

#include "sqc/periodize.hpp"
#include "sqc/error.hpp"
#include "support.hpp"

using namespace sqc;

namespace {

  GridWindow random_pi_window(test::Rng& rng, int max_side) {
    int w = test::uniform(rng, 1, max_side);
    int h = test::uniform(rng, 1, max_side);
    int i = test::uniform(rng, -16, 16 - w);
    int j = test::uniform(rng, -16, 16 - h);
    return test::pi_plane().sub(i, j, w, h);
  }

  TorusCertificate some_certificate() {
    return periodize_window(test::x_cover(), test::pi_plane().sub(0, 0, 2, 2));
  }

}  // namespace

TEST_SUITE("periodize") {
  TEST_CASE("holonomy in the torus is the identity") {
    UniversalCover t(load_complex(test::data("torus.complex")));
    auto           hp = holonomy(t, t.complex().parse_word("v1"));
    CHECK(hp.is_bijection());
    for (std::size_t i = 0; i < hp.germs.size(); ++i) {
      CHECK(hp.image[i] == hp.germs[i]);
    }
  }

  TEST_CASE("holonomy of c in X") {
    auto const& c  = test::x_cover().complex();
    auto        hc = holonomy(test::x_cover(), c.parse_word("c"));
    CHECK(hc.is_bijection());
    CHECK(hc.germs.size() == 4);
    auto y = c.parse_directed_edge("y");
    CHECK(hc.cycle_length(y) == strip_period(test::x_cover(),
                                             AxisPair{c.parse_word("c"),
                                                      c.parse_word("y")},
                                             1)
                                    .period);
    CHECK(hc.compose(hc) == holonomy(test::x_cover(), c.parse_word("c c")));
    CHECK_THROWS_AS(holonomy(test::x_cover(), Word{}), ValidationError);
  }

  TEST_CASE("property: holonomy respects concatenation") {
    test::Rng   rng(21);
    auto const& c = test::x_cover().complex();
    for (int t = 0; t < 100; ++t) {
      auto u = test::random_word(c, EdgeClass::vertical, 3, rng);
      auto v = test::random_word(c, EdgeClass::vertical, 2, rng);
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      auto hu = holonomy(test::x_cover(), u);
      auto hv = holonomy(test::x_cover(), v);
      CHECK(hu.is_bijection());
      CHECK(hu.compose(hv) == holonomy(test::x_cover(), uv));
    }
  }

  TEST_CASE("a 1x1 window of the torus") {
    UniversalCover t(load_complex(test::data("torus.complex")));
    auto const&    tc = t.complex();
    auto w = develop_quadrant(t, tc.parse_word("h1"), tc.parse_word("v1")).window;
    auto cert = periodize_window(t, w);
    CHECK(cert.H == 1);
    CHECK(cert.P == 1);
    CHECK(verify_torus(t, cert).ok);
  }

  TEST_CASE("the 2x2 window of the plane at the origin") {
    auto cert = some_certificate();
    CHECK(verify_torus(test::x_cover(), cert).ok);
    CHECK(find_window_in_torus(cert, test::pi_plane().sub(0, 0, 2, 2)).has_value());
  }

  TEST_CASE("property: random windows periodize, verify and are contained") {
    test::Rng rng(22);
    for (int t = 0; t < 40; ++t) {
      auto           win = random_pi_window(rng, 4);
      PeriodizeStats st;
      auto           cert = periodize_window(test::x_cover(), win, {}, &st);
      CAPTURE(dump_window(test::x_cover().complex(), win));
      CHECK(verify_torus(test::x_cover(), cert).ok);
      CHECK(find_window_in_torus(cert, win).has_value());
      CHECK(cert.H >= win.width());
      CHECK(cert.P >= win.height());
      if (st.extension == 0) {
        CHECK(cert.P % win.height() == 0);
      }
    }
  }

  TEST_CASE("4x4 windows of the plane: P is a multiple of 4") {
    test::Rng rng(23);
    for (int t = 0; t < 20; ++t) {
      int  i    = test::uniform(rng, -16, 12);
      int  j    = test::uniform(rng, -16, 12);
      auto win  = test::pi_plane().sub(i, j, 4, 4);
      auto cert = periodize_window(test::x_cover(), win);
      CHECK(cert.P % 4 == 0);
      CHECK(verify_torus(test::x_cover(), cert).ok);
    }
  }

  TEST_CASE("property: windows of random periodic planes") {
    test::Rng   rng(24);
    auto const& c = test::x_cover().complex();
    for (int t = 0; t < 20; ++t) {
      auto v = test::random_cyclic_word(c, EdgeClass::vertical,
                                        static_cast<std::size_t>(test::uniform(rng, 1, 3)), rng);
      auto h = test::random_cyclic_word(c, EdgeClass::horizontal,
                                        static_cast<std::size_t>(test::uniform(rng, 1, 3)), rng);
      auto plane = develop_plane_window(test::x_cover(), periodic_axes(v, h, 8), 8);
      REQUIRE(plane.complete());
      int  w   = test::uniform(rng, 1, 4), hh = test::uniform(rng, 1, 4);
      auto win = plane.window.sub(test::uniform(rng, -8, 8 - w),
                                  test::uniform(rng, -8, 8 - hh), w, hh);
      auto cert = periodize_window(test::x_cover(), win);
      CHECK(verify_torus(test::x_cover(), cert).ok);
      CHECK(find_window_in_torus(cert, win).has_value());
    }
  }

  TEST_CASE("corrupted certificates fail") {
    auto const& c    = test::x_cover().complex();
    auto        cert = some_certificate();
    REQUIRE(verify_torus(test::x_cover(), cert).ok);

    auto top = cert;
    auto d   = *top.domain.B(0, top.P);
    top.domain.set_B(0, top.P, d == c.parse_directed_edge("x")
                                   ? c.parse_directed_edge("y")
                                   : c.parse_directed_edge("x"));
    auto r = verify_torus(test::x_cover(), top);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.failure.empty());

    auto cell = cert;
    auto p    = *cell.domain.cell(0, 0);
    p.orientation = mirror_horizontal(p.orientation);
    cell.domain.set_cell(0, 0, p);
    CHECK_FALSE(verify_torus(test::x_cover(), cell).ok);

    auto size = cert;
    size.H += 1;
    CHECK_FALSE(verify_torus(test::x_cover(), size).ok);
  }

  TEST_CASE("a window inconsistent with the corner table is not found") {
    auto win  = test::pi_plane().sub(0, 0, 2, 2);
    auto cert = periodize_window(test::x_cover(), win);
    auto bad  = win;
    auto p    = *bad.cell(0, 0);
    p.orientation = mirror_horizontal(p.orientation);
    bad.set_cell(0, 0, p);
    CHECK(find_window_in_torus(cert, win).has_value());
    CHECK_FALSE(find_window_in_torus(cert, bad).has_value());
  }

  TEST_CASE("cylinder certificates") {
    auto const& c = test::x_cover().complex();
    AxisPair    axes{c.parse_word("c"), c.parse_word("y")};
    for (int n = 1; n <= 6; ++n) {
      auto cert = strip_certificate(test::x_cover(), axes, n);
      CHECK(cert.P == (1 << n));
      CHECK(verify_cylinder(test::x_cover(), cert).ok);
    }
    auto bad = strip_certificate(test::x_cover(), axes, 3);
    bad.P -= 1;
    CHECK_FALSE(verify_cylinder(test::x_cover(), bad).ok);
    UniversalCover t(load_complex(test::data("torus.complex")));
    auto const&    tc = t.complex();
    CHECK(strip_certificate(t, AxisPair{tc.parse_word("v1"), tc.parse_word("h1")}, 4).P
          == 1);
  }

  TEST_CASE("inconsistent windows are rejected") {
    auto w = test::pi_plane().sub(0, 0, 2, 2);
    auto p = *w.cell(1, 1);
    p.orientation = mirror_vertical(p.orientation);
    w.set_cell(1, 1, p);
    CHECK_THROWS_AS(periodize_window(test::x_cover(), w), ValidationError);
  }
}
