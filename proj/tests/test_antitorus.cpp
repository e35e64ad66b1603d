#include <doctest.h>

#include <set>

#include "sqc/antitorus.hpp"
#include "sqc/error.hpp"
#include "support.hpp"

using namespace sqc;

namespace {

  AxisPair cy() {
    auto const& c = test::x_cover().complex();
    return {c.parse_word("c"), c.parse_word("y")};
  }

}  // namespace

TEST_SUITE("antitorus") {
  TEST_CASE("the first row is the horizontal axis") {
    auto const& c = test::x_cover().complex();
    CHECK(c.format(wn(test::x_cover(), cy(), 4, 0)) == "y y y y");
    // Row 1 is the top of the row of squares over y^4 west of c.
    auto r = develop_quadrant(test::x_cover(), c.parse_word("y^4"),
                              c.parse_word("c^3"));
    REQUIRE(r.complete());
    CHECK(wn(test::x_cover(), cy(), 4, 1) == r.window.row(1));
    CHECK(wn(test::x_cover(), cy(), 4, 3) == r.window.row(3));
  }

  TEST_CASE("strip periods are 2^n") {
    for (int n = 1; n <= 12; ++n) {
      CAPTURE(n);
      auto r = strip_period(test::x_cover(), cy(), n);
      CHECK(r.period == (1ULL << n));
      CHECK(r.word_period == (1ULL << n));
      CHECK(r.preperiod == 0);
      CHECK(r.surjective);
      CHECK(r.all_positive);
    }
  }

  TEST_CASE("strip period against a stored orbit") {
    // Independent oracle: iterate rows and store every state until one
    // repeats.
    auto const& cover = test::x_cover();
    for (int n = 1; n <= 8; ++n) {
      std::set<Word> seen;
      Word           row = wn(cover, cy(), n, 0);
      std::uint64_t  steps = 0;
      while (seen.insert(row).second) {
        develop_row_in_place(cover, row, cover.complex().parse_directed_edge("c"));
        ++steps;
      }
      CHECK(row == wn(cover, cy(), n, 0));
      CHECK(strip_period(cover, cy(), n).word_period == steps);
    }
  }

  TEST_CASE("rows are distinct") {
    for (int n = 1; n <= 8; ++n) {
      auto d = wn_distinct(test::x_cover(), cy(), n);
      CHECK(d.distinct);
      CHECK(d.expected == (1ULL << n));
      REQUIRE(d.stored_count.has_value());
      CHECK(*d.stored_count == d.expected);
    }
  }

  TEST_CASE("a torus has period 1") {
    UniversalCover t(load_complex(test::data("torus.complex")));
    auto const&    c = t.complex();
    auto r = strip_period(t, AxisPair{c.parse_word("v1"), c.parse_word("h1")}, 5);
    CHECK(r.period == 1);
  }

  TEST_CASE("axes are validated") {
    auto const& c = test::x_cover().complex();
    CHECK_THROWS_AS(validate_axes(c, AxisPair{c.parse_word("y"), c.parse_word("c")}),
                    ValidationError);
    CHECK_THROWS_AS(validate_axes(c, AxisPair{Word{}, c.parse_word("y")}),
                    ValidationError);
    CHECK_NOTHROW(validate_axes(c, cy()));
  }

  TEST_CASE("no powers of c and y commute up to 16") {
    auto s = commuting_powers_scan(test::x_cover(), cy(), 16, 1);
    CHECK(s.pairs.empty());
    CHECK(s.checked == 4 * 16 * 16);
  }

  TEST_CASE("all powers commute in a torus") {
    UniversalCover t(load_complex(test::data("torus.complex")));
    auto const&    c = t.complex();
    auto s = commuting_powers_scan(t, AxisPair{c.parse_word("v1"), c.parse_word("h1")}, 3);
    CHECK(s.pairs.size() == 36);
  }

  TEST_CASE("relation classification") {
    CHECK(classify_relation(0, 2, 0, -2) == RelationClass::trivial);
    CHECK(classify_relation(3, 0, -3, 0) == RelationClass::trivial);
    CHECK(classify_relation(1, 1, 1, -1) == RelationClass::rejected);
    CHECK(classify_relation(1, 2, -1, -1) == RelationClass::rejected);
    CHECK(classify_relation(2, 3, -2, -3) == RelationClass::rectangular);
    CHECK(exponent_sums_are_invariant(test::x_cover().complex()));
  }

  TEST_CASE("property: classification matches the exponent sums") {
    // Independent oracle: free reduction of v^k h^l v^m h^n as integers.
    for (int k = -3; k <= 3; ++k) {
      for (int l = -3; l <= 3; ++l) {
        for (int m = -3; m <= 3; ++m) {
          for (int n = -3; n <= 3; ++n) {
            auto cls = classify_relation(k, l, m, n);
            bool sums_zero = k + m == 0 && l + n == 0;
            if (!sums_zero) {
              CHECK(cls == RelationClass::rejected);
            } else if (k == 0 || l == 0) {
              CHECK(cls == RelationClass::trivial);
            } else {
              CHECK(cls == RelationClass::rectangular);
            }
          }
        }
      }
    }
  }

  TEST_CASE("relation scan in X is empty") {
    auto r = alternating_relation_scan(test::x_cover(), cy(), 8, 1);
    CHECK(r.relations.empty());
    CHECK(r.tuples == r.trivial + r.rejected + r.rectangular);
    CHECK(r.rectangular == 4 * 8 * 8);
  }

  TEST_CASE("signed powers") {
    auto const& c = test::x_cover().complex();
    CHECK(signed_power(c.parse_word("c a"), -2) == c.parse_word("a- c- a- c-"));
    CHECK(signed_power(c.parse_word("c"), 0).empty());
  }
}
