// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "sqc/antitorus.hpp"
#include "sqc/error.hpp"
#include "sqc/development.hpp"
#include "sqc/link.hpp"
#include "sqc/periodize.hpp"
#include "sqc/zcomplex.hpp"
#include "golden.hpp"

namespace {

  using namespace sqc;

  std::string data(std::string const& f) {
    return std::string(SQC_DATA_DIR) + "/" + f;
  }

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
      }
    }
    void note(std::string const& s) {
      detail += (detail.empty() ? "" : "; ") + s;
    }
  };

  UniversalCover const& X() {
    static UniversalCover c(load_complex(data("X.complex")));
    return c;
  }
  UniversalCover const& Z() {
    static UniversalCover c(load_complex(data("Z.complex")));
    return c;
  }
  AxisPair cy() {
    return {X().complex().parse_word("c"), X().complex().parse_word("y")};
  }
  SquareId s_of_z() {
    return *Z().complex().find_square("s");
  }

  Outcome structure() {
    Outcome o;
    auto const& x  = X().complex();
    o.require(check_vh(x).pass, "X is VH");
    o.require(X().complete(), "X is complete");
    auto bp = check_complete_bipartite(x, 0);
    o.require(bp.pass && bp.horizontal_germs == 4 && bp.vertical_germs == 6
                  && bp.arcs == 24,
              "link of X is K(4,6) with 24 arcs");
    for (auto f : {"X.complex", "Y.complex", "Z.complex", "torus.complex"}) {
      o.require(check_npc(load_complex(data(f))).pass, std::string("NPC ") + f);
    }
    o.note("link K(" + std::to_string(bp.horizontal_germs) + ","
           + std::to_string(bp.vertical_germs) + "), "
           + std::to_string(bp.arcs) + " arcs; NPC holds for X, Y, Z, T2");
    return o;
  }

  Outcome periods() {
    Outcome o;
    double  ms16 = 0;
    for (int n = 1; n <= 16; ++n) {
      auto r = strip_period(X(), cy(), n);
      o.require(r.period == (1ULL << n) && r.word_period == (1ULL << n),
                "period 2^" + std::to_string(n));
      o.require(r.surjective && r.all_positive,
                "surjectivity at n = " + std::to_string(n));
      if (n == 16) {
        ms16 = r.ms;
      }
    }
    o.require(ms16 < 10'000, "n = 16 within 10 s");
    o.note("period 2^n and surjective for n = 1..16; n = 16 in "
           + std::to_string(static_cast<int>(ms16)) + " ms");
    return o;
  }

  Outcome distinctness() {
    Outcome o;
    for (int n = 1; n <= 12; ++n) {
      auto d = wn_distinct(X(), cy(), n);
      o.require(d.distinct, "distinct at n = " + std::to_string(n));
      o.require(d.stored_count && *d.stored_count == d.expected
                    && d.period == d.expected,
                "stored set agrees with cycle detection at n = "
                    + std::to_string(n));
    }
    o.note("first 2^n rows distinct for n = 1..12; stored set = period = 2^n");
    return o;
  }

  Outcome no_commuting() {
    Outcome o;
    auto    c = commuting_powers_scan(X(), cy(), 64);
    auto    r = alternating_relation_scan(X(), cy(), 64);
    o.require(c.pairs.empty(), "commuting scan empty");
    o.require(r.relations.empty(), "relation scan empty");
    o.note(std::to_string(c.checked) + " commutator rectangles, "
           + std::to_string(r.tuples) + " relation tuples ("
           + std::to_string(r.rectangular) + " as rectangles); none close");
    return o;
  }

  Outcome crosses() {
    Outcome     o;
    auto const& z  = Z().complex();
    auto        cr = enumerate_crosses(Z(), s_of_z());
    o.require(cr.size() == 16, "exactly 16 crosses");
    int complete = 0;
    for (auto const& x : cr) {
      auto e = extend_cross(Z(), x, 32);
      complete += e.development.complete() && e.unique ? 1 : 0;
    }
    o.require(complete == 16, "all 16 extend uniquely to radius 32");
    // NE quarter of the first cross against the north-east quadrant of the
    // plane of c and y in X, compared by names.
    if (!cr.empty()) {
      auto const& x  = X().complex();
      auto        ne = extend_cross(Z(), cr.front(), 32).development.window;
      auto        pi = develop_quadrant(X(), x.parse_word("y^32"),
                                        x.parse_word("c^32"))
                    .window;
      int  diffs = 0;
      for (int j = 0; j < 32; ++j) {
        for (int i = 0; i < 32; ++i) {
          diffs += z.format(*ne.cell(i + 1, j + 1)) != x.format(*pi.cell(i, j));
          diffs += z.format(*ne.B(i + 1, j + 1)) != x.format(*pi.B(i, j));
          diffs += z.format(*ne.L(i + 1, j + 1)) != x.format(*pi.L(i, j));
        }
      }
      o.require(diffs == 0, "NE quarter equals the c/y plane");
      o.note(std::to_string(cr.size()) + " crosses, " + std::to_string(complete)
             + " complete at radius 32, NE quarter 32x32 differs in "
             + std::to_string(diffs) + " entries");
    }
    return o;
  }

  Outcome no_periodic() {
    Outcome o;
    auto    cert = certify_no_periodic_plane(Z(), s_of_z(), 32);
    o.require(cert.entries.size() == 4096, "4096 witnesses");
    o.require(cert.counterexamples.empty(), "no closing rectangle");
    std::mt19937_64 rng(2024);
    int             replayed = 0;
    for (int t = 0; t < 10 && !cert.entries.empty(); ++t) {
      auto const& e = cert.entries[rng() % cert.entries.size()];
      replayed += replay_witness(Z(), cert, e) ? 1 : 0;
    }
    o.require(replayed == 10, "10 random witnesses replay");
    UniversalCover zc(build_z(load_glue(data("Z_control.glue"))));
    auto control = certify_no_periodic_plane(zc, *zc.complex().find_square("Y.s"), 1);
    bool at11 = !control.counterexamples.empty()
                && control.counterexamples.front().k == 1
                && control.counterexamples.front().l == 1;
    o.require(at11, "control closes at (1,1)");
    o.note(std::to_string(cert.entries.size()) + " witnesses, "
           + std::to_string(cert.counterexamples.size()) + " counterexamples, "
           + std::to_string(replayed) + "/10 replayed, control closes at (1,1)");
    return o;
  }

  Outcome census() {
    Outcome o;
    auto    cr = enumerate_crosses(Z(), s_of_z());
    int     stable = -1;
    std::string counts;
    for (int n = 1; n <= 8; ++n) {
      auto r  = bounded_plane_census(Z(), s_of_z(), n, cr);
      bool ok = r.count() == 16 && r.all_matched() && !r.budget_exhausted;
      counts += (counts.empty() ? "" : ",") + std::to_string(r.count());
      if (ok && stable < 0) {
        stable = n;
      }
      if (!ok) {
        stable = -1;
      }
    }
    o.require(stable >= 1, "count stabilizes at 16 by N = 8");
    o.note("counts N=1..8: " + counts + "; stable at 16 (all matched) from N = "
           + std::to_string(stable) + "; windows only, not full planes");
    return o;
  }

  Outcome periodization() {
    Outcome     o;
    auto const& x = X().complex();
    auto        pi = develop_plane_window(X(), periodic_axes(x.parse_word("c"),
                                                             x.parse_word("y"), 16),
                                          16)
                  .window;
    std::mt19937_64 rng(99);
    auto uni = [&](int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    int ok_pi = 0, ok_rand = 0;
    auto run = [&](GridWindow const& w) {
      try {
        auto cert = periodize_window(X(), w);
        return verify_torus(X(), cert).ok && find_window_in_torus(cert, w).has_value();
      } catch (Error const&) {
        return false;
      }
    };
    for (int t = 0; t < 50; ++t) {
      int w = uni(1, 4), h = uni(1, 4);
      ok_pi += run(pi.sub(uni(-16, 16 - w), uni(-16, 16 - h), w, h)) ? 1 : 0;
    }
    auto random_loop = [&](EdgeClass cls) {
      std::vector<DirectedEdge> letters;
      for (EdgeId e = 0; e < x.number_of_edges(); ++e) {
        if (x.edge(e).cls == cls) {
          letters.emplace_back(e, false);
          letters.emplace_back(e, true);
        }
      }
      for (;;) {
        Word w(static_cast<std::size_t>(uni(1, 3)));
        for (auto& d : w) {
          d = letters[static_cast<std::size_t>(uni(0, static_cast<int>(letters.size()) - 1))];
        }
        if (is_cyclically_reduced(w)) {
          return w;
        }
      }
    };
    for (int t = 0; t < 50; ++t) {
      auto plane = develop_plane_window(
          X(), periodic_axes(random_loop(EdgeClass::vertical),
                             random_loop(EdgeClass::horizontal), 8),
          8);
      int w = uni(1, 4), h = uni(1, 4);
      ok_rand += run(plane.window.sub(uni(-8, 8 - w), uni(-8, 8 - h), w, h)) ? 1 : 0;
    }
    o.require(ok_pi == 50, "50 windows of the c/y plane");
    o.require(ok_rand == 50, "50 windows of random periodic planes");
    o.note(std::to_string(ok_pi) + "/50 plane windows and " + std::to_string(ok_rand)
           + "/50 random-axes windows periodized, verified and found");
    return o;
  }

  Outcome properties() {
    Outcome         o;
    auto const&     x = X().complex();
    std::mt19937_64 rng(5);
    auto word = [&](EdgeClass cls, std::size_t len) {
      std::vector<DirectedEdge> letters;
      for (EdgeId e = 0; e < x.number_of_edges(); ++e) {
        if (x.edge(e).cls == cls) {
          letters.emplace_back(e, false);
          letters.emplace_back(e, true);
        }
      }
      Word w;
      while (w.size() < len) {
        auto d = letters[rng() % letters.size()];
        if (w.empty() || d != w.back().inverse()) {
          w.push_back(d);
        }
      }
      return w;
    };
    int det = 0, overlap = 0, west = 0;
    for (int t = 0; t < 200; ++t) {
      auto b = word(EdgeClass::horizontal, 8), l = word(EdgeClass::vertical, 8);
      auto r1 = develop_quadrant(X(), b, l), r2 = develop_quadrant(X(), b, l);
      auto r3 = develop_quadrant_columns(X(), b, l);
      det += r1.window == r2.window && r1.window == r3.window;
      int w = 1 + static_cast<int>(rng() % 8), h = 1 + static_cast<int>(rng() % 8);
      auto small = develop_quadrant(X(), Word(b.begin(), b.begin() + w),
                                    Word(l.begin(), l.begin() + h));
      overlap += r1.window.sub(0, 0, w, h) == small.window;
    }
    for (int t = 0; t < 1000; ++t) {
      auto row  = word(EdgeClass::horizontal, 1 + rng() % 12);
      auto left = word(EdgeClass::vertical, 1).front();
      auto [top, right]  = develop_row(X(), row, left);
      auto [row2, left2] = develop_west(X(), top, right);
      west += row2 == row && left2 == left;
    }
    o.require(det == 200, "determinism and column-major agreement");
    o.require(overlap == 200, "overlap consistency");
    o.require(west == 1000, "develop_west inversion");
    for (auto f : {"X.complex", "Y.complex", "Z.complex", "torus.complex"}) {
      auto c = load_complex(data(f));
      o.require(CornerTable(c).size() == 4 * c.number_of_squares(),
                std::string("corner table size for ") + f);
    }
    int golden = 0, goldens = 0;
    for (auto const& g : test::golden_renders()) {
      std::ifstream     in(std::string(SQC_GOLDEN_DIR) + "/" + g.file, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      golden += in.good() && ss.str() == g.text;
      ++goldens;
    }
    o.require(golden == goldens, "golden renders byte-stable");
    o.note("determinism 200/200, overlap 200/200, develop_west 1000/1000, "
           "corner tables 4 x squares, golden renders "
           + std::to_string(golden) + "/" + std::to_string(goldens));
    return o;
  }

  struct Criterion {
    int                      id;
    char const*              name;
    double                   limit_ms;
    std::function<Outcome()> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> all = {
      {1, "structure", 1'000, structure},
      {2, "anti-torus periods", 60'000, periods},
      {3, "distinctness", 5'000, distinctness},
      {4, "no commuting powers", 60'000, no_commuting},
      {5, "crosses", 30'000, crosses},
      {6, "no periodic plane through s, K = 32", 60'000, no_periodic},
      {7, "census", 600'000, census},
      {8, "periodization", 120'000, periodization},
      {9, "property suites", 60'000, properties},
  };
  // Load the shared complexes outside the timed regions.
  (void)X();
  (void)Z();
  int failed = 0;
  for (auto const& c : all) {
    auto    t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.pass   = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (ms > c.limit_ms) {
      o.require(false, "time limit");
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %d %s (%.0f ms, limit %.0f ms): %s\n",
                o.pass ? "PASS" : "FAIL", c.id, c.name, ms, c.limit_ms,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
