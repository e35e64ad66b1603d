#include <benchmark/benchmark.h>

#include "sqc/antitorus.hpp"
#include "sqc/development.hpp"
#include "sqc/periodize.hpp"
#include "sqc/zcomplex.hpp"

namespace {

  using namespace sqc;

  UniversalCover const& x_cover() {
    static UniversalCover c(load_complex(SQC_DATA_DIR "/X.complex"));
    return c;
  }

  UniversalCover const& z_cover() {
    static UniversalCover c(load_complex(SQC_DATA_DIR "/Z.complex"));
    return c;
  }

  AxisPair x_axes() {
    auto const& c = x_cover().complex();
    return {c.parse_word("c"), c.parse_word("y")};
  }

  void BM_StripPeriod(benchmark::State& st) {
    auto axes = x_axes();
    int  n    = static_cast<int>(st.range(0));
    for (auto _ : st) {
      auto r = strip_period(x_cover(), axes, n);
      benchmark::DoNotOptimize(r.period);
      st.counters["cells"] = static_cast<double>(r.cells);
    }
  }
  BENCHMARK(BM_StripPeriod)->Arg(8)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

  void BM_DevelopQuadrant(benchmark::State& st) {
    auto const& c = x_cover().complex();
    auto        n = static_cast<std::size_t>(st.range(0));
    Word        bottom = power(c.parse_directed_edge("y"), static_cast<int>(n));
    Word        left   = power(c.parse_directed_edge("c"), static_cast<int>(n));
    for (auto _ : st) {
      auto r = develop_quadrant(x_cover(), bottom, left);
      benchmark::DoNotOptimize(r.cells);
    }
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * n * n));
  }
  BENCHMARK(BM_DevelopQuadrant)->Arg(64)->Arg(256);

  void BM_RectangleClosure(benchmark::State& st) {
    auto const& c = x_cover().complex();
    int         k = static_cast<int>(st.range(0));
    Word left   = power(c.parse_directed_edge("c"), k);
    Word bottom = power(c.parse_directed_edge("y"), k);
    for (auto _ : st) {
      auto r = rectangle_closes(x_cover(), left, bottom);
      benchmark::DoNotOptimize(r.closed);
    }
  }
  BENCHMARK(BM_RectangleClosure)->Arg(32)->Arg(64);

  void BM_CertifyNoPeriodic(benchmark::State& st) {
    auto s     = *z_cover().complex().find_square("s");
    int  bound = static_cast<int>(st.range(0));
    for (auto _ : st) {
      auto cert = certify_no_periodic_plane(z_cover(), s, bound, 1);
      benchmark::DoNotOptimize(cert.entries.size());
    }
  }
  BENCHMARK(BM_CertifyNoPeriodic)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

  void BM_Census(benchmark::State& st) {
    auto s       = *z_cover().complex().find_square("s");
    auto crosses = enumerate_crosses(z_cover(), s);
    CensusOptions opt;
    opt.threads = 1;
    for (auto _ : st) {
      auto r = bounded_plane_census(z_cover(), s, static_cast<int>(st.range(0)),
                                    crosses, opt);
      benchmark::DoNotOptimize(r.count());
    }
  }
  BENCHMARK(BM_Census)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

  void BM_Periodize(benchmark::State& st) {
    auto const& c = x_cover().complex();
    auto win = develop_quadrant(x_cover(), c.parse_word("y x y y"),
                                c.parse_word("c a b c"))
                   .window;
    for (auto _ : st) {
      auto cert = periodize_window(x_cover(), win);
      benchmark::DoNotOptimize(cert.P);
    }
  }
  BENCHMARK(BM_Periodize);

}  // namespace

BENCHMARK_MAIN();
