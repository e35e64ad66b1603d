#include "sqc/antitorus.hpp"

#include <chrono>
#include <cstring>
#include <string>
#include <unordered_set>

#include "sqc/error.hpp"
#include "sqc/parallel.hpp"

namespace sqc {

  namespace {

    struct RowState {
      Word        row;
      std::size_t phase = 0;

      bool operator==(RowState const&) const = default;
    };

    class RowMap {
     public:
      RowMap(UniversalCover const& cover, AxisPair const& axes)
          : _cover(cover), _vertical(axes.vertical) {}

      void step(RowState& s) const {
        develop_row_in_place(_cover, s.row, _vertical[s.phase]);
        s.phase = (s.phase + 1) % _vertical.size();
      }

     private:
      UniversalCover const& _cover;
      Word const&           _vertical;
    };

    Word initial_row(AxisPair const& axes, int n) {
      Word row;
      row.reserve(n);
      for (int i = 0; i < n; ++i) {
        row.push_back(axes.horizontal[i % axes.horizontal.size()]);
      }
      return row;
    }

    bool positive(Word const& w) {
      for (auto d : w) {
        if (d.reversed()) {
          return false;
        }
      }
      return true;
    }

    std::string key(Word const& w) {
      std::string s(w.size() * sizeof(std::uint32_t), '\0');
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto code = w[i].code();
        std::memcpy(s.data() + i * sizeof(code), &code, sizeof(code));
      }
      return s;
    }

    std::uint64_t count_positive_rows(SquareComplex const& c, int n) {
      std::uint64_t k = 0;
      for (auto const& e : c.edges()) {
        k += e.cls == EdgeClass::horizontal ? 1 : 0;
      }
      std::uint64_t out = 1;
      for (int i = 0; i < n; ++i) {
        out *= k;
      }
      return out;
    }

  }  // namespace

  void validate_axes(SquareComplex const& c, AxisPair const& axes) {
    auto check = [&](Word const& w, EdgeClass cls, char const* what) {
      if (!is_closed(c, w)) {
        throw ValidationError(std::string(what) + " axis is not a closed loop");
      }
      for (auto d : w) {
        if (c.edge_class(d) != cls) {
          throw ValidationError(std::string(what) + " axis contains "
                                + c.format(d) + " of the wrong class");
        }
      }
    };
    check(axes.vertical, EdgeClass::vertical, "vertical");
    check(axes.horizontal, EdgeClass::horizontal, "horizontal");
    if (c.origin(axes.vertical.front()) != c.origin(axes.horizontal.front())) {
      throw ValidationError("axes are based at different vertices");
    }
  }

  Word wn(UniversalCover const& cover, AxisPair const& axes, int n, long m) {
    if (n < 0 || m < 0) {
      throw ValidationError("wn needs n >= 0 and m >= 0");
    }
    validate_axes(cover.complex(), axes);
    RowMap   f(cover, axes);
    RowState s{initial_row(axes, n), 0};
    for (long k = 0; k < m; ++k) {
      f.step(s);
    }
    return s.row;
  }

  OrbitReport strip_period(UniversalCover const& cover,
                           AxisPair const&       axes,
                           int                   n,
                           OrbitOptions const&   opt) {
    if (n < 0) {
      throw ValidationError("strip width must be non-negative");
    }
    validate_axes(cover.complex(), axes);
    auto        start = std::chrono::steady_clock::now();
    OrbitReport r;
    r.n = n;
    RowMap         f(cover, axes);
    RowState const x0{initial_row(axes, n), 0};
    std::uint64_t  rows = 0;
    auto           step = [&](RowState& s) {
      if (rows >= opt.row_budget) {
        throw BudgetExhausted("row budget exhausted");
      }
      f.step(s);
      ++rows;
    };
    auto finish = [&] {
      r.cells = rows * static_cast<std::uint64_t>(n);
      r.ms    = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
                 .count();
    };
    try {
      // Brent: find the cycle length, then the tail length.
      std::uint64_t power = 1, lambda = 1;
      RowState      tortoise = x0;
      RowState      hare     = x0;
      step(hare);
      while (!(tortoise == hare)) {
        if (power == lambda) {
          tortoise = hare;
          power *= 2;
          lambda = 0;
        }
        step(hare);
        ++lambda;
      }
      std::uint64_t mu = 0;
      tortoise         = x0;
      hare             = x0;
      for (std::uint64_t k = 0; k < lambda; ++k) {
        step(hare);
      }
      while (!(tortoise == hare)) {
        step(tortoise);
        step(hare);
        ++mu;
      }
      r.period    = lambda;
      r.preperiod = mu;
      r.distinct  = mu + lambda;

      // One more lap for the word-only period and the positivity audit.
      if (mu == 0) {
        RowState s = x0;
        r.all_positive = positive(s.row);
        for (std::uint64_t k = 1; k <= lambda; ++k) {
          step(s);
          r.all_positive = r.all_positive && positive(s.row);
          if (r.word_period == 0 && s.row == x0.row) {
            r.word_period = k;
          }
        }
        std::uint64_t rows_in_cycle
            = axes.vertical.size() == 1 ? lambda : r.word_period;
        r.surjective = r.all_positive
                       && rows_in_cycle
                              == count_positive_rows(cover.complex(), n);
      }
    } catch (BudgetExhausted const&) {
      r.budget_exhausted = true;
    }
    finish();
    return r;
  }

  DistinctReport wn_distinct(UniversalCover const& cover,
                             AxisPair const&       axes,
                             int                   n) {
    DistinctReport r;
    r.n        = n;
    r.expected = count_positive_rows(cover.complex(), n);
    auto orbit = strip_period(cover, axes, n);
    if (orbit.budget_exhausted) {
      throw BudgetExhausted("strip period search exhausted its budget");
    }
    r.period = orbit.period;
    bool by_period = orbit.preperiod == 0 && orbit.period >= r.expected;
    if (n <= 12) {
      std::unordered_set<std::string> seen;
      RowMap                          f(cover, axes);
      RowState                        s{initial_row(axes, n), 0};
      for (std::uint64_t m = 0; m < r.expected; ++m) {
        seen.insert(key(s.row));
        f.step(s);
      }
      r.stored_count = seen.size();
      r.distinct     = seen.size() == r.expected && by_period;
    } else {
      r.distinct = by_period;
    }
    return r;
  }

  Word signed_power(Word const& w, int k) {
    return k >= 0 ? power(w, static_cast<std::size_t>(k))
                  : power(inverse(w), static_cast<std::size_t>(-k));
  }

  namespace {

    std::vector<int> signed_range(int bound) {
      std::vector<int> out;
      for (int k = -bound; k <= bound; ++k) {
        if (k != 0) {
          out.push_back(k);
        }
      }
      return out;
    }

  }  // namespace

  CommutingScan commuting_powers_scan(UniversalCover const& cover,
                                      AxisPair const&       axes,
                                      int                   bound,
                                      unsigned              threads) {
    validate_axes(cover.complex(), axes);
    if (bound < 0) {
      throw ValidationError("scan bound must be non-negative");
    }
    CommutingScan out;
    out.bound   = bound;
    auto range  = signed_range(bound);
    auto total  = range.size() * range.size();
    std::vector<std::optional<GridWindow>> found(total);
    std::vector<std::uint64_t>             cells(total, 0);
    parallel_for(total, threads, [&](std::size_t idx) {
      int  k = range[idx / range.size()];
      int  l = range[idx % range.size()];
      auto c = rectangle_closes(cover, signed_power(axes.vertical, k),
                                signed_power(axes.horizontal, l));
      cells[idx] = c.development.cells;
      if (c.closed) {
        found[idx] = std::move(c.development.window);
      }
    });
    out.checked = total;
    for (std::size_t idx = 0; idx < total; ++idx) {
      out.cells += cells[idx];
      if (found[idx]) {
        out.pairs.push_back(CommutingPair{range[idx / range.size()],
                                          range[idx % range.size()],
                                          std::move(*found[idx])});
      }
    }
    return out;
  }

  bool exponent_sums_are_invariant(SquareComplex const& c) {
    for (auto const& s : c.squares()) {
      if (s.frame.bottom.reversed() != s.frame.top.reversed()
          || s.frame.left.reversed() != s.frame.right.reversed()) {
        return false;
      }
    }
    return true;
  }

  RelationClass classify_relation(int k, int l, int m, int n) {
    if ((l == 0 && n == 0 && k + m == 0) || (k == 0 && m == 0 && l + n == 0)) {
      return RelationClass::trivial;
    }
    if (k + m != 0 || l + n != 0) {
      return RelationClass::rejected;
    }
    return RelationClass::rectangular;
  }

  RelationScan alternating_relation_scan(UniversalCover const& cover,
                                         AxisPair const&       axes,
                                         int                   bound,
                                         unsigned              threads) {
    if (!exponent_sums_are_invariant(cover.complex())) {
      throw ValidationError(
          "relation reduction needs sign-consistent square frames");
    }
    RelationScan out;
    out.bound = bound;
    for (int k = -bound; k <= bound; ++k) {
      for (int l = -bound; l <= bound; ++l) {
        for (int m = -bound; m <= bound; ++m) {
          for (int n = -bound; n <= bound; ++n) {
            ++out.tuples;
            switch (classify_relation(k, l, m, n)) {
              case RelationClass::trivial:
                ++out.trivial;
                break;
              case RelationClass::rejected:
                ++out.rejected;
                break;
              default:
                ++out.rectangular;
            }
          }
        }
      }
    }
    auto scan = commuting_powers_scan(cover, axes, bound, threads);
    for (auto& p : scan.pairs) {
      out.relations.push_back(
          Relation{p.k, p.l, -p.k, -p.l, std::move(p.rectangle)});
    }
    return out;
  }

}  // namespace sqc
