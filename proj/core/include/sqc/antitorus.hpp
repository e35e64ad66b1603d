#pragma once

// Row dynamics of the plane spanned by a vertical and a horizontal periodic
// line: the rows W_n(m), strip periods, and the power and relation scans.

#include <cstdint>
#include <optional>
#include <vector>

#include "sqc/complex.hpp"
#include "sqc/development.hpp"
#include "sqc/link.hpp"

namespace sqc {

  // Two closed loops at a common vertex: the vertical axis runs north, the
  // horizontal one east. In X these are c and y.
  struct AxisPair {
    Word vertical;
    Word horizontal;
  };

  // Throws ValidationError unless both words are closed loops of the right
  // classes at one vertex.
  void validate_axes(SquareComplex const& c, AxisPair const& axes);

  // Row m of the north-east quadrant whose south side is the horizontal axis
  // cycled to length n and whose west side is the vertical axis.
  Word wn(UniversalCover const& cover, AxisPair const& axes, int n, long m);

  struct OrbitReport {
    int         n = 0;
    // Least p > 0 returning to the start state (row word and phase of the
    // western letter).
    std::uint64_t period = 0;
    // Least p > 0 returning to the start row word alone.
    std::uint64_t word_period = 0;
    // States before the cycle; 0 whenever the row map is a permutation.
    std::uint64_t preperiod  = 0;
    std::uint64_t distinct   = 0;
    bool          all_positive = false;
    bool          surjective   = false;
    std::uint64_t cells        = 0;
    double        ms           = 0;
    bool          budget_exhausted = false;
  };

  struct OrbitOptions {
    std::uint64_t row_budget = 1ULL << 32;
  };

  // Brent cycle detection on the row map (constant memory).
  OrbitReport strip_period(UniversalCover const& cover,
                           AxisPair const&       axes,
                           int                   n,
                           OrbitOptions const&   opt = {});

  struct DistinctReport {
    int           n = 0;
    bool          distinct = false;
    // Number of positive rows of length n (rows counted by wn_distinct).
    std::uint64_t expected = 0;
    // Stored-set count among the first `expected` rows (n <= 12 only).
    std::optional<std::uint64_t> stored_count;
    // Period from cycle detection.
    std::uint64_t period = 0;
  };

  // Whether the first k^n rows are pairwise distinct, k the number of
  // horizontal edges. Uses a stored set for n <= 12 and the permutation
  // argument (period >= k^n) above that.
  DistinctReport wn_distinct(UniversalCover const& cover,
                             AxisPair const&       axes,
                             int                   n);

  struct CommutingPair {
    int        k = 0;
    int        l = 0;
    GridWindow rectangle;  // closed rectangle with sides v^k and h^l
  };

  struct CommutingScan {
    int                        bound = 0;
    std::uint64_t              checked = 0;
    std::uint64_t              cells   = 0;
    std::vector<CommutingPair> pairs;  // sorted by (k, l)
  };

  // Signed power of a loop: w^k for k >= 0, inverse(w)^-k otherwise.
  Word signed_power(Word const& w, int k);

  // All (k, l) with 0 < |k|, |l| <= bound such that v^k and h^l commute,
  // decided by rectangle closure.
  CommutingScan commuting_powers_scan(UniversalCover const& cover,
                                      AxisPair const&       axes,
                                      int                   bound,
                                      unsigned              threads = 0);

  enum class RelationClass : std::uint8_t {
    trivial,      // the word v^k h^l v^m h^n is freely trivial
    rejected,     // the exponent sums are not both zero
    rectangular   // m = -k, n = -l with k, l nonzero: a commutator
  };

  // Both exponent sums are homomorphisms of the fundamental group when in
  // every square the bottom and top, and the left and right, are traversed
  // with the same sign. Checks that condition for the edges in the axes.
  bool exponent_sums_are_invariant(SquareComplex const& c);

  RelationClass classify_relation(int k, int l, int m, int n);

  struct Relation {
    int        k = 0, l = 0, m = 0, n = 0;
    GridWindow rectangle;
  };

  struct RelationScan {
    int                   bound        = 0;
    std::uint64_t         tuples       = 0;
    std::uint64_t         trivial      = 0;
    std::uint64_t         rejected     = 0;
    std::uint64_t         rectangular  = 0;
    std::vector<Relation> relations;
  };

  // Relations v^k h^l v^m h^n = 1 with exponents bounded by `bound`.
  // Throws ValidationError when exponent sums are not invariant, since the
  // reduction to rectangles is then unavailable.
  RelationScan alternating_relation_scan(UniversalCover const& cover,
                                         AxisPair const&       axes,
                                         int                   bound,
                                         unsigned              threads = 0);

}  // namespace sqc
