#pragma once

// The complex Z: assembly from parts, immersed infinite crosses through a
// base square, their extension to planes, the rectangle certificate that no
// periodic plane contains the base square, and the bounded plane census.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqc/antitorus.hpp"
#include "sqc/complex.hpp"
#include "sqc/development.hpp"
#include "sqc/link.hpp"
#include "sqc/periodize.hpp"

namespace sqc {

  ////////////////////////////////////////////////////////////////////////
  // Gluing
  ////////////////////////////////////////////////////////////////////////

  struct GluePart {
    std::string   alias;
    SquareComplex complex;
  };

  struct GlueTable {
    std::vector<GluePart> parts;
    // Qualified edge names "alias.edge", identified with orientation.
    std::vector<std::pair<std::string, std::string>> identifications;
  };

  // '.glue' files; part paths are resolved against base_dir.
  GlueTable parse_glue(std::string_view text, std::string const& base_dir);
  GlueTable load_glue(std::string const& path);

  // Disjoint union of the parts with every name qualified by its alias,
  // followed by the identifications. Merged cells keep the name of their
  // first member. Throws ValidationError on a class or endpoint mismatch.
  SquareComplex build_z(GlueTable const& table);

  // Loads '.complex' files directly and builds '.glue' files.
  SquareComplex load_any(std::string const& path);

  ////////////////////////////////////////////////////////////////////////
  // Crosses
  ////////////////////////////////////////////////////////////////////////

  enum class Side : std::uint8_t { north, east, south, west };

  std::string to_string(Side s);

  // An eventually periodic strip of cells leaving one side of the base
  // square: cell k >= 1 is prefix[k-1], then the cycle repeats forever.
  struct ArmSpec {
    std::vector<Placement> prefix;
    std::vector<Placement> cycle;

    Placement cell(std::size_t k) const;  // k >= 1
    bool      operator==(ArmSpec const&) const = default;
    auto      operator<=>(ArmSpec const&) const = default;
  };

  struct CrossSpec {
    Placement base;
    ArmSpec   north, east, south, west;

    ArmSpec const& arm(Side s) const;
    bool           operator==(CrossSpec const&) const = default;
  };

  struct CrossOptions {
    std::size_t max_arm_depth = 64;
    // Arms may not use the base square again.
    bool base_once = true;
  };

  // All crosses with the base square in its identity placement, ordered by
  // (north, east, south, west) arms. Throws BudgetExhausted when an arm
  // does not close into a loop within max_arm_depth cells.
  std::vector<CrossSpec> enumerate_crosses(UniversalCover const& z,
                                           SquareId              s,
                                           CrossOptions const&   opt = {});

  // The words along the two sides of an arm's cycle that face away from
  // the base square's centre line: e.g. the north arm gives its right-side
  // loop (east) and left-side loop (west).
  Word arm_side_loop(SquareComplex const& c,
                     ArmSpec const&       arm,
                     Side                 arm_side,
                     bool                 right_or_top);

  // Axes of the north-east quarter: the east side of the north arm's cycle
  // and the north side of the east arm's cycle.
  AxisPair ne_axes(SquareComplex const& c, CrossSpec const& cross);

  struct ExtendedCross {
    DevelopmentResult development;  // cells [-n, n] x [-n, n]
    bool              unique = false;
  };

  ExtendedCross extend_cross(UniversalCover const& z,
                             CrossSpec const&      cross,
                             int                   n,
                             DevelopOptions const& opt = {});

  ////////////////////////////////////////////////////////////////////////
  // No periodic plane through the base square
  ////////////////////////////////////////////////////////////////////////

  struct NonClosure {
    int          sign_vertical   = 1;  // exponent signs of v and h
    int          sign_horizontal = 1;
    int          k = 0;                // |exponent| of the vertical axis
    int          l = 0;
    char         side  = 'N';          // 'N': top differs, 'E': right differs
    int          index = 0;
    DirectedEdge expected;             // letter of the opposite side
    DirectedEdge actual;

    bool operator==(NonClosure const&) const = default;
  };

  struct NoPeriodicCertificate {
    int                     bound = 0;
    SquareId                base  = 0;
    AxisPair                axes;
    std::vector<NonClosure> entries;         // 4 K^2, sorted
    // Closed rectangles (k, l, signs); the certificate fails if non-empty.
    std::vector<NonClosure> counterexamples;
    std::uint64_t           cells = 0;

    bool ok() const noexcept {
      return counterexamples.empty()
             && entries.size()
                    == 4 * static_cast<std::size_t>(bound) * bound;
    }
  };

  // For every 1 <= k, l <= bound and every sign pattern, develops the
  // rectangle with sides v^(+-k), h^(+-l) at the north-east corner of the
  // base square and records where it fails to close.
  NoPeriodicCertificate certify_no_periodic_plane(UniversalCover const& z,
                                                  SquareId              s,
                                                  int                   bound,
                                                  unsigned threads = 0);

  // True iff the recorded mismatch is reproduced by rectangle_closes.
  bool replay_witness(UniversalCover const&        z,
                      NoPeriodicCertificate const& cert,
                      NonClosure const&            entry);

  struct PeriodicPlaneSearch {
    int                           bound = 0;
    std::uint64_t                 nodes = 0;
    std::optional<TorusCertificate> torus;  // a torus through s, if any
  };

  // Generic oracle: backtracking over all H x P tori with H, P <= bound in
  // which cell (0, 0) is the base square, with immersion checked at every
  // vertex.
  PeriodicPlaneSearch search_periodic_plane_through(UniversalCover const& z,
                                                    SquareId              s,
                                                    int                   bound,
                                                    std::uint64_t node_budget
                                                    = 100'000'000);

  ////////////////////////////////////////////////////////////////////////
  // Census
  ////////////////////////////////////////////////////////////////////////

  struct PlaneCensusReport {
    int                     radius = 0;
    std::uint64_t           nodes  = 0;
    bool                    budget_exhausted = false;
    std::vector<GridWindow> windows;  // cells [-radius, radius]^2
    // Cross index matching each window, or -1.
    std::vector<int> matches;

    std::size_t count() const noexcept {
      return windows.size();
    }
    bool all_matched() const;
  };

  struct CensusOptions {
    std::uint64_t node_budget = 100'000'000;
    unsigned      threads     = 0;
    // Keep the base square out of every cell but the centre, as the arms do.
    bool          base_once   = true;
  };

  // Every locally injective filling of the (2N+1)^2 window centred on the
  // base square (identity placement at cell (0, 0)), matched against the
  // windows of the extended crosses.
  PlaneCensusReport bounded_plane_census(UniversalCover const&   z,
                                         SquareId                s,
                                         int                     radius,
                                         std::vector<CrossSpec> const& crosses,
                                         CensusOptions const&    opt = {});

  ////////////////////////////////////////////////////////////////////////
  // Periodic plane membership
  ////////////////////////////////////////////////////////////////////////

  struct PeriodicVerdict {
    std::optional<TorusCertificate>      certificate;
    std::optional<NoPeriodicCertificate> refutation;
  };

  // Complete complexes: a torus certificate. Otherwise, windows containing
  // the base square: the bounded refutation. Anything else throws
  // ValidationError.
  PeriodicVerdict is_window_in_periodic_plane(UniversalCover const& c,
                                              GridWindow const&     window,
                                              int                   bound,
                                              std::string const& base_square
                                              = "s",
                                              unsigned threads = 0);

}  // namespace sqc
