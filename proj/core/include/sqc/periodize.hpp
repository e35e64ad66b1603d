#pragma once

// Periodic flats: holonomy of closed vertical words, torus certificates for
// windows of flats in complete square complexes, and cylinder certificates
// for vertical strips.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqc/antitorus.hpp"
#include "sqc/complex.hpp"
#include "sqc/development.hpp"
#include "sqc/link.hpp"

namespace sqc {

  // The permutation of horizontal germs at the base of a closed vertical
  // word w: h goes to the top letter of the column developed over (w, h).
  struct HolonomyPermutation {
    VertexId                      base = 0;
    std::vector<DirectedEdge>     germs;  // sorted
    std::vector<DirectedEdge>     image;  // image[i] for germs[i]

    DirectedEdge operator()(DirectedEdge h) const;
    // Cycle lengths of the germs, in germ order.
    std::size_t cycle_length(DirectedEdge h) const;
    HolonomyPermutation compose(HolonomyPermutation const& then) const;
    bool is_bijection() const;
    bool operator==(HolonomyPermutation const&) const = default;
  };

  HolonomyPermutation holonomy(UniversalCover const& cover, Word const& w);

  // Fundamental domain of a torus in the universal cover: an H x P window at
  // the origin whose north side equals its south side and whose east side
  // equals its west side.
  struct TorusCertificate {
    VertexId   base = 0;
    int        H    = 0;
    int        P    = 0;
    GridWindow domain;

    Word south() const {
      return domain.south();
    }
    Word north() const {
      return domain.north();
    }
    Word west() const {
      return domain.west();
    }
    Word east() const {
      return domain.east();
    }
  };

  struct PeriodizeOptions {
    // Longest vertical word appended to the west side to try other loops.
    std::size_t max_extension = 4;
    // Column states explored per attempt.
    std::size_t state_budget = 200'000;
    // Largest vertical period tried.
    std::size_t max_period = 4096;
  };

  struct PeriodizeStats {
    std::size_t attempts = 0;
    std::size_t states   = 0;
    std::size_t extension = 0;  // length of the appended vertical word
    std::size_t appended_columns = 0;
  };

  // A torus whose universal cover contains the given window at the origin
  // of the domain. The window is translated so that its south-west corner
  // is the origin. Throws ValidationError for an inconsistent window and
  // BudgetExhausted when no attempt closes up.
  TorusCertificate periodize_window(UniversalCover const&   cover,
                                    GridWindow const&       window,
                                    PeriodizeOptions const& opt   = {},
                                    PeriodizeStats*         stats = nullptr);

  struct VerifyResult {
    bool        ok = false;
    std::string failure;  // first failing check
  };

  // Rebuilds the domain from its south and west sides using the corner
  // table only, and checks the stored cells, both wrap conditions and that
  // every row and column is cyclically reduced.
  VerifyResult verify_torus(UniversalCover const&   cover,
                            TorusCertificate const& cert);

  // Offset (a, b) such that window cell (i0 + i, j0 + j) equals domain cell
  // ((a + i) mod H, (b + j) mod P), edges included.
  std::optional<std::pair<int, int>> find_window_in_torus(
      TorusCertificate const& cert,
      GridWindow const&       window);

  // One vertical period of the width-n strip east of the vertical axis.
  struct CylinderCertificate {
    int        n = 0;
    int        P = 0;
    AxisPair   axes;
    GridWindow period;  // n x P, south-west corner at the origin
  };

  CylinderCertificate strip_certificate(UniversalCover const& cover,
                                        AxisPair const&       axes,
                                        int                   n,
                                        OrbitOptions const&   opt = {});

  // Replays the strip with develop_quadrant and checks the wrap (row word
  // and phase of the western letter).
  VerifyResult verify_cylinder(UniversalCover const&      cover,
                               CylinderCertificate const& cert);

}  // namespace sqc
