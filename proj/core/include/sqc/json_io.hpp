#pragma once

// JSON reports and certificates. Every document carries
// "schema": "sqc/<kind>/1"; certificates embed the complex and their grid
// windows so that they can be checked without any other file.

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "sqc/antitorus.hpp"
#include "sqc/complex.hpp"
#include "sqc/link.hpp"
#include "sqc/periodize.hpp"
#include "sqc/zcomplex.hpp"

namespace sqc {

  using Json = nlohmann::ordered_json;

  inline constexpr int schema_version = 1;

  std::string schema_name(std::string_view kind);
  // Throws ValidationError unless doc has a "sqc/<kind>/1" schema; returns
  // the kind.
  std::string schema_kind(Json const& doc);

  Json to_json(SquareComplex const& c, NpcReport const& r);
  Json to_json(SquareComplex const& c, VhReport const& r);
  Json to_json(OrbitReport const& r);
  Json to_json(DistinctReport const& r);
  Json to_json(SquareComplex const& c, CommutingScan const& r);
  Json to_json(SquareComplex const& c, RelationScan const& r);
  Json to_json(SquareComplex const& c, CrossSpec const& cross);
  Json crosses_json(SquareComplex const& c, std::vector<CrossSpec> const& v);
  Json to_json(PlaneCensusReport const& r);
  Json window_json(SquareComplex const& c, GridWindow const& w);

  Json to_json(SquareComplex const& c, TorusCertificate const& cert);
  Json to_json(SquareComplex const& c, NoPeriodicCertificate const& cert);
  Json to_json(SquareComplex const& c, CylinderCertificate const& cert);

  struct LoadedCertificate {
    SquareComplex complex;
    std::variant<TorusCertificate, NoPeriodicCertificate, CylinderCertificate>
        certificate;
  };

  // Throws ParseError or ValidationError on malformed input.
  LoadedCertificate certificate_from_json(Json const& doc);

  struct CertificateCheck {
    std::string kind;
    bool        ok = false;
    // The certificate itself records a closed rectangle.
    bool        counterexample = false;
    std::string failure;
  };

  // Torus and cylinder certificates are replayed by verify_torus and
  // verify_cylinder. A no-periodic certificate is checked for completeness
  // of its (sign, k, l) grid, for its axes being those of the first cross
  // through its base square, and by replaying every entry.
  CertificateCheck verify_certificate(LoadedCertificate const& cert,
                                      unsigned                 threads = 0);

}  // namespace sqc
