#include "sqc/json_io.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <tuple>

#include "sqc/error.hpp"
#include "sqc/parallel.hpp"

namespace sqc {

  std::string schema_name(std::string_view kind) {
    return "sqc/" + std::string(kind) + "/" + std::to_string(schema_version);
  }

  std::string schema_kind(Json const& doc) {
    if (!doc.is_object() || !doc.contains("schema")
        || !doc["schema"].is_string()) {
      throw ValidationError("document has no \"schema\" string");
    }
    auto s = doc["schema"].get<std::string>();
    auto a = s.find('/');
    auto b = s.rfind('/');
    if (s.rfind("sqc/", 0) != 0 || a == b) {
      throw ValidationError("unrecognised schema '" + s + "'");
    }
    if (s.substr(b + 1) != std::to_string(schema_version)) {
      throw ValidationError("unsupported schema version in '" + s + "'");
    }
    return s.substr(a + 1, b - a - 1);
  }

  namespace {

    Json head(std::string_view kind) {
      Json j;
      j["schema"] = schema_name(kind);
      return j;
    }

    template <class T>
    T field(Json const& doc, char const* key) {
      if (!doc.contains(key)) {
        throw ValidationError(std::string("missing field \"") + key + "\"");
      }
      try {
        return doc.at(key).get<T>();
      } catch (nlohmann::json::exception const&) {
        throw ValidationError(std::string("field \"") + key
                              + "\" has the wrong type");
      }
    }

    Json axes_json(SquareComplex const& c, AxisPair const& a) {
      return Json{{"vertical", c.format(a.vertical)},
                  {"horizontal", c.format(a.horizontal)}};
    }

    AxisPair axes_from(SquareComplex const& c, Json const& j) {
      return {c.parse_word(field<std::string>(j, "vertical")),
              c.parse_word(field<std::string>(j, "horizontal"))};
    }

    Json entry_json(SquareComplex const& c, NonClosure const& e) {
      Json j{{"sign_vertical", e.sign_vertical},
             {"sign_horizontal", e.sign_horizontal},
             {"k", e.k},
             {"l", e.l}};
      j["side"]     = std::string(1, e.side);
      j["index"]    = e.index;
      j["expected"] = c.format(e.expected);
      j["actual"]   = c.format(e.actual);
      return j;
    }

    NonClosure entry_from(SquareComplex const& c, Json const& j, bool closed) {
      NonClosure e;
      e.sign_vertical   = field<int>(j, "sign_vertical");
      e.sign_horizontal = field<int>(j, "sign_horizontal");
      e.k               = field<int>(j, "k");
      e.l               = field<int>(j, "l");
      if (!closed) {
        auto side = field<std::string>(j, "side");
        if (side != "N" && side != "E") {
          throw ValidationError("entry side must be \"N\" or \"E\"");
        }
        e.side     = side[0];
        e.index    = field<int>(j, "index");
        e.expected = c.parse_directed_edge(field<std::string>(j, "expected"));
        e.actual   = c.parse_directed_edge(field<std::string>(j, "actual"));
      }
      return e;
    }

    Json arm_json(SquareComplex const& c, ArmSpec const& a) {
      Json p = Json::array(), q = Json::array();
      for (auto x : a.prefix) {
        p.push_back(c.format(x));
      }
      for (auto x : a.cycle) {
        q.push_back(c.format(x));
      }
      return Json{{"prefix", p}, {"cycle", q}};
    }

  }  // namespace

  Json to_json(SquareComplex const& c, NpcReport const& r) {
    Json j      = head("npc");
    j["pass"]   = r.pass;
    Json vs     = Json::array();
    for (auto const& v : r.vertices) {
      Json x{{"vertex", c.vertex_name(v.vertex)}};
      x["girth"] = v.girth ? Json(*v.girth) : Json(nullptr);
      x["pass"]  = v.pass;
      vs.push_back(x);
    }
    j["vertices"] = vs;
    return j;
  }

  Json to_json(SquareComplex const& c, VhReport const& r) {
    Json j    = head("vh");
    j["pass"] = r.pass;
    Json cls  = Json::object();
    for (EdgeId e = 0; e < r.classes.size(); ++e) {
      cls[c.edge(e).name] = to_string(r.classes[e]);
    }
    j["classes"]  = cls;
    j["failures"] = r.failures;
    return j;
  }

  Json to_json(OrbitReport const& r) {
    Json j                = head("strip-period");
    j["n"]                = r.n;
    j["period"]           = r.period;
    j["word_period"]      = r.word_period;
    j["preperiod"]        = r.preperiod;
    j["distinct"]         = r.distinct;
    j["all_positive"]     = r.all_positive;
    j["surjective"]       = r.surjective;
    j["cells"]            = r.cells;
    j["ms"]               = r.ms;
    j["budget_exhausted"] = r.budget_exhausted;
    return j;
  }

  Json to_json(DistinctReport const& r) {
    Json j          = head("wn-distinct");
    j["n"]          = r.n;
    j["distinct"]   = r.distinct;
    j["expected"]   = r.expected;
    j["stored_count"] = r.stored_count ? Json(*r.stored_count) : Json(nullptr);
    j["period"]     = r.period;
    return j;
  }

  Json to_json(SquareComplex const& c, CommutingScan const& r) {
    Json j       = head("commuting-scan");
    j["bound"]   = r.bound;
    j["checked"] = r.checked;
    j["cells"]   = r.cells;
    Json pairs   = Json::array();
    for (auto const& p : r.pairs) {
      pairs.push_back(Json{{"k", p.k}, {"l", p.l},
                           {"rectangle", dump_window(c, p.rectangle)}});
    }
    j["pairs"] = pairs;
    return j;
  }

  Json to_json(SquareComplex const& c, RelationScan const& r) {
    Json j           = head("relation-scan");
    j["bound"]       = r.bound;
    j["tuples"]      = r.tuples;
    j["trivial"]     = r.trivial;
    j["rejected"]    = r.rejected;
    j["rectangular"] = r.rectangular;
    Json rel         = Json::array();
    for (auto const& x : r.relations) {
      rel.push_back(Json{{"k", x.k}, {"l", x.l}, {"m", x.m}, {"n", x.n},
                         {"rectangle", dump_window(c, x.rectangle)}});
    }
    j["relations"] = rel;
    return j;
  }

  Json to_json(SquareComplex const& c, CrossSpec const& cross) {
    Json j;
    j["base"]  = c.format(cross.base);
    j["north"] = arm_json(c, cross.north);
    j["east"]  = arm_json(c, cross.east);
    j["south"] = arm_json(c, cross.south);
    j["west"]  = arm_json(c, cross.west);
    j["ne_axes"] = axes_json(c, ne_axes(c, cross));
    return j;
  }

  Json crosses_json(SquareComplex const& c, std::vector<CrossSpec> const& v) {
    Json j     = head("crosses");
    j["count"] = v.size();
    Json list  = Json::array();
    for (auto const& x : v) {
      list.push_back(to_json(c, x));
    }
    j["crosses"] = list;
    return j;
  }

  Json to_json(PlaneCensusReport const& r) {
    Json j                = head("census");
    j["radius"]           = r.radius;
    j["window_side"]      = 2 * r.radius + 1;
    j["count"]            = r.count();
    j["nodes"]            = r.nodes;
    j["budget_exhausted"] = r.budget_exhausted;
    j["all_matched"]      = r.all_matched();
    j["matches"]          = r.matches;
    return j;
  }

  Json window_json(SquareComplex const& c, GridWindow const& w) {
    Json j        = head("window");
    j["complete"] = w.complete();
    j["window"]   = dump_window(c, w);
    return j;
  }

  Json to_json(SquareComplex const& c, TorusCertificate const& cert) {
    Json j       = head("torus-certificate");
    j["complex"] = serialize_complex(c);
    j["base"]    = c.vertex_name(cert.base);
    j["H"]       = cert.H;
    j["P"]       = cert.P;
    j["domain"]  = dump_window(c, cert.domain);
    return j;
  }

  Json to_json(SquareComplex const& c, NoPeriodicCertificate const& cert) {
    Json j       = head("no-periodic-certificate");
    j["complex"] = serialize_complex(c);
    j["base"]    = c.square(cert.base).name;
    j["bound"]   = cert.bound;
    j["axes"]    = axes_json(c, cert.axes);
    j["cells"]   = cert.cells;
    Json e       = Json::array();
    for (auto const& x : cert.entries) {
      e.push_back(entry_json(c, x));
    }
    j["entries"] = e;
    Json ce      = Json::array();
    for (auto const& x : cert.counterexamples) {
      ce.push_back(Json{{"sign_vertical", x.sign_vertical},
                        {"sign_horizontal", x.sign_horizontal},
                        {"k", x.k},
                        {"l", x.l}});
    }
    j["counterexamples"] = ce;
    j["ok"]              = cert.ok();
    return j;
  }

  Json to_json(SquareComplex const& c, CylinderCertificate const& cert) {
    Json j       = head("cylinder-certificate");
    j["complex"] = serialize_complex(c);
    j["n"]       = cert.n;
    j["P"]       = cert.P;
    j["axes"]    = axes_json(c, cert.axes);
    j["period"]  = dump_window(c, cert.period);
    return j;
  }

  LoadedCertificate certificate_from_json(Json const& doc) {
    auto kind = schema_kind(doc);
    auto c    = parse_complex(field<std::string>(doc, "complex"));
    if (kind == "torus-certificate") {
      TorusCertificate t;
      auto base = c.find_vertex(field<std::string>(doc, "base"));
      if (!base) {
        throw ValidationError("unknown base vertex");
      }
      t.base   = *base;
      t.H      = field<int>(doc, "H");
      t.P      = field<int>(doc, "P");
      t.domain = parse_window(c, field<std::string>(doc, "domain"));
      return {std::move(c), t};
    }
    if (kind == "no-periodic-certificate") {
      NoPeriodicCertificate n;
      auto base = c.find_square(field<std::string>(doc, "base"));
      if (!base) {
        throw ValidationError("unknown base square");
      }
      n.base  = *base;
      n.bound = field<int>(doc, "bound");
      n.axes  = axes_from(c, field<Json>(doc, "axes"));
      n.cells = field<std::uint64_t>(doc, "cells");
      for (auto const& e : field<Json>(doc, "entries")) {
        n.entries.push_back(entry_from(c, e, false));
      }
      for (auto const& e : field<Json>(doc, "counterexamples")) {
        n.counterexamples.push_back(entry_from(c, e, true));
      }
      return {std::move(c), n};
    }
    if (kind == "cylinder-certificate") {
      CylinderCertificate y;
      y.n      = field<int>(doc, "n");
      y.P      = field<int>(doc, "P");
      y.axes   = axes_from(c, field<Json>(doc, "axes"));
      y.period = parse_window(c, field<std::string>(doc, "period"));
      return {std::move(c), y};
    }
    throw ValidationError("'" + kind + "' is not a certificate schema");
  }

  namespace {

    CertificateCheck check_no_periodic(UniversalCover const&        z,
                                       NoPeriodicCertificate const& cert,
                                       unsigned                     threads) {
      CertificateCheck r{"no-periodic-certificate", false, false, ""};
      if (!cert.counterexamples.empty()) {
        r.counterexample = true;
        r.failure = std::to_string(cert.counterexamples.size())
                    + " rectangle(s) recorded as closed";
        return r;
      }
      if (cert.bound < 1) {
        r.failure = "bound must be positive";
        return r;
      }
      std::set<std::tuple<int, int, int, int>> seen;
      for (auto const& e : cert.entries) {
        bool in_range = std::abs(e.sign_vertical) == 1
                        && std::abs(e.sign_horizontal) == 1 && e.k >= 1
                        && e.k <= cert.bound && e.l >= 1 && e.l <= cert.bound;
        if (!in_range
            || !seen.emplace(e.sign_vertical, e.sign_horizontal, e.k, e.l)
                    .second) {
          r.failure = "entry (" + std::to_string(e.k) + ", "
                      + std::to_string(e.l)
                      + ") is out of range or repeated";
          return r;
        }
      }
      if (seen.size() != 4 * static_cast<std::size_t>(cert.bound) * cert.bound) {
        r.failure = "expected " + std::to_string(4 * cert.bound * cert.bound)
                    + " entries, found " + std::to_string(seen.size());
        return r;
      }
      auto crosses = enumerate_crosses(z, cert.base);
      if (crosses.empty()) {
        r.failure = "no cross passes through the base square";
        return r;
      }
      auto axes = ne_axes(z.complex(), crosses.front());
      if (axes.vertical != cert.axes.vertical
          || axes.horizontal != cert.axes.horizontal) {
        r.failure = "axes are not those of the first cross";
        return r;
      }
      std::atomic<std::size_t> bad{cert.entries.size()};
      parallel_for(cert.entries.size(), threads, [&](std::size_t i) {
        bool ok = false;
        try {
          ok = replay_witness(z, cert, cert.entries[i]);
        } catch (Error const&) {
          ok = false;
        }
        if (!ok) {
          auto cur = bad.load();
          while (i < cur && !bad.compare_exchange_weak(cur, i)) {
          }
        }
      });
      if (bad.load() < cert.entries.size()) {
        auto const& e = cert.entries[bad.load()];
        r.failure     = "entry (" + std::to_string(e.sign_vertical * e.k) + ", "
                    + std::to_string(e.sign_horizontal * e.l)
                    + ") does not replay";
        return r;
      }
      r.ok = true;
      return r;
    }

  }  // namespace

  CertificateCheck verify_certificate(LoadedCertificate const& cert,
                                      unsigned                 threads) {
    UniversalCover cover(cert.complex);
    if (auto const* t = std::get_if<TorusCertificate>(&cert.certificate)) {
      auto v = verify_torus(cover, *t);
      return {"torus-certificate", v.ok, false, v.failure};
    }
    if (auto const* y = std::get_if<CylinderCertificate>(&cert.certificate)) {
      auto v = verify_cylinder(cover, *y);
      return {"cylinder-certificate", v.ok, false, v.failure};
    }
    return check_no_periodic(
        cover, std::get<NoPeriodicCertificate>(cert.certificate), threads);
  }

}  // namespace sqc
