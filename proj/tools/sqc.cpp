// sqc: command-line front end for the square complex library.
//
// Exit codes: 0 claim verified, 2 counterexample or failed check,
// 3 budget exhausted, 64 usage error, 66 unreadable input.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "sqc/antitorus.hpp"
#include "sqc/complex.hpp"
#include "sqc/development.hpp"
#include "sqc/error.hpp"
#include "sqc/json_io.hpp"
#include "sqc/link.hpp"
#include "sqc/periodize.hpp"
#include "sqc/render.hpp"
#include "sqc/zcomplex.hpp"

namespace {

  using namespace sqc;

  constexpr int exit_ok       = 0;
  constexpr int exit_counter  = 2;
  constexpr int exit_budget   = 3;
  constexpr int exit_usage    = 64;
  constexpr int exit_file     = 66;

  struct Common {
    std::string input;
    bool        json    = false;
    unsigned    threads = 0;
    std::string out;
  };

  void add_common(CLI::App* app, Common& c,
                  char const* what = "complex file (.complex or .glue)") {
    app->add_option("input", c.input, what)
        ->required();
    app->add_flag("--json", c.json, "print the JSON document");
    app->add_option("--threads", c.threads, "worker threads (0: all cores)");
    app->add_option("--out", c.out, "also write the result to this file");
  }

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
      throw FileError("cannot write '" + path + "'");
    }
  }

  // Prints JSON or the human summary and writes --out.
  void emit(Common const& c, Json const& doc, std::string const& human) {
    std::string text = doc.dump(2) + "\n";
    std::cout << (c.json ? text : human);
    if (!c.out.empty()) {
      write_file(c.out, text);
    }
  }

  Word word_arg(SquareComplex const& c, std::string const& s) {
    return c.parse_word(s);
  }

  SquareId square_arg(SquareComplex const& c, std::string const& name) {
    auto s = c.find_square(name);
    if (!s) {
      throw ValidationError("unknown square '" + name + "'");
    }
    return *s;
  }

  // Where develop, periodize and render get their window from.
  struct WindowSource {
    std::string file;
    std::string bottom;
    std::string left;
    int         cross  = -1;
    int         radius = 3;
    std::string square = "s";
  };

  void add_window_source(CLI::App* app, WindowSource& w) {
    app->add_option("--window", w.file,
                    "grid dump, window JSON or torus certificate");
    app->add_option("--bottom", w.bottom, "south side word of a quadrant");
    app->add_option("--left", w.left, "west side word of a quadrant");
    app->add_option("--cross", w.cross, "index of a cross to extend");
    app->add_option("--radius", w.radius, "radius of the extended cross");
    app->add_option("--square", w.square, "base square of the cross");
  }

  GridWindow window_from(UniversalCover const& cover, WindowSource const& w) {
    auto const& c = cover.complex();
    if (!w.file.empty()) {
      auto text = read_text_file(w.file);
      auto p    = text.find_first_not_of(" \t\r\n");
      if (p != std::string::npos && text[p] == '{') {
        auto doc = Json::parse(text);
        if (schema_kind(doc) == "torus-certificate") {
          return parse_window(c, doc.at("domain").get<std::string>());
        }
        return parse_window(c, doc.at("window").get<std::string>());
      }
      return parse_window(c, text);
    }
    if (w.cross >= 0) {
      auto crosses = enumerate_crosses(cover, square_arg(c, w.square));
      if (static_cast<std::size_t>(w.cross) >= crosses.size()) {
        throw ValidationError("cross index out of range");
      }
      auto e = extend_cross(cover, crosses[w.cross], w.radius);
      if (!e.development.complete()) {
        throw DevelopmentError("the cross does not extend to radius "
                               + std::to_string(w.radius));
      }
      return e.development.window;
    }
    if (!w.bottom.empty() && !w.left.empty()) {
      auto r = develop_quadrant(cover, word_arg(c, w.bottom),
                                word_arg(c, w.left));
      if (!r.complete()) {
        throw DevelopmentError("the quadrant is " + to_string(r.status));
      }
      return r.window;
    }
    throw CLI::ValidationError(
        "window", "give --window, --cross, or both --bottom and --left");
  }

  int cmd_validate(Common const& o) {
    auto c  = load_any(o.input);
    auto vh = check_vh(c, true);
    auto np = check_npc(c);
    std::string corners = "ok";
    std::optional<UniversalCover> cover;
    try {
      cover.emplace(c);
    } catch (DuplicateCornerError const& e) {
      corners = e.what();
    }
    Json j             = Json::object();
    j["schema"]        = schema_name("validate");
    j["squares"]       = c.number_of_squares();
    j["edges"]         = c.number_of_edges();
    j["vertices"]      = c.number_of_vertices();
    j["vh"]            = to_json(c, vh);
    j["npc"]           = to_json(c, np);
    j["corner_table"]  = corners;
    j["complete"]      = cover && cover->complete();
    bool pass          = vh.pass && np.pass && cover.has_value();
    j["pass"]          = pass;
    std::string h = std::to_string(c.number_of_squares()) + " squares, "
                    + std::to_string(c.number_of_edges()) + " edges, "
                    + std::to_string(c.number_of_vertices()) + " vertices\n"
                    + "VH: " + (vh.pass ? "pass" : "fail") + "\n"
                    + "nonpositively curved: " + (np.pass ? "yes" : "no")
                    + "\ncorner table: " + corners + "\ncomplete: "
                    + (cover && cover->complete() ? "yes" : "no") + "\n";
    for (auto const& f : vh.failures) {
      h += "  " + f + "\n";
    }
    emit(o, j, h);
    return pass ? exit_ok : exit_counter;
  }

  int cmd_links(Common const& o) {
    auto c  = load_any(o.input);
    Json j  = Json::object();
    j["schema"] = schema_name("links");
    Json vs = Json::array();
    std::string h;
    bool        pass = true;
    for (auto const& l : links(c)) {
      auto v  = l.vertex();
      auto bp = check_complete_bipartite(c, v);
      auto g  = l.girth();
      Json x;
      x["vertex"] = c.vertex_name(v);
      Json germs  = Json::array();
      for (auto d : l.germs()) {
        germs.push_back(c.format(d));
      }
      x["germs"] = germs;
      Json arcs  = Json::array();
      for (auto const& a : l.arcs()) {
        arcs.push_back(Json{{"from", c.format(l.germs()[a.from])},
                            {"to", c.format(l.germs()[a.to])},
                            {"square", c.square(a.square).name},
                            {"corner", static_cast<int>(a.corner)}});
      }
      x["arcs"]               = arcs;
      x["girth"]              = g ? Json(*g) : Json(nullptr);
      x["complete_bipartite"] = bp.pass;
      x["missing_pairs"]      = bp.missing_pairs;
      x["repeated_pairs"]     = bp.repeated_pairs;
      vs.push_back(x);
      pass = pass && (!g || *g >= 4);
      h += c.vertex_name(v) + ": " + std::to_string(l.germs().size())
           + " germs, " + std::to_string(l.arcs().size()) + " arcs, girth "
           + (g ? std::to_string(*g) : std::string("inf"))
           + (bp.pass ? ", complete bipartite" : "") + "\n";
    }
    j["vertices"] = vs;
    emit(o, j, h);
    return pass ? exit_ok : exit_counter;
  }

  struct RenderOpts {
    std::string format;
    std::string file;
  };

  void maybe_render(SquareComplex const& c, GridWindow const& w,
                    RenderOpts const& r) {
    if (r.format.empty()) {
      return;
    }
    auto spec = default_render_spec(c, parse_render_format(r.format));
    auto text = render_window(c, w, spec);
    if (r.file.empty()) {
      std::cout << text;
    } else {
      write_file(r.file, text);
    }
  }

  int cmd_develop(Common const& o, std::string const& bottom,
                  std::string const& left, std::size_t budget,
                  RenderOpts const& render) {
    UniversalCover cover(load_any(o.input));
    auto const&    c = cover.complex();
    DevelopOptions opt;
    opt.cell_budget = budget;
    auto r = develop_quadrant(cover, word_arg(c, bottom), word_arg(c, left),
                              opt);
    Json j      = window_json(c, r.window);
    j["status"] = to_string(r.status);
    j["cells"]  = r.cells;
    std::string h = "status: " + to_string(r.status) + "\n";
    if (r.status == DevelopmentStatus::stuck) {
      j["stuck"] = Json{{"i", r.stuck_i}, {"j", r.stuck_j},
                        {"bottom", c.format(r.missing_bottom)},
                        {"left", c.format(r.missing_left)}};
      h += "no square with bottom " + c.format(r.missing_bottom) + " and left "
           + c.format(r.missing_left) + " at cell ("
           + std::to_string(r.stuck_i) + ", " + std::to_string(r.stuck_j)
           + ")\n";
    }
    if (r.complete()) {
      h += "top:   " + c.format(r.window.north()) + "\nright: "
           + c.format(r.window.east()) + "\n";
    }
    emit(o, j, render.format.empty() || !render.file.empty() ? h : "");
    maybe_render(c, r.window, render);
    switch (r.status) {
      case DevelopmentStatus::complete:
        return exit_ok;
      case DevelopmentStatus::stuck:
        return exit_counter;
      default:
        return exit_budget;
    }
  }

  struct Axes {
    std::string vertical   = "c";
    std::string horizontal = "y";
  };

  void add_axes(CLI::App* app, Axes& a) {
    app->add_option("--vertical", a.vertical, "vertical loop (default c)");
    app->add_option("--horizontal", a.horizontal,
                    "horizontal loop (default y)");
  }

  AxisPair axes_of(SquareComplex const& c, Axes const& a) {
    AxisPair p{word_arg(c, a.vertical), word_arg(c, a.horizontal)};
    validate_axes(c, p);
    return p;
  }

  int cmd_wn(Common const& o, Axes const& a, int n, long m, long rows,
             bool distinct) {
    UniversalCover cover(load_any(o.input));
    auto const&    c    = cover.complex();
    auto           axes = axes_of(c, a);
    Json           j    = Json::object();
    j["schema"]         = schema_name("wn");
    j["n"]              = n;
    std::string h;
    Json        list = Json::array();
    for (long k = 0; k < rows; ++k) {
      auto w = c.format(wn(cover, axes, n, m + k));
      list.push_back(Json{{"m", m + k}, {"word", w}});
      h += "W_" + std::to_string(n) + "(" + std::to_string(m + k) + ") = " + w
           + "\n";
    }
    j["rows"] = list;
    int code  = exit_ok;
    if (distinct) {
      auto d        = wn_distinct(cover, axes, n);
      j["distinct"] = to_json(d);
      h += "first " + std::to_string(d.expected) + " rows distinct: "
           + (d.distinct ? "yes" : "no") + "\n";
      code = d.distinct ? exit_ok : exit_counter;
    }
    emit(o, j, h);
    return code;
  }

  int cmd_strip_period(Common const& o, Axes const& a, int n,
                       std::uint64_t budget, std::string const& cert_out) {
    UniversalCover cover(load_any(o.input));
    auto const&    c    = cover.complex();
    auto           axes = axes_of(c, a);
    OrbitOptions   opt;
    opt.row_budget = budget;
    auto r = strip_period(cover, axes, n, opt);
    auto h = "n = " + std::to_string(n) + ": period "
             + std::to_string(r.period) + " (row word period "
             + std::to_string(r.word_period) + "), preperiod "
             + std::to_string(r.preperiod) + "\n";
    emit(o, to_json(r), r.budget_exhausted ? "budget exhausted\n" : h);
    if (r.budget_exhausted) {
      return exit_budget;
    }
    if (!cert_out.empty()) {
      auto cert = strip_certificate(cover, axes, n, opt);
      write_file(cert_out, to_json(c, cert).dump(2) + "\n");
    }
    return exit_ok;
  }

  int cmd_scan_commutators(Common const& o, Axes const& a, int bound) {
    UniversalCover cover(load_any(o.input));
    auto const&    c = cover.complex();
    auto s = commuting_powers_scan(cover, axes_of(c, a), bound, o.threads);
    std::string h = std::to_string(s.checked) + " pairs checked, "
                    + std::to_string(s.pairs.size()) + " commuting\n";
    for (auto const& p : s.pairs) {
      h += "  k = " + std::to_string(p.k) + ", l = " + std::to_string(p.l)
           + "\n";
    }
    emit(o, to_json(c, s), h);
    return s.pairs.empty() ? exit_ok : exit_counter;
  }

  int cmd_scan_relations(Common const& o, Axes const& a, int bound) {
    UniversalCover cover(load_any(o.input));
    auto const&    c = cover.complex();
    auto s = alternating_relation_scan(cover, axes_of(c, a), bound, o.threads);
    std::string h = std::to_string(s.tuples) + " tuples: "
                    + std::to_string(s.trivial) + " trivial, "
                    + std::to_string(s.rejected) + " rejected by exponent sums, "
                    + std::to_string(s.rectangular) + " checked as rectangles, "
                    + std::to_string(s.relations.size()) + " relations\n";
    emit(o, to_json(c, s), h);
    return s.relations.empty() ? exit_ok : exit_counter;
  }

  int cmd_crosses(Common const& o, std::string const& square) {
    UniversalCover cover(load_any(o.input));
    auto const&    c  = cover.complex();
    auto           cr = enumerate_crosses(cover, square_arg(c, square));
    std::string    h  = std::to_string(cr.size()) + " crosses through "
                    + square + "\n";
    for (std::size_t i = 0; i < cr.size(); ++i) {
      auto ax = ne_axes(c, cr[i]);
      h += "  " + std::to_string(i) + ": north " + c.format(cr[i].north.cell(1))
           + ", east " + c.format(cr[i].east.cell(1)) + ", south "
           + c.format(cr[i].south.cell(1)) + ", west "
           + c.format(cr[i].west.cell(1)) + "; NE axes "
           + c.format(ax.vertical) + " / " + c.format(ax.horizontal) + "\n";
    }
    emit(o, crosses_json(c, cr), h);
    return exit_ok;
  }

  int cmd_extend(Common const& o, std::string const& square, int index,
                 int radius, RenderOpts const& render) {
    UniversalCover cover(load_any(o.input));
    auto const&    c  = cover.complex();
    auto           cr = enumerate_crosses(cover, square_arg(c, square));
    if (index < 0 || static_cast<std::size_t>(index) >= cr.size()) {
      throw CLI::ValidationError("--cross", "index out of range");
    }
    auto e      = extend_cross(cover, cr[index], radius);
    Json j      = window_json(c, e.development.window);
    j["cross"]  = to_json(c, cr[index]);
    j["status"] = to_string(e.development.status);
    j["unique"] = e.unique;
    std::string h = "cross " + std::to_string(index) + " radius "
                    + std::to_string(radius) + ": "
                    + to_string(e.development.status) + "\n";
    emit(o, j, render.format.empty() || !render.file.empty() ? h : "");
    maybe_render(c, e.development.window, render);
    switch (e.development.status) {
      case DevelopmentStatus::complete:
        return exit_ok;
      case DevelopmentStatus::stuck:
        return exit_counter;
      default:
        return exit_budget;
    }
  }

  int cmd_certify(Common const& o, std::string const& square, int bound) {
    UniversalCover cover(load_any(o.input));
    auto const&    c    = cover.complex();
    auto           cert = certify_no_periodic_plane(
        cover, square_arg(c, square), bound, o.threads);
    std::string h = "bound " + std::to_string(bound) + ": "
                    + std::to_string(cert.entries.size())
                    + " non-closing rectangles, "
                    + std::to_string(cert.counterexamples.size())
                    + " closing\n";
    if (!cert.counterexamples.empty()) {
      auto const& x = cert.counterexamples.front();
      h += "first closing rectangle: k = "
           + std::to_string(x.sign_vertical * x.k)
           + ", l = " + std::to_string(x.sign_horizontal * x.l) + "\n";
    }
    emit(o, to_json(c, cert), h);
    return cert.ok() ? exit_ok : exit_counter;
  }

  int cmd_census(Common const& o, std::string const& square, int radius,
                 std::uint64_t budget) {
    UniversalCover cover(load_any(o.input));
    auto const&    c  = cover.complex();
    auto           s  = square_arg(c, square);
    auto           cr = enumerate_crosses(cover, s);
    CensusOptions  opt;
    opt.node_budget = budget;
    opt.threads     = o.threads;
    auto r = bounded_plane_census(cover, s, radius, cr, opt);
    std::string h = "radius " + std::to_string(radius) + ": "
                    + std::to_string(r.count()) + " windows, "
                    + (r.all_matched() ? "all" : "not all")
                    + " matched to crosses"
                    + (r.budget_exhausted ? " (budget exhausted)" : "") + "\n";
    emit(o, to_json(r), h);
    if (r.budget_exhausted) {
      return exit_budget;
    }
    return r.all_matched() ? exit_ok : exit_counter;
  }

  int cmd_periodize(Common const& o, WindowSource const& src, int bound,
                    std::string const& base) {
    UniversalCover cover(load_any(o.input));
    auto const&    c = cover.complex();
    auto           w = window_from(cover, src);
    auto v = is_window_in_periodic_plane(cover, w, bound, base, o.threads);
    if (v.certificate) {
      auto check = verify_torus(cover, *v.certificate);
      std::string h = "torus " + std::to_string(v.certificate->H) + " x "
                      + std::to_string(v.certificate->P) + ", verified: "
                      + (check.ok ? "yes" : "no: " + check.failure) + "\n";
      emit(o, to_json(c, *v.certificate), h);
      return check.ok ? exit_ok : exit_counter;
    }
    auto const& r = *v.refutation;
    std::string h = "no periodic plane through " + base + " up to bound "
                    + std::to_string(bound) + ": "
                    + (r.ok() ? "certified" : "not certified") + "\n";
    emit(o, to_json(c, r), h);
    // The window's claim (being in a periodic plane) is refuted.
    return exit_counter;
  }

  int cmd_verify(Common const& o) {
    auto doc   = Json::parse(read_text_file(o.input));
    auto cert  = certificate_from_json(doc);
    auto check = verify_certificate(cert, o.threads);
    Json j              = Json::object();
    j["schema"]         = schema_name("verify");
    j["kind"]           = check.kind;
    j["ok"]             = check.ok;
    j["counterexample"] = check.counterexample;
    j["failure"]        = check.failure;
    emit(o, j, check.kind + ": " + (check.ok ? "verified" : check.failure)
                   + "\n");
    return check.ok ? exit_ok : exit_counter;
  }

  int cmd_render(Common const& o, WindowSource const& src,
                 std::string const& format, bool no_labels) {
    UniversalCover cover(load_any(o.input));
    auto const&    c    = cover.complex();
    auto           w    = window_from(cover, src);
    auto           spec = default_render_spec(c, parse_render_format(format));
    spec.labels         = !no_labels;
    spec.color          = spec.format == RenderFormat::txt && o.out.empty()
                 && std::getenv("NO_COLOR") == nullptr && isatty(1) == 1;
    auto text = render_window(c, w, spec);
    if (o.out.empty()) {
      std::cout << text;
    } else {
      write_file(o.out, text);
    }
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square complexes: developments, anti-tori, periodic flats and "
               "the complex Z"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common       o;
  WindowSource src;
  Axes         axes;
  RenderOpts   render;
  std::string  bottom, left, square = "s", base = "s", cert_out;
  std::string  format = "svg";
  int          n = 1, bound = 32, radius = 32, index = 0;
  long         m = 0, rows = 1;
  bool         distinct = false, no_labels = false;
  std::size_t  cell_budget = 100'000'000;
  std::uint64_t node_budget = 100'000'000, row_budget = 1ULL << 32;

  auto* validate = app.add_subcommand("validate", "check VH, link condition "
                                                  "and corner table");
  add_common(validate, o);
  auto* lnk = app.add_subcommand("links", "vertex links and their girth");
  add_common(lnk, o);

  auto* develop = app.add_subcommand("develop", "develop a quadrant from two "
                                                "boundary words");
  add_common(develop, o);
  develop->add_option("--bottom", bottom, "south side word")->required();
  develop->add_option("--left", left, "west side word")->required();
  develop->add_option("--cell-budget", cell_budget, "maximum cells");
  develop->add_option("--render", render.format, "svg or txt");
  develop->add_option("--render-out", render.file, "file for the render");

  auto* wnc = app.add_subcommand("wn", "rows W_n(m) of the anti-torus plane");
  add_common(wnc, o);
  add_axes(wnc, axes);
  wnc->add_option("--n", n, "row length")->required();
  wnc->add_option("--m", m, "first row index");
  wnc->add_option("--rows", rows, "number of rows to print");
  wnc->add_flag("--distinct", distinct, "check the first k^n rows differ");

  auto* sp = app.add_subcommand("strip-period", "period of the width-n "
                                                "strip");
  add_common(sp, o);
  add_axes(sp, axes);
  sp->add_option("--n", n, "strip width")->required();
  sp->add_option("--row-budget", row_budget, "maximum rows");
  sp->add_option("--certificate", cert_out, "write a cylinder certificate");

  auto* sc = app.add_subcommand("scan-commutators",
                                "powers v^k and h^l that commute");
  add_common(sc, o);
  add_axes(sc, axes);
  sc->add_option("--bound", bound, "largest |k|, |l|");
  auto* sr = app.add_subcommand("scan-relations",
                                "relations v^k h^l v^m h^n = 1");
  add_common(sr, o);
  add_axes(sr, axes);
  sr->add_option("--bound", bound, "largest exponent");

  auto* cr = app.add_subcommand("crosses", "infinite crosses through a "
                                           "square");
  add_common(cr, o);
  cr->add_option("--square", square, "base square");

  auto* ext = app.add_subcommand("extend", "extend a cross to a plane "
                                           "window");
  add_common(ext, o);
  ext->add_option("--square", square, "base square");
  ext->add_option("--cross", index, "cross index");
  ext->add_option("--radius", radius, "window radius");
  ext->add_option("--render", render.format, "svg or txt");
  ext->add_option("--render-out", render.file, "file for the render");

  auto* cert = app.add_subcommand("certify-no-periodic",
                                  "rectangle certificate that no periodic "
                                  "plane contains the square");
  add_common(cert, o);
  cert->add_option("--square", square, "base square");
  cert->add_option("--bound", bound, "largest |k|, |l|");

  auto* census = app.add_subcommand("census", "all plane windows through a "
                                              "square");
  add_common(census, o);
  census->add_option("--square", square, "base square");
  census->add_option("--radius", radius, "window radius");
  census->add_option("--node-budget", node_budget, "maximum search nodes");

  auto* per = app.add_subcommand("periodize", "a torus containing a window");
  add_common(per, o);
  add_window_source(per, src);
  per->add_option("--bound", bound, "bound for incomplete complexes");
  per->add_option("--base", base, "base square for incomplete complexes");

  auto* ver = app.add_subcommand("verify", "check a JSON certificate");
  add_common(ver, o, "certificate JSON document");

  auto* ren = app.add_subcommand("render", "draw a window");
  add_common(ren, o);
  add_window_source(ren, src);
  ren->add_option("--format", format, "svg or txt")
      ->check(CLI::IsMember({"svg", "txt"}));
  ren->add_flag("--no-labels", no_labels, "omit square names");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*lnk) return cmd_links(o);
    if (*develop) return cmd_develop(o, bottom, left, cell_budget, render);
    if (*wnc) return cmd_wn(o, axes, n, m, rows, distinct);
    if (*sp) return cmd_strip_period(o, axes, n, row_budget, cert_out);
    if (*sc) return cmd_scan_commutators(o, axes, bound);
    if (*sr) return cmd_scan_relations(o, axes, bound);
    if (*cr) return cmd_crosses(o, square);
    if (*ext) return cmd_extend(o, square, index, radius, render);
    if (*cert) return cmd_certify(o, square, bound);
    if (*census) return cmd_census(o, square, radius, node_budget);
    if (*per) return cmd_periodize(o, src, bound, base);
    if (*ver) return cmd_verify(o);
    if (*ren) return cmd_render(o, src, format, no_labels);
  } catch (CLI::ValidationError const& e) {
    std::cerr << "sqc: " << e.what() << "\n";
    return exit_usage;
  } catch (FileError const& e) {
    std::cerr << "sqc: " << e.what() << "\n";
    return exit_file;
  } catch (BudgetExhausted const& e) {
    std::cerr << "sqc: " << e.what() << "\n";
    return exit_budget;
  } catch (ParseError const& e) {
    std::cerr << "sqc: " << e.what() << "\n";
    return exit_file;
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "sqc: malformed JSON: " << e.what() << "\n";
    return exit_file;
  } catch (DevelopmentError const& e) {
    std::cerr << "sqc: " << e.what() << "\n";
    return exit_counter;
  } catch (Error const& e) {
    std::cerr << "sqc: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
