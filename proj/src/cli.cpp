#include "pinch/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pinch/bounds.hpp"
#include "pinch/kernels.hpp"
#include "pinch/report.hpp"

namespace pinch {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeometryArgs {
  bool flat = false;
  std::optional<double> spherical;
  std::optional<double> hyperbolic;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
};

void add_geometry_options(CLI::App* cmd, GeometryArgs& g) {
  auto* flat = cmd->add_flag("--flat", g.flat, "Euclidean plane (default)");
  auto* sph = cmd->add_option("--spherical", g.spherical, "sphere of curvature c = K^2")
                  ->type_name("K");
  auto* hyp = cmd->add_option("--hyperbolic", g.hyperbolic, "hyperbolic plane, c = -K^2")
                  ->type_name("K");
  flat->excludes(sph)->excludes(hyp);
  sph->excludes(hyp);
  cmd->add_option("--k1", g.kappa1, "lower normal-curvature bound kappa1")->required();
  cmd->add_option("--k2", g.kappa2, "upper normal-curvature bound kappa2")->required();
}

PinchSpec make_pinch(const GeometryArgs& g) {
  const SpaceCurvature space = g.spherical    ? SpaceCurvature::spherical(*g.spherical)
                               : g.hyperbolic ? SpaceCurvature::hyperbolic(*g.hyperbolic)
                                              : SpaceCurvature::flat();
  if (auto why = admissibility_violation(space, g.kappa1, g.kappa2)) {
    throw UsageError("inadmissible pinch: " + *why);
  }
  return PinchSpec::make(space, g.kappa1, g.kappa2);
}

// A number, or one of the sentinels max-width / max-quotient.
double resolve_radius(const PinchSpec& pinch, const std::string& text) {
  if (text == "max-width") return width_bound(pinch).maximizer_r;
  if (text == "max-quotient") return quotient_bound(pinch).maximizer_r;
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    throw UsageError("--r expects a number, max-width or max-quotient (got '" + text + "')");
  }
  return v;
}

SeedRange parse_seeds(const std::string& text) {
  const auto dots = text.find("..");
  auto parse = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw UsageError("--seeds expects a..b with non-negative integers (got '" + text + "')");
    }
    return v;
  };
  const std::string_view view(text);
  SeedRange r;
  if (dots == std::string::npos) {
    r.first = r.last = parse(view);
  } else {
    r.first = parse(view.substr(0, dots));
    r.last = parse(view.substr(dots + 2));
  }
  if (r.last < r.first) throw UsageError("--seeds range is empty: " + text);
  return r;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw UsageError("cannot open output file " + path);
  return os;
}

json geometry_json(const PinchSpec& p) {
  return {{"c", p.space().c()},
          {"description", p.space().describe()},
          {"kappa1", p.kappa1()},
          {"kappa2", p.kappa2()},
          {"R1", p.R1()},
          {"R2", p.R2()}};
}

// ---------------------------------------------------------------------------

struct BoundArgs {
  GeometryArgs geometry;
  std::optional<std::string> r;
  std::optional<std::string> json_path;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const PinchSpec p = make_pinch(a.geometry);
  const bool flat = p.space().is_flat();
  const WidthBoundResult w = width_bound(p);
  json j;
  j["schema"] = kReportSchemaVersion;
  j["pinch"] = geometry_json(p);

  out << "geometry: " << p.space().describe() << '\n';
  out << "kappa1: " << p.kappa1() << "\nkappa2: " << p.kappa2() << '\n';
  out << "R1: " << p.R1() << "\nR2: " << p.R2() << '\n';
  out << "width_bound: " << w.bound << '\n';
  out << "width_maximizer_r: " << w.maximizer_r << '\n';
  out << "width_maximizer_R: " << w.attained_R << '\n';
  j["width_bound"] = {{"bound", w.bound}, {"maximizer_r", w.maximizer_r}, {"maximizer_R", w.attained_R}};

  if (a.r) {
    const double r = resolve_radius(p, *a.r);
    const double R = outer_radius_bound(p, r);
    out << "r: " << r << "\nouter_radius_bound: " << R << '\n';
    j["outer_radius_bound"] = {{"r", r}, {"R", R}};
  }
  if (flat) {
    const QuotientBoundResult q = quotient_bound(p);
    const double coarse = quotient_bound_coarse(p);
    out << "quotient_bound: " << q.bound << '\n';
    out << "quotient_maximizer_r: " << q.maximizer_r << '\n';
    out << "quotient_bound_coarse: " << coarse << '\n';
    j["quotient_bound"] = {
        {"bound", q.bound}, {"maximizer_r", q.maximizer_r}, {"maximizer_R", q.attained_R}};
    j["quotient_bound_coarse"] = coarse;
  }
  // Stability constants for almost umbilical bodies with kappa = kappa1.
  const StabilityResult s = stability(p.space(), p.kappa1(), 0.0);
  out << "stability_width_constant: " << s.width_constant << '\n';
  j["stability"] = {{"kappa", p.kappa1()}, {"width_constant", s.width_constant}};
  if (s.quotient_constant) {
    out << "stability_quotient_constant: " << *s.quotient_constant << '\n';
    j["stability"]["quotient_constant"] = *s.quotient_constant;
  }
  if (a.json_path) open_output(*a.json_path) << j.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SpindleArgs {
  GeometryArgs geometry;
  std::string r;
  std::size_t samples = 720;
  std::optional<std::string> csv_path;
  std::optional<std::string> svg_path;
  std::optional<std::string> json_path;
};

int cmd_spindle(const SpindleArgs& a, std::ostream& out) {
  const PinchSpec p = make_pinch(a.geometry);
  const SpindleSpec spec{p, resolve_radius(p, a.r)};
  const Radii radii = spindle_radii(spec);
  const ProfileCurve profile = build_spindle(spec);
  const double width = radii.outer - radii.inner;
  const double quotient = radii.outer / radii.inner;
  out << "r_tilde: " << radii.inner << '\n';
  out << "R_tilde: " << radii.outer << '\n';
  out << "width: " << width << '\n';
  out << "quotient: " << quotient << '\n';
  out << "segments: " << profile.segments.size() << '\n';
  if (a.csv_path) {
    auto os = open_output(*a.csv_path);
    write_profile_csv(os, profile, a.samples);
  }
  if (a.svg_path) {
    auto os = open_output(*a.svg_path);
    write_svg(os, profile, p, radii.inner, radii.outer);
  }
  if (a.json_path) {
    json j;
    j["schema"] = kReportSchemaVersion;
    j["pinch"] = geometry_json(p);
    j["r_tilde"] = radii.inner;
    j["R_tilde"] = radii.outer;
    j["width"] = width;
    j["quotient"] = quotient;
    open_output(*a.json_path) << j.dump(2) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  GeometryArgs geometry;
  std::string family = "random";
  std::string seeds = "0..99";
  int modes = 6;
  std::size_t grid = 33;
  double bound_tolerance = 1e-7;
  double pinch_tolerance = 1e-8;
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const PinchSpec p = make_pinch(a.geometry);
  const CheckOptions options{a.bound_tolerance, a.pinch_tolerance};
  std::vector<VerifyRecord> records;
  if (a.family == "random") {
    if (!p.space().is_flat()) {
      throw UsageError("--family random needs --flat; use --family revolution or spindle");
    }
    records = verify_random_parallel(p, parse_seeds(a.seeds), a.modes, options);
  } else if (a.family == "revolution") {
    records = verify_revolution_parallel(p, parse_seeds(a.seeds), options);
  } else {
    std::vector<double> radii = radius_grid(p, std::max<std::size_t>(a.grid, 2));
    radii.push_back(width_bound(p).maximizer_r);
    if (p.space().is_flat() && !p.degenerate()) radii.push_back(quotient_maximizer(p));
    records = verify_spindles_parallel(p, radii, options);
  }
  std::sort(records.begin(), records.end(),
            [](const VerifyRecord& x, const VerifyRecord& y) { return x.seed < y.seed; });

  const MarginSummary m = summarize(records);
  out << "family: " << a.family << '\n';
  out << "geometry: " << p.space().describe() << '\n';
  out << "kappa1: " << p.kappa1() << "\nkappa2: " << p.kappa2() << '\n';
  out << "bodies: " << m.bodies << '\n';
  out << "satisfied: " << m.bodies - m.violations << '/' << m.bodies << '\n';
  out << "max_width: " << m.max_width << '\n';
  out << "width_bound: " << width_bound(p).bound << '\n';
  out << "min_width_margin: " << m.min_width_margin << '\n';
  out << "min_outer_margin: " << m.min_outer_margin << '\n';
  if (m.min_quotient_margin) out << "min_quotient_margin: " << *m.min_quotient_margin << '\n';

  if (a.json_path) {
    auto os = open_output(*a.json_path);
    write_json_lines(os, records, p);
  }
  if (a.csv_path) {
    auto os = open_output(*a.csv_path);
    write_summary_csv(os, {PinchSummary{p, m}});
  }
  if (m.violations > 0) {
    const char* label = a.family == "spindle" ? "grid index" : "seed";
    for (const VerifyRecord& r : records) {
      if (!r.shell.satisfied.all()) {
        err << "violation at " << label << ' ' << r.seed << ": width margin "
            << r.shell.margins.width << ", outer margin " << r.shell.margins.outer << '\n';
      }
    }
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp spherical-shell bounds for curvature-pinched convex bodies", "pinchshell"};
  app.require_subcommand(1);

  BoundArgs bound;
  auto* b = app.add_subcommand("bound", "print the width, outer-radius and quotient bounds");
  add_geometry_options(b, bound.geometry);
  b->add_option("--r", bound.r, "inner radius r for outer_radius_bound (number, max-width, max-quotient)");
  b->add_option("--json", bound.json_path, "write the report as JSON");

  SpindleArgs spindle;
  auto* s = app.add_subcommand("spindle", "build the rounded spindle with inscribed radius r");
  add_geometry_options(s, spindle.geometry);
  s->add_option("--r", spindle.r, "inscribed radius (number, max-width, max-quotient)")->required();
  s->add_option("--samples", spindle.samples, "profile samples for --csv")
      ->check(CLI::Range(std::size_t{3}, std::size_t{10000000}));
  s->add_option("--csv", spindle.csv_path, "write profile samples as CSV");
  s->add_option("--svg", spindle.svg_path, "write the meridian as SVG");
  s->add_option("--json", spindle.json_path, "write radii as JSON");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check the bounds on a batch of generated bodies");
  add_geometry_options(v, verify.geometry);
  v->add_option("--family", verify.family, "body family")
      ->check(CLI::IsMember({"random", "revolution", "spindle"}));
  v->add_option("--seeds", verify.seeds, "inclusive seed range a..b");
  v->add_option("--modes", verify.modes, "highest Fourier mode of random curves");
  v->add_option("--grid", verify.grid, "spindle family: number of inscribed radii");
  v->add_option("--bound-tol", verify.bound_tolerance, "slack allowed on each bound");
  v->add_option("--pinch-tol", verify.pinch_tolerance, "slack allowed on the curvature pinch");
  v->add_option("--json", verify.json_path, "write one JSON record per body");
  v->add_option("--csv", verify.csv_path, "write the worst-margin summary as CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(9);
  int code = kExitError;
  try {
    if (b->parsed()) code = cmd_bound(bound, out);
    if (s->parsed()) code = cmd_spindle(spindle, out);
    if (v->parsed()) code = cmd_verify(verify, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = kExitError;
  }
  out.flags(flags);
  out.precision(precision);
  return code;
}

}  // namespace pinch
