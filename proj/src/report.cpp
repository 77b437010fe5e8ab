#include "pinch/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pinch {

namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string full(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

}  // namespace

std::string record_json(const VerifyRecord& record, const PinchSpec& pinch) {
  const ShellResult& s = record.shell;
  json j;
  j["schema"] = kReportSchemaVersion;
  j["seed"] = record.seed;
  j["pinch"] = {{"c", pinch.space().c()}, {"kappa1", pinch.kappa1()}, {"kappa2", pinch.kappa2()}};
  j["center"] = {s.center.w, s.center.x, s.center.y};
  j["r"] = s.inner_r;
  j["R"] = s.outer_R;
  j["width"] = s.width;
  j["quotient"] = s.quotient;
  j["bounds"] = {{"width", s.width_bound},
                 {"outer", s.outer_bound},
                 {"quotient", optional_number(s.quotient_bound)}};
  j["satisfied"] = {
      {"width", s.satisfied.width}, {"outer", s.satisfied.outer}, {"quotient", s.satisfied.quotient}};
  j["margins"] = {{"width", s.margins.width},
                  {"outer", s.margins.outer},
                  {"quotient", optional_number(s.margins.quotient)}};
  return j.dump();
}

void write_json_lines(std::ostream& os, const std::vector<VerifyRecord>& records,
                      const PinchSpec& pinch) {
  for (const VerifyRecord& r : records) os << record_json(r, pinch) << '\n';
}

MarginSummary summarize(const std::vector<VerifyRecord>& records) {
  MarginSummary out;
  out.bodies = records.size();
  out.min_width_margin = std::numeric_limits<double>::infinity();
  out.min_outer_margin = std::numeric_limits<double>::infinity();
  for (const VerifyRecord& r : records) {
    const ShellResult& s = r.shell;
    if (!s.satisfied.all()) ++out.violations;
    out.max_width = std::max(out.max_width, s.width);
    out.min_width_margin = std::min(out.min_width_margin, s.margins.width);
    out.min_outer_margin = std::min(out.min_outer_margin, s.margins.outer);
    if (s.margins.quotient) {
      out.min_quotient_margin =
          std::min(out.min_quotient_margin.value_or(*s.margins.quotient), *s.margins.quotient);
    }
  }
  return out;
}

void write_summary_csv(std::ostream& os, const std::vector<PinchSummary>& rows) {
  os << "schema,c,kappa1,kappa2,bodies,violations,max_width,min_width_margin,min_outer_margin,"
        "min_quotient_margin\n";
  for (const PinchSummary& row : rows) {
    const MarginSummary& m = row.summary;
    os << kReportSchemaVersion << ',' << full(row.pinch.space().c()) << ','
       << full(row.pinch.kappa1()) << ',' << full(row.pinch.kappa2()) << ',' << m.bodies << ','
       << m.violations << ',' << full(m.max_width) << ',' << full(m.min_width_margin) << ','
       << full(m.min_outer_margin) << ','
       << (m.min_quotient_margin ? full(*m.min_quotient_margin) : std::string()) << '\n';
  }
}

void write_profile_csv(std::ostream& os, const ProfileCurve& profile, std::size_t n) {
  os << "index,x,y,rho,phi,segment,tag,curvature\n";
  const auto samples = sample_profile(profile, n);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const ProfileSample& s = samples[i];
    const Polar p = to_polar(profile.space, s.point);
    os << i << ',' << full(p.rho * std::cos(p.phi)) << ',' << full(p.rho * std::sin(p.phi)) << ','
       << full(p.rho) << ',' << full(p.phi) << ',' << s.segment << ',' << to_string(s.tag) << ','
       << full(s.curvature) << '\n';
  }
}

void write_svg(std::ostream& os, const ProfileCurve& profile, const PinchSpec& pinch, double inner,
               double outer, std::size_t n) {
  const double scale = pinch.R1();
  const double stroke = 0.004 * scale;
  std::ostringstream path;
  path << std::setprecision(9);
  const auto samples = sample_profile(profile, n);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Polar p = to_polar(profile.space, samples[i].point);
    path << (i == 0 ? "M" : " L") << p.rho * std::cos(p.phi) << ' ' << p.rho * std::sin(p.phi);
  }
  path << " Z";

  os << std::setprecision(9);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -1.25 * scale << ' '
     << -1.25 * scale << ' ' << 2.5 * scale << ' ' << 2.5 * scale
     << "\" width=\"600\" height=\"600\">\n";
  os << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" << stroke << "\">\n";
  os << "<line x1=\"" << -1.25 * scale << "\" y1=\"0\" x2=\"" << 1.25 * scale
     << "\" y2=\"0\" stroke=\"#999\" stroke-dasharray=\"" << 4 * stroke << "\"/>\n";
  os << "<circle cx=\"0\" cy=\"0\" r=\"" << inner << "\" stroke=\"#1f77b4\" stroke-dasharray=\""
     << 3 * stroke << "\"/>\n";
  os << "<circle cx=\"0\" cy=\"0\" r=\"" << outer << "\" stroke=\"#d62728\" stroke-dasharray=\""
     << 3 * stroke << "\"/>\n";
  os << "<path d=\"" << path.str() << "\" stroke=\"#000\"/>\n";
  os << "</g>\n</svg>\n";
}

}  // namespace pinch
