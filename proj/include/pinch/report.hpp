#pragma once

// Serialization of verification records and spindle profiles. The JSON-lines
// and CSV layouts are versioned by kReportSchemaVersion (see README).

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pinch/kernels.hpp"

namespace pinch {

inline constexpr int kReportSchemaVersion = 1;

/// One JSON object (no trailing newline) with full binary64 precision.
std::string record_json(const VerifyRecord& record, const PinchSpec& pinch);

/// One line per record, in the given order.
void write_json_lines(std::ostream& os, const std::vector<VerifyRecord>& records,
                      const PinchSpec& pinch);

/// Worst (smallest) margins of a batch.
struct MarginSummary {
  std::size_t bodies = 0;
  std::size_t violations = 0;
  double max_width = 0.0;
  double min_width_margin = 0.0;
  double min_outer_margin = 0.0;
  std::optional<double> min_quotient_margin;
};

MarginSummary summarize(const std::vector<VerifyRecord>& records);

struct PinchSummary {
  PinchSpec pinch;
  MarginSummary summary;
};

/// Header plus one row per pinch.
void write_summary_csv(std::ostream& os, const std::vector<PinchSummary>& rows);

/// n samples of the profile: index, azimuthal-equidistant x and y about the
/// origin, polar rho and phi, segment index, curvature tag and curvature.
void write_profile_csv(std::ostream& os, const ProfileCurve& profile, std::size_t n);

/// Meridian in azimuthal-equidistant coordinates, with the circles of radius
/// `inner` and `outer` about the origin. The viewBox is fixed at
/// [-1.25 R1, 1.25 R1]^2 with the symmetry centre at the origin.
void write_svg(std::ostream& os, const ProfileCurve& profile, const PinchSpec& pinch, double inner,
               double outer, std::size_t n = 720);

}  // namespace pinch
