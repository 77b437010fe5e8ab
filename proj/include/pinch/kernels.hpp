#pragma once

// Batch kernels over seeds or spindle parameters. Each has a serial
// reference version and an OpenMP version that must return identical
// results in the same order, whatever the thread count.

#include <cstdint>
#include <vector>

#include "pinch/verify.hpp"

namespace pinch {

/// Seeds first, first + 1, ..., last (inclusive).
struct SeedRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;

  std::size_t size() const { return static_cast<std::size_t>(last - first) + 1; }
};

struct VerifyRecord {
  std::uint64_t seed = 0;  // grid index for spindle batches
  ShellResult shell;
};

std::vector<VerifyRecord> verify_random_serial(const PinchSpec& pinch, SeedRange seeds, int modes,
                                               const CheckOptions& options = {});
std::vector<VerifyRecord> verify_random_parallel(const PinchSpec& pinch, SeedRange seeds,
                                                 int modes, const CheckOptions& options = {});

std::vector<VerifyRecord> verify_revolution_serial(const PinchSpec& pinch, SeedRange seeds,
                                                   const CheckOptions& options = {});
std::vector<VerifyRecord> verify_revolution_parallel(const PinchSpec& pinch, SeedRange seeds,
                                                     const CheckOptions& options = {});

/// check_bounds on the spindle with each inscribed radius.
std::vector<VerifyRecord> verify_spindles_serial(const PinchSpec& pinch,
                                                 const std::vector<double>& r_tildes,
                                                 const CheckOptions& options = {});
std::vector<VerifyRecord> verify_spindles_parallel(const PinchSpec& pinch,
                                                   const std::vector<double>& r_tildes,
                                                   const CheckOptions& options = {});

/// Measured radii of built spindles next to the closed forms.
struct SweepPoint {
  double r_tilde = 0.0;
  Radii measured;             // numeric_radii about the symmetry centre
  double outer_bound = 0.0;   // outer_radius_bound(r_tilde)
};

std::vector<SweepPoint> spindle_sweep_serial(const PinchSpec& pinch,
                                             const std::vector<double>& r_tildes,
                                             std::size_t samples = 4096);
std::vector<SweepPoint> spindle_sweep_parallel(const PinchSpec& pinch,
                                               const std::vector<double>& r_tildes,
                                               std::size_t samples = 4096);

/// n equally spaced radii from R2 to R1 inclusive (n >= 2).
std::vector<double> radius_grid(const PinchSpec& pinch, std::size_t n);

}  // namespace pinch
