#include "pinch/kernels.hpp"

#include <exception>

#include "pinch/errors.hpp"

namespace pinch {

namespace {

// out[i] = task(i). The parallel version writes by index, so the result does
// not depend on the schedule; the first exception (by index) is rethrown.
template <class T, class Task>
std::vector<T> run_serial(std::size_t n, Task&& task) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(task(i));
  return out;
}

template <class T, class Task>
std::vector<T> run_parallel(std::size_t n, Task&& task) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = task(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

void check_range(SeedRange seeds) {
  if (seeds.last < seeds.first) throw DomainError("empty seed range");
}

auto random_task(const PinchSpec& pinch, SeedRange seeds, int modes, const CheckOptions& options) {
  return [=](std::size_t i) {
    const std::uint64_t seed = seeds.first + i;
    const Body body = random_pinched_curve(pinch, seed, modes);
    return VerifyRecord{seed, check_bounds(body, pinch, options)};
  };
}

auto revolution_task(const PinchSpec& pinch, SeedRange seeds, const CheckOptions& options) {
  return [=](std::size_t i) {
    const std::uint64_t seed = seeds.first + i;
    const Body body = random_revolution_body(pinch, seed);
    return VerifyRecord{seed, check_bounds(body, pinch, options)};
  };
}

auto spindle_task(const PinchSpec& pinch, const std::vector<double>& r_tildes,
                  const CheckOptions& options) {
  return [&pinch, &r_tildes, options](std::size_t i) {
    ProfileCurve m = build_spindle(SpindleSpec{pinch, r_tildes[i]});
    const Body body = RevolutionBody{std::move(m)};
    return VerifyRecord{i, check_bounds(body, pinch, options)};
  };
}

auto sweep_task(const PinchSpec& pinch, const std::vector<double>& r_tildes, std::size_t samples) {
  return [&pinch, &r_tildes, samples](std::size_t i) {
    const double r = r_tildes[i];
    const ProfileCurve m = build_spindle(SpindleSpec{pinch, r});
    return SweepPoint{r, numeric_radii(m, samples), outer_radius_bound(pinch, r)};
  };
}

}  // namespace

std::vector<VerifyRecord> verify_random_serial(const PinchSpec& pinch, SeedRange seeds, int modes,
                                               const CheckOptions& options) {
  check_range(seeds);
  return run_serial<VerifyRecord>(seeds.size(), random_task(pinch, seeds, modes, options));
}

std::vector<VerifyRecord> verify_random_parallel(const PinchSpec& pinch, SeedRange seeds,
                                                 int modes, const CheckOptions& options) {
  check_range(seeds);
  return run_parallel<VerifyRecord>(seeds.size(), random_task(pinch, seeds, modes, options));
}

std::vector<VerifyRecord> verify_revolution_serial(const PinchSpec& pinch, SeedRange seeds,
                                                   const CheckOptions& options) {
  check_range(seeds);
  return run_serial<VerifyRecord>(seeds.size(), revolution_task(pinch, seeds, options));
}

std::vector<VerifyRecord> verify_revolution_parallel(const PinchSpec& pinch, SeedRange seeds,
                                                     const CheckOptions& options) {
  check_range(seeds);
  return run_parallel<VerifyRecord>(seeds.size(), revolution_task(pinch, seeds, options));
}

std::vector<VerifyRecord> verify_spindles_serial(const PinchSpec& pinch,
                                                 const std::vector<double>& r_tildes,
                                                 const CheckOptions& options) {
  return run_serial<VerifyRecord>(r_tildes.size(), spindle_task(pinch, r_tildes, options));
}

std::vector<VerifyRecord> verify_spindles_parallel(const PinchSpec& pinch,
                                                   const std::vector<double>& r_tildes,
                                                   const CheckOptions& options) {
  return run_parallel<VerifyRecord>(r_tildes.size(), spindle_task(pinch, r_tildes, options));
}

std::vector<SweepPoint> spindle_sweep_serial(const PinchSpec& pinch,
                                             const std::vector<double>& r_tildes,
                                             std::size_t samples) {
  return run_serial<SweepPoint>(r_tildes.size(), sweep_task(pinch, r_tildes, samples));
}

std::vector<SweepPoint> spindle_sweep_parallel(const PinchSpec& pinch,
                                               const std::vector<double>& r_tildes,
                                               std::size_t samples) {
  return run_parallel<SweepPoint>(r_tildes.size(), sweep_task(pinch, r_tildes, samples));
}

std::vector<double> radius_grid(const PinchSpec& pinch, std::size_t n) {
  if (n < 2) throw DomainError("radius grid needs at least 2 points");
  std::vector<double> out(n);
  const double step = pinch.radius_gap() / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = pinch.R2() + step * static_cast<double>(i);
  out.back() = pinch.R1();
  return out;
}

}  // namespace pinch
