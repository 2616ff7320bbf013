#pragma once

#include "trigsurf/sample_set.hpp"
#include "trigsurf/trig_poly.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trigsurf {

/// Thrown when the slice sampler exhausts its attempt budget, typically
/// because the zero set is empty or vanishingly thin along random slices.
class SamplingError : public std::runtime_error {
public:
    SamplingError(const std::string& what, int attempts)
        : std::runtime_error(what), attempts_(attempts) {}
    int attempts() const noexcept { return attempts_; }

private:
    int attempts_;
};

/// Draws `count` points on the zero set of a real-valued polynomial, each
/// with |psi(x)| <= tol. Per point: pick a random axis and random values for
/// the other coordinates, scan psi on a uniform 256-node grid along the free
/// axis, pick one sign-change interval uniformly at random, and bisect.
/// Slices without a sign change are redrawn, up to max_attempts per point.
/// Points are independent draws; the result is deterministic in the seed.
SampleSet sample_zero_set(const TrigPolynomial& p, int count, double tol, std::uint64_t seed,
                          int max_attempts = 1000);

/// Dense marching-style extraction of the zero set for plotting, dim 2 or 3.
/// Evaluates psi on a uniform grid with `grid_resolution` cells per axis and
/// emits the linear-interpolation crossing of every grid edge with a sign
/// change. Residuals are bounded by 2 pi k_max |c|_1 / grid_resolution.
SampleSet trace_zero_set(const TrigPolynomial& p, int grid_resolution);

}  // namespace trigsurf
