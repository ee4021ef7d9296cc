#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdlab/arch.hpp"

namespace sdlab {

// Flat parameter vector in the canonical layout of param_segments(arch),
// plus the seed it was initialized from.
struct ModelState {
  ArchSpec arch;
  std::vector<double> params;
  std::uint64_t seed = 0;
};

// Gradient (or any vector) aligned index-for-index with ModelState::params.
struct GradVector {
  std::vector<double> values;
};

// He-style fan-in scaled uniform init: weights ~ U(-sqrt(6/fan_in),
// +sqrt(6/fan_in)), biases zero. Deterministic: identical (arch, seed) give
// bitwise-identical parameters (CounterRng keyed by the seed, one stream per
// segment in layout order).
ModelState init_model(const ArchSpec& arch, std::uint64_t seed);

// Elementwise (1-alpha)*a + alpha*b. alpha must lie in [0, 1]; the endpoints
// return bitwise copies of a and b.
ModelState interpolate_params(const ModelState& a, const ModelState& b, double alpha);

// Small dense-vector helpers shared across modules.
namespace vec {
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double norm_inf(std::span<const double> a);
// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
bool all_finite(std::span<const double> a);
}  // namespace vec

}  // namespace sdlab
