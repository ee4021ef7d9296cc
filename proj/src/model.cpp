#include "sdlab/model.hpp"

#include <cmath>
#include <stdexcept>

#include "sdlab/rng.hpp"

namespace sdlab {

ModelState init_model(const ArchSpec& arch, std::uint64_t seed) {
  validate(arch);
  ModelState model;
  model.arch = arch;
  model.seed = seed;
  model.params.assign(param_count(arch), 0.0);

  const auto segs = param_segments(arch);
  for (std::size_t si = 0; si < segs.size(); ++si) {
    const auto& seg = segs[si];
    if (!seg.is_weight) continue;  // biases stay zero
    CounterRng rng(CounterRng::derive(seed, si));
    const double bound = std::sqrt(6.0 / static_cast<double>(seg.fan_in));
    for (std::size_t i = 0; i < seg.count; ++i) {
      model.params[seg.offset + i] = bound * (2.0 * rng.next_double() - 1.0);
    }
  }
  return model;
}

ModelState interpolate_params(const ModelState& a, const ModelState& b, double alpha) {
  if (a.arch != b.arch) {
    throw std::invalid_argument("interpolate_params: architecture mismatch");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("interpolate_params: alpha must be in [0, 1]");
  }
  if (alpha == 0.0) return a;
  if (alpha == 1.0) return b;
  ModelState out = a;
  for (std::size_t i = 0; i < out.params.size(); ++i) {
    out.params[i] = (1.0 - alpha) * a.params[i] + alpha * b.params[i];
  }
  return out;
}

namespace vec {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double norm_inf(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

bool all_finite(std::span<const double> a) {
  for (double v : a) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace vec

}  // namespace sdlab
