#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qcorr/errors.hpp"
#include "qcorr/vec3.hpp"

namespace qcorr {

/// Product rule for Haar averages over S^2: Gauss-Legendre in cos(theta)
/// crossed with a uniform (trapezoid) grid in phi. The integrands here are
/// trigonometric polynomials composed with smooth functions, so the phi rule
/// is spectrally accurate.
struct QuadratureSpec {
  int n_theta = 64;
  int n_phi = 128;

  QuadratureSpec() = default;
  QuadratureSpec(int nt, int np) : n_theta(nt), n_phi(np) {}

  QuadratureSpec doubled() const { return {2 * n_theta, 2 * n_phi}; }
};

struct McSpec {
  std::int64_t n_samples = 100000;
  std::uint64_t seed = 0;
};

struct McResult {
  double mean = 0.0;
  double std_err = 0.0;
};

/// Gauss-Legendre nodes and weights on [-1, 1], ascending nodes.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Precomputed sphere nodes with Haar-normalized weights (sum = 1).
class SphereGrid {
 public:
  explicit SphereGrid(const QuadratureSpec& spec);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<Vec3>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<Vec3> nodes_;
  std::vector<double> weights_;
};

namespace rng {

/// Counter-based generator: the k-th draw of a stream is a pure function of
/// (seed, k), so parallel chunks reproduce bit-for-bit from (seed, chunk
/// index) and sequential evaluation is just chunk size = everything.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
  return mix64(seed + (counter + 1) * 0x9e3779b97f4a7c15ULL);
}

/// Uniform in the open interval (0, 1).
inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
  return (static_cast<double>(at(seed, counter) >> 11) + 0.5) * 0x1.0p-53;
}

/// Haar-uniform point on S^2 via three (Box-Muller) Gaussian components,
/// consuming counters [4k, 4k+4) of the stream.
Vec3 unit_vector(std::uint64_t seed, std::uint64_t index);

/// Derives an independent stream for a named purpose from one user seed.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t salt) {
  return mix64(seed ^ mix64(salt));
}

}  // namespace rng

namespace detail {

/// Evaluation is split into fixed-size chunks whose partial sums are combined
/// in chunk order, so the result does not depend on the thread count.
inline constexpr std::size_t kChunkSize = 256;

int max_threads();
void set_max_threads(int n);

void run_chunks_threaded(std::size_t n_chunks, int threads,
                         const std::function<void(std::size_t)>& run_chunk);

template <typename Fn>
double chunked_sum(std::size_t n_items, Fn&& item_value) {
  const std::size_t n_chunks = (n_items + kChunkSize - 1) / kChunkSize;
  std::vector<double> partial(n_chunks, 0.0);
  auto run_chunk = [&](std::size_t c) {
    const std::size_t lo = c * kChunkSize;
    const std::size_t hi = std::min(n_items, lo + kChunkSize);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += item_value(i);
    partial[c] = acc;
  };
  const int threads = max_threads();
  if (threads <= 1 || n_chunks <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    run_chunks_threaded(n_chunks, threads, run_chunk);
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

template <typename Sample>
McResult mc_run(const McSpec& spec, Sample&& sample) {
  if (spec.n_samples < 1) throw InvalidInput("mc average: n_samples must be >= 1");
  const auto n = static_cast<std::size_t>(spec.n_samples);
  const std::size_t n_chunks = (n + kChunkSize - 1) / kChunkSize;
  std::vector<double> sum(n_chunks, 0.0), sumsq(n_chunks, 0.0);
  auto run_chunk = [&](std::size_t c) {
    const std::size_t lo = c * kChunkSize;
    const std::size_t hi = std::min(n, lo + kChunkSize);
    double s = 0.0, s2 = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      const double v = sample(static_cast<std::uint64_t>(i));
      s += v;
      s2 += v * v;
    }
    sum[c] = s;
    sumsq[c] = s2;
  };
  const int threads = max_threads();
  if (threads <= 1 || n_chunks <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    run_chunks_threaded(n_chunks, threads, run_chunk);
  }
  double s = 0.0, s2 = 0.0;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    s += sum[c];
    s2 += sumsq[c];
  }
  const double mean = s / static_cast<double>(n);
  double var = s2 / static_cast<double>(n) - mean * mean;
  if (var < 0.0) var = 0.0;
  const double std_err = n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
  return {mean, std_err};
}

}  // namespace detail

/// (1/4pi) integral of f over the sphere.
template <typename F>
double average_s2(F&& f, const SphereGrid& grid) {
  const auto& nodes = grid.nodes();
  const auto& w = grid.weights();
  return detail::chunked_sum(grid.size(), [&](std::size_t i) { return w[i] * f(nodes[i]); });
}

template <typename F>
double average_s2(F&& f, const QuadratureSpec& spec = {}) {
  SphereGrid grid(spec);
  return average_s2(std::forward<F>(f), grid);
}

/// Tensor-product average over S^2 x S^2; f(n, m).
template <typename F>
double average_s2x_s2(F&& f, const QuadratureSpec& spec = {}) {
  SphereGrid grid(spec);
  const auto& nodes = grid.nodes();
  const auto& w = grid.weights();
  const std::size_t n = grid.size();
  // Outer loop over m-nodes; each work item is a full inner n-average.
  return detail::chunked_sum(n, [&](std::size_t j) {
    const Vec3& m = nodes[j];
    double inner = 0.0;
    for (std::size_t i = 0; i < n; ++i) inner += w[i] * f(nodes[i], m);
    return w[j] * inner;
  });
}

template <typename F>
McResult mc_average_s2(F&& f, const McSpec& spec) {
  return detail::mc_run(spec,
                        [&](std::uint64_t i) { return f(rng::unit_vector(spec.seed, i)); });
}

template <typename F>
McResult mc_average_s2x_s2(F&& f, const McSpec& spec) {
  return detail::mc_run(spec, [&](std::uint64_t i) {
    return f(rng::unit_vector(spec.seed, 2 * i), rng::unit_vector(spec.seed, 2 * i + 1));
  });
}

}  // namespace qcorr
