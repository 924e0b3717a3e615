#include "qcorr/sphere_avg.hpp"

#include <cmath>
#include <thread>

namespace qcorr {

namespace {

constexpr double kPi = 3.14159265358979323846;

double legendre(double x, int n, double& deriv) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  deriv = n * (x * p1 - p0) / (x * x - 1.0);
  return p1;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 2) throw InvalidInput("gauss_legendre: need at least 2 nodes");
  std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int k = 0; k < half; ++k) {
    // Tricomi initial guess, then Newton.
    double xi = std::cos(kPi * (4.0 * (k + 1) - 1.0) / (4.0 * n + 2.0)) *
                (1.0 - 1.0 / (8.0 * n * n) + 1.0 / (8.0 * n * n * n));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      const double p = legendre(xi, n, dp);
      const double dx = p / dp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(xi, n, dp);
    const double wk = 2.0 / ((1.0 - xi * xi) * dp * dp);
    // Roots come out descending; store ascending from both ends.
    x[static_cast<std::size_t>(n - 1 - k)] = xi;
    w[static_cast<std::size_t>(n - 1 - k)] = wk;
    x[static_cast<std::size_t>(k)] = -xi;
    w[static_cast<std::size_t>(k)] = wk;
  }
  return {std::move(x), std::move(w)};
}

SphereGrid::SphereGrid(const QuadratureSpec& spec) {
  if (spec.n_theta < 2 || spec.n_phi < 4)
    throw InvalidInput("SphereGrid: need n_theta >= 2 and n_phi >= 4");

  // Composite rule in t = cos(theta): one Gauss-Legendre panel per
  // hemisphere. Several integrands of interest contain |t| (through |En| or
  // |n.b| with an axis-aligned state), and a panel boundary at the equator
  // keeps the rule spectrally accurate for them.
  std::vector<double> ct, wt;
  if (spec.n_theta < 4) {
    auto [x, w] = gauss_legendre(spec.n_theta);
    ct = std::move(x);
    wt = std::move(w);
  } else {
    const int half = (spec.n_theta + 1) / 2;
    const auto [x, w] = gauss_legendre(half);
    for (std::size_t i = 0; i < x.size(); ++i) {
      ct.push_back(0.5 * (x[i] - 1.0));
      wt.push_back(0.5 * w[i]);
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      ct.push_back(0.5 * (x[i] + 1.0));
      wt.push_back(0.5 * w[i]);
    }
  }

  const auto nt = ct.size();
  const auto np = static_cast<std::size_t>(spec.n_phi);
  nodes_.reserve(nt * np);
  weights_.reserve(nt * np);
  for (std::size_t i = 0; i < nt; ++i) {
    const double c = ct[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double wi = 0.5 * wt[i] / static_cast<double>(np);
    for (std::size_t k = 0; k < np; ++k) {
      const double phi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(np);
      nodes_.push_back({s * std::cos(phi), s * std::sin(phi), c});
      weights_.push_back(wi);
    }
  }
}

namespace rng {

Vec3 unit_vector(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t base = 4 * index;
  const double u1 = uniform01(seed, base);
  const double u2 = uniform01(seed, base + 1);
  const double u3 = uniform01(seed, base + 2);
  const double u4 = uniform01(seed, base + 3);
  const double r1 = std::sqrt(-2.0 * std::log(u1));
  const double r2 = std::sqrt(-2.0 * std::log(u3));
  const Vec3 g{r1 * std::cos(2.0 * kPi * u2), r1 * std::sin(2.0 * kPi * u2),
               r2 * std::cos(2.0 * kPi * u4)};
  const double n = norm(g);
  if (n < 1e-12) return kZAxis;
  return g / n;
}

}  // namespace rng

namespace detail {

namespace {
int g_max_threads = static_cast<int>(std::thread::hardware_concurrency());
}

int max_threads() { return g_max_threads > 0 ? g_max_threads : 1; }

void set_max_threads(int n) { g_max_threads = n > 0 ? n : 1; }

void run_chunks_threaded(std::size_t n_chunks, int threads,
                         const std::function<void(std::size_t)>& run_chunk) {
  const auto n_workers =
      static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(threads), n_chunks));
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (std::size_t t = 0; t < n_workers; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t c = t; c < n_chunks; c += n_workers) run_chunk(c);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

}  // namespace qcorr
