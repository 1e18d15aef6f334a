#include "bpb/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bpb/error.hpp"
#include "bpb/random.hpp"

namespace bpb::counterexample {

double tnorm(const RenormVector& x) {
  double sup = 0.0, sq = 0.0, scale = 1.0;
  for (double v : x.values) {
    sup = std::max(sup, std::fabs(v));
    scale *= 0.5;
    const double t = v * scale;
    sq += t * t;
  }
  return sup + std::sqrt(sq);
}

double identity_norm(std::size_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "truncation must be >= 1");
  const double tail = std::ldexp(1.0, -2 * static_cast<int>(std::min<std::size_t>(n, 600)));
  return 1.0 + std::sqrt((1.0 - tail) / 3.0);
}

double identity_norm_brute_force(std::size_t n) {
  require(n >= 1 && n <= 24, ErrorCode::DimensionTooLarge, "brute force limited to 1 <= N <= 24");
  RenormVector x{std::vector<double>(n)};
  double best = 0.0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::size_t i = 0; i < n; ++i) x.values[i] = ((bits >> i) & 1U) ? -1.0 : 1.0;
    best = std::max(best, tnorm(x));
  }
  return best;
}

double identity_norm_limit() { return 1.0 + 1.0 / std::sqrt(3.0); }

double attainment_gap(std::size_t k) {
  require(k >= 1, ErrorCode::InvalidArgument, "support size must be >= 1");
  const double tail = std::ldexp(1.0, -2 * static_cast<int>(std::min<std::size_t>(k, 500)));
  return (tail / 3.0) / (std::sqrt(1.0 / 3.0) + std::sqrt((1.0 - tail) / 3.0));
}

bool strict_convexity_check(const RenormVector& x, const RenormVector& y) {
  const std::size_t n = std::max(x.truncation(), y.truncation());
  RenormVector a{x.values}, b{y.values};
  a.values.resize(n, 0.0);
  b.values.resize(n, 0.0);
  require(a.values != b.values, ErrorCode::InputsEqual, "x and y are the same vector");
  const double nx = tnorm(a), ny = tnorm(b);
  require(std::fabs(nx - 1.0) <= kTolerance && std::fabs(ny - 1.0) <= kTolerance, ErrorCode::NotUnitVectors,
          "inputs must have norm 1, got " + std::to_string(nx) + " and " + std::to_string(ny));
  RenormVector mid{std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) mid.values[i] = 0.5 * (a.values[i] + b.values[i]);
  return tnorm(mid) < 1.0 - kTolerance;
}

namespace {

RenormVector random_unit(Rng& rng, std::size_t n) {
  RenormVector v{std::vector<double>(n)};
  do {
    for (double& c : v.values) c = 2.0 * rng.unit() - 1.0;
  } while (tnorm(v) == 0.0);
  const double s = tnorm(v);
  for (double& c : v.values) c /= s;
  return v;
}

}  // namespace

ConvexityTrialSummary run_convexity_trials(std::size_t trials, std::uint64_t seed, std::size_t max_n) {
  require(max_n >= 1, ErrorCode::InvalidArgument, "max_n must be >= 1");
  Rng rng(seed);
  ConvexityTrialSummary summary;
  while (summary.trials < trials) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.below(max_n));
    RenormVector x = random_unit(rng, n);
    RenormVector y = random_unit(rng, n);
    // N = 1 leaves only the pair {e1, -e1}/1.5 of distinct unit vectors.
    if (n == 1 && x.values[0] * y.values[0] > 0) y.values[0] = -y.values[0];
    if (x.values == y.values) continue;
    ++summary.trials;
    RenormVector mid{std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) mid.values[i] = 0.5 * (x.values[i] + y.values[i]);
    summary.worst_midpoint = std::max(summary.worst_midpoint, tnorm(mid));
    if (strict_convexity_check(x, y)) ++summary.passed;
  }
  return summary;
}

}  // namespace bpb::counterexample
