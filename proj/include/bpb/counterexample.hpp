#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bpb::counterexample {

// The renormed c0: |||x||| = max_n |x_n| + sqrt(sum_n x_n^2 / 4^n), with the
// first coordinate carrying weight 2^-1. This is a lattice norm, equivalent to
// the sup norm and strictly convex, so the formal identity from c0 onto it is
// a positive operator that never attains its norm.
//
// Everything here is floating point (square roots); comparisons use 1e-12.

inline constexpr double kTolerance = 1e-12;

/// Finitely supported element of c0; coordinates past values.size() are zero.
struct RenormVector {
  std::vector<double> values;

  std::size_t truncation() const noexcept { return values.size(); }
};

double tnorm(const RenormVector& x);

/// Norm of the identity restricted to the first N coordinates:
/// 1 + sqrt((1 - 4^-N) / 3).
double identity_norm(std::size_t n);

/// max of tnorm over the sign vectors in {-1, 1}^N. Throws for N > 24.
double identity_norm_brute_force(std::size_t n);

/// 1 + 1/sqrt(3), the norm of the identity on all of c0.
double identity_norm_limit();

/// (1 + 1/sqrt(3)) - sup{ tnorm(x) : ||x||_inf <= 1, supp x in {1..k} }.
/// Computed as (4^-k / 3) / (sqrt(1/3) + sqrt((1 - 4^-k)/3)) so it stays
/// positive where the difference of square roots would cancel to 0.
double attainment_gap(std::size_t k);

/// True iff the midpoint of two distinct unit vectors has norm below
/// 1 - kTolerance. Throws Error(InputsEqual) or Error(NotUnitVectors).
bool strict_convexity_check(const RenormVector& x, const RenormVector& y);

struct ConvexityTrialSummary {
  std::size_t trials = 0;
  std::size_t passed = 0;
  double worst_midpoint = 0.0;  ///< largest midpoint norm seen
};

/// Random distinct unit pairs with truncation 1..max_n, seeded.
ConvexityTrialSummary run_convexity_trials(std::size_t trials, std::uint64_t seed, std::size_t max_n = 10);

}  // namespace bpb::counterexample
