#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpb/correct.hpp"
#include "bpb/json_io.hpp"

namespace bpb {

enum class Profile { NormingPerturbed, SignPattern, Sparse };
enum class Kind { Linfty, C0 };

Profile parse_profile(std::string_view text);
std::string_view to_string(Profile p);
Kind parse_kind(std::string_view text);
std::string_view to_string(Kind k);

/// A positive norm-one S with a near-norming unit vector f0 for the given eps:
/// ||S|| = 1, ||f0||_inf = 1, ||S f0||_1 > 1 - (eps/58)^4.
template <class Real>
struct Instance {
  PositiveOperator<Real> S;
  LatticeVector<Real> f0;
  Real eps;
  Kind kind = Kind::Linfty;
  std::uint64_t seed = 0;
  Profile profile = Profile::NormingPerturbed;
  bool tail_declared_zero = false;

  static constexpr ArithmeticMode mode = ScalarTraits<Real>::mode;
};

/// Throws Error(InvariantViolated) naming the failed invariant
/// (NotPositive, NotUnitNorm, NotUnitVector, NotNearNorming, ...).
template <class Real>
void check_instance_invariants(const Instance<Real>& inst);

/// Deterministic exact generator.
///
/// Columns get a sign (+1 for norming-perturbed), and rows a label in
/// {+1, -1, 0}; base mass (entries k/1000) sits only where the row label
/// matches the column sign, so S agrees in norm with S applied to the sign
/// vector. A leak of size tau crosses labels, a few "C" columns carry only
/// leak mass with |f0| <= 1/2, and the sparse profile adds zero columns with
/// arbitrary f0. f0 = sign * (1 - delta r) with one coordinate held at
/// exactly +-1. tau = delta start at the threshold (eps/58)^4 and are halved
/// until the deficit 1 - ||S f0||_1 is below it, checked exactly.
///
/// Throws Error(InfeasiblePerturbation) if no admissible perturbation is found.
Instance<Rational> gen_instance(std::uint64_t seed, std::size_t n, std::size_t m, const Rational& eps, Profile profile,
                                Kind kind = Kind::Linfty);

Instance<double> to_float(const Instance<Rational>& inst);

template <class Real>
Json encode_instance(const Instance<Real>& inst);

/// Instance file contents without invariant checks; used by `correct`, which
/// may rescale S first.
template <class Real>
struct RawInstance {
  LinearOperator<Real> S;
  LatticeVector<Real> f0;
  std::optional<Real> eps;
  Kind kind = Kind::Linfty;
  bool tail_declared_zero = false;
  std::uint64_t seed = 0;
  Profile profile = Profile::NormingPerturbed;
};

template <class Real>
RawInstance<Real> decode_raw_instance(const Json& j);

/// Decodes and validates. Errors: ParseError, InvariantViolated.
template <class Real>
Instance<Real> decode_instance(const Json& j);

template <class Real>
void save_instance(const Instance<Real>& inst, const std::string& path);

template <class Real>
Instance<Real> load_instance(const std::string& path);

/// Hypotheses of the disjoint-support construction.
template <class Real>
struct LemmaInstance {
  LatticeVector<Real> f1;
  LatticeVector<Real> f2;
  Real eps;
};

/// Random f1, f2 >= 0 with ||f1 + f2||_1 <= 1 and ||f1 - f2||_1 >= 1 - eps^2,
/// including atoms on the W boundary b/a = eps/(2 - eps). eps is drawn from
/// {1/1000, ..., 199/1000} unless given.
LemmaInstance<Rational> gen_lemma_instance(std::uint64_t seed, std::size_t dim,
                                           std::optional<Rational> eps = std::nullopt);

template <class Real>
Json encode_lemma_instance(const LemmaInstance<Real>& inst);
template <class Real>
LemmaInstance<Real> decode_lemma_instance(const Json& j);

// ---------------------------------------------------------------------------
// Sweeps

struct SweepConfig {
  std::vector<std::pair<std::size_t, std::size_t>> dims;  ///< (n, m) pairs
  std::vector<Rational> eps;
  std::size_t trials = 0;  ///< per (dims, eps) cell
  ArithmeticMode mode = ArithmeticMode::Rational;
  Kind kind = Kind::Linfty;
  std::vector<Profile> profiles{Profile::NormingPerturbed, Profile::SignPattern, Profile::Sparse};
  std::uint64_t seed = 0;
  std::size_t exact_cap = kDefaultExactCap;
  /// Off by default so a fixed seed reproduces the CSV byte for byte.
  bool record_runtime = false;
};

/// Keys: "dims" ([[n, m], ...]) or "n"/"m" lists (cartesian product), "eps",
/// "trials", and optional "mode", "kind", "profiles", "seed", "exact_cap",
/// "record_runtime".
SweepConfig parse_sweep_config(const Json& j);

/// Scalar columns are pre-rendered in the sweep's arithmetic mode.
struct SweepRow {
  std::uint64_t seed = 0;
  std::size_t n = 0, m = 0;
  std::string eps;
  std::string dist_point;
  std::string dist_op_exact;  ///< empty when above the enumeration cap
  std::string dist_op_bound;
  std::string ratio_point;
  std::string ratio_op;
  double runtime_ms = 0.0;
  bool all_checks_pass = false;

  // Not written to the CSV.
  std::size_t cell = 0;
  Profile profile = Profile::NormingPerturbed;
  bool fixed_point = false;
  std::string error;
};

struct CellSummary {
  std::size_t cell = 0, n = 0, m = 0;
  std::string eps;
  std::size_t rows = 0, passed = 0, fixed_points = 0;
  std::string max_ratio_point, max_ratio_op;
  bool ratios_below_one = true;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<CellSummary> cells;
  std::string max_ratio_point, max_ratio_op;
  std::size_t passed = 0, fixed_points = 0;
};

/// Cell c (dims-major, then eps) uses seed derive_seed(config.seed, c) and
/// trial t uses derive_seed(cell seed, t) with profile profiles[t % size].
/// Errors are recorded on their rows; the sweep never aborts.
SweepResult run_sweep(const SweepConfig& config);

inline constexpr std::string_view kSweepCsvHeader =
    "seed,n,m,eps,dist_point,dist_op_exact,dist_op_bound,ratio_point,ratio_op,runtime_ms,all_checks_pass";

std::string sweep_csv(const SweepResult& result, bool record_runtime = false);
Json sweep_summary(const SweepResult& result);

}  // namespace bpb
