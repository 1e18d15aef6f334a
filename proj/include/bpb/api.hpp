#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bpb/harness.hpp"
#include "bpb/json_io.hpp"

namespace bpb::api {

// Document-in, document-out entry points behind the `bpb` subcommands and the
// Python module. Every document uses the encoding of json_io.hpp.

/// Explicit flag, else $BPB_MODE, else the file's "mode", else rational.
ArithmeticMode resolve_mode(const std::optional<std::string>& flag, const Json* document = nullptr);

struct CorrectRequest {
  std::optional<std::string> eps;  ///< overrides the instance's "eps"
  ArithmeticMode mode = ArithmeticMode::Rational;
  bool normalize = false;          ///< rescale S by 1/||S 1||_1 first
  bool c0 = false;                 ///< run the c0 pipeline, tail declared zero
  std::size_t exact_cap = kDefaultExactCap;
};

/// {"mode", "kind", "normalization", "correction", "report", "all_pass"}.
/// Errors propagate as bpb::Error.
Json correct(const Json& instance, const CorrectRequest& request);

/// {"mode", "witness", "certificate", "all_pass"}.
Json lemma(const Json& instance, const std::optional<std::string>& eps, ArithmeticMode mode);

/// Accepts an operator document or an instance with an "S" member.
/// {"positive", "opnorm_positive"?, "opnorm_exact"?, "entry_mass_bound"}.
Json norm(const Json& op_document, ArithmeticMode mode, bool exact, std::size_t cap = kDefaultExactCap);

Json generate(std::uint64_t seed, std::size_t n, std::size_t m, const std::string& eps, Profile profile, Kind kind,
              ArithmeticMode mode);

Json generate_lemma(std::uint64_t seed, std::size_t dim, const std::optional<std::string>& eps, ArithmeticMode mode);

struct CounterexampleRequest {
  std::size_t n_min = 1, n_max = 12;
  std::size_t k_min = 1, k_max = 30;
  std::size_t brute_force_max = 12;  ///< brute-force column up to this N
  std::size_t convexity_trials = 0;
  std::size_t convexity_max_dim = 10;
  std::uint64_t seed = 0;
};

/// {"identity_norm": [...], "attainment_gap": [...], "convexity"?: {...}}.
Json counterexample(const CounterexampleRequest& request);

}  // namespace bpb::api
