#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <string>

#include "derange/bigint.hpp"
#include "derange/perm.hpp"
#include "derange/tables.hpp"

namespace derange {

// Every floating-point target derives from this one constant.
inline constexpr double kEulerE = std::numbers::e;
inline constexpr double kInvE = 1.0 / kEulerE;
// Limit of E[l(pi)]/n over non-derangements, and of the conditioned-Poisson
// mean of the maximum: 1/(e-1) ~ 0.581977.
inline constexpr double kLargestFixedPointLimit = 1.0 / (kEulerE - 1.0);
// Limit of |{pi : >= 2 fixed points}| / n!: 1 - 2/e ~ 0.264241.
inline constexpr double kBetaFractionLimit = 1.0 - 2.0 / kEulerE;

// Identical spec => identical sample stream, on any platform.
struct RngSpec {
  std::uint64_t seed = 1;
  std::string algorithm = "mt19937-64";
};

using Engine = std::mt19937_64;

Engine make_engine(const RngSpec& spec);  // unknown_rng_algorithm otherwise

struct StatSummary {
  long long samples = 0;
  double mean = 0.0;
  double std_error = 0.0;  // sample std / sqrt(samples)
  double target = 0.0;
  double z_score = 0.0;  // (mean - target) / std_error
};

// E[l(pi)] over uniform non-derangements of [n]: d_{n+1} / (n! - d_n),
// exactly. Needs d up to n+1.
BigRat exact_expected_largest(int n, const DerangementSequence& d);

// Unbiased integer in [0, bound) by rejection; bound >= 1.
std::uint64_t uniform_below(Engine& eng, std::uint64_t bound);

// 53-bit uniform in [0, 1).
double uniform01(Engine& eng);

// Uniform over S_n via the decreasing-index swap shuffle.
Permutation sample_permutation(int n, Engine& eng);

// Uniform over S_n minus the derangements, by rejection; n >= 1. The
// acceptance probability tends to 1 - 1/e.
Permutation sample_nonderangement(int n, Engine& eng);
Permutation sample_nonderangement(int n, const RngSpec& rng);

// Poisson with rate 1, by inverse CDF.
int poisson1_draw(Engine& eng);

// Monte Carlo mean of l(pi)/n over uniform non-derangements of [n]. The
// target (and the z-score baseline) is the exact value
// exact_expected_largest(n)/n, not the n -> infinity limit. samples >= 1000.
StatSummary estimate_largest_fp_mean(int n, long long samples, const RngSpec& rng);

// Estimates the fraction of permutations of [n+1] with at least two fixed
// points. The target is the exact fraction e_count(n+1)/(n+1)!, which tends
// to kBetaFractionLimit. samples >= 1.
StatSummary estimate_beta_fraction(int n, long long samples, const RngSpec& rng);

// Rate-1 Poisson process on [0,1] conditioned on at least one event: mean of
// the largest event position. Target kLargestFixedPointLimit. samples >= 1000.
StatSummary poisson_conditioned_max(long long samples, const RngSpec& rng);

// JSON object with fields samples, mean, std_error, target, z_score.
std::string summary_json(const StatSummary& s);

// Fixed-format two-column table, one field per line.
std::string summary_text(const StatSummary& s);

}  // namespace derange
