#include "derange/sampling.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include <json.hpp>

#include "derange/error.hpp"

namespace derange {
namespace {

// Shortest round-trip decimal form, for deterministic text output.
std::string format_double(double v) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

double z_against(double mean, double target, double std_error) {
  if (std_error > 0.0) return (mean - target) / std_error;
  if (mean == target) return 0.0;
  return mean > target ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
}

// Sample standard error from raw first and second moments.
double std_error_from_moments(double sum, double sum_sq, long long samples) {
  if (samples < 2) return 0.0;
  const double sn = static_cast<double>(samples);
  const double mean = sum / sn;
  double var = (sum_sq / sn - mean * mean) * (sn / (sn - 1.0));
  if (var < 0.0) var = 0.0;  // guard against rounding below zero
  return std::sqrt(var / sn);
}

void require_samples(long long samples, long long floor) {
  if (samples < floor) {
    fail(Errc::range_error, "needs at least " + std::to_string(floor) +
                                " samples, got " + std::to_string(samples));
  }
}

void require_positive_n(int n) {
  if (n < 1) {
    fail(Errc::size_too_small, "sampling needs n >= 1, got " + std::to_string(n));
  }
}

}  // namespace

Engine make_engine(const RngSpec& spec) {
  if (spec.algorithm != "mt19937-64") {
    fail(Errc::unknown_rng_algorithm,
         "unknown rng algorithm '" + spec.algorithm + "'");
  }
  return Engine(spec.seed);
}

BigRat exact_expected_largest(int n, const DerangementSequence& d) {
  if (n < 1) {
    fail(Errc::size_too_small,
         "expected largest fixed point needs n >= 1, got " + std::to_string(n));
  }
  const BigInt nonderangements = factorial(n) - d.at(n);
  return BigRat(d.at(n + 1), nonderangements);
}

std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
  if (bound == 0) fail(Errc::range_error, "uniform_below needs bound >= 1");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // Largest multiple of bound that fits; rejection above it kills the bias.
  const std::uint64_t limit = kMax - kMax % bound;
  for (;;) {
    const std::uint64_t x = eng();
    if (x < limit) return x % bound;
  }
}

double uniform01(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

Permutation sample_permutation(int n, Engine& eng) {
  if (n < 0) fail(Errc::size_too_small, "negative permutation size");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  for (int i = n - 1; i >= 1; --i) {
    const auto j = uniform_below(eng, static_cast<std::uint64_t>(i) + 1);
    std::swap(img[static_cast<std::size_t>(i)], img[j]);
  }
  return Permutation(std::move(img));
}

Permutation sample_nonderangement(int n, Engine& eng) {
  require_positive_n(n);
  for (;;) {
    Permutation p = sample_permutation(n, eng);
    if (!is_derangement(p)) return p;
  }
}

Permutation sample_nonderangement(int n, const RngSpec& rng) {
  Engine eng = make_engine(rng);
  return sample_nonderangement(n, eng);
}

int poisson1_draw(Engine& eng) {
  const double u = uniform01(eng);
  double term = kInvE;  // P(K = 0)
  double cum = term;
  int k = 0;
  // u < 1 strictly and cum rounds up to 1.0 within ~20 terms, so this ends.
  while (u >= cum) {
    ++k;
    term /= k;
    cum += term;
  }
  return k;
}

StatSummary estimate_largest_fp_mean(int n, long long samples, const RngSpec& rng) {
  require_positive_n(n);
  require_samples(samples, 1000);
  Engine eng = make_engine(rng);

  // l(pi) is a small integer, so the moments accumulate exactly.
  long long sum_l = 0;
  long long sum_l_sq = 0;
  for (long long i = 0; i < samples; ++i) {
    const Permutation p = sample_nonderangement(n, eng);
    const long long l = *fixed_point_stats(p).largest;
    sum_l += l;
    sum_l_sq += l * l;
  }

  const double scale = static_cast<double>(n);
  StatSummary s;
  s.samples = samples;
  s.mean = static_cast<double>(sum_l) / static_cast<double>(samples) / scale;
  s.std_error = std_error_from_moments(static_cast<double>(sum_l),
                                       static_cast<double>(sum_l_sq), samples) /
                scale;
  const DerangementSequence d = derangements_up_to(n + 1);
  s.target = to_double(exact_expected_largest(n, d) / n);
  s.z_score = z_against(s.mean, s.target, s.std_error);
  return s;
}

StatSummary estimate_beta_fraction(int n, long long samples, const RngSpec& rng) {
  require_positive_n(n);
  require_samples(samples, 1);
  Engine eng = make_engine(rng);

  const int m = n + 1;
  long long hits = 0;
  for (long long i = 0; i < samples; ++i) {
    const Permutation p = sample_permutation(m, eng);
    int fixed = 0;
    for (int e = 1; e <= m; ++e) {
      if (p(e) == e && ++fixed == 2) break;
    }
    hits += fixed >= 2;
  }

  StatSummary s;
  s.samples = samples;
  s.mean = static_cast<double>(hits) / static_cast<double>(samples);
  // Indicator variable: the second moment equals the first.
  s.std_error = std_error_from_moments(static_cast<double>(hits),
                                       static_cast<double>(hits), samples);
  s.target = to_double(BigRat(e_count(m), factorial(m)));
  s.z_score = z_against(s.mean, s.target, s.std_error);
  return s;
}

StatSummary poisson_conditioned_max(long long samples, const RngSpec& rng) {
  require_samples(samples, 1000);
  Engine eng = make_engine(rng);

  double sum = 0.0;
  double sum_sq = 0.0;
  for (long long i = 0; i < samples; ++i) {
    int k = poisson1_draw(eng);
    while (k == 0) k = poisson1_draw(eng);  // condition on at least one event
    double max_pos = 0.0;
    for (int j = 0; j < k; ++j) max_pos = std::max(max_pos, uniform01(eng));
    sum += max_pos;
    sum_sq += max_pos * max_pos;
  }

  StatSummary s;
  s.samples = samples;
  s.mean = sum / static_cast<double>(samples);
  s.std_error = std_error_from_moments(sum, sum_sq, samples);
  s.target = kLargestFixedPointLimit;
  s.z_score = z_against(s.mean, s.target, s.std_error);
  return s;
}

std::string summary_json(const StatSummary& s) {
  nlohmann::ordered_json j;
  j["samples"] = s.samples;
  j["mean"] = s.mean;
  j["std_error"] = s.std_error;
  j["target"] = s.target;
  j["z_score"] = s.z_score;
  return j.dump();
}

std::string summary_text(const StatSummary& s) {
  std::string out;
  out += "samples    " + std::to_string(s.samples) + "\n";
  out += "mean       " + format_double(s.mean) + "\n";
  out += "std_error  " + format_double(s.std_error) + "\n";
  out += "target     " + format_double(s.target) + "\n";
  out += "z_score    " + format_double(s.z_score) + "\n";
  return out;
}

}  // namespace derange
