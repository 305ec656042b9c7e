#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "polynoise/noise.hpp"

namespace polynoise::cli {

inline constexpr int kHistogramBins = 64;
inline constexpr double kHistogramLow = -1.1;
inline constexpr double kHistogramHigh = 1.1;

struct StatsReport {
  std::string variant;
  std::uint64_t samples = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  double min = 0.0;
  double max = 0.0;
  // Uniform bins over [-1.1, 1.1]; values outside land in the end bins.
  std::array<std::uint64_t, kHistogramBins> histogram{};
  double seconds = 0.0;
  double msamplesPerSec = 0.0;
};

struct StatsJob {
  NoiseKind kind = NoiseKind::simplex2;
  std::array<int, 4> period{16, 16, 16, 16};
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  float low = -64.0f;  // every coordinate is uniform in [low, high)
  float high = 64.0f;
  int threads = 1;
};

int histogramBin(double value);

/// Samples the variant at counter-based uniform points (see sampling.hpp).
/// All fields except the timings are identical for any thread count.
/// Throws std::invalid_argument for zero samples or an empty domain.
StatsReport computeStats(const StatsJob& job);

/// One JSON object with exactly the keys variant, samples, mean, stddev,
/// min, max, histogram, seconds, msamples_per_sec.
std::string toJson(const StatsReport& report);

}  // namespace polynoise::cli
