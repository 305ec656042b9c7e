#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "polynoise/noise.hpp"

namespace polynoise::cli {

struct BenchJob {
  NoiseKind kind = NoiseKind::simplex2;
  std::array<int, 4> period{16, 16, 16, 16};
  double durationSeconds = 1.0;
  int threads = 1;
  std::uint64_t seed = 0;
  std::uint64_t batchSize = 1 << 16;
};

struct BenchReport {
  std::string variant;
  int threads = 1;
  std::uint64_t samples = 0;  // timed samples, warmup excluded
  double seconds = 0.0;
  double msamplesPerSec = 0.0;
  std::uint64_t checksum = 0;  // FNV-1a over the value bits of one batch
};

/// Repeatedly evaluates a fixed pseudo-random batch of points for the given
/// wall-clock duration. The first 10% of the duration is warmup and is not
/// counted. CPU wall-clock throughput; not comparable to GPU fill rates.
/// Throws std::invalid_argument for a nonpositive duration or empty batch.
BenchReport bench(const BenchJob& job);

std::string toJson(const BenchReport& report);

}  // namespace polynoise::cli
