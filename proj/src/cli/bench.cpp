#include "polynoise/cli/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "polynoise/cli/sampling.hpp"

namespace polynoise::cli {

namespace {

constexpr std::uint64_t kBlockSize = 4096;
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;
constexpr float kBenchLow = -64.0f;
constexpr float kBenchHigh = 64.0f;

std::uint64_t fnvMix(std::uint64_t hash, std::uint32_t word) {
  for (int k = 0; k < 4; ++k) {
    hash ^= (word >> (8 * k)) & 0xffu;
    hash *= kFnvPrime;
  }
  return hash;
}

}  // namespace

BenchReport bench(const BenchJob& job) {
  if (!(job.durationSeconds > 0.0)) throw std::invalid_argument("bench: duration must be positive");
  if (job.batchSize == 0) throw std::invalid_argument("bench: batch size must be positive");

  const NoiseField field(job.kind, job.period);
  std::vector<Vec4> points(job.batchSize);
  for (std::uint64_t k = 0; k < job.batchSize; ++k) points[k] = samplePoint(job.seed, k, kBenchLow, kBenchHigh);

  const std::uint64_t blocks = (job.batchSize + kBlockSize - 1) / kBlockSize;
  std::vector<std::uint64_t> blockHash(blocks);
  auto runBatch = [&] {
    parallelBlocks(blocks, job.threads, [&](std::size_t block) {
      std::uint64_t hash = kFnvOffset;
      const std::uint64_t last = std::min(job.batchSize, (block + 1) * kBlockSize);
      for (std::uint64_t k = block * kBlockSize; k < last; ++k) {
        hash = fnvMix(hash, std::bit_cast<std::uint32_t>(field(points[k])));
      }
      blockHash[block] = hash;
    });
    std::uint64_t checksum = kFnvOffset;
    for (std::uint64_t h : blockHash) {
      checksum = fnvMix(checksum, static_cast<std::uint32_t>(h));
      checksum = fnvMix(checksum, static_cast<std::uint32_t>(h >> 32));
    }
    return checksum;
  };

  using Clock = std::chrono::steady_clock;
  const auto warmup = std::chrono::duration<double>(job.durationSeconds * 0.1);
  const auto measured = std::chrono::duration<double>(job.durationSeconds * 0.9);

  BenchReport report;
  report.variant = std::string(noiseKindName(job.kind));
  report.threads = job.threads;

  const auto warmupStart = Clock::now();
  report.checksum = runBatch();
  while (Clock::now() - warmupStart < warmup) runBatch();

  std::uint64_t rounds = 0;
  const auto start = Clock::now();
  do {
    if (runBatch() != report.checksum) throw std::logic_error("bench: nondeterministic batch checksum");
    ++rounds;
  } while (Clock::now() - start < measured);
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  report.samples = rounds * job.batchSize;
  report.msamplesPerSec = static_cast<double>(report.samples) / report.seconds / 1e6;
  return report;
}

std::string toJson(const BenchReport& report) {
  nlohmann::ordered_json j;
  j["variant"] = report.variant;
  j["threads"] = report.threads;
  j["samples"] = report.samples;
  j["seconds"] = report.seconds;
  j["msamples_per_sec"] = report.msamplesPerSec;
  char hex[19];
  std::snprintf(hex, sizeof hex, "0x%016llx", static_cast<unsigned long long>(report.checksum));
  j["checksum"] = hex;
  return j.dump();
}

}  // namespace polynoise::cli
