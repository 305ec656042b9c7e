#include "polynoise/cli/stats.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "polynoise/cli/sampling.hpp"

namespace polynoise::cli {

namespace {

constexpr std::uint64_t kBlockSize = 1 << 16;

struct Partial {
  double sum = 0.0;
  double sumSquares = 0.0;
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  std::array<std::uint64_t, kHistogramBins> histogram{};
};

}  // namespace

int histogramBin(double value) {
  const double position = (value - kHistogramLow) / (kHistogramHigh - kHistogramLow) * kHistogramBins;
  if (!(position > 0.0)) return 0;
  if (position >= kHistogramBins) return kHistogramBins - 1;
  return static_cast<int>(position);
}

StatsReport computeStats(const StatsJob& job) {
  if (job.samples == 0) throw std::invalid_argument("stats: sample count must be at least 1");
  if (!(job.high > job.low)) throw std::invalid_argument("stats: empty domain");

  const NoiseField field(job.kind, job.period);
  const std::uint64_t blocks = (job.samples + kBlockSize - 1) / kBlockSize;
  std::vector<Partial> partials(blocks);

  const auto start = std::chrono::steady_clock::now();
  parallelBlocks(blocks, job.threads, [&](std::size_t block) {
    Partial& part = partials[block];
    const std::uint64_t first = block * kBlockSize;
    const std::uint64_t last = std::min(job.samples, first + kBlockSize);
    for (std::uint64_t index = first; index < last; ++index) {
      const double v = field(samplePoint(job.seed, index, job.low, job.high));
      part.sum += v;
      part.sumSquares += v * v;
      part.min = std::min(part.min, v);
      part.max = std::max(part.max, v);
      ++part.histogram[histogramBin(v)];
    }
  });
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Partial total;
  for (const Partial& part : partials) {
    total.sum += part.sum;
    total.sumSquares += part.sumSquares;
    total.min = std::min(total.min, part.min);
    total.max = std::max(total.max, part.max);
    for (int b = 0; b < kHistogramBins; ++b) total.histogram[b] += part.histogram[b];
  }

  StatsReport report;
  report.variant = std::string(noiseKindName(job.kind));
  report.samples = job.samples;
  const double n = static_cast<double>(job.samples);
  report.mean = total.sum / n;
  report.stddev = std::sqrt(std::max(0.0, total.sumSquares / n - report.mean * report.mean));
  report.min = total.min;
  report.max = total.max;
  report.histogram = total.histogram;
  report.seconds = seconds;
  report.msamplesPerSec = seconds > 0.0 ? n / seconds / 1e6 : 0.0;
  return report;
}

std::string toJson(const StatsReport& report) {
  nlohmann::ordered_json j;
  j["variant"] = report.variant;
  j["samples"] = report.samples;
  j["mean"] = report.mean;
  j["stddev"] = report.stddev;
  j["min"] = report.min;
  j["max"] = report.max;
  j["histogram"] = report.histogram;
  j["seconds"] = report.seconds;
  j["msamples_per_sec"] = report.msamplesPerSec;
  return j.dump();
}

}  // namespace polynoise::cli
