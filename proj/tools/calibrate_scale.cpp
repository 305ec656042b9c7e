// Estimates the output scale of a noise variant: the reciprocal of the
// largest |raw value| found by uniform random search followed by local
// hill climbing around the best candidates.
//
//   calibrate_scale --noise simplex3 --samples 100000000

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <queue>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polynoise/cli/sampling.hpp"
#include "polynoise/noise.hpp"

namespace {

using polynoise::NoiseField;
using polynoise::NoiseKind;
using polynoise::Vec4;

struct Candidate {
  float magnitude;
  Vec4 point;
  bool operator>(const Candidate& other) const { return magnitude > other.magnitude; }
};

float component(const Vec4& p, int axis) {
  switch (axis) {
    case 0: return p.x;
    case 1: return p.y;
    case 2: return p.z;
    default: return p.w;
  }
}

void setComponent(Vec4& p, int axis, float value) {
  switch (axis) {
    case 0: p.x = value; break;
    case 1: p.y = value; break;
    case 2: p.z = value; break;
    default: p.w = value; break;
  }
}

// Pattern search on |field| with a shrinking step.
Candidate climb(const NoiseField& field, Candidate best, int dims) {
  for (float step = 0.02f; step > 1e-6f; step *= 0.5f) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (int axis = 0; axis < dims; ++axis) {
        for (float sign : {1.0f, -1.0f}) {
          Vec4 trial = best.point;
          setComponent(trial, axis, component(trial, axis) + sign * step);
          const float magnitude = std::fabs(field(trial));
          if (magnitude > best.magnitude) {
            best = {magnitude, trial};
            improved = true;
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calibrate noise output scales"};
  std::string noise = "simplex3";
  std::uint64_t samples = 100'000'000;
  std::uint64_t seed = 1;
  std::size_t keep = 256;
  float extent = 144.5f;
  app.add_option("--noise", noise, "Variant to calibrate");
  app.add_option("--samples", samples, "Random samples before hill climbing");
  app.add_option("--seed", seed, "Sampling seed");
  app.add_option("--keep", keep, "Candidates refined by hill climbing");
  app.add_option("--extent", extent, "Search the cube [-extent, extent]^N");
  CLI11_PARSE(app, argc, argv);

  const auto kind = polynoise::parseNoiseKind(noise);
  if (!kind) {
    std::cerr << "unknown variant '" << noise << "'\n";
    return 2;
  }
  polynoise::NoiseParams raw = polynoise::defaultParams(*kind);
  raw.outputScale = 1.0f;
  const NoiseField field(*kind, raw);
  const int dims = polynoise::dimension(*kind);

  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> top;
  for (std::uint64_t k = 0; k < samples; ++k) {
    const Vec4 p = polynoise::cli::samplePoint(seed, k, -extent, extent);
    const float magnitude = std::fabs(field(p));
    if (top.size() < keep) {
      top.push({magnitude, p});
    } else if (magnitude > top.top().magnitude) {
      top.pop();
      top.push({magnitude, p});
    }
  }

  float sampled = 0.0f;
  Candidate best{0.0f, {}};
  while (!top.empty()) {
    sampled = std::max(sampled, top.top().magnitude);
    const Candidate refined = climb(field, top.top(), dims);
    if (refined.magnitude > best.magnitude) best = refined;
    top.pop();
  }

  const double scale = std::floor(1024.0 / best.magnitude) / 1024.0;
  std::printf("variant %s\nsampled max %.9g\nclimbed max %.9g at (%.9g, %.9g, %.9g, %.9g)\n",
              noise.c_str(), sampled, best.magnitude, best.point.x, best.point.y, best.point.z,
              best.point.w);
  std::printf("scale %.10f\n", scale);
  return 0;
}
