// polynoise: render, benchmark and inspect table-free gradient noise.
//
//   polynoise render      --noise simplex2 --size 512x512 --scale 0.02 --out n.pgm
//   polynoise sphere      --noise classic3 --size 512x512 --radius 4 --out s.pgm
//   polynoise bench       --noise simplex3 --duration 2 --threads 4
//   polynoise stats       --noise classic2 --samples 10000000
//   polynoise export-glsl --noise simplex2 [--out file.glsl] [--body]
//
// Exit codes: 0 success, 2 usage error, 3 I/O error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polynoise/cli/bench.hpp"
#include "polynoise/cli/image.hpp"
#include "polynoise/cli/render.hpp"
#include "polynoise/cli/stats.hpp"
#include "polynoise/emitter.hpp"
#include "polynoise/noise.hpp"

namespace {

using namespace polynoise;
using namespace polynoise::cli;

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<float> parseFloatList(const std::string& text, std::size_t minCount, std::size_t maxCount,
                                  const char* flag) {
  std::vector<float> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stof(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": bad number '" + item + "'");
    }
  }
  if (values.size() < minCount || values.size() > maxCount) {
    throw UsageError(std::string(flag) + ": expected " + std::to_string(minCount) + " to " +
                     std::to_string(maxCount) + " comma-separated values");
  }
  return values;
}

NoiseKind parseKind(const std::string& name) {
  const auto kind = parseNoiseKind(name);
  if (!kind) throw UsageError("unknown noise variant '" + name + "'");
  return *kind;
}

// Unspecified trailing period axes repeat the last given value.
std::array<int, 4> parsePeriod(const std::string& text) {
  const auto values = parseFloatList(text, 1, 4, "--period");
  std::array<int, 4> period{};
  for (std::size_t k = 0; k < 4; ++k) {
    const float v = values[std::min(k, values.size() - 1)];
    if (v != static_cast<float>(static_cast<int>(v))) throw UsageError("--period: axes must be integers");
    period[k] = static_cast<int>(v);
  }
  return period;
}

struct CommonOptions {
  std::string noise = "simplex2";
  std::string period = "16";
  int threads = 1;
  std::uint64_t seed = 0;
};

struct RenderOptions {
  std::string size = "256x256";
  float scale = 1.0f / 32.0f;
  std::string origin = "0,0";
  std::string slice = "0";
  std::optional<int> octaves;
  float lacunarity = 2.0f;
  float gain = 0.5f;
  float radius = 4.0f;
  std::string format = "pgm";
  std::string out;
};

RenderJob makeRenderJob(const CommonOptions& common, const RenderOptions& opts) {
  RenderJob job;
  job.kind = parseKind(common.noise);
  job.period = parsePeriod(common.period);
  job.threads = common.threads;

  int w = 0;
  int h = 0;
  char x = 0;
  std::istringstream size(opts.size);
  if (!(size >> w >> x >> h) || x != 'x' || !size.eof()) throw UsageError("--size: expected WxH");
  job.width = w;
  job.height = h;
  job.scale = opts.scale;
  job.radius = opts.radius;

  const auto origin = parseFloatList(opts.origin, 2, 4, "--origin");
  job.origin = {origin[0], origin[1], origin.size() > 2 ? origin[2] : 0.0f,
                origin.size() > 3 ? origin[3] : 0.0f};
  const auto slice = parseFloatList(opts.slice, 1, 2, "--slice");
  job.sliceZ = slice[0];
  job.sliceW = slice.size() > 1 ? slice[1] : 0.0f;

  if (opts.octaves) job.fbm = FbmParams{*opts.octaves, opts.lacunarity, opts.gain};
  return job;
}

ImageFormat parseFormat(const std::string& name) {
  if (name == "pgm") return ImageFormat::pgm;
  if (name == "png") {
    if (!pngSupported()) throw UsageError("--format png: this build has no PNG support");
    return ImageFormat::png;
  }
  throw UsageError("--format: expected pgm or png");
}

void addCommon(CLI::App* cmd, CommonOptions& common, bool withSeed) {
  cmd->add_option("--noise", common.noise, "Variant: simplex2..4, classic2..4, periodic2..4");
  cmd->add_option("--period", common.period, "Periodic variants: a,b[,c[,d]] in [1, 288]");
  cmd->add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
  if (withSeed) cmd->add_option("--seed", common.seed, "Sampling seed");
}

void addRender(CLI::App* cmd, RenderOptions& opts, bool sphere) {
  cmd->add_option("--size", opts.size, "Image size WxH");
  cmd->add_option("--origin", opts.origin, "World offset x,y[,z[,w]]");
  cmd->add_option("--slice", opts.slice, "Slice coordinates z[,w] added to the origin");
  cmd->add_option("--octaves", opts.octaves, "fBm octaves (plain noise when omitted)");
  cmd->add_option("--lacunarity", opts.lacunarity, "fBm frequency multiplier");
  cmd->add_option("--gain", opts.gain, "fBm amplitude multiplier");
  cmd->add_option("--format", opts.format, "pgm or png");
  cmd->add_option("--out", opts.out, "Output image path")->required();
  if (sphere) {
    cmd->add_option("--radius", opts.radius, "Sphere radius in world units");
  } else {
    cmd->add_option("--scale", opts.scale, "World units per pixel");
  }
}

void writeText(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    if (std::fflush(stdout) != 0) throw IoError("failed writing to stdout");
    return;
  }
  std::FILE* file = std::fopen(path.c_str(), "wb");
  if (file == nullptr) throw IoError("cannot open '" + path + "' for writing");
  const bool ok = std::fwrite(text.data(), 1, text.size(), file) == text.size();
  if (std::fclose(file) != 0 || !ok) throw IoError("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Table-free gradient noise: render, bench, stats, GLSL export"};
  app.require_subcommand(1);

  CommonOptions common;
  RenderOptions renderOpts;
  double duration = 1.0;
  std::uint64_t samples = 1'000'000;
  std::string domain = "-64,64";
  std::string glslKind;
  std::string glslOut;
  bool glslBody = false;

  auto* render = app.add_subcommand("render", "Render a planar slice to an image");
  addCommon(render, common, false);
  addRender(render, renderOpts, false);

  auto* sphere = app.add_subcommand("sphere", "Render noise on a sphere (3-D and 4-D variants)");
  addCommon(sphere, common, false);
  addRender(sphere, renderOpts, true);

  auto* benchCmd = app.add_subcommand("bench", "Measure throughput in Msamples/s");
  addCommon(benchCmd, common, true);
  benchCmd->add_option("--duration", duration, "Seconds to run, including 10% warmup");

  auto* statsCmd = app.add_subcommand("stats", "Sample statistics as JSON");
  addCommon(statsCmd, common, true);
  statsCmd->add_option("--samples", samples, "Number of samples");
  statsCmd->add_option("--domain", domain, "Coordinate range lo,hi");

  auto* exportCmd = app.add_subcommand("export-glsl", "Write self-contained GLSL source");
  exportCmd->add_option("--noise,kind", glslKind, "Shader variant")->required();
  exportCmd->add_option("--out", glslOut, "Output file (stdout when omitted)");
  exportCmd->add_flag("--body", glslBody, "Omit the #version directive");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*render || *sphere) {
      const RenderJob job = makeRenderJob(common, renderOpts);
      const ImageFormat format = parseFormat(renderOpts.format);
      const Image image = *render ? polynoise::cli::render(job) : renderSphere(job);
      writeImage(image, renderOpts.out, format);
    } else if (*benchCmd) {
      BenchJob job;
      job.kind = parseKind(common.noise);
      job.period = parsePeriod(common.period);
      job.durationSeconds = duration;
      job.threads = common.threads;
      job.seed = common.seed;
      const BenchReport report = polynoise::cli::bench(job);
      std::cout << toJson(report) << "\n";
    } else if (*statsCmd) {
      StatsJob job;
      job.kind = parseKind(common.noise);
      job.period = parsePeriod(common.period);
      job.samples = samples;
      job.seed = common.seed;
      job.threads = common.threads;
      const auto bounds = parseFloatList(domain, 2, 2, "--domain");
      job.low = bounds[0];
      job.high = bounds[1];
      std::cout << toJson(computeStats(job)) << "\n";
    } else if (*exportCmd) {
      const auto kind = parseNoiseKind(glslKind);
      if (!kind) throw UsageError("unknown shader kind '" + glslKind + "'");
      writeText(emitShaderSource(*kind, glslBody ? ShaderForm::body : ShaderForm::standalone), glslOut);
    }
  } catch (const IoError& e) {
    std::cerr << "polynoise: " << e.what() << "\n";
    return kExitIo;
  } catch (const UsageError& e) {
    std::cerr << "polynoise: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "polynoise: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "polynoise: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
