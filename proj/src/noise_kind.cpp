#include "polynoise/noise_kind.hpp"

namespace polynoise {

std::string_view noiseKindName(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::simplex2: return "simplex2";
    case NoiseKind::simplex3: return "simplex3";
    case NoiseKind::simplex4: return "simplex4";
    case NoiseKind::classic2: return "classic2";
    case NoiseKind::classic3: return "classic3";
    case NoiseKind::classic4: return "classic4";
    case NoiseKind::periodic2: return "periodic2";
    case NoiseKind::periodic3: return "periodic3";
    case NoiseKind::periodic4: return "periodic4";
  }
  return "unknown";
}

std::optional<NoiseKind> parseNoiseKind(std::string_view name) {
  for (NoiseKind kind : kAllNoiseKinds) {
    if (noiseKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

int dimension(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::simplex2:
    case NoiseKind::classic2:
    case NoiseKind::periodic2:
      return 2;
    case NoiseKind::simplex3:
    case NoiseKind::classic3:
    case NoiseKind::periodic3:
      return 3;
    case NoiseKind::simplex4:
    case NoiseKind::classic4:
    case NoiseKind::periodic4:
      return 4;
  }
  return 0;
}

bool isSimplex(NoiseKind kind) {
  return kind == NoiseKind::simplex2 || kind == NoiseKind::simplex3 ||
         kind == NoiseKind::simplex4;
}

bool isPeriodic(NoiseKind kind) {
  return kind == NoiseKind::periodic2 || kind == NoiseKind::periodic3 ||
         kind == NoiseKind::periodic4;
}

}  // namespace polynoise
