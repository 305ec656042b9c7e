#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace polynoise {

enum class NoiseKind {
  simplex2,
  simplex3,
  simplex4,
  classic2,
  classic3,
  classic4,
  periodic2,
  periodic3,
  periodic4,
};

inline constexpr std::array<NoiseKind, 9> kAllNoiseKinds{
    NoiseKind::simplex2,  NoiseKind::simplex3,  NoiseKind::simplex4,
    NoiseKind::classic2,  NoiseKind::classic3,  NoiseKind::classic4,
    NoiseKind::periodic2, NoiseKind::periodic3, NoiseKind::periodic4,
};

std::string_view noiseKindName(NoiseKind kind);
std::optional<NoiseKind> parseNoiseKind(std::string_view name);

int dimension(NoiseKind kind);
bool isSimplex(NoiseKind kind);
bool isPeriodic(NoiseKind kind);

}  // namespace polynoise
