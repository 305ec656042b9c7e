#pragma once

// Self-contained GLSL 1.20 source for every noise variant.
//
// The texts are stored as assets under shaders/ and embedded at build time.
// simplex2 is the published 2-D listing, byte for byte.

#include <string>
#include <string_view>
#include <vector>

#include "polynoise/noise_kind.hpp"

namespace polynoise {

using ShaderKind = NoiseKind;

enum class ShaderForm {
  standalone,  // complete file including the #version directive
  body,        // functions only, for pasting into an existing shader
};

std::string emitShaderSource(ShaderKind kind, ShaderForm form = ShaderForm::standalone);

/// Throws std::invalid_argument for an unknown kind name.
std::string emitShaderSource(std::string_view kindName, ShaderForm form = ShaderForm::standalone);

/// All nine variants: simplex 2/3/4, classic 2/3/4, periodic 2/3/4.
std::vector<ShaderKind> listShaderKinds();

}  // namespace polynoise
