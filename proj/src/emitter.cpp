#include "polynoise/emitter.hpp"

#include <stdexcept>
#include <utility>

namespace polynoise {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kShaderAssets[];
}  // namespace detail

namespace {

constexpr std::string_view kVersionLine = "#version 120\n";

std::string_view assetFor(ShaderKind kind) {
  const std::string_view name = noiseKindName(kind);
  for (std::size_t k = 0; k < kAllNoiseKinds.size(); ++k) {
    if (detail::kShaderAssets[k].first == name) return detail::kShaderAssets[k].second;
  }
  throw std::logic_error("missing shader asset for " + std::string(name));
}

}  // namespace

std::string emitShaderSource(ShaderKind kind, ShaderForm form) {
  std::string text(assetFor(kind));
  if (form == ShaderForm::body) {
    const auto at = text.find(kVersionLine);
    if (at != std::string::npos) text.erase(at, kVersionLine.size());
  }
  return text;
}

std::string emitShaderSource(std::string_view kindName, ShaderForm form) {
  const auto kind = parseNoiseKind(kindName);
  if (!kind) throw std::invalid_argument("unknown shader kind '" + std::string(kindName) + "'");
  return emitShaderSource(*kind, form);
}

std::vector<ShaderKind> listShaderKinds() {
  return {kAllNoiseKinds.begin(), kAllNoiseKinds.end()};
}

}  // namespace polynoise
