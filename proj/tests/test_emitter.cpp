#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <regex>
#include <sstream>
#include <string>

#include "polynoise/emitter.hpp"

using namespace polynoise;

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Removes // and /* */ comments; everything left is code.
std::string stripComments(const std::string& text) {
  static const std::regex comments(R"(//[^\n]*|/\*[\s\S]*?\*/)");
  return std::regex_replace(text, comments, "");
}

std::vector<std::string> numericLiterals(const std::string& code) {
  static const std::regex literal(R"((?:^|[^\w.])((?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?))");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(code.begin(), code.end(), literal); it != std::sregex_iterator(); ++it) {
    out.push_back((*it)[1].str());
  }
  return out;
}

}  // namespace

TEST_CASE("simplex2 is the stored 2-D listing byte for byte") {
  const std::string golden = readFile(POLYNOISE_GOLDEN_DIR "/simplex2_listing.glsl");
  CHECK(emitShaderSource(ShaderKind::simplex2) == golden);
  CHECK(emitShaderSource("simplex2") == golden);
  CHECK(emitShaderSource(ShaderKind::simplex2) == emitShaderSource(ShaderKind::simplex2));
}

TEST_CASE("listShaderKinds") {
  const auto kinds = listShaderKinds();
  CHECK(kinds.size() == 9);
  CHECK(kinds.front() == ShaderKind::simplex2);
  CHECK(std::find(kinds.begin(), kinds.end(), ShaderKind::periodic3) != kinds.end());
}

TEST_CASE("unknown kinds are rejected") {
  CHECK_THROWS_AS(emitShaderSource("simplex5"), std::invalid_argument);
  CHECK_THROWS_AS(emitShaderSource(""), std::invalid_argument);
}

TEST_CASE("every variant is self-contained GLSL 1.20") {
  static const std::regex forbidden(R"(\b(texture\w*|sampler\w*|uniform|attribute|varying)\b)");
  for (ShaderKind kind : listShaderKinds()) {
    CAPTURE(noiseKindName(kind));
    const std::string text = emitShaderSource(kind);
    const std::string code = stripComments(text);
    CHECK(code.find("#version 120") != std::string::npos);
    CHECK_FALSE(std::regex_search(code, forbidden));
    CHECK(code.find('[') == std::string::npos);  // no arrays at all
    CHECK(code.find("permute") != std::string::npos);
    CHECK(code.find("taylorInvSqrt") != std::string::npos);
    CHECK(text.back() == '\n');
    CHECK(text.find('\r') == std::string::npos);
    if (kind != ShaderKind::simplex2) CHECK(text.rfind("#version 120\n", 0) == 0);
  }
}

TEST_CASE("reconstructed variants use binary32-exact literals") {
  for (ShaderKind kind : listShaderKinds()) {
    if (kind == ShaderKind::simplex2) continue;  // published text, kept verbatim
    CAPTURE(noiseKindName(kind));
    const auto literals = numericLiterals(stripComments(emitShaderSource(kind)));
    CHECK_FALSE(literals.empty());
    for (const std::string& literal : literals) {
      CAPTURE(literal);
      const double value = std::strtod(literal.c_str(), nullptr);
      CHECK(static_cast<double>(static_cast<float>(value)) == value);
    }
  }
}

TEST_CASE("body form drops the version directive only") {
  for (ShaderKind kind : listShaderKinds()) {
    const std::string full = emitShaderSource(kind);
    const std::string body = emitShaderSource(kind, ShaderForm::body);
    CHECK(body.find("#version") == std::string::npos);
    CHECK(full.size() == body.size() + std::string("#version 120\n").size());
  }
}
