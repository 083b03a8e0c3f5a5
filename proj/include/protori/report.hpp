#pragma once
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "protori/group.hpp"
#include "protori/protorus.hpp"

// Report builders behind the protori command line. Every report is built as
// ordered JSON first; the text form is rendered from the same tree, so the two
// formats always carry the same fields in the same order.
namespace protori::report {

using Json = nlohmann::ordered_json;
enum class Format { text, structured };

Json analyze(const GroupDescription& x);
// throws InputError on rank mismatch
Json isogeny(const GroupDescription& a, const GroupDescription& b);
// scope unset: saturated, plus the directives hull when it differs
Json hull(const GroupDescription& x, HullMode mode, std::optional<LineScope> scope);

struct LiftConfig {
  std::optional<Prime> prime;
  int depth = 4;
};
Json lift(const QMat& a, const GroupDescription& x, const GroupDescription& y, const LiftConfig& cfg);

struct VerifyConfig {
  int depth = 4;
  int trials = 50;
  std::uint64_t seed = 0;
};
// throws BoundError when depth exceeds kDepthBound
Json verify(const GroupDescription& x, const VerifyConfig& cfg);

// "pass" member of a verify or lift report, true for everything else
bool passed(const Json& j);
std::string render(const Json& j, Format f);

}  // namespace protori::report
