#pragma once

#include <string>

#include "bow/algebra.hpp"
#include "bow/brane.hpp"
#include "bow/butterfly.hpp"
#include "bow/tie.hpp"
#include "bow/verify.hpp"

namespace bow {

// {"blacks": [...], "colors": ["r","b",...]}
std::string diagramToJson(const BraneDiagram& d);
BraneDiagram diagramFromJson(const std::string& text);

// {"diagram": "<dsl>", "ties": [["V3","U1"], ...]}
std::string tieToJson(const TieDiagram& t, const std::string& id = "");
TieDiagram tieFromJson(const std::string& text);

// [{"a": [...], "m": int, "mult": int}, ...]
std::string characterToJson(const Character& c);
Character characterFromJson(const std::string& text);

std::string butterflyToJson(const ButterflyData& b);
std::string fixedPointToJson(const FixedPointData& f);
std::string reportToJson(const VerificationReport& r);

}  // namespace bow
