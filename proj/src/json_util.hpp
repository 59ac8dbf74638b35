#pragma once

// Shared JSON helpers for the persistence layer. Internal: the public
// surface deals in strings and files only.

#include <cstdint>
#include <string>

#include "json.hpp"
#include "segdepth/errors.hpp"
#include "segdepth/generators.hpp"
#include "segdepth/rational.hpp"
#include "segdepth/report.hpp"

namespace segdepth::jsonio {

using nlohmann::json;

/// Parses text that must be a JSON object; failures throw GeomError(code).
json parse_object(const std::string& text, ErrCode code);

/// Field access with a specific missing-field message.
const json& field(const json& obj, const char* key);

/// Integers ride as JSON numbers while they fit in 64 bits, as decimal
/// strings beyond that.
json int_to_json(const Int& v);
Int int_from_json(const json& v);

/// Rationals are [numerator, denominator] pairs, denominator > 0.
json rat_to_json(const Rat& v);
Rat rat_from_json(const json& v);

json genspec_to_json(const GenSpec& spec);
GenSpec genspec_from_json(const json& v);

json entry_to_json(const BoundEntry& e);
BoundEntry entry_from_json(const json& v);

std::uint64_t fnv1a64(const std::string& s);
std::string hex64(std::uint64_t v);

}  // namespace segdepth::jsonio
