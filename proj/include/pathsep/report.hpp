#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace pathsep {

using ordered_json = nlohmann::ordered_json;

/// Serializes a report with keys in insertion order and every float printed
/// with 12 significant digits ("%.12g"), so identical runs produce
/// byte-identical documents.  Two-space indentation, trailing newline.
std::string dump_report(const ordered_json& value);

/// FNV-1a 64-bit digest of a byte string, as "fnv1a64:<16 hex digits>".
/// Provenance marker for inputs, not a cryptographic hash.
std::string content_digest(std::string_view bytes);

}  // namespace pathsep
