#pragma once

#include "atlas.hpp"

#include <json.hpp>

namespace scrollsmith {

using ordered_json = nlohmann::ordered_json;

// Parses text as JSON; parse failures become runtime_errors mentioning origin.
ordered_json parse_json_text(const std::string& text, const std::string& origin);

// All *_from_json parsers throw std::runtime_error with a dotted field path
// (e.g. "spec.base.e: expected an integer") on malformed input.

ordered_json base_to_json(const RuledBase& base);
RuledBase base_from_json(const ordered_json& j, const std::string& path);

// Ruled classes serialize as [a, b]; plane classes as a bare degree.
ordered_json divisor_to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const ordered_json& j, bool plane, const std::string& path);

ordered_json bundle_to_json(const ExtensionBundle& E);
ExtensionBundle bundle_from_json(const ordered_json& j, const std::string& path);

ordered_json report_to_json(const ConditionReport& r);

ordered_json entry_to_json(const CatalogEntry& entry, bool canonical);
CatalogEntry entry_from_json(const ordered_json& j, const std::string& path);

// FNV-1a (64-bit) over the canonical entry serialization (digest and
// timestamp excluded), rendered as "fnv1a:" + 16 hex digits.
std::string digest_for(const CatalogEntry& entry);

// Deduplication key: canonical bundle serialization plus the criterion.
std::string dedup_key(const ExtensionBundle& bundle, const std::string& criterion);

SearchBox box_from_json(const ordered_json& j, const std::string& path);

std::string iso8601_now_utc();

} // namespace scrollsmith
