#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

#include "intervalk/certify.hpp"
#include "intervalk/poset.hpp"

namespace intervalk {

// Poset text format:
//
//   # comment
//   elements: a b c d
//   mode: raw            (optional; raw or covers)
//   a < b
//   b < c
//
// A document starting with '{' is read as the JSON mirror
// {"elements": [...], "relations": [["a","b"], ...], "mode": "raw"}.

Poset parse_poset(std::string_view text);
Poset read_poset_file(const std::string& path); // "-" reads stdin

/// Writes `elements:`, `mode: covers` and the cover pairs.
void write_poset(std::ostream& out, const Poset& p);
nlohmann::json poset_to_json(const Poset& p);

// Certificate text format. Representation:
//
//   result: representation
//   scale: 9
//   a: [-9/9, 0/9]
//
// Forbidden:
//
//   result: forbidden
//   kind: chain-plus-one
//   chain: a1 a2 a3
//   lone: x
//
// Two-plus-two witnesses print one `chain:` line per 2-chain.

struct TextOptions {
    bool decimal = false; // append `~ [l, r]` approximations
};

void write_representation(std::ostream& out, const IntervalRepresentation& rep, const TextOptions& opts = {});
void write_forbidden(std::ostream& out, const ForbiddenSubposet& f);
void write_certificate(std::ostream& out, const Certificate& c, const TextOptions& opts = {});

nlohmann::json representation_to_json(const IntervalRepresentation& rep);
nlohmann::json forbidden_to_json(const ForbiddenSubposet& f);
nlohmann::json certificate_to_json(const Certificate& c);

/// Parses interval lines `x: [p/q, r/s]` (text) or the JSON mirror. Lines
/// without a `[` (headers such as `result:`) are skipped. Endpoints are brought
/// to a common denominator.
IntervalRepresentation parse_representation(std::string_view text);

std::string read_text_file(const std::string& path); // "-" reads stdin

} // namespace intervalk
