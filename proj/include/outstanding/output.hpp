#pragma once

#include <string>

#include <json.hpp>

namespace outstanding {

// A single machine-readable result. Exact values travel as fraction strings
// in lowest terms ("5/3", or just "2" when integral); coefficient arrays are
// ascending by degree and always carry the degree-0 entry.
//
// Both serializations round-trip: parsing the JSON line or the TSV block
// reproduces the record exactly.
struct OutputRecord {
    std::string kind;        // e.g. "multiset.gf", "template.count", "verify"
    nlohmann::json inputs;   // flat object echoing the request parameters
    nlohmann::json payload;

    bool operator==(const OutputRecord&) const = default;

    std::string to_json() const;  // single line, sorted keys
    std::string to_tsv() const;   // header row + one or more value rows

    static OutputRecord from_json(const std::string& text);
    static OutputRecord from_tsv(const std::string& text);
};

}  // namespace outstanding
