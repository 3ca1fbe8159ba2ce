#pragma once

#include "crossgeo/diagram.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crossgeo {

// Catalog entry: a named diagram plus externally sourced invariants. upsilon
// is never computed here; records carry a provenance note for it.
struct KnotRecord {
    std::string name;
    std::string pd;
    std::optional<long long> sigma;
    std::optional<long long> upsilon;
    std::string upsilon_note;
    std::vector<std::string> tags;

    bool has_tag(const std::string& t) const;
    KnotDiagram diagram() const;
};

struct CatalogIssue {
    int line = 0;
    std::string message;
};

struct Catalog {
    std::vector<KnotRecord> records;
    std::vector<CatalogIssue> issues; // per-record failures, collected not fatal

    const KnotRecord* find(const std::string& name) const;
};

Catalog load_catalog(const std::string& path);
Catalog parse_catalog(const std::string& jsonl_text);
void save_catalog(const std::vector<KnotRecord>& records, const std::string& path);
std::string record_to_json(const KnotRecord& r);

// Per-record invariant bundle as a JSON object (text); failures per record are
// isolated into an "error" field.
std::string batch_report(const KnotRecord& r, int state_cap = 24);

// Slice-torus gap bounds for a record; refuses records without an ingested
// upsilon rather than defaulting it.
std::pair<long long, long long> record_oss_bounds(const KnotRecord& r);

// JSON form of a diagram: {"name": ..., "pd": [[a,b,c,d], ...]}.
std::string diagram_to_json(const KnotDiagram& d);
KnotDiagram diagram_from_json(const std::string& text);

} // namespace crossgeo
