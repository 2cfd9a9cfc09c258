#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "philucas/bounds.hpp"
#include "philucas/lemmas.hpp"
#include "philucas/search.hpp"

namespace philucas {

// One-line JSON renderers with a fixed key order, so identical runs produce
// byte-identical files. Solution records follow the pinned schema
//   {"eq","x","y","z","m","n","trivial","family"}
// with null z for the z-free equations.

std::string record_json(const SolutionRecord& rec);
std::string unresolved_json(const UnresolvedEntry& entry);
std::string box_json(const SearchBox& box);
std::string summary_json(const CertificationReport& report);
std::string bound_json(const BoundReport& report);
std::string scan_hit_json(const ScanHit& hit);
std::string catalog_json(const CatalogItem& item);

/// manifest fields as (key, already-rendered JSON value) pairs.
std::string manifest_json(
    const std::vector<std::pair<std::string, std::string>>& fields);

/// Full report stream: optional manifest line, found records with the
/// UNEXPECTED ones first (each group in candidate order), unresolved
/// entries, then the summary line.
void write_report(std::ostream& os, const CertificationReport& report,
                  const std::string& manifest_line = "");

std::string json_quote(const std::string& s);

}  // namespace philucas
