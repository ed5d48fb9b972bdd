#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nct/bounds.hpp"
#include "nct/extremal.hpp"

namespace nct {

using json = nlohmann::json;

/// Version marker written as the first CSV line; the JSON encoding is an
/// array of row objects with the same field names as the CSV columns.
inline constexpr const char* kSchemaVersion = "nct-schema=1";

json to_json(const SubgroupClass& c);
json to_json(const CoveringFamily& f);

json family_report_row(const CoveringFamily& f, const CoverageReport& rep);
json bracket_row(const GammaBracket& br);
json catalog_row(int n, const CatalogEntry& e, bool valid);
json extremal_row(const ExtremalProblem& p, const ExtremalResult& r);
json triples_summary_row(const RestrictedTriplesReport& rep);
json cubes_summary_row(const DegenerateCubesReport& rep);
json triple_hit_row(int n, const RestrictedTripleHit& hit);
json cube_hit_row(int n, const DegenerateCubeHit& hit);
json limits_row(const GammaBracket& br);

/// Column orders for the CSV encoding of each row kind.
const std::vector<std::string>& bracket_columns();
const std::vector<std::string>& verify_columns();
const std::vector<std::string>& catalog_columns();
const std::vector<std::string>& extremal_columns();
const std::vector<std::string>& triples_columns();
const std::vector<std::string>& hit_columns();
const std::vector<std::string>& limits_columns();

void write_csv(std::ostream& os, const std::vector<std::string>& columns,
               const std::vector<json>& rows);
void write_json(std::ostream& os, const std::vector<json>& rows);

}  // namespace nct
