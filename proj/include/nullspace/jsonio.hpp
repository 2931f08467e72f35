#ifndef NULLSPACE_JSONIO_HPP
#define NULLSPACE_JSONIO_HPP

#include "nullspace/audit.hpp"
#include "nullspace/topology.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nullspace {

/// All JSON in the library preserves insertion order so serialized output is
/// stable field-for-field across runs.
using Json = nlohmann::ordered_json;

/// {"lo":"p/q","hi":"p/q"} with exact rational endpoint strings.
Json interval_json(const Interval& x);
Interval interval_from_json(const Json& j);

/// {"lo":"p/q"|"-inf","lo_closed":bool,"hi":"p/q"|"inf","hi_closed":bool}.
Json piece_json(const Piece& p);
Piece piece_from_json(const Json& j);

/// {"pieces":[piece,...]} in canonical order.
Json mset_json(const MSet& a);
MSet mset_from_json(const Json& j);

/// {"boxes":[{"m":piece,"r":piece},...]} using the region's canonical box
/// decomposition, so parsing the output reproduces the region exactly.
Json region_json(const Region& a);
Region region_from_json(const Json& j);

/// {"regions":[region,...]}; accepts a bare region object as the singleton
/// family for convenience.
std::vector<Region> regions_from_json(const Json& j);

/// {"class":...,"all_ok":...,"checks":[{"name","ok"},...],"counterexample"}.
Json topology_report_json(const TopologyReport& report);

/// Full audit report with per-case rows, in the same order as the table.
Json audit_report_json(const AuditReport& report);

/// Parses the file as JSON; raises ParseError naming the path on failure.
Json read_json_file(const std::string& path);

}  // namespace nullspace

#endif  // NULLSPACE_JSONIO_HPP
