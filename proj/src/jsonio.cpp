#include "nullspace/jsonio.hpp"

#include <fstream>

namespace nullspace {

namespace {

const Json& get_field(const Json& j, const char* key, const char* context) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string(context) + " JSON: missing field \"" + key + "\"");
    }
    return *it;
}

std::string get_string(const Json& j, const char* key, const char* context) {
    const Json& v = get_field(j, key, context);
    if (!v.is_string()) {
        throw ParseError(std::string(context) + " JSON: field \"" + key + "\" must be a string");
    }
    return v.get<std::string>();
}

bool get_bool(const Json& j, const char* key, const char* context) {
    const Json& v = get_field(j, key, context);
    if (!v.is_boolean()) {
        throw ParseError(std::string(context) + " JSON: field \"" + key + "\" must be a boolean");
    }
    return v.get<bool>();
}

void require_object(const Json& j, const char* context) {
    if (!j.is_object()) {
        throw ParseError(std::string(context) + " JSON: expected an object");
    }
}

}  // namespace

Json interval_json(const Interval& x) {
    return Json{{"lo", x.lo().str()}, {"hi", x.hi().str()}};
}

Interval interval_from_json(const Json& j) {
    require_object(j, "interval");
    const Rational lo = Rational::parse(get_string(j, "lo", "interval"));
    const Rational hi = Rational::parse(get_string(j, "hi", "interval"));
    if (lo > hi) {
        throw ParseError("interval JSON: endpoints out of order (need lo <= hi)");
    }
    return Interval(lo, hi);
}

Json piece_json(const Piece& p) {
    return Json{{"lo", p.lo.v.str()},
                {"lo_closed", p.lo.closed},
                {"hi", p.hi.v.str()},
                {"hi_closed", p.hi.closed}};
}

Piece piece_from_json(const Json& j) {
    require_object(j, "piece");
    Bound lo{ExtReal::parse(get_string(j, "lo", "piece")), get_bool(j, "lo_closed", "piece")};
    Bound hi{ExtReal::parse(get_string(j, "hi", "piece")), get_bool(j, "hi_closed", "piece")};
    if (lo.closed && !lo.v.is_finite()) {
        throw ParseError("piece JSON: an infinite lower bound must be open");
    }
    if (hi.closed && !hi.v.is_finite()) {
        throw ParseError("piece JSON: an infinite upper bound must be open");
    }
    return Piece{lo, hi};
}

Json mset_json(const MSet& a) {
    Json pieces = Json::array();
    for (const Piece& p : a.pieces()) {
        pieces.push_back(piece_json(p));
    }
    return Json{{"pieces", std::move(pieces)}};
}

MSet mset_from_json(const Json& j) {
    require_object(j, "set");
    const Json& pieces = get_field(j, "pieces", "set");
    if (!pieces.is_array()) {
        throw ParseError("set JSON: field \"pieces\" must be an array");
    }
    std::vector<Piece> raw;
    raw.reserve(pieces.size());
    for (const Json& p : pieces) {
        raw.push_back(piece_from_json(p));
    }
    return MSet::normalize(std::move(raw));
}

Json region_json(const Region& a) {
    Json boxes = Json::array();
    for (const Box& box : a.to_boxes()) {
        boxes.push_back(Json{{"m", piece_json(box.m)}, {"r", piece_json(box.r)}});
    }
    return Json{{"boxes", std::move(boxes)}};
}

Region region_from_json(const Json& j) {
    require_object(j, "region");
    const Json& boxes = get_field(j, "boxes", "region");
    if (!boxes.is_array()) {
        throw ParseError("region JSON: field \"boxes\" must be an array");
    }
    std::vector<Box> raw;
    raw.reserve(boxes.size());
    for (const Json& b : boxes) {
        require_object(b, "box");
        raw.push_back(Box{piece_from_json(get_field(b, "m", "box")),
                          piece_from_json(get_field(b, "r", "box"))});
    }
    return Region::from_boxes(raw);
}

std::vector<Region> regions_from_json(const Json& j) {
    require_object(j, "family");
    if (j.contains("boxes")) {
        return {region_from_json(j)};
    }
    const Json& regions = get_field(j, "regions", "family");
    if (!regions.is_array()) {
        throw ParseError("family JSON: field \"regions\" must be an array");
    }
    std::vector<Region> out;
    out.reserve(regions.size());
    for (const Json& r : regions) {
        out.push_back(region_from_json(r));
    }
    return out;
}

Json topology_report_json(const TopologyReport& report) {
    Json checks = Json::array();
    for (const TopologyCheck& check : report.checks) {
        checks.push_back(Json{{"name", check.name}, {"ok", check.ok}});
    }
    return Json{{"class", family_name(report.klass)},
                {"all_ok", report.all_ok},
                {"checks", std::move(checks)},
                {"counterexample", report.counterexample}};
}

Json audit_report_json(const AuditReport& report) {
    Json results = Json::array();
    for (const CaseResult& r : report.results) {
        results.push_back(Json{{"id", r.id},
                               {"expected", expected_status_name(r.expected)},
                               {"achieved", achieved_status_name(r.achieved)},
                               {"trials", r.trials},
                               {"passes", r.passes},
                               {"fails", r.fails},
                               {"vacuous", r.vacuous},
                               {"matched", r.matched},
                               {"counterexample", r.counterexample},
                               {"statement", r.statement},
                               {"note", r.note}});
    }
    return Json{{"seed", report.seed},
                {"trials", report.trials},
                {"green", report.green},
                {"coverage_errors", report.coverage_errors},
                {"results", std::move(results)}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

}  // namespace nullspace
