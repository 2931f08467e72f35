#include "nullspace/topology.hpp"

#include <algorithm>

namespace nullspace {

const char* kind_name(Kind kind) {
    switch (kind) {
        case Kind::Plain: return "plain";
        case Kind::TypeI: return "type-I";
        case Kind::TypeII: return "type-II";
        case Kind::TypeIII: return "type-III";
    }
    return "unknown";
}

namespace {

bool fattens_ball(Kind kind) { return kind == Kind::TypeI || kind == Kind::TypeIII; }
bool fattens_set(Kind kind) { return kind == Kind::TypeII || kind == Kind::TypeIII; }

Region strip(const Rational& center_mid, const Rational& half_width, bool closed) {
    const Bound lo{ExtReal::finite(center_mid - half_width), closed};
    const Bound hi{ExtReal::finite(center_mid + half_width), closed};
    return columns_over(MSet::piece(lo, hi));
}

}  // namespace

Region open_ball(const BallSpec& spec) {
    if (!spec.epsilon.is_positive()) {
        throw DomainError("open ball: radius " + spec.epsilon.str() + " must be positive");
    }
    return strip(spec.center.mid(), half(spec.epsilon), false);
}

Region closed_ball(const BallSpec& spec) {
    if (!spec.epsilon.is_positive()) {
        throw DomainError("closed ball: radius " + spec.epsilon.str() + " must be positive");
    }
    return strip(spec.center.mid(), half(spec.epsilon), true);
}

Region sphere(const BallSpec& spec) {
    if (spec.epsilon.is_negative()) {
        throw DomainError("sphere: radius " + spec.epsilon.str() + " must be nonnegative");
    }
    const Rational m = spec.center.mid();
    const Rational h = half(spec.epsilon);
    return region_union(columns_over(MSet::point(m - h)), columns_over(MSet::point(m + h)));
}

Region interior_of(const Region& a, Kind kind, bool pseudo) {
    // Balls are full vertical strips and strips absorb the null set, so
    // fattening the ball changes nothing; fattening the set swaps in the
    // upward closure. "Some ball around x fits inside T" then says exactly
    // that x's midpoint lies in the 1-D interior of T's full columns.
    const Region target = fattens_set(kind) ? upward_closure(a) : a;
    const Region cols = columns_over(mset_interior(full_columns(target)));
    return pseudo ? cols : region_intersect(cols, a);
}

Region closure_of(const Region& a, Kind kind) {
    // "Every ball around x meets T" says x's midpoint lies in the 1-D
    // closure of T's shadow; the shadow ignores upward fattening, which is
    // why all four kinds coincide here.
    const Region target = fattens_set(kind) ? upward_closure(a) : a;
    return region_union(a, columns_over(mset_closure(project_m(target))));
}

bool is_open(const Region& a, Kind kind) { return interior_of(a, kind, false) == a; }

bool is_pseudo_open(const Region& a, Kind kind) { return interior_of(a, kind, true) == a; }

bool is_closed(const Region& a, Kind kind) { return closure_of(a, kind) == a; }

bool oracle_point_check(const Region& a, const Interval& x, OracleMode mode, Kind kind,
                        bool pseudo) {
    if (mode == OracleMode::interior && !pseudo && !a.member(x)) return false;
    if (mode == OracleMode::closure && a.member(x)) return true;

    const Region target = fattens_set(kind) ? upward_closure(a) : a;
    const Rational m = x.mid();
    // Candidate radii: breakpoint distances, their halves, and 1. The ball
    // condition is antitone in eps for interiors (a bigger ball is harder to
    // fit) and monotone for closures (a bigger ball meets more), and the
    // region's structure is constant for balls smaller than twice the least
    // breakpoint distance. Both quantifiers therefore resolve at the least
    // candidate, which always lies in that lowest constant regime.
    Rational eps(1);
    for (const Band& band : a.bands()) {
        for (const Bound* bound : {&band.m.lo, &band.m.hi}) {
            if (!bound->v.is_finite()) continue;
            const Rational d = abs(m - bound->v.value());
            if (d.is_zero()) continue;
            if (d < eps) eps = d;
            if (half(d) < eps) eps = half(d);
        }
    }
    Region probe = open_ball({x, eps});
    if (fattens_ball(kind)) probe = upward_closure(probe);
    if (mode == OracleMode::interior) {
        return region_subset(probe, target);
    }
    return !region_intersect(probe, target).empty();
}

bool cond_506(const Region& a) {
    // Second clause of the condition (translating by a null element is
    // injective into A) holds for every region in this model, because
    // adding a fixed interval moves distinct intervals to distinct
    // intervals; only the inclusion can fail.
    return region_subset(upward_closure(a), a);
}

const char* family_name(FamilyClass klass) {
    switch (klass) {
        case FamilyClass::tau0: return "tau0";
        case FamilyClass::tauI: return "tauI";
        case FamilyClass::tauII_tilde: return "tauII_tilde";
        case FamilyClass::tauIII_tilde: return "tauIII_tilde";
        case FamilyClass::ptauII: return "ptauII";
        case FamilyClass::ptauIII: return "ptauIII";
    }
    return "unknown";
}

bool in_family(const Region& a, FamilyClass klass) {
    switch (klass) {
        case FamilyClass::tau0: return is_open(a, Kind::Plain);
        case FamilyClass::tauI: return is_open(a, Kind::TypeI);
        case FamilyClass::tauII_tilde: return is_open(a, Kind::TypeII) && cond_506(a);
        case FamilyClass::tauIII_tilde: return is_pseudo_open(a, Kind::TypeIII) && cond_506(a);
        case FamilyClass::ptauII: return is_pseudo_open(a, Kind::TypeII);
        case FamilyClass::ptauIII: return is_pseudo_open(a, Kind::TypeIII);
    }
    return false;
}

TopologyReport family_check(const std::vector<Region>& regions, FamilyClass klass) {
    if (regions.empty()) {
        throw DomainError("family check: the family must be nonempty");
    }
    TopologyReport report;
    report.klass = klass;
    const auto add = [&](std::string name, const Region& candidate) {
        const bool ok = in_family(candidate, klass);
        report.checks.push_back({std::move(name), ok});
        if (!ok && report.counterexample.empty()) {
            report.counterexample = candidate.str();
        }
    };

    for (std::size_t i = 0; i < regions.size(); ++i) {
        add("member[" + std::to_string(i) + "]", regions[i]);
    }
    add("empty-set", Region::empty_region());
    add("whole-space", Region::whole_space());

    for (std::size_t i = 0; i < regions.size(); ++i) {
        for (std::size_t j = i + 1; j < regions.size(); ++j) {
            add("intersect[" + std::to_string(i) + "," + std::to_string(j) + "]",
                region_intersect(regions[i], regions[j]));
        }
    }
    for (std::size_t window = 3; window <= 4; ++window) {
        for (std::size_t start = 0; start + window <= regions.size(); ++start) {
            Region acc = regions[start];
            for (std::size_t i = start + 1; i < start + window; ++i) {
                acc = region_intersect(acc, regions[i]);
            }
            add("intersect[" + std::to_string(start) + ".." +
                    std::to_string(start + window - 1) + "]",
                acc);
        }
    }

    for (std::size_t i = 0; i < regions.size(); ++i) {
        for (std::size_t j = i + 1; j < regions.size(); ++j) {
            add("union[" + std::to_string(i) + "," + std::to_string(j) + "]",
                region_union(regions[i], regions[j]));
        }
    }
    Region prefix = regions[0];
    for (std::size_t i = 1; i < regions.size(); ++i) {
        prefix = region_union(prefix, regions[i]);
        add("union[0.." + std::to_string(i) + "]", prefix);
    }

    report.all_ok = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const TopologyCheck& c) { return c.ok; });
    return report;
}

}  // namespace nullspace
