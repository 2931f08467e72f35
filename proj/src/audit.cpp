#include "nullspace/audit.hpp"

#include "nullspace/rational.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nullspace {

const char* expected_status_name(ExpectedStatus s) {
    switch (s) {
        case ExpectedStatus::expected_pass: return "expected-pass";
        case ExpectedStatus::expected_fail: return "expected-fail";
        case ExpectedStatus::conditional: return "conditional";
    }
    return "unknown";
}

const char* achieved_status_name(AchievedStatus s) {
    switch (s) {
        case AchievedStatus::pass: return "pass";
        case AchievedStatus::fail: return "fail";
        case AchievedStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

template <typename T, typename F>
void append_group(std::string& out, const char* name, const std::vector<T>& items, F&& render) {
    if (items.empty()) {
        return;
    }
    if (!out.empty()) {
        out += ' ';
    }
    out += name;
    out += "=[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i != 0) {
            out += "; ";
        }
        out += render(items[i]);
    }
    out += ']';
}

}  // namespace

std::string Operands::str() const {
    std::string out;
    append_group(out, "xs", xs, [](const Interval& v) { return v.str(); });
    append_group(out, "scalars", scalars, [](const Rational& v) { return v.str(); });
    append_group(out, "ks", ks, [](const Rational& v) { return v.str(); });
    append_group(out, "alphas", alphas, [](const Rational& v) { return v.str(); });
    append_group(out, "betas", betas, [](const Rational& v) { return v.str(); });
    append_group(out, "eps", epsilons, [](const Rational& v) { return v.str(); });
    append_group(out, "regions", regions, [](const Region& v) { return v.str(); });
    append_group(out, "funs", funs, [](const GridIntervalFunction& v) { return v.str(); });
    return out.empty() ? "(no operands)" : out;
}

namespace {

/// True iff the operands satisfy the hypothesis but refute the conclusion.
/// Malformed candidates (ones the exact arithmetic rejects) never count.
bool is_failing(const AuditCase& c, const Operands& ops) {
    try {
        if (c.hypothesis && !c.hypothesis(ops)) {
            return false;
        }
        return !c.conclusion(ops);
    } catch (const DomainError&) {
        return false;
    }
}

Rational halve(const Rational& v) {
    return Rational(v.numerator() / 2, v.denominator());
}

Interval halve_interval_checked(const Interval& x) {
    const Rational lo = halve(x.lo());
    const Rational hi = halve(x.hi());
    if (hi < lo) {
        return x;
    }
    return Interval(lo, hi);
}

Bound halve_bound(const Bound& b) {
    if (!b.v.is_finite()) {
        return b;
    }
    return {ExtReal::finite(halve(b.v.value())), b.closed};
}

/// Halves all finite box corners; invalid results fall back to the input.
Region halve_region(const Region& a) {
    std::vector<Box> boxes;
    for (const Box& box : a.to_boxes()) {
        Box shrunk{{halve_bound(box.m.lo), halve_bound(box.m.hi)},
                   {halve_bound(box.r.lo), halve_bound(box.r.hi)}};
        boxes.push_back(shrunk);
    }
    try {
        return Region::from_boxes(boxes);
    } catch (const DomainError&) {
        return a;
    }
}

/// Every rational-valued field halved toward zero (coefficient sequences are
/// left alone: halving would break their zero-sum invariant).
Operands halve_all(const Operands& ops) {
    Operands out = ops;
    for (Interval& x : out.xs) {
        x = halve_interval_checked(x);
    }
    for (Rational& s : out.scalars) {
        s = halve(s);
    }
    for (Rational& k : out.ks) {
        k = halve(k);
    }
    for (Rational& e : out.epsilons) {
        const Rational h = halve(e);
        if (h.is_positive()) {
            e = h;
        }
    }
    for (Region& r : out.regions) {
        r = halve_region(r);
    }
    for (GridIntervalFunction& f : out.funs) {
        std::vector<Interval> values;
        values.reserve(f.values().size());
        for (const Interval& v : f.values()) {
            values.push_back(halve_interval_checked(v));
        }
        f = GridIntervalFunction(f.grid(), std::move(values));
    }
    return out;
}

/// Drops the last box of every region that has more than one.
Operands drop_boxes(const Operands& ops) {
    Operands out = ops;
    bool changed = false;
    for (Region& r : out.regions) {
        std::vector<Box> boxes = r.to_boxes();
        if (boxes.size() < 2) {
            continue;
        }
        boxes.pop_back();
        try {
            r = Region::from_boxes(boxes);
            changed = true;
        } catch (const DomainError&) {
        }
    }
    return changed ? out : ops;
}

/// Merges the last two entries of every coefficient sequence, preserving the
/// zero-sum invariant while making the sequence shorter.
Operands merge_coefficients(const Operands& ops) {
    Operands out = ops;
    bool changed = false;
    for (std::vector<Rational>* seq : {&out.alphas, &out.betas}) {
        if (seq->size() < 3) {
            continue;
        }
        const Rational tail = seq->back();
        seq->pop_back();
        seq->back() += tail;
        changed = true;
    }
    return changed ? out : ops;
}

bool same_operands(const Operands& a, const Operands& b) { return a.str() == b.str(); }

}  // namespace

Operands shrink_failure(const AuditCase& c, Operands failing) {
    for (int round = 0; round < 40; ++round) {
        bool moved = false;
        for (const Operands& candidate :
             {halve_all(failing), drop_boxes(failing), merge_coefficients(failing)}) {
            if (same_operands(candidate, failing)) {
                continue;
            }
            if (is_failing(c, candidate)) {
                failing = candidate;
                moved = true;
                break;
            }
        }
        if (!moved) {
            break;
        }
    }
    return failing;
}

CaseResult run_case(const AuditCase& c, std::uint64_t master_seed, std::size_t trials) {
    CaseResult result;
    result.id = c.id;
    result.expected = c.expected;
    result.statement = c.statement;
    result.note = c.note;

    Rng rng(mix_seed(master_seed, c.id));
    const std::size_t total = std::max(trials, c.witnesses.size());
    result.trials = total;
    for (std::size_t i = 0; i < total; ++i) {
        const bool embedded = i < c.witnesses.size();
        const Operands ops = embedded ? c.witnesses[i] : c.generate(rng);
        if (c.hypothesis && !c.hypothesis(ops)) {
            ++result.vacuous;
            continue;
        }
        if (c.conclusion(ops)) {
            ++result.passes;
        } else {
            ++result.fails;
            if (result.counterexample.empty()) {
                // Embedded witnesses are the documented minimal instances;
                // only random finds get simplified.
                const Operands minimal = embedded ? ops : shrink_failure(c, ops);
                result.counterexample = minimal.str();
            }
        }
    }

    if (result.fails > 0) {
        result.achieved = AchievedStatus::fail;
    } else if (result.passes > 0) {
        result.achieved = AchievedStatus::pass;
    } else {
        result.achieved = AchievedStatus::inconclusive;
    }

    switch (c.expected) {
        case ExpectedStatus::expected_pass:
        case ExpectedStatus::conditional:
            result.matched = result.achieved == AchievedStatus::pass;
            break;
        case ExpectedStatus::expected_fail:
            result.matched = result.achieved == AchievedStatus::fail &&
                             (c.canonical_counterexample.empty() ||
                              result.counterexample == c.canonical_counterexample);
            break;
    }
    return result;
}

std::vector<std::string> audit_manifest() {
    return {
        "C2.1-generalized-inverse",
        "D2.1.i-identity",
        "D2.1.ii-substitution",
        "D2.1.iii-commutative-associative",
        "D3.1-null-decomposition",
        "D3.2-self-decomposition",
        "D4.2.i-translation-invariance",
        "D4.2.ii-absolute-homogeneity",
        "D6.1-interior-points",
        "D6.2-pseudo-interior-points",
        "D7.1-closure-points",
        "D8.1-side-condition",
        "E2.1-model-operations",
        "E2.2-null-set",
        "E3.1-interval-null-decomposition",
        "E3.2-null-merge",
        "E4.1-distance-formula",
        "E4.2.i-function-space",
        "E4.2.ii-function-metric",
        "E4.2.iii-function-zero-sum",
        "E6.1-null-set-idempotent",
        "L2.3-general-distributivity",
        "L2.3-negative-distributivity",
        "L2.3-positive-distributivity",
        "L2.scalar-associative",
        "L2.scalar-associative-positive",
        "L2.vector-distributive",
        "L2.vector-distributive-positive",
        "L7.1-null-descent",
        "L8.1.i-intersection-upward-inclusion",
        "L8.1.ii-intersection-upward-equality",
        "L8.2-pseudo-open-intersections",
        "M4.i-zero-iff-omega-equal",
        "M4.ii-symmetry",
        "M4.iii-triangle",
        "M4.iv-null-inequalities",
        "M4.iv-prime-null-equalities",
        "M4.not-i-prime",
        "M4.v-prime-zero-sum-equalities",
        "M4.v-zero-sum-inequalities",
        "P2.1.i",
        "P2.1.ii",
        "P2.1.iii",
        "P2.2.i",
        "P2.2.ii",
        "P2.3",
        "P2.4-span",
        "P5.1.i-null-absorption",
        "P5.1.ii-null-absorption-iff",
        "P5.2.i-center-null-inclusion",
        "P5.3.i-ball-upward-inclusion",
        "P5.3.ii-ball-upward-equal",
        "P5.4.i-translate-inclusions",
        "P5.4.ii-null-translate-inclusions",
        "P5.4.iii-translate-equality",
        "P5.4.iv-null-translate-equality",
        "P5.5-ball-null-fattening",
        "P5.6-null-distances",
        "P5.7-null-ball-scaling",
        "P5.ball-omega-eq",
        "P6.1.i-pseudo-open-null-stability",
        "P6.1.ii-pseudo-open-null-inclusions",
        "P6.1.iii-fixed-null-translate",
        "P6.1.iii-pseudo-open-upward-equality",
        "P6.2.i-type-one",
        "P6.2.ii-type-two",
        "P6.2.iii-type-two-complement-literal",
        "P6.2.iii-type-two-complement-pseudo",
        "P6.2.iv-plain",
        "P6.2.v-type-three",
        "P6.2.vi-type-three-complement-literal",
        "P6.2.vi-type-three-complement-pseudo",
        "P6.3-open-implications",
        "P6.4-open-upward-equality",
        "P6.5-interior-idempotence",
        "P6.6-balls-open",
        "P7.1-closure-idempotence",
        "P7.2-closed-null-expansion",
        "P7.3-plain-complement-duality",
        "P7.4-open-complement-closed-literal",
        "P7.4-open-complement-closed-pseudo",
        "P7.5-closed-complement-open",
        "P7.6-simultaneous-closedness",
        "P7.7-closed-balls-closed",
        "P8.1.i-balls-in-refined-family-two",
        "P8.1.ii-balls-in-refined-family-three",
        "R2.2-subspace",
        "R2.3-linear-combination",
        "R2.omega-equality-conditions",
        "R2.same-sign-distributivity",
        "R4.1-equalities-from-omega-instances",
        "R6.1-interior-inclusions",
        "R6.2-center-in-fattened-ball",
        "R6.3-pseudo-interior-inclusions",
        "R6.4-whole-and-empty-open",
        "R6.5-largest-open-subset",
        "R7.1-closure-inclusions",
        "R7.2-type-one-closure-simplification",
        "R7.3-closed-set-basics",
        "R7.singleton-closed",
        "R8.1-family-relations",
        "T8.ptauII",
        "T8.ptauIII",
        "T8.tau0",
        "T8.tauI",
        "T8.tauII-tilde",
        "T8.tauIII-tilde",
    };
}

std::vector<AuditCase> all_audit_cases() {
    std::vector<AuditCase> cases;
    register_algebra_cases(cases);
    register_metric_cases(cases);
    register_ball_cases(cases);
    register_interior_cases(cases);
    register_closure_cases(cases);
    register_family_cases(cases);
    return cases;
}

AuditReport run_suite(std::uint64_t master_seed, std::size_t trials) {
    AuditReport report;
    report.seed = master_seed;
    report.trials = trials;

    std::vector<AuditCase> cases = all_audit_cases();
    std::sort(cases.begin(), cases.end(),
              [](const AuditCase& a, const AuditCase& b) { return a.id < b.id; });

    std::set<std::string> registered;
    for (const AuditCase& c : cases) {
        if (!registered.insert(c.id).second) {
            report.coverage_errors.push_back("duplicate case id: " + c.id);
        }
    }
    const std::vector<std::string> manifest = audit_manifest();
    const std::set<std::string> listed(manifest.begin(), manifest.end());
    for (const std::string& id : listed) {
        if (registered.find(id) == registered.end()) {
            report.coverage_errors.push_back("catalog id has no registered case: " + id);
        }
    }
    for (const std::string& id : registered) {
        if (listed.find(id) == listed.end()) {
            report.coverage_errors.push_back("registered case missing from catalog: " + id);
        }
    }

    bool all_matched = true;
    for (const AuditCase& c : cases) {
        CaseResult r = run_case(c, master_seed, trials);
        all_matched = all_matched && r.matched;
        report.results.push_back(std::move(r));
    }
    report.green = all_matched && report.coverage_errors.empty();
    return report;
}

std::string report_table(const AuditReport& report) {
    std::size_t id_width = 4;
    for (const CaseResult& r : report.results) {
        id_width = std::max(id_width, r.id.size());
    }
    std::ostringstream out;
    out << "audit seed=" << report.seed << " trials=" << report.trials << "\n";
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) {
            s.append(w - s.size(), ' ');
        }
        return s;
    };
    out << pad("case", id_width) << "  " << pad("expected", 15) << pad("achieved", 13)
        << pad("trials", 8) << pad("pass", 8) << pad("fail", 8) << pad("vacuous", 9) << "match\n";
    for (const CaseResult& r : report.results) {
        out << pad(r.id, id_width) << "  " << pad(expected_status_name(r.expected), 15)
            << pad(achieved_status_name(r.achieved), 13) << pad(std::to_string(r.trials), 8)
            << pad(std::to_string(r.passes), 8) << pad(std::to_string(r.fails), 8)
            << pad(std::to_string(r.vacuous), 9) << (r.matched ? "yes" : "NO") << "\n";
        if (!r.counterexample.empty()) {
            out << pad("", id_width) << "  counterexample: " << r.counterexample << "\n";
        }
    }
    for (const std::string& err : report.coverage_errors) {
        out << "coverage: " << err << "\n";
    }
    out << "verdict: " << (report.green ? "GREEN" : "RED") << "\n";
    return out.str();
}

}  // namespace nullspace
