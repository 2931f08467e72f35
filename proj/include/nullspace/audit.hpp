#ifndef NULLSPACE_AUDIT_HPP
#define NULLSPACE_AUDIT_HPP

#include "nullspace/gen.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nullspace {

/// What the frozen catalog says a case should do on this model:
/// expected-pass cases hold on every generated instance, expected-fail cases
/// are claims the model refutes (each carries its documented counterexample
/// as a mandatory first trial), and conditional cases carry hypotheses that
/// only some operands satisfy, so vacuous trials are counted separately.
enum class ExpectedStatus { expected_pass, expected_fail, conditional };

/// What actually happened: fail if any non-vacuous trial failed, pass if
/// none failed and at least one was non-vacuous, inconclusive otherwise.
enum class AchievedStatus { pass, fail, inconclusive };

const char* expected_status_name(ExpectedStatus s);
const char* achieved_status_name(AchievedStatus s);

/// Operand bundle for one audit trial. Cases read the fields they need;
/// str() serializes the populated fields deterministically so failures are
/// reproducible by inspection.
struct Operands {
    std::vector<Interval> xs;
    std::vector<Rational> scalars;
    /// Null-element radii: ks[i] encodes the null element [-k, k].
    std::vector<Rational> ks;
    /// Zero-sum coefficient sequences (used with carrier intervals in xs).
    std::vector<Rational> alphas;
    std::vector<Rational> betas;
    /// Positive ball radii.
    std::vector<Rational> epsilons;
    std::vector<Region> regions;
    std::vector<GridIntervalFunction> funs;

    std::string str() const;
};

/// One machine-checked claim of the catalog.
struct AuditCase {
    std::string id;
    std::string statement;
    ExpectedStatus expected = ExpectedStatus::expected_pass;
    /// Documented reading, in-model caveat, or counterexample commentary.
    std::string note;
    /// Mandatory first trials; they run before any random draw, so even a
    /// single-trial run reproduces the documented behavior.
    std::vector<Operands> witnesses;
    /// For expected-fail cases: the exact serialized form the recorded
    /// counterexample must equal (the embedded witness, never shrunk).
    std::string canonical_counterexample;
    std::function<Operands(Rng&)> generate;
    /// Empty function means the hypothesis always holds.
    std::function<bool(const Operands&)> hypothesis;
    std::function<bool(const Operands&)> conclusion;
};

struct CaseResult {
    std::string id;
    ExpectedStatus expected = ExpectedStatus::expected_pass;
    AchievedStatus achieved = AchievedStatus::inconclusive;
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::size_t fails = 0;
    std::size_t vacuous = 0;
    /// Serialized operands of the first failure; random-trial failures are
    /// shrunk first, embedded witnesses are reported verbatim.
    std::string counterexample;
    bool matched = false;
    std::string statement;
    std::string note;
};

struct AuditReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    /// One entry per case, ordered by case id.
    std::vector<CaseResult> results;
    /// Catalog ids with no registered case, and registered cases missing
    /// from the catalog; any entry forces a RED verdict.
    std::vector<std::string> coverage_errors;
    bool green = false;
};

/// Every registered case, in registration order (the suite sorts by id).
std::vector<AuditCase> all_audit_cases();

/// The frozen id catalog the suite must cover, sorted ascending.
std::vector<std::string> audit_manifest();

/// Runs one case: witnesses first, then random trials from the case's own
/// seed stream mix_seed(master_seed, id), for max(trials, #witnesses) total
/// trials.
CaseResult run_case(const AuditCase& c, std::uint64_t master_seed, std::size_t trials);

/// Runs every case and checks catalog coverage. GREEN iff coverage is exact
/// and every achieved status matches the expected one (expected-fail cases
/// must also reproduce their canonical counterexample).
AuditReport run_suite(std::uint64_t master_seed, std::size_t trials);

/// Greedily simplifies a failing operand bundle (halve numerators, drop
/// region boxes, merge coefficient tails) while the hypothesis still holds
/// and the conclusion still fails.
Operands shrink_failure(const AuditCase& c, Operands failing);

/// Fixed-width human-readable rendering, one row per case plus the verdict.
std::string report_table(const AuditReport& report);

/// Case catalogs, one registrar per statement group.
void register_algebra_cases(std::vector<AuditCase>& out);
void register_metric_cases(std::vector<AuditCase>& out);
void register_ball_cases(std::vector<AuditCase>& out);
void register_interior_cases(std::vector<AuditCase>& out);
void register_closure_cases(std::vector<AuditCase>& out);
void register_family_cases(std::vector<AuditCase>& out);

}  // namespace nullspace

#endif  // NULLSPACE_AUDIT_HPP
