#include "nullspace/cli.hpp"

#include "nullspace/expr.hpp"
#include "nullspace/jsonio.hpp"
#include "nullspace/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace nullspace {

namespace {

Kind parse_kind(const std::string& text) {
    if (text == "plain") return Kind::Plain;
    if (text == "I") return Kind::TypeI;
    if (text == "II") return Kind::TypeII;
    if (text == "III") return Kind::TypeIII;
    throw ParseError("unknown kind \"" + text + "\" (expected plain, I, II, or III)");
}

FamilyClass parse_class(const std::string& text) {
    if (text == "tau0") return FamilyClass::tau0;
    if (text == "tauI") return FamilyClass::tauI;
    if (text == "tauII") return FamilyClass::tauII_tilde;
    if (text == "tauIII") return FamilyClass::tauIII_tilde;
    if (text == "ptauII") return FamilyClass::ptauII;
    if (text == "ptauIII") return FamilyClass::ptauIII;
    throw ParseError("unknown class \"" + text +
                     "\" (expected tau0, tauI, tauII, tauIII, ptauII, or ptauIII)");
}

std::uint64_t seed_from_env(const char* text) {
    std::uint64_t value = 0;
    const char* end = text + std::string_view(text).size();
    const auto [ptr, ec] = std::from_chars(text, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(std::string("environment variable NULLSPACE_SEED is not an unsigned "
                                     "integer: \"") +
                         text + "\"");
    }
    return value;
}

/// Everything the subcommand callbacks read. One command runs per
/// invocation, so unrelated fields simply stay at their defaults.
struct CliOptions {
    std::string expr_text;
    std::string expr_x;
    std::string expr_y;
    std::string center_text;
    std::string epsilon_text;
    std::string shape = "open";
    std::string in_path;
    std::string in2_path;
    std::string by_text;
    std::string alpha_text;
    std::string point_text;
    std::string kind_text = "plain";
    bool pseudo = false;
    std::string class_text;
    std::uint64_t seed = 42;
    std::size_t trials = 500;
    std::string format = "json";
    std::string out_path;
    std::string rmax_text = "10";
};

class CliDriver {
public:
    CliDriver(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args) {
        CLI::App app{"Exact calculator and auditor for the interval vector space with its "
                     "null-set pseudo-metric",
                     "nullspace"};
        app.require_subcommand(1);
        build(app);

        // CLI11's vector overload consumes arguments from the back.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out_, err_);
            return code == 0 ? 0 : 2;
        } catch (const ParseError& e) {
            err_ << "error: " << e.what() << "\n";
            return 2;
        } catch (const DomainError& e) {
            err_ << "error: " << e.what() << "\n";
            return 2;
        }
        return rc_;
    }

private:
    void build(CLI::App& app) {
        const auto add_format = [this](CLI::App* cmd) {
            cmd->add_option("--format", opt_.format, "output format")
                ->check(CLI::IsMember({"json", "table"}));
        };

        CLI::App* eval = app.add_subcommand("eval", "evaluate an interval expression");
        // allow_extra_args(false) switches off CLI11's bracketed-container
        // syntax, which would otherwise split "[1,2]" into {"1", "2"}.
        eval->add_option("expr", opt_.expr_text, "expression like \"[1,2] + 2 * [3,5]\"")
            ->required()
            ->allow_extra_args(false);
        add_format(eval);
        eval->callback([this] { run_eval(); });

        CLI::App* metric = app.add_subcommand("metric", "distance between two expressions");
        metric->add_option("x", opt_.expr_x, "first interval expression")->required();
        metric->add_option("y", opt_.expr_y, "second interval expression")->required();
        add_format(metric);
        metric->callback([this] { run_metric(); });

        CLI::App* ball = app.add_subcommand("ball", "ball or sphere of the distance, as a region");
        ball->add_option("--center", opt_.center_text, "center interval expression")->required();
        ball->add_option("--epsilon", opt_.epsilon_text, "radius (rational)")->required();
        ball->add_option("--shape", opt_.shape, "open, closed, or sphere")
            ->check(CLI::IsMember({"open", "closed", "sphere"}));
        add_format(ball);
        ball->callback([this] { run_ball(); });

        CLI::App* region = app.add_subcommand("region", "region algebra on JSON box unions");
        region->require_subcommand(1);
        const auto binary = [&](const char* name, const char* help) {
            CLI::App* cmd = region->add_subcommand(name, help);
            cmd->add_option("--in", opt_.in_path, "first region JSON file")->required();
            cmd->add_option("--in2", opt_.in2_path, "second region JSON file")->required();
            add_format(cmd);
            return cmd;
        };
        const auto unary = [&](const char* name, const char* help) {
            CLI::App* cmd = region->add_subcommand(name, help);
            cmd->add_option("--in", opt_.in_path, "region JSON file")->required();
            add_format(cmd);
            return cmd;
        };
        binary("union", "pointwise union")->callback([this] {
            emit_region(region_union(load_region(opt_.in_path), load_region(opt_.in2_path)));
        });
        binary("intersect", "pointwise intersection")->callback([this] {
            emit_region(region_intersect(load_region(opt_.in_path), load_region(opt_.in2_path)));
        });
        binary("difference", "pointwise difference")->callback([this] {
            emit_region(region_difference(load_region(opt_.in_path), load_region(opt_.in2_path)));
        });
        unary("complement", "complement within the half-plane r >= 0")->callback([this] {
            emit_region(region_complement(load_region(opt_.in_path)));
        });
        unary("upward", "the region plus the null set (columns extended upward)")
            ->callback([this] { emit_region(upward_closure(load_region(opt_.in_path))); });
        CLI::App* translate = unary("translate", "translate every element by a vector");
        translate->add_option("--by", opt_.by_text, "translation interval expression")->required();
        translate->callback([this] {
            emit_region(region_translate(load_region(opt_.in_path), eval_expr(opt_.by_text)));
        });
        CLI::App* scale = unary("scale", "image under scalar multiplication");
        scale->add_option("--alpha", opt_.alpha_text, "scalar (rational)")->required();
        scale->callback([this] {
            emit_region(region_scale(Rational::parse(opt_.alpha_text), load_region(opt_.in_path)));
        });
        CLI::App* member = unary("member", "does the interval belong to the region?");
        member->add_option("--point", opt_.point_text, "interval expression")->required();
        member->callback([this] {
            emit_bool(load_region(opt_.in_path).member(eval_expr(opt_.point_text)));
        });
        binary("subset", "is the first region contained in the second?")->callback([this] {
            emit_bool(region_subset(load_region(opt_.in_path), load_region(opt_.in2_path)));
        });
        binary("equal", "do the regions describe the same set?")->callback([this] {
            emit_bool(region_equal(load_region(opt_.in_path), load_region(opt_.in2_path)));
        });
        unary("full-columns", "midpoints whose whole column lies in the region")
            ->callback([this] { emit_mset(full_columns(load_region(opt_.in_path))); });
        unary("project", "shadow of the region on the m-axis")
            ->callback([this] { emit_mset(project_m(load_region(opt_.in_path))); });

        CLI::App* interior = app.add_subcommand("interior", "interior of a region");
        interior->add_option("--in", opt_.in_path, "region JSON file")->required();
        interior->add_option("--kind", opt_.kind_text, "plain, I, II, or III");
        interior->add_flag("--pseudo", opt_.pseudo, "pseudo variant (points need not lie in A)");
        add_format(interior);
        interior->callback([this] {
            emit_region(interior_of(load_region(opt_.in_path), parse_kind(opt_.kind_text),
                                    opt_.pseudo));
        });

        CLI::App* closure = app.add_subcommand("closure", "closure of a region");
        closure->add_option("--in", opt_.in_path, "region JSON file")->required();
        closure->add_option("--kind", opt_.kind_text, "plain, I, II, or III");
        add_format(closure);
        closure->callback([this] {
            emit_region(closure_of(load_region(opt_.in_path), parse_kind(opt_.kind_text)));
        });

        CLI::App* topology = app.add_subcommand("topology", "check a family of regions against "
                                                            "an open-set class");
        topology->add_option("--class", opt_.class_text,
                             "tau0, tauI, tauII, tauIII, ptauII, or ptauIII")
            ->required();
        topology->add_option("--in", opt_.in_path, "family JSON file {\"regions\": [...]}")
            ->required();
        add_format(topology);
        topology->callback([this] { run_topology(); });

        CLI::App* audit = app.add_subcommand("audit", "run the full claim catalog");
        CLI::Option* seed_opt = audit->add_option("--seed", opt_.seed, "master seed");
        audit->add_option("--trials", opt_.trials, "random trials per case")
            ->check(CLI::PositiveNumber);
        add_format(audit);
        audit->callback([this, seed_opt] { run_audit(seed_opt->count() > 0); });

        CLI::App* render = app.add_subcommand("render", "draw a region as an SVG file");
        render->add_option("--in", opt_.in_path, "region JSON file")->required();
        render->add_option("--out", opt_.out_path, "output SVG path")->required();
        render->add_option("--rmax", opt_.rmax_text,
                           "display clip for the radius axis (rational, default 10)");
        render->callback([this] { run_render(); });
    }

    Region load_region(const std::string& path) { return region_from_json(read_json_file(path)); }

    bool table() const { return opt_.format == "table"; }

    void emit_json(const Json& j) { out_ << j.dump(2) << "\n"; }

    void emit_region(const Region& a) {
        if (table()) {
            out_ << a.str() << "\n";
        } else {
            emit_json(region_json(a));
        }
    }

    void emit_mset(const MSet& a) {
        if (table()) {
            out_ << mset_str(a) << "\n";
        } else {
            emit_json(mset_json(a));
        }
    }

    void emit_bool(bool value) {
        if (table()) {
            out_ << (value ? "true" : "false") << "\n";
        } else {
            emit_json(Json{{"result", value}});
        }
    }

    void run_eval() {
        const Interval x = eval_expr(opt_.expr_text);
        if (table()) {
            out_ << x.str() << "  (m = " << x.mid().str() << ", r = " << x.rad().str() << ")\n";
        } else {
            emit_json(interval_json(x));
        }
    }

    void run_metric() {
        const Rational d = metric_d(eval_expr(opt_.expr_x), eval_expr(opt_.expr_y));
        if (table()) {
            out_ << "d = " << d.str() << "\n";
        } else {
            emit_json(Json{{"distance", d.str()}});
        }
    }

    void run_ball() {
        const BallSpec spec{eval_expr(opt_.center_text), Rational::parse(opt_.epsilon_text)};
        if (opt_.shape == "open") {
            emit_region(open_ball(spec));
        } else if (opt_.shape == "closed") {
            emit_region(closed_ball(spec));
        } else {
            emit_region(sphere(spec));
        }
    }

    void run_topology() {
        const FamilyClass klass = parse_class(opt_.class_text);
        const std::vector<Region> family = regions_from_json(read_json_file(opt_.in_path));
        const TopologyReport report = family_check(family, klass);
        if (table()) {
            out_ << "class: " << family_name(report.klass) << "\n";
            for (const TopologyCheck& check : report.checks) {
                out_ << (check.ok ? "  pass  " : "  FAIL  ") << check.name << "\n";
            }
            out_ << "verdict: " << (report.all_ok ? "pass" : "FAIL") << "\n";
            if (!report.counterexample.empty()) {
                out_ << "counterexample: " << report.counterexample << "\n";
            }
        } else {
            emit_json(topology_report_json(report));
        }
    }

    void run_audit(bool seed_given) {
        if (!seed_given) {
            if (const char* env = std::getenv("NULLSPACE_SEED")) {
                opt_.seed = seed_from_env(env);
            }
        }
        const AuditReport report = run_suite(opt_.seed, opt_.trials);
        if (table()) {
            out_ << report_table(report);
        } else {
            emit_json(audit_report_json(report));
        }
        rc_ = report.green ? 0 : 1;
    }

    void run_render() {
        const std::string svg =
            render_svg(load_region(opt_.in_path), Rational::parse(opt_.rmax_text));
        std::ofstream file(opt_.out_path, std::ios::binary);
        if (!file) {
            throw ParseError("cannot open output file: " + opt_.out_path);
        }
        file << svg;
        if (!file.good()) {
            throw ParseError("failed to write: " + opt_.out_path);
        }
    }

    std::ostream& out_;
    std::ostream& err_;
    CliOptions opt_;
    int rc_ = 0;
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return CliDriver(out, err).run(args);
}

}  // namespace nullspace
