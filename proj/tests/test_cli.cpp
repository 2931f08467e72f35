#include "nullspace/cli.hpp"
#include "nullspace/expr.hpp"
#include "nullspace/gen.hpp"
#include "nullspace/jsonio.hpp"
#include "nullspace/render.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace nullspace;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = cli_main(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

/// Scratch directory for the JSON/SVG files the commands read and write.
std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "nullspace_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    const auto path = scratch_dir() / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path.string();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::string write_region(const std::string& name, const Region& a) {
    return write_file(name, region_json(a).dump(2));
}

Region closed_box(int m_lo, int m_hi, int r_lo, int r_hi) {
    return Region::from_boxes({Box{
        Piece{Bound::closed_at(Rational(m_lo)), Bound::closed_at(Rational(m_hi))},
        Piece{Bound::closed_at(Rational(r_lo)), Bound::closed_at(Rational(r_hi))}}});
}

}  // namespace

TEST_CASE("expression evaluator handles the grammar") {
    CHECK(eval_expr("[1,2] + [3,5]") == Interval(Rational(4), Rational(7)));
    CHECK(eval_expr("[1,2]+[3,5]") == Interval(Rational(4), Rational(7)));
    CHECK(eval_expr("2 * [3,5]") == Interval(Rational(6), Rational(10)));
    CHECK(eval_expr("-1 * [3,5]") == Interval(Rational(-5), Rational(-3)));
    CHECK(eval_expr("-[3,5]") == Interval(Rational(-5), Rational(-3)));
    CHECK(eval_expr("3/2 * [2,4]") == Interval(Rational(3), Rational(6)));
    CHECK(eval_expr("2 * 3 * [1,2]") == Interval(Rational(6), Rational(12)));
    CHECK(eval_expr("([1,2] + [0,1]) - [1,1]") == Interval(Rational(0), Rational(2)));
    CHECK(eval_expr(" [ -1/2 , 1/2 ] ") == Interval(Rational(-1, 2), Rational(1, 2)));
    // x - x is a null element, not the zero vector.
    CHECK(eval_expr("[1,3] - [1,3]") == Interval(Rational(-2), Rational(2)));
    // Scaling binds tighter than the additive loop: a + s*b - c.
    CHECK(eval_expr("[0,0] + 2 * [1,1] - [1,1]") == Interval(Rational(1), Rational(1)));
}

TEST_CASE("expression evaluator rejects malformed input") {
    CHECK_THROWS_AS(eval_expr(""), ParseError);
    CHECK_THROWS_AS(eval_expr("[1,2] extra"), ParseError);
    CHECK_THROWS_AS(eval_expr("[2,1]"), ParseError);
    CHECK_THROWS_AS(eval_expr("[1,2] + "), ParseError);
    CHECK_THROWS_AS(eval_expr("([1,2]"), ParseError);
    CHECK_THROWS_AS(eval_expr("[1 2]"), ParseError);
    CHECK_THROWS_AS(eval_expr("2 [1,2]"), ParseError);
    CHECK_THROWS_AS(eval_expr("[1/0, 2]"), ParseError);
    const auto hint_mentions_fraction = [](const char* text) {
        try {
            eval_expr(text);
        } catch (const ParseError& e) {
            return std::string(e.what()).find("fraction") != std::string::npos;
        }
        return false;
    };
    CHECK(hint_mentions_fraction("[0.5, 1]"));
    CHECK(hint_mentions_fraction("1.5 * [0,1]"));
}

TEST_CASE("interval and region JSON round-trip exactly") {
    const Interval x(Rational(-7, 3), Rational(11, 2));
    CHECK(interval_from_json(interval_json(x)) == x);
    CHECK(interval_json(x)["lo"] == "-7/3");
    CHECK(interval_json(x)["hi"] == "11/2");

    Rng rng(2026);
    for (int i = 0; i < 50; ++i) {
        const Region a = gen_region(rng);
        CHECK(region_from_json(region_json(a)) == a);
        const MSet shadow = project_m(a);
        CHECK(mset_from_json(mset_json(shadow)) == shadow);
    }
}

TEST_CASE("JSON parsing rejects malformed documents") {
    CHECK_THROWS_AS(interval_from_json(Json{{"lo", "1"}}), ParseError);
    CHECK_THROWS_AS(interval_from_json(Json{{"lo", "2"}, {"hi", "1"}}), ParseError);
    CHECK_THROWS_AS(interval_from_json(Json{{"lo", 1}, {"hi", 2}}), ParseError);
    CHECK_THROWS_AS(interval_from_json(Json::array()), ParseError);
    CHECK_THROWS_AS(piece_from_json(Json{{"lo", "inf"},
                                         {"lo_closed", true},
                                         {"hi", "inf"},
                                         {"hi_closed", false}}),
                    ParseError);
    CHECK_THROWS_AS(region_from_json(Json{{"boxes", "nope"}}), ParseError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/path.json"), ParseError);
    const std::string bad = write_file("bad.json", "{ not json");
    CHECK_THROWS_AS(read_json_file(bad), ParseError);
}

TEST_CASE("eval command matches the documented example") {
    const CliRun json = run_cli({"eval", "[1,2] + [3,5]"});
    CHECK(json.code == 0);
    CHECK(json.out == "{\n  \"lo\": \"4\",\n  \"hi\": \"7\"\n}\n");

    const CliRun table = run_cli({"eval", "[1,2] + [3,5]", "--format", "table"});
    CHECK(table.code == 0);
    CHECK(table.out == "[4,7]  (m = 11/2, r = 3/2)\n");

    const CliRun metric = run_cli({"metric", "[0,2]", "[1,1]"});
    CHECK(metric.code == 0);
    CHECK(Json::parse(metric.out)["distance"] == "0");
}

TEST_CASE("interior command reproduces the half-open band example") {
    const std::string path = write_region("band.json", closed_box(0, 2, 0, 1));
    const CliRun r = run_cli({"interior", "--kind", "II", "--in", path});
    CHECK(r.code == 0);
    const Region expected = Region::from_boxes({Box{
        Piece{Bound::open_at(Rational(0)), Bound::open_at(Rational(2))},
        Piece{Bound::closed_at(Rational(0)), Bound::closed_at(Rational(1))}}});
    CHECK(region_from_json(Json::parse(r.out)) == expected);

    // The plain interior of the same band is empty: no ball fits inside a
    // radius-bounded set.
    const CliRun plain = run_cli({"interior", "--kind", "plain", "--in", path});
    CHECK(plain.code == 0);
    CHECK(region_from_json(Json::parse(plain.out)) == Region::empty_region());
}

TEST_CASE("region commands agree with the library and round-trip") {
    const Region a = closed_box(0, 2, 0, 1);
    const Region b = closed_box(1, 4, 0, 2);
    const std::string pa = write_region("a.json", a);
    const std::string pb = write_region("b.json", b);

    const CliRun u = run_cli({"region", "union", "--in", pa, "--in2", pb});
    CHECK(u.code == 0);
    CHECK(region_from_json(Json::parse(u.out)) == region_union(a, b));

    const CliRun i = run_cli({"region", "intersect", "--in", pa, "--in2", pb});
    CHECK(region_from_json(Json::parse(i.out)) == region_intersect(a, b));

    const CliRun c = run_cli({"region", "complement", "--in", pa});
    CHECK(region_from_json(Json::parse(c.out)) == region_complement(a));

    const CliRun t = run_cli({"region", "translate", "--in", pa, "--by", "[-1,1]"});
    CHECK(region_from_json(Json::parse(t.out)) ==
          region_translate(a, Interval(Rational(-1), Rational(1))));

    const CliRun s = run_cli({"region", "scale", "--in", pa, "--alpha", "-1/2"});
    CHECK(region_from_json(Json::parse(s.out)) == region_scale(Rational(-1, 2), a));

    const CliRun up = run_cli({"region", "upward", "--in", pa});
    CHECK(region_from_json(Json::parse(up.out)) == upward_closure(a));

    CHECK(Json::parse(run_cli({"region", "member", "--in", pa, "--point", "[1/2,3/2]"}).out)
              ["result"] == true);
    CHECK(Json::parse(run_cli({"region", "subset", "--in", pa, "--in2", pb}).out)["result"] ==
          false);
    CHECK(Json::parse(run_cli({"region", "equal", "--in", pa, "--in2", pa}).out)["result"] ==
          true);

    const CliRun proj = run_cli({"region", "project", "--in", pa, "--format", "table"});
    CHECK(proj.out == "{[0,2]}\n");
    const CliRun cols = run_cli({"region", "full-columns", "--in", pa, "--format", "table"});
    CHECK(cols.out == "{}\n");

    // Round-trip law: every region the CLI emits re-parses to the same value.
    Rng rng(99);
    for (int k = 0; k < 25; ++k) {
        const Region g = gen_region(rng);
        const std::string pg = write_region("roundtrip.json", g);
        const CliRun out = run_cli({"region", "union", "--in", pg, "--in2", pg});
        CHECK(out.code == 0);
        CHECK(region_from_json(Json::parse(out.out)) == g);
    }
}

TEST_CASE("ball command emits the strip, sphere the columns") {
    const CliRun strip = run_cli({"ball", "--center", "[1,1]", "--epsilon", "2"});
    CHECK(strip.code == 0);
    const Region expected =
        open_ball(BallSpec{Interval(Rational(1), Rational(1)), Rational(2)});
    CHECK(region_from_json(Json::parse(strip.out)) == expected);

    const CliRun sph =
        run_cli({"ball", "--center", "[1,1]", "--epsilon", "2", "--shape", "sphere",
                 "--format", "table"});
    CHECK(sph.out == "m in [0,0] x r in {[0,inf)} u m in [2,2] x r in {[0,inf)}\n");

    const CliRun bad = run_cli({"ball", "--center", "[1,1]", "--epsilon", "0"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("topology command reports stable JSON") {
    const Region strip = open_ball(BallSpec{Interval(Rational(1), Rational(1)), Rational(2)});
    const std::string fam =
        write_file("fam.json", Json{{"regions", Json::array({region_json(strip)})}}.dump());
    const CliRun r = run_cli({"topology", "--class", "tau0", "--in", fam});
    CHECK(r.code == 0);
    const Json parsed = Json::parse(r.out);
    CHECK(parsed["class"] == "tau0");
    CHECK(parsed["all_ok"] == true);
    CHECK(parsed["counterexample"] == "");
    // Field order is part of the contract; the serialized form is stable.
    CHECK(r.out.find("\"class\"") < r.out.find("\"all_ok\""));
    CHECK(r.out.find("\"all_ok\"") < r.out.find("\"checks\""));
    CHECK(r.out.find("\"checks\"") < r.out.find("\"counterexample\""));
    CHECK(run_cli({"topology", "--class", "tau0", "--in", fam}).out == r.out);

    // A non-upward-closed band is not in the refined family: verdict FAIL,
    // counterexample populated, but the command itself succeeded.
    const std::string band = write_region("band2.json", closed_box(0, 2, 0, 1));
    const CliRun fail = run_cli({"topology", "--class", "tauII", "--in", band});
    CHECK(fail.code == 0);
    CHECK(Json::parse(fail.out)["all_ok"] == false);
    CHECK(Json::parse(fail.out)["counterexample"] != "");
}

TEST_CASE("audit command is deterministic and GREEN") {
    const CliRun a = run_cli({"audit", "--seed", "42", "--trials", "2"});
    CHECK(a.code == 0);
    const Json report = Json::parse(a.out);
    CHECK(report["seed"] == 42);
    CHECK(report["trials"] == 2);
    CHECK(report["green"] == true);
    CHECK(report["results"].size() == audit_manifest().size());

    const CliRun b = run_cli({"audit", "--seed", "42", "--trials", "2"});
    CHECK(a.out == b.out);

    const CliRun table = run_cli({"audit", "--seed", "42", "--trials", "2", "--format", "table"});
    CHECK(table.code == 0);
    CHECK(table.out.find("verdict: GREEN") != std::string::npos);
}

TEST_CASE("NULLSPACE_SEED overrides the default seed only") {
    ::setenv("NULLSPACE_SEED", "7", 1);
    const CliRun env = run_cli({"audit", "--trials", "1"});
    CHECK(Json::parse(env.out)["seed"] == 7);
    const CliRun flag = run_cli({"audit", "--trials", "1", "--seed", "11"});
    CHECK(Json::parse(flag.out)["seed"] == 11);
    ::setenv("NULLSPACE_SEED", "bogus", 1);
    const CliRun bad = run_cli({"audit", "--trials", "1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("NULLSPACE_SEED") != std::string::npos);
    ::unsetenv("NULLSPACE_SEED");
    const CliRun plain = run_cli({"audit", "--trials", "1"});
    CHECK(Json::parse(plain.out)["seed"] == 42);
}

TEST_CASE("render writes a deterministic SVG with open bounds dashed") {
    const Region a = region_union(closed_box(0, 2, 0, 1),
                                  open_ball(BallSpec{Interval(Rational(5), Rational(5)),
                                                     Rational(1)}));
    const std::string in = write_region("render.json", a);
    const std::string out1 = (scratch_dir() / "out1.svg").string();
    const std::string out2 = (scratch_dir() / "out2.svg").string();
    CHECK(run_cli({"render", "--in", in, "--out", out1, "--rmax", "4"}).code == 0);
    CHECK(run_cli({"render", "--in", in, "--out", out2, "--rmax", "4"}).code == 0);
    const std::string svg = read_file(out1);
    CHECK(svg == read_file(out2));
    CHECK(svg == render_svg(a, Rational(4)));
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);  // the ball's open edges
    CHECK(svg.find("fill-opacity=\"0.35\"") != std::string::npos);
    // The closed box contributes solid edges too: at least one line without a
    // dash attribute.
    bool solid_line = false;
    for (std::size_t pos = svg.find("<line"); pos != std::string::npos;
         pos = svg.find("<line", pos + 1)) {
        const std::string line = svg.substr(pos, svg.find('\n', pos) - pos);
        if (line.find("stroke-dasharray") == std::string::npos &&
            line.find("#1f4e79") != std::string::npos) {
            solid_line = true;
        }
    }
    CHECK(solid_line);

    CHECK(run_cli({"render", "--in", in, "--out", out1, "--rmax", "0"}).code == 2);
}

TEST_CASE("exit codes follow the contract") {
    CHECK(run_cli({"eval", "[0.5, 1]"}).code == 2);
    CHECK(run_cli({"eval", "[0.5, 1]"}).err.find("fraction") != std::string::npos);
    CHECK(run_cli({"region", "union", "--in", "/no/such.json", "--in2", "/no/such.json"}).code ==
          2);
    CHECK(run_cli({"interior", "--kind", "IV", "--in", "/no/such.json"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"eval", "--help"}).code == 0);
}
