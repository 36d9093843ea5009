#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hstar/errors.hpp"
#include "hstar/io.hpp"
#include "hstar/parser.hpp"

using namespace hstar;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

Ideal ideal_of(const Ring& r, const std::vector<std::string>& texts) {
    std::vector<Polynomial> gens;
    for (const auto& t : texts) gens.push_back(parse_polynomial(t, r));
    return Ideal(r, gens);
}

const fs::path& fixture_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "hstar_cli_fixtures";
        fs::create_directories(d);
        auto put = [&d](const std::string& name, const std::string& text) {
            std::ofstream(d / name) << text;
        };
        put("cubic.json", R"({"ring": {"vars": ["x", "y", "z"], "field": "Q"},
                              "generators": ["x^3 - 2*y^2*z"]})");
        put("cubic2.json", R"({"ring": {"vars": ["x", "y", "z"], "field": "Q"},
                               "generators": ["x^3 - 2*y*z^2"]})");
        put("quad.json", R"({"ring": {"vars": ["x", "y", "z", "w"], "field": "Q"},
                             "generators": ["x^2 - x*y - y*z"]})");
        put("pair.json", R"({"ring": {"vars": ["x", "y", "z"], "field": "Q"},
                             "generators": ["x^2 - y^2", "x^2 - x*z"]})");
        put("zero.json", R"({"ring": {"vars": ["x", "y"], "field": "Q"},
                             "generators": []})");
        put("nonhom.json", R"({"ring": {"vars": ["x", "y"], "field": "Q"},
                               "generators": ["x^2 - y"]})");
        put("badpoly.json", R"({"ring": {"vars": ["x", "y"], "field": "Q"},
                                "generators": ["x + q"]})");
        put("badsyntax.json", "{\"ring\": [unclosed");
        put("c4.json", R"({"vertices": ["a", "b", "c", "d"],
                           "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]]})");
        put("p3.json", R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]})");
        put("loop.json", R"({"vertices": ["a"], "edges": [["a", "a"]]})");
        put("point.json", R"({"coords": ["1", "2", "3", "4"]})");
        return d;
    }();
    return dir;
}

std::string fx(const std::string& name) { return (fixture_dir() / name).string(); }

struct RunResult {
    int status;
    std::string out;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out_path = fixture_dir() / ("out_" + std::to_string(++counter) + ".txt");
    std::string cmd = std::string(HSTAR_BIN) + " " + args + " > " + out_path.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult res;
    res.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    res.out = ss.str();
    fs::remove(out_path);
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("ideal json round trip") {
    Ring r({"x", "y", "z"});
    Ideal I = ideal_of(r, {"x^3 - 2*y^2*z", "x*y - 1/3*z^2"});
    Ideal back = ideal_from_json(ideal_to_json(I));
    CHECK(back == I);
    CHECK(ideal_to_json(Ideal::zero(r))["generators"] == json::array({"0"}));
    CHECK(ideal_from_json(ideal_to_json(Ideal::zero(r))).is_zero());

    Ring rc({"x", "y"}, FieldSpec::cyclotomic(6));
    Ideal J = ideal_of(rc, {"x^2 - zeta*x*y + y^2"});
    CHECK(ideal_from_json(ideal_to_json(J)) == J);
    CHECK(ring_from_json(ring_to_json(rc)) == rc);
}

TEST_CASE("point and graph json round trips") {
    Ring r({"x", "y", "z"});
    ProjectivePoint p(r, {FieldElement(Rational(3)), FieldElement(Rational(2, 3)),
                          FieldElement(Rational(-1))});
    CHECK(point_from_json(point_to_json(p), r) == p);

    Graph g({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back == g);
}

TEST_CASE("json loading errors") {
    CHECK_THROWS_AS(load_json_file(fx("no_such_file.json")), validation_error);
    CHECK_THROWS_AS(load_json_file(fx("badsyntax.json")), parse_error);
    CHECK_THROWS_AS(ideal_from_json(json{{"generators", json::array()}}), validation_error);
    CHECK_THROWS_AS(ideal_from_json(json{{"ring", {{"vars", {"x"}}, {"field", "Q"}}}}),
                    validation_error);
    CHECK_THROWS_AS(ring_from_json(json{{"vars", {"x"}}, {"field", {{"cyclotomic", 0}}}}),
                    validation_error);
    CHECK_THROWS_AS(ring_from_json(json{{"vars", {"x"}}, {"field", {{"cyclotomic", 13}}}}),
                    cap_exceeded_error);
    CHECK_THROWS_AS(ring_from_json(json{{"vars", {"x"}}, {"field", "R"}}), validation_error);
    CHECK_THROWS_AS(graph_from_json(json{{"vertices", {"a"}}, {"edges", {{"a"}}}}),
                    validation_error);

    try {
        load_ideal(fx("badpoly.json"));
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(contains(e.what(), "generator 1"));
    }
}

TEST_CASE("point argument parsing") {
    Ring r({"x", "y", "z", "w"});
    ProjectivePoint inline_pt = parse_point_arg("1:2:3:4", r);
    CHECK(inline_pt.coords()[3] == FieldElement(Rational(4)));
    ProjectivePoint file_pt = parse_point_arg(fx("point.json"), r);
    CHECK(file_pt == inline_pt);
    CHECK(parse_point_arg("1:1/2:0:-3", r).coords()[1] == FieldElement(Rational(1, 2)));
    CHECK_THROWS_AS(parse_point_arg("1:2", r), validation_error);
    CHECK_THROWS_AS(parse_point_arg("no_such_file.json", r), validation_error);
}

TEST_CASE("cli: groebner bases") {
    RunResult lex = run_cli("gb " + fx("pair.json") + " --order lex");
    CHECK(lex.status == 0);
    CHECK(lex.out == "x^2 - y^2\nx*y^2 - y^2*z\nx*z - y^2\ny^4 - y^2*z^2\n");

    RunResult zero = run_cli("gb " + fx("zero.json"));
    CHECK(zero.status == 0);
    CHECK(zero.out == "0\n");

    RunResult raw = run_cli("gb " + fx("pair.json") + " --order lex --no-reduced");
    CHECK(raw.status == 0);
    CHECK(contains(raw.out, "x^2 - y^2"));

    CHECK(run_cli("gb " + fx("cubic.json") + " --order nope").status == 2);
    CHECK(run_cli("gb " + fx("no_such.json")).status == 2);
    CHECK(run_cli("gb " + fx("badpoly.json")).status == 2);
    CHECK(run_cli("gb " + fx("badsyntax.json")).status == 2);
    CHECK(run_cli("gb " + fx("pair.json") + " --order lex --spair-limit 1").status == 4);
}

TEST_CASE("cli: hadamard products") {
    RunResult zero = run_cli("hadamard " + fx("cubic.json") + " " + fx("cubic2.json"));
    CHECK(zero.status == 0);
    CHECK(zero.out == "path: elimination\nstatus: exact\n0\n");

    RunResult square = run_cli("hadamard " + fx("cubic.json") + " " + fx("cubic.json"));
    CHECK(square.status == 0);
    CHECK(square.out == "path: elimination\nstatus: exact\nx^3 - 4*y^2*z\n");

    RunResult fast = run_cli("hadamard " + fx("cubic.json") + " " + fx("cubic.json") +
                             " --mode fast");
    CHECK(fast.status == 0);
    CHECK(fast.out == "path: fast\nstatus: containment-only\nx^3 - 4*y^2*z\n");

    RunResult witness = run_cli("hadamard " + fx("cubic.json") + " " + fx("cubic.json") +
                                " --mode fast --witness 2:1:4");
    CHECK(witness.status == 0);
    CHECK(contains(witness.out, "status: certified"));

    CHECK(run_cli("hadamard " + fx("cubic.json") + " " + fx("cubic.json") +
                  " --mode fast --witness 1:1:1")
              .status == 3);
    CHECK(run_cli("hadamard " + fx("quad.json") + " " + fx("quad.json") + " --mode fast")
              .status == 3);
}

TEST_CASE("cli: hadamard powers") {
    RunResult cube = run_cli("power " + fx("cubic.json") + " 3 --mode fast");
    CHECK(cube.status == 0);
    CHECK(cube.out == "path: fast\nstatus: exact\nx^3 - 8*y^2*z\n");

    RunResult zero = run_cli("power " + fx("cubic.json") + " 0");
    CHECK(zero.status == 0);
    CHECK(contains(zero.out, "x - y"));

    CHECK(run_cli("power " + fx("quad.json") + " 2 --mode fast").status == 3);
    CHECK(run_cli("power " + fx("cubic.json") + " -1").status == 2);
}

TEST_CASE("cli: transforms and fibers") {
    RunResult plain = run_cli("transform " + fx("cubic.json") + " 1:2:3");
    CHECK(plain.status == 0);
    CHECK(plain.out == "x^3 - 1/6*y^2*z\n");

    RunResult fiber = run_cli("transform " + fx("quad.json") + " 1:2:3:4 --fiber");
    CHECK(fiber.status == 0);
    CHECK(contains(fiber.out, "status: certified"));
    CHECK(contains(fiber.out, "J_saturated: true"));
    CHECK(contains(fiber.out, "x^2 - 1/2*x*y"));
    CHECK(contains(fiber.out, "x^2 - 1/6*y*z"));

    RunResult failed = run_cli("transform " + fx("zero_gen.json") + " 1:1");
    CHECK(failed.status == 2);  // missing input file

    CHECK(run_cli("transform " + fx("quad.json") + " 0:1:1:1").status == 3);
    CHECK(run_cli("transform " + fx("quad.json") + " 0:1:1:1 --fiber").status == 3);

    RunResult hypo = run_cli("transform " + fx("nonhom.json") + " 1:1 --fiber");
    CHECK(hypo.status == 2);  // saturation check rejects non-homogeneous input
}

TEST_CASE("cli: invariants") {
    RunResult inv = run_cli("invariants " + fx("cubic.json") + " --upto 4");
    CHECK(inv.status == 0);
    CHECK(inv.out == "HF(0) = 1\nHF(1) = 3\nHF(2) = 6\nHF(3) = 9\nHF(4) = 12\n"
                     "hilbert polynomial: 3*t\ndegree: 3\ndimension: 1\n");
    CHECK(run_cli("invariants " + fx("nonhom.json")).status == 2);
    CHECK(run_cli("invariants " + fx("cubic.json") + " --upto 99").status == 2);
}

TEST_CASE("cli: toric ideals of graphs") {
    RunResult c4 = run_cli("toric " + fx("c4.json"));
    CHECK(c4.status == 0);
    CHECK(c4.out == "e1*e3 - e2*e4\n");

    RunResult sub = run_cli("toric " + fx("c4.json") + " --subgraph " + fx("p3.json"));
    CHECK(sub.status == 0);
    CHECK(sub.out == "0\n");

    RunResult ver = run_cli("toric " + fx("c4.json") + " --verify");
    CHECK(ver.status == 0);
    CHECK(contains(ver.out, "Theorem holds: I_G * I_H^e = I_H^e"));
    CHECK(contains(ver.out, "e1*e3 - e2*e4"));

    RunResult subver = run_cli("toric " + fx("c4.json") + " --subgraph " + fx("p3.json") +
                               " --verify");
    CHECK(subver.status == 0);
    CHECK(contains(subver.out, "Theorem holds"));

    CHECK(run_cli("toric " + fx("loop.json")).status == 2);
}

TEST_CASE("cli: verify suites") {
    RunResult fixed = run_cli("verify --suite hadamard --cases 0");
    CHECK(fixed.status == 0);
    CHECK(contains(fixed.out, "(0 randomized cases)"));
    CHECK(contains(fixed.out, "all suites passed"));

    RunResult fib = run_cli("verify --suite fiber --cases 2 --seed 5");
    CHECK(fib.status == 0);
    CHECK(contains(fib.out, "suite fiber:"));
    CHECK(contains(fib.out, "all suites passed"));

    CHECK(run_cli("verify --suite nope").status == 2);
}

TEST_CASE("cli: json output is structured and byte-stable") {
    std::string cmd = "gb " + fx("cubic.json") + " --format json";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    json doc = json::parse(a.out);
    CHECK(doc["command"] == "gb");
    CHECK(doc["reduced"] == true);
    CHECK(doc["generators"] == json::array({"x^3 - 2*y^2*z"}));
    CHECK(doc["inputs"]["ideal"]["ring"]["vars"] == json::array({"x", "y", "z"}));

    RunResult had = run_cli("hadamard " + fx("cubic.json") + " " + fx("cubic.json") +
                            " --format json");
    json hdoc = json::parse(had.out);
    CHECK(hdoc["path"] == "elimination");
    CHECK(hdoc["status"] == "exact");
    CHECK(hdoc["generators"] == json::array({"x^3 - 4*y^2*z"}));

    RunResult inv1 = run_cli("invariants " + fx("cubic.json") + " --format json --upto 3");
    RunResult inv2 = run_cli("invariants " + fx("cubic.json") + " --format json --upto 3");
    CHECK(inv1.out == inv2.out);
    json idoc = json::parse(inv1.out);
    CHECK(idoc["degree"] == 3);
    CHECK(idoc["dimension"] == 1);
    CHECK(idoc["hilbert_polynomial"] == "3*t");
}

TEST_CASE("cli: argument errors and help") {
    CHECK(run_cli("--help").status == 0);
    CHECK(contains(run_cli("--help").out, "Hadamard"));
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("").status == 2);  // a subcommand is required
    CHECK(run_cli("gb").status == 2);
    CHECK(run_cli("hadamard " + fx("cubic.json")).status == 2);
}
