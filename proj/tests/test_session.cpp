#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "rrlab/session.hpp"
#include "rrlab/text.hpp"

using namespace rrlab;
using nlohmann::json;

namespace {

std::vector<json> run_lines(const std::string& text, const SessionOptions& opt,
                            SessionSummary* sum = nullptr, std::string* human_out = nullptr) {
    SessionScript s = parse_session(text);
    std::ostringstream human, jsonl;
    SessionSummary r = run_session(s, opt, human, &jsonl);
    if (sum) *sum = r;
    if (human_out) *human_out = human.str();
    std::vector<json> lines;
    std::istringstream in(jsonl.str());
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(json::parse(line));
    return lines;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(bool(in), ("cannot open " + path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Enough of JSON Schema to check docs/report.schema.json: type (with
// unions), enum, minimum, required, properties, additionalProperties, items.
bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "boolean") return v.is_boolean();
    if (t == "number") return v.is_number();
    if (t == "null") return v.is_null();
    return false;
}

bool validates(const json& schema, const json& v) {
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>(), v);
        } else {
            for (const auto& x : t) ok = ok || type_matches(x.get<std::string>(), v);
        }
        if (!ok) return false;
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& x : schema["enum"]) ok = ok || x == v;
        if (!ok) return false;
    }
    if (schema.contains("minimum") && v.is_number() &&
        v.get<double>() < schema["minimum"].get<double>())
        return false;
    if (v.is_object()) {
        if (schema.contains("required"))
            for (const auto& r : schema["required"])
                if (!v.contains(r.get<std::string>())) return false;
        for (const auto& [key, val] : v.items()) {
            if (schema.contains("properties") && schema["properties"].contains(key)) {
                if (!validates(schema["properties"][key], val)) return false;
            } else if (schema.contains("additionalProperties")) {
                const json& ap = schema["additionalProperties"];
                if (ap.is_boolean() && !ap.get<bool>()) return false;
                if (ap.is_object() && !validates(ap, val)) return false;
            }
        }
    }
    if (v.is_array() && schema.contains("items"))
        for (const auto& x : v)
            if (!validates(schema["items"], x)) return false;
    return true;
}

int shell(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

const char* kMixed =
    "ring R = QQ[x, y];\n"
    "ideal u = x + 1;\n"
    "ideal q0 = 0;\n"
    "ideal j = x^4, x^3*y, x*y^3, y^4;\n"
    "depth(u);\n"
    "rho(q0, j, n_max = 1);\n"
    "depth(q0);\n";

}  // namespace

TEST_CASE("round trip printing is a fixed point") {
    std::string text =
        "ring R = QQ[x,y,z,w];"
        "ideal q = -x^2*w + y*z, -y^3+ x*z, x*y^2*w - z^2;"
        "check(xi_geq2, q);"
        "ext_piece(q, 3, -3);"
        "rho(q, q, n_max = 20, seed = 7);";
    SessionScript s1 = parse_session(text);
    REQUIRE(s1.stmts.size() == 5);
    std::string p1 = print_session(s1);
    SessionScript s2 = parse_session(p1);
    CHECK(print_session(s2) == p1);

    std::string fp =
        "ring S = Fp(7)[a, b];"
        "ideal i = a^2 + 3*b, b^3;"
        "gb(i);";
    std::string q1 = print_session(parse_session(fp));
    CHECK(print_session(parse_session(q1)) == q1);
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_session("ring R = QQ[x];\nideal I = x +;");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col > 1);
    }
    CHECK_THROWS_AS(parse_session("ring R = ZZ[x];"), ParseError);
    CHECK_THROWS_AS(parse_session("ring R = QQ[x]; frobenius(x);"), ParseError);
    CHECK_THROWS_AS(parse_session("ring R = QQ[x]; gb(;"), ParseError);
}

TEST_CASE("reference errors are their own class") {
    CHECK_THROWS_AS(parse_session("ideal I = x;"), ReferenceError);  // no ring yet
    CHECK_THROWS_AS(parse_session("ring R = QQ[x]; ring R = QQ[y];"), ReferenceError);
    CHECK_THROWS_AS(parse_session("ring R = QQ[x]; gb(I);"), ReferenceError);
    CHECK_THROWS_AS(parse_session("ring R = QQ[x]; ideal i = x; gb(i, i);"), ReferenceError);
    CHECK_THROWS_AS(parse_session("ring R = QQ[x]; ideal i = x; check(bogus, i);"),
                    ReferenceError);
    CHECK_THROWS_AS(parse_session("ring R = QQ[x]; ideal i = x; gb(i, budget = 3);"),
                    ReferenceError);
    CHECK_THROWS_AS(parse_session("ring R = QQ[x, x];"), ReferenceError);
    // ideals from different rings in one command
    try {
        parse_session(
            "ring R = QQ[x]; ideal i = x;"
            "ring S = QQ[y]; ideal k = y;"
            "rho(i, k);");
        FAIL("expected a reference error");
    } catch (const ReferenceError& e) {
        CHECK(e.line >= 1);
        CHECK(std::string(e.what()).find("different rings") != std::string::npos);
    }
}

TEST_CASE("empty and declaration-only sessions") {
    SessionOptions opt;
    SessionSummary sum;
    CHECK(parse_session("").empty());
    CHECK(run_lines("", opt, &sum).empty());
    CHECK(sum.exit_code == 0);
    CHECK(sum.commands == 0);

    auto lines = run_lines("ring R = QQ[x, y]; ideal i = x;", opt, &sum);
    CHECK(lines.empty());
    CHECK(sum.exit_code == 0);
    CHECK(sum.commands == 0);
}

TEST_CASE("plane session end to end") {
    SessionOptions opt;
    SessionSummary sum;
    std::string human;
    auto lines = run_lines(
        "ring R = QQ[x, y];"
        "ideal q0 = 0;"
        "ideal j = x^4, x^3*y, x*y^3, y^4;"
        "rho(q0, j);"
        "depth(q0);"
        "reg(q0);",
        opt, &sum, &human);
    REQUIRE(lines.size() == 3);
    CHECK(sum.exit_code == 0);
    CHECK(sum.errors == 0);
    CHECK(lines[0]["verb"] == "rho");
    CHECK(lines[0]["status"] == "ok");
    CHECK(lines[0]["result"]["rho"] == 2);
    CHECK(lines[1]["result"]["depth"] == 2);
    CHECK(lines[2]["result"]["reg"] == 0);
    CHECK(lines[2]["result"]["pd"] == 0);
    CHECK(human.find("[0] rho(q0, j)") != std::string::npos);
    CHECK(human.find("rho = 2") != std::string::npos);
}

TEST_CASE("command errors, exact messages, fail_fast") {
    SessionOptions opt;
    SessionSummary sum;
    auto lines = run_lines(kMixed, opt, &sum);
    REQUIRE(lines.size() == 3);
    CHECK(sum.exit_code == 1);
    CHECK(sum.errors == 1);
    CHECK(lines[0]["status"] == "error");
    CHECK(lines[0]["error"] == "q has a unit term");
    CHECK(lines[2]["status"] == "ok");

    SessionOptions ff = opt;
    ff.fail_fast = true;
    auto cut = run_lines(kMixed, ff, &sum);
    CHECK(cut.size() == 1);
    CHECK(sum.exit_code == 1);

    auto bad = run_lines(
        "ring R = QQ[x, y]; ideal q0 = 0; ideal p = x; ratliff_rush(q0, p);", opt, &sum);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0]["error"] == "I not m-primary at origin");
    CHECK(sum.exit_code == 1);
}

TEST_CASE("inconclusive outcomes set the summary flag, not the exit code") {
    SessionOptions opt;
    SessionSummary sum;
    auto lines = run_lines(
        "ring R = QQ[x, y];"
        "ideal q0 = 0;"
        "ideal j = x^4, x^3*y, x*y^3, y^4;"
        "rho(q0, j, n_max = 1);",
        opt, &sum);
    REQUIRE(lines.size() == 1);
    CHECK(sum.exit_code == 0);
    CHECK(sum.inconclusive == 1);
    CHECK(lines[0]["status"] == "inconclusive");
    CHECK(lines[0]["result"]["rho"].is_null());
    CHECK(lines[0]["result"]["reason"] == "rho did not stabilize inside the window");
    CHECK(lines[0]["opts"]["n_max"] == 1);
}

TEST_CASE("reports validate against the checked-in schema") {
    json schema = json::parse(slurp(std::string(RRLAB_SOURCE_DIR) + "/docs/report.schema.json"));
    // sanity-check the validator itself
    CHECK(!validates(schema, json::parse(R"({"index":0})")));
    CHECK(!validates(schema, json::parse(
                                 R"({"index":0,"verb":"gb","args":[],"status":"ok","extra":1})")));

    SessionOptions opt;
    auto lines = run_lines(kMixed, opt);
    REQUIRE(lines.size() == 3);
    for (const auto& line : lines) CHECK_MESSAGE(validates(schema, line), line.dump());
}

TEST_CASE("golden sessions are byte-stable") {
    SessionOptions opt;
    for (std::string name : {"basic", "fourvar"}) {
        std::string dir = std::string(RRLAB_SOURCE_DIR) + "/tests/golden/";
        SessionScript s = parse_session(slurp(dir + name + ".rrs"));
        std::ostringstream human, jsonl;
        SessionSummary sum = run_session(s, opt, human, &jsonl);
        CHECK(sum.exit_code == 0);
        CHECK(sum.errors == 0);
        if (std::getenv("RRS_UPDATE_GOLDEN")) {
            std::ofstream out(dir + name + ".jsonl", std::ios::trunc);
            out << jsonl.str();
            continue;
        }
        CHECK_MESSAGE(jsonl.str() == slurp(dir + name + ".jsonl"),
                      (name + ": output drifted; rerun with RRS_UPDATE_GOLDEN=1 and review"));
    }
}

TEST_CASE("four-variable session carries the pinned payload keys") {
    SessionOptions opt;
    std::string dir = std::string(RRLAB_SOURCE_DIR) + "/tests/golden/";
    SessionScript s = parse_session(slurp(dir + "fourvar.rrs"));
    std::ostringstream human, jsonl;
    run_session(s, opt, human, &jsonl);
    std::string out = jsonl.str();
    CHECK(out.find("\"q_star_gens\"") != std::string::npos);
    CHECK(out.find("\"ext3_dim\":1") != std::string::npos);

    // the emitted cone generators cut out exactly the expected ideal
    std::vector<json> lines;
    {
        std::istringstream in(out);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) lines.push_back(json::parse(line));
    }
    REQUIRE(lines.size() == 4);
    auto r = Ring::make(Field::rationals(), {"x", "y", "z", "w"});
    std::vector<Poly> got;
    for (const auto& g : lines[0]["result"]["q_star_gens"])
        got.push_back(parse_poly(r, g.get<std::string>()));
    std::vector<Poly> want = {parse_poly(r, "z^2"), parse_poly(r, "y*z"), parse_poly(r, "x*z"),
                              parse_poly(r, "y^4 - x^3*w")};
    CHECK(Ideal(r, got).equals(Ideal(r, want)));
    CHECK(lines[1]["result"]["dim"].get<int>() > 0);  // Ext^3 strand at degree -3
    CHECK(lines[2]["result"]["verdict"] == "FAILS");
    CHECK(lines[3]["result"]["verdict"] == "HOLDS");
}

TEST_CASE("parallel run reproduces the serial output") {
    SessionOptions serial, par;
    par.parallel = true;
    SessionScript s = parse_session(kMixed);
    std::ostringstream h1, j1, h2, j2;
    SessionSummary r1 = run_session(s, serial, h1, &j1);
    SessionSummary r2 = run_session(s, par, h2, &j2);
    CHECK(j1.str() == j2.str());
    CHECK(h1.str() == h2.str());
    CHECK(r1.exit_code == r2.exit_code);
    CHECK(r1.inconclusive == r2.inconclusive);
}

TEST_CASE("rrs binary exit codes") {
    // parse error -> 2
    CHECK(shell("printf 'ideal I = x +;' | ./rrs >/dev/null 2>&1") == 2);
    // reference error -> 2
    CHECK(shell("printf 'ring R = QQ[x]; gb(I);' | ./rrs >/dev/null 2>&1") == 2);
    // empty input -> 0, no output
    CHECK(shell("printf '' | ./rrs > /tmp/rrs_empty.out 2>&1") == 0);
    CHECK(slurp("/tmp/rrs_empty.out").empty());
    // command error -> 1
    CHECK(shell("printf 'ring R = QQ[x]; ideal u = x + 1; depth(u);' | ./rrs >/dev/null 2>&1") ==
          1);
    // golden script through the binary, including --json
    std::string dir = std::string(RRLAB_SOURCE_DIR) + "/tests/golden/";
    CHECK(shell("./rrs " + dir + "basic.rrs --json /tmp/rrs_basic.jsonl >/dev/null 2>&1") == 0);
    if (!std::getenv("RRS_UPDATE_GOLDEN"))
        CHECK(slurp("/tmp/rrs_basic.jsonl") == slurp(dir + "basic.jsonl"));
}
