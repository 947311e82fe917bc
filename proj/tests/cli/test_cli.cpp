#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(EXTOR_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string scn(const std::string& name) { return std::string(EXTOR_SCENARIO_DIR) + "/" + name; }

// ---------------------------------------------------------------------------
// minimal JSON-Schema checker: type / required / properties / items / enum

bool type_matches(const json& value, const std::string& t) {
    if (t == "string") return value.is_string();
    if (t == "integer") return value.is_number_integer();
    if (t == "number") return value.is_number();
    if (t == "boolean") return value.is_boolean();
    if (t == "array") return value.is_array();
    if (t == "object") return value.is_object();
    if (t == "null") return value.is_null();
    return false;
}

bool validate(const json& value, const json& schema, std::string path, std::string* err) {
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string())
            ok = type_matches(value, t.get<std::string>());
        else
            for (const auto& alt : t) ok = ok || type_matches(value, alt.get<std::string>());
        if (!ok) {
            *err = path + ": type mismatch";
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"]) ok = ok || alt == value;
        if (!ok) {
            *err = path + ": not in enum";
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    *err = path + ": missing required key " + key.get<std::string>();
                    return false;
                }
        if (schema.contains("properties"))
            for (const auto& [key, sub] : schema["properties"].items())
                if (value.contains(key) && !validate(value[key], sub, path + "." + key, err))
                    return false;
        if (schema.contains("additionalProperties") &&
            schema["additionalProperties"].is_object()) {
            for (const auto& [key, sub] : value.items()) {
                bool declared = schema.contains("properties") && schema["properties"].contains(key);
                if (!declared &&
                    !validate(sub, schema["additionalProperties"], path + "." + key, err))
                    return false;
            }
        }
    }
    if (value.is_array() && schema.contains("items"))
        for (std::size_t i = 0; i < value.size(); ++i)
            if (!validate(value[i], schema["items"], path + "[" + std::to_string(i) + "]", err))
                return false;
    return true;
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(EXTOR_SCENARIO_DIR) + "/../docs/" + name);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

void check_schema(const json& report) {
    static json schema = load_schema("report.schema.json");
    std::string err;
    bool ok = validate(report, schema, "$", &err);
    INFO(err);
    CHECK(ok);
}

}  // namespace

TEST_CASE("verdict commands pass with exit 0 on the bundled corpus") {
    for (const char* args : {
             "self-check -s SCN/point_plane.scn P --json",
             "self-check -s SCN/line_a2.scn L --json",
             "self-check -s SCN/line_a3.scn L --json",
             "excess-check -s SCN/double_line.scn doubleline --json",
             "excess-check -s SCN/transversal.scn transversal --json",
             "excess-check -s SCN/planes_a4.scn planes --json",
             "excess-check -s SCN/triple_line_a1.scn triple --json",
             "excess-check -s SCN/threelines_a2.scn threelines --json",
             "excess-check -s SCN/disjoint.scn disjoint --json",
             "les-check -s SCN/double_line.scn doubleline --degree-bound 10 --json",
             "les-check -s SCN/planes_a4.scn planes --degree-bound 10 --json",
         }) {
        std::string a = args;
        auto pos = a.find("SCN");
        a.replace(pos, 3, EXTOR_SCENARIO_DIR);
        RunResult r = run_cli(a);
        CAPTURE(args);
        CHECK(r.exit_code == 0);
        json rep = json::parse(r.out);
        CHECK(rep["ok"] == true);
        check_schema(rep);
        for (const auto& res : rep["results"])
            if (res["kind"] == "verdict") CHECK(res["pass"] == true);
    }
}

TEST_CASE("run executes every check a scenario requests") {
    for (const char* f : {"double_line.scn", "transversal.scn", "planes_a4.scn",
                          "triple_line_a1.scn", "threelines_a2.scn", "disjoint.scn",
                          "point_plane.scn", "double_line.json", "quadrics.scn",
                          "thick_line.scn", "chain_a4.scn"}) {
        RunResult r = run_cli("run -s " + scn(f) + " --json");
        CAPTURE(f);
        CHECK(r.exit_code == 0);
        json rep = json::parse(r.out);
        CHECK(rep["ok"] == true);
        check_schema(rep);
        // determinism across consecutive runs, timings excluded by default
        RunResult again = run_cli("run -s " + scn(f) + " --json");
        CHECK(again.out == r.out);
    }
}

TEST_CASE("json reports are byte-identical across runs") {
    for (const char* f : {"double_line.scn", "planes_a4.scn"}) {
        std::string cmd = "run -s " + scn(f) + " --json";
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("text and json twin scenarios agree on verdicts") {
    RunResult text = run_cli("excess-check -s " + scn("double_line.scn") + " doubleline --json");
    RunResult jsn = run_cli("excess-check -s " + scn("double_line.json") + " doubleline --json");
    json a = json::parse(text.out), b = json::parse(jsn.out);
    CHECK(a["results"] == b["results"]);
}

TEST_CASE("query commands exit 0 and report faithfully") {
    RunResult gb = run_cli("gb -s " + scn("double_line.scn") + " L --json");
    CHECK(gb.exit_code == 0);
    json grep = json::parse(gb.out);
    CHECK(grep["results"][0]["basis"][0] == "x");

    RunResult dim = run_cli("dim -s " + scn("double_line.scn") + " L --json");
    json drep = json::parse(dim.out);
    CHECK(drep["results"][0]["dimension"] == 1);
    CHECK(drep["results"][0]["height"] == 1);

    // (x, x) reports false with both oracle results, exit 0
    RunResult reg = run_cli("regular -s " + scn("double_line.scn") + " badseq --json");
    CHECK(reg.exit_code == 0);
    json rrep = json::parse(reg.out);
    CHECK(rrep["results"][0]["regular"] == false);
    CHECK(rrep["results"][0]["koszul_vanishing"] == false);
    CHECK(rrep["results"][0]["height_criterion"] == false);

    RunResult tor = run_cli("tor -s " + scn("transversal.scn") + " transversal --q 1 --json");
    CHECK(tor.exit_code == 0);
    json trep = json::parse(tor.out);
    REQUIRE(trep["results"][0]["rows"].size() == 1);
    CHECK(trep["results"][0]["rows"][0]["zero"] == true);

    RunResult ind = run_cli("independent -s " + scn("transversal.scn") + " A B --json");
    CHECK(json::parse(ind.out)["results"][0]["independent"] == true);
    RunResult dep = run_cli("independent -s " + scn("double_line.scn") + " L L --json");
    CHECK(json::parse(dep.out)["results"][0]["independent"] == false);

    RunResult kz = run_cli("koszul -s " + scn("double_line.scn") + " badseq --homology --json");
    json krep = json::parse(kz.out);
    CHECK(krep["results"][0]["ranks"] == json::array({1, 2, 1}));
    CHECK(krep["results"][0]["homology"][1]["zero"] == false);
    check_schema(krep);
}

TEST_CASE("input errors exit 2") {
    CHECK(run_cli("gb -s " + scn("double_line.scn") + " nosuch --json").exit_code == 2);
    CHECK(run_cli("gb -s /nonexistent.scn L --json").exit_code == 2);
    CHECK(run_cli("les-check -s " + scn("threelines_a2.scn") + " threelines --json").exit_code ==
          2);  // n = 3 refused
    // a scenario whose designated W generators are not regular
    std::string bad = "/tmp/extor_bad_w.scn";
    std::ofstream f(bad);
    f << "field Q\nvars x y\nideal L = [x]\ninstance i = { ideals: L L; w: [x*y] }\n";
    f.close();
    CHECK(run_cli("excess-check -s " + bad + " i --json").exit_code == 2);
    // self-check requires homogeneous designated generators
    std::string inh = "/tmp/extor_inh.scn";
    std::ofstream g(inh);
    g << "field Q\nvars x y\nideal A = [x - 1]\ncheck self-check A\n";
    g.close();
    CHECK(run_cli("self-check -s " + inh + " A --json").exit_code == 2);
}

TEST_CASE("prime field scenarios carry the hypothesis warning") {
    RunResult r = run_cli("excess-check -s " + scn("fp_line.scn") + " doubleline --json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    REQUIRE(rep["warnings"].size() == 1);
    CHECK(rep["warnings"][0].get<std::string>().find("char-0") != std::string::npos);
}

TEST_CASE("degree bound resolution: flag beats environment beats default") {
    RunResult flag = run_cli("self-check -s " + scn("point_plane.scn") + " P --degree-bound 5 --json");
    CHECK(json::parse(flag.out)["degree_bound"] == 5);

    std::string cmd = std::string("EXTOR_DEGREE_BOUND=7 ") + EXTOR_CLI_PATH + " self-check -s " +
                      scn("point_plane.scn") + " P --json 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(json::parse(out)["degree_bound"] == 7);

    RunResult dflt = run_cli("self-check -s " + scn("point_plane.scn") + " P --json");
    CHECK(json::parse(dflt.out)["degree_bound"] == 12);
}

TEST_CASE("timings are segregated from deterministic output") {
    RunResult with = run_cli("dim -s " + scn("double_line.scn") + " L --json --timings");
    json rep = json::parse(with.out);
    CHECK(rep.contains("timing_ms"));
    RunResult without = run_cli("dim -s " + scn("double_line.scn") + " L --json");
    CHECK_FALSE(json::parse(without.out).contains("timing_ms"));
}

TEST_CASE("text mode renders and quiet mode is silent") {
    RunResult text = run_cli("excess-check -s " + scn("double_line.scn") + " doubleline");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("PASS") != std::string::npos);
    RunResult quiet = run_cli("excess-check -s " + scn("double_line.scn") + " doubleline --quiet");
    CHECK(quiet.exit_code == 0);
    CHECK(quiet.out.empty());
}

TEST_CASE("order override flag is honored and verdicts are order independent") {
    RunResult lex = run_cli("self-check -s " + scn("point_plane.scn") + " P --order lex --json");
    json rep = json::parse(lex.out);
    CHECK(rep["order"] == "lex");
    CHECK(rep["ok"] == true);
}

TEST_CASE("gen-corpus writes loadable scenarios with the seed recorded") {
    std::string dir = "/tmp/extor_corpus_test";
    RunResult r = run_cli("gen-corpus --seed 99 --count 3 --out " + dir);
    CHECK(r.exit_code == 0);
    std::ifstream f(dir + "/corpus_99_0.scn");
    REQUIRE(f.good());
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(content.find("seed 99") != std::string::npos);
    RunResult check = run_cli("run -s " + dir + "/corpus_99_0.scn --json");
    CHECK(check.exit_code == 0);
    CHECK(json::parse(check.out)["ok"] == true);

    // the same seed regenerates identical files
    std::string dir2 = "/tmp/extor_corpus_test2";
    run_cli("gen-corpus --seed 99 --count 3 --out " + dir2);
    std::ifstream g(dir2 + "/corpus_99_0.scn");
    std::string content2((std::istreambuf_iterator<char>(g)), std::istreambuf_iterator<char>());
    CHECK(content == content2);
}
