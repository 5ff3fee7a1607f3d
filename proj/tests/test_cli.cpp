#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunOutput {
    int exit_code = -1;
    std::string stdout_text;
};

RunOutput run(const std::string& args) {
    const std::string out = "cli_test_stdout.txt";
    const std::string cmd = std::string(NTCLI_PATH) + " " + args + " > " + out + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    RunOutput r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    r.stdout_text = ss.str();
    return r;
}

// Minimal structural validator covering the subset of JSON Schema the
// shipped schema uses: type, required, properties, items, enum.
bool validates(const json& schema, const json& value) {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        if (t == "object" && !value.is_object()) return false;
        if (t == "array" && !value.is_array()) return false;
        if (t == "string" && !value.is_string()) return false;
        if (t == "boolean" && !value.is_boolean()) return false;
        if (t == "integer" && !value.is_number_integer()) return false;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& e : schema["enum"]) found = found || e == value;
        if (!found) return false;
    }
    if (schema.contains("required"))
        for (const auto& k : schema["required"])
            if (!value.contains(k.get<std::string>())) return false;
    if (schema.contains("properties"))
        for (const auto& [k, sub] : schema["properties"].items())
            if (value.contains(k) && !validates(sub, value[k])) return false;
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!validates(schema["items"], item)) return false;
    return true;
}

json load_schema() {
    std::ifstream f(SCHEMA_PATH);
    REQUIRE(f.good());
    return json::parse(f);
}

}  // namespace

TEST_CASE("hm subcommand prints the constant and exits 0") {
    auto r = run("exponents hm --theta 0.5253 --c1 0.00002");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.substr(0, 7) == "3.80742");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("tuples narrowest missing.txt --k 3").exit_code == 2);
    CHECK(run("exponents hm --theta 0.5253").exit_code == 2);  // missing --c1
    CHECK(run("no-such-subcommand").exit_code == 2);
    CHECK(run("exponents hm --theta 0 --c1 0").exit_code == 2);  // domain error
}

TEST_CASE("assertion failures exit 1") {
    {
        std::ofstream f("cli_bad_tuple.txt");
        f << "0 2 4\n";
    }
    CHECK(run("tuples verify cli_bad_tuple.txt").exit_code == 1);
    CHECK(run("exponents check --omega 0.0125 --delta 0.0001").exit_code == 1);
}

TEST_CASE("passing checks exit 0 and reports carry margins") {
    auto r = run("exponents check --omega 0.00556625 --delta 0.0207987");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.stdout_text);
    CHECK(rep["pass"] == true);
    for (const auto& row : rep["results"])
        if (row["status"] == "PASS") CHECK(row.contains("margin"));
}

TEST_CASE("JSON reports validate against the shipped schema") {
    const json schema = load_schema();
    for (const std::string& args :
         {std::string("exponents harman-thresholds"),
          std::string("exponents window --omega 0.00768601 --delta 0.0144419"),
          std::string("expsum deligne --count 5"),
          std::string("expsum gcdsum --A 1 --B 0 --m 6 --K 6 --T 6"),
          std::string("tuples baseline --k 20")}) {
        auto r = run(args);
        CHECK(r.exit_code == 0);
        json rep = json::parse(r.stdout_text, nullptr, false);
        REQUIRE(!rep.is_discarded());
        CHECK(validates(schema, rep));
    }
}

TEST_CASE("fixed seed makes randomized reports reproducible") {
    auto a = run("expsum deligne --count 10 --seed 12345");
    auto b = run("expsum deligne --count 10 --seed 12345");
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);
}

TEST_CASE("narrowest window via CLI") {
    {
        std::ofstream f("cli_tuple.txt");
        f << "0 2 6 8 12 18 20 26\n";
    }
    auto r = run("tuples narrowest cli_tuple.txt --k 4");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.stdout_text);
    CHECK(rep["results"][0]["diameter"] == 8);
}
