#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

// Runs the tool through the shell, stderr dropped, and captures stdout.
CmdResult run_cmd(const std::string& args) {
    std::string cmd = std::string("\"") + QCH_CLI_BIN + "\" " + args + " 2>/dev/null";
    CmdResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = (st >= 0 && WIFEXITED(st)) ? WEXITSTATUS(st) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("plain run, text output") {
    auto r = run_cmd("run -a A2 -m 'Y[1,2] Y[2,-1]'");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "status ok"));
    CHECK(contains(r.out, "terms 8 total, 8 distinct"));
    CHECK(contains(r.out, "dominant 1 Y[1,2] Y[2,-1]"));
    CHECK(contains(r.out, "weight [0,0] 2"));
}

TEST_CASE("plain run, json output") {
    auto r = run_cmd("run -a A2 -m 'Y[1,2] Y[2,-1]' -f json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["command"] == "run");
    CHECK(doc["algebra"] == "A2");
    CHECK(doc["highest"] == "Y[1,2] Y[2,-1]");
    CHECK(doc["mode"] == "plain");
    CHECK(doc["status"] == "ok");
    CHECK(doc["terms"].size() == 8);
    CHECK(doc["total_coefficient"] == 8);
    REQUIRE(doc["dominant"].size() == 1);
    CHECK(doc["dominant"][0]["monomial"] == "Y[1,2] Y[2,-1]");
    CHECK(doc["weights"].size() == 7);
    CHECK(!doc.contains("trace"));

    // byte-for-byte reproducible
    auto again = run_cmd("run -a A2 -m 'Y[1,2] Y[2,-1]' -f json");
    CHECK(again.out == r.out);
}

TEST_CASE("trace flag adds the expansion log") {
    auto r = run_cmd("run -a A2 -m 'Y[1,2] Y[2,-1]' -f json --trace");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc.contains("trace"));
    REQUIRE(!doc["trace"].empty());
    CHECK(doc["trace"][0]["monomial"] == "Y[1,2] Y[2,-1]");
    CHECK(doc["trace"][0]["node"] == 1);
    CHECK(doc["trace"][0]["mu"].size() == 2);
}

TEST_CASE("stalled run reports the offender") {
    auto r = run_cmd("run -a C3 -m 'Y[1,4] Y[2,1] Y[3,-2]' -f json");
    CHECK(r.code == 2);
    json doc = json::parse(r.out);
    CHECK(doc["status"] == "failure");
    CHECK(doc["failure"]["weight"] == json({1, 0, 1}));
    REQUIRE(doc["failure"]["offenders"].size() == 1);
    CHECK(doc["failure"]["offenders"][0]["monomial"] == "Y[1,2] Y[2,-1] Y[2,3]^-1 Y[3,2]");
    CHECK(doc["failure"]["offenders"][0]["deficient_nodes"] == json({2}));

    auto text = run_cmd("run -a C3 -m 'Y[1,4] Y[2,1] Y[3,-2]'");
    CHECK(text.code == 2);
    CHECK(contains(text.out, "failure at weight [1,0,1]"));
    CHECK(contains(text.out, "deficient nodes [2]"));
}

TEST_CASE("modified run repairs the stall") {
    auto r = run_cmd("run -a C3 -m 'Y[1,4] Y[2,1] Y[3,-2]' --mode modified -f json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["status"] == "ok");
    CHECK(doc["mode"] == "modified");
    CHECK(doc["total_coefficient"] == 896);
    REQUIRE(doc["injections"].size() == 1);
    CHECK(doc["injections"][0]["injected"] == "Y[2,-1] Y[2,1]");
    CHECK(doc["injections"][0]["node"] == 2);
    CHECK(doc["injections"][0]["ancestor_weight"] == json({0, 2, 0}));
}

TEST_CASE("limit errors have their own exit code") {
    auto r = run_cmd("run -a A2 -m 'Y[1,2] Y[2,-1]' --max-height 1 -f json");
    CHECK(r.code == 4);
    json doc = json::parse(r.out);
    CHECK(doc["status"] == "limit");

    auto text = run_cmd("run -a A2 -m 'Y[1,2] Y[2,-1]' --max-terms 2");
    CHECK(text.code == 4);
    CHECK(contains(text.out, "status limit"));
}

TEST_CASE("usage errors") {
    CHECK(run_cmd("run -a A2").code == 1);
    CHECK(run_cmd("run -a H9 -m 'Y[1,0]'").code == 1);
    CHECK(run_cmd("run -a A2 -m 'Y[oops'").code == 1);
    CHECK(run_cmd("run -a A2 -m 'Y[1,0]^-1'").code == 1);
    CHECK(run_cmd("run -a A2 -m 'Y[1,0]' --mode bogus").code == 1);
    CHECK(run_cmd("run -a A2 -m 'Y[1,0]' -f yaml").code == 1);
    CHECK(run_cmd("").code == 1);
    CHECK(run_cmd("tableaux -a A2 -m 'Y[1,0]'").code == 1);
    CHECK(run_cmd("tableaux -a A2 -m 'Y[1,0]' --shape 1 --candidates /nonexistent").code == 1);

    auto help = run_cmd("--help");
    CHECK(help.code == 0);
    CHECK(contains(help.out, "Usage"));
}

TEST_CASE("tableaux match") {
    auto r = run_cmd("tableaux -a A2 -m 'Y[1,2] Y[2,-1]' --shape 2,1 -f json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "tableaux");
    CHECK(doc["status"] == "match");
    CHECK(doc["shape"] == json({2, 1}));
    CHECK(doc["tableaux_count"] == 8);
    CHECK(doc["assignment"].size() == 8);
    CHECK(doc["missing"].empty());
    CHECK(doc["extra"].empty());
}

TEST_CASE("tableaux match against a candidate file") {
    std::string path = std::string(QCH_DATA_DIR) + "/c2_square_tableaux.txt";
    auto r = run_cmd("tableaux -a C2 -m 'Y[2,-1] Y[2,1]' --shape 2,2 --candidates \"" + path +
                     "\" -f json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["status"] == "match");
    CHECK(doc["tableaux_count"] == 25);
    CHECK(doc["assignment"].size() == 23);
}

TEST_CASE("tableaux mismatch lists the surplus") {
    auto r = run_cmd("tableaux -a C2 -m 'Y[2,-1]' --shape 1,1 -f json");
    CHECK(r.code == 5);
    json doc = json::parse(r.out);
    CHECK(doc["status"] == "mismatch");
    CHECK(doc["missing"].empty());
    REQUIRE(doc["extra"].size() == 1);
    CHECK(doc["extra"][0]["monomial"] == "Y[2,1] Y[2,3]^-1");
    CHECK(doc["extra"][0]["count"] == 1);
}

TEST_CASE("tableaux forwards failure reports") {
    auto r = run_cmd("tableaux -a C3 -m 'Y[1,4] Y[2,1] Y[3,-2]' --shape 3,2,1 -f json");
    CHECK(r.code == 2);
    json doc = json::parse(r.out);
    CHECK(doc["status"] == "failure");

    // modified mode computes the character, and a single-box shape can never
    // cover it: the mismatch path reports both
    auto fixed =
        run_cmd("tableaux -a C3 -m 'Y[1,4] Y[2,1] Y[3,-2]' --shape 1 --mode modified -f json");
    CHECK(fixed.code == 5);
    json doc2 = json::parse(fixed.out);
    CHECK(doc2["status"] == "mismatch");
    CHECK(doc2["tableaux_count"] == 6);
    CHECK(doc2["injections"].size() == 1);
    CHECK(!doc2["missing"].empty());
}

TEST_CASE("unit highest monomial is rejected") {
    CHECK(run_cmd("run -a A2 -m ''").code == 1);
}
