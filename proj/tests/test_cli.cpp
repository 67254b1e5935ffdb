#include "hankel/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using hankel::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, bool keep_stderr = false) {
    const std::string cmd = std::string(HANKEL_CLI_PATH) + " " + args +
                            (keep_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(HANKEL_FIXTURE_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/hankel_cli_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("inertia subcommand reports exact counts") {
    const auto r = run_cli("inertia --kernel " + fixture("t2exp.json"));
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("command") == "inertia");
    CHECK(doc.at("input_digest").get<std::string>().size() == 16);
    CHECK(doc.at("result").at("n_plus") == 2);
    CHECK(doc.at("result").at("n_minus") == 1);

    const auto p = run_cli("inertia --kernel " + fixture("pair.json"));
    const json pd = json::parse(p.out);
    CHECK(pd.at("result").at("n_plus") == 1);
    CHECK(pd.at("result").at("n_minus") == 1);

    // the same operator through a non-kernel picture
    const auto l = run_cli("inertia --line " + fixture("alpha2.json"));
    CHECK(l.code == 0);
    CHECK(json::parse(l.out).at("result").at("n_plus") == 1);
}

TEST_CASE("output is byte-identical across runs") {
    for (const std::string args :
         {"inertia --kernel " + fixture("mixed.json"),
          "sign-matrix --kernel " + fixture("t2exp.json"),
          "convert --from line --to sequence " + fixture("alpha2.json"),
          std::string("oracle-check --instances 10 --seed 5"),
          "carleman --kernel " + fixture("neg_exp.json") + " --sizes 8,16,32",
          "transform --op dilate:3/2 --kernel " + fixture("mixed.json")}) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        CHECK(a.code == 0);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("convert follows the documented example") {
    const auto r = run_cli("convert --from line --to sequence " + fixture("alpha2.json"));
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    const json& g = doc.at("result").at("geometric");
    REQUIRE(g.size() == 1);
    CHECK(g[0].at("q").at("re") == "1/3");
    CHECK(g[0].at("q").at("im") == "0");
    CHECK(g[0].at("T")[0].at("re") == "2/9");
    CHECK(doc.at("result").at("tau").empty());

    // and back: sequence -> line restores the pole
    const std::string seq_file =
        write_temp("seq.json", doc.at("result").dump());
    const auto back = run_cli("convert --from sequence --to line " + seq_file);
    CHECK(back.code == 0);
    const json bd = json::parse(back.out);
    CHECK(bd.at("result").at("terms")[0].at("alpha").at("re") == "2");
}

TEST_CASE("oracle-check passes on every shipped fixture") {
    for (const char* name : {"exp.json", "texp.json", "t2exp.json", "mt2exp.json",
                             "pair.json", "neg_exp.json", "neg10_exp.json",
                             "neg_two_exp.json", "mixed.json"}) {
        const auto r = run_cli("oracle-check --kernel " + fixture(name));
        CHECK(r.code == 0);
        CHECK(json::parse(r.out).at("result").at("all_agree") == true);
    }
    const auto l = run_cli("oracle-check --line " + fixture("alpha2.json"));
    CHECK(l.code == 0);
    CHECK(json::parse(l.out).at("result").at("all_agree") == true);

    const auto batch = run_cli("oracle-check --instances 20 --seed 11");
    CHECK(batch.code == 0);
    const json bd = json::parse(batch.out);
    CHECK(bd.at("result").at("instances") == 20);
    CHECK(bd.at("result").at("agreements") == 20);
}

TEST_CASE("carleman subcommand reproduces the stabilized counts") {
    const auto r =
        run_cli("carleman --kernel " + fixture("neg_two_exp.json") + " --sizes 16,64,128");
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("result").at("predicted") == 2);
    CHECK(doc.at("result").at("bounded") == true);
    CHECK(doc.at("result").at("counts").back() == 2);
}

TEST_CASE("transform subcommand acts on every representation") {
    const auto k = run_cli("transform --op dilate:2 --kernel " + fixture("exp.json"));
    CHECK(k.code == 0);
    CHECK(json::parse(k.out).at("result").at("terms")[0].at("alpha").at("re") == "1/2");

    const auto l = run_cli("transform --op involute --line " + fixture("alpha2.json"));
    CHECK(l.code == 0);
    const json ld = json::parse(l.out);
    CHECK(ld.at("result").at("terms")[0].at("alpha").at("re") == "1/2");
    CHECK(ld.at("result").at("terms")[0].at("Q")[0].at("re") == "1/4");

    // parity twice is the identity, end to end
    const auto p1 = run_cli("transform --op parity --kernel " + fixture("texp.json"));
    CHECK(p1.code == 0);
    const std::string mid = write_temp("parity.json", json::parse(p1.out).at("result").dump());
    const auto p2 = run_cli("transform --op parity --kernel " + mid);
    CHECK(p2.code == 0);
    const json round = json::parse(p2.out).at("result");
    // compare canonical serializations of: parity(parity(texp)) vs texp
    const auto direct = run_cli("convert --from kernel --to kernel " + fixture("texp.json"));
    CHECK(round == json::parse(direct.out).at("result"));
}

TEST_CASE("exit codes distinguish failure classes") {
    // unreadable file
    CHECK(run_cli("inertia --kernel /tmp/does_not_exist_hankel.json").code == 1);
    // malformed JSON
    const auto bad = write_temp("bad.json", "{ nope");
    CHECK(run_cli("inertia --kernel " + bad).code == 1);
    // missing required option
    CHECK(run_cli("convert --from line " + fixture("alpha2.json")).code == 1);
    CHECK(run_cli("no-such-command").code == 1);
    CHECK(run_cli("inertia").code == 1);
    // broken conjugation symmetry
    const auto nsa = write_temp(
        "nsa.json", R"({"terms":[{"alpha":{"re":"1","im":"1"},"poly":["1"]}]})");
    CHECK(run_cli("inertia --kernel " + nsa).code == 2);
    // domain violation: decaying-exponent condition fails
    const auto dom = write_temp("dom.json", R"({"terms":[{"alpha":"-1","poly":["1"]}]})");
    CHECK(run_cli("inertia --kernel " + dom).code == 3);
    // domain violation: pole inside the disc
    const auto pol = write_temp(
        "pole.json", R"({"poles":[{"gamma":"1/2","K":0,"R":["1"]}]})");
    CHECK(run_cli("inertia --circle " + pol).code == 3);
}

TEST_CASE("timing diagnostics go to the non-JSON stream") {
    const auto err = run_cli("inertia --kernel " + fixture("exp.json"), /*keep_stderr=*/true);
    CHECK(err.code == 0);
    CHECK(err.out.find("wall_ms=") != std::string::npos);
    const auto out = run_cli("inertia --kernel " + fixture("exp.json"));
    CHECK(out.out.find("wall_ms=") == std::string::npos);
}
