#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "intervalk/io.hpp"

using namespace intervalk;

namespace {

struct Output {
    int code;
    std::string out;
    std::string err;
};

Output invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "intervalk");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("intervalk_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

const std::string kThreePlusOne = "elements: a b c x\na < b\nb < c\n";

} // namespace

TEST_CASE("cli certify on 3+1") {
    const std::string file = temp_file("31.txt", kThreePlusOne);
    const Output k1 = invoke({"certify", "--k", "1", file});
    CHECK(k1.code == 2);
    CHECK(k1.out.find("kind: chain-plus-one") != std::string::npos);
    CHECK(k1.out.find("chain: a b c") != std::string::npos);

    const Output k2 = invoke({"certify", "--k", "2", file});
    CHECK(k2.code == 0);
    const std::string reps = temp_file("31.rep", k2.out);
    CHECK(invoke({"validate", "--k", "2", file, reps}).code == 0);
    const Output strict = invoke({"validate", "--k", "1", file, reps});
    CHECK(strict.code == 2);
    CHECK(strict.out.find("violation: length of 'x'") != std::string::npos);
}

TEST_CASE("cli certify on the empty poset") {
    const std::string file = temp_file("empty.txt", "# empty\n");
    const Output r = invoke({"certify", "--k", "5", file});
    CHECK(r.code == 0);
    CHECK(r.out == "k: 5\nresult: representation\nscale: 1\n");
}

TEST_CASE("cli JSON output mirrors text") {
    const std::string file = temp_file("31j.txt", kThreePlusOne);
    const Output j = invoke({"--format", "json", "certify", "--k", "1", file});
    CHECK(j.code == 2);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["kind"] == "chain-plus-one");
    CHECK(doc["chain"] == nlohmann::json({"a", "b", "c"}));
    CHECK(doc["lone"] == "x");
    CHECK(doc["k"] == 1);
}

TEST_CASE("cli oracle and certify exit codes agree") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        std::ostringstream text;
        write_poset(text, random_poset(9, seed, 2));
        const std::string file = temp_file("rand.txt", text.str());
        for (const char* k : {"1", "2", "3"}) {
            CHECK(invoke({"oracle", "--k", k, file}).code == invoke({"certify", "--k", k, file}).code);
        }
    }
}

TEST_CASE("cli represent") {
    const std::string file = temp_file("chain3.txt", "elements: a b c\na < b\nb < c\n");
    const Output r = invoke({"represent", "--m", "2", "--n", "3", "--decimal", file});
    CHECK(r.code == 0);
    CHECK(r.out.find("result: representation") != std::string::npos);
    const std::string p22 = temp_file("22.txt", "elements: a b x y\na < x\nb < y\n");
    const Output none = invoke({"represent", "--m", "1", "--n", "4", p22});
    CHECK(none.code == 2);
    CHECK(none.out.find("result: no-representation") != std::string::npos);
    CHECK(invoke({"represent", "--m", "3", "--n", "2", file}).code == 1);
}

TEST_CASE("cli gen output parses back") {
    const Output chain = invoke({"gen", "chain-plus-one", "4"});
    CHECK(chain.code == 0);
    CHECK(parse_poset(chain.out) == make_chain_plus_one(4));
    const Output rnd = invoke({"gen", "random", "--n", "10", "--seed", "17", "--orders", "3"});
    CHECK(rnd.code == 0);
    CHECK(parse_poset(rnd.out) == random_poset(10, 17, 3));
}

TEST_CASE("cli debug graph export") {
    const std::string file = temp_file("dbg.txt", kThreePlusOne);
    const auto graph = (std::filesystem::temp_directory_path() / "intervalk_test_graph.txt").string();
    CHECK(invoke({"certify", "--k", "1", "--debug-graph", graph, file}).code == 2);
    std::ifstream in(graph);
    std::string first, second;
    std::getline(in, first);
    std::getline(in, second);
    CHECK(first.rfind("# vertices 8", 0) == 0);
    CHECK_FALSE(second.empty());
}

TEST_CASE("cli selfcheck") {
    const Output r = invoke({"selfcheck", "--max-n", "3", "--k-max", "2", "--threads", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("result: agree") != std::string::npos);
}

TEST_CASE("cli usage errors exit 1") {
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"certify", "--k", "0", "x"}).code == 1);
    CHECK(invoke({"certify", "--k", "1", "/nonexistent/file"}).code == 1);
    const std::string bad = temp_file("bad.txt", "elements: a b\na < zz\n");
    const Output r = invoke({"certify", "--k", "1", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 2: unknown element 'zz'") != std::string::npos);
    CHECK(invoke({"--help"}).code == 0);
}
