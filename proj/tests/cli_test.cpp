#include "cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = indet::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("check") {
    auto r = run({"check", "a{a,c}b{a,d}bb"});
    CHECK(r.code == 0);
    CHECK(r.out == "REGULAR y=1,1,2,1,2,2 sigma=2\n");
    r = run({"check", "a{a,c}c"});
    CHECK(r.code == 1);
    CHECK(r.out == "INDETERMINATE\n");
    CHECK(run({"check", "aaa"}).out == "REGULAR y=1,1,1 sigma=1\n");
    r = run({"check", "a{a"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position 1") != std::string::npos);
    CHECK(run({"check", "--alphabet", "ab", "abz"}).code == 2);
}

TEST_CASE("check reads stdin and files") {
    CHECK(run({"check"}, "aaa\n").out == "REGULAR y=1,1,1 sigma=1\n");
    const std::string path = "cli_test_input.txt";
    std::ofstream(path) << "ab\n";
    CHECK(run({"check", "-i", path}).out == "REGULAR y=1,2 sigma=2\n");
    std::remove(path.c_str());
    CHECK(run({"check", "-i", "does/not/exist"}).code == 2);
}

TEST_CASE("kv format and oracle cross-check") {
    auto r = run({"--format", "kv", "check", "a{a,c}b{a,d}bb"});
    CHECK(r.out == "verdict=REGULAR\ny=1,1,2,1,2,2\nsigma=2\n");
    r = run({"--oracle", "check", "a{a,c}b{a,d}bb"});
    CHECK(r.out == "REGULAR y=1,1,2,1,2,2 sigma=2\noracle=agree\n");
    r = run({"--oracle", "mp", "a{a,b}cbd"});
    CHECK(r.out == "0 1 2 1 0 3 0 1 0 1 0\noracle=agree\n");
    CHECK(run({"--format", "kv", "reverse", "0 2 0"}).out == "verdict=INFEASIBLE\ncondition=b\nj=2\n");
}

TEST_CASE("mp") {
    CHECK(run({"mp", "aabac"}).out == "0 1 2 1 0 3 0 1 0 1 0\n");
    CHECK(run({"mp", "a"}).out == "0 1 0\n");
    CHECK(run({"--alphabet", "int:3", "mp", "1{2,3}{1,3}"}).out == "0 1 0 3 2 1 0\n");
    CHECK(run({"mp", "#a#{a,b}#c#b#d#"}).out == "0 1 2 1 0 3 0 1 0 1 0\n");
}

TEST_CASE("reverse") {
    auto r = run({"reverse", "0 1 0 3 0 1 0 7 0 1 0 3 0 1 0"});
    CHECK(r.code == 0);
    CHECK(r.out == "#1#2#1#3#1#2#1# REGULAR sigma=3\n");
    r = run({"reverse", "0", "1", "0", "3", "0", "1", "0", "7", "0", "1", "0", "1", "0", "1", "0"});
    CHECK(r.code == 1);
    CHECK(r.out == "#1#{2,3}#{1,4}#5#4#3#1# INDETERMINATE sigma=5\n");
    r = run({"reverse", "0 2 0"});
    CHECK(r.code == 2);
    CHECK(r.out == "INFEASIBLE condition (b) at j=2\n");
    CHECK(run({"reverse", "0 1"}).code == 2);
    CHECK(run({"--strict", "reverse", "0 1 0 3 0 1 0 7 0 1 0 3 0 1 0"}).out == "#1#2#1#3#1#2#1# REGULAR sigma=3\n");
}

TEST_CASE("feasible and anystring") {
    auto r = run({"feasible", "--pairs", "0 1 0 3 2 1 0"});
    CHECK(r.code == 0);
    CHECK(r.out == "FEASIBLE manacher=fail\npairs=(0,2),(0,4),(2,4),(0,8),(2,8),(4,8),(6,8)\n");
    CHECK(run({"feasible", "0 1 0"}).out == "FEASIBLE manacher=pass\n");
    r = run({"feasible", "0 2 0"});
    CHECK(r.code == 1);
    CHECK(r.out == "INFEASIBLE condition (b) at j=2\n");
    CHECK(run({"anystring", "0 1 2 1 0 3 0 1 0 1 0"}).out == "#1#{1,2}#3#2#4#\n");
    CHECK(run({"anystring", "0 2 0"}).code == 2);
}

TEST_CASE("encode and decode") {
    auto r = run({"--preset", "dna", "encode", "--show-tables", "aac{a,c}gta{g,t}{a,c}{g,t}"});
    CHECK(r.code == 0);
    CHECK(r.out == "codes=1,1,2,5,3,4,1,6,5,6 I=[(2,1),(2,3)] L=[1,2,3,4]\n");
    CHECK(run({"--alphabet", "acgt", "encode", "acgt"}).out == "codes=1,2,3,4 I=[] L=[]\n");

    const std::string path = "cli_test_dna.bin";
    r = run({"--preset", "dna", "encode", "-o", path, "aac{a,c}gta{g,t}{a,c}{g,t}"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(run({"decode", path}).out == "aac{a,c}gta{g,t}{a,c}{g,t}\n");
    std::ifstream file(path, std::ios::binary);
    const std::string bytes((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(run({"decode"}, bytes).out == "aac{a,c}gta{g,t}{a,c}{g,t}\n");
    CHECK(run({"decode"}, bytes.substr(0, 10)).code == 2);
    std::remove(path.c_str());

    CHECK(run({"--alphabet", "a,b", "--sigma-star", "1", "encode", "{a,b}{a,b}"}).code == 0);
    CHECK(run({"--alphabet", "abc", "--sigma-star", "1", "encode", "{a,b}{b,c}"}).code == 2);
    CHECK(run({"--alphabet", "ab", "--code-width", "2", "encode", "*{a,b}"}).out == "codes=0,3 I=[(2,1)] L=[1,2]\n");
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"--format", "json", "mp", "a"}).code == 2);
    CHECK(run({"--preset", "rna", "mp", "a"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("fuzz is deterministic") {
    const auto first = run({"--seed", "1", "fuzz"});
    CHECK(first.code == 0);
    CHECK(first.out == "100/100 round-trip OK\nmp_array = oracle_mp on all\nregular_check = oracle_is_regular on all\n");
    CHECK(run({"--seed", "1", "fuzz"}).out == first.out);
    CHECK(run({"--seed", "7", "fuzz", "--count", "50", "--max-m", "15", "--max-n", "6"}).out ==
          "50/50 round-trip OK\nmp_array = oracle_mp on all\nregular_check = oracle_is_regular on all\n");
}
