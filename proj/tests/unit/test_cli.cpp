#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "harmval/cli.hpp"

using harmval::cli::parse_int_list;
using harmval::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(ParseIntList, ListsAndRanges) {
    EXPECT_EQ(parse_int_list("1,2,-3"), (std::vector<long>{1, 2, -3}));
    EXPECT_EQ(parse_int_list("-2..1"), (std::vector<long>{-2, -1, 0, 1}));
    EXPECT_EQ(parse_int_list("5, -7..-6 ,+9"), (std::vector<long>{5, -7, -6, 9}));
    EXPECT_THROW(parse_int_list(""), std::invalid_argument);
    EXPECT_THROW(parse_int_list("1,,2"), std::invalid_argument);
    EXPECT_THROW(parse_int_list("3..1"), std::invalid_argument);
    EXPECT_THROW(parse_int_list("x"), std::invalid_argument);
}

TEST(CliVerify, CsvRowsAndExitZero) {
    const auto r = invoke({"verify-theorem1", "--primes", "2", "--a", "1", "--n-max", "50", "--format", "csv"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count_lines(r.out), 51u);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "p,a,n,valuation,bound,gap,pass");
    EXPECT_NE(r.out.find("\n2,1,1,2,2,0,true\n"), std::string::npos);
    EXPECT_NE(r.out.find("\n2,1,4,4,1,3,true\n"), std::string::npos);
    EXPECT_NE(r.err.find("failures=0"), std::string::npos);
}

TEST(CliVerify, InvalidInputs) {
    auto r = invoke({"verify-theorem1", "--primes", "4", "--a", "1", "--n-max", "10"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("4 is not prime"), std::string::npos);

    r = invoke({"verify-theorem1", "--primes", "3", "--a", "3", "--n-max", "10"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("skip: p=3 a=3"), std::string::npos);

    // a mix keeps the valid pairs and logs the rest
    r = invoke({"verify-theorem1", "--primes", "3", "--a", "1..3", "--n-max", "5", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out), 11u);
    EXPECT_NE(r.err.find("skip: p=3 a=3"), std::string::npos);

    EXPECT_EQ(invoke({"verify-theorem1", "--primes", "2", "--a", "1", "--n-max", "0"}).code, 2);
    EXPECT_EQ(invoke({"verify-theorem1", "--primes", "2", "--a", "1"}).code, 2);
    EXPECT_EQ(invoke({"verify-theorem1", "--primes", "2", "--a", "1", "--n-max", "3", "--jobs", "0"}).code, 2);
    EXPECT_EQ(invoke({"no-such-command"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
}

TEST(CliVerify, NegativeShiftSyntax) {
    auto r = invoke({"verify-theorem1", "--primes", "5", "--a", "-3", "--n-max", "4", "--format", "csv"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\n5,-3,4,"), std::string::npos);
    r = invoke({"verify-theorem1", "--primes", "5", "--a=-3,2", "--n-max", "4", "--format", "csv"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count_lines(r.out), 9u);
}

TEST(CliSeries, Examples) {
    auto r = invoke({"series-check", "--a", "1,2,-3", "--n-max", "60", "--format", "csv", "--jobs", "4"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count_lines(r.out), 181u);
    EXPECT_EQ(invoke({"series-check", "--a", "0", "--n-max", "5"}).code, 2);
    EXPECT_EQ(invoke({"series-check", "--a", "1", "--n-max", "1"}).code, 0);
    r = invoke({"series-check", "--a", "1", "--n-max", "3", "--extra-order", "3", "--format", "csv"});
    EXPECT_NE(r.out.find("\n1,3,true,true,21 -39 22\n"), std::string::npos) << r.out;
}

TEST(CliSequence, JsonContainsExactValues) {
    const auto r = invoke({"sequence", "--which", "u", "--n-max", "10", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_TRUE(doc.is_array());
    ASSERT_EQ(doc.size(), 10u);
    EXPECT_EQ(doc[3]["n"], 4);
    EXPECT_EQ(doc[3]["value"], "52");
    EXPECT_EQ(doc[3]["integer"], true);
    EXPECT_EQ(doc[3]["routes_agree"], true);
    EXPECT_NE(r.out.find(R"({"n":4,"value":"52","integer":true)"), std::string::npos);
}

TEST(CliSequence, ExceptionalRowsAndDefects) {
    auto r = invoke({"sequence", "--which", "u", "--n-max", "3", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\n3,31/4,false,true\n"), std::string::npos);

    r = invoke({"sequence", "--which", "K", "--n-max", "5", "--format", "csv"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count_lines(r.out), 6u);
    EXPECT_NE(r.out.find("\n2,25,true,true\n"), std::string::npos);
    EXPECT_NE(r.out.find("\n3,19251/4,false,true\n"), std::string::npos);

    r = invoke({"sequence", "--which", "v", "--n-max", "8", "--format", "csv"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\n2,34,true,true\n"), std::string::npos);

    EXPECT_EQ(invoke({"sequence", "--which", "w", "--n-max", "5"}).code, 2);
}

TEST(CliLemma1, Examples) {
    auto r = invoke({"lemma1", "--n-max", "8", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    for (int n = 1; n <= 7; ++n) EXPECT_NE(r.err.find("info: n=" + std::to_string(n) + " "), std::string::npos);
    EXPECT_NE(r.out.find("\n7,5,8,false\n"), std::string::npos);
    EXPECT_EQ(r.out.find("\n8,"), std::string::npos);

    r = invoke({"lemma1", "--n-max", "20", "--all", "--format", "csv"});
    EXPECT_EQ(count_lines(r.out), 21u);
    EXPECT_NE(r.out.find("\n16,5,17,true\n"), std::string::npos);

    EXPECT_EQ(invoke({"lemma1", "--n-max", "7"}).code, 2);
}

TEST(CliOutput, TableFormatAndOutputFile) {
    auto r = invoke({"lemma1", "--n-max", "8"});
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n  lhs  rhs_doubled  holds");

    const auto path = std::filesystem::temp_directory_path() / "harmval_cli_test.json";
    r = invoke({"sequence", "--which", "u", "--n-max", "4", "--format", "json", "--output", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    const auto doc = nlohmann::json::parse(in);
    EXPECT_EQ(doc.size(), 4u);
    std::filesystem::remove(path);

    EXPECT_EQ(invoke({"lemma1", "--n-max", "9", "--output", "/nonexistent-dir/x.csv"}).code, 2);
}

TEST(CliOutput, JsonValuationsAreNumbersOrInf) {
    const auto r = invoke({"verify-theorem1", "--primes", "2", "--a", "1", "--n-max", "2", "--format", "json"});
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc[0]["valuation"].is_number_integer());
    EXPECT_EQ(doc[1]["valuation"], 3);
    EXPECT_EQ(doc[1]["pass"], true);
}

TEST(CliDeterminism, JobsDoNotChangeOutput) {
    const std::vector<std::vector<std::string>> commands = {
        {"verify-theorem1", "--primes", "2,3,5", "--a", "-4..4", "--n-max", "40", "--format", "csv"},
        {"series-check", "--a", "1,-2,3", "--n-max", "15", "--format", "json"},
        {"sequence", "--which", "v", "--n-max", "12", "--format", "json"},
        {"lemma1", "--n-max", "300000", "--format", "csv"},
    };
    for (auto cmd : commands) {
        auto one = cmd, eight = cmd;
        one.insert(one.end(), {"--jobs", "1"});
        eight.insert(eight.end(), {"--jobs", "8"});
        const auto a = invoke(one), b = invoke(eight);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out) << cmd[0];
    }
}
