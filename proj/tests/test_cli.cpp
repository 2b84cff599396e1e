#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string bin() {
    const char* b = std::getenv("ALTERKNOT_BIN");
    return b ? b : "./tools/alterknot";
}
std::string data_dir() {
    const char* d = std::getenv("ALTERKNOT_DATA");
    return d ? d : "data";
}

struct run_result {
    int exit_code;
    std::string out;
};

run_result run(const std::string& args) {
    std::string outfile = "cli_test_output.tmp";
    std::string cmd = bin() + " " + args + " > " + outfile + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(outfile);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(outfile.c_str());
    return {WEXITSTATUS(rc), ss.str()};
}

} // namespace

TEST_CASE("analyze the figure-eight") {
    run_result r = run("analyze --dt \"4 6 8 2\"");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["tw"] == 2);
    CHECK(j["bounds"]["exceptional"] == true);
    CHECK(j["bounds"]["cusp_area_lower"] == 0.0);
    CHECK(double(j["bounds"]["cusp_area_upper"]) == doctest::Approx(17.3205080757));
    CHECK(j["diagram"]["prime"] == true);
    CHECK(j["augmented"]["twisted_euler_abs"] == 2);
    CHECK(j["threshold_n"] == 121);
}

TEST_CASE("analyze the 5-crossing twist knot") {
    run_result r = run("analyze --dt \"4 8 10 2 6\"");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["tw"] == 2);
    CHECK(j["bounds"]["exceptional"] == true);
}

TEST_CASE("trefoil is rejected as non-hyperbolic") {
    run_result pd = run("analyze --pd \"X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\"");
    CHECK(pd.exit_code == 3);
    json j = json::parse(pd.out);
    CHECK(j["error"] == "non-hyperbolic");
    CHECK(j["tw"] == 1);
    CHECK(run("analyze --dt \"4 6 2\"").exit_code == 3);
}

TEST_CASE("parse failures exit with code 2") {
    CHECK(run("analyze --dt \"3 5\"").exit_code == 2);
    CHECK(run("analyze --pd \"garbage\"").exit_code == 2);
    CHECK(run("analyze --dt \"4 6 2\" --pd \"X[1,2,3,4]\"").exit_code == 2);
}

TEST_CASE("analyze output is byte-stable") {
    run_result a = run("analyze --dt \"4 8 10 2 6\"");
    run_result b = run("analyze --dt \"4 8 10 2 6\"");
    CHECK(a.out == b.out);
}

TEST_CASE("constants verify and export") {
    run_result v = run("constants --verify");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("all constants certified") != std::string::npos);

    run_result j = run("constants --json");
    REQUIRE(j.exit_code == 0);
    json doc = json::parse(j.out);
    CHECK(doc["all_pass"] == true);
    CHECK(doc["precision_digits"] == 50);
    bool saw_a = false;
    for (const auto& step : doc["trace"])
        if (step["name"] == "A") saw_a = step["pass"].get<bool>();
    CHECK(saw_a);
}

TEST_CASE("arc census command") {
    run_result r = run("arc-census");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("t, d, k, formula, achieved, pass") != std::string::npos);
    CHECK(r.out.find("0.9549, 0.4088, 3, pass") != std::string::npos);
    CHECK(r.out.find("fail") == std::string::npos);

    run_result bad = run("arc-census --qmax 1 --d-grid 3.0");
    CHECK(bad.exit_code == 4);
}

TEST_CASE("census command on the bundled table") {
    std::string results = "cli_census_results.tmp";
    std::remove(results.c_str());
    std::string csv = data_dir() + "/census_alternating.csv";
    run_result r = run("census " + csv + " --out " + results);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["violations"] == 0);
    CHECK(j["rows_checked"].get<long>() >= 50);
    CHECK(j["rows_skipped"] == 0);

    long lines = 0;
    {
        std::ifstream in(results);
        std::string line;
        while (std::getline(in, line)) ++lines;
    }
    CHECK(lines == j["rows_checked"].get<long>());

    // append-only: a second run doubles the results file
    run_result again = run("census " + csv + " --out " + results);
    CHECK(again.exit_code == 0);
    long lines2 = 0;
    {
        std::ifstream in(results);
        std::string line;
        while (std::getline(in, line)) ++lines2;
    }
    CHECK(lines2 == 2 * lines);
    std::remove(results.c_str());
}

TEST_CASE("census violations exit with code 5") {
    std::string tmpcsv = "cli_violation.tmp.csv";
    {
        std::ofstream out(tmpcsv);
        out << "name,dt_code,crossings,twist_number,cusp_area,meridian_length\n";
        out << "fake,4 6 8 2,4,2,20.0,1.0\n";
    }
    std::string results = "cli_violation_results.tmp";
    run_result r = run("census " + tmpcsv + " --out " + results);
    CHECK(r.exit_code == 5);
    std::remove(tmpcsv.c_str());
    std::remove(results.c_str());
}

TEST_CASE("analyze accepts file input and reduces flype-split diagrams") {
    // pretzel with separated twist-equivalent singletons: DT code of it
    {
        std::ofstream out("cli_file_input.tmp.txt");
        out << "4 10 12 14 2 8 6\n";  // 7-crossing pretzel with a mergeable pair
    }
    run_result r = run("analyze --file cli_file_input.tmp.txt");
    std::remove("cli_file_input.tmp.txt");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["flypes_applied"].get<long>() >= 1);
    CHECK(j["tw"] == 3);

    {
        std::ofstream out("cli_file_input.tmp.txt");
        out << "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
    }
    run_result pd = run("analyze --file cli_file_input.tmp.txt");
    std::remove("cli_file_input.tmp.txt");
    CHECK(pd.exit_code == 3);  // trefoil again, sniffed as PD
}

TEST_CASE("interval precision environment variable") {
    std::string outfile = "cli_env_test.tmp";
    int rc = std::system(("ALTERKNOT_PRECISION=30 " + bin() + " constants --json > " + outfile).c_str());
    REQUIRE(WEXITSTATUS(rc) == 0);
    std::ifstream in(outfile);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(outfile.c_str());
    json doc = json::parse(ss.str());
    CHECK(doc["precision_digits"] == 30);
    CHECK(doc["all_pass"] == true);

    rc = std::system(("ALTERKNOT_PRECISION=bogus " + bin() + " constants --verify > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 2);
}
