#include "support.hpp"

#include "pvi/certificate.hpp"
#include "pvi/error.hpp"
#include "pvi/system_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>

using namespace pvi;
using pvi::test::e;

TEST_SUITE("system_io") {

TEST_CASE("system files round trip")
{
    const FuchsianSystem s = derive_system(2);
    const std::string text = write_system(s);
    const FuchsianSystem back = read_system(text);
    CHECK(back.matrix == s.matrix);
    CHECK(back.singularities == s.singularities);
    CHECK(back.z == s.z);
    CHECK(write_system(back) == text);
}

TEST_CASE("Schlesinger files round trip")
{
    const SchlesingerSystem s = row_system(3);
    const Table1Row r = table1(3);
    const std::string text = write_schlesinger({s, r.theta, r.lambda, r.mu});
    const SchlesingerFile back = read_schlesinger(text);
    CHECK(back.system.residues == s.residues);
    CHECK(back.system.points == s.points);
    CHECK(back.theta == r.theta);
    CHECK(back.lambda == r.lambda);
    CHECK(back.mu == r.mu);
    CHECK(back.system.lambda1 == r.lambda);
    CHECK(write_schlesinger(back) == text);
}

TEST_CASE("only normalized systems are written")
{
    SchlesingerSystem s = row_system(3);
    s.normalized = false;
    CHECK_THROWS_AS(write_schlesinger({s, {}, {}, {}}), MathError);
}

TEST_CASE("malformed input")
{
    CHECK_THROWS_AS(read_system("{"), Error);
    CHECK_THROWS_AS(read_system(R"({"matrix": [["1"]]})"), Error);
    CHECK_THROWS_AS(read_system(R"({"singularities": [], "matrix": [["1", "2"], ["3"]]})"), Error);
    CHECK_THROWS_AS(read_system(R"({"singularities": [1], "matrix": [["1"]]})"), Error);
    CHECK_THROWS_AS(read_system(R"({"singularities": ["b+"], "matrix": [["1"]]})"), ParseError);
    CHECK_THROWS_AS(read_schlesinger(R"({"t": "b", "theta": ["0","0","0","0"], "Q": []})"), Error);
    CHECK_THROWS_AS(read_schlesinger(R"({"t": "b", "theta": ["0"], "Q": [[["0","0"],["0","0"]],[["0","0"],["0","0"]],[["0","0"],["0","0"]]]})"),
                    Error);
}

TEST_CASE("file helpers")
{
    const auto path = (std::filesystem::temp_directory_path() / "pvi_io_test.json").string();
    write_file(path, "abc\n");
    CHECK(read_file(path) == "abc\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file("/nonexistent/pvi/file.json"), Error);
    CHECK_THROWS_AS(write_file("/nonexistent/pvi/file.json", "x"), Error);
}

}
