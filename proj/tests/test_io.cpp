#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fdepth/depth.hpp"
#include "fdepth/io.hpp"
#include "helpers.hpp"

using namespace fdepth;
using F = DepthMethod::Family;

TEST_CASE("format_double round-trips") {
    std::mt19937_64 rng(71);
    std::normal_distribution<double> normal(0.0, 100.0);
    for (int round = 0; round < 1000; ++round) {
        double value = normal(rng);
        CHECK(std::stod(format_double(value)) == value);
    }
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-3.0) == "-3");
}

TEST_CASE("read_curves parses the header grid and rows") {
    std::istringstream in(
        "t,0.2,0.4,0.6,0.8,1.0\n"
        "a,1,2,3,4,5\n"
        "b,0,0,0,0,0\n"
        "c,5,4,3,2,1\n");
    auto sample = read_curves(in, "test");
    CHECK(sample.n == 3);
    CHECK(sample.v() == 5);
    CHECK(sample.grid.points == std::vector<double>{0.2, 0.4, 0.6, 0.8, 1.0});
    CHECK(sample.ids == std::vector<std::string>{"a", "b", "c"});
    CHECK(sample.at(0, 2) == 3.0);
}

TEST_CASE("ragged rows name the offending row") {
    std::istringstream in(
        "t,0.5,1.0\n"
        "a,1,2\n"
        "b,1\n");
    try {
        read_curves(in, "test");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::parse_error);
        CHECK(std::string(e.what()).find("row 3") != std::string::npos);
    }
}

TEST_CASE("non-increasing abscissae are rejected") {
    std::istringstream in(
        "t,0.5,0.25\n"
        "a,1,2\n"
        "b,3,4\n");
    try {
        read_curves(in, "test");
        FAIL("expected BadGrid");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::bad_grid);
    }
}

TEST_CASE("curve files round-trip exactly") {
    std::mt19937_64 rng(72);
    auto sample = helpers::on_canonical_grid(helpers::random_curves(rng, 6, 17));
    std::ostringstream out;
    write_curves(out, sample);
    std::istringstream in(out.str());
    auto back = read_curves(in, "roundtrip");
    CHECK(back.n == sample.n);
    CHECK(back.grid.points == sample.grid.points);
    CHECK(back.ids == sample.ids);
    CHECK(back.values == sample.values);  // bitwise
}

TEST_CASE("depth table against the committed fixture") {
    auto sample = read_curves_file(std::string(FDEPTH_TEST_DATA) + "/fixture8.csv");
    auto depths = depth_all(sample, {F::gbd, 2});
    auto ranks = competition_ranks(depths);

    std::ifstream golden(std::string(FDEPTH_TEST_DATA) + "/fixture8_gbd_depth.csv");
    REQUIRE(golden.good());
    std::string line;
    std::getline(golden, line);
    REQUIRE(line == "id,depth,rank");
    size_t row = 0;
    while (std::getline(golden, line)) {
        std::istringstream fields(line);
        std::string id, depth_text, rank_text;
        std::getline(fields, id, ',');
        std::getline(fields, depth_text, ',');
        std::getline(fields, rank_text, ',');
        REQUIRE(row < sample.n);
        CHECK(id == sample.ids[row]);
        CHECK(depths.values[row] == doctest::Approx(std::stod(depth_text)).epsilon(1e-12));
        CHECK(ranks[row] == std::stoi(rank_text));
        ++row;
    }
    CHECK(row == sample.n);
}

TEST_CASE("screen table flags the least deep") {
    auto sample = helpers::on_canonical_grid({
        helpers::constant(5, 0.0),
        helpers::constant(5, 1.0),
        helpers::constant(5, 2.0),
        helpers::constant(5, 100.0),
    });
    auto depths = depth_all(sample, {F::gbd, 2});
    std::ostringstream out;
    write_screen_table(out, sample, depths, 1);
    std::string text = out.str();
    CHECK(text.find("3,") != std::string::npos);
    // exactly one flagged row
    size_t flagged = 0, pos = 0;
    while ((pos = text.find(",1\n", pos)) != std::string::npos) {
        ++flagged;
        pos += 3;
    }
    CHECK(flagged == 1);
}
