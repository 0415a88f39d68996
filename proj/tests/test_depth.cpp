#include <doctest.h>

#include <algorithm>
#include <random>

#include "fdepth/depth.hpp"
#include "fdepth/parallel.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace fdepth;
using F = DepthMethod::Family;

namespace {

FunctionalSample three_constants(size_t v = 10) {
    return helpers::on_canonical_grid({
        helpers::constant(v, 0.0),
        helpers::constant(v, 1.0),
        helpers::constant(v, 2.0),
    });
}

std::vector<std::vector<double>> to_rows(const FunctionalSample& sample) {
    std::vector<std::vector<double>> rows;
    for (size_t i = 0; i < sample.n; ++i) {
        auto curve = sample.curve(i);
        rows.emplace_back(curve.begin(), curve.end());
    }
    return rows;
}

}  // namespace

TEST_CASE("band depth of three constants") {
    auto sample = three_constants();
    CHECK(band_depth(helpers::constant(10, 1.0), sample, 2) == doctest::Approx(1.0));
    CHECK(band_depth(helpers::constant(10, 0.0), sample, 2) == doctest::Approx(2.0 / 3.0));

    auto depths = depth_all(sample, {F::bd, 2});
    CHECK(depths.values[0] == doctest::Approx(2.0 / 3.0));
    CHECK(depths.values[1] == doctest::Approx(1.0));
    CHECK(depths.values[2] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("generalized band depth of three constants") {
    auto sample = three_constants();
    CHECK(generalized_band_depth(helpers::constant(10, 0.0), sample, 2) ==
          doctest::Approx(2.0 / 3.0));
    CHECK(generalized_band_depth(helpers::constant(10, 1.0), sample, 2) ==
          doctest::Approx(1.0));
}

TEST_CASE("sample members keep the self-pair floor") {
    std::mt19937_64 rng(31);
    auto sample = helpers::on_canonical_grid(helpers::random_curves(rng, 8, 12));
    auto depths = depth_all(sample, {F::gbd, 2});
    for (double value : depths.values)
        CHECK(value >= 2.0 / 8.0 - 1e-12);
}

TEST_CASE("corrected depths collapse to the plain ones without crossings") {
    std::mt19937_64 rng(32);
    auto base = helpers::random_curves(rng, 1, 15)[0];
    std::vector<std::vector<double>> curves;
    for (int i = 0; i < 6; ++i) {
        auto curve = base;
        for (double& value : curve)
            value += 3.0 * i;  // vertical offsets keep every pair crossing-free
        curves.push_back(curve);
    }
    auto sample = helpers::on_canonical_grid(curves);
    auto x = curves[2];
    CHECK(corrected_band_depth(x, sample) == doctest::Approx(band_depth(x, sample, 2)));
    CHECK(corrected_generalized_band_depth(x, sample) ==
          doctest::Approx(generalized_band_depth(x, sample, 2)));
}

TEST_CASE("corrected depth against a crossing pair") {
    auto sample = helpers::on_canonical_grid({
        helpers::from_fn(10, [](double t) { return t; }),
        helpers::from_fn(10, [](double t) { return 1.0 - t; }),
    });
    // The single pair's domain is k <= 5; x = 0.1 leaves it at k = 2.
    CHECK(corrected_band_depth(helpers::constant(10, 0.1), sample) == 0.0);
    // x = 0.5 stays inside on the whole chosen half-domain.
    CHECK(corrected_generalized_band_depth(helpers::constant(10, 0.5), sample) ==
          doctest::Approx(0.5));
}

TEST_CASE("run depths for a hand-built inside pattern") {
    // Band of constants (0,1); x weaves to hit mask 1,1,1,0,0,0,1,1,0,0.
    std::vector<double> x(10, 2.0);
    for (size_t k : {0, 1, 2, 6, 7})
        x[k] = 0.5;
    auto sample = helpers::on_canonical_grid(
        {helpers::constant(10, 0.0), helpers::constant(10, 1.0)});
    CHECK(gbd_inside(x, sample) == doctest::Approx(0.3));
    CHECK(gbd_outside(x, sample) == doctest::Approx(0.7));

    CHECK(gbd_inside(helpers::constant(10, 0.5), sample) == 1.0);
    CHECK(gbd_outside(helpers::constant(10, 0.5), sample) == 1.0);
}

TEST_CASE("oracle equivalence on small random samples") {
    std::mt19937_64 rng(33);
    for (int round = 0; round < 20; ++round) {
        size_t n = 4 + rng() % 5;
        size_t v = 3 + rng() % 10;
        auto curves = round % 2 == 0 ? helpers::random_curves(rng, n, v)
                                     : helpers::lattice_curves(rng, n, v);
        auto sample = helpers::on_canonical_grid(curves);
        auto rows = to_rows(sample);

        auto externals = helpers::random_curves(rng, 2, v);
        std::vector<std::vector<double>> probes = externals;
        probes.push_back(curves[0]);

        for (const auto& x : probes) {
            CHECK(band_depth(x, sample, 2) ==
                  doctest::Approx(oracle::band_depth(x, rows, 2)).epsilon(1e-13));
            CHECK(band_depth(x, sample, 3) ==
                  doctest::Approx(oracle::band_depth(x, rows, 3)).epsilon(1e-13));
            CHECK(generalized_band_depth(x, sample, 2) ==
                  doctest::Approx(oracle::generalized_band_depth(x, rows, 2)).epsilon(1e-13));
            CHECK(generalized_band_depth(x, sample, 3) ==
                  doctest::Approx(oracle::generalized_band_depth(x, rows, 3)).epsilon(1e-13));
            CHECK(corrected_band_depth(x, sample) ==
                  doctest::Approx(oracle::corrected_band_depth(x, rows)).epsilon(1e-13));
            CHECK(corrected_generalized_band_depth(x, sample) ==
                  doctest::Approx(oracle::corrected_generalized_band_depth(x, rows))
                      .epsilon(1e-13));
            CHECK(gbd_inside(x, sample) ==
                  doctest::Approx(oracle::gbd_inside(x, rows)).epsilon(1e-13));
            CHECK(gbd_outside(x, sample) ==
                  doctest::Approx(oracle::gbd_outside(x, rows)).epsilon(1e-13));
        }
    }
}

TEST_CASE("per-curve depth chains and bounds") {
    std::mt19937_64 rng(34);
    for (int round = 0; round < 10; ++round) {
        auto sample =
            helpers::on_canonical_grid(helpers::lattice_curves(rng, 10, 20));
        auto methods = all_methods();
        auto depths = depth_all_multi(sample, methods);
        // order: BD2, BD3, cBD, GBD, cGBD, GBD_I, GBD_O
        for (size_t i = 0; i < sample.n; ++i) {
            double bd2 = depths[0].values[i], bd3 = depths[1].values[i];
            double cbd = depths[2].values[i], gbd = depths[3].values[i];
            double cgbd = depths[4].values[i], gin = depths[5].values[i];
            double gout = depths[6].values[i];
            CHECK(gin <= gbd + 1e-12);
            CHECK(gbd <= gout + 1e-12);
            CHECK(gbd >= bd2 - 1e-12);
            CHECK(bd2 >= 0.0);
            CHECK(bd2 <= 1.0);
            CHECK(bd3 <= 2.0);
            double gbd3 = generalized_band_depth(sample.curve(i), sample, 3);
            CHECK(gbd3 >= bd3 - 1e-12);
            for (double value : {cbd, cgbd, gin, gout}) {
                CHECK(value >= 0.0);
                CHECK(value <= 1.0);
            }
        }
    }
}

TEST_CASE("pointwise depths are column-permutation invariant") {
    std::mt19937_64 rng(35);
    auto curves = helpers::random_curves(rng, 8, 16);
    auto sample = helpers::on_canonical_grid(curves);
    std::vector<size_t> perm(16);
    std::iota(perm.begin(), perm.end(), size_t(0));
    std::shuffle(perm.begin(), perm.end(), rng);

    auto permuted_curves = curves;
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t k = 0; k < perm.size(); ++k)
            permuted_curves[i][k] = curves[i][perm[k]];
    auto permuted = helpers::on_canonical_grid(permuted_curves);

    std::vector<DepthMethod> pointwise{{F::bd, 2}, {F::bd, 3}, {F::gbd, 2},
                                       {F::cbd, 2}, {F::cgbd, 2}};
    auto before = depth_all_multi(sample, pointwise);
    auto after = depth_all_multi(permuted, pointwise);
    for (size_t m = 0; m < pointwise.size(); ++m)
        CHECK(before[m].values == after[m].values);  // exact
}

TEST_CASE("a column permutation can change the run depths") {
    // x alternates in/out of the band of (0,1); grouping the columns joins runs.
    std::vector<double> x{0.5, 2.0, 0.5, 2.0};
    std::vector<double> grouped{0.5, 0.5, 2.0, 2.0};
    auto sample = helpers::on_canonical_grid({
        helpers::constant(4, 0.0),
        helpers::constant(4, 1.0),
        x,
    });
    auto permuted = helpers::on_canonical_grid({
        helpers::constant(4, 0.0),
        helpers::constant(4, 1.0),
        grouped,
    });
    CHECK(gbd_inside(x, sample) != gbd_inside(grouped, permuted));
    CHECK(gbd_outside(x, sample) != gbd_outside(grouped, permuted));
}

TEST_CASE("monotone transforms leave every depth unchanged") {
    std::mt19937_64 rng(36);
    auto curves = helpers::lattice_curves(rng, 7, 12);
    auto sample = helpers::on_canonical_grid(curves);
    auto mapped_curves = curves;
    for (auto& curve : mapped_curves)
        for (double& value : curve)
            value = value * value * value + 2.0 * value;
    auto mapped = helpers::on_canonical_grid(mapped_curves);

    std::vector<DepthMethod> methods = all_methods();
    auto before = depth_all_multi(sample, methods);
    auto after = depth_all_multi(mapped, methods);
    for (size_t m = 0; m < methods.size(); ++m)
        CHECK(before[m].values == after[m].values);  // exact
}

TEST_CASE("rank order sorts deepest first with index ties") {
    DepthVector depths{{F::gbd, 2}, {0.2, 0.9, 0.5}};
    CHECK(rank_order(depths).order == std::vector<size_t>{1, 2, 0});

    DepthVector equal{{F::gbd, 2}, {0.5, 0.5, 0.5, 0.5}};
    CHECK(rank_order(equal).order == std::vector<size_t>{0, 1, 2, 3});

    DepthVector tied{{F::gbd, 2}, {0.5, 0.7, 0.5}};
    CHECK(rank_order(tied).order == std::vector<size_t>{1, 0, 2});
}

TEST_CASE("competition ranks share tied positions") {
    DepthVector depths{{F::bd, 2}, {2.0 / 3.0, 1.0, 2.0 / 3.0}};
    CHECK(competition_ranks(depths) == std::vector<int>{2, 1, 2});
}

TEST_CASE("deepest curve") {
    CHECK(deepest(three_constants(), {F::bd, 2}) == 1);
    auto identical = helpers::on_canonical_grid({
        helpers::constant(6, 1.0),
        helpers::constant(6, 1.0),
        helpers::constant(6, 1.0),
    });
    CHECK(deepest(identical, {F::bd, 2}) == 0);
}

TEST_CASE("J outside {2,3} or above n is rejected") {
    auto sample = three_constants();
    auto expect_bad_j = [&](auto fn) {
        try {
            fn();
            FAIL("expected BadJ");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::bad_j);
        }
    };
    expect_bad_j([&] { band_depth(helpers::constant(10, 1.0), sample, 1); });
    expect_bad_j([&] { band_depth(helpers::constant(10, 1.0), sample, 4); });
    auto pair = helpers::on_canonical_grid(
        {helpers::constant(10, 0.0), helpers::constant(10, 1.0)});
    expect_bad_j([&] { band_depth(helpers::constant(10, 0.5), pair, 3); });
}

TEST_CASE("multi-method pass matches single-method calls") {
    std::mt19937_64 rng(37);
    auto sample = helpers::on_canonical_grid(helpers::random_curves(rng, 9, 14));
    auto methods = all_methods();
    auto multi = depth_all_multi(sample, methods);
    for (const auto& method : methods) {
        auto single = depth_all(sample, method);
        for (size_t m = 0; m < methods.size(); ++m)
            if (methods[m] == method)
                CHECK(single.values == multi[m].values);
    }
}

TEST_CASE("depth_all is identical across worker counts") {
    std::mt19937_64 rng(38);
    auto sample = helpers::on_canonical_grid(helpers::random_curves(rng, 20, 25));
    set_worker_count(1);
    auto serial = depth_all_multi(sample, all_methods());
    set_worker_count(4);
    auto threaded = depth_all_multi(sample, all_methods());
    set_worker_count(0);
    for (size_t m = 0; m < serial.size(); ++m)
        CHECK(serial[m].values == threaded[m].values);
}
