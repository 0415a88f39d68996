#include <doctest.h>

#include <cmath>
#include <random>

#include "fdepth/simulate.hpp"
#include "helpers.hpp"

using namespace fdepth;
using F = DepthMethod::Family;

TEST_CASE("gp covariance matches the kernel formula") {
    Grid grid = canonical_grid(10);
    GpSpec spec{2.0, 1.0, 2.0};
    auto cov = gp_covariance(grid, spec);
    for (size_t a = 0; a < 10; ++a)
        CHECK(cov[a * 10 + a] == 2.0);
    for (size_t a = 0; a < 10; ++a)
        for (size_t b = 0; b < 10; ++b) {
            CHECK(cov[a * 10 + b] == cov[b * 10 + a]);
            if (b > 1)
                CHECK(cov[0 * 10 + b] <= cov[0 * 10 + b - 1]);
        }
    // |s-t| = 1 with k=c=1, mu=2 gives exp(-1)
    Grid ends{{0.0, 1.0}};
    auto corner = gp_covariance(ends, GpSpec{1.0, 1.0, 2.0});
    CHECK(corner[1] == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("gp factor of the identity is the identity") {
    std::vector<double> eye(9, 0.0);
    eye[0] = eye[4] = eye[8] = 1.0;
    auto factor = gp_factor(eye, 3);
    CHECK(factor.jitter == 0.0);
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = 0; b < 3; ++b)
            CHECK(factor.lower[a * 3 + b] == doctest::Approx(a == b ? 1.0 : 0.0));
}

TEST_CASE("gp factor reconstructs the covariance") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> mu_dist(0.3, 2.0);
    for (int round = 0; round < 8; ++round) {
        Grid grid = canonical_grid(20);
        GpSpec spec{1.0, 1.0, mu_dist(rng)};
        auto cov = gp_covariance(grid, spec);
        auto factor = gp_factor(cov, 20);
        double worst = 0.0;
        for (size_t a = 0; a < 20; ++a)
            for (size_t b = 0; b < 20; ++b) {
                double rebuilt = 0.0;
                for (size_t j = 0; j < 20; ++j)
                    rebuilt += factor.lower[a * 20 + j] * factor.lower[b * 20 + j];
                double want = cov[a * 20 + b] + (a == b ? factor.jitter : 0.0);
                worst = std::max(worst, std::abs(rebuilt - want));
            }
        CHECK(worst <= factor.jitter + 1e-10);
    }
}

TEST_CASE("rough kernel factorizes within the jitter ladder") {
    Grid grid = canonical_grid(30);
    auto cov = gp_covariance(grid, GpSpec{1.0, 1.0, 0.2});
    auto factor = gp_factor(cov, 30);
    CHECK(factor.jitter <= 1e-8);
}

TEST_CASE("indefinite matrices are rejected") {
    std::vector<double> bad{1.0, 2.0, 2.0, 1.0};
    try {
        gp_factor(bad, 2);
        FAIL("expected NotFactorizable");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_factorizable);
    }
}

TEST_CASE("zero factor returns the mean function") {
    Grid grid = canonical_grid(8);
    GpFactor zero{std::vector<double>(64, 0.0), 8, 0.0};
    std::mt19937_64 rng(62);
    auto curve = sample_gp(zero, [](double t) { return 4.0 * t; }, grid, rng);
    CHECK(curve == helpers::from_fn(8, [](double t) { return 4.0 * t; }));
}

TEST_CASE("q = 0 reduces every model to the base draws") {
    Grid grid = canonical_grid(12);
    for (int model = 0; model <= 6; ++model) {
        ContaminationConfig cfg;
        cfg.model_id = model;
        cfg.q = 0.0;
        auto labeled = generate_model(cfg, 6, grid, StreamKey{77});
        for (bool flag : labeled.contaminated)
            CHECK_FALSE(flag);
        if (model >= 1 && model <= 5) {
            ContaminationConfig base_cfg;
            base_cfg.model_id = 0;
            auto base = generate_model(base_cfg, 6, grid, StreamKey{77});
            CHECK(labeled.sample.values == base.sample.values);
        }
    }
}

TEST_CASE("model knobs only touch their own draws") {
    Grid grid = canonical_grid(30);
    ContaminationConfig base_cfg;
    base_cfg.model_id = 0;
    auto base = generate_model(base_cfg, 20, grid, StreamKey{5});

    SUBCASE("model 1 adds +M to every point of a contaminated curve") {
        ContaminationConfig cfg;
        cfg.model_id = 1;
        cfg.q = 1.0;
        auto labeled = generate_model(cfg, 20, grid, StreamKey{5});
        for (size_t i = 0; i < 20; ++i) {
            CHECK(labeled.contaminated[i]);
            for (size_t k = 0; k < 30; ++k)
                CHECK(labeled.sample.at(i, k) ==
                      doctest::Approx(base.sample.at(i, k) + 25.0).epsilon(1e-15));
        }
    }

    SUBCASE("model 3 contaminates a suffix") {
        ContaminationConfig cfg;
        cfg.model_id = 3;
        cfg.q = 1.0;
        auto labeled = generate_model(cfg, 20, grid, StreamKey{5});
        for (size_t i = 0; i < 20; ++i) {
            bool seen = false;
            for (size_t k = 0; k < 30; ++k) {
                bool differs = labeled.sample.at(i, k) != base.sample.at(i, k);
                if (differs)
                    seen = true;
                else
                    CHECK_FALSE(seen);  // once the offset starts it never stops
            }
        }
    }

    SUBCASE("model 4 peaks span 2 or 3 consecutive points") {
        ContaminationConfig cfg;
        cfg.model_id = 4;
        cfg.q = 1.0;
        auto labeled = generate_model(cfg, 40, grid, StreamKey{5});
        auto base40 = generate_model(base_cfg, 40, grid, StreamKey{5});
        for (size_t i = 0; i < 40; ++i) {
            size_t first = 30, last = 0, count = 0;
            for (size_t k = 0; k < 30; ++k)
                if (labeled.sample.at(i, k) != base40.sample.at(i, k)) {
                    first = std::min(first, k);
                    last = std::max(last, k);
                    ++count;
                }
            CHECK(count >= 2);
            CHECK(count <= 3);
            CHECK(last - first + 1 == count);  // consecutive
        }
    }

    SUBCASE("model 5 hits exactly k distinct points") {
        ContaminationConfig cfg;
        cfg.model_id = 5;
        cfg.q = 1.0;
        cfg.k_points = 4;
        auto labeled = generate_model(cfg, 20, grid, StreamKey{5});
        for (size_t i = 0; i < 20; ++i) {
            size_t count = 0;
            for (size_t k = 0; k < 30; ++k)
                count += labeled.sample.at(i, k) != base.sample.at(i, k);
            CHECK(count == 4);
        }
    }
}

TEST_CASE("model 6 curves are wholly smooth or wholly rough") {
    Grid grid = canonical_grid(15);
    ContaminationConfig mixed;
    mixed.model_id = 6;
    mixed.q = 0.5;
    ContaminationConfig all_smooth = mixed;
    all_smooth.q = 0.0;
    ContaminationConfig all_rough = mixed;
    all_rough.q = 1.0;

    auto sample_mixed = generate_model(mixed, 30, grid, StreamKey{9});
    auto sample_smooth = generate_model(all_smooth, 30, grid, StreamKey{9});
    auto sample_rough = generate_model(all_rough, 30, grid, StreamKey{9});
    size_t rough_count = 0;
    for (size_t i = 0; i < 30; ++i) {
        const auto& expect =
            sample_mixed.contaminated[i] ? sample_rough.sample : sample_smooth.sample;
        rough_count += sample_mixed.contaminated[i];
        for (size_t k = 0; k < 15; ++k)
            CHECK(sample_mixed.sample.at(i, k) == expect.at(i, k));
    }
    CHECK(rough_count > 0);
    CHECK(rough_count < 30);
}

TEST_CASE("contamination frequencies follow q and the sign law") {
    Grid grid = canonical_grid(10);
    size_t flagged = 0, plus = 0, signed_total = 0;
    size_t total = 0;
    for (uint64_t rep = 0; rep < 40; ++rep) {
        ContaminationConfig cfg;
        cfg.model_id = 2;
        cfg.q = 0.1;
        auto labeled = generate_model(cfg, 150, grid, StreamKey{1000 + rep});
        for (size_t i = 0; i < 150; ++i) {
            ++total;
            flagged += labeled.contaminated[i];
            ++signed_total;
            plus += labeled.signs[i] == 1;
        }
    }
    double q_hat = double(flagged) / double(total);
    double q_band = 3.0 * std::sqrt(0.1 * 0.9 / double(total));
    CHECK(std::abs(q_hat - 0.1) <= q_band);
    double p_hat = double(plus) / double(signed_total);
    double p_band = 3.0 * std::sqrt(0.25 / double(signed_total));
    CHECK(std::abs(p_hat - 0.5) <= p_band);
}

TEST_CASE("bad model ids are rejected") {
    ContaminationConfig cfg;
    cfg.model_id = 7;
    try {
        generate_model(cfg, 4, canonical_grid(6), StreamKey{1});
        FAIL("expected BadModelId");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::bad_model_id);
    }
}

TEST_CASE("generation is reproducible") {
    Grid grid = canonical_grid(20);
    ContaminationConfig cfg;
    cfg.model_id = 4;
    auto a = generate_model(cfg, 25, grid, StreamKey{31337});
    auto b = generate_model(cfg, 25, grid, StreamKey{31337});
    CHECK(a.sample.values == b.sample.values);
    CHECK(a.contaminated == b.contaminated);
}

TEST_CASE("study smoke run") {
    StudyConfig cfg;
    cfg.models = {0, 1};
    cfg.methods = {{F::gbd, 2}};
    cfg.n = 20;
    cfg.v = 10;
    cfg.replications = 2;
    cfg.k_parts = 2;
    cfg.seed = 4;
    auto report = run_study(cfg);
    REQUIRE(report.rows == std::vector<std::string>{"Mean", "GBD"});
    REQUIRE(report.tables.size() == 2);
    for (const auto& table : report.tables) {
        for (size_t rep = 0; rep < 2; ++rep) {
            double lowest = 1e18;
            for (size_t row = 0; row < table.eai.size(); ++row) {
                CHECK(table.eai[row][rep] >= 0.0);
                lowest = std::min(lowest, table.eai[row][rep]);
            }
            CHECK(lowest == 0.0);
        }
    }
}
