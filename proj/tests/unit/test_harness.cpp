#include <cmath>
#include <vector>

#include "ccorr/error.hpp"
#include "ccorr/harness.hpp"
#include "ccorr/parallel.hpp"
#include "ccorr/random.hpp"
#include "ccorr/theory.hpp"
#include "doctest.h"

using namespace ccorr;

TEST_CASE("compressed_dim") {
    CHECK(compressed_dim(1000, 10.0) == 100);
    CHECK(compressed_dim(1024, 10.0) == 102);
    CHECK(compressed_dim(1024, 80.0) == 12);
    CHECK_FALSE(is_exact_rate(1024, 10.0));
    CHECK(is_exact_rate(1000, 10.0));
    CHECK_THROWS_AS(compressed_dim(100, 0.5), DomainError);
    CHECK_THROWS_AS(compressed_dim(5, 10.0), DomainError);
}

TEST_CASE("parallel_for visits every index once and rethrows") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
    CHECK_THROWS_AS(parallel_for(100, 3,
                                 [](std::size_t i) {
                                     if (i == 57) throw RangeError("boom");
                                 }),
                    RangeError);
    CHECK(resolve_workers(0) >= 1);
    CHECK(resolve_workers(3) == 3);
}

TEST_CASE("run_mc is deterministic and independent of the worker count") {
    ExperimentConfig cfg;
    cfg.model = Ar1Model(0.5);
    cfg.n = 100;
    cfg.alpha = 10.0;
    cfg.lags = {0, 2, -1};
    cfg.estimators = {EstimatorKind::Plain, EstimatorKind::Compressed, EstimatorKind::QuantizedSubsampled};
    cfg.scheme = ProjectionKind::TernaryHalf;
    cfg.replicates = 64;
    cfg.seed = 17;
    cfg.workers = 1;
    const auto a = run_mc(cfg);
    cfg.workers = 5;
    const auto b = run_mc(cfg);
    CHECK(a.values == b.values);
    REQUIRE(a.entries.size() == 9);
    CHECK(a.m == 10);
    CHECK(a.entry(EstimatorKind::Compressed, 2).stats.mean == b.entry(EstimatorKind::Compressed, 2).stats.mean);
    CHECK(a.replicate_values(EstimatorKind::Plain, -1).size() == 64);
    CHECK_THROWS_AS(a.entry(EstimatorKind::PlainShort, 0), RangeError);
    CHECK_THROWS_AS(a.entry(EstimatorKind::Plain, 7), RangeError);

    // Replicate r is reproducible on its own.
    const SignalPair sig = generate_pair(cfg.model, 103, derive_seed(17, 5, 0));
    const auto pair = lagged_pair(sig.x, sig.y, 2, 100, 100);
    CHECK(a.replicate_values(EstimatorKind::Plain, 2)[5] == plain_corr(pair));

    cfg.seed = 18;
    CHECK(run_mc(cfg).values != a.values);
    cfg.replicates = 1;
    CHECK_THROWS_AS(run_mc(cfg), DomainError);
}

TEST_CASE("run_mc honours an explicit M and a fixed scheme") {
    ExperimentConfig cfg;
    cfg.model = Ar1Model(0.2);
    cfg.n = 50;
    cfg.m = 7;
    cfg.lags = {0};
    cfg.estimators = {EstimatorKind::PlainShort};
    cfg.replicates = 10;
    CHECK(run_mc(cfg).m == 7);
    cfg.m = 51;
    CHECK_THROWS_AS(run_mc(cfg), DimensionError);

    // A fixed scheme is drawn once and shared by every replicate.
    ExperimentConfig f;
    f.model = Ar1Model(0.0);
    f.n = 40;
    f.alpha = 4.0;
    f.lags = {0};
    f.estimators = {EstimatorKind::Compressed};
    f.replicates = 20;
    f.fixed_scheme = true;
    f.workers = 2;
    const auto s = run_mc(f);
    const auto scheme = sample_scheme(f.scheme, 40, 10, derive_seed(derive_seed(f.seed, UINT64_MAX, 1), 1, 0));
    const SignalPair sig = generate_pair(f.model, 40, derive_seed(f.seed, 3, 0));
    CHECK(s.replicate_values(EstimatorKind::Compressed, 0)[3] ==
          doctest::Approx(compressed_corr(lagged_pair(sig.x, sig.y, 0, 40), scheme)).epsilon(1e-13));
}

TEST_CASE("paired variance statistics") {
    Rng rng(4);
    std::vector<double> a(500), b(500);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double common = rng.normal();
        a[i] = 2.0 * common + rng.normal();
        b[i] = common + 0.5 * rng.normal();
    }
    const auto d = variance_difference(a, b, 3.0);
    CHECK(d.value == doctest::Approx(3.0 * (summarize(a).variance - summarize(b).variance)));
    // Explicit delete-one jackknife.
    std::vector<double> loo(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<double> aa, bb;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j == i) continue;
            aa.push_back(a[j]);
            bb.push_back(b[j]);
        }
        loo[i] = 3.0 * (summarize(aa).variance - summarize(bb).variance);
    }
    CHECK(d.standard_error == doctest::Approx(jackknife_se(loo)).epsilon(1e-8));

    const auto r = variance_ratio(a, b);
    CHECK(r.value == doctest::Approx(summarize(a).variance / summarize(b).variance));
    CHECK(r.standard_error > 0.0);
    CHECK_THROWS_AS(variance_difference(a, std::vector<double>(3, 0.0)), DimensionError);
}

TEST_CASE("integrated_rmse") {
    const std::vector<std::vector<double>> blocks{{1.0, 2.0}, {3.0, 2.0}};
    const std::vector<double> target{2.0, 2.0};
    CHECK(integrated_rmse(blocks, target) == doctest::Approx(std::sqrt(0.5)));
    CHECK_THROWS_AS(integrated_rmse({}, target), EmptyInputError);
    CHECK_THROWS_AS(integrated_rmse({{1.0}}, target), DimensionError);
}

TEST_CASE("full_data_reference uses every pair") {
    const SignalWindow x({1.0, 2.0, 3.0, 4.0});
    const std::vector<std::int64_t> lags{0, 1, -1};
    const auto ref = full_data_reference(x, x, lags);
    CHECK(ref[0] == doctest::Approx(30.0 / 4.0));
    CHECK(ref[1] == doctest::Approx((2.0 + 6.0 + 12.0) / 3.0));
    CHECK(ref[2] == doctest::Approx(ref[1]));
    CHECK_THROWS_AS(full_data_reference(x, x, std::vector<std::int64_t>{4}), RangeError);
}

TEST_CASE("run_blocks") {
    const SignalWindow x = ar1_generate(0.7, 12500, 3);
    BlockConfig cfg;
    cfg.n = 2000;
    cfg.alpha = 10.0;
    cfg.lags = {0, 1, 2, 3};
    cfg.estimators = {EstimatorKind::Plain, EstimatorKind::Compressed, EstimatorKind::PlainShort,
                      EstimatorKind::QuantizedPlain, EstimatorKind::QuantizedCompressedCorrected};
    const auto r = run_blocks(x, x, 6, cfg);
    CHECK(r.block_length == 2083);
    CHECK(r.m == 200);
    CHECK(r.reference_normalized[0] == doctest::Approx(1.0));
    REQUIRE(r.estimates.size() == 5);
    const auto& plain = r.estimates[0];
    // Block b starts at b * 2083; the plain estimate uses its first N samples.
    const SignalWindow block(std::vector<double>(x.samples().begin() + 2 * 2083,
                                                 x.samples().begin() + 3 * 2083));
    CHECK(plain.per_block[2][1] == plain_corr(lagged_pair(block, block, 1, 2000, 1999)));
    CHECK(plain.rmse < r.estimates[2].rmse);
    // Quantized estimates are at most one in magnitude.
    for (const auto& row : r.estimates[3].per_block)
        for (double v : row) CHECK(std::abs(v) <= 1.0);

    CHECK(run_blocks(x, x, 6, cfg).estimates[1].rmse == r.estimates[1].rmse);
    CHECK_THROWS_AS(run_blocks(x, x, 7, cfg), RangeError);
    CHECK_THROWS_AS(run_blocks(x, x, 1, cfg), DomainError);
    cfg.lags = {0, 90};
    CHECK_THROWS_AS(run_blocks(x, x, 6, cfg), RangeError);
}

TEST_CASE("region_scan thresholds") {
    const std::vector<double> alphas{5.0, 10.0};
    const std::vector<double> grid{0.1, 0.2, 0.3, 0.4};
    const std::vector<double> c4s{0.0, 0.5, 0.25};
    const auto r = region_scan(alphas, grid, c4s, RegionMcConfig{.n = 500});
    REQUIRE(r.thresholds.size() == 6);
    REQUIRE(r.points.size() == 24);
    for (const auto& t : r.thresholds) {
        CHECK(t.a_star_bisection == doctest::Approx(t.a_star).epsilon(1e-9));
        CHECK(std::abs(t.a_star_finite - t.a_star) < 0.05);
        CHECK_FALSE(t.a_star_mc.has_value());
    }
    for (const auto& p : r.points) {
        CHECK_FALSE(p.delta_mc.has_value());
        CHECK((p.delta_asymptotic > 0.0) == (p.a < theory::singularity_threshold(p.alpha, p.c4)));
    }
    CHECK(scheme_for_c4(0.0) == ProjectionKind::DenseGaussian);
    CHECK(scheme_for_c4(0.5) == ProjectionKind::TernaryHalf);
    CHECK_FALSE(scheme_for_c4(1.0).has_value());
    CHECK_THROWS_AS(region_scan(std::vector<double>{1.0}, grid, c4s, {}), DomainError);
    CHECK_THROWS_AS(region_scan(std::vector<double>{}, grid, c4s, {}), EmptyInputError);
}

TEST_CASE("bit_budget_compare layout") {
    BudgetConfig cfg;
    cfg.n = 256;
    cfg.alpha = 4.0;
    cfg.f_bits = {2.0, 4.0};
    cfg.lags = {0, 1};
    cfg.replicates = 50;
    const auto rows = bit_budget_compare(cfg);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].m_quantized == 64);
    CHECK(rows[0].m_compressed == 32);
    CHECK(rows[2].m_compressed == 16);
    CHECK(rows[0].var_quantized == 0.0);
    CHECK(std::isinf(rows[0].ratio));
    CHECK(rows[1].var_quantized == rows[3].var_quantized);
    cfg.f_bits = {0.5};
    CHECK_THROWS_AS(bit_budget_compare(cfg), DomainError);
}
