#include <cmath>
#include <set>
#include <vector>

#include "ccorr/error.hpp"
#include "ccorr/projection.hpp"
#include "ccorr/random.hpp"
#include "ccorr/stats.hpp"
#include "doctest.h"

using namespace ccorr;

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = rng.normal();
    return v;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Conditional variance of (Phi x)'(Phi y) over the draw of Phi, derived by
// hand for each scheme.
double conditional_variance(ProjectionKind kind, const std::vector<double>& x,
                            const std::vector<double>& y, std::size_t m) {
    const double n = static_cast<double>(x.size());
    const double mm = static_cast<double>(m);
    const double xx = dot(x, x), yy = dot(y, y), xy = dot(x, y);
    double z2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) z2 += x[i] * x[i] * y[i] * y[i];
    double cum4 = 0.0;
    switch (kind) {
        case ProjectionKind::DenseGaussian: cum4 = 0.0; break;
        case ProjectionKind::DenseBernoulli: {
            const double s2 = 1.0 / (mm * n);
            cum4 = s2 * s2 - 3.0 * s2 * s2;
            break;
        }
        case ProjectionKind::TernaryHalf: {
            const double p = 2.0 / mm, v = 1.0 / (2.0 * n);
            cum4 = p * v * v - 3.0 * (p * v) * (p * v);
            break;
        }
        case ProjectionKind::TernaryHash:
            return (xx * yy + xy * xy - 2.0 * z2) / (mm * n * n);
        case ProjectionKind::SubsampleWithReplacement:
            return (z2 / n - (xy / n) * (xy / n)) / mm;
        case ProjectionKind::SubsampleWithoutReplacement:
            break;
    }
    const double s4 = 1.0 / (mm * n * mm * n);
    return mm * (s4 * (xx * yy + xy * xy) + cum4 * z2);
}

}  // namespace

TEST_CASE("scheme names round-trip") {
    for (ProjectionKind k : kAllProjectionKinds) CHECK(parse_projection_kind(to_string(k)) == k);
    CHECK_FALSE(parse_projection_kind("sparse").has_value());
}

TEST_CASE("dimension and domain errors") {
    CHECK_THROWS_AS(sample_scheme(ProjectionKind::DenseGaussian, 10, 11, 1), DimensionError);
    CHECK_THROWS_AS(sample_scheme(ProjectionKind::DenseGaussian, 10, 0, 1), DimensionError);
    CHECK_THROWS_AS(sample_scheme(ProjectionKind::TernaryHalf, 10, 1, 1), DomainError);
    CHECK_THROWS_AS(scheme_cumulants(ProjectionKind::SubsampleWithoutReplacement, 10, 2), UnsupportedError);
    const auto p = sample_scheme(ProjectionKind::TernaryHash, 10, 3, 1);
    CHECK_THROWS_AS(p.apply(std::vector<double>(9)), DimensionError);
}

TEST_CASE("scheme cumulants") {
    const double n = 100, m = 10;
    CHECK(scheme_cumulants(ProjectionKind::DenseGaussian, 100, 10).cum4 == 0.0);
    CHECK(scheme_cumulants(ProjectionKind::DenseBernoulli, 100, 10).cum4 ==
          doctest::Approx(-2.0 / (m * n * m * n)));
    const auto t = scheme_cumulants(ProjectionKind::TernaryHalf, 100, 10);
    CHECK(t.cum4 * m * n * n == doctest::Approx(0.5 - 3.0 / m));
    CHECK(t.c4_phi == 0.5);
    CHECK(scheme_cumulants(ProjectionKind::TernaryHash, 100, 10).c4_phi == 1.0);
    const auto w = scheme_cumulants(ProjectionKind::SubsampleWithReplacement, 100, 10);
    CHECK(w.cum4 * m * n * n == doctest::Approx(n / m - 3.0 / m));
    CHECK(w.c4_phi == doctest::Approx(10.0));
}

TEST_CASE("apply agrees with the materialized matrix for every scheme") {
    const auto v = random_vector(37, 4);
    for (ProjectionKind k : kAllProjectionKinds) {
        CAPTURE(to_string(k));
        const auto p = sample_scheme(k, 37, 6, 99);
        const auto d = p.dense();
        const auto out = p.apply(v);
        REQUIRE(out.size() == 6);
        for (std::size_t i = 0; i < 6; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < 37; ++j) s += d[i * 37 + j] * v[j];
            CHECK(out[i] == doctest::Approx(s).epsilon(1e-12));
        }
    }
}

TEST_CASE("apply is linear") {
    const auto u = random_vector(64, 1);
    const auto w = random_vector(64, 2);
    std::vector<double> comb(64);
    for (std::size_t i = 0; i < 64; ++i) comb[i] = 2.5 * u[i] - 0.75 * w[i];
    for (ProjectionKind k : kAllProjectionKinds) {
        const auto p = sample_scheme(k, 64, 8, 5);
        const auto pu = p.apply(u), pw = p.apply(w), pc = p.apply(comb);
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(pc[i] == doctest::Approx(2.5 * pu[i] - 0.75 * pw[i]).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("same seed, same realization") {
    const auto v = random_vector(50, 8);
    for (ProjectionKind k : kAllProjectionKinds) {
        CHECK(sample_scheme(k, 50, 5, 123).apply(v) == sample_scheme(k, 50, 5, 123).apply(v));
        CHECK(sample_scheme(k, 50, 5, 123).dense() != sample_scheme(k, 50, 5, 124).dense());
    }
}

TEST_CASE("structure of the sparse schemes") {
    const auto b = sample_scheme(ProjectionKind::DenseBernoulli, 40, 4, 2).dense();
    for (double e : b) CHECK(std::abs(e) == doctest::Approx(1.0 / std::sqrt(160.0)));

    const auto h = sample_scheme(ProjectionKind::TernaryHash, 40, 4, 2);
    CHECK(h.nonzeros() == 40);
    const auto hd = h.dense();
    for (std::size_t j = 0; j < 40; ++j) {
        int nz = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            if (hd[i * 40 + j] != 0.0) {
                ++nz;
                CHECK(std::abs(hd[i * 40 + j]) == doctest::Approx(1.0 / std::sqrt(40.0)));
            }
        }
        CHECK(nz == 1);
    }

    const auto t = sample_scheme(ProjectionKind::TernaryHalf, 2000, 20, 7);
    CHECK(std::abs(static_cast<double>(t.nonzeros()) - 4000.0) < 5.0 * std::sqrt(4000.0));
    for (double e : t.dense()) {
        if (e != 0.0) CHECK(std::abs(e) == doctest::Approx(1.0 / std::sqrt(4000.0)));
    }
    // M = 2 makes every entry nonzero.
    CHECK(sample_scheme(ProjectionKind::TernaryHalf, 30, 2, 1).nonzeros() == 60);

    const auto s = sample_scheme(ProjectionKind::SubsampleWithoutReplacement, 30, 30, 3);
    std::set<std::uint32_t> sel(s.selection().begin(), s.selection().end());
    CHECK(sel.size() == 30);
    CHECK(*sel.rbegin() == 29);
}

TEST_CASE("without-replacement draws are uniform over positions") {
    std::vector<int> hits(10, 0);
    const int trials = 20000;
    for (int r = 0; r < trials; ++r) {
        for (auto i : subsample_without_replacement(10, 3, derive_seed(1, r)).bucket) ++hits[i];
    }
    const double expected = trials * 0.3;
    for (int h : hits) CHECK(std::abs(h - expected) < 5.0 * std::sqrt(expected * 0.7));
}

TEST_CASE("compressed inner product: mean x'y/N and exact conditional variance") {
    const std::size_t n = 12, m = 4;
    const auto x = random_vector(n, 21);
    auto y = random_vector(n, 22);
    for (std::size_t i = 0; i < n; ++i) y[i] = 0.6 * x[i] + 0.8 * y[i];
    const int reps = 40000;
    for (ProjectionKind k : kAllProjectionKinds) {
        if (k == ProjectionKind::SubsampleWithoutReplacement) continue;
        CAPTURE(to_string(k));
        std::vector<double> c(reps);
        for (int r = 0; r < reps; ++r) {
            const auto p = sample_scheme(k, n, m, derive_seed(77, r));
            c[r] = dot(p.apply(x), p.apply(y));
        }
        const auto s = summarize(c);
        const double truth = dot(x, y) / static_cast<double>(n);
        CHECK(std::abs(s.mean - truth) < 5.0 * s.se_mean);
        const double v = conditional_variance(k, x, y, m);
        CHECK(std::abs(s.variance - v) < 5.0 * s.se_variance);
    }
}
