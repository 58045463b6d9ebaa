#include <cmath>
#include <limits>
#include <vector>

#include "ccorr/error.hpp"
#include "ccorr/models.hpp"
#include "ccorr/random.hpp"
#include "doctest.h"

using namespace ccorr;

TEST_CASE("Ar1Model validates its parameters") {
    CHECK_THROWS_AS(Ar1Model(1.0), DomainError);
    CHECK_THROWS_AS(Ar1Model(-1.2), DomainError);
    CHECK_THROWS_AS(Ar1Model(0.5, 1.5), DomainError);
    CHECK_THROWS_AS(Ar1Model(std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK_NOTHROW(Ar1Model(-0.99, -1.0));
}

TEST_CASE("AR(1) correlation functions") {
    const auto m = Ar1Model(0.7, 0.5).correlation();
    CHECK(m.gamma_xx(0) == 1.0);
    CHECK(m.gamma_xx(3) == doctest::Approx(0.343));
    CHECK(m.gamma_xx(-3) == m.gamma_xx(3));
    CHECK(m.gamma_xy(2) == doctest::Approx(0.5 * 0.49));
    CHECK(m.rho_xy(0) == doctest::Approx(0.5));
    CHECK(m.cum4(1, 2, 3) == 0.0);
    const auto white = Ar1Model(0.0).correlation();
    CHECK(white.gamma_xx(0) == 1.0);
    CHECK(white.gamma_xx(1) == 0.0);
    REQUIRE(m.ar1.has_value());
    CHECK(m.ar1->coupling == 0.5);
}

TEST_CASE("non-Gaussian model without a cumulant kernel is rejected") {
    CorrelationModel m = Ar1Model(0.3).correlation();
    m.is_gaussian = false;
    CHECK_THROWS_AS(m.cum4(0, 0, 0), UnsupportedError);
    m.cum4_kernel = [](std::int64_t, std::int64_t, std::int64_t) { return 0.25; };
    CHECK(m.cum4(0, 1, 2) == 0.25);
}

TEST_CASE("SignalWindow") {
    CHECK_THROWS_AS(SignalWindow(std::vector<double>{}), EmptyInputError);
    try {
        SignalWindow(std::vector<double>{1.0, 2.0, std::numeric_limits<double>::infinity()});
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("index 2") != std::string::npos);
    }
    const SignalWindow w({1.0, 2.0, 3.0}, 10);
    CHECK(w.size() == 3);
    CHECK(w.last_time() == 12);
    CHECK(w.contains(10));
    CHECK_FALSE(w.contains(13));
    CHECK(w.at(11) == 2.0);
}

TEST_CASE("lagged_pair aligns x(t-i) with y(t+tau-i)") {
    std::vector<double> xs, ys;
    for (int i = 0; i < 20; ++i) {
        xs.push_back(i);
        ys.push_back(100 + i);
    }
    const SignalWindow x(xs), y(ys);
    const auto p = lagged_pair(x, y, 3, 5, 10);
    REQUIRE(p.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(p.x[i] == 10 - i);
        CHECK(p.y[i] == 113 - i);
    }
    const auto q = lagged_pair(x, y, -2, 4, 19);
    CHECK(q.x[0] == 19);
    CHECK(q.y[0] == 117);
    CHECK(lagged_pair(x, y, 0, 20).x.back() == 0);
    CHECK_THROWS_AS(lagged_pair(x, y, 0, 21), RangeError);
    CHECK_THROWS_AS(lagged_pair(x, y, 1, 5), RangeError);  // y(t+1) missing at the default anchor
    CHECK_THROWS_AS(lagged_pair(x, y, -16, 5), RangeError);
    CHECK_THROWS_AS(lagged_pair(x, y, 0, 0), EmptyInputError);
}

TEST_CASE("ar1_generate is deterministic and has the right second moments") {
    const auto a = ar1_generate(0.7, 1000, 5);
    const auto b = ar1_generate(0.7, 1000, 5);
    CHECK(std::vector<double>(a.samples().begin(), a.samples().end()) ==
          std::vector<double>(b.samples().begin(), b.samples().end()));
    CHECK_THROWS_AS(ar1_generate(0.5, 0, 1), EmptyInputError);

    const auto x = ar1_generate(0.7, 400000, 77);
    double s0 = 0.0, s1 = 0.0, s2 = 0.0;
    const auto v = x.samples();
    for (std::size_t i = 2; i < v.size(); ++i) {
        s0 += v[i] * v[i];
        s1 += v[i] * v[i - 1];
        s2 += v[i] * v[i - 2];
    }
    const double n = static_cast<double>(v.size() - 2);
    CHECK(s0 / n == doctest::Approx(1.0).epsilon(0.03));
    CHECK(s1 / n == doctest::Approx(0.7).epsilon(0.04));
    CHECK(s2 / n == doctest::Approx(0.49).epsilon(0.06));
}

TEST_CASE("generate_pair couples the channels as specified") {
    const auto same = generate_pair(Ar1Model(0.4), 50, 3);
    for (std::size_t i = 0; i < 50; ++i) CHECK(same.x.samples()[i] == same.y.samples()[i]);

    const auto pair = generate_pair(Ar1Model(0.4, 0.5), 200000, 8);
    double sxy = 0.0, syy = 0.0, sxy1 = 0.0;
    const auto x = pair.x.samples();
    const auto y = pair.y.samples();
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        sxy += x[i] * y[i];
        syy += y[i] * y[i];
        sxy1 += x[i] * y[i + 1];
    }
    const double n = static_cast<double>(x.size() - 1);
    CHECK(sxy / n == doctest::Approx(0.5).epsilon(0.05));
    CHECK(syy / n == doctest::Approx(1.0).epsilon(0.03));
    CHECK(sxy1 / n == doctest::Approx(0.2).epsilon(0.1));
}
