#include <doctest.h>

#include "cmgen/error.hpp"
#include "cmgen/stats.hpp"
#include "oracles.hpp"

using namespace cmgen;

TEST_CASE("t cdf against the closed-form series") {
    for (int df : {1, 2, 3, 4, 7, 10, 29, 60})
        for (double t : {0.0, 0.1, 0.5, 1.0, 2.0, 3.5, 8.0}) {
            const double two_sided = 2.0 * (1.0 - student_t_cdf(t, df));
            CHECK(std::abs(two_sided - (1.0 - static_cast<double>(oracle::t_central_probability(t, df)))) < 1e-12);
            CHECK(student_t_cdf(-t, df) == doctest::Approx(1.0 - student_t_cdf(t, df)).epsilon(1e-12));
        }
    // df = 1 is Cauchy
    CHECK(student_t_cdf(1.0, 1) == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("incomplete beta") {
    CHECK(incomplete_beta(1, 1, 0.3) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(incomplete_beta(2, 3, 0.0) == 0.0);
    CHECK(incomplete_beta(2, 3, 1.0) == 1.0);
    // I_x(2,3) = 6x^2 - 8x^3 + 3x^4
    const double x = 0.4;
    CHECK(incomplete_beta(2, 3, x) == doctest::Approx(6 * x * x - 8 * x * x * x + 3 * x * x * x * x).epsilon(1e-13));
}

TEST_CASE("paired t-test") {
    SUBCASE("hand example") {
        const std::vector<double> a{5, 7, 9, 6, 8}, b{4, 5, 8, 5, 5};
        // d = 1,2,1,1,3: mean 1.6, sd sqrt(0.8)
        const auto r = paired_t_test(a, b);
        CHECK(r.t == doctest::Approx(1.6 / (std::sqrt(0.8) / std::sqrt(5.0))).epsilon(1e-13));
        CHECK(r.df == 4);
    }
    SUBCASE("agrees with the independent oracle") {
        Rng rng(9);
        for (int trial = 0; trial < 20; ++trial) {
            const auto n = 2 + rng.index(40);
            std::vector<double> a, b;
            for (std::size_t i = 0; i < n; ++i) {
                a.push_back(rng.uniform(0, 1));
                b.push_back(a.back() + rng.uniform(-0.3, 0.2));
            }
            const auto lib = paired_t_test(a, b);
            const auto ref = oracle::paired_t(a, b);
            CHECK(std::abs(lib.t - ref.t) < 1e-9);
            CHECK(std::abs(lib.p - ref.p) < 1e-9);
        }
    }
    SUBCASE("p falls as a constant offset grows") {
        Rng rng(10);
        std::vector<double> a, noise;
        for (int i = 0; i < 15; ++i) {
            a.push_back(rng.uniform(0, 1));
            noise.push_back(rng.uniform(-0.1, 0.1));
        }
        double last = 1.0;
        for (double offset : {0.01, 0.02, 0.05, 0.1, 0.2}) {
            std::vector<double> b;
            for (std::size_t i = 0; i < a.size(); ++i) b.push_back(a[i] + offset + noise[i]);
            const auto p = paired_t_test(a, b).p;
            CHECK(p < last);
            last = p;
        }
    }
    SUBCASE("degenerate input") {
        const std::vector<double> a{1, 2, 3};
        CHECK_THROWS_AS(paired_t_test(a, a), UndefinedError);
        CHECK_THROWS_AS(paired_t_test(std::vector<double>{1}, std::vector<double>{2}), ArgumentError);
        CHECK_THROWS_AS(paired_t_test(a, std::vector<double>{1, 2}), ArgumentError);
    }
}
