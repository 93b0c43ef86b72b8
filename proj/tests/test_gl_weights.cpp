#include <cmath>

#include <doctest.h>

#include "fracdiff/gl_weights.hpp"
#include "fracdiff/verify.hpp"

using namespace fracdiff;

TEST_CASE("leading weights") {
    GlWeights w = compute_weights(0.5, 1.0, 2);
    CHECK(w.c[0] == 1.0);
    CHECK(w.c[1] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(w.c[2] == doctest::Approx(-0.125).epsilon(1e-15));
}

TEST_CASE("c0 is dt^-alpha exactly as computed") {
    GlWeights w = compute_weights(0.75, 0.01, 3);
    CHECK(w.c[0] == std::pow(0.01, -0.75));
}

TEST_CASE("integer order terminates the sequence") {
    GlWeights w = compute_weights(1.0, 0.1, 5);
    CHECK(w.c[0] == doctest::Approx(10.0));
    CHECK(w.c[1] == doctest::Approx(-10.0));
    for (int j = 2; j <= 5; ++j) CHECK(w.c[j] == 0.0);

    GlWeights w2 = compute_weights(2.0, 1.0, 6);
    CHECK(w2.c[0] == doctest::Approx(1.0));
    CHECK(w2.c[1] == doctest::Approx(-2.0));
    CHECK(w2.c[2] == doctest::Approx(1.0));
    for (int j = 3; j <= 6; ++j) CHECK(w2.c[j] == 0.0);
}

TEST_CASE("sign pattern") {
    SUBCASE("sub-diffusive order: all tail weights negative") {
        GlWeights w = compute_weights(0.5, 1.0, 50);
        CHECK(w.c[0] > 0.0);
        for (int j = 1; j <= 50; ++j) CHECK(w.c[j] < 0.0);
    }
    SUBCASE("super-diffusive order: one negative weight then positive") {
        GlWeights w = compute_weights(1.5, 1.0, 50);
        CHECK(w.c[0] > 0.0);
        CHECK(w.c[1] < 0.0);
        for (int j = 2; j <= 50; ++j) CHECK(w.c[j] > 0.0);
    }
}

TEST_CASE("recurrence matches the direct binomial oracle") {
    for (double alpha : {0.3, 0.75, 1.0, 1.5, 1.99}) {
        GlWeights w = compute_weights(alpha, 1.0, 1000);
        for (int j = 0; j <= 1000; ++j) {
            const double direct = direct_gl_weight(alpha, 1.0, j);
            if (direct == 0.0) {
                CHECK(w.c[j] == 0.0);
            } else {
                CHECK(std::abs(w.c[j] - direct) / std::abs(direct) < 1e-12);
            }
        }
    }
}

TEST_CASE("negative count is rejected") {
    CHECK_THROWS_AS(compute_weights(0.5, 1.0, -1), InvalidCount);
}

TEST_CASE("partial sums") {
    SUBCASE("classical order collapses to zero") {
        GlWeights w = compute_weights(1.0, 0.25, 10);
        for (int j = 1; j <= 10; ++j) {
            CHECK(weight_partial_sum(w, j) ==
                  doctest::Approx(0.0).epsilon(1e-14));
        }
    }
    SUBCASE("half order") {
        GlWeights w = compute_weights(0.5, 1.0, 1);
        CHECK(weight_partial_sum(w, 1) == doctest::Approx(0.5));
    }
    SUBCASE("normalized sums shrink towards zero") {
        for (double alpha : {0.3, 0.75, 1.25, 1.8}) {
            GlWeights w = compute_weights(alpha, 0.1, 10000);
            double prev = std::abs(weight_partial_sum(w, 2));
            for (int j = 3; j <= 10000; j *= 2) {
                const double s = std::abs(weight_partial_sum(w, j));
                CHECK(s <= prev + 1e-14);
                prev = s;
            }
            // asymptotically the normalized sum decays like J^{-alpha}
            CHECK(std::abs(weight_partial_sum(w, 10000)) <
                  2.0 * std::pow(10000.0, -alpha));
        }
    }
    SUBCASE("out-of-range index") {
        GlWeights w = compute_weights(0.5, 1.0, 5);
        CHECK_THROWS_AS(weight_partial_sum(w, 6), IndexOutOfRange);
    }
}

TEST_CASE("magnitude decay past the leading terms") {
    for (double alpha : {0.4, 1.0, 1.6, 1.99}) {
        GlWeights w = compute_weights(alpha, 1.0, 500);
        const int start = static_cast<int>(std::ceil(alpha)) + 1;
        for (int j = start + 1; j <= 500; ++j) {
            CHECK(std::abs(w.c[j]) <= std::abs(w.c[j - 1]) + 1e-18);
        }
    }
}
