#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace orlicz;
using testutil::random_polygon;

TEST_CASE("Lp specialization of the addition") {
    // phi1 = phi2 = pow:p solves to f = (hK^p + eps hL^p)^{1/p}.
    std::mt19937_64 rng(201);
    Body K = random_polygon(rng);
    Body L = random_polygon(rng);
    std::vector<Dir> dirs = enriched_directions(K, 64);
    for (double p : {2.0, 1.0, -1.0}) {
        OrliczFn phi = power_law(p);
        double eps = 0.37;
        OrliczSum sum = orlicz_add(K, L, phi, phi, eps, dirs);
        CHECK(sum.max_residual <= 1e-12);
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            double expected = std::pow(std::pow(sum.hK[i], p) + eps * std::pow(sum.hL[i], p),
                                       1.0 / p);
            CHECK(sum.f[i] == Catch::Approx(expected).epsilon(1e-11));
        }
    }
}

TEST_CASE("monotonicity classes cannot be mixed") {
    std::mt19937_64 rng(203);
    Body K = random_polygon(rng);
    std::vector<Dir> dirs = enriched_directions(K, 16);
    CHECK_THROWS_AS(orlicz_add(K, K, power_law(1.0), power_law(-1.0), 0.1, dirs),
                    std::invalid_argument);
}

TEST_CASE("combination brackets the summand") {
    // increasing phis enlarge the body, decreasing phis shrink it
    std::mt19937_64 rng(205);
    Body K = random_polygon(rng);
    Body L = random_polygon(rng);
    std::vector<Dir> dirs = enriched_directions(K, 32);
    OrliczSum inc = orlicz_add(K, L, power_law(2.0), power_law(2.0), 0.2, dirs);
    OrliczSum dec = orlicz_add(K, L, power_law(-1.0), power_law(-1.0), 0.2, dirs);
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        CHECK(inc.f[i] >= inc.hK[i] - 1e-12);
        CHECK(dec.f[i] <= dec.hK[i] + 1e-12);
    }
}

TEST_CASE("difference quotient converges to the expected density") {
    // phi1'(1) (f_eps - h_K)/eps -> h_K phi2(h_L/h_K) uniformly
    std::mt19937_64 rng(207);
    Body K = random_polygon(rng);
    Body L = random_polygon(rng);
    std::vector<Dir> dirs = enriched_directions(K, 64);
    OrliczFn phi1 = power_law(2.0), phi2 = power_law(0.5);
    double prev = std::numeric_limits<double>::infinity();
    for (double eps : {1e-2, 1e-3, 1e-4}) {
        OrliczSum sum = orlicz_add(K, L, phi1, phi2, eps, dirs);
        double worst = 0.0;
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            double target = sum.hK[i] * phi2(sum.hL[i] / sum.hK[i]);
            worst = std::max(worst,
                             std::abs(phi1.deriv_left1 * (sum.f[i] - sum.hK[i]) / eps - target));
        }
        CHECK(worst < prev);
        prev = worst;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("variational limit recovers the mixed volume") {
    // square against the disk, increasing pair
    Body K = Body::polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    Body L = Body::ball(2, 1.0);
    VariationalResult vr =
        variational_mixed_volume(K, L, power_law(1.0), power_law(2.0), 0.1, 8, 256);
    CHECK(vr.direct == Catch::Approx(4.0));  // (1/2) sum phi2(1/1)*1*2 * ... = 4
    CHECK(vr.rel_gap < 5e-3);

    // decreasing pair uses the right-hand derivative
    VariationalResult vd =
        variational_mixed_volume(K, L, power_law(-1.0), power_law(-0.5), 0.05, 8, 256);
    CHECK(vd.rel_gap < 5e-3);
}

TEST_CASE("disk-to-disk variational value is pi") {
    Body K = testutil::circumscribed_mgon(256);
    VariationalResult vr =
        variational_mixed_volume(K, K, power_law(0.5), power_law(0.5), 0.1, 8, 64);
    CHECK(vr.estimate == Catch::Approx(vr.direct).epsilon(5e-3));
    CHECK(vr.direct == Catch::Approx(volume(K)).epsilon(1e-12));
}
