#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace orlicz;

TEST_CASE("power-law basics") {
    OrliczFn p2 = power_law(2.0);
    CHECK(p2(1.0) == Catch::Approx(1.0));
    CHECK(p2(3.0) == Catch::Approx(9.0));
    CHECK(p2.increasing());
    CHECK(p2(0.0) == 0.0);  // increasing phi vanishes at 0

    OrliczFn pm = power_law(-0.5);
    CHECK_FALSE(pm.increasing());
    CHECK(pm(4.0) == Catch::Approx(0.5));
    CHECK_THROWS_AS(pm(0.0), std::domain_error);
    CHECK_THROWS_AS(p2(-1.0), std::domain_error);
    CHECK_THROWS_AS(power_law(0.0), std::invalid_argument);
}

TEST_CASE("expm1 normalization") {
    OrliczFn f = expm1_fn();
    CHECK(f(1.0) == Catch::Approx(1.0));
    CHECK(f(0.0) == 0.0);
    CHECK(f.deriv_left1 == Catch::Approx(std::exp(1.0) / (std::exp(1.0) - 1.0)));
}

TEST_CASE("classification of power laws in the plane") {
    CHECK(classify(power_law(2.0), 2) == PhiClass::Phi1);
    CHECK(classify(power_law(0.5), 2) == PhiClass::Phi1);
    CHECK(classify(power_law(1.0), 2) == PhiClass::Phi1);
    CHECK(classify(power_law(-0.5), 2) == PhiClass::Phi2);
    CHECK(classify(power_law(-1.0), 2) == PhiClass::Phi2);
    CHECK(classify(power_law(-3.0), 2) == PhiClass::Psi);
    CHECK(classify(power_law(-2.0), 2) == PhiClass::Boundary);  // p = -n
    CHECK(classify(expm1_fn(), 2) == PhiClass::Phi1);
}

TEST_CASE("classification in dimension three") {
    CHECK(classify(power_law(-2.0), 3) == PhiClass::Phi2);
    CHECK(classify(power_law(-4.0), 3) == PhiClass::Psi);
    CHECK(classify(power_law(-3.0), 3) == PhiClass::Boundary);
}

TEST_CASE("tables") {
    std::vector<double> t, y;
    for (int i = 0; i <= 40; ++i) {
        double x = std::exp(-4.0 + 8.0 * i / 40.0);
        t.push_back(x);
        y.push_back(x * x);  // samples of pow:2
    }
    OrliczFn f = table_fn(t, y);
    CHECK(f(1.0) == Catch::Approx(1.0));
    CHECK(f(2.0) == Catch::Approx(4.0).epsilon(1e-9));  // log-log linear is exact on powers
    CHECK(f(100.0) == Catch::Approx(1e4).epsilon(1e-9));
    CHECK(classify(f, 2) == PhiClass::Phi1);

    CHECK_THROWS_AS(table_fn({1.0, 2.0}, {1.0, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(table_fn({1.0, 1.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(table_fn({0.5, 2.0}, {2.0, 3.0}), std::invalid_argument);  // phi(1) != 1
    CHECK_THROWS_AS(table_fn({0.5, 1.0, 2.0}, {2.0, 1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("phi spec parsing") {
    CHECK(parse_phi("pow:2").spec == "pow:2");
    CHECK(parse_phi("pow:-0.5")(4.0) == Catch::Approx(0.5));
    CHECK(parse_phi("expm1").spec == "expm1");
    CHECK_THROWS_AS(parse_phi("nope"), std::invalid_argument);
}

TEST_CASE("symmetric integrability condition") {
    // p in (-1, 0): integrable with I(s) -> 0
    IntegrabilityReport ok = check_symmetric_integrability(power_law(-0.5), 2);
    CHECK(ok.satisfied);
    for (double v : ok.values) CHECK(std::isfinite(v));
    // I(s) = s^p C_{2,p}: check the first value against the closed form
    double c = ok.values[0];
    CHECK(ok.values[1] == Catch::Approx(c * std::pow(10.0, -0.5)).epsilon(1e-8));

    // p <= -1 diverges
    IntegrabilityReport bad = check_symmetric_integrability(power_law(-2.0), 2);
    CHECK_FALSE(bad.satisfied);
    CHECK(std::isinf(bad.values[0]));

    // increasing phi has no singularity but I(s) grows: not satisfied
    IntegrabilityReport inc = check_symmetric_integrability(power_law(1.0), 2);
    CHECK_FALSE(inc.satisfied);

    IntegrabilityReport d3 = check_symmetric_integrability(power_law(-0.5), 3);
    CHECK(d3.satisfied);
}
