#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "orliczkit/json_io.hpp"

using namespace orlicz;

TEST_CASE("polygon round trip") {
    std::mt19937_64 rng(501);
    Body K = testutil::random_polygon(rng);
    Body back = body_from_json(body_to_json(K));
    CHECK(hausdorff_distance(K, back) < 1e-14);
}

TEST_CASE("hpolytope input reduces to its bounded polygon") {
    json j = {
        {"kind", "hpolytope"},
        {"normals", {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}, {1.0, 0.0}}},
        {"supports", {1.0, 1.0, 1.0, 1.0, 5.0}},  // last halfplane is redundant
    };
    Body K = body_from_json(j);
    CHECK(volume(K) == Catch::Approx(4.0).epsilon(1e-14));
    CHECK(body_to_json(K)["kind"] == "polygon");
}

TEST_CASE("grid body round trip keeps support and curvature") {
    SphereGrid g = uniform_circle_grid(64);
    std::vector<double> h(64), f(64);
    for (int j = 0; j < 64; ++j) {
        h[j] = 1.0 + 0.1 * std::cos(4.0 * 2.0 * kPi * j / 64.0);
        f[j] = 1.0;
    }
    Body K = Body::grid_body(g, h, f);
    json j = body_to_json(K);
    CHECK(j["grid"] == "uniform-64");
    Body back = body_from_json(j);
    CHECK(back.as_grid().h == h);
    CHECK(back.as_grid().curvature == f);
}

TEST_CASE("star body round trip") {
    SphereGrid g = uniform_circle_grid(32);
    std::vector<double> rho(32, 1.5);
    Body S = Body::star(g, rho);
    json j = body_to_json(S);
    REQUIRE(j.contains("radial"));
    Body back = body_from_json(j);
    CHECK(back.as_star().rho == rho);
    CHECK(volume(back) == Catch::Approx(kPi * 2.25).epsilon(1e-12));
}

TEST_CASE("ball round trip in both dimensions") {
    for (int d : {2, 3}) {
        Body B = Body::ball(d, 0.75);
        Body back = body_from_json(body_to_json(B));
        CHECK(back.is_ball());
        CHECK(back.dim() == d);
        CHECK(back.as_ball().radius == 0.75);
    }
}

TEST_CASE("malformed inputs throw") {
    CHECK_THROWS(body_from_json(json{{"kind", "widget"}}));
    CHECK_THROWS(body_from_json(json{{"kind", "polygon"},
                                     {"vertices", {{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}}}));
    CHECK_THROWS_AS(body_from_json(json{{"kind", "grid"},
                                        {"grid", "uniform-64"},
                                        {"dim", 3},
                                        {"support", json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS(load_body("/nonexistent/body.json"));
}

TEST_CASE("bundled data files load") {
    Body sq = load_body(std::string(TEST_DATA_DIR) + "/square.json");
    CHECK(volume(sq) == Catch::Approx(4.0));
    Body disk = load_body(std::string(TEST_DATA_DIR) + "/disk.json");
    CHECK(disk.is_ball());
    CHECK_THROWS(load_body(std::string(TEST_DATA_DIR) + "/nonconvex.json"));
}
