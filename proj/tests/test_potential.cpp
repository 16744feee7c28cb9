// Vector potentials for a uniform B along z: the whole-plane vortex gauge and
// the translatable patch that carries the same field inside a quarter-well.

#include <catch2/catch_amalgamated.hpp>

#include "wavespin/potential.hpp"

using namespace wavespin;
using Catch::Approx;

namespace {
const WellGeometry kWell{10e-9, 10e-9};
}

TEST_CASE("vector potential values at the distinguished points") {
    const auto uni = VectorPotentialSpec::uniform(1.0);
    CHECK(vector_potential(uni, {0.0, 0.0}).x == 0.0);
    CHECK(vector_potential(uni, {0.0, 0.0}).y == 0.0);
    CHECK(vector_potential(uni, {2e-9, 3e-9}).x == Approx(-1.5e-9));
    CHECK(vector_potential(uni, {2e-9, 3e-9}).y == Approx(1e-9));

    // patch centered at (−Lx/2, Ly/2): zero at its own center
    const auto corner = VectorPotentialSpec::patch(1.0, -5e-9, 5e-9, kWell);
    CHECK(vector_potential(corner, {-5e-9, 5e-9}).x == 0.0);
    CHECK(vector_potential(corner, {-5e-9, 5e-9}).y == 0.0);

    // zero outside the support: default half-widths are Lx/2, Ly/2
    const auto center = VectorPotentialSpec::patch(1.0, 0.0, 0.0, kWell);
    CHECK(vector_potential(center, {6e-9, 0.0}).x == 0.0);
    CHECK(vector_potential(center, {6e-9, 0.0}).y == 0.0);
    CHECK(vector_potential(center, {4.9e-9, 0.0}).y != 0.0);

    // support is closed: the boundary belongs to the patch
    CHECK(vector_potential(center, {5e-9, 0.0}).y == Approx(2.5e-9));
}

TEST_CASE("curl reproduces B inside the support") {
    const GridSpec samples{17, 17, false};
    CHECK(curl_check(VectorPotentialSpec::uniform(1.0), kWell, samples) < 1e-10);
    CHECK(curl_check(VectorPotentialSpec::patch(1.0, -5e-9, 5e-9, kWell), kWell, samples) < 1e-10);
    CHECK(curl_check(VectorPotentialSpec::uniform(0.0), kWell, samples) == 0.0);
}

TEST_CASE("linearity in B is exact") {
    for (const Point pt : {Point{1e-9, -2e-9}, Point{-7e-9, 3e-9}}) {
        const Vec2 half = vector_potential(VectorPotentialSpec::uniform(0.5), pt);
        const Vec2 one = vector_potential(VectorPotentialSpec::uniform(1.0), pt);
        const Vec2 two = vector_potential(VectorPotentialSpec::uniform(2.0), pt);
        CHECK(one.x == 2.0 * half.x);
        CHECK(one.y == 2.0 * half.y);
        CHECK(two.x == 4.0 * half.x);
        CHECK(two.y == 4.0 * half.y);
    }
}

TEST_CASE("full-size centered patch equals the uniform gauge pointwise") {
    const auto uni = VectorPotentialSpec::uniform(1.3);
    const auto patch = VectorPotentialSpec::patch(1.3, 0.0, 0.0, kWell, kWell.Lx, kWell.Ly);
    for (const Point& pt : grid_points(kWell, {33, 33, true})) {
        const Vec2 a = vector_potential(uni, pt);
        const Vec2 b = vector_potential(patch, pt);
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
    }
}

TEST_CASE("patch validation") {
    VectorPotentialSpec bad = VectorPotentialSpec::patch(1.0, 0.0, 0.0, kWell);
    bad.half_w_x = 0.0;
    CHECK_THROWS_AS(bad.validate(), validation_error);
    VectorPotentialSpec inf_b = VectorPotentialSpec::uniform(std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(inf_b.validate(), validation_error);
}
