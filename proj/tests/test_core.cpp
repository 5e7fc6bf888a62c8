// SPDX-License-Identifier: Apache-2.0
//
// nff - near/far-field region analysis for antenna arrays
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nff/core.hpp"
#include "nff/errors.hpp"
#include "test_support.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <doctest.h>

using namespace nff;
using nff::testing::Rng;

namespace
{
    using quad = boost::multiprecision::cpp_bin_float_quad;

    // Direct |r u - rn| - r in 113-bit arithmetic, u = rhat / |rhat| renormalized
    // in extended precision (a double rhat is unit only to ~1e-16, which the
    // direct form would amplify by r). With `plane` set, adds u^T rn.
    double excess_oracle(double r, const Vec3 &rhat, const Vec3 &rn, bool plane = false)
    {
        const quad len = sqrt(quad(rhat.x) * rhat.x + quad(rhat.y) * rhat.y + quad(rhat.z) * rhat.z);
        const quad ux = rhat.x / len, uy = rhat.y / len, uz = rhat.z / len;
        const quad dx = r * ux - rn.x;
        const quad dy = r * uy - rn.y;
        const quad dz = r * uz - rn.z;
        quad v = sqrt(dx * dx + dy * dy + dz * dz) - quad(r);
        if (plane)
            v += ux * rn.x + uy * rn.y + uz * rn.z;
        return static_cast<double>(v);
    }
} // namespace

TEST_SUITE("core")
{
    TEST_CASE("wave context constants")
    {
        const WaveContext ctx;
        CHECK(ctx.wavenumber * ctx.wavelength == doctest::Approx(2.0 * pi).epsilon(1e-15));
        CHECK(ctx.impedance == 376.730313668);
        CHECK(ctx.dipole_moment == 1.0);
        CHECK_THROWS_AS(WaveContext::normalized(1.0, 0.0), PreconditionError);
    }

    TEST_CASE("unit vectors on the axes")
    {
        CHECK(unit_vector(Direction::from_degrees(90, 0)) == Vec3{1, 0, 0});
        CHECK(unit_vector(Direction::from_degrees(90, 90)) == Vec3{0, 1, 0});
        CHECK(unit_vector(Direction::from_degrees(0, 123)) == Vec3{0, 0, 1});
        CHECK(unit_vector(Direction::from_degrees(180, 0)) == Vec3{0, 0, -1});
    }

    TEST_CASE("unit vectors have unit norm")
    {
        Rng rng(11);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i)
        {
            const auto d = Direction::from_radians(testing::uniform(rng, 0, pi), testing::uniform(rng, 0, 2 * pi));
            worst = std::max(worst, std::abs(norm(unit_vector(d)) - 1.0));
        }
        CHECK(worst <= 1e-15);
    }

    TEST_CASE("direction validation and normalization")
    {
        CHECK_THROWS_AS(Direction::from_degrees(-1, 0), PreconditionError);
        CHECK_THROWS_AS(Direction::from_degrees(181, 0), PreconditionError);
        CHECK_THROWS_AS(Direction::from_degrees(std::nan(""), 0), PreconditionError);
        CHECK(Direction::from_degrees(90, 360).phi() == 0.0);
        CHECK(Direction::from_degrees(90, -90).phi_deg() == doctest::Approx(270.0));
        CHECK(Direction::diagonal().phi_deg() == doctest::Approx(45.0));
    }

    TEST_CASE("spherical and cartesian conversion")
    {
        const Vec3 a = spherical_to_cartesian({2.0, Direction::from_degrees(90, 0)});
        CHECK(a == Vec3{2, 0, 0});
        const Vec3 b = spherical_to_cartesian({1.0, Direction::from_degrees(45, 45)});
        CHECK(b.x == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(b.y == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(b.z == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));

        const SphericalPoint origin = cartesian_to_spherical({0, 0, 0});
        CHECK(origin.r == 0.0);
        CHECK(origin.direction.theta() == 0.0);
        CHECK(origin.direction.phi() == 0.0);
        CHECK_THROWS_AS(spherical_to_cartesian({-1.0, Direction{}}), PreconditionError);

        Rng rng(5);
        for (int i = 0; i < 1000; ++i)
        {
            const Vec3 p = testing::log_uniform(rng, 1e-3, 1e6) * testing::random_unit(rng);
            const Vec3 q = spherical_to_cartesian(cartesian_to_spherical(p));
            CHECK(norm(q - p) <= 1e-12 * norm(p));
        }
    }

    TEST_CASE("stable excess path examples")
    {
        CHECK(stable_excess_path(5.0, {1, 0, 0}, {0, 0, 0}) == 0.0);
        const double perp = stable_excess_path(1e6, {1, 0, 0}, {0, 1, 0});
        CHECK(perp == doctest::Approx(excess_oracle(1e6, {1, 0, 0}, {0, 1, 0})).epsilon(1e-15));
        CHECK(perp == doctest::Approx(5e-7).epsilon(1e-6));
        const Vec3 rn{0.3, -0.4, 1.2};
        CHECK(stable_excess_path(10.0, (1.0 / norm(rn)) * rn, rn) == doctest::Approx(-norm(rn)).epsilon(1e-15));
    }

    TEST_CASE("stable excess path against extended precision")
    {
        Rng rng(2024);
        double worst = 0.0;
        for (int i = 0; i < 1000000; ++i)
        {
            const double r = testing::log_uniform(rng, 1e-2, 1e8);
            const Vec3 rhat = testing::random_unit(rng);
            const Vec3 rn = testing::log_uniform(rng, 1e-3, 1e2) * testing::random_unit(rng);
            const double err = std::abs(stable_excess_path(r, rhat, rn) - excess_oracle(r, rhat, rn));
            worst = std::max(worst, err / std::max(norm(rn), 1.0));
        }
        MESSAGE("worst relative deviation " << worst);
        CHECK(worst <= 1e-10);
    }

    TEST_CASE("plane wave residual is nonnegative and accurate")
    {
        Rng rng(7);
        for (int i = 0; i < 10000; ++i)
        {
            const double r = testing::log_uniform(rng, 1e-2, 1e7);
            const Vec3 rhat = testing::random_unit(rng);
            const Vec3 rn = testing::uniform(rng, 0, 40) * testing::random_unit(rng);
            const double v = plane_wave_residual(r, rhat, rn);
            REQUIRE(v >= 0.0);
            const double direct = excess_oracle(r, rhat, rn, true);
            CHECK(std::abs(v - direct) <= 1e-12 * std::max(norm(rn), 1.0));
        }
    }

    TEST_CASE("log grid")
    {
        const auto g = log_grid(0.1, 1e4, 100);
        CHECK(g.size() == 501);
        CHECK(g.front() == 0.1);
        CHECK(g.back() == 1e4);
        for (std::size_t i = 1; i < g.size(); ++i)
            REQUIRE(g[i] > g[i - 1]);
        CHECK(g[100] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK_THROWS_AS(log_grid(0.0, 1.0, 10), PreconditionError);
        CHECK_THROWS_AS(log_grid(2.0, 1.0, 10), PreconditionError);
    }

    TEST_CASE("expm1_neg_j matches exp(-jx) - 1")
    {
        for (double x : {1e-12, 1e-6, 0.3, 2.0, 100.0})
        {
            const cplx ref = std::exp(cplx(0.0, -x)) - 1.0;
            CHECK(std::abs(expm1_neg_j(x) - ref) <= 1e-15 * std::max(1.0, std::abs(ref)) + 1e-16 * x);
        }
        CHECK(std::abs(expm1_neg_j(1e-12) - cplx(-0.5e-24, -1e-12)) <= 1e-28);
    }

    TEST_CASE("complex vector norm homogeneity")
    {
        Rng rng(3);
        for (int i = 0; i < 1000; ++i)
        {
            const CVec3 v{{testing::random_complex(rng), testing::random_complex(rng), testing::random_complex(rng)}};
            const cplx c = testing::random_complex(rng, 10.0);
            CHECK(norm(c * v) == doctest::Approx(std::abs(c) * norm(v)).epsilon(1e-14));
        }
    }
}
