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

#include <string>

namespace nff
{
    WaveContext WaveContext::normalized(double dipole_moment, double wavelength_m)
    {
        if (!(wavelength_m > 0.0))
            throw PreconditionError("physical wavelength must be positive");
        WaveContext ctx;
        ctx.dipole_moment = dipole_moment;
        ctx.wavelength_m = wavelength_m;
        return ctx;
    }

    Direction Direction::from_radians(double theta, double phi)
    {
        if (!std::isfinite(theta) || !std::isfinite(phi))
            throw PreconditionError("direction angles must be finite");
        if (theta < 0.0 || theta > pi)
            throw PreconditionError("polar angle must lie in [0, 180] degrees, got " +
                                    std::to_string(theta * 180.0 / pi));
        Direction d;
        d.theta_ = theta;
        d.phi_ = std::fmod(phi, 2.0 * pi);
        if (d.phi_ < 0.0)
            d.phi_ += 2.0 * pi;
        if (d.phi_ >= 2.0 * pi) // fmod of a tiny negative can round up to 2 pi
            d.phi_ = 0.0;
        return d;
    }

    Direction Direction::from_degrees(double theta_deg, double phi_deg)
    {
        // Exact multiples of 90 degrees map to exact axis vectors in unit_vector.
        return from_radians(theta_deg * (pi / 180.0), phi_deg * (pi / 180.0));
    }

    namespace
    {
        // sin/cos that return exact 0, +-1 at multiples of pi/2.
        void exact_sincos(double a, double &s, double &c)
        {
            const double q = a / (0.5 * pi);
            const double qr = std::nearbyint(q);
            if (std::abs(q - qr) < 1e-15)
            {
                static constexpr double sin_tab[4] = {0.0, 1.0, 0.0, -1.0};
                static constexpr double cos_tab[4] = {1.0, 0.0, -1.0, 0.0};
                const auto idx = static_cast<int>(((static_cast<long long>(qr) % 4) + 4) % 4);
                s = sin_tab[idx];
                c = cos_tab[idx];
                return;
            }
            s = std::sin(a);
            c = std::cos(a);
        }
    } // namespace

    Vec3 unit_vector(const Direction &direction)
    {
        double st, ct, sp, cp;
        exact_sincos(direction.theta(), st, ct);
        exact_sincos(direction.phi(), sp, cp);
        return {st * cp, st * sp, ct};
    }

    Vec3 spherical_to_cartesian(const SphericalPoint &point)
    {
        if (point.r < 0.0)
            throw PreconditionError("radial distance must be nonnegative");
        return point.r * unit_vector(point.direction);
    }

    SphericalPoint cartesian_to_spherical(const Vec3 &point)
    {
        const double r = norm(point);
        if (r == 0.0)
            return {0.0, Direction{}};
        const double theta = std::atan2(std::hypot(point.x, point.y), point.z);
        const double phi = std::atan2(point.y, point.x);
        return {r, Direction::from_radians(theta, phi)};
    }

    double stable_excess_path(double r, const Vec3 &rhat, const Vec3 &rn)
    {
        const double rn_sq = dot(rn, rn);
        if (rn_sq == 0.0)
            return 0.0;
        const double dist = norm(r * rhat - rn);
        const double denom = dist + r;
        if (denom == 0.0)
            return 0.0;
        return (rn_sq - 2.0 * r * dot(rhat, rn)) / denom;
    }

    double plane_wave_residual(double r, const Vec3 &rhat, const Vec3 &rn)
    {
        const double proj = dot(rhat, rn);
        const double dist = norm(r * rhat - rn);
        const double q = r - proj;
        if (q <= 0.0)
            return dist - q; // both terms nonnegative, no cancellation
        // |rn|^2 - (rhat^T rn)^2 is the squared distance of rn from the test line.
        const Vec3 perp = rn - proj * rhat;
        return dot(perp, perp) / (dist + q);
    }

    std::vector<double> log_grid(double lo, double hi, int points_per_decade)
    {
        if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi))
            throw PreconditionError("log grid needs 0 < lo < hi");
        if (points_per_decade < 1)
            throw PreconditionError("log grid needs at least one point per decade");
        const double lo10 = std::log10(lo);
        const double decades = std::log10(hi) - lo10;
        const auto count = static_cast<std::size_t>(std::llround(decades * points_per_decade));
        std::vector<double> grid(count + 1);
        for (std::size_t i = 0; i <= count; ++i)
            grid[i] = std::pow(10.0, lo10 + decades * static_cast<double>(i) / static_cast<double>(count));
        grid.front() = lo;
        grid.back() = hi;
        return grid;
    }

} // namespace nff
