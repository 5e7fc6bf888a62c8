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

#ifndef NFF_CORE_HPP
#define NFF_CORE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace nff
{
    using cplx = std::complex<double>;

    inline constexpr double pi = std::numbers::pi;
    inline constexpr double speed_of_light = 299792458.0; // m/s
    inline constexpr double free_space_impedance = 376.730313668; // ohm

    // Real cartesian 3-vector. Lengths are in wavelengths unless stated otherwise.
    struct Vec3
    {
        double x = 0.0, y = 0.0, z = 0.0;

        constexpr Vec3 &operator+=(const Vec3 &o)
        {
            x += o.x, y += o.y, z += o.z;
            return *this;
        }
        constexpr Vec3 &operator-=(const Vec3 &o)
        {
            x -= o.x, y -= o.y, z -= o.z;
            return *this;
        }
        friend constexpr Vec3 operator+(Vec3 a, const Vec3 &b) { return a += b; }
        friend constexpr Vec3 operator-(Vec3 a, const Vec3 &b) { return a -= b; }
        friend constexpr Vec3 operator-(const Vec3 &a) { return {-a.x, -a.y, -a.z}; }
        friend constexpr Vec3 operator*(double s, const Vec3 &a) { return {s * a.x, s * a.y, s * a.z}; }
        friend constexpr Vec3 operator*(const Vec3 &a, double s) { return s * a; }
        friend constexpr bool operator==(const Vec3 &, const Vec3 &) = default;
    };

    constexpr double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
    constexpr Vec3 cross(const Vec3 &a, const Vec3 &b)
    {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }
    inline double norm(const Vec3 &a) { return std::hypot(a.x, a.y, a.z); }

    // Complex phasor 3-vector (E or H field amplitudes).
    struct CVec3
    {
        std::array<cplx, 3> c{};

        cplx &operator[](std::size_t i) { return c[i]; }
        const cplx &operator[](std::size_t i) const { return c[i]; }

        CVec3 &operator+=(const CVec3 &o)
        {
            for (std::size_t i = 0; i < 3; ++i)
                c[i] += o.c[i];
            return *this;
        }
        CVec3 &operator-=(const CVec3 &o)
        {
            for (std::size_t i = 0; i < 3; ++i)
                c[i] -= o.c[i];
            return *this;
        }
        CVec3 &operator*=(cplx s)
        {
            for (auto &v : c)
                v *= s;
            return *this;
        }
        friend CVec3 operator+(CVec3 a, const CVec3 &b) { return a += b; }
        friend CVec3 operator-(CVec3 a, const CVec3 &b) { return a -= b; }
        friend CVec3 operator*(cplx s, CVec3 a) { return a *= s; }
        friend CVec3 operator*(CVec3 a, cplx s) { return a *= s; }
    };

    inline CVec3 to_complex(const Vec3 &v) { return CVec3{{cplx(v.x), cplx(v.y), cplx(v.z)}}; }

    // Squared Euclidean norm over the six real coordinates.
    inline double norm_sq(const CVec3 &v) { return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]); }
    inline double norm(const CVec3 &v) { return std::sqrt(norm_sq(v)); }

    // Bilinear (non-conjugating) products with a real vector.
    inline cplx dot(const Vec3 &a, const CVec3 &b) { return a.x * b[0] + a.y * b[1] + a.z * b[2]; }
    inline CVec3 cross(const Vec3 &a, const CVec3 &b)
    {
        return CVec3{{a.y * b[2] - a.z * b[1], a.z * b[0] - a.x * b[2], a.x * b[1] - a.y * b[0]}};
    }
    inline CVec3 cross(const CVec3 &a, const Vec3 &b) { return -1.0 * cross(b, a); }

    // Free-space wave constants. Lengths are normalized to the wavelength
    // (wavelength == 1); `wavelength_m` is the physical wavelength and only
    // enters quantities that carry a length dimension of their own.
    struct WaveContext
    {
        double wavelength = 1.0;
        double wavenumber = 2.0 * pi;
        double impedance = free_space_impedance;
        double dipole_moment = 1.0; // I*l, in A*wavelength
        double wavelength_m = speed_of_light / 10.0e9;

        static WaveContext normalized(double dipole_moment = 1.0, double wavelength_m = speed_of_light / 10.0e9);
    };

    // Physicist's convention: theta is the polar angle from +z, phi the azimuth
    // from +x. Stored in radians, theta in [0, pi], phi in [0, 2 pi).
    class Direction
    {
    public:
        Direction() = default;
        static Direction from_degrees(double theta_deg, double phi_deg);
        static Direction from_radians(double theta, double phi);

        double theta() const { return theta_; }
        double phi() const { return phi_; }
        double theta_deg() const { return theta_ * 180.0 / pi; }
        double phi_deg() const { return phi_ * 180.0 / pi; }

        // Named test-line presets in the xy-plane.
        static Direction front() { return from_degrees(90.0, 0.0); }
        static Direction diagonal() { return from_degrees(90.0, 45.0); }
        static Direction side() { return from_degrees(90.0, 90.0); }

    private:
        double theta_ = 0.0;
        double phi_ = 0.0;
    };

    struct SphericalPoint
    {
        double r = 0.0;
        Direction direction;
    };

    Vec3 unit_vector(const Direction &direction);

    Vec3 spherical_to_cartesian(const SphericalPoint &point);

    // The origin maps to r = 0 with the canonical direction theta = phi = 0.
    SphericalPoint cartesian_to_spherical(const Vec3 &point);

    // |r*rhat - rn| - r, evaluated without cancellation for r >> |rn|.
    double stable_excess_path(double r, const Vec3 &rhat, const Vec3 &rn);

    // |r*rhat - rn| - (r - rhat^T rn): path excess of the spherical wave over its
    // plane-wave (parallel-ray) approximation. Nonnegative up to rounding.
    double plane_wave_residual(double r, const Vec3 &rhat, const Vec3 &rn);

    // Logarithmic grid lo * 10^(i / points_per_decade), i = 0..M, ending exactly
    // at hi (M rounded to the nearest integer).
    std::vector<double> log_grid(double lo, double hi, int points_per_decade);

    // exp(-j x) - 1 without cancellation for small x.
    inline cplx expm1_neg_j(double x)
    {
        const double s = std::sin(0.5 * x);
        return {-2.0 * s * s, -std::sin(x)};
    }

} // namespace nff

#endif
