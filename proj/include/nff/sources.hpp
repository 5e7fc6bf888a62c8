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

#ifndef NFF_SOURCES_HPP
#define NFF_SOURCES_HPP

#include "nff/core.hpp"

#include <span>
#include <vector>

namespace nff
{
    // Electric and magnetic field phasors at one point.
    struct FieldSample
    {
        CVec3 e;
        CVec3 h;
    };

    // Hertzian (infinitesimal) dipole.
    struct DipoleElement
    {
        Vec3 position;             // in wavelengths
        Vec3 orientation{0, 0, 1}; // unit vector
        cplx moment{1.0, 0.0};     // multiplier on WaveContext::dipole_moment
    };

    // Element positions of an antenna array plus its boresight normal.
    class ArrayGeometry
    {
    public:
        ArrayGeometry(std::vector<Vec3> positions, Vec3 boresight, double spacing = 0.0,
                      Vec3 orientation = {0, 0, 1});

        // N elements on the y-axis at y_n = (n - (N+1)/2) d, boresight +x.
        static ArrayGeometry uniform_linear(std::size_t count, double spacing);

        std::size_t size() const { return positions_.size(); }
        std::span<const Vec3> positions() const { return positions_; }
        const Vec3 &position(std::size_t n) const { return positions_[n]; }
        const Vec3 &boresight() const { return boresight_; }
        const Vec3 &orientation() const { return orientation_; }
        double spacing() const { return spacing_; }

        // Largest dimension D_S: the maximum distance between two element
        // centres, i.e. (N-1) d for a ULA.
        double largest_dimension() const;

        // Largest element distance from the origin.
        double radius() const;

        // If every element lies on one line through the origin, returns true
        // and writes the line's unit vector to `axis` (x-axis for N=1 at the origin).
        bool collinear_axis(Vec3 &axis) const;

    private:
        std::vector<Vec3> positions_;
        Vec3 boresight_;
        double spacing_;
        Vec3 orientation_;
    };

    // One complex weight per element.
    using ExcitationVector = std::vector<cplx>;

    // Closed-form fields of a single dipole. Throws SingularityError within
    // 1e-9 wavelengths of the element.
    FieldSample dipole_field(const DipoleElement &element, const Vec3 &point, const WaveContext &ctx);

    // Coupling-free superposition: E = sum_n w_n E_n, H = sum_n w_n H_n over
    // unit-moment dipoles at the element positions, all along the geometry's orientation.
    FieldSample array_field(const ArrayGeometry &geometry, std::span<const cplx> weights, const Vec3 &point,
                            const WaveContext &ctx);

    // Beamsteering weights w_n = exp(-j k r_n^T rhat).
    ExcitationVector ff_precoder(const ArrayGeometry &geometry, const Direction &direction, const WaveContext &ctx);

    // Beamfocusing weights w_n = exp(+j k |focus - r_n|).
    ExcitationVector nf_precoder(const ArrayGeometry &geometry, const Vec3 &focus, const WaveContext &ctx);

    inline constexpr double singularity_radius = 1e-9;

} // namespace nff

#endif
