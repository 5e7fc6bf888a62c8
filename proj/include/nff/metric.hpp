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

#ifndef NFF_METRIC_HPP
#define NFF_METRIC_HPP

#include "nff/farfield.hpp"

#include <string>
#include <vector>

namespace nff
{
    // F = [Z0^{-1/2} E; Z0^{1/2} H].
    struct StackedField
    {
        std::array<cplx, 6> c{};

        static StackedField from(const FieldSample &fields, const WaveContext &ctx);
        double norm() const;
    };

    // Squared normalized distance (|F - F_FF| / (|F| + |F_FF|))^2 in [0, 1];
    // 0 when both stacked vectors vanish.
    double field_mismatch(const StackedField &field, const StackedField &far_field);
    double field_mismatch(const FieldSample &fields, const FieldSample &far_fields, const WaveContext &ctx);

    enum class Excitation
    {
        Uniform,     // all-ones weights (single elements)
        Beamsteering, // FF BF towards the test-line direction
        Beamfocusing  // NF BF towards each evaluated point
    };

    std::string to_string(Excitation e);

    // Coupling-free dipole array driven by one excitation scheme.
    struct DipoleScenario
    {
        ArrayGeometry geometry = ArrayGeometry::uniform_linear(1, 0.0);
        Excitation excitation = Excitation::Uniform;
        // 0 selects the exact analytic f; a positive radius samples f from the
        // array's own fields at that distance instead.
        double sampling_radius = 0.0;
    };

    // epsilon(r) on the test line through `point`; weights and f are rebuilt per
    // point under beamfocusing.
    double approximation_error(const DipoleScenario &scenario, const SphericalPoint &point, const WaveContext &ctx);

    struct CurvePoint
    {
        double r = 0.0; // wavelengths
        double epsilon = 0.0;
    };

    struct ErrorCurve
    {
        std::vector<CurvePoint> points; // strictly increasing r
        Direction direction;
        std::string excitation;
        std::string source;
    };

    // One epsilon per grid radius, in grid order. Throws PreconditionError for a
    // grid that is not strictly increasing and positive, and for grid points on
    // top of an array element.
    ErrorCurve error_sweep(const DipoleScenario &scenario, const Direction &direction, std::span<const double> r_grid,
                           const WaveContext &ctx);

} // namespace nff

#endif
