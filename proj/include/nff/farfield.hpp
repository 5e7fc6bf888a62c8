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

#ifndef NFF_FARFIELD_HPP
#define NFF_FARFIELD_HPP

#include "nff/sources.hpp"

#include <functional>

namespace nff
{
    // Angular field distribution f(theta, phi): the distance-independent vector
    // with E_FF = sqrt(Z0) f exp(-j k r) / r.
    struct AngularFieldDistribution
    {
        Direction direction;
        CVec3 f;
    };

    // True (E, H) of some radiating system as a function of position.
    using FieldProvider = std::function<FieldSample(const Vec3 &)>;

    inline constexpr double default_sampling_radius = 1e6; // wavelengths

    // Exact f of a coupling-free dipole array:
    // f = sum_n w_n exp(+j k rhat^T r_n) sqrt(Z0) j k Il / (4 pi) (cos(theta_loc) rhat - u).
    AngularFieldDistribution analytic_angular_distribution(const ArrayGeometry &geometry,
                                                           std::span<const cplx> weights,
                                                           const Direction &direction, const WaveContext &ctx);

    struct SampledDistribution
    {
        AngularFieldDistribution from_e; // returned estimate
        CVec3 from_h;                    // transverse estimate recovered from H
        double discrepancy = 0.0;        // |f_E,t - f_H| / |f_E|
    };

    // Recover f from one field sample (E, H) taken at r_ff * rhat. Throws
    // InconsistentFarFieldError when the E- and H-based estimates disagree by
    // more than 10 / (k r_ff) relative.
    SampledDistribution angular_distribution_from_sample(const FieldSample &sample, const Direction &direction,
                                                         double r_ff, const WaveContext &ctx);

    AngularFieldDistribution sample_angular_distribution(const FieldProvider &provider, const Direction &direction,
                                                         double r_ff, const WaveContext &ctx);

    // Auxiliary far fields E_FF, H_FF. The point must lie on the test line of
    // f.direction; throws PreconditionError for r <= 0 or a mismatched direction.
    FieldSample auxiliary_fields(const AngularFieldDistribution &f, const SphericalPoint &point,
                                 const WaveContext &ctx);

} // namespace nff

#endif
