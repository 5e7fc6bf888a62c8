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

#include "nff/farfield.hpp"
#include "nff/errors.hpp"

#include <string>

namespace nff
{
    AngularFieldDistribution analytic_angular_distribution(const ArrayGeometry &geometry,
                                                           std::span<const cplx> weights,
                                                           const Direction &direction, const WaveContext &ctx)
    {
        if (weights.size() != geometry.size())
            throw PreconditionError("excitation vector length does not match the number of elements");
        const Vec3 rhat = unit_vector(direction);
        const Vec3 &u = geometry.orientation();
        const double k = ctx.wavenumber;

        cplx array_factor = 0.0;
        for (std::size_t n = 0; n < geometry.size(); ++n)
            array_factor += weights[n] * std::polar(1.0, k * dot(rhat, geometry.position(n)));

        const cplx elem = std::sqrt(ctx.impedance) * cplx(0.0, 1.0) * k * ctx.dipole_moment / (4.0 * pi);
        const Vec3 polar = dot(u, rhat) * rhat - u;
        return {direction, (array_factor * elem) * to_complex(polar)};
    }

    SampledDistribution angular_distribution_from_sample(const FieldSample &sample, const Direction &direction,
                                                         double r_ff, const WaveContext &ctx)
    {
        if (!(r_ff > 0.0))
            throw PreconditionError("far-field sampling radius must be positive");
        const Vec3 rhat = unit_vector(direction);
        const cplx unphase = std::polar(r_ff, ctx.wavenumber * r_ff);
        const double sz = std::sqrt(ctx.impedance);

        SampledDistribution out;
        out.from_e = {direction, (unphase / sz) * sample.e};
        // H_FF = Z0^{-1/2} (rhat x f) e^{-jkr}/r, and (rhat x f) x rhat is the transverse part of f.
        out.from_h = cross((unphase * sz) * sample.h, rhat);

        const double ref = norm(out.from_e.f);
        const double diff = norm(out.from_e.f - out.from_h);
        out.discrepancy = diff == 0.0 ? 0.0 : diff / ref;

        const double tolerance = 10.0 / (ctx.wavenumber * r_ff);
        if (!(out.discrepancy <= tolerance))
            throw InconsistentFarFieldError("E- and H-based angular field distributions disagree (relative " +
                                            std::to_string(out.discrepancy) + ", tolerance " +
                                            std::to_string(tolerance) + ")");
        return out;
    }

    AngularFieldDistribution sample_angular_distribution(const FieldProvider &provider, const Direction &direction,
                                                         double r_ff, const WaveContext &ctx)
    {
        const FieldSample s = provider(spherical_to_cartesian({r_ff, direction}));
        return angular_distribution_from_sample(s, direction, r_ff, ctx).from_e;
    }

    FieldSample auxiliary_fields(const AngularFieldDistribution &f, const SphericalPoint &point,
                                 const WaveContext &ctx)
    {
        if (!(point.r > 0.0))
            throw PreconditionError("auxiliary far fields are undefined at r = 0");
        const Vec3 rhat = unit_vector(f.direction);
        if (norm(unit_vector(point.direction) - rhat) > 1e-12)
            throw PreconditionError("point does not lie on the test line of the angular field distribution");

        const cplx spread = std::polar(1.0 / point.r, -ctx.wavenumber * point.r);
        const double sz = std::sqrt(ctx.impedance);
        FieldSample out;
        out.e = (sz * spread) * f.f;
        out.h = (spread / sz) * cross(rhat, f.f);
        return out;
    }

} // namespace nff
