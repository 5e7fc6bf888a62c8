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

#include "nff/metric.hpp"
#include "nff/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nff
{
    StackedField StackedField::from(const FieldSample &fields, const WaveContext &ctx)
    {
        const double sz = std::sqrt(ctx.impedance);
        StackedField out;
        for (std::size_t i = 0; i < 3; ++i)
        {
            out.c[i] = fields.e[i] / sz;
            out.c[i + 3] = fields.h[i] * sz;
        }
        return out;
    }

    double StackedField::norm() const
    {
        // Scaled accumulation keeps tiny and huge field magnitudes representable.
        double scale = 0.0;
        for (const auto &v : c)
            scale = std::max({scale, std::abs(v.real()), std::abs(v.imag())});
        if (scale == 0.0 || !std::isfinite(scale))
            return scale;
        double sum = 0.0;
        for (const auto &v : c)
            sum += std::norm(v / scale);
        return scale * std::sqrt(sum);
    }

    double field_mismatch(const StackedField &field, const StackedField &far_field)
    {
        StackedField diff;
        for (std::size_t i = 0; i < 6; ++i)
            diff.c[i] = field.c[i] - far_field.c[i];
        const double denom = field.norm() + far_field.norm();
        if (denom == 0.0)
            return 0.0;
        const double ratio = std::min(diff.norm() / denom, 1.0);
        return ratio * ratio;
    }

    double field_mismatch(const FieldSample &fields, const FieldSample &far_fields, const WaveContext &ctx)
    {
        return field_mismatch(StackedField::from(fields, ctx), StackedField::from(far_fields, ctx));
    }

    std::string to_string(Excitation e)
    {
        switch (e)
        {
        case Excitation::Uniform:
            return "none";
        case Excitation::Beamsteering:
            return "ff-bf";
        case Excitation::Beamfocusing:
            return "nf-bf";
        }
        return "unknown";
    }

    namespace
    {
        ExcitationVector weights_for(const DipoleScenario &s, const Vec3 &point, const Direction &direction,
                                     const WaveContext &ctx)
        {
            switch (s.excitation)
            {
            case Excitation::Beamsteering:
                return ff_precoder(s.geometry, direction, ctx);
            case Excitation::Beamfocusing:
                return nf_precoder(s.geometry, point, ctx);
            case Excitation::Uniform:
                break;
            }
            return ExcitationVector(s.geometry.size(), cplx(1.0, 0.0));
        }

        // Per-sweep cache: f only changes with the point under beamfocusing.
        struct Evaluator
        {
            const DipoleScenario &scenario;
            const Direction &direction;
            const WaveContext &ctx;
            ExcitationVector fixed_weights;
            AngularFieldDistribution fixed_f;

            Evaluator(const DipoleScenario &s, const Direction &d, const WaveContext &c) : scenario(s), direction(d), ctx(c)
            {
                if (s.excitation != Excitation::Beamfocusing)
                {
                    fixed_weights = weights_for(s, Vec3{}, d, c);
                    fixed_f = distribution(fixed_weights);
                }
            }

            AngularFieldDistribution distribution(const ExcitationVector &w) const
            {
                if (scenario.sampling_radius > 0.0)
                {
                    const auto provider = [&](const Vec3 &p) { return array_field(scenario.geometry, w, p, ctx); };
                    return sample_angular_distribution(provider, direction, scenario.sampling_radius, ctx);
                }
                return analytic_angular_distribution(scenario.geometry, w, direction, ctx);
            }

            double operator()(double r) const
            {
                const SphericalPoint sp{r, direction};
                const Vec3 point = spherical_to_cartesian(sp);
                if (scenario.excitation == Excitation::Beamfocusing)
                {
                    const ExcitationVector w = weights_for(scenario, point, direction, ctx);
                    const FieldSample truth = array_field(scenario.geometry, w, point, ctx);
                    return field_mismatch(truth, auxiliary_fields(distribution(w), sp, ctx), ctx);
                }
                const FieldSample truth = array_field(scenario.geometry, fixed_weights, point, ctx);
                return field_mismatch(truth, auxiliary_fields(fixed_f, sp, ctx), ctx);
            }
        };
    } // namespace

    double approximation_error(const DipoleScenario &scenario, const SphericalPoint &point, const WaveContext &ctx)
    {
        if (!(point.r > 0.0))
            throw PreconditionError("approximation error needs r > 0");
        return Evaluator(scenario, point.direction, ctx)(point.r);
    }

    ErrorCurve error_sweep(const DipoleScenario &scenario, const Direction &direction, std::span<const double> r_grid,
                           const WaveContext &ctx)
    {
        for (std::size_t i = 0; i < r_grid.size(); ++i)
        {
            if (!(r_grid[i] > 0.0) || !std::isfinite(r_grid[i]))
                throw PreconditionError("sweep radii must be positive and finite");
            if (i > 0 && !(r_grid[i] > r_grid[i - 1]))
                throw PreconditionError("sweep radii must be strictly increasing");
        }

        ErrorCurve curve;
        curve.direction = direction;
        curve.excitation = to_string(scenario.excitation);
        curve.source = "dipole-ula";
        curve.points.reserve(r_grid.size());

        const Evaluator eval(scenario, direction, ctx);
        for (const double r : r_grid)
        {
            try
            {
                curve.points.push_back({r, eval(r)});
            }
            catch (const SingularityError &)
            {
                std::ostringstream msg;
                msg.precision(17);
                msg << "sweep radius r = " << r << " wavelengths coincides with an array element";
                throw PreconditionError(msg.str());
            }
        }
        return curve;
    }

} // namespace nff
