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

#include "nff/sources.hpp"
#include "nff/errors.hpp"

#include <algorithm>
#include <string>

namespace nff
{
    namespace
    {
        constexpr double unit_tolerance = 1e-12;

        void require_unit(const Vec3 &v, const char *what)
        {
            if (std::abs(norm(v) - 1.0) > unit_tolerance)
                throw PreconditionError(std::string(what) + " must be a unit vector");
        }
    } // namespace

    ArrayGeometry::ArrayGeometry(std::vector<Vec3> positions, Vec3 boresight, double spacing, Vec3 orientation)
        : positions_(std::move(positions)), boresight_(boresight), spacing_(spacing), orientation_(orientation)
    {
        if (positions_.empty())
            throw PreconditionError("array needs at least one element");
        require_unit(boresight_, "boresight normal");
        require_unit(orientation_, "element orientation");

        Vec3 mean;
        double scale = 1.0;
        for (const auto &p : positions_)
        {
            if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
                throw PreconditionError("element positions must be finite");
            mean += p;
            scale = std::max(scale, norm(p));
        }
        mean = (1.0 / static_cast<double>(positions_.size())) * mean;
        if (norm(mean) > 1e-12 * scale)
            throw PreconditionError("array must be centred on the reference point (origin)");
    }

    ArrayGeometry ArrayGeometry::uniform_linear(std::size_t count, double spacing)
    {
        if (count == 0)
            throw PreconditionError("array needs at least one element");
        if (!(spacing > 0.0) && count > 1)
            throw PreconditionError("element spacing must be positive");
        std::vector<Vec3> pos(count);
        const double centre = 0.5 * static_cast<double>(count + 1);
        for (std::size_t n = 0; n < count; ++n)
            pos[n] = {0.0, (static_cast<double>(n + 1) - centre) * spacing, 0.0};
        return ArrayGeometry(std::move(pos), {1.0, 0.0, 0.0}, spacing);
    }

    double ArrayGeometry::largest_dimension() const
    {
        double d = 0.0;
        for (std::size_t i = 0; i < positions_.size(); ++i)
            for (std::size_t j = i + 1; j < positions_.size(); ++j)
                d = std::max(d, norm(positions_[i] - positions_[j]));
        return d;
    }

    double ArrayGeometry::radius() const
    {
        double r = 0.0;
        for (const auto &p : positions_)
            r = std::max(r, norm(p));
        return r;
    }

    bool ArrayGeometry::collinear_axis(Vec3 &axis) const
    {
        const double rad = radius();
        if (rad == 0.0)
        {
            axis = {1.0, 0.0, 0.0};
            return true;
        }
        const auto far = std::max_element(positions_.begin(), positions_.end(),
                                          [](const Vec3 &a, const Vec3 &b) { return norm(a) < norm(b); });
        const Vec3 u = (1.0 / norm(*far)) * *far;
        for (const auto &p : positions_)
            if (norm(cross(u, p)) > 1e-12 * rad)
                return false;
        axis = u;
        return true;
    }

    FieldSample dipole_field(const DipoleElement &element, const Vec3 &point, const WaveContext &ctx)
    {
        const Vec3 rel = point - element.position;
        const double dist = norm(rel);
        if (dist < singularity_radius)
            throw SingularityError("field evaluated within 1e-9 wavelengths of a dipole element");

        const Vec3 rhat = (1.0 / dist) * rel;
        const Vec3 &u = element.orientation;
        const double cos_loc = dot(u, rhat);
        const double k = ctx.wavenumber;
        const double kr = k * dist;
        const cplx il = ctx.dipole_moment * element.moment;
        const cplx j(0.0, 1.0);
        const cplx inv_jkr = 1.0 / (j * kr);
        const cplx phase = std::polar(1.0, -kr);

        const cplx h_coef = phase * (j * k * il / (4.0 * pi * dist)) * (1.0 + inv_jkr);
        const cplx er_coef =
            phase * (ctx.impedance * il / (2.0 * pi * dist * dist)) * (1.0 + inv_jkr) * cos_loc;
        const cplx et_coef = phase * (j * ctx.impedance * k * il / (4.0 * pi * dist)) *
                             (1.0 + inv_jkr - 1.0 / (kr * kr));

        // sin(theta) theta_hat = cos(theta) rhat - u and sin(theta) phi_hat = u x rhat.
        const Vec3 polar = cos_loc * rhat - u;
        const Vec3 azimuthal = cross(u, rhat);

        FieldSample out;
        out.h = h_coef * to_complex(azimuthal);
        out.e = er_coef * to_complex(rhat) + et_coef * to_complex(polar);
        return out;
    }

    FieldSample array_field(const ArrayGeometry &geometry, std::span<const cplx> weights, const Vec3 &point,
                            const WaveContext &ctx)
    {
        if (weights.size() != geometry.size())
            throw PreconditionError("excitation vector length does not match the number of elements");
        FieldSample total;
        DipoleElement element;
        element.orientation = geometry.orientation();
        for (std::size_t n = 0; n < geometry.size(); ++n)
        {
            element.position = geometry.position(n);
            const FieldSample f = dipole_field(element, point, ctx);
            total.e += weights[n] * f.e;
            total.h += weights[n] * f.h;
        }
        return total;
    }

    ExcitationVector ff_precoder(const ArrayGeometry &geometry, const Direction &direction, const WaveContext &ctx)
    {
        const Vec3 rhat = unit_vector(direction);
        ExcitationVector w(geometry.size());
        for (std::size_t n = 0; n < geometry.size(); ++n)
            w[n] = std::polar(1.0, -ctx.wavenumber * dot(geometry.position(n), rhat));
        return w;
    }

    ExcitationVector nf_precoder(const ArrayGeometry &geometry, const Vec3 &focus, const WaveContext &ctx)
    {
        const double r = norm(focus);
        const Vec3 rhat = r > 0.0 ? (1.0 / r) * focus : Vec3{1.0, 0.0, 0.0};
        // Common phase k r split off so the element-to-element differences keep
        // full precision at large focal distances.
        const cplx common = std::polar(1.0, ctx.wavenumber * r);
        ExcitationVector w(geometry.size());
        for (std::size_t n = 0; n < geometry.size(); ++n)
        {
            const Vec3 &rn = geometry.position(n);
            if (norm(focus - rn) < singularity_radius)
                throw SingularityError("beamfocusing point coincides with an array element");
            w[n] = common * std::polar(1.0, ctx.wavenumber * stable_excess_path(r, rhat, rn));
        }
        return w;
    }

} // namespace nff
