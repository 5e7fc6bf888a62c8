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

#include "nff/boundaries.hpp"
#include "nff/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

namespace nff
{
    std::string to_string(BoundaryKind k)
    {
        switch (k)
        {
        case BoundaryKind::QR:
            return "QR";
        case BoundaryKind::AR:
            return "AR";
        case BoundaryKind::UP:
            return "UP";
        case BoundaryKind::EN:
            return "EN";
        case BoundaryKind::EP:
            return "EP";
        case BoundaryKind::WC:
            return "WC";
        }
        return "?";
    }

    std::optional<BoundaryKind> parse_boundary_kind(std::string_view name)
    {
        std::string up(name);
        for (auto &ch : up)
            ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        for (auto k : {BoundaryKind::QR, BoundaryKind::AR, BoundaryKind::UP, BoundaryKind::EN, BoundaryKind::EP,
                       BoundaryKind::WC})
            if (to_string(k) == up)
                return k;
        return std::nullopt;
    }

    double BoundarySpec::default_threshold(BoundaryKind kind)
    {
        switch (kind)
        {
        case BoundaryKind::QR:
            return 0.0;
        case BoundaryKind::AR:
            return 0.125 * pi;
        case BoundaryKind::UP:
            return 0.9;
        case BoundaryKind::EN:
            return 1.05;
        case BoundaryKind::EP:
            return 0.99;
        case BoundaryKind::WC:
            return 0.001;
        }
        return 0.0;
    }

    void validate(const BoundarySpec &spec)
    {
        const double t = spec.threshold;
        switch (spec.kind)
        {
        case BoundaryKind::QR:
            return;
        case BoundaryKind::AR:
            if (!(t > 0.0))
                throw PreconditionError("AR phase threshold must be positive");
            return;
        case BoundaryKind::UP:
            if (!(t > 0.0 && t < 1.0))
                throw PreconditionError("UP threshold Gamma_th must lie in (0, 1)");
            return;
        case BoundaryKind::EN:
            if (!(t > 1.0) || !std::isfinite(t))
                throw PreconditionError("EN threshold Psi_th must exceed 1");
            return;
        case BoundaryKind::EP:
            if (!(t > 0.0) || !std::isfinite(t))
                throw PreconditionError("EP threshold Upsilon_th must be positive");
            return;
        case BoundaryKind::WC:
            if (!(t > 0.0) || !std::isfinite(t))
                throw PreconditionError("WC threshold Xi_th must be positive");
            return;
        }
    }

    double quasi_rayleigh(double largest_dimension, const WaveContext &ctx)
    {
        if (!(largest_dimension >= 0.0))
            throw PreconditionError("largest dimension must be nonnegative");
        return 2.0 * largest_dimension * largest_dimension / ctx.wavelength;
    }

    double phi_excess(const ArrayGeometry &geometry, const SphericalPoint &point, const WaveContext &ctx)
    {
        if (!(point.r > 0.0))
            throw PreconditionError("Phi needs r > 0");
        const Vec3 rhat = unit_vector(point.direction);
        double worst = 0.0;
        for (const auto &rn : geometry.positions())
            worst = std::max(worst, plane_wave_residual(point.r, rhat, rn));
        return ctx.wavenumber * worst;
    }

    double gamma_uniform_power(const ArrayGeometry &geometry, const SphericalPoint &point)
    {
        const Vec3 p = spherical_to_cartesian(point);
        const Vec3 &n_hat = geometry.boresight();
        const std::size_t count = geometry.size();

        std::vector<double> proj(count), dist(count);
        for (std::size_t n = 0; n < count; ++n)
        {
            const Vec3 rel = p - geometry.position(n);
            dist[n] = norm(rel);
            if (dist[n] < singularity_radius)
                throw SingularityError("uniform-power ratio evaluated on an array element");
            proj[n] = dot(rel, n_hat);
        }

        const double scale = point.r + geometry.radius();
        const auto [pmin, pmax] = std::minmax_element(proj.begin(), proj.end());
        const bool common = (*pmax - *pmin) <= 1e-12 * scale;

        double gmin = std::numeric_limits<double>::infinity(), gmax = 0.0;
        if (common)
        {
            for (std::size_t n = 0; n < count; ++n)
            {
                const double g = 1.0 / (dist[n] * dist[n] * dist[n]);
                gmin = std::min(gmin, g);
                gmax = std::max(gmax, g);
            }
        }
        else
        {
            if (*pmin < 0.0 && *pmax > 0.0)
                throw UndefinedProjectionError("uniform-power ratio undefined: element projections change sign");
            for (std::size_t n = 0; n < count; ++n)
            {
                const double g = std::abs(proj[n]) / (dist[n] * dist[n] * dist[n]);
                gmin = std::min(gmin, g);
                gmax = std::max(gmax, g);
            }
        }
        return gmax > 0.0 ? gmin / gmax : 1.0;
    }

    double psi_gain_ratio(const ArrayGeometry &geometry, const SphericalPoint &point, const WaveContext &ctx)
    {
        const Vec3 p = spherical_to_cartesian(point);
        const Vec3 rhat = unit_vector(point.direction);
        const ExcitationVector w_nf = nf_precoder(geometry, p, ctx);
        const ExcitationVector w_ff = ff_precoder(geometry, point.direction, ctx);

        // h_n = exp(-jkr) exp(-jk(|r - r_n| - r)) / |r - r_n|; the common factor
        // is applied once so the per-element phases stay exact at large r.
        const cplx common = std::polar(1.0, -ctx.wavenumber * point.r);
        cplx gain_nf = 0.0, gain_ff = 0.0;
        for (std::size_t n = 0; n < geometry.size(); ++n)
        {
            const Vec3 &rn = geometry.position(n);
            const double dist = norm(p - rn);
            const cplx h = common * std::polar(1.0 / dist, -ctx.wavenumber * stable_excess_path(point.r, rhat, rn));
            gain_nf += h * w_nf[n];
            gain_ff += h * w_ff[n];
        }
        return std::abs(gain_nf) / std::abs(gain_ff);
    }

    double upsilon_power(const ArrayGeometry &geometry, const SphericalPoint &point)
    {
        const Vec3 p = spherical_to_cartesian(point);
        double sum = 0.0;
        for (const auto &rn : geometry.positions())
        {
            const Vec3 rel = p - rn;
            const double d2 = dot(rel, rel);
            if (d2 < singularity_radius * singularity_radius)
                throw SingularityError("equi-power ratio evaluated on an array element");
            sum += point.r * point.r / d2;
        }
        return sum / static_cast<double>(geometry.size());
    }

    namespace
    {
        constexpr int xi_grid_points = 2001;

        // |exp(-jk e(s))/D - 1/r| for an element at signed offset t on the axis,
        // with D = |r a - r_n| and e = D - (r - s t); needs r > |t|.
        double xi_term(double r, double t, double s, double k)
        {
            const double dist = std::sqrt(std::max(0.0, r * r - 2.0 * r * s * t + t * t));
            const double plane = r - s * t;
            const double residual = t * t * (1.0 - s * s) / (dist + plane);
            const double dist_minus_r = t * (t - 2.0 * r * s) / (dist + r);
            const cplx v = expm1_neg_j(k * residual) / dist - dist_minus_r / (r * dist);
            return std::abs(v);
        }

        double xi_element_max(double r, double t, double k)
        {
            if (t == 0.0)
                return 0.0;
            const double step = 2.0 / (xi_grid_points - 1);
            int best = 0;
            double best_val = -1.0;
            for (int i = 0; i < xi_grid_points; ++i)
            {
                const double s = -1.0 + step * i;
                const double v = xi_term(r, t, s, k);
                if (v > best_val)
                {
                    best_val = v;
                    best = i;
                }
            }
            // Golden-section refinement on the neighbouring grid cells.
            const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
            double a = std::max(-1.0, -1.0 + step * (best - 1));
            double b = std::min(1.0, -1.0 + step * (best + 1));
            double c = b - golden * (b - a);
            double d = a + golden * (b - a);
            double fc = xi_term(r, t, c, k), fd = xi_term(r, t, d, k);
            for (int it = 0; it < 60 && (b - a) > 1e-13; ++it)
            {
                if (fc > fd)
                {
                    b = d;
                    d = c;
                    fd = fc;
                    c = b - golden * (b - a);
                    fc = xi_term(r, t, c, k);
                }
                else
                {
                    a = c;
                    c = d;
                    fc = fd;
                    d = a + golden * (b - a);
                    fd = xi_term(r, t, d, k);
                }
            }
            return std::max({best_val, fc, fd});
        }

        struct AxisOffsets
        {
            std::vector<double> offsets; // distinct |t_n|; Xi is symmetric in t -> -t
            double radius = 0.0;
        };

        AxisOffsets axis_offsets(const ArrayGeometry &geometry)
        {
            Vec3 axis;
            if (!geometry.collinear_axis(axis))
                throw PreconditionError("worst-case mismatch is implemented for collinear arrays only");
            AxisOffsets out;
            for (const auto &rn : geometry.positions())
                out.offsets.push_back(std::abs(dot(rn, axis)));
            std::sort(out.offsets.begin(), out.offsets.end());
            out.offsets.erase(std::unique(out.offsets.begin(), out.offsets.end()), out.offsets.end());
            out.radius = out.offsets.back();
            return out;
        }

        double xi_normalized(const AxisOffsets &ax, double r, double k)
        {
            if (!(r > ax.radius))
                throw PreconditionError("worst-case mismatch needs r beyond the outermost element");
            double worst = 0.0;
            for (const double t : ax.offsets)
                worst = std::max(worst, xi_element_max(r, t, k));
            return worst;
        }
    } // namespace

    double xi_worst_mismatch(const ArrayGeometry &geometry, double r, const WaveContext &ctx)
    {
        return xi_normalized(axis_offsets(geometry), r, ctx.wavenumber) / ctx.wavelength_m;
    }

    BoundaryResult d_qr(const ArrayGeometry &geometry, const WaveContext &ctx)
    {
        BoundaryResult out;
        out.status = BoundaryStatus::Found;
        out.value = quasi_rayleigh(geometry.largest_dimension(), ctx);
        out.degenerate = geometry.size() == 1;
        return out;
    }

    BoundaryResult d_ar(const ArrayGeometry &geometry, const Direction &direction, const WaveContext &ctx,
                        double threshold, const SearchBracket &bracket)
    {
        validate({BoundaryKind::AR, threshold});
        const auto scan = [&](double r) { return phi_excess(geometry, {r, direction}, ctx); };
        auto out = find_first_below(scan, threshold, bracket);
        out.degenerate = out.degenerate || geometry.size() == 1;
        return out;
    }

    BoundaryResult d_up(const ArrayGeometry &geometry, const Direction &direction, const WaveContext &ctx,
                        double gamma_th, const SearchBracket &bracket)
    {
        (void)ctx;
        validate({BoundaryKind::UP, gamma_th});
        const auto scan = [&](double r) { return -gamma_uniform_power(geometry, {r, direction}); };
        return find_first_below(scan, -gamma_th, bracket);
    }

    BoundaryResult d_en(const ArrayGeometry &geometry, const Direction &direction, const WaveContext &ctx,
                        double psi_th, const SearchBracket &bracket)
    {
        validate({BoundaryKind::EN, psi_th});
        const auto scan = [&](double r) { return psi_gain_ratio(geometry, {r, direction}, ctx); };
        return find_last_above(scan, psi_th, bracket);
    }

    BoundaryResult d_ep(const ArrayGeometry &geometry, const Direction &direction, const WaveContext &ctx,
                        double upsilon_th, const SearchBracket &bracket)
    {
        (void)ctx;
        validate({BoundaryKind::EP, upsilon_th});
        const auto scan = [&](double r) { return -upsilon_power(geometry, {r, direction}); };
        return find_last_above(scan, -upsilon_th, bracket);
    }

    void check_decreasing_tail(std::span<const double> r, std::span<const double> values, double tail_start)
    {
        if (r.size() != values.size() || r.empty())
            throw PreconditionError("tail check needs matching, non-empty samples");
        std::size_t first = r.size();
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] >= tail_start)
            {
                first = i;
                break;
            }
        if (first + 1 >= r.size())
            throw TailNotMonotoneError("too few samples in the tail to verify a decrease");
        for (std::size_t i = first + 1; i < r.size(); ++i)
            if (values[i] > values[i - 1] * (1.0 + 1e-9))
                throw TailNotMonotoneError("worst-case mismatch increases at r = " + std::to_string(r[i]) +
                                           " in the last scanned decade");
        if (!(values.back() < values[first]) && values.back() != 0.0) // identically zero is fine
            throw TailNotMonotoneError("worst-case mismatch does not decrease over the last scanned decade");
    }

    WorstCaseProfile::WorstCaseProfile(const ArrayGeometry &geometry, const WaveContext &ctx,
                                       const SearchBracket &bracket)
        : geometry_(geometry), ctx_(ctx), bracket_(bracket)
    {
        if (!(bracket.lo > 0.0) || !(bracket.hi > bracket.lo) || bracket.points_per_decade < 100)
            throw PreconditionError("worst-case scan needs 0 < lo < hi and >= 100 points per decade");
        const AxisOffsets ax = axis_offsets(geometry);
        const double start = std::max(bracket.lo, ax.radius * (1.0 + 1e-9));
        if (!(bracket.hi > 10.0 * start))
            throw PreconditionError("worst-case scan needs at least one decade beyond the array");

        r_ = log_grid(start, bracket.hi, bracket.points_per_decade);
        xi_.resize(r_.size());
        for (std::size_t i = 0; i < r_.size(); ++i)
            xi_[i] = xi_normalized(ax, r_[i], ctx.wavenumber) / ctx.wavelength_m;

        // The suffix maximum beyond bracket.hi is bounded by Xi(hi) only if Xi
        // is already decreasing there.
        check_decreasing_tail(r_, xi_, bracket.hi / 10.0);

        suffix_max_.resize(r_.size());
        double running = 0.0;
        for (std::size_t i = r_.size(); i-- > 0;)
        {
            running = std::max(running, xi_[i]);
            suffix_max_[i] = running;
        }
    }

    BoundaryResult WorstCaseProfile::boundary(double xi_th) const
    {
        validate({BoundaryKind::WC, xi_th});
        BoundaryResult out;
        out.bracket_lo = r_.front();
        out.bracket_hi = r_.back();
        for (std::size_t i = 1; i < r_.size(); ++i)
            if ((xi_[i] < xi_th) != (xi_[i - 1] < xi_th))
                ++out.crossings;

        std::size_t idx = r_.size();
        for (std::size_t i = 0; i < r_.size(); ++i)
            if (suffix_max_[i] < xi_th)
            {
                idx = i;
                break;
            }
        if (idx == r_.size())
            return out; // NotFound within the scan
        out.status = BoundaryStatus::Found;
        if (idx == 0)
        {
            out.value = r_[0];
            out.degenerate = true;
            return out;
        }

        // Within one grid cell Xi is taken as monotone, so the envelope equals
        // max(Xi(r), suffix_max[idx]) and only Xi(r) < Xi_th needs checking.
        const AxisOffsets ax = axis_offsets(geometry_);
        const auto scan = [&](double r) { return xi_normalized(ax, r, ctx_.wavenumber) / ctx_.wavelength_m; };
        double outside = r_[idx - 1], inside = r_[idx];
        for (int it = 0; it < 200 && (inside - outside) > 1e-7 * inside; ++it)
        {
            const double mid = 0.5 * (outside + inside);
            if (scan(mid) < xi_th)
                inside = mid;
            else
                outside = mid;
        }
        out.value = inside;
        return out;
    }

    BoundaryResult d_wc(const ArrayGeometry &geometry, const WaveContext &ctx, double xi_th,
                        const SearchBracket &bracket)
    {
        validate({BoundaryKind::WC, xi_th});
        return WorstCaseProfile(geometry, ctx, bracket).boundary(xi_th);
    }

    BoundaryResult evaluate_boundary(const BoundarySpec &spec, const ArrayGeometry &geometry,
                                     const Direction &direction, const WaveContext &ctx,
                                     const SearchBracket &bracket)
    {
        switch (spec.kind)
        {
        case BoundaryKind::QR:
            return d_qr(geometry, ctx);
        case BoundaryKind::AR:
            return d_ar(geometry, direction, ctx, spec.threshold, bracket);
        case BoundaryKind::UP:
            return d_up(geometry, direction, ctx, spec.threshold, bracket);
        case BoundaryKind::EN:
            return d_en(geometry, direction, ctx, spec.threshold, bracket);
        case BoundaryKind::EP:
            return d_ep(geometry, direction, ctx, spec.threshold, bracket);
        case BoundaryKind::WC:
            return d_wc(geometry, ctx, spec.threshold, bracket);
        }
        throw PreconditionError("unknown boundary kind");
    }

} // namespace nff
