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

// Single-distance near/far-field boundary estimates for antenna arrays:
//
//   QR  quasi-Rayleigh distance          2 D_S^2 / lambda
//   AR  direction-dependent Rayleigh     inf{r : Phi(r) <= pi/8}
//   UP  uniform-power distance           inf{r : Gamma(r) >= Gamma_th}
//   EN  effective near-field boundary    sup{r : Psi(r) >= Psi_th}
//   EP  equi-power-line distance         sup{r : Upsilon(r) <= Upsilon_th}
//   WC  worst-case element mismatch      inf{r : sup_{r' >= r} Xi(r') < Xi_th}
//
// Where a criterion crosses its threshold several times, the sup-type
// boundaries (EN, EP) take the last crossing.

#ifndef NFF_BOUNDARIES_HPP
#define NFF_BOUNDARIES_HPP

#include "nff/search.hpp"
#include "nff/sources.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nff
{
    enum class BoundaryKind
    {
        QR,
        AR,
        UP,
        EN,
        EP,
        WC
    };

    std::string to_string(BoundaryKind k);
    std::optional<BoundaryKind> parse_boundary_kind(std::string_view name); // case-insensitive

    struct BoundarySpec
    {
        BoundaryKind kind = BoundaryKind::QR;
        // Gamma_th, Psi_th, Upsilon_th, or Xi_th (1/m); pi/8 for AR; unused for QR.
        double threshold = 0.0;

        static double default_threshold(BoundaryKind kind);
    };

    // Throws PreconditionError when the threshold is outside the kind's domain.
    void validate(const BoundarySpec &spec);

    double quasi_rayleigh(double largest_dimension, const WaveContext &ctx);

    // Phi = max_n k (|r - r_n| - |r| + rhat^T r_n), radians, >= 0.
    double phi_excess(const ArrayGeometry &geometry, const SphericalPoint &point, const WaveContext &ctx);

    // Gamma = min_n g_n / max_n g_n with g_n = (r - r_n)^T n / |r - r_n|^3. A
    // projection shared by every element (always the case for planar arrays,
    // including zero on the side line) cancels. Throws UndefinedProjectionError
    // for mixed signs.
    double gamma_uniform_power(const ArrayGeometry &geometry, const SphericalPoint &point);

    // Psi = |h^T w_NF| / |h^T w_FF| with h_n = exp(-j k |r - r_n|) / |r - r_n|.
    double psi_gain_ratio(const ArrayGeometry &geometry, const SphericalPoint &point, const WaveContext &ctx);

    // Upsilon = (r^2 / N) sum_n 1 / |r - r_n|^2.
    double upsilon_power(const ArrayGeometry &geometry, const SphericalPoint &point);

    // Xi(r) = max_n max_{|a|=1} |exp(-jk|ra - r_n|)/|ra - r_n| - exp(-jk(r - a^T r_n))/r|,
    // in 1/m (ctx.wavelength_m sets the physical scale). Collinear arrays only:
    // the inner maximum reduces to s = a^T axis in [-1, 1]. Requires r > max |r_n|.
    double xi_worst_mismatch(const ArrayGeometry &geometry, double r, const WaveContext &ctx);

    BoundaryResult d_qr(const ArrayGeometry &geometry, const WaveContext &ctx);
    BoundaryResult d_ar(const ArrayGeometry &geometry, const Direction &direction, const WaveContext &ctx,
                        double threshold = 0.125 * pi, const SearchBracket &bracket = {});
    BoundaryResult d_up(const ArrayGeometry &geometry, const Direction &direction, const WaveContext &ctx,
                        double gamma_th, const SearchBracket &bracket = {});
    BoundaryResult d_en(const ArrayGeometry &geometry, const Direction &direction, const WaveContext &ctx,
                        double psi_th, const SearchBracket &bracket = {});
    BoundaryResult d_ep(const ArrayGeometry &geometry, const Direction &direction, const WaveContext &ctx,
                        double upsilon_th, const SearchBracket &bracket = {});
    BoundaryResult d_wc(const ArrayGeometry &geometry, const WaveContext &ctx, double xi_th,
                        const SearchBracket &bracket = {});

    // Throws TailNotMonotoneError unless `values` is non-increasing (1e-9
    // relative slack) over r >= tail_start and strictly lower at the end than
    // at tail_start (or zero throughout). `r` is ascending.
    void check_decreasing_tail(std::span<const double> r, std::span<const double> values, double tail_start);

    // Xi sampled once over the log grid (up to bracket.hi) with its suffix
    // maximum, so several thresholds reuse one scan. Construction throws
    // TailNotMonotoneError if Xi is not decreasing over the last decade.
    class WorstCaseProfile
    {
    public:
        WorstCaseProfile(const ArrayGeometry &geometry, const WaveContext &ctx, const SearchBracket &bracket = {});

        BoundaryResult boundary(double xi_th) const;

        const std::vector<double> &radii() const { return r_; }
        const std::vector<double> &values() const { return xi_; }

    private:
        ArrayGeometry geometry_;
        WaveContext ctx_;
        SearchBracket bracket_;
        std::vector<double> r_;
        std::vector<double> xi_;
        std::vector<double> suffix_max_;
    };

    // Dispatch on spec.kind; `direction` is ignored by QR and WC.
    BoundaryResult evaluate_boundary(const BoundarySpec &spec, const ArrayGeometry &geometry,
                                     const Direction &direction, const WaveContext &ctx,
                                     const SearchBracket &bracket = {});

} // namespace nff

#endif
