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

// Scenario files, field traces, CSV export and figure reproduction.
//
// Scenario file (key = value, '#' starts a comment):
//
//   source         = dipole-ula | imported-trace
//   n              = 8
//   spacing_lambda = 0.5
//   direction      = front | diagonal | side | <theta_deg>,<phi_deg>
//   excitation     = ff-bf | nf-bf | none
//   grid_lo        = 0.1
//   grid_hi        = 1e4
//   grid_ppd       = 100
//   boundaries     = QR, AR, UP:0.9, EN:1.05, EP:0.99, WC:0.001
//   trace          = path/to/trace.csv   (imported-trace only, relative to the file)
//
// Trace file (CSV):
//
//   # format = nff-trace/1
//   # direction = 90,0
//   # ff_f = re,im,re,im,re,im                 (or)
//   # ff_sample = r_ff, ex_re,ex_im, ..., hz_re,hz_im
//   r_lambda,ex_re,ex_im,ey_re,ey_im,ez_re,ez_im,hx_re,hx_im,hy_re,hy_im,hz_re,hz_im
//   ...

#ifndef NFF_HARNESS_HPP
#define NFF_HARNESS_HPP

#include "nff/boundaries.hpp"
#include "nff/metric.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nff
{
    enum class SourceKind
    {
        DipoleUla,
        ImportedTrace
    };

    std::string to_string(SourceKind s);

    struct GridSpec
    {
        double lo = 0.1; // wavelengths
        double hi = 1e4;
        int points_per_decade = 100;

        std::vector<double> radii() const;
    };

    struct ScenarioConfig
    {
        SourceKind source = SourceKind::DipoleUla;
        std::size_t n = 1;
        double spacing = 0.5; // wavelengths
        Direction direction = Direction::front();
        Excitation excitation = Excitation::Beamsteering;
        GridSpec grid;
        std::vector<BoundarySpec> boundaries;
        std::filesystem::path trace; // resolved path, imported-trace only
    };

    // Throws ParseError (with the 1-based line) for syntax errors, unknown keys
    // and bad values, PreconditionError for inconsistent combinations.
    // `base_dir` resolves a relative trace path.
    ScenarioConfig parse_scenario(std::istream &in, const std::filesystem::path &base_dir = {});
    ScenarioConfig load_scenario(const std::filesystem::path &path);

    // Comma list "QR, AR, UP:0.9"; missing thresholds take the defaults.
    std::vector<BoundarySpec> parse_boundary_list(std::string_view text);

    struct BoundaryOutcome
    {
        BoundarySpec spec;
        BoundaryResult result;
    };

    struct SweepResult
    {
        ErrorCurve curve;
        std::vector<BoundaryOutcome> boundaries;
    };

    struct FieldTraceRow
    {
        double r = 0.0; // wavelengths
        FieldSample fields;
    };

    struct FieldTrace
    {
        Direction direction;
        std::vector<FieldTraceRow> rows; // strictly increasing r
        // Exactly one far-field record is present.
        std::optional<CVec3> ff_f;
        std::optional<double> ff_sample_radius;
        std::optional<FieldSample> ff_sample;
    };

    // Validates schema, finiteness, monotone r and the far-field record.
    // Throws ParseError, PreconditionError or InconsistentFarFieldError.
    FieldTrace parse_trace(std::istream &in);
    FieldTrace import_trace(const std::filesystem::path &path);

    // f used for the trace's auxiliary fields (the E-based estimate for a
    // sampled record, after the E/H cross-check).
    AngularFieldDistribution trace_angular_distribution(const FieldTrace &trace, const WaveContext &ctx);

    ErrorCurve trace_error_curve(const FieldTrace &trace, const WaveContext &ctx);

    // Trace of a dipole scenario on the given radii. The far-field record is the
    // analytic f, or a field sample at `sample_radius` when that is positive.
    // Beamfocusing is rejected: its f changes with r.
    FieldTrace synthesize_trace(const DipoleScenario &scenario, const Direction &direction,
                                std::span<const double> r_grid, const WaveContext &ctx,
                                double sample_radius = 0.0);

    void write_trace(const FieldTrace &trace, std::ostream &out);
    void export_trace(const FieldTrace &trace, const std::filesystem::path &path);

    SweepResult run_sweep(const ScenarioConfig &config, const WaveContext &ctx = {});

    // CSV with 17 significant digits. The path variants throw IoError.
    void write_curve_csv(const ErrorCurve &curve, std::ostream &out);
    void write_boundary_csv(std::span<const BoundaryOutcome> rows, std::ostream &out);
    void export_table(const ErrorCurve &curve, const std::filesystem::path &path);
    void export_table(std::span<const BoundaryOutcome> rows, const std::filesystem::path &path);

    enum class Figure
    {
        Fig4,
        Fig5
    };

    std::optional<Figure> parse_figure(std::string_view name);

    struct ReproduceOptions
    {
        std::filesystem::path out_dir;
        std::optional<std::filesystem::path> traces_dir;
        std::optional<int> grid_ppd; // curve grid override
    };

    // Writes every dipole curve and boundary table of the figure; returns the
    // written files in write order. Traces named like the figure's full-wave
    // curves (e.g. d_2_8_0.csv, p_64_90.csv) are turned into curves as well.
    std::vector<std::filesystem::path> reproduce_reference(Figure figure, const ReproduceOptions &options,
                                                           const WaveContext &ctx = {});

    // %.17g via to_chars; round-trips every double.
    std::string format_double(double v);

} // namespace nff

#endif
