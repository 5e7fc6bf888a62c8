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

#include "nff/harness.hpp"
#include "nff/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace nff
{
    std::string to_string(SourceKind s)
    {
        return s == SourceKind::DipoleUla ? "dipole-ula" : "imported-trace";
    }

    std::vector<double> GridSpec::radii() const
    {
        if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi))
            throw PreconditionError("radial grid needs 0 < grid_lo < grid_hi");
        if (points_per_decade < 1)
            throw PreconditionError("radial grid needs grid_ppd >= 1");
        return log_grid(lo, hi, points_per_decade);
    }

    std::string format_double(double v)
    {
        char buf[40];
        const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
        return std::string(buf, res.ptr);
    }

    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto ws = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
            while (!s.empty() && ws(s.front()))
                s.remove_prefix(1);
            while (!s.empty() && ws(s.back()))
                s.remove_suffix(1);
            return s;
        }

        std::string lower(std::string_view s)
        {
            std::string out(s);
            for (auto &c : out)
                c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            return out;
        }

        std::vector<std::string_view> split(std::string_view s, char sep)
        {
            std::vector<std::string_view> parts;
            std::size_t start = 0;
            for (;;)
            {
                const auto pos = s.find(sep, start);
                parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
                if (pos == std::string_view::npos)
                    return parts;
                start = pos + 1;
            }
        }

        std::optional<double> to_double(std::string_view s)
        {
            s = trim(s);
            if (!s.empty() && s.front() == '+')
                s.remove_prefix(1);
            double v = 0.0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v))
                return std::nullopt;
            return v;
        }

        double require_double(std::string_view s, const std::string &what, std::size_t line)
        {
            const auto v = to_double(s);
            if (!v)
                throw ParseError(what + ": expected a finite number, got '" + std::string(s) + "'", line);
            return *v;
        }

        long long require_integer(std::string_view s, const std::string &what, std::size_t line)
        {
            s = trim(s);
            long long v = 0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
                throw ParseError(what + ": expected an integer, got '" + std::string(s) + "'", line);
            return v;
        }

        Direction parse_direction(std::string_view value, std::size_t line)
        {
            const std::string name = lower(trim(value));
            if (name == "front")
                return Direction::front();
            if (name == "diagonal")
                return Direction::diagonal();
            if (name == "side")
                return Direction::side();
            const auto parts = split(value, ',');
            if (parts.size() != 2)
                throw ParseError("direction: expected front, diagonal, side or 'theta,phi' in degrees", line);
            const double theta = require_double(parts[0], "direction", line);
            const double phi = require_double(parts[1], "direction", line);
            try
            {
                return Direction::from_degrees(theta, phi);
            }
            catch (const PreconditionError &e)
            {
                throw ParseError(std::string("direction: ") + e.what(), line);
            }
        }

        Excitation parse_excitation(std::string_view value, std::size_t line)
        {
            const std::string name = lower(trim(value));
            if (name == "ff-bf")
                return Excitation::Beamsteering;
            if (name == "nf-bf")
                return Excitation::Beamfocusing;
            if (name == "none")
                return Excitation::Uniform;
            throw ParseError("excitation: expected ff-bf, nf-bf or none, got '" + std::string(value) + "'", line);
        }

        std::ofstream open_output(const fs::path &path)
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw IoError("cannot open '" + path.string() + "' for writing");
            return out;
        }

        void finish_output(std::ofstream &out, const fs::path &path)
        {
            out.flush();
            if (!out)
                throw IoError("write to '" + path.string() + "' failed");
        }
    } // namespace

    std::vector<BoundarySpec> parse_boundary_list(std::string_view text)
    {
        std::vector<BoundarySpec> specs;
        if (trim(text).empty())
            return specs;
        for (const auto item : split(text, ','))
        {
            if (item.empty())
                throw PreconditionError("empty entry in boundary list");
            const auto colon = item.find(':');
            const std::string_view name = trim(item.substr(0, colon));
            const auto kind = parse_boundary_kind(name);
            if (!kind)
                throw PreconditionError("unknown boundary kind '" + std::string(name) + "'");
            BoundarySpec spec{*kind, BoundarySpec::default_threshold(*kind)};
            if (colon != std::string_view::npos)
            {
                if (*kind == BoundaryKind::QR)
                    throw PreconditionError("QR takes no threshold");
                const auto v = to_double(item.substr(colon + 1));
                if (!v)
                    throw PreconditionError("bad threshold in '" + std::string(item) + "'");
                spec.threshold = *v;
            }
            validate(spec);
            specs.push_back(spec);
        }
        return specs;
    }

    ScenarioConfig parse_scenario(std::istream &in, const fs::path &base_dir)
    {
        ScenarioConfig cfg;
        std::set<std::string> seen;
        std::map<std::string, std::size_t> where;
        std::string raw;
        std::size_t line_no = 0;
        while (std::getline(in, raw))
        {
            ++line_no;
            std::string_view line = raw;
            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ParseError("expected 'key = value'", line_no);
            const std::string key = lower(trim(line.substr(0, eq)));
            const std::string_view value = trim(line.substr(eq + 1));
            if (key.empty())
                throw ParseError("missing key before '='", line_no);
            if (!seen.insert(key).second)
                throw ParseError("duplicate key '" + key + "'", line_no);
            where[key] = line_no;

            if (key == "source")
            {
                const std::string v = lower(value);
                if (v == "dipole-ula")
                    cfg.source = SourceKind::DipoleUla;
                else if (v == "imported-trace")
                    cfg.source = SourceKind::ImportedTrace;
                else
                    throw ParseError("source: expected dipole-ula or imported-trace, got '" + std::string(value) + "'",
                                     line_no);
            }
            else if (key == "n")
            {
                const long long n = require_integer(value, "n", line_no);
                if (n < 1)
                    throw ParseError("n: must be at least 1", line_no);
                cfg.n = static_cast<std::size_t>(n);
            }
            else if (key == "spacing_lambda")
            {
                cfg.spacing = require_double(value, "spacing_lambda", line_no);
                if (!(cfg.spacing > 0.0))
                    throw ParseError("spacing_lambda: must be positive", line_no);
            }
            else if (key == "direction")
                cfg.direction = parse_direction(value, line_no);
            else if (key == "excitation")
                cfg.excitation = parse_excitation(value, line_no);
            else if (key == "grid_lo")
                cfg.grid.lo = require_double(value, "grid_lo", line_no);
            else if (key == "grid_hi")
                cfg.grid.hi = require_double(value, "grid_hi", line_no);
            else if (key == "grid_ppd")
            {
                const long long ppd = require_integer(value, "grid_ppd", line_no);
                if (ppd < 1 || ppd > 100000)
                    throw ParseError("grid_ppd: must lie in [1, 100000]", line_no);
                cfg.grid.points_per_decade = static_cast<int>(ppd);
            }
            else if (key == "boundaries")
            {
                try
                {
                    cfg.boundaries = parse_boundary_list(value);
                }
                catch (const PreconditionError &e)
                {
                    throw ParseError(std::string("boundaries: ") + e.what(), line_no);
                }
            }
            else if (key == "trace")
            {
                if (value.empty())
                    throw ParseError("trace: empty path", line_no);
                const fs::path p{std::string(value)};
                cfg.trace = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
            }
            else
                throw ParseError("unknown key '" + key + "'", line_no);
        }
        if (in.bad())
            throw IoError("error while reading scenario");

        if (!(cfg.grid.lo > 0.0) || !(cfg.grid.hi > cfg.grid.lo))
            throw ParseError("grid: need 0 < grid_lo < grid_hi",
                             where.count("grid_hi") ? where["grid_hi"] : where["grid_lo"]);

        if (cfg.source == SourceKind::ImportedTrace)
        {
            if (cfg.excitation == Excitation::Beamfocusing)
                throw PreconditionError("excitation nf-bf is not available for imported traces: a trace fixes its "
                                        "excitation at capture time");
            if (cfg.trace.empty())
                throw PreconditionError("source imported-trace needs a 'trace' path");
            if (!cfg.boundaries.empty())
                throw PreconditionError("boundaries need an array geometry and are not available for imported traces");
        }
        else if (!cfg.trace.empty())
            throw PreconditionError("'trace' is only valid with source = imported-trace");
        return cfg;
    }

    ScenarioConfig load_scenario(const fs::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw IoError("cannot open scenario '" + path.string() + "'");
        return parse_scenario(in, path.parent_path());
    }

    // ---------------------------------------------------------------- traces

    namespace
    {
        constexpr std::string_view trace_format = "nff-trace/1";
        constexpr std::string_view trace_columns =
            "r_lambda,ex_re,ex_im,ey_re,ey_im,ez_re,ez_im,hx_re,hx_im,hy_re,hy_im,hz_re,hz_im";
        constexpr double transversality_tolerance = 1e-6;

        CVec3 complex_triplet(const std::vector<double> &v, std::size_t at)
        {
            return CVec3{{cplx(v[at], v[at + 1]), cplx(v[at + 2], v[at + 3]), cplx(v[at + 4], v[at + 5])}};
        }

        std::vector<double> number_list(std::string_view text, std::size_t expected, const std::string &what,
                                        std::size_t line)
        {
            const auto parts = split(text, ',');
            if (parts.size() != expected)
                throw ParseError(what + ": expected " + std::to_string(expected) + " values, got " +
                                     std::to_string(parts.size()),
                                 line);
            std::vector<double> out;
            out.reserve(expected);
            for (const auto p : parts)
                out.push_back(require_double(p, what, line));
            return out;
        }

        void put_cvec(std::ostream &out, const CVec3 &v)
        {
            for (std::size_t i = 0; i < 3; ++i)
                out << ',' << format_double(v[i].real()) << ',' << format_double(v[i].imag());
        }

        void check_transverse(const CVec3 &f, const Direction &direction)
        {
            const double radial = std::abs(dot(unit_vector(direction), f));
            if (radial > transversality_tolerance * norm(f))
                throw InconsistentFarFieldError("far-field record f has a radial component (|rhat . f| / |f| = " +
                                                format_double(radial / norm(f)) + ")");
        }
    } // namespace

    FieldTrace parse_trace(std::istream &in)
    {
        FieldTrace trace;
        std::optional<std::string> format;
        bool have_direction = false;
        bool header_seen = false;
        std::string raw;
        std::size_t line_no = 0;

        while (std::getline(in, raw))
        {
            ++line_no;
            if (!raw.empty() && raw.back() == '\r')
                raw.pop_back();
            const std::string_view line = trim(raw);
            if (line.empty())
                continue;
            if (line.front() == '#')
            {
                if (header_seen)
                    throw ParseError("header record after the column header", line_no);
                const std::string_view body = trim(line.substr(1));
                const auto eq = body.find('=');
                if (eq == std::string_view::npos)
                    continue; // free-form comment
                const std::string key = lower(trim(body.substr(0, eq)));
                const std::string_view value = trim(body.substr(eq + 1));
                if (key == "format")
                    format = std::string(value);
                else if (key == "direction")
                {
                    trace.direction = parse_direction(value, line_no);
                    have_direction = true;
                }
                else if (key == "ff_f")
                {
                    if (trace.ff_f || trace.ff_sample)
                        throw ParseError("more than one far-field record", line_no);
                    trace.ff_f = complex_triplet(number_list(value, 6, "ff_f", line_no), 0);
                }
                else if (key == "ff_sample")
                {
                    if (trace.ff_f || trace.ff_sample)
                        throw ParseError("more than one far-field record", line_no);
                    const auto v = number_list(value, 13, "ff_sample", line_no);
                    if (!(v[0] > 0.0))
                        throw ParseError("ff_sample: sampling radius must be positive", line_no);
                    trace.ff_sample_radius = v[0];
                    trace.ff_sample = FieldSample{complex_triplet(v, 1), complex_triplet(v, 7)};
                }
                else
                    throw ParseError("unknown trace header key '" + key + "'", line_no);
                continue;
            }
            if (!header_seen)
            {
                std::string compact;
                for (const char c : line)
                    if (!std::isspace(static_cast<unsigned char>(c)))
                        compact += c;
                if (compact != trace_columns)
                    throw ParseError("expected column header '" + std::string(trace_columns) + "'", line_no);
                header_seen = true;
                continue;
            }
            const auto v = number_list(line, 13, "data row", line_no);
            if (!(v[0] > 0.0))
                throw ParseError("r_lambda must be positive", line_no);
            if (!trace.rows.empty() && !(v[0] > trace.rows.back().r))
                throw ParseError("r_lambda is not strictly increasing", line_no);
            trace.rows.push_back({v[0], FieldSample{complex_triplet(v, 1), complex_triplet(v, 7)}});
        }
        if (in.bad())
            throw IoError("error while reading trace");

        if (!format)
            throw ParseError("missing '# format = " + std::string(trace_format) + "' header");
        if (*format != trace_format)
            throw ParseError("unsupported trace format '" + *format + "'");
        if (!have_direction)
            throw ParseError("missing '# direction = theta,phi' header");
        if (!trace.ff_f && !trace.ff_sample)
            throw ParseError("missing far-field record (ff_f or ff_sample)");
        if (!header_seen)
            throw ParseError("missing column header");
        if (trace.rows.empty())
            throw ParseError("trace has no data rows");

        // Runs the cross-check; throws InconsistentFarFieldError.
        (void)trace_angular_distribution(trace, WaveContext{});
        return trace;
    }

    FieldTrace import_trace(const fs::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw IoError("cannot open trace '" + path.string() + "'");
        return parse_trace(in);
    }

    AngularFieldDistribution trace_angular_distribution(const FieldTrace &trace, const WaveContext &ctx)
    {
        if (trace.ff_f)
        {
            check_transverse(*trace.ff_f, trace.direction);
            return {trace.direction, *trace.ff_f};
        }
        if (!trace.ff_sample || !trace.ff_sample_radius)
            throw PreconditionError("trace has no far-field record");
        return angular_distribution_from_sample(*trace.ff_sample, trace.direction, *trace.ff_sample_radius, ctx)
            .from_e;
    }

    ErrorCurve trace_error_curve(const FieldTrace &trace, const WaveContext &ctx)
    {
        const AngularFieldDistribution f = trace_angular_distribution(trace, ctx);
        ErrorCurve curve;
        curve.direction = trace.direction;
        curve.excitation = "trace";
        curve.source = to_string(SourceKind::ImportedTrace);
        curve.points.reserve(trace.rows.size());
        for (const auto &row : trace.rows)
        {
            const FieldSample ff = auxiliary_fields(f, {row.r, trace.direction}, ctx);
            curve.points.push_back({row.r, field_mismatch(row.fields, ff, ctx)});
        }
        return curve;
    }

    FieldTrace synthesize_trace(const DipoleScenario &scenario, const Direction &direction,
                                std::span<const double> r_grid, const WaveContext &ctx, double sample_radius)
    {
        if (scenario.excitation == Excitation::Beamfocusing)
            throw PreconditionError("beamfocusing has no single far-field record; cannot export it as a trace");
        const ExcitationVector w = scenario.excitation == Excitation::Beamsteering
                                       ? ff_precoder(scenario.geometry, direction, ctx)
                                       : ExcitationVector(scenario.geometry.size(), cplx(1.0, 0.0));
        FieldTrace trace;
        trace.direction = direction;
        const Vec3 rhat = unit_vector(direction);
        for (const double r : r_grid)
        {
            if (!(r > 0.0) || (!trace.rows.empty() && !(r > trace.rows.back().r)))
                throw PreconditionError("trace radii must be positive and strictly increasing");
            trace.rows.push_back({r, array_field(scenario.geometry, w, r * rhat, ctx)});
        }
        if (sample_radius > 0.0)
        {
            trace.ff_sample_radius = sample_radius;
            trace.ff_sample = array_field(scenario.geometry, w, sample_radius * rhat, ctx);
        }
        else
            trace.ff_f = analytic_angular_distribution(scenario.geometry, w, direction, ctx).f;
        return trace;
    }

    void write_trace(const FieldTrace &trace, std::ostream &out)
    {
        out << "# format = " << trace_format << '\n';
        out << "# direction = " << format_double(trace.direction.theta_deg()) << ','
            << format_double(trace.direction.phi_deg()) << '\n';
        if (trace.ff_f)
        {
            out << "# ff_f = ";
            std::ostringstream tmp;
            put_cvec(tmp, *trace.ff_f);
            out << tmp.str().substr(1) << '\n';
        }
        else if (trace.ff_sample && trace.ff_sample_radius)
        {
            out << "# ff_sample = " << format_double(*trace.ff_sample_radius);
            put_cvec(out, trace.ff_sample->e);
            put_cvec(out, trace.ff_sample->h);
            out << '\n';
        }
        out << trace_columns << '\n';
        for (const auto &row : trace.rows)
        {
            out << format_double(row.r);
            put_cvec(out, row.fields.e);
            put_cvec(out, row.fields.h);
            out << '\n';
        }
    }

    void export_trace(const FieldTrace &trace, const fs::path &path)
    {
        auto out = open_output(path);
        write_trace(trace, out);
        finish_output(out, path);
    }

    // ----------------------------------------------------------------- sweeps

    namespace
    {
        // Evaluates a boundary list on one panel; the WC scan is shared through
        // `profile` across panels with the same geometry.
        std::vector<BoundaryOutcome> evaluate_all(std::span<const BoundarySpec> specs, const ArrayGeometry &geometry,
                                                  const Direction &direction, const WaveContext &ctx,
                                                  std::shared_ptr<WorstCaseProfile> &profile)
        {
            std::vector<BoundaryOutcome> out;
            for (const auto &spec : specs)
            {
                if (spec.kind == BoundaryKind::WC)
                {
                    if (!profile)
                        profile = std::make_shared<WorstCaseProfile>(geometry, ctx);
                    out.push_back({spec, profile->boundary(spec.threshold)});
                }
                else
                    out.push_back({spec, evaluate_boundary(spec, geometry, direction, ctx)});
            }
            return out;
        }
    } // namespace

    SweepResult run_sweep(const ScenarioConfig &config, const WaveContext &ctx)
    {
        SweepResult result;
        if (config.source == SourceKind::ImportedTrace)
        {
            // The curve follows the trace's own radii.
            result.curve = trace_error_curve(import_trace(config.trace), ctx);
            return result;
        }
        DipoleScenario scenario;
        scenario.geometry = ArrayGeometry::uniform_linear(config.n, config.spacing);
        scenario.excitation = config.excitation;
        const auto grid = config.grid.radii();
        result.curve = error_sweep(scenario, config.direction, grid, ctx);
        std::shared_ptr<WorstCaseProfile> profile;
        result.boundaries = evaluate_all(config.boundaries, scenario.geometry, config.direction, ctx, profile);
        return result;
    }

    // ----------------------------------------------------------------- export

    void write_curve_csv(const ErrorCurve &curve, std::ostream &out)
    {
        out << "r_lambda,epsilon\n";
        for (const auto &p : curve.points)
            out << format_double(p.r) << ',' << format_double(p.epsilon) << '\n';
    }

    void write_boundary_csv(std::span<const BoundaryOutcome> rows, std::ostream &out)
    {
        out << "kind,threshold,status,value_lambda,crossings\n";
        for (const auto &row : rows)
        {
            out << to_string(row.spec.kind) << ',';
            if (row.spec.kind != BoundaryKind::QR)
                out << format_double(row.spec.threshold);
            out << ',' << to_string(row.result.status) << ',';
            if (row.result.found())
                out << format_double(row.result.value);
            out << ',' << row.result.crossings << '\n';
        }
    }

    void export_table(const ErrorCurve &curve, const fs::path &path)
    {
        auto out = open_output(path);
        write_curve_csv(curve, out);
        finish_output(out, path);
    }

    void export_table(std::span<const BoundaryOutcome> rows, const fs::path &path)
    {
        auto out = open_output(path);
        write_boundary_csv(rows, out);
        finish_output(out, path);
    }

    // -------------------------------------------------------------- reproduce

    std::optional<Figure> parse_figure(std::string_view name)
    {
        const std::string n = lower(trim(name));
        if (n == "fig4")
            return Figure::Fig4;
        if (n == "fig5")
            return Figure::Fig5;
        return std::nullopt;
    }

    namespace
    {
        struct Panel
        {
            std::string tag;
            Direction direction;
        };

        const std::vector<Panel> &panels()
        {
            static const std::vector<Panel> p = {
                {"0", Direction::front()}, {"45", Direction::diagonal()}, {"90", Direction::side()}};
            return p;
        }

        std::vector<BoundarySpec> figure_boundaries()
        {
            return parse_boundary_list("QR, AR, UP:0.9, UP:0.8, EN:1.05, EN:1.01, EP:0.99, EP:1.01, WC:0.001, WC:0.01");
        }

        // Radii where the test line passes through an element (side direction of
        // the dense array) are skipped; the sweep rejects them.
        std::vector<double> radii_off_elements(const std::vector<double> &radii, const ArrayGeometry &geometry,
                                               const Direction &direction)
        {
            const Vec3 u = unit_vector(direction);
            std::vector<double> out;
            out.reserve(radii.size());
            for (const double r : radii)
            {
                bool clear = true;
                for (const auto &rn : geometry.positions())
                    clear = clear && norm(r * u - rn) >= singularity_radius;
                if (clear)
                    out.push_back(r);
            }
            return out;
        }

        void emit_trace_curves(const std::vector<std::string> &stems, const ReproduceOptions &options,
                               const WaveContext &ctx, std::vector<fs::path> &written)
        {
            if (!options.traces_dir)
                return;
            const fs::path &dir = *options.traces_dir;
            if (!fs::is_directory(dir))
                throw IoError("traces directory '" + dir.string() + "' does not exist");
            std::error_code ec;
            if (fs::equivalent(dir, options.out_dir, ec))
                throw IoError("traces directory and output directory must differ");
            for (const auto &stem : stems)
            {
                const fs::path src = dir / (stem + ".csv");
                if (!fs::exists(src))
                    continue;
                const fs::path dst = options.out_dir / (stem + ".csv");
                export_table(trace_error_curve(import_trace(src), ctx), dst);
                written.push_back(dst);
            }
        }

        std::vector<std::string> trace_stems(Figure figure)
        {
            std::vector<std::string> stems;
            if (figure == Figure::Fig4)
            {
                stems = {"d_2_1_0", "p_1_0"};
                for (const char *n : {"8", "64"})
                    for (const auto &panel : panels())
                    {
                        stems.push_back(std::string("d_2_") + n + "_" + panel.tag);
                        stems.push_back(std::string("p_") + n + "_" + panel.tag);
                    }
            }
            else
            {
                for (const char *n : {"8", "dense_15"})
                    for (const auto &panel : panels())
                        stems.push_back(std::string("d_2_") + n + "_" + panel.tag);
            }
            return stems;
        }
    } // namespace

    std::vector<fs::path> reproduce_reference(Figure figure, const ReproduceOptions &options, const WaveContext &ctx)
    {
        std::error_code ec;
        fs::create_directories(options.out_dir, ec);
        if (ec || !fs::is_directory(options.out_dir))
            throw IoError("cannot create output directory '" + options.out_dir.string() + "'");

        GridSpec grid;
        if (figure == Figure::Fig5)
            grid.hi = 1e2;
        if (options.grid_ppd)
            grid.points_per_decade = *options.grid_ppd;
        const auto radii = grid.radii();

        std::vector<fs::path> written;
        const auto curve = [&](const std::string &name, const DipoleScenario &s, const Direction &d) {
            const fs::path path = options.out_dir / (name + ".csv");
            export_table(error_sweep(s, d, radii_off_elements(radii, s.geometry, d), ctx), path);
            written.push_back(path);
        };

        struct ArraySpec
        {
            std::string tag;
            std::size_t n;
            double spacing;
        };

        std::vector<ArraySpec> arrays;
        if (figure == Figure::Fig4)
        {
            curve("d_inf_1_0", {ArrayGeometry::uniform_linear(1, 0.0), Excitation::Uniform, 0.0}, Direction::front());
            arrays = {{"8", 8, 0.5}, {"64", 64, 0.5}};
        }
        else
            arrays = {{"8", 8, 0.5}, {"dense_15", 15, 0.25}};

        const auto specs = figure_boundaries();
        for (const auto &a : arrays)
        {
            const ArrayGeometry geometry = ArrayGeometry::uniform_linear(a.n, a.spacing);
            std::shared_ptr<WorstCaseProfile> profile;
            for (const auto &panel : panels())
            {
                const std::string stem = "d_inf_" + a.tag + "_" + panel.tag;
                curve(stem + "_ff", {geometry, Excitation::Beamsteering, 0.0}, panel.direction);
                curve(stem + "_nf", {geometry, Excitation::Beamfocusing, 0.0}, panel.direction);
                if (figure == Figure::Fig4)
                {
                    const fs::path path = options.out_dir / ("boundaries_" + a.tag + "_" + panel.tag + ".csv");
                    export_table(evaluate_all(specs, geometry, panel.direction, ctx, profile), path);
                    written.push_back(path);
                }
            }
        }

        emit_trace_curves(trace_stems(figure), options, ctx, written);
        return written;
    }

} // namespace nff
