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

// Command-line front end.
//
//   nff sweep --config <file> --out <csv>
//   nff boundaries --config <file> --out <csv>
//   nff reproduce --figure fig4|fig5 --out <dir> [--traces <dir>]
//   nff validate-trace <file>
//
// Exit status: 0 success, 1 validation error, 2 I/O error.

#include "nff/errors.hpp"
#include "nff/harness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_invalid = 1;
    constexpr int exit_io = 2;

    nff::ScenarioConfig configure(const std::string &path, int grid_ppd)
    {
        nff::ScenarioConfig cfg = nff::load_scenario(path);
        if (grid_ppd > 0)
            cfg.grid.points_per_decade = grid_ppd;
        return cfg;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Near/far-field approximation error and boundary estimates for dipole arrays"};
    app.require_subcommand(1);

    int grid_ppd = 0;
    app.add_option("--grid-ppd", grid_ppd, "Override the curve grid density (points per decade)")
        ->check(CLI::Range(1, 100000));

    std::string config_path, out_path;

    auto *sweep = app.add_subcommand("sweep", "Approximation-error curve of one scenario");
    sweep->add_option("--config", config_path, "Scenario file")->required();
    sweep->add_option("--out", out_path, "Output CSV (r_lambda,epsilon)")->required();

    auto *bounds = app.add_subcommand("boundaries", "Boundary estimates of one scenario");
    bounds->add_option("--config", config_path, "Scenario file")->required();
    bounds->add_option("--out", out_path, "Output CSV (kind,threshold,status,value_lambda,crossings)")->required();

    std::string figure_name, traces_dir;
    auto *repro = app.add_subcommand("reproduce", "Write every curve and boundary table of a reference figure");
    repro->add_option("--figure", figure_name, "fig4 or fig5")->required();
    repro->add_option("--out", out_path, "Output directory")->required();
    repro->add_option("--traces", traces_dir, "Directory with full-wave field traces");

    std::string trace_path;
    auto *vtrace = app.add_subcommand("validate-trace", "Check a field trace and summarize its error curve");
    vtrace->add_option("file", trace_path, "Trace CSV")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_invalid;
    }

    try
    {
        if (*sweep)
        {
            const auto result = nff::run_sweep(configure(config_path, grid_ppd));
            nff::export_table(result.curve, out_path);
        }
        else if (*bounds)
        {
            auto cfg = configure(config_path, grid_ppd);
            if (cfg.boundaries.empty())
                throw nff::PreconditionError("scenario lists no boundaries");
            const auto result = nff::run_sweep(cfg);
            nff::export_table(std::span<const nff::BoundaryOutcome>(result.boundaries), out_path);
        }
        else if (*repro)
        {
            const auto figure = nff::parse_figure(figure_name);
            if (!figure)
                throw nff::PreconditionError("unknown figure '" + figure_name + "' (expected fig4 or fig5)");
            nff::ReproduceOptions opts;
            opts.out_dir = out_path;
            if (!traces_dir.empty())
                opts.traces_dir = traces_dir;
            if (grid_ppd > 0)
                opts.grid_ppd = grid_ppd;
            const auto files = nff::reproduce_reference(*figure, opts);
            for (const auto &f : files)
                std::cout << f.string() << '\n';
        }
        else if (*vtrace)
        {
            const auto trace = nff::import_trace(trace_path);
            const auto curve = nff::trace_error_curve(trace, nff::WaveContext{});
            const auto [lo, hi] = std::minmax_element(curve.points.begin(), curve.points.end(),
                                                      [](const auto &a, const auto &b) { return a.epsilon < b.epsilon; });
            std::cout << "ok: " << trace.rows.size() << " rows, direction (" << trace.direction.theta_deg() << ", "
                      << trace.direction.phi_deg() << ") deg, far-field record "
                      << (trace.ff_f ? "ff_f" : "ff_sample") << ", r in [" << trace.rows.front().r << ", "
                      << trace.rows.back().r << "] lambda, epsilon in [" << lo->epsilon << ", " << hi->epsilon
                      << "]\n";
        }
    }
    catch (const nff::IoError &e)
    {
        std::cerr << "nff: " << e.what() << '\n';
        return exit_io;
    }
    catch (const nff::Error &e)
    {
        std::cerr << "nff: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_ok;
}
