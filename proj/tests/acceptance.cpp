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

// Acceptance checks. Prints one PASS/FAIL line per criterion; arguments
// select criteria (default: all). Exit status is 0 iff every selected
// criterion passes.

#include "nff/boundaries.hpp"
#include "nff/errors.hpp"
#include "nff/harness.hpp"
#include "test_support.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

using namespace nff;
using nff::testing::Rng;
namespace fs = std::filesystem;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::ostringstream detail;

        void require(bool ok, const std::string &what)
        {
            if (!ok)
            {
                pass = false;
                detail << " [failed: " << what << "]";
            }
        }
    };

    double rel(double a, double b) { return std::abs(a / b - 1.0); }

    double found(const BoundaryResult &r)
    {
        return r.status == BoundaryStatus::Found ? r.value : std::numeric_limits<double>::quiet_NaN();
    }

    struct Marker
    {
        std::string name;
        BoundarySpec spec;
        double target;
    };

    // Evaluates the markers on the front line and checks each within `tol`.
    std::map<std::string, double> check_markers(Outcome &out, std::size_t n, const std::vector<Marker> &markers,
                                                double tol)
    {
        const WaveContext ctx;
        const auto g = ArrayGeometry::uniform_linear(n, 0.5);
        const WorstCaseProfile profile(g, ctx);
        std::map<std::string, double> values;
        for (const auto &m : markers)
        {
            const double v = m.spec.kind == BoundaryKind::WC
                                 ? found(profile.boundary(m.spec.threshold))
                                 : found(evaluate_boundary(m.spec, g, Direction::front(), ctx));
            values[m.name] = v;
            const double e = rel(v, m.target);
            out.detail << m.name << "=" << v << " (" << 100.0 * e << "%) ";
            out.require(e <= tol, m.name);
        }
        return values;
    }

    Outcome criterion1()
    {
        Outcome out;
        const auto v = check_markers(out, 8,
                                     {{"QR", {BoundaryKind::QR, 0.0}, 24.5},
                                      {"AR", {BoundaryKind::AR, pi / 8}, 24.68},
                                      {"UP0.9", {BoundaryKind::UP, 0.9}, 6.48},
                                      {"UP0.8", {BoundaryKind::UP, 0.8}, 4.33},
                                      {"EN1.05", {BoundaryKind::EN, 1.05}, 11.40},
                                      {"EN1.01", {BoundaryKind::EN, 1.01}, 25.26},
                                      {"EP0.99", {BoundaryKind::EP, 0.99}, 11.27},
                                      {"WC0.001", {BoundaryKind::WC, 0.001}, 560.7},
                                      {"WC0.01", {BoundaryKind::WC, 0.01}, 177.1}},
                                     0.02);
        out.require(v.at("QR") == 24.5, "QR exact");
        return out;
    }

    Outcome criterion2()
    {
        Outcome out;
        const auto v = check_markers(out, 64,
                                     {{"QR", {BoundaryKind::QR, 0.0}, 1984.5},
                                      {"AR", {BoundaryKind::AR, pi / 8}, 1992.0},
                                      {"UP0.9", {BoundaryKind::UP, 0.9}, 58.6},
                                      {"EN1.05", {BoundaryKind::EN, 1.05}, 765.4},
                                      {"EP0.99", {BoundaryKind::EP, 0.99}, 90.8},
                                      {"WC0.001", {BoundaryKind::WC, 0.001}, 5066.5}},
                                     0.02);
        out.require(v.at("QR") == 1984.5, "QR exact");
        const double gap = rel(v.at("AR"), v.at("QR"));
        out.detail << "|AR-QR|/QR=" << 100.0 * gap << "%";
        out.require(gap < 0.01, "AR vs QR");
        return out;
    }

    Outcome criterion3()
    {
        Outcome out;
        const WaveContext ctx;
        const auto g = ArrayGeometry::uniform_linear(8, 0.5);
        const double ar = found(d_ar(g, Direction::side(), ctx));
        const double c = std::cbrt(0.9), a = 1.75;
        const double up_oracle = a * (1.0 + c) / (1.0 - c);
        const double up = found(d_up(g, Direction::side(), ctx, 0.9));
        out.detail << "AR=" << ar << " vs " << 1.71875 << ", UP0.9=" << up << " vs " << up_oracle;
        out.require(rel(ar, 1.71875) <= 0.005, "AR");
        out.require(rel(up, up_oracle) <= 0.005, "UP");
        return out;
    }

    Outcome criterion4()
    {
        Outcome out;
        const WaveContext ctx;
        const auto grid = log_grid(0.1, 1e4, 100);
        const auto curve = error_sweep({ArrayGeometry::uniform_linear(1, 0.0), Excitation::Uniform, 0.0},
                                       Direction::front(), grid, ctx);
        double worst = 0.0;
        for (const auto &p : curve.points)
            worst = std::max(worst, std::abs(p.epsilon - testing::single_dipole_epsilon(p.r)));
        const double slope = testing::loglog_slope(curve, 1e2, 1e3);
        out.detail << grid.size() << " points, max deviation " << worst << ", tail slope " << slope;
        out.require(worst <= 1e-12, "oracle");
        out.require(std::abs(slope + 2.0) <= 0.05, "slope");
        return out;
    }

    Outcome criterion5()
    {
        Outcome out;
        const WaveContext ctx;
        const auto grid = log_grid(0.5, 100.0, 100);
        const auto sweep = [&](std::size_t n, double d) {
            return error_sweep({ArrayGeometry::uniform_linear(n, d), Excitation::Beamsteering, 0.0},
                               Direction::front(), grid, ctx);
        };
        const auto a = sweep(8, 0.5), b = sweep(15, 0.25);
        double worst = 0.0, at = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            const double e = rel(b.points[i].epsilon, a.points[i].epsilon);
            if (e > worst)
            {
                worst = e;
                at = grid[i];
            }
        }
        out.detail << "max relative gap " << 100.0 * worst << "% at r=" << at << ", tail ratio "
                   << b.points.back().epsilon / a.points.back().epsilon;
        out.require(worst <= 0.10, "10% agreement");
        return out;
    }

    Outcome criterion6()
    {
        Outcome out;
        const WaveContext ctx;
        Rng rng(60601);
        double worst = 0.0;
        const DipoleElement el{{0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, cplx(1.0, 0.0)};
        const auto ula = ArrayGeometry::uniform_linear(8, 0.5);
        const auto w = ff_precoder(ula, Direction::diagonal(), ctx);
        const std::function<FieldSample(const Vec3 &)> sources[2] = {
            [&](const Vec3 &p) { return dipole_field(el, p, ctx); },
            [&](const Vec3 &p) { return array_field(ula, w, p, ctx); }};
        const double r_min[2] = {0.5, 2.5};
        for (int s = 0; s < 2; ++s)
            for (int i = 0; i < 20; ++i)
            {
                Vec3 dir = testing::random_unit(rng);
                while (s == 0 && std::abs(dir.z) > 0.995)
                    dir = testing::random_unit(rng);
                const Vec3 p = testing::log_uniform(rng, r_min[s], 50.0) * dir;
                const auto res = testing::maxwell_residual(sources[s], p, 1e-4, norm(p), ctx);
                worst = std::max({worst, res.curl_e, res.curl_h});
            }
        out.detail << "dipole and N=8, 20 points each, worst curl residual " << worst;
        out.require(worst < 1e-5, "curl");
        return out;
    }

    FieldSample random_fields(Rng &rng)
    {
        const double se = testing::log_uniform(rng, 1e-3, 1e3);
        const double sh = testing::log_uniform(rng, 1e-6, 1e1);
        FieldSample f;
        for (std::size_t i = 0; i < 3; ++i)
        {
            f.e[i] = testing::random_complex(rng, se);
            f.h[i] = testing::random_complex(rng, sh);
        }
        return f;
    }

    Outcome criterion7()
    {
        Outcome out;
        const WaveContext ctx;
        Rng rng(7007);

        bool in_range = true;
        double worst_scale = 0.0;
        for (int i = 0; i < 1000000; ++i)
        {
            const FieldSample a = random_fields(rng), b = random_fields(rng);
            const double mu = field_mismatch(a, b, ctx);
            in_range = in_range && mu >= 0.0 && mu <= 1.0;
            cplx c = testing::random_complex(rng);
            c *= testing::log_uniform(rng, 1e-3, 1e3) / std::abs(c);
            const double mu_c = field_mismatch({c * a.e, c * a.h}, {c * b.e, c * b.h}, ctx);
            worst_scale = std::max(worst_scale, std::abs(mu_c - mu));
        }
        out.detail << "mu scale drift " << worst_scale << "; ";
        out.require(in_range, "mu range");
        out.require(worst_scale <= 1e-12, "mu scale invariance");

        double psi_min = 2.0;
        for (int i = 0; i < 10000; ++i)
        {
            const auto g = ArrayGeometry::uniform_linear(1 + rng() % 64, testing::uniform(rng, 0.1, 1.0));
            const auto d = Direction::from_radians(testing::uniform(rng, 0, pi), testing::uniform(rng, 0, 2 * pi));
            try
            {
                psi_min = std::min(psi_min, psi_gain_ratio(g, {testing::log_uniform(rng, 1e-2, 1e5), d}, ctx));
            }
            catch (const SingularityError &)
            {
            }
        }
        out.detail << "min Psi " << psi_min << "; ";
        out.require(psi_min >= 1.0 - 1e-12, "Psi >= 1");

        double upsilon_max = 0.0;
        for (std::size_t n : {2, 8, 15, 64})
        {
            const auto g = ArrayGeometry::uniform_linear(n, n == 15 ? 0.25 : 0.5);
            for (const double r : log_grid(1e-3, 1e6, 1000))
                upsilon_max = std::max(upsilon_max, upsilon_power(g, {r, Direction::front()}));
        }
        out.detail << "1 - max front Upsilon " << 1.0 - upsilon_max << "; ";
        out.require(upsilon_max < 1.0, "Upsilon < 1");

        const auto sphere = testing::fibonacci_sphere(100000);
        double xi_gap = 0.0;
        for (int i = 0; i < 50; ++i)
        {
            const auto g = ArrayGeometry::uniform_linear(2 + rng() % 7, testing::uniform(rng, 0.25, 1.0));
            const double r = testing::log_uniform(rng, 2.0 * g.radius() + 1.0, 1e3);
            const double a = xi_worst_mismatch(g, r, ctx) * ctx.wavelength_m;
            xi_gap = std::max(xi_gap, rel(testing::xi_sphere_bruteforce(g, r, sphere, ctx), a));
        }
        out.detail << "Xi sphere gap " << xi_gap << "; ";
        out.require(xi_gap <= 1e-4, "Xi reduction");

        double drift = 0.0;
        const auto grid = log_grid(0.1, 1e4, 100);
        const DipoleScenario s{ArrayGeometry::uniform_linear(8, 0.5), Excitation::Beamsteering, 0.0};
        for (const auto &d : {Direction::front(), Direction::diagonal(), Direction::side()})
        {
            std::stringstream io;
            write_trace(synthesize_trace(s, d, grid, ctx), io);
            const auto back = trace_error_curve(parse_trace(io), ctx);
            const auto direct = error_sweep(s, d, grid, ctx);
            for (std::size_t i = 0; i < grid.size(); ++i)
                drift = std::max(drift, std::abs(back.points[i].epsilon - direct.points[i].epsilon));
        }
        out.detail << "trace round-trip drift " << drift;
        out.require(drift < 1e-9, "round trip");
        return out;
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    Outcome criterion8()
    {
        Outcome out;
        const fs::path root = fs::temp_directory_path() / "nff-acceptance";
        fs::remove_all(root);
        const fs::path runs[2] = {root / "run1", root / "run2"};
        for (const auto &dir : runs)
        {
            const std::string cmd =
                std::string("\"") + NFF_CLI_PATH + "\" reproduce --figure fig4 --out \"" + dir.string() + "\" > /dev/null";
            out.require(std::system(cmd.c_str()) == 0, "cli run");
        }
        std::size_t files = 0, differing = 0;
        for (const auto &entry : fs::directory_iterator(runs[0]))
        {
            ++files;
            const fs::path other = runs[1] / entry.path().filename();
            if (!fs::exists(other) || slurp(entry.path()) != slurp(other))
                ++differing;
        }
        const auto second = static_cast<std::size_t>(
            std::distance(fs::directory_iterator(runs[1]), fs::directory_iterator{}));
        out.detail << files << " files, " << differing << " differing";
        out.require(files == 19 && second == files, "file set");
        out.require(differing == 0, "byte identity");
        fs::remove_all(root);
        return out;
    }
} // namespace

int main(int argc, char **argv)
{
    using Fn = Outcome (*)();
    const Fn criteria[] = {criterion1, criterion2, criterion3, criterion4,
                           criterion5, criterion6, criterion7, criterion8};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i)
    {
        const int c = std::atoi(argv[i]);
        if (c < 1 || c > 8)
        {
            std::cerr << "unknown criterion '" << argv[i] << "'\n";
            return 2;
        }
        selected.push_back(c);
    }
    if (selected.empty())
        for (int c = 1; c <= 8; ++c)
            selected.push_back(c);

    bool all = true;
    for (const int c : selected)
    {
        Outcome out;
        try
        {
            out = criteria[c - 1]();
        }
        catch (const std::exception &e)
        {
            out.pass = false;
            out.detail << "exception: " << e.what();
        }
        all = all && out.pass;
        std::cout << "criterion " << c << ": " << (out.pass ? "PASS" : "FAIL") << "  " << out.detail.str()
                  << std::endl;
    }
    return all ? 0 : 1;
}
