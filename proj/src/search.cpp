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

#include "nff/search.hpp"
#include "nff/core.hpp"
#include "nff/errors.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace nff
{
    std::string to_string(BoundaryStatus s)
    {
        switch (s)
        {
        case BoundaryStatus::Found:
            return "found";
        case BoundaryStatus::Unbounded:
            return "unbounded";
        case BoundaryStatus::NotFound:
            return "not_found";
        }
        return "unknown";
    }

    namespace
    {
        constexpr double bisection_tolerance = 1e-7;

        double safe_eval(const RadialScan &scan, double r)
        {
            try
            {
                return scan(r);
            }
            catch (const SingularityError &)
            {
                return std::numeric_limits<double>::quiet_NaN();
            }
        }

        // Shrinks [outside, inside] until the gap is below tolerance; `inside`
        // satisfies the predicate throughout.
        template <typename Pred>
        double bisect(const RadialScan &scan, Pred holds, double outside, double inside)
        {
            for (int it = 0; it < 200; ++it)
            {
                if (std::abs(inside - outside) <= bisection_tolerance * inside)
                    break;
                const double mid = 0.5 * (outside + inside);
                if (holds(safe_eval(scan, mid)))
                    inside = mid;
                else
                    outside = mid;
            }
            return inside;
        }

        void check_bracket(const SearchBracket &b)
        {
            if (!(b.lo > 0.0) || !(b.hi > b.lo))
                throw PreconditionError("search bracket needs 0 < lo < hi");
            if (b.points_per_decade < 100)
                throw PreconditionError("search grid needs at least 100 points per decade");
        }

        struct Scan
        {
            std::vector<double> r;
            std::vector<bool> holds;
            std::size_t crossings = 0;
        };

        template <typename Pred>
        Scan scan_grid(const RadialScan &scan, Pred pred, const SearchBracket &bracket)
        {
            check_bracket(bracket);
            Scan s;
            s.r = log_grid(bracket.lo, bracket.hi, bracket.points_per_decade);
            s.holds.resize(s.r.size());
            for (std::size_t i = 0; i < s.r.size(); ++i)
            {
                s.holds[i] = pred(safe_eval(scan, s.r[i]));
                if (i > 0 && s.holds[i] != s.holds[i - 1])
                    ++s.crossings;
            }
            return s;
        }
    } // namespace

    BoundaryResult find_first_below(const RadialScan &scan, double threshold, const SearchBracket &bracket)
    {
        const auto pred = [threshold](double v) { return v <= threshold; };
        const Scan s = scan_grid(scan, pred, bracket);

        BoundaryResult out;
        out.bracket_lo = bracket.lo;
        out.bracket_hi = bracket.hi;
        out.crossings = s.crossings;
        for (std::size_t i = 0; i < s.r.size(); ++i)
        {
            if (!s.holds[i])
                continue;
            out.status = BoundaryStatus::Found;
            if (i == 0)
            {
                out.value = s.r[0];
                out.degenerate = true;
            }
            else
                out.value = bisect(scan, pred, s.r[i - 1], s.r[i]);
            return out;
        }
        return out;
    }

    BoundaryResult find_last_above(const RadialScan &scan, double threshold, const SearchBracket &bracket)
    {
        const auto pred = [threshold](double v) { return v >= threshold; };
        const Scan s = scan_grid(scan, pred, bracket);

        BoundaryResult out;
        out.bracket_lo = bracket.lo;
        out.bracket_hi = bracket.hi;
        out.crossings = s.crossings;
        for (std::size_t i = s.r.size(); i-- > 0;)
        {
            if (!s.holds[i])
                continue;
            if (i + 1 == s.r.size())
            {
                out.status = BoundaryStatus::Unbounded;
                return out;
            }
            out.status = BoundaryStatus::Found;
            out.value = bisect(scan, pred, s.r[i + 1], s.r[i]);
            return out;
        }
        return out;
    }

} // namespace nff
