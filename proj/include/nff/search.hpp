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

#ifndef NFF_SEARCH_HPP
#define NFF_SEARCH_HPP

#include <cstddef>
#include <functional>
#include <string>

namespace nff
{
    struct SearchBracket
    {
        double lo = 1e-3; // wavelengths
        double hi = 1e6;
        int points_per_decade = 400;
    };

    enum class BoundaryStatus
    {
        Found,
        Unbounded,
        NotFound
    };

    std::string to_string(BoundaryStatus s);

    struct BoundaryResult
    {
        BoundaryStatus status = BoundaryStatus::NotFound;
        double value = 0.0; // wavelengths, meaningful for Found only
        double bracket_lo = 0.0;
        double bracket_hi = 0.0;
        std::size_t crossings = 0; // condition flips between adjacent grid points
        bool degenerate = false;   // condition already held at the lower bracket end

        bool found() const { return status == BoundaryStatus::Found; }
    };

    // Scalar criterion along the test line. May throw SingularityError; such
    // points count as not satisfying the condition.
    using RadialScan = std::function<double(double)>;

    // inf{r in bracket : scan(r) <= threshold}. Bracketed on the log grid, then
    // bisected to 1e-7 relative; the returned value satisfies the condition.
    BoundaryResult find_first_below(const RadialScan &scan, double threshold, const SearchBracket &bracket);

    // sup{r in bracket : scan(r) >= threshold}; Unbounded when the condition
    // still holds at the upper bracket end.
    BoundaryResult find_last_above(const RadialScan &scan, double threshold, const SearchBracket &bracket);

} // namespace nff

#endif
