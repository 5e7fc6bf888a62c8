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

#ifndef NFF_ERRORS_HPP
#define NFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nff
{
    // Base class for every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // A caller violated a documented precondition (bad argument, bad grid, ...).
    class PreconditionError : public Error
    {
    public:
        using Error::Error;
    };

    // Field evaluated (numerically) on top of a point source.
    class SingularityError : public Error
    {
    public:
        using Error::Error;
    };

    // E- and H-based far-field estimates disagree, or a far-field record is not transversal.
    class InconsistentFarFieldError : public Error
    {
    public:
        using Error::Error;
    };

    // Uniform-power ratio undefined: the normal projections of the element offsets change sign.
    class UndefinedProjectionError : public Error
    {
    public:
        using Error::Error;
    };

    // Worst-case mismatch still grows in the last scanned decade.
    class TailNotMonotoneError : public Error
    {
    public:
        using Error::Error;
    };

    // Malformed scenario or trace file. `line` is 1-based, 0 when not applicable.
    class ParseError : public Error
    {
    public:
        ParseError(const std::string &what, std::size_t line = 0)
            : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
        std::size_t line() const { return line_; }

    private:
        std::size_t line_;
    };

    // File could not be opened, read or written.
    class IoError : public Error
    {
    public:
        using Error::Error;
    };

} // namespace nff

#endif
