/*
   Copyright 2026 The riocomb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RIOCOMB_ERROR_HPP
#define RIOCOMB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace riocomb {

enum class Errc {
    ZeroConstantTerm,
    NonzeroInnerConstant,
    NotOrderOne,
    TruncationExceeded,
    InvalidParameters,
    InvalidQ,
    NotPure,
    SearchCapExceeded,
    InvalidFacing,
    NotAFace,
    InvalidComplex,
    InvalidPoset,
    ParseError,
    DimensionMismatch,
};

std::string_view errc_name(Errc code) noexcept;

/// The single exception type thrown by the library. `code()` tells callers
/// which contract was violated; `what()` carries a human-readable detail.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace riocomb

#endif
