// Copyright 2026 The qlease Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLEASE_COMMON_ERROR_H
#define QLEASE_COMMON_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlease {

enum class ErrorCode {
    Parameter,
    DimensionMismatch,
    EmptySupport,
    DimensionCap,
    BasisMismatch,
    DomainMismatch,
    NotInRange,
    Decode,
    PuncturedPointQuery,
    RelationViolation,
    ExtractFailure,
    Domain,
    ArityMismatch,
    UnsupportedCircuit,
    MalformedSoftware,
    BackendMismatch,
    FrameTooLarge,
    BadVersion,
    BadType,
    Truncated,
    Transport,
    Protocol,
    BoltConsumed,
    Usage,
};

std::string_view error_code_name(ErrorCode code);

/// All recoverable failures in the library are reported with this type; `code()` says which.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &message);

}  // namespace qlease

#endif
