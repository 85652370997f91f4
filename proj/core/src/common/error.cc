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

#include "qlease/common/error.h"

namespace qlease {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parameter:
            return "ParameterError";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::EmptySupport:
            return "EmptySupport";
        case ErrorCode::DimensionCap:
            return "DimensionCap";
        case ErrorCode::BasisMismatch:
            return "BasisMismatch";
        case ErrorCode::DomainMismatch:
            return "DomainMismatch";
        case ErrorCode::NotInRange:
            return "NotInRange";
        case ErrorCode::Decode:
            return "DecodeError";
        case ErrorCode::PuncturedPointQuery:
            return "PuncturedPointQuery";
        case ErrorCode::RelationViolation:
            return "RelationViolation";
        case ErrorCode::ExtractFailure:
            return "ExtractFailure";
        case ErrorCode::Domain:
            return "DomainError";
        case ErrorCode::ArityMismatch:
            return "ArityMismatch";
        case ErrorCode::UnsupportedCircuit:
            return "UnsupportedCircuit";
        case ErrorCode::MalformedSoftware:
            return "MalformedSoftware";
        case ErrorCode::BackendMismatch:
            return "BackendMismatch";
        case ErrorCode::FrameTooLarge:
            return "FrameTooLarge";
        case ErrorCode::BadVersion:
            return "BadVersion";
        case ErrorCode::BadType:
            return "BadType";
        case ErrorCode::Truncated:
            return "Truncated";
        case ErrorCode::Transport:
            return "TransportError";
        case ErrorCode::Protocol:
            return "ProtocolError";
        case ErrorCode::BoltConsumed:
            return "BoltConsumed";
        case ErrorCode::Usage:
            return "UsageError";
    }
    return "UnknownError";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace qlease
