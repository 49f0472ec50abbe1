// Copyright 2026 The AQSC Authors
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

#include "aqsc/surface.hpp"

#include "aqsc/error.hpp"

namespace aqsc {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::AngleSumNotHyperbolic: return "AngleSumNotHyperbolic";
        case ErrorCode::NotHyperbolic: return "NotHyperbolic";
        case ErrorCode::NonHyperbolicSurface: return "NonHyperbolicSurface";
        case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
        case ErrorCode::ModelMismatch: return "ModelMismatch";
        case ErrorCode::InvalidPoint: return "InvalidPoint";
        case ErrorCode::PoleAtPoint: return "PoleAtPoint";
        case ErrorCode::NotNormalizable: return "NotNormalizable";
        case ErrorCode::OddEdgeCount: return "OddEdgeCount";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::UnsupportedSymbol: return "UnsupportedSymbol";
        case ErrorCode::DegenerateGenus: return "DegenerateGenus";
        case ErrorCode::NotClosedSurface: return "NotClosedSurface";
        case ErrorCode::NoLogicals: return "NoLogicals";
        case ErrorCode::TooManyQubits: return "TooManyQubits";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::string_view to_string(Orientability o) {
    return o == Orientability::Orientable ? "orientable" : "non-orientable";
}

Surface Surface::make(int genus, Orientability orientability) {
    if (genus < 1) {
        throw Error(ErrorCode::InvalidArgument, "surface genus must be >= 1, got " + std::to_string(genus));
    }
    return Surface{genus, orientability};
}

bool Surface::is_hyperbolic() const noexcept { return euler_characteristic(*this) < 0; }

std::string Surface::to_string() const {
    return std::string(aqsc::to_string(orientability)) + " genus " + std::to_string(genus);
}

int euler_characteristic(const Surface& surface) {
    return surface.is_orientable() ? 2 - 2 * surface.genus : 2 - surface.genus;
}

}  // namespace aqsc
