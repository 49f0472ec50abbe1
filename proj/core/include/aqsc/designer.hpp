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

// Parameter records [[n, k, d_z/d_x]] for asymmetric surface codes built from
// a {p,q} tessellation of a closed hyperbolic surface.
//
// Integer quantities (faces, qubits, logical qubits) are exact; the two
// distances are ceil(d_h / l) estimates where d_h is the opposite-side
// distance of the fundamental polygon and l the primal (d_x) or dual (d_z)
// edge length.

#ifndef AQSC_DESIGNER_HPP
#define AQSC_DESIGNER_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "aqsc/hyperbolic.hpp"
#include "aqsc/surface.hpp"

namespace aqsc {

using Rational = boost::rational<std::int64_t>;

enum class AdmissibilityReason {
    Admissible,
    SurfaceNotHyperbolic,
    SymbolNotHyperbolic,
    FractionalFaceCount,
    FractionalVertexCount,
};

std::string_view to_string(AdmissibilityReason reason);

struct Admissibility {
    bool admissible;
    AdmissibilityReason reason;

    explicit operator bool() const noexcept { return admissible; }
};

enum class DistanceProvenance { Formula, OracleVerified };

struct CodeParameters {
    Surface surface;
    SchlafliSymbol sym;
    std::int64_t n_f;   // faces
    std::int64_t n;     // physical qubits (edges)
    std::int64_t k;     // logical qubits
    double d_h;
    double l_pq;
    double l_qp;
    std::int64_t d_x;
    std::int64_t d_z;
    DistanceProvenance provenance = DistanceProvenance::Formula;

    std::int64_t vertices() const noexcept { return sym.p * n_f / sym.q; }
    std::int64_t d() const noexcept { return d_x < d_z ? d_x : d_z; }
    Rational rate() const { return {k, n}; }
};

/// -2 q chi / (pq - 2p - 2q), exact. Throws NotHyperbolic if either the
/// surface or the symbol is not hyperbolic.
Rational face_count(const Surface& surface, SchlafliSymbol sym);

/// Face count as a ratio of hyperbolic areas: fundamental polygon over tile.
double face_count_by_area(const Surface& surface, SchlafliSymbol sym);

/// Both arguments hyperbolic, and both the face count and the implied
/// vertex count p n_f / q are positive integers.
Admissibility is_admissible(const Surface& surface, SchlafliSymbol sym);

/// Throws NotAdmissible (with the reason in the message) when
/// is_admissible fails.
CodeParameters aqsc_parameters(const Surface& surface, SchlafliSymbol sym);

/// Every admissible {p,q} with 3 <= p <= p_max and 3 <= q <= q_max, sorted
/// by (p, q).
std::vector<CodeParameters> enumerate_admissible(const Surface& surface, int p_max, int q_max);

/// n_f = face_coeff (g - 2), n = length_coeff (g - 2) on a non-orientable
/// genus-g surface.
struct ClosedForm {
    SchlafliSymbol sym;
    std::int64_t face_coeff;
    std::int64_t length_coeff;

    std::int64_t faces(int g) const noexcept { return face_coeff * (g - 2); }
    std::int64_t length(int g) const noexcept { return length_coeff * (g - 2); }
};

/// The seven families tabulated for 2g-gon codes: {7,3} {8,3} {9,3} {12,3}
/// {5,4} {6,4} {8,4}.
const std::vector<ClosedForm>& closed_form_families();

/// Throws UnsupportedSymbol for symbols outside closed_form_families(),
/// InvalidArgument for g < 3.
ClosedForm table5_closed_forms(SchlafliSymbol sym, int g);

/// Encoding rates of the same tessellation on the orientable (r1) and
/// non-orientable (r2) genus-g surfaces, from k/n with n taken from the
/// (not necessarily integral) face count.
struct RateComparison {
    Rational r1;
    Rational r2;
    Rational ratio;  // r1 / r2
};

/// Throws DegenerateGenus for g <= 2, NotHyperbolic for flat or spherical
/// symbols.
RateComparison rate_ratio(int g, SchlafliSymbol sym);

/// Compares the orientable genus-h record with the non-orientable genus-2h
/// record field by field. Throws NotAdmissible if sym is not admissible
/// for orientable genus h, InvalidArgument for h < 2.
bool genus_doubling_check(int h, SchlafliSymbol sym);

struct AsymmetryPoint {
    int genus;
    std::int64_t gap;  // d_z - d_x
};

struct AsymmetryCurve {
    std::vector<AsymmetryPoint> points;
    std::vector<int> skipped;  // inadmissible genera
};

AsymmetryCurve asymmetry_curve(SchlafliSymbol sym, const std::vector<int>& genus_list, Orientability orientability);

}  // namespace aqsc

#endif  // AQSC_DESIGNER_HPP
