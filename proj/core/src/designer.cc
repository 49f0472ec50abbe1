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

#include "aqsc/designer.hpp"

#include <cmath>
#include <string>

#include "aqsc/error.hpp"

namespace aqsc {

namespace {

// d_h / l is an exact integer for {N,N} on its own fundamental polygon
// (both are 2 arccosh(cot(pi/N))); rounding noise must not bump it up.
std::int64_t ceil_ratio(double num, double den) {
    return static_cast<std::int64_t>(std::ceil(num / den - 1e-9));
}

}  // namespace

std::string_view to_string(AdmissibilityReason reason) {
    switch (reason) {
        case AdmissibilityReason::Admissible: return "Admissible";
        case AdmissibilityReason::SurfaceNotHyperbolic: return "NotHyperbolic (surface)";
        case AdmissibilityReason::SymbolNotHyperbolic: return "NotHyperbolic (symbol)";
        case AdmissibilityReason::FractionalFaceCount: return "FractionalFaceCount";
        case AdmissibilityReason::FractionalVertexCount: return "FractionalVertexCount";
    }
    return "Unknown";
}

Rational face_count(const Surface& surface, SchlafliSymbol sym) {
    if (!surface.is_hyperbolic()) {
        throw Error(ErrorCode::NotHyperbolic, surface.to_string() + " is not hyperbolic");
    }
    if (!sym.is_hyperbolic()) {
        throw Error(ErrorCode::NotHyperbolic, sym.to_string() + " is not hyperbolic");
    }
    const std::int64_t chi = euler_characteristic(surface);
    return Rational(-2 * static_cast<std::int64_t>(sym.q) * chi, sym.excess());
}

double face_count_by_area(const Surface& surface, SchlafliSymbol sym) {
    return polygon_area(fundamental_polygon(surface)) / polygon_area(sym);
}

Admissibility is_admissible(const Surface& surface, SchlafliSymbol sym) {
    if (!surface.is_hyperbolic()) return {false, AdmissibilityReason::SurfaceNotHyperbolic};
    if (!sym.is_hyperbolic()) return {false, AdmissibilityReason::SymbolNotHyperbolic};
    const Rational faces = face_count(surface, sym);
    if (faces.denominator() != 1 || faces.numerator() <= 0) {
        return {false, AdmissibilityReason::FractionalFaceCount};
    }
    if ((sym.p * faces.numerator()) % sym.q != 0) {
        return {false, AdmissibilityReason::FractionalVertexCount};
    }
    return {true, AdmissibilityReason::Admissible};
}

CodeParameters aqsc_parameters(const Surface& surface, SchlafliSymbol sym) {
    const Admissibility adm = is_admissible(surface, sym);
    if (!adm) {
        throw Error(ErrorCode::NotAdmissible,
                    sym.to_string() + " on " + surface.to_string() + ": " + std::string(to_string(adm.reason)));
    }
    CodeParameters rec{};
    rec.surface = surface;
    rec.sym = sym;
    rec.n_f = face_count(surface, sym).numerator();
    // V - E + F = chi pins E = V + F - chi, so p n_f is always even here.
    rec.n = sym.p * rec.n_f / 2;
    rec.k = 2 - euler_characteristic(surface);
    rec.d_h = opposite_edge_distance(surface.polygon_sides());
    rec.l_pq = edge_length(sym);
    rec.l_qp = edge_length(sym.dual());
    rec.d_x = ceil_ratio(rec.d_h, rec.l_pq);
    rec.d_z = ceil_ratio(rec.d_h, rec.l_qp);
    return rec;
}

std::vector<CodeParameters> enumerate_admissible(const Surface& surface, int p_max, int q_max) {
    if (p_max < 3 || q_max < 3) {
        throw Error(ErrorCode::InvalidArgument, "p_max and q_max must be >= 3");
    }
    std::vector<CodeParameters> out;
    if (!surface.is_hyperbolic()) return out;
    for (int p = 3; p <= p_max; ++p) {
        for (int q = 3; q <= q_max; ++q) {
            const SchlafliSymbol sym{p, q};
            if (is_admissible(surface, sym)) out.push_back(aqsc_parameters(surface, sym));
        }
    }
    return out;
}

const std::vector<ClosedForm>& closed_form_families() {
    static const std::vector<ClosedForm> families = {
        {{7, 3}, 6, 21}, {{8, 3}, 3, 12}, {{9, 3}, 2, 9}, {{12, 3}, 1, 6},
        {{5, 4}, 4, 10}, {{6, 4}, 2, 6},  {{8, 4}, 1, 4},
    };
    return families;
}

ClosedForm table5_closed_forms(SchlafliSymbol sym, int g) {
    if (g < 3) {
        throw Error(ErrorCode::InvalidArgument, "closed forms need g >= 3, got " + std::to_string(g));
    }
    for (const ClosedForm& f : closed_form_families()) {
        if (f.sym == sym) return f;
    }
    throw Error(ErrorCode::UnsupportedSymbol, sym.to_string() + " has no tabulated closed form");
}

RateComparison rate_ratio(int g, SchlafliSymbol sym) {
    if (g <= 2) {
        throw Error(ErrorCode::DegenerateGenus, "non-orientable genus " + std::to_string(g) + " has no hyperbolic area");
    }
    if (!sym.is_hyperbolic()) {
        throw Error(ErrorCode::NotHyperbolic, sym.to_string() + " is not hyperbolic");
    }
    const Rational half_p(sym.p, 2);
    const Rational n1 = half_p * face_count(Surface::orientable(g), sym);
    const Rational n2 = half_p * face_count(Surface::non_orientable(g), sym);
    RateComparison out;
    out.r1 = Rational(2 * g) / n1;
    out.r2 = Rational(g) / n2;
    out.ratio = out.r1 / out.r2;
    return out;
}

bool genus_doubling_check(int h, SchlafliSymbol sym) {
    if (h < 2) {
        throw Error(ErrorCode::InvalidArgument, "orientable genus must be >= 2, got " + std::to_string(h));
    }
    const Surface orientable = Surface::orientable(h);
    const Surface non_orientable = Surface::non_orientable(2 * h);
    const Admissibility a1 = is_admissible(orientable, sym);
    if (!a1) {
        throw Error(ErrorCode::NotAdmissible, sym.to_string() + " on " + orientable.to_string());
    }
    if (!is_admissible(non_orientable, sym)) return false;
    const CodeParameters r1 = aqsc_parameters(orientable, sym);
    const CodeParameters r2 = aqsc_parameters(non_orientable, sym);
    return r1.n_f == r2.n_f && r1.n == r2.n && r1.k == r2.k && r1.d_x == r2.d_x && r1.d_z == r2.d_z;
}

AsymmetryCurve asymmetry_curve(SchlafliSymbol sym, const std::vector<int>& genus_list, Orientability orientability) {
    AsymmetryCurve curve;
    for (int g : genus_list) {
        const Surface s = Surface::make(g, orientability);
        if (!is_admissible(s, sym)) {
            curve.skipped.push_back(g);
            continue;
        }
        const CodeParameters rec = aqsc_parameters(s, sym);
        curve.points.push_back({g, rec.d_z - rec.d_x});
    }
    return curve;
}

}  // namespace aqsc
