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

// Table and figure data, and the self-check suites behind `aqsc verify`.

#ifndef AQSC_SUITES_HPP
#define AQSC_SUITES_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aqsc/designer.hpp"
#include "aqsc/output.hpp"

namespace aqsc {

/// One dual pair of a parameter table, recomputed from scratch.
struct TableLine {
    CodeParameters first;   // {p,q}, p < q; owns the printed record
    CodeParameters second;  // {q,p}
    bool record_on_second_line;
    bool single_bracket;
};

/// Recomputes the dual pairs listed in parameter table 1..4.
std::vector<TableLine> compute_table(int number);

/// Tables 1-4 as recomputed records, table 5 as its closed-form families.
std::string render_table(int number, Format format);

struct RatePoint {
    SchlafliSymbol sym;
    int genus;
    RateComparison rates;
};

/// k/n on orientable vs non-orientable genus g, for every odd g in
/// [g_min, g_max] (g_min >= 3) and every closed-form family.
std::vector<RatePoint> rate_series(int g_min, int g_max);

struct GapPoint {
    SchlafliSymbol sym;
    int genus;
    std::int64_t d_z;
    std::int64_t d_x;
};

/// d_z - d_x of the {3,7} tessellation on non-orientable surfaces of odd
/// genus in [g_min, g_max]; inadmissible genera are left out.
std::vector<GapPoint> gap_series(int g_min, int g_max);

/// which = 5 (rates) or 6 (gaps).
std::string render_figure(int which, int g_min, int g_max, Format format);

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;

    int failures() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Equal parameters on orientable genus h and non-orientable genus 2h,
/// the exact rate ratio (g-2)/(g-1), and the {p,q} <-> {q,p} swap of
/// (d_x, d_z).
VerificationReport verify_theorems(int h_max, int pq_max, int g_max);

/// Torus family values (n = 2l^2, k = 2, d_x = d_z = l), k = 2 - chi on
/// polygon codes and twisted lattices, stabilizer commutation, and
/// agreement of the two distance methods.
VerificationReport verify_oracle(int toric_max, int polygon_max, int lattice_max);

/// Every integer of tables 1-4 exactly, reals within 5e-4, and the table 5
/// closed forms for g = 3..30.
VerificationReport verify_tables();

}  // namespace aqsc

#endif  // AQSC_SUITES_HPP
