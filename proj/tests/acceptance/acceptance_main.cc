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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "aqsc/designer.hpp"
#include "aqsc/homology.hpp"
#include "aqsc/output.hpp"
#include "aqsc/published_tables.hpp"
#include "aqsc/suites.hpp"

using namespace aqsc;

namespace {

constexpr double kTol = 5e-4;

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        passed = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

Outcome table_reproduction() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    int rows = 0;
    for (const PublishedTable& table : published_tables()) {
        const double d_h = opposite_edge_distance(2 * table.genus);
        if (std::abs(d_h - table.d_h) > kTol) out.fail("table " + std::to_string(table.number) + " d_h " + fixed4(d_h));
        const auto lines = compute_table(table.number);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const PublishedPair& row = table.rows[i];
            const CodeParameters& a = lines[i].first;
            const CodeParameters& b = lines[i].second;
            ++rows;
            std::string bad;
            if (a.n_f != row.n_f_first || b.n_f != row.n_f_second) bad += " n_f";
            if (std::abs(a.l_pq - row.l_first) > kTol || std::abs(b.l_pq - row.l_second) > kTol) bad += " l";
            if (a.n != row.n) bad += " n";
            if (a.k != row.k) bad += " k";
            if (a.d_z != row.d_z) bad += " d_z(" + std::to_string(a.d_z) + " vs " + std::to_string(row.d_z) + ")";
            if (a.d_x != row.d_x) bad += " d_x(" + std::to_string(a.d_x) + " vs " + std::to_string(row.d_x) + ")";
            if (!bad.empty()) out.fail("table " + std::to_string(table.number) + " " + a.sym.to_string() + ":" + bad);
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 1.0) out.fail("runtime " + seconds(elapsed));
    out.note(std::to_string(rows) + " rows in " + seconds(elapsed));
    return out;
}

Outcome closed_form_check() {
    Outcome out;
    int checked = 0;
    for (const ClosedForm& f : closed_form_families()) {
        for (int g = 3; g <= 30; ++g) {
            const Surface s = Surface::non_orientable(g);
            const Rational faces = face_count(s, f.sym);
            const Rational length = faces * Rational(f.sym.p, 2);
            const ClosedForm tab = table5_closed_forms(f.sym, g);
            if (faces != Rational(tab.faces(g)) || length != Rational(tab.length(g))) {
                out.fail(f.sym.to_string() + " g=" + std::to_string(g));
            }
            ++checked;
        }
    }
    out.note(std::to_string(checked) + " (family, genus) pairs");
    return out;
}

Outcome orientable_double_cover_match() {
    Outcome out;
    int compared = 0;
    for (int h = 2; h <= 10; ++h) {
        for (int p = 3; p <= 20; ++p) {
            for (int q = 3; q <= 20; ++q) {
                const SchlafliSymbol sym{p, q};
                if (!is_admissible(Surface::orientable(h), sym)) continue;
                ++compared;
                if (!genus_doubling_check(h, sym)) out.fail(sym.to_string() + " h=" + std::to_string(h));
            }
        }
    }
    if (compared == 0) out.fail("nothing compared");
    out.note(std::to_string(compared) + " records compared");
    return out;
}

Outcome rate_ratio_exact() {
    Outcome out;
    int checked = 0;
    for (int g = 3; g <= 50; ++g) {
        const auto admissible = enumerate_admissible(Surface::non_orientable(g), 20, 20);
        if (admissible.empty()) {
            out.fail("no admissible symbol at g=" + std::to_string(g));
            continue;
        }
        // Ten evenly spaced picks (with repeats when fewer exist).
        for (int i = 0; i < 10; ++i) {
            const SchlafliSymbol sym = admissible[i * admissible.size() / 10].sym;
            const RateComparison r = rate_ratio(g, sym);
            if (r.ratio != Rational(g - 2, g - 1) || !(r.r2 > r.r1)) {
                out.fail(sym.to_string() + " g=" + std::to_string(g));
            }
            ++checked;
        }
    }
    out.note(std::to_string(checked) + " samples");
    return out;
}

Outcome caption_distances() {
    Outcome out;
    const std::pair<int, double> expected[] = {{5, 3.5796}, {7, 4.3144}, {9, 4.8414}, {11, 5.2548}};
    for (const auto& [g, value] : expected) {
        const double d = opposite_edge_distance(2 * g);
        if (std::abs(d - value) > kTol) out.fail("g=" + std::to_string(g) + " " + fixed4(d));
        out.note("g=" + std::to_string(g) + " " + fixed4(d));
    }
    return out;
}

Outcome toric_oracle() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    for (int l = 2; l <= 4; ++l) {
        const SurfaceComplex c = build_toric(l);
        const CssCode code = css_from_complex(c);
        const std::string tag = "l=" + std::to_string(l);
        if (code.n != 2 * l * l) out.fail(tag + " n");
        if (logical_count(code) != 2) out.fail(tag + " k");
        const Distances cyc = cycle_distances(c);
        if (cyc.d_x != l || cyc.d_z != l) out.fail(tag + " cycle distances");
        if (l <= 3) {
            const Distances exact = brute_force_distances(code);
            if (exact.d_x != l || exact.d_z != l) out.fail(tag + " exhaustive distances");
            if (exact.d_x != cyc.d_x || exact.d_z != cyc.d_z) out.fail(tag + " methods disagree");
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) out.fail("runtime " + seconds(elapsed));
    out.note(seconds(elapsed));
    return out;
}

Outcome homology_rank() {
    Outcome out;
    for (int h = 1; h <= 6; ++h) {
        const CssCode code = css_from_complex(build_polygon_code(Surface::orientable(h)));
        if (logical_count(code) != 2 * h) out.fail("orientable h=" + std::to_string(h));
    }
    for (int g = 1; g <= 12; ++g) {
        const CssCode code = css_from_complex(build_polygon_code(Surface::non_orientable(g)));
        if (logical_count(code) != g) out.fail("non-orientable g=" + std::to_string(g));
    }
    for (int l = 2; l <= 6; ++l) {
        if (logical_count(css_from_complex(build_klein(l))) != 2) out.fail("Klein l=" + std::to_string(l));
        if (logical_count(css_from_complex(build_projective(l))) != 1) out.fail("projective l=" + std::to_string(l));
    }
    out.note("6 orientable, 12 non-orientable polygon codes, 10 lattices");
    return out;
}

Outcome css_commutation() {
    Outcome out;
    std::vector<SurfaceComplex> all;
    for (int l = 2; l <= 6; ++l) {
        all.push_back(build_toric(l));
        all.push_back(build_klein(l));
        all.push_back(build_projective(l));
    }
    for (int h = 1; h <= 6; ++h) all.push_back(build_polygon_code(Surface::orientable(h)));
    for (int g = 1; g <= 12; ++g) all.push_back(build_polygon_code(Surface::non_orientable(g)));
    int bad = 0;
    for (const SurfaceComplex& c : all) bad += css_from_complex(c).stabilizers_commute() ? 0 : 1;
    if (bad != 0) out.fail(std::to_string(bad) + " complexes do not commute");
    if (all.size() < 20) out.fail("only " + std::to_string(all.size()) + " instances");
    out.note(std::to_string(all.size()) + " complexes");
    return out;
}

Outcome duality_swap() {
    Outcome out;
    int pairs = 0;
    for (const PublishedTable& table : published_tables()) {
        const Surface s = Surface::non_orientable(table.genus);
        for (const PublishedPair& row : table.rows) {
            const CodeParameters a = aqsc_parameters(s, row.first);
            const CodeParameters b = aqsc_parameters(s, row.first.dual());
            if (a.n != b.n || a.k != b.k || a.d_x != b.d_z || a.d_z != b.d_x) {
                out.fail("table " + std::to_string(table.number) + " " + row.first.to_string());
            }
            ++pairs;
        }
    }
    out.note(std::to_string(pairs) + " pairs");
    return out;
}

Outcome heptagonal_gaps() {
    Outcome out;
    const auto pts = gap_series(5, 31);
    const std::int64_t expected[] = {3, 4, 4, 5};
    if (pts.size() < 4) {
        out.fail("series too short");
        return out;
    }
    for (int i = 0; i < 4; ++i) {
        const std::int64_t gap = pts[i].d_z - pts[i].d_x;
        if (pts[i].genus != 5 + 2 * i || gap != expected[i]) {
            out.fail("g=" + std::to_string(pts[i].genus) + " gap " + std::to_string(gap));
        }
    }
    std::ostringstream series;
    std::string drops;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        series << (i ? "," : "") << pts[i].d_z - pts[i].d_x;
        if (i > 0 && pts[i].d_z - pts[i].d_x < pts[i - 1].d_z - pts[i - 1].d_x) {
            drops += " g=" + std::to_string(pts[i].genus);
        }
    }
    out.note("gaps g=5..31: " + series.str());
    // Only the four table genera are asserted; later dips are reported.
    if (!drops.empty()) out.note("not monotone beyond the table genera, decreases at" + drops);
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"table reproduction (tables 1-4)", table_reproduction},
        {"closed forms (table 5), g = 3..30", closed_form_check},
        {"orientable genus h vs non-orientable genus 2h records", orientable_double_cover_match},
        {"exact rate ratio (g-2)/(g-1), g = 3..50", rate_ratio_exact},
        {"opposite-edge distance caption values", caption_distances},
        {"toric oracle l = 2..4", toric_oracle},
        {"homology rank k = 2 - chi", homology_rank},
        {"CSS commutation", css_commutation},
        {"dual symbol swaps (d_x, d_z)", duality_swap},
        {"{3,7} distance gaps", heptagonal_gaps},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += o.passed ? 0 : 1;
        std::printf("%s criterion %zu: %s  (%s)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
