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

#include "aqsc/suites.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "aqsc/error.hpp"
#include "aqsc/homology.hpp"
#include "aqsc/published_tables.hpp"

namespace aqsc {

namespace {

constexpr double kTableTolerance = 5e-4;

std::string rational_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

std::string times_g_minus_2(std::int64_t coeff) {
    return coeff == 1 ? "(g - 2)" : std::to_string(coeff) + "(g - 2)";
}

void add(VerificationReport& report, std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
}

std::string render_closed_forms(Format format) {
    std::ostringstream out;
    const auto& families = closed_form_families();
    switch (format) {
        case Format::Json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& f : families) {
                arr.push_back({{"p", f.sym.p},
                               {"q", f.sym.q},
                               {"face_coeff", f.face_coeff},
                               {"length_coeff", f.length_coeff},
                               {"n_f", times_g_minus_2(f.face_coeff)},
                               {"record", "[[" + times_g_minus_2(f.length_coeff) + ", g, d_z/d_x]]"}});
            }
            out << nlohmann::json{{"table", 5}, {"families", arr}}.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << "p,q,face_coeff,length_coeff\n";
            for (const auto& f : families) out << f.sym.p << ',' << f.sym.q << ',' << f.face_coeff << ',' << f.length_coeff << '\n';
            break;
        case Format::Markdown:
            out << "| {p,q} | n_f | [[n, k, d_z/d_x]] |\n|---|---|---|\n";
            for (const auto& f : families) {
                out << "| " << f.sym.to_string() << " | " << times_g_minus_2(f.face_coeff) << " | [["
                    << times_g_minus_2(f.length_coeff) << ", g, d_z/d_x]] |\n";
            }
            break;
        case Format::Text:
            out << "Table 5: codes from the 2g-gon, non-orientable genus g\n";
            for (const auto& f : families) {
                out << std::left << std::setw(9) << f.sym.to_string() << std::setw(10) << times_g_minus_2(f.face_coeff)
                    << "[[" << times_g_minus_2(f.length_coeff) << ", g, d_z/d_x]]\n";
            }
            break;
    }
    return out.str();
}

}  // namespace

std::vector<TableLine> compute_table(int number) {
    const PublishedTable& table = published_table(number);
    const Surface surface = Surface::non_orientable(table.genus);
    std::vector<TableLine> lines;
    for (const PublishedPair& row : table.rows) {
        lines.push_back({aqsc_parameters(surface, row.first), aqsc_parameters(surface, row.first.dual()),
                         row.record_on_second_line, row.single_bracket});
    }
    return lines;
}

std::string render_table(int number, Format format) {
    if (number == 5) return render_closed_forms(format);
    const PublishedTable& table = published_table(number);
    const std::vector<TableLine> lines = compute_table(number);
    const double d_h = opposite_edge_distance(2 * table.genus);
    std::ostringstream out;
    switch (format) {
        case Format::Json: {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& line : lines) {
                nlohmann::json row{{"first", to_json(line.first)},
                                   {"second", to_json(line.second)},
                                   {"record", record_string(line.first)},
                                   {"record_on_second_line", line.record_on_second_line}};
                if (line.single_bracket) row["footnote"] = "record printed with single brackets in the source table";
                rows.push_back(std::move(row));
            }
            out << nlohmann::json{{"table", number},
                                  {"genus", table.genus},
                                  {"orientability", "non-orientable"},
                                  {"d_h", d_h},
                                  {"d_h_4dp", fixed4(d_h)},
                                  {"rows", rows}}
                       .dump(2)
                << '\n';
            break;
        }
        case Format::Csv:
            out << csv_header() << '\n';
            for (const auto& line : lines) out << csv_row(line.first) << '\n' << csv_row(line.second) << '\n';
            break;
        case Format::Markdown:
        case Format::Text: {
            const bool md = format == Format::Markdown;
            if (md) {
                out << "**Table " << number << "**: non-orientable genus " << table.genus << ", d_h = " << fixed4(d_h)
                    << "\n\n| {p,q} | n_f | l(p,q) | [[n, k, d_z/d_x]] |\n|---|---|---|---|\n";
            } else {
                out << "Table " << number << ": non-orientable genus " << table.genus << ", d_h = " << fixed4(d_h) << '\n'
                    << std::left << std::setw(9) << "{p,q}" << std::setw(6) << "n_f" << std::setw(9) << "l(p,q)"
                    << "[[n, k, d_z/d_x]]\n";
            }
            for (const auto& line : lines) {
                for (int which = 0; which < 2; ++which) {
                    const CodeParameters& rec = which == 0 ? line.first : line.second;
                    const bool carries = (which == 1) == line.record_on_second_line;
                    const std::string record = carries ? record_string(line.first) : "";
                    if (md) {
                        out << "| " << rec.sym.to_string() << " | " << rec.n_f << " | " << fixed4(rec.l_pq) << " | "
                            << record << " |\n";
                    } else {
                        std::ostringstream row;
                        row << std::left << std::setw(9) << rec.sym.to_string() << std::setw(6) << rec.n_f
                            << std::setw(9) << fixed4(rec.l_pq) << record;
                        std::string s = row.str();
                        s.erase(s.find_last_not_of(' ') + 1);
                        out << s << '\n';
                    }
                }
            }
            break;
        }
    }
    return out.str();
}

std::vector<RatePoint> rate_series(int g_min, int g_max) {
    if (g_min < 3) throw Error(ErrorCode::DegenerateGenus, "rate comparison needs g >= 3");
    std::vector<RatePoint> out;
    for (const ClosedForm& f : closed_form_families()) {
        for (int g = g_min; g <= g_max; ++g) {
            if (g % 2 == 1) out.push_back({f.sym, g, rate_ratio(g, f.sym)});
        }
    }
    return out;
}

std::vector<GapPoint> gap_series(int g_min, int g_max) {
    const SchlafliSymbol sym{3, 7};
    std::vector<int> genera;
    for (int g = std::max(g_min, 3); g <= g_max; ++g) {
        if (g % 2 == 1) genera.push_back(g);
    }
    std::vector<GapPoint> out;
    for (int g : genera) {
        const Surface s = Surface::non_orientable(g);
        if (!is_admissible(s, sym)) continue;
        const CodeParameters rec = aqsc_parameters(s, sym);
        out.push_back({sym, g, rec.d_z, rec.d_x});
    }
    return out;
}

std::string render_figure(int which, int g_min, int g_max, Format format) {
    std::ostringstream out;
    if (which == 5) {
        const auto series = rate_series(g_min, g_max);
        if (format == Format::Json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& pt : series) {
                arr.push_back({{"p", pt.sym.p},
                               {"q", pt.sym.q},
                               {"g", pt.genus},
                               {"r1", to_double(pt.rates.r1)},
                               {"r2", to_double(pt.rates.r2)},
                               {"r1_exact", rational_string(pt.rates.r1)},
                               {"r2_exact", rational_string(pt.rates.r2)},
                               {"r1_over_r2", rational_string(pt.rates.ratio)}});
            }
            out << nlohmann::json{{"figure", 5}, {"series", arr}}.dump(2) << '\n';
        } else {
            const bool md = format == Format::Markdown;
            out << (md ? "| p | q | g | r1 | r2 | r1/r2 |\n|---|---|---|---|---|---|\n" : "p,q,g,r1,r2,r1_over_r2\n");
            for (const auto& pt : series) {
                const std::string sep = md ? " | " : ",";
                out << (md ? "| " : "") << pt.sym.p << sep << pt.sym.q << sep << pt.genus << sep
                    << fixed4(to_double(pt.rates.r1)) << sep << fixed4(to_double(pt.rates.r2)) << sep
                    << rational_string(pt.rates.ratio) << (md ? " |" : "") << '\n';
            }
        }
        return out.str();
    }
    if (which != 6) throw Error(ErrorCode::InvalidArgument, "figure must be 5 or 6");
    const auto series = gap_series(g_min, g_max);
    if (format == Format::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& pt : series) {
            arr.push_back({{"p", pt.sym.p}, {"q", pt.sym.q}, {"g", pt.genus}, {"d_z", pt.d_z}, {"d_x", pt.d_x},
                           {"gap", pt.d_z - pt.d_x}});
        }
        out << nlohmann::json{{"figure", 6}, {"series", arr}}.dump(2) << '\n';
    } else {
        const bool md = format == Format::Markdown;
        out << (md ? "| p | q | g | d_z | d_x | gap |\n|---|---|---|---|---|---|\n" : "p,q,g,d_z,d_x,gap\n");
        for (const auto& pt : series) {
            const std::string sep = md ? " | " : ",";
            out << (md ? "| " : "") << pt.sym.p << sep << pt.sym.q << sep << pt.genus << sep << pt.d_z << sep << pt.d_x
                << sep << pt.d_z - pt.d_x << (md ? " |" : "") << '\n';
        }
    }
    return out.str();
}

int VerificationReport::failures() const {
    int n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"suite", suite}, {"total", checks.size()}, {"failures", failures()}, {"checks", arr}};
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << '\n';
    }
    out << suite << ": " << checks.size() - failures() << "/" << checks.size() << " passed\n";
    return out.str();
}

VerificationReport verify_theorems(int h_max, int pq_max, int g_max) {
    VerificationReport report{"theorems", {}};
    for (int h = 2; h <= h_max; ++h) {
        int tested = 0;
        std::string failed;
        for (int p = 3; p <= pq_max; ++p) {
            for (int q = 3; q <= pq_max; ++q) {
                const SchlafliSymbol sym{p, q};
                if (!is_admissible(Surface::orientable(h), sym)) continue;
                ++tested;
                if (!genus_doubling_check(h, sym)) failed += " " + sym.to_string();
            }
        }
        add(report, "even genus " + std::to_string(2 * h) + " matches orientable genus " + std::to_string(h),
            failed.empty(), std::to_string(tested) + " symbols" + (failed.empty() ? "" : "; mismatched:" + failed));
    }
    for (int g = 3; g <= g_max; ++g) {
        int tested = 0;
        std::string failed;
        const Rational expected(g - 2, g - 1);
        for (int p = 3; p <= pq_max; ++p) {
            for (int q = 3; q <= pq_max; ++q) {
                const SchlafliSymbol sym{p, q};
                if (!sym.is_hyperbolic()) continue;
                ++tested;
                const RateComparison rc = rate_ratio(g, sym);
                if (rc.ratio != expected || !(rc.r2 > rc.r1)) failed += " " + sym.to_string();
            }
        }
        add(report, "rate ratio (g-2)/(g-1) at g = " + std::to_string(g), failed.empty(),
            std::to_string(tested) + " symbols" + (failed.empty() ? "" : "; mismatched:" + failed));
    }
    for (const PublishedTable& table : published_tables()) {
        int tested = 0;
        std::string failed;
        for (const TableLine& line : compute_table(table.number)) {
            ++tested;
            const bool ok = line.first.n == line.second.n && line.first.k == line.second.k &&
                            line.first.d_x == line.second.d_z && line.first.d_z == line.second.d_x;
            if (!ok) failed += " " + line.first.sym.to_string();
        }
        add(report, "dual swap on table " + std::to_string(table.number) + " pairs", failed.empty(),
            std::to_string(tested) + " pairs" + (failed.empty() ? "" : "; mismatched:" + failed));
    }
    return report;
}

VerificationReport verify_oracle(int toric_max, int polygon_max, int lattice_max) {
    VerificationReport report{"oracle", {}};
    auto code_checks = [&report](const std::string& name, const SurfaceComplex& c, int expected_chi) {
        const CssCode code = css_from_complex(c);
        const int k = logical_count(code);
        const bool ok = c.is_closed_surface() && code.stabilizers_commute() && c.euler_characteristic() == expected_chi &&
                        k == 2 - expected_chi;
        add(report, name + ": closed, commuting, k = 2 - chi", ok,
            "chi=" + std::to_string(c.euler_characteristic()) + " k=" + std::to_string(k));
    };
    for (int l = 2; l <= toric_max; ++l) {
        const SurfaceComplex c = build_toric(l);
        code_checks("torus l=" + std::to_string(l), c, 0);
        const CssCode code = css_from_complex(c);
        const Distances d = compute_distances(c);
        const bool ok = code.n == 2 * l * l && logical_count(code) == 2 && d.d_x == l && d.d_z == l;
        add(report, "torus l=" + std::to_string(l) + ": n = 2l^2, k = 2, d_x = d_z = l", ok,
            "n=" + std::to_string(code.n) + " d_x=" + std::to_string(d.d_x) + " d_z=" + std::to_string(d.d_z) +
                (d.method == DistanceMethod::Exhaustive ? " (exhaustive)" : " (cycle)"));
        if (code.n <= kExhaustiveQubitLimit) {
            const Distances cyc = cycle_distances(c);
            add(report, "torus l=" + std::to_string(l) + ": exhaustive and cycle distances agree",
                cyc.d_x == d.d_x && cyc.d_z == d.d_z);
        }
    }
    for (int h = 1; h <= polygon_max; ++h) {
        const Surface s = Surface::orientable(h);
        code_checks("polygon code " + s.to_string(), build_polygon_code(s), euler_characteristic(s));
    }
    for (int g = 1; g <= 2 * polygon_max; ++g) {
        const Surface s = Surface::non_orientable(g);
        code_checks("polygon code " + s.to_string(), build_polygon_code(s), euler_characteristic(s));
    }
    for (int l = 2; l <= lattice_max; ++l) {
        code_checks("Klein bottle lattice l=" + std::to_string(l), build_klein(l), 0);
        code_checks("projective plane lattice l=" + std::to_string(l), build_projective(l), 1);
    }
    return report;
}

VerificationReport verify_tables() {
    VerificationReport report{"tables", {}};
    for (const PublishedTable& table : published_tables()) {
        const std::string prefix = "table " + std::to_string(table.number) + " ";
        const double d_h = opposite_edge_distance(2 * table.genus);
        add(report, prefix + "d_h", std::abs(d_h - table.d_h) <= kTableTolerance,
            "computed " + fixed4(d_h) + " printed " + fixed4(table.d_h));
        const std::vector<TableLine> lines = compute_table(table.number);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const PublishedPair& row = table.rows[i];
            const CodeParameters& a = lines[i].first;
            const CodeParameters& b = lines[i].second;
            std::string bad;
            if (a.n_f != row.n_f_first) bad += " n_f" + a.sym.to_string() + "=" + std::to_string(a.n_f);
            if (b.n_f != row.n_f_second) bad += " n_f" + b.sym.to_string() + "=" + std::to_string(b.n_f);
            if (std::abs(a.l_pq - row.l_first) > kTableTolerance) bad += " l" + a.sym.to_string() + "=" + fixed4(a.l_pq);
            if (std::abs(b.l_pq - row.l_second) > kTableTolerance) bad += " l" + b.sym.to_string() + "=" + fixed4(b.l_pq);
            if (a.n != row.n) bad += " n=" + std::to_string(a.n);
            if (a.k != row.k) bad += " k=" + std::to_string(a.k);
            if (a.d_z != row.d_z) bad += " d_z=" + std::to_string(a.d_z);
            if (a.d_x != row.d_x) bad += " d_x=" + std::to_string(a.d_x);
            std::ostringstream printed;
            printed << "[[" << row.n << ", " << row.k << ", " << row.d_z << '/' << row.d_x << "]]";
            add(report, prefix + a.sym.to_string() + "/" + b.sym.to_string(), bad.empty(),
                "computed " + record_string(a) + " printed " + printed.str() + (bad.empty() ? "" : "; differs:" + bad));
        }
    }
    for (const ClosedForm& f : closed_form_families()) {
        std::string bad;
        for (int g = 3; g <= 30; ++g) {
            const Surface s = Surface::non_orientable(g);
            const Rational faces = face_count(s, f.sym);
            const Rational length = faces * Rational(f.sym.p, 2);
            if (faces != Rational(f.faces(g)) || length != Rational(f.length(g))) bad += " g=" + std::to_string(g);
        }
        add(report, "table 5 " + f.sym.to_string() + " closed form, g = 3..30", bad.empty(), bad);
    }
    return report;
}

}  // namespace aqsc
