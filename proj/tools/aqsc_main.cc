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

// aqsc: parameter records, tables, figure data and self-checks for
// asymmetric surface codes on {p,q}-tessellated surfaces.
//
// Exit codes: 0 success, 1 usage error, 2 inadmissible input,
// 2 + (number of failed checks, capped at 98) for `verify`.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "aqsc/designer.hpp"
#include "aqsc/error.hpp"
#include "aqsc/homology.hpp"
#include "aqsc/output.hpp"
#include "aqsc/suites.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInadmissible = 2;
constexpr int kMaxVerifyExit = 100;

struct SurfaceFlags {
    bool orientable = false;
    bool non_orientable = false;
    int genus = 0;

    void attach(CLI::App* cmd) {
        auto* o = cmd->add_flag("--orientable", orientable, "Orientable surface of genus h");
        auto* n = cmd->add_flag("--non-orientable", non_orientable, "Non-orientable surface of genus g");
        o->excludes(n);
        cmd->add_option("-g,--genus", genus, "Surface genus")->required()->check(CLI::PositiveNumber);
    }

    aqsc::Surface surface() const {
        if (orientable == non_orientable) {
            throw aqsc::Error(aqsc::ErrorCode::InvalidArgument, "pass exactly one of --orientable / --non-orientable");
        }
        return aqsc::Surface::make(genus, orientable ? aqsc::Orientability::Orientable
                                                     : aqsc::Orientability::NonOrientable);
    }
};

std::string default_format() {
    const char* env = std::getenv("AQSC_FORMAT");
    return env != nullptr && *env != '\0' ? env : "text";
}

int run_params(const SurfaceFlags& sf, int p, int q, aqsc::Format format) {
    const aqsc::Surface surface = sf.surface();
    const aqsc::SchlafliSymbol sym = aqsc::SchlafliSymbol::make(p, q);
    const aqsc::Admissibility adm = aqsc::is_admissible(surface, sym);
    if (!adm) {
        std::cerr << "inadmissible: " << sym.to_string() << " on " << surface.to_string() << ": "
                  << aqsc::to_string(adm.reason) << '\n';
        return kExitInadmissible;
    }
    std::cout << aqsc::render_records({aqsc::aqsc_parameters(surface, sym)}, format);
    return 0;
}

int run_enumerate(const SurfaceFlags& sf, int p_max, int q_max, std::optional<double> min_rate, aqsc::Format format) {
    auto records = aqsc::enumerate_admissible(sf.surface(), p_max, q_max);
    if (min_rate) {
        std::erase_if(records, [&](const aqsc::CodeParameters& r) {
            return static_cast<double>(r.k) / static_cast<double>(r.n) < *min_rate;
        });
    }
    std::cout << aqsc::render_records(records, format);
    return 0;
}

int run_verify(const std::string& suite, int h_max, int pq_max, int g_max, int toric_max, int polygon_max,
               int lattice_max, aqsc::Format format) {
    aqsc::VerificationReport report;
    if (suite == "theorems") {
        report = aqsc::verify_theorems(h_max, pq_max, g_max);
    } else if (suite == "oracle") {
        report = aqsc::verify_oracle(toric_max, polygon_max, lattice_max);
    } else {
        report = aqsc::verify_tables();
    }
    if (format == aqsc::Format::Json) {
        std::cout << report.to_json().dump(2) << '\n';
    } else {
        std::cout << report.to_text();
    }
    const int failures = report.failures();
    return failures == 0 ? 0 : std::min(kExitInadmissible + failures, kMaxVerifyExit);
}

struct ComplexFlags {
    int toric = 0;
    int klein = 0;
    int projective = 0;
    bool polygon = false;
    std::string input;
    bool emit = false;
    int p = 0;
    int q = 0;
};

int run_complex(const ComplexFlags& cf, const SurfaceFlags& sf, aqsc::Format format) {
    const int sources = (cf.toric > 0) + (cf.klein > 0) + (cf.projective > 0) + cf.polygon + !cf.input.empty();
    if (sources != 1) {
        throw aqsc::Error(aqsc::ErrorCode::InvalidArgument,
                          "choose exactly one of --toric, --klein, --projective, --polygon, --input");
    }
    aqsc::SurfaceComplex c;
    if (cf.toric > 0) {
        c = aqsc::build_toric(cf.toric);
    } else if (cf.klein > 0) {
        c = aqsc::build_klein(cf.klein);
    } else if (cf.projective > 0) {
        c = aqsc::build_projective(cf.projective);
    } else if (cf.polygon) {
        c = aqsc::build_polygon_code(sf.surface());
    } else {
        std::ifstream in(cf.input);
        if (!in) throw aqsc::Error(aqsc::ErrorCode::InvalidArgument, "cannot open " + cf.input);
        c = aqsc::read_complex(in);
    }
    if (cf.emit) {
        aqsc::write_complex(std::cout, c);
        return 0;
    }
    const aqsc::CssCode code = aqsc::css_from_complex(c);
    const int k = aqsc::logical_count(code);
    nlohmann::json j{{"V", c.n_vertices},
                     {"E", c.n_edges},
                     {"F", c.n_faces},
                     {"chi", c.euler_characteristic()},
                     {"n", code.n},
                     {"k", k},
                     {"stabilizers_commute", code.stabilizers_commute()}};
    if (k > 0) {
        const aqsc::Distances d = aqsc::compute_distances(c);
        j["d_x"] = d.d_x;
        j["d_z"] = d.d_z;
        j["distance_method"] = d.method == aqsc::DistanceMethod::Exhaustive ? "exhaustive" : "cycle";
    }
    if (cf.p > 0 && cf.q > 0) j["regular"] = aqsc::verify_regularity(c, aqsc::SchlafliSymbol::make(cf.p, cf.q));
    if (format == aqsc::Format::Json) {
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymmetric surface code designer for {p,q}-tessellated surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_name = default_format();
    app.add_option("-f,--format", format_name, "Output format: text, csv, json, markdown (env AQSC_FORMAT)")
        ->check(CLI::IsMember({"text", "csv", "json", "markdown", "md"}));

    SurfaceFlags params_surface;
    int p = 0;
    int q = 0;
    auto* params = app.add_subcommand("params", "Parameter record for one surface and tessellation");
    params_surface.attach(params);
    params->add_option("-p", p, "Edges per face")->required();
    params->add_option("-q", q, "Faces per vertex")->required();

    int table_number = 0;
    auto* tables = app.add_subcommand("tables", "Recompute parameter table 1-5");
    tables->add_option("which", table_number, "Table number")->required()->check(CLI::Range(1, 5));

    int figure_number = 0;
    int fig_g_min = 5;
    int fig_g_max = 31;
    auto* figures = app.add_subcommand("figures", "Emit figure data series (5: rates, 6: d_z - d_x)");
    figures->add_option("which", figure_number, "Figure number")->required()->check(CLI::IsMember({5, 6}));
    figures->add_option("--g-min", fig_g_min, "Smallest genus")->check(CLI::Range(3, 10000));
    figures->add_option("--g-max", fig_g_max, "Largest genus");

    std::string suite;
    int h_max = 10;
    int pq_max = 20;
    int g_max = 50;
    int toric_max = 4;
    int polygon_max = 6;
    int lattice_max = 6;
    auto* verify = app.add_subcommand("verify", "Run a self-check suite");
    verify->add_option("suite", suite, "theorems | oracle | tables")
        ->required()
        ->check(CLI::IsMember({"theorems", "oracle", "tables"}));
    verify->add_option("--h-max", h_max, "Largest orientable genus for the even-genus check");
    verify->add_option("--pq-max", pq_max, "Largest p and q");
    verify->add_option("--g-max", g_max, "Largest genus for the rate-ratio check");
    verify->add_option("--toric-max", toric_max, "Largest torus lattice size")->check(CLI::Range(2, 8));
    verify->add_option("--polygon-max", polygon_max, "Largest orientable polygon-code genus");
    verify->add_option("--lattice-max", lattice_max, "Largest Klein/projective lattice size");

    SurfaceFlags enum_surface;
    int max_pq = 0;
    int p_max = 30;
    int q_max = 30;
    std::optional<double> min_rate;
    auto* enumerate = app.add_subcommand("enumerate", "All admissible tessellations within bounds");
    enum_surface.attach(enumerate);
    enumerate->add_option("--max", max_pq, "Bound for both p and q");
    enumerate->add_option("--p-max", p_max, "Bound for p");
    enumerate->add_option("--q-max", q_max, "Bound for q");
    enumerate->add_option("--min-rate", min_rate, "Keep records with k/n at least this");

    ComplexFlags cf;
    SurfaceFlags complex_surface;
    auto* complex = app.add_subcommand("complex", "Exact GF(2) check of a small surface complex");
    complex->add_option("--toric", cf.toric, "l x l torus lattice");
    complex->add_option("--klein", cf.klein, "l x l Klein bottle lattice");
    complex->add_option("--projective", cf.projective, "l x l projective plane lattice");
    complex->add_flag("--polygon", cf.polygon, "Single-face fundamental polygon (needs surface flags)");
    complex->add_flag("--orientable", complex_surface.orientable, "Orientable polygon code");
    complex->add_flag("--non-orientable", complex_surface.non_orientable, "Non-orientable polygon code");
    complex->add_option("-g,--genus", complex_surface.genus, "Polygon code genus");
    complex->add_option("--input", cf.input, "Read a complex fixture file");
    complex->add_flag("--emit", cf.emit, "Print the complex in fixture format instead of analysing it");
    complex->add_option("-p", cf.p, "Check regularity against {p,q}");
    complex->add_option("-q", cf.q, "Check regularity against {p,q}");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const aqsc::Format format = aqsc::parse_format(format_name);
        if (params->parsed()) return run_params(params_surface, p, q, format);
        if (tables->parsed()) {
            std::cout << aqsc::render_table(table_number, format);
            return 0;
        }
        if (figures->parsed()) {
            std::cout << aqsc::render_figure(figure_number, fig_g_min, fig_g_max, format);
            return 0;
        }
        if (verify->parsed()) {
            // Reports are JSON unless a format was asked for explicitly.
            const bool explicit_format = app.count("--format") > 0 || std::getenv("AQSC_FORMAT") != nullptr;
            return run_verify(suite, h_max, pq_max, g_max, toric_max, polygon_max, lattice_max,
                              explicit_format ? format : aqsc::Format::Json);
        }
        if (enumerate->parsed()) {
            if (max_pq > 0) p_max = q_max = max_pq;
            return run_enumerate(enum_surface, p_max, q_max, min_rate, format);
        }
        if (complex->parsed()) return run_complex(cf, complex_surface, format);
    } catch (const aqsc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
            case aqsc::ErrorCode::NotAdmissible:
            case aqsc::ErrorCode::NotHyperbolic:
            case aqsc::ErrorCode::NonHyperbolicSurface:
                return kExitInadmissible;
            default:
                return kExitUsage;
        }
    }
    return kExitUsage;
}
