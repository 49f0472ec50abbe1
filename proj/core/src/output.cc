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

#include "aqsc/output.hpp"

#include <cfenv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "aqsc/error.hpp"

namespace aqsc {

Format parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name == "markdown" || name == "md") return Format::Markdown;
    throw Error(ErrorCode::InvalidArgument, "unknown output format '" + std::string(name) + "'");
}

std::string_view to_string(Format format) {
    switch (format) {
        case Format::Text: return "text";
        case Format::Csv: return "csv";
        case Format::Json: return "json";
        case Format::Markdown: return "markdown";
    }
    return "text";
}

std::string fixed4(double value) {
    // nearbyint honours the current rounding mode, which is ties-to-even
    // unless somebody changed it.
    const int saved = std::fegetround();
    std::fesetround(FE_TONEAREST);
    const double scaled = std::nearbyint(value * 1e4);
    std::fesetround(saved);
    const auto units = static_cast<std::int64_t>(scaled);
    const std::int64_t mag = units < 0 ? -units : units;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%" PRId64 ".%04" PRId64, units < 0 ? "-" : "", mag / 10000, mag % 10000);
    return buf;
}

std::string record_string(const CodeParameters& rec) {
    std::ostringstream out;
    out << "[[" << rec.n << ", " << rec.k << ", " << rec.d_z << '/' << rec.d_x << "]]";
    return out.str();
}

std::string_view csv_header() { return "p,q,n_f,l_pq,n,k,d_z,d_x"; }

std::string csv_row(const CodeParameters& rec) {
    std::ostringstream out;
    out << rec.sym.p << ',' << rec.sym.q << ',' << rec.n_f << ',' << fixed4(rec.l_pq) << ',' << rec.n << ',' << rec.k
        << ',' << rec.d_z << ',' << rec.d_x;
    return out.str();
}

nlohmann::json to_json(const CodeParameters& rec) {
    return {
        {"genus", rec.surface.genus},
        {"orientability", std::string(to_string(rec.surface.orientability))},
        {"p", rec.sym.p},
        {"q", rec.sym.q},
        {"n_f", rec.n_f},
        {"n", rec.n},
        {"k", rec.k},
        {"d_x", rec.d_x},
        {"d_z", rec.d_z},
        {"d", rec.d()},
        {"d_h", rec.d_h},
        {"l_pq", rec.l_pq},
        {"l_qp", rec.l_qp},
        {"d_h_4dp", fixed4(rec.d_h)},
        {"l_pq_4dp", fixed4(rec.l_pq)},
        {"l_qp_4dp", fixed4(rec.l_qp)},
        {"record", record_string(rec)},
        {"distance_provenance", rec.provenance == DistanceProvenance::Formula ? "formula" : "oracle"},
    };
}

CodeParameters record_from_json(const nlohmann::json& j) {
    try {
        const std::string orient = j.at("orientability").get<std::string>();
        if (orient != "orientable" && orient != "non-orientable") {
            throw Error(ErrorCode::ParseError, "unknown orientability '" + orient + "'");
        }
        CodeParameters rec{
            .surface = Surface::make(j.at("genus").get<int>(),
                                     orient == "orientable" ? Orientability::Orientable : Orientability::NonOrientable),
            .sym = SchlafliSymbol::make(j.at("p").get<int>(), j.at("q").get<int>()),
            .n_f = j.at("n_f").get<std::int64_t>(),
            .n = j.at("n").get<std::int64_t>(),
            .k = j.at("k").get<std::int64_t>(),
            .d_h = j.at("d_h").get<double>(),
            .l_pq = j.at("l_pq").get<double>(),
            .l_qp = j.at("l_qp").get<double>(),
            .d_x = j.at("d_x").get<std::int64_t>(),
            .d_z = j.at("d_z").get<std::int64_t>(),
        };
        const std::string prov = j.value("distance_provenance", "formula");
        rec.provenance = prov == "oracle" ? DistanceProvenance::OracleVerified : DistanceProvenance::Formula;
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string render_records(const std::vector<CodeParameters>& records, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::Json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : records) arr.push_back(to_json(r));
            out << arr.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << csv_header() << '\n';
            for (const auto& r : records) out << csv_row(r) << '\n';
            break;
        case Format::Markdown:
            out << "| {p,q} | n_f | l(p,q) | [[n, k, d_z/d_x]] |\n|---|---|---|---|\n";
            for (const auto& r : records) {
                out << "| " << r.sym.to_string() << " | " << r.n_f << " | " << fixed4(r.l_pq) << " | "
                    << record_string(r) << " |\n";
            }
            break;
        case Format::Text:
            for (const auto& r : records) {
                out << r.sym.to_string() << "  n_f=" << r.n_f << "  l(p,q)=" << fixed4(r.l_pq)
                    << "  d_h=" << fixed4(r.d_h) << "  " << record_string(r) << '\n';
            }
            break;
    }
    return out.str();
}

}  // namespace aqsc
