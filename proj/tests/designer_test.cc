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

#include <algorithm>
#include <cmath>

#include "aqsc/error.hpp"
#include "gtest/gtest.h"

using namespace aqsc;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected aqsc::Error";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(surface, euler_characteristic) {
    EXPECT_EQ(euler_characteristic(Surface::orientable(1)), 0);
    EXPECT_EQ(euler_characteristic(Surface::orientable(3)), -4);
    EXPECT_EQ(euler_characteristic(Surface::non_orientable(1)), 1);
    EXPECT_EQ(euler_characteristic(Surface::non_orientable(2)), 0);
    EXPECT_EQ(euler_characteristic(Surface::non_orientable(5)), -3);
    EXPECT_FALSE(Surface::non_orientable(2).is_hyperbolic());
    EXPECT_TRUE(Surface::non_orientable(3).is_hyperbolic());
    EXPECT_EQ(code_of([] { Surface::non_orientable(0); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { Surface::orientable(0); }), ErrorCode::InvalidArgument);
}

TEST(face_count, exact_values) {
    EXPECT_EQ(face_count(Surface::non_orientable(5), {3, 7}), Rational(42));
    EXPECT_EQ(face_count(Surface::non_orientable(7), {4, 5}), Rational(25));
    EXPECT_EQ(face_count(Surface::non_orientable(5), {10, 10}), Rational(1));
    EXPECT_EQ(face_count(Surface::orientable(2), {8, 8}), Rational(1));
    EXPECT_EQ(face_count(Surface::non_orientable(5), {3, 10}), Rational(15));
    EXPECT_EQ(face_count(Surface::non_orientable(6), {4, 7}), Rational(28, 3));
    EXPECT_EQ(code_of([] { face_count(Surface::orientable(1), {4, 5}); }), ErrorCode::NotHyperbolic);
    EXPECT_EQ(code_of([] { face_count(Surface::orientable(2), {4, 4}); }), ErrorCode::NotHyperbolic);
}

TEST(face_count, agrees_with_area_quotient) {
    for (int genus = 1; genus <= 30; ++genus) {
        for (Orientability o : {Orientability::Orientable, Orientability::NonOrientable}) {
            const Surface s = Surface::make(genus, o);
            if (!s.is_hyperbolic()) continue;
            for (int p = 3; p <= 30; ++p) {
                for (int q = 3; q <= 30; ++q) {
                    const SchlafliSymbol sym{p, q};
                    if (!sym.is_hyperbolic()) continue;
                    const Rational exact = face_count(s, sym);
                    const double approx = face_count_by_area(s, sym);
                    EXPECT_NEAR(boost::rational_cast<double>(exact), approx, 1e-9 * std::max(1.0, approx))
                        << sym.to_string() << " on " << s.to_string();
                }
            }
        }
    }
}

TEST(is_admissible, reasons) {
    EXPECT_TRUE(is_admissible(Surface::non_orientable(5), {3, 7}));
    EXPECT_TRUE(is_admissible(Surface::non_orientable(5), {7, 3}));
    EXPECT_TRUE(is_admissible(Surface::non_orientable(5), {10, 10}));
    EXPECT_EQ(is_admissible(Surface::non_orientable(6), {4, 7}).reason, AdmissibilityReason::FractionalFaceCount);
    EXPECT_EQ(is_admissible(Surface::non_orientable(2), {3, 7}).reason, AdmissibilityReason::SurfaceNotHyperbolic);
    EXPECT_EQ(is_admissible(Surface::non_orientable(5), {4, 4}).reason, AdmissibilityReason::SymbolNotHyperbolic);
    // {3,10} on genus 5: n_f = 15 but V = 3 * 15 / 10 is not an integer.
    EXPECT_EQ(is_admissible(Surface::non_orientable(5), {3, 10}).reason, AdmissibilityReason::FractionalVertexCount);
    EXPECT_TRUE(is_admissible(Surface::non_orientable(4), {3, 10}));
}

TEST(is_admissible, implies_integral_counts_and_euler_relation) {
    for (int genus = 3; genus <= 20; ++genus) {
        for (Orientability o : {Orientability::Orientable, Orientability::NonOrientable}) {
            const Surface s = Surface::make(genus, o);
            for (const CodeParameters& rec : enumerate_admissible(s, 24, 24)) {
                EXPECT_GT(rec.n_f, 0);
                EXPECT_EQ(rec.sym.p * rec.n_f % rec.sym.q, 0);
                EXPECT_EQ(rec.sym.p * rec.n_f % 2, 0);
                EXPECT_EQ(rec.vertices() - rec.n + rec.n_f, euler_characteristic(s)) << rec.sym.to_string();
                EXPECT_EQ(rec.k, 2 - euler_characteristic(s));
                EXPECT_GE(rec.d_x, 1);
                EXPECT_GE(rec.d_z, 1);
            }
        }
    }
}

TEST(aqsc_parameters, worked_records) {
    const CodeParameters a = aqsc_parameters(Surface::non_orientable(5), {3, 7});
    EXPECT_EQ(a.n_f, 42);
    EXPECT_EQ(a.n, 63);
    EXPECT_EQ(a.k, 5);
    EXPECT_EQ(a.d_z, 7);
    EXPECT_EQ(a.d_x, 4);
    EXPECT_EQ(a.d(), 4);
    EXPECT_EQ(a.rate(), Rational(5, 63));
    EXPECT_NEAR(a.d_h, 3.5796, 5e-4);
    EXPECT_NEAR(a.l_pq, 1.0905, 5e-4);

    const CodeParameters b = aqsc_parameters(Surface::non_orientable(9), {5, 8});
    EXPECT_EQ(b.n, 20);
    EXPECT_EQ(b.k, 9);
    EXPECT_EQ(b.d_z, 3);
    EXPECT_EQ(b.d_x, 2);

    const CodeParameters c = aqsc_parameters(Surface::non_orientable(5), {10, 10});
    EXPECT_EQ(c.n, 5);
    EXPECT_EQ(c.d_x, 1);
    EXPECT_EQ(c.d_z, 1);

    EXPECT_EQ(code_of([] { aqsc_parameters(Surface::non_orientable(5), {3, 10}); }), ErrorCode::NotAdmissible);
    EXPECT_EQ(code_of([] { aqsc_parameters(Surface::orientable(1), {4, 4}); }), ErrorCode::NotAdmissible);
}

TEST(aqsc_parameters, distances_are_ceilings_of_length_ratios) {
    for (int genus = 3; genus <= 25; genus += 2) {
        for (const CodeParameters& rec : enumerate_admissible(Surface::non_orientable(genus), 20, 20)) {
            EXPECT_GE(rec.d_x * rec.l_pq, rec.d_h - 1e-12);
            EXPECT_LT((rec.d_x - 1) * rec.l_pq, rec.d_h);
            EXPECT_GE(rec.d_z * rec.l_qp, rec.d_h - 1e-12);
            EXPECT_LT((rec.d_z - 1) * rec.l_qp, rec.d_h);
        }
    }
}

TEST(aqsc_parameters, dual_symbol_swaps_distances) {
    for (int genus = 3; genus <= 30; ++genus) {
        const Surface s = Surface::non_orientable(genus);
        for (const CodeParameters& rec : enumerate_admissible(s, 20, 20)) {
            if (!is_admissible(s, rec.sym.dual())) continue;
            const CodeParameters dual = aqsc_parameters(s, rec.sym.dual());
            EXPECT_EQ(rec.d_x, dual.d_z) << rec.sym.to_string() << " g=" << genus;
            EXPECT_EQ(rec.d_z, dual.d_x) << rec.sym.to_string() << " g=" << genus;
            EXPECT_EQ(rec.n, dual.n);
            EXPECT_EQ(rec.n_f, dual.vertices());
        }
    }
}

TEST(enumerate_admissible, sorted_and_monotone_in_bounds) {
    const Surface s = Surface::non_orientable(11);
    const auto small = enumerate_admissible(s, 12, 12);
    const auto large = enumerate_admissible(s, 24, 24);
    EXPECT_TRUE(std::is_sorted(large.begin(), large.end(),
                               [](const CodeParameters& a, const CodeParameters& b) { return a.sym < b.sym; }));
    for (const CodeParameters& rec : small) {
        EXPECT_TRUE(std::any_of(large.begin(), large.end(), [&](const CodeParameters& r) { return r.sym == rec.sym; }))
            << rec.sym.to_string();
    }
    EXPECT_GT(large.size(), small.size());
    EXPECT_TRUE(enumerate_admissible(Surface::orientable(1), 20, 20).empty());
    EXPECT_TRUE(enumerate_admissible(Surface::non_orientable(2), 20, 20).empty());
    EXPECT_EQ(code_of([] { enumerate_admissible(Surface::non_orientable(5), 2, 9); }), ErrorCode::InvalidArgument);
}

TEST(closed_forms, match_face_count) {
    EXPECT_EQ(closed_form_families().size(), 7U);
    for (const ClosedForm& f : closed_form_families()) {
        for (int g = 3; g <= 40; ++g) {
            const Surface s = Surface::non_orientable(g);
            EXPECT_EQ(Rational(f.faces(g)), face_count(s, f.sym)) << f.sym.to_string() << " g=" << g;
            EXPECT_EQ(2 * f.length(g), f.sym.p * f.faces(g));
            ASSERT_TRUE(is_admissible(s, f.sym)) << f.sym.to_string() << " g=" << g;
            EXPECT_EQ(f.length(g), aqsc_parameters(s, f.sym).n);
        }
    }
    EXPECT_EQ(table5_closed_forms({7, 3}, 5).faces(5), 18);
    EXPECT_EQ(table5_closed_forms({7, 3}, 5).length(5), 63);
    EXPECT_EQ(table5_closed_forms({8, 4}, 10).length(10), 32);
    EXPECT_EQ(code_of([] { table5_closed_forms({3, 7}, 5); }), ErrorCode::UnsupportedSymbol);
    EXPECT_EQ(code_of([] { table5_closed_forms({7, 3}, 2); }), ErrorCode::InvalidArgument);
}

TEST(rate_ratio, exact_values) {
    EXPECT_EQ(rate_ratio(3, {7, 3}).ratio, Rational(1, 2));
    EXPECT_EQ(rate_ratio(5, {7, 3}).ratio, Rational(3, 4));
    EXPECT_EQ(rate_ratio(5, {7, 3}).r2, Rational(5, 63));
    EXPECT_EQ(code_of([] { rate_ratio(2, {7, 3}); }), ErrorCode::DegenerateGenus);
    EXPECT_EQ(code_of([] { rate_ratio(5, {4, 4}); }), ErrorCode::NotHyperbolic);
}

TEST(rate_ratio, independent_of_symbol) {
    for (int g = 3; g <= 60; ++g) {
        for (int p = 3; p <= 14; ++p) {
            for (int q = 3; q <= 14; ++q) {
                const SchlafliSymbol sym{p, q};
                if (!sym.is_hyperbolic()) continue;
                const RateComparison r = rate_ratio(g, sym);
                EXPECT_EQ(r.ratio, Rational(g - 2, g - 1)) << sym.to_string() << " g=" << g;
                const Rational excess(sym.excess());
                EXPECT_EQ(r.r2, Rational(g) * excess / Rational(std::int64_t{p} * q * (g - 2)));
                EXPECT_EQ(r.r1, Rational(g) * excess / Rational(std::int64_t{p} * q * (g - 1)));
            }
        }
    }
}

TEST(genus_doubling_check, orientable_h_matches_non_orientable_2h) {
    EXPECT_TRUE(genus_doubling_check(3, {3, 7}));
    EXPECT_TRUE(genus_doubling_check(2, {8, 8}));
    EXPECT_TRUE(genus_doubling_check(2, {5, 5}));
    int compared = 0;
    for (int h = 2; h <= 10; ++h) {
        for (int p = 3; p <= 20; ++p) {
            for (int q = 3; q <= 20; ++q) {
                const SchlafliSymbol sym{p, q};
                if (!is_admissible(Surface::orientable(h), sym)) continue;
                EXPECT_TRUE(genus_doubling_check(h, sym)) << sym.to_string() << " h=" << h;
                ++compared;
            }
        }
    }
    EXPECT_GT(compared, 50);
    EXPECT_EQ(code_of([] { genus_doubling_check(3, {4, 7}); }), ErrorCode::NotAdmissible);
    EXPECT_EQ(code_of([] { genus_doubling_check(1, {3, 7}); }), ErrorCode::InvalidArgument);
}

TEST(asymmetry_curve, heptagonal_dual_gaps) {
    const AsymmetryCurve curve = asymmetry_curve({3, 7}, {5, 7, 9, 11}, Orientability::NonOrientable);
    ASSERT_EQ(curve.points.size(), 4U);
    EXPECT_TRUE(curve.skipped.empty());
    EXPECT_EQ(curve.points[0].gap, 3);
    EXPECT_EQ(curve.points[1].gap, 4);
    EXPECT_EQ(curve.points[2].gap, 4);
    EXPECT_EQ(curve.points[3].gap, 5);
    EXPECT_EQ(curve.points[3].genus, 11);

    const AsymmetryCurve with_gaps = asymmetry_curve({3, 10}, {4, 5, 6}, Orientability::NonOrientable);
    EXPECT_EQ(with_gaps.skipped, (std::vector<int>{5}));
    ASSERT_EQ(with_gaps.points.size(), 2U);
    EXPECT_EQ(with_gaps.points[1].genus, 6);
}
