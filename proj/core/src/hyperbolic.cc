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

#include "aqsc/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>

#include "aqsc/error.hpp"

namespace aqsc {

namespace {

constexpr double kPi = std::numbers::pi;

void require_hyperbolic(SchlafliSymbol sym) {
    if (!sym.is_hyperbolic()) {
        throw Error(ErrorCode::NotHyperbolic, sym.to_string() + " has pq - 2p - 2q = " + std::to_string(sym.excess()));
    }
}

// Minimal union-find over corner indices 1..n.
class CornerClasses {
public:
    explicit CornerClasses(int n) : parent_(static_cast<std::size_t>(n) + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

}  // namespace

Point::Point(double x, double y, Model model) : x_(x), y_(y), model_(model) {
    const bool ok = model == Model::UpperHalfPlane ? (y > 0.0) : (x * x + y * y < 1.0);
    if (!ok || !std::isfinite(x) || !std::isfinite(y)) {
        throw Error(ErrorCode::InvalidPoint,
                    "(" + std::to_string(x) + ", " + std::to_string(y) + ") is outside the model");
    }
}

SchlafliSymbol SchlafliSymbol::make(int p, int q) {
    if (p < 3 || q < 3) {
        throw Error(ErrorCode::InvalidArgument,
                    "Schlafli symbol needs p, q >= 3, got {" + std::to_string(p) + "," + std::to_string(q) + "}");
    }
    return {p, q};
}

Curvature SchlafliSymbol::curvature() const noexcept {
    const long long e = excess();
    if (e > 0) return Curvature::Hyperbolic;
    if (e == 0) return Curvature::Euclidean;
    return Curvature::Spherical;
}

std::string SchlafliSymbol::to_string() const {
    return "{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

MobiusTransform MobiusTransform::normalized(double a, double b, double c, double d) {
    const double det = a * d - b * c;
    if (!(det > 0.0) || !std::isfinite(det)) {
        throw Error(ErrorCode::NotNormalizable, "ad - bc = " + std::to_string(det) + " is not positive");
    }
    const double s = std::sqrt(det);
    return {a / s, b / s, c / s, d / s};
}

bool MobiusTransform::approx_equal(const MobiusTransform& o, double tol) const noexcept {
    auto close = [tol](double u, double v) { return std::abs(u - v) <= tol; };
    const bool same = close(a_, o.a_) && close(b_, o.b_) && close(c_, o.c_) && close(d_, o.d_);
    const bool negated = close(a_, -o.a_) && close(b_, -o.b_) && close(c_, -o.c_) && close(d_, -o.d_);
    return same || negated;
}

MobiusTransform mobius_compose(const MobiusTransform& t1, const MobiusTransform& t2) {
    return {t1.a_ * t2.a_ + t1.b_ * t2.c_, t1.a_ * t2.b_ + t1.b_ * t2.d_,
            t1.c_ * t2.a_ + t1.d_ * t2.c_, t1.c_ * t2.b_ + t1.d_ * t2.d_};
}

Point mobius_apply(const MobiusTransform& t, const Point& z) {
    if (z.model() != Model::UpperHalfPlane) {
        throw Error(ErrorCode::ModelMismatch, "Moebius transforms act on upper half-plane points");
    }
    const std::complex<double> w = z.z();
    const std::complex<double> den = t.c() * w + t.d();
    if (std::abs(den) < 1e-300) {
        throw Error(ErrorCode::PoleAtPoint, "cz + d vanishes; image is the ideal point at infinity");
    }
    return Point::upper_half_plane((t.a() * w + t.b()) / den);
}

double hyperbolic_distance(const Point& z1, const Point& z2) {
    if (z1.model() != z2.model()) {
        throw Error(ErrorCode::ModelMismatch, "points belong to different models");
    }
    const double diff2 = std::norm(z1.z() - z2.z());
    double arg;
    if (z1.model() == Model::UpperHalfPlane) {
        arg = 1.0 + diff2 / (2.0 * z1.y() * z2.y());
    } else {
        arg = 1.0 + 2.0 * diff2 / ((1.0 - std::norm(z1.z())) * (1.0 - std::norm(z2.z())));
    }
    return std::acosh(std::max(1.0, arg));
}

double triangle_area(double alpha, double beta, double gamma) {
    if (alpha < 0.0 || beta < 0.0 || gamma < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "triangle angles must be nonnegative");
    }
    const double area = kPi - alpha - beta - gamma;
    // Sums within rounding of pi, e.g. three times pi/3, are flat.
    if (!(area > 16 * std::numeric_limits<double>::epsilon())) {
        throw Error(ErrorCode::AngleSumNotHyperbolic, "angle sum " + std::to_string(alpha + beta + gamma) + " >= pi");
    }
    return area;
}

double polygon_area(SchlafliSymbol sym) {
    require_hyperbolic(sym);
    return kPi * static_cast<double>(sym.excess()) / sym.q;
}

SchlafliSymbol fundamental_polygon(const Surface& surface) {
    if (!surface.is_hyperbolic()) {
        throw Error(ErrorCode::NonHyperbolicSurface, surface.to_string() + " has nonnegative Euler characteristic");
    }
    const int n = surface.polygon_sides();
    return {n, n};
}

// The bracket is >= 1 for every hyperbolic symbol, so this is arccosh, not arccos.
double edge_length(SchlafliSymbol sym) {
    require_hyperbolic(sym);
    const double cq = std::cos(kPi / sym.q);
    const double sq = std::sin(kPi / sym.q);
    return std::acosh((cq * cq + std::cos(2.0 * kPi / sym.p)) / (sq * sq));
}

double opposite_edge_distance(int n_gon) {
    if (n_gon % 2 != 0) {
        throw Error(ErrorCode::OddEdgeCount, "fundamental polygon needs an even side count, got " + std::to_string(n_gon));
    }
    if (n_gon < 6) {
        throw Error(ErrorCode::DegeneratePolygon, "{N,N} is not hyperbolic for N = " + std::to_string(n_gon));
    }
    return 2.0 * std::acosh(1.0 / std::tan(kPi / n_gon));
}

double circumradius(SchlafliSymbol sym) {
    require_hyperbolic(sym);
    // Right triangle centre / edge midpoint / vertex with angles pi/p and
    // pi/q: the hypotenuse satisfies cosh R = cot(pi/p) cot(pi/q).
    return std::acosh(1.0 / (std::tan(kPi / sym.p) * std::tan(kPi / sym.q)));
}

std::vector<Point> regular_polygon_vertices(SchlafliSymbol sym) {
    const double r = std::tanh(circumradius(sym) / 2.0);
    std::vector<Point> vertices;
    vertices.reserve(static_cast<std::size_t>(sym.p));
    for (int k = 0; k < sym.p; ++k) {
        vertices.push_back(Point::disk(std::polar(r, 2.0 * kPi * k / sym.p)));
    }
    return vertices;
}

EdgePairing::EdgePairing(int n_edges, std::vector<SidePair> pairs) : n_edges_(n_edges), pairs_(std::move(pairs)) {
    if (n_edges % 2 != 0) {
        throw Error(ErrorCode::OddEdgeCount, "cannot pair " + std::to_string(n_edges) + " sides");
    }
    if (n_edges < 2 || static_cast<int>(pairs_.size()) * 2 != n_edges) {
        throw Error(ErrorCode::InvalidArgument, "pairing must list exactly N/2 pairs");
    }
    std::vector<int> seen(static_cast<std::size_t>(n_edges) + 1, 0);
    for (const SidePair& pr : pairs_) {
        for (int side : {pr.first, pr.second}) {
            if (side < 1 || side > n_edges || seen[side]++ != 0) {
                throw Error(ErrorCode::InvalidArgument, "pairs do not form a perfect matching of the sides");
            }
        }
    }
}

int EdgePairing::partner(int side) const {
    for (const SidePair& pr : pairs_) {
        if (pr.first == side) return pr.second;
        if (pr.second == side) return pr.first;
    }
    return 0;
}

bool EdgePairing::is_orientable() const noexcept {
    return std::none_of(pairs_.begin(), pairs_.end(),
                        [](const SidePair& pr) { return pr.orientation == PairOrientation::Reversing; });
}

EdgePairing opposite_edge_pairing(int n_edges, Orientability orientability) {
    if (n_edges % 2 != 0) {
        throw Error(ErrorCode::OddEdgeCount, "opposite pairing needs an even side count, got " + std::to_string(n_edges));
    }
    if (n_edges < 4) {
        throw Error(ErrorCode::DegeneratePolygon, "opposite pairing needs at least 4 sides");
    }
    const int half = n_edges / 2;
    std::vector<SidePair> pairs;
    pairs.reserve(static_cast<std::size_t>(half));
    for (int i = 1; i <= half; ++i) {
        const bool flip = orientability == Orientability::NonOrientable && i == 1;
        pairs.push_back({i, i + half, flip ? PairOrientation::Reversing : PairOrientation::Preserving});
    }
    return EdgePairing(n_edges, std::move(pairs));
}

EdgePairing normalized_pairing(const Surface& surface) {
    std::vector<SidePair> pairs;
    if (surface.is_orientable()) {
        for (int k = 0; k < surface.genus; ++k) {
            const int s = 4 * k + 1;
            pairs.push_back({s, s + 2, PairOrientation::Preserving});
            pairs.push_back({s + 1, s + 3, PairOrientation::Preserving});
        }
    } else {
        for (int k = 0; k < surface.genus; ++k) {
            pairs.push_back({2 * k + 1, 2 * k + 2, PairOrientation::Reversing});
        }
    }
    return EdgePairing(surface.polygon_sides(), std::move(pairs));
}

std::vector<std::vector<int>> vertex_cycles(const EdgePairing& pairing) {
    const int n = pairing.n_edges();
    auto next = [n](int corner) { return corner % n + 1; };
    CornerClasses classes(n);
    for (const SidePair& pr : pairing.pairs()) {
        // Side i runs corner i -> corner i+1.
        if (pr.orientation == PairOrientation::Reversing) {
            classes.unite(pr.first, pr.second);
            classes.unite(next(pr.first), next(pr.second));
        } else {
            classes.unite(pr.first, next(pr.second));
            classes.unite(next(pr.first), pr.second);
        }
    }
    std::map<int, std::vector<int>> by_root;
    for (int c = 1; c <= n; ++c) by_root[classes.find(c)].push_back(c);
    std::vector<std::vector<int>> cycles;
    cycles.reserve(by_root.size());
    for (auto& [root, corners] : by_root) cycles.push_back(std::move(corners));
    std::sort(cycles.begin(), cycles.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return cycles;
}

}  // namespace aqsc
