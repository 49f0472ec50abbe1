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

// Hyperbolic plane geometry used to size surface codes: Gauss-Bonnet areas,
// edge lengths of regular {p,q} polygons, opposite-side distances of
// fundamental polygons, Moebius isometries of the upper half-plane and the
// combinatorics of polygon side pairings.

#ifndef AQSC_HYPERBOLIC_HPP
#define AQSC_HYPERBOLIC_HPP

#include <complex>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "aqsc/surface.hpp"

namespace aqsc {

enum class Model { UpperHalfPlane, PoincareDisk };

/// A point of the hyperbolic plane in one of two conformal models.
class Point {
public:
    /// Throws InvalidPoint unless y > 0 (half-plane) or x^2 + y^2 < 1 (disk).
    Point(double x, double y, Model model);

    static Point upper_half_plane(std::complex<double> z) { return {z.real(), z.imag(), Model::UpperHalfPlane}; }
    static Point disk(std::complex<double> z) { return {z.real(), z.imag(), Model::PoincareDisk}; }

    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }
    Model model() const noexcept { return model_; }
    std::complex<double> z() const noexcept { return {x_, y_}; }

    bool operator==(const Point&) const = default;

private:
    double x_;
    double y_;
    Model model_;
};

enum class Curvature { Spherical, Euclidean, Hyperbolic };

/// Regular tessellation descriptor: q regular p-gons meet at every vertex.
struct SchlafliSymbol {
    int p;
    int q;

    /// Throws InvalidArgument unless p, q >= 3.
    static SchlafliSymbol make(int p, int q);

    /// pq - 2p - 2q; its sign decides the curvature class.
    long long excess() const noexcept { return static_cast<long long>(p) * q - 2LL * p - 2LL * q; }
    Curvature curvature() const noexcept;
    bool is_hyperbolic() const noexcept { return excess() > 0; }
    SchlafliSymbol dual() const noexcept { return {q, p}; }

    std::string to_string() const;

    auto operator<=>(const SchlafliSymbol&) const = default;
};

/// Real 2x2 matrix acting on the upper half-plane by z -> (az+b)/(cz+d).
/// Instances are always normalized to ad - bc = 1.
class MobiusTransform {
public:
    /// Scales (a,b,c,d) by 1/sqrt(ad-bc). Throws NotNormalizable if ad-bc <= 0.
    static MobiusTransform normalized(double a, double b, double c, double d);
    static MobiusTransform identity() { return {1.0, 0.0, 0.0, 1.0}; }

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }
    double d() const noexcept { return d_; }
    double determinant() const noexcept { return a_ * d_ - b_ * c_; }

    MobiusTransform inverse() const noexcept { return {d_, -b_, -c_, a_}; }

    /// True if the two matrices agree entrywise up to an overall sign, which
    /// is the PSL2(R) equality.
    bool approx_equal(const MobiusTransform& other, double tol) const noexcept;

private:
    MobiusTransform(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {}
    friend MobiusTransform mobius_compose(const MobiusTransform&, const MobiusTransform&);

    double a_;
    double b_;
    double c_;
    double d_;
};

/// Throws ModelMismatch for disk points and PoleAtPoint if cz + d = 0.
Point mobius_apply(const MobiusTransform& t, const Point& z);

/// Matrix product: mobius_compose(t1, t2) applies t2 first.
MobiusTransform mobius_compose(const MobiusTransform& t1, const MobiusTransform& t2);

/// Hyperbolic distance; both points must use the same model.
double hyperbolic_distance(const Point& z1, const Point& z2);

/// Gauss-Bonnet: pi - alpha - beta - gamma. Throws AngleSumNotHyperbolic
/// when the angle sum reaches pi, InvalidArgument for negative angles.
double triangle_area(double alpha, double beta, double gamma);

/// Area of one regular {p,q} polygon, pi (pq - 2p - 2q) / q.
double polygon_area(SchlafliSymbol sym);

/// {4h,4h} for orientable genus h, {2g,2g} for non-orientable genus g.
SchlafliSymbol fundamental_polygon(const Surface& surface);

/// Side length of the regular {p,q} polygon:
/// arccosh[(cos^2(pi/q) + cos(2pi/p)) / sin^2(pi/q)].
double edge_length(SchlafliSymbol sym);

/// Distance between opposite sides of the regular {N,N} polygon,
/// 2 arccosh(cot(pi/N)). N must be even and at least 6 (the crosscap-3
/// hexagon is the smallest hyperbolic case).
double opposite_edge_distance(int n_gon);

/// Circumradius R of the regular {p,q} polygon, cosh R = cot(pi/p) cot(pi/q).
double circumradius(SchlafliSymbol sym);

/// Vertices of the regular {p,q} polygon centred at the origin of the
/// Poincare disk, counterclockwise, first vertex on the positive real axis.
std::vector<Point> regular_polygon_vertices(SchlafliSymbol sym);

enum class PairOrientation {
    Preserving,  // a ... a^-1
    Reversing,   // a ... a
};

/// Identification of the sides of an N-gon. Sides and corners are
/// 1-indexed counterclockwise; side i runs from corner i to corner i+1.
struct SidePair {
    int first;
    int second;
    PairOrientation orientation;

    bool operator==(const SidePair&) const = default;
};

class EdgePairing {
public:
    /// Validates that the pairs form a perfect matching of {1..n_edges}.
    EdgePairing(int n_edges, std::vector<SidePair> pairs);

    int n_edges() const noexcept { return n_edges_; }
    const std::vector<SidePair>& pairs() const noexcept { return pairs_; }

    /// The side paired with `side`, or 0 if none (never happens after
    /// construction).
    int partner(int side) const;

    bool is_orientable() const noexcept;

private:
    int n_edges_;
    std::vector<SidePair> pairs_;
};

/// Pairs side i with side i + N/2. Orientable pairings are all
/// orientation-preserving; the non-orientable one reverses only the first
/// pair, which is what leaves a single vertex cycle.
EdgePairing opposite_edge_pairing(int n_edges, Orientability orientability = Orientability::NonOrientable);

/// Normalized words: a1 a1 a2 a2 ... (non-orientable, N = 2g) or
/// a1 b1 a1^-1 b1^-1 ... (orientable, N = 4h).
EdgePairing normalized_pairing(const Surface& surface);

/// Orbits of polygon corners under the side identifications. Each cycle is
/// sorted ascending and cycles are ordered by their least corner.
std::vector<std::vector<int>> vertex_cycles(const EdgePairing& pairing);

}  // namespace aqsc

#endif  // AQSC_HYPERBOLIC_HPP
