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

// Exact GF(2) oracle for small surface codes. A SurfaceComplex is a cellular
// decomposition of a closed surface; the code puts a qubit on every edge,
// an X stabilizer on every vertex and a Z stabilizer on every face.
//
// Distances follow the graph picture: d_x is the shortest homologically
// nontrivial cycle of the primal graph (ker h_x modulo rowspace h_z), d_z the
// shortest nontrivial cycle of the dual graph (ker h_z modulo rowspace h_x).

#ifndef AQSC_HOMOLOGY_HPP
#define AQSC_HOMOLOGY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "aqsc/hyperbolic.hpp"
#include "aqsc/surface.hpp"

namespace aqsc {

struct SurfaceComplex {
    int n_vertices = 0;
    int n_edges = 0;
    int n_faces = 0;
    std::vector<std::pair<int, int>> edge_endpoints;  // loops allowed
    std::vector<std::vector<int>> face_boundaries;    // repeats allowed

    int euler_characteristic() const noexcept { return n_vertices - n_edges + n_faces; }

    /// Ids in range and every edge used exactly twice by face boundaries.
    bool is_closed_surface() const;
};

/// Dense GF(2) matrix, one packed bit row per stabilizer.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int words_per_row() const noexcept { return words_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool value);
    void flip(int r, int c);

    const std::uint64_t* row(int r) const { return bits_.data() + static_cast<std::size_t>(r) * words_; }
    int row_weight(int r) const;

    bool is_zero() const;

    /// this * other^T over GF(2); column counts must match.
    BinaryMatrix mul_transpose(const BinaryMatrix& other) const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

int gf2_rank(const BinaryMatrix& m);

/// Row space of a binary matrix in reduced form, for membership tests.
class RowSpace {
public:
    explicit RowSpace(const BinaryMatrix& m);

    int dimension() const noexcept { return static_cast<int>(basis_.size()); }
    bool contains(std::vector<std::uint64_t> v) const;

private:
    int words_;
    std::vector<std::vector<std::uint64_t>> basis_;
    std::vector<int> pivots_;
};

struct CssCode {
    int n = 0;
    BinaryMatrix h_x;  // vertices x edges
    BinaryMatrix h_z;  // faces x edges

    bool stabilizers_commute() const { return h_x.mul_transpose(h_z).is_zero(); }
};

/// l x l square lattice on the torus.
SurfaceComplex build_toric(int l);
/// l x l square lattice with both side pairs glued with a twist.
SurfaceComplex build_projective(int l);
/// l x l square lattice, vertical sides glued with the row flip y -> l-1-y.
SurfaceComplex build_klein(int l);
/// Fundamental polygon tessellated by itself: one face, N/2 edges, one
/// vertex per vertex cycle of opposite_edge_pairing.
SurfaceComplex build_polygon_code(const Surface& surface);

/// Throws NotClosedSurface unless c.is_closed_surface().
CssCode css_from_complex(const SurfaceComplex& c);

/// n - rank h_x - rank h_z.
int logical_count(const CssCode& code);

enum class DistanceMethod { Exhaustive, Cycle };

struct Distances {
    int d_x;
    int d_z;
    DistanceMethod method;
};

inline constexpr int kExhaustiveQubitLimit = 24;

/// Minimum-weight search over all binary vectors by increasing weight.
/// Throws NoLogicals if k = 0, TooManyQubits if n > kExhaustiveQubitLimit.
Distances brute_force_distances(const CssCode& code);

/// Shortest nontrivial cycles found from breadth-first trees rooted at
/// every vertex (primal) and every face (dual). Throws NoLogicals if k = 0.
Distances cycle_distances(const SurfaceComplex& c);

/// Exhaustive when n <= kExhaustiveQubitLimit, cycle method otherwise.
Distances compute_distances(const SurfaceComplex& c);

/// All faces p-sided, all vertices of degree q (loops count twice) and
/// qV = 2E = pF.
bool verify_regularity(const SurfaceComplex& c, SchlafliSymbol sym);

/// Text format: "V E F", then E lines "edge_id u v", then F lines
/// "face_id e1 e2 ...". Ids are 0-based and listed in order. Blank lines
/// and lines starting with '#' are ignored on input.
void write_complex(std::ostream& out, const SurfaceComplex& c);
SurfaceComplex read_complex(std::istream& in);
std::string to_text(const SurfaceComplex& c);
SurfaceComplex from_text(const std::string& text);

}  // namespace aqsc

#endif  // AQSC_HOMOLOGY_HPP
