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

#include "aqsc/homology.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include "aqsc/error.hpp"

namespace aqsc {

namespace {

using Bits = std::vector<std::uint64_t>;

int word_count(int cols) { return (cols + 63) / 64; }

void flip_bit(Bits& v, int i) { v[static_cast<std::size_t>(i) / 64] ^= std::uint64_t{1} << (i % 64); }

int weight(const Bits& v) {
    int w = 0;
    for (std::uint64_t x : v) w += std::popcount(x);
    return w;
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

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

    // Dense 0-based labels for the classes, numbered by least member.
    std::vector<int> labels(int* count) {
        std::vector<int> label(parent_.size(), -1);
        int next = 0;
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
            const int r = find(i);
            if (label[r] < 0) label[r] = next++;
            label[i] = label[r];
        }
        *count = next;
        return label;
    }

private:
    std::vector<int> parent_;
};

// Square l x l grid with the left/right and bottom/top sides identified,
// each side pair either straight or twisted (reflected).
SurfaceComplex build_square_quotient(int l, bool twist_left_right, bool twist_bottom_top) {
    if (l < 2) throw Error(ErrorCode::InvalidArgument, "lattice size must be >= 2, got " + std::to_string(l));
    const int side = l + 1;
    auto vid = [side](int x, int y) { return x * side + y; };
    // Horizontal edge (x,y)-(x+1,y) for x < l; vertical edge (x,y)-(x,y+1) for y < l.
    const int n_horizontal = l * side;
    auto hid = [side](int x, int y) { return x * side + y; };
    auto vert_id = [l, n_horizontal](int x, int y) { return n_horizontal + x * l + y; };
    const int raw_edges = n_horizontal + side * l;

    UnionFind verts(side * side);
    UnionFind edges(raw_edges);
    for (int y = 0; y <= l; ++y) verts.unite(vid(0, y), vid(l, twist_left_right ? l - y : y));
    for (int x = 0; x <= l; ++x) verts.unite(vid(x, 0), vid(twist_bottom_top ? l - x : x, l));
    for (int y = 0; y < l; ++y) edges.unite(vert_id(0, y), vert_id(l, twist_left_right ? l - 1 - y : y));
    for (int x = 0; x < l; ++x) edges.unite(hid(x, 0), hid(twist_bottom_top ? l - 1 - x : x, l));

    SurfaceComplex c;
    const std::vector<int> vlabel = verts.labels(&c.n_vertices);
    const std::vector<int> elabel = edges.labels(&c.n_edges);
    c.edge_endpoints.assign(static_cast<std::size_t>(c.n_edges), {-1, -1});
    for (int x = 0; x < l; ++x) {
        for (int y = 0; y <= l; ++y) c.edge_endpoints[elabel[hid(x, y)]] = {vlabel[vid(x, y)], vlabel[vid(x + 1, y)]};
    }
    for (int x = 0; x <= l; ++x) {
        for (int y = 0; y < l; ++y) c.edge_endpoints[elabel[vert_id(x, y)]] = {vlabel[vid(x, y)], vlabel[vid(x, y + 1)]};
    }
    c.n_faces = l * l;
    c.face_boundaries.reserve(static_cast<std::size_t>(c.n_faces));
    for (int x = 0; x < l; ++x) {
        for (int y = 0; y < l; ++y) {
            c.face_boundaries.push_back({elabel[hid(x, y)], elabel[vert_id(x + 1, y)], elabel[hid(x, y + 1)],
                                         elabel[vert_id(x, y)]});
        }
    }
    return c;
}

// Graph view used by the cycle method: nodes plus one (a, b) per qubit.
struct EdgeGraph {
    int n_nodes;
    std::vector<std::pair<int, int>> ends;
};

EdgeGraph primal_graph(const SurfaceComplex& c) { return {c.n_vertices, c.edge_endpoints}; }

EdgeGraph dual_graph(const SurfaceComplex& c) {
    std::vector<std::vector<int>> occurrences(static_cast<std::size_t>(c.n_edges));
    for (int f = 0; f < c.n_faces; ++f) {
        for (int e : c.face_boundaries[f]) occurrences[e].push_back(f);
    }
    EdgeGraph g{c.n_faces, {}};
    g.ends.reserve(occurrences.size());
    for (const auto& occ : occurrences) g.ends.emplace_back(occ.at(0), occ.at(1));
    return g;
}

// Shortest cycle whose edge vector is not in `trivial`. The minimum over
// "tree path + edge + tree path" candidates from BFS trees at every root is
// exact because Z2-nontrivial cycles satisfy the 3-path condition.
int shortest_nontrivial_cycle(const EdgeGraph& g, const RowSpace& trivial) {
    const int n_edges = static_cast<int>(g.ends.size());
    const int words = word_count(n_edges);
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(g.n_nodes));
    for (int e = 0; e < n_edges; ++e) {
        const auto [a, b] = g.ends[e];
        adj[a].emplace_back(b, e);
        if (a != b) adj[b].emplace_back(a, e);
    }
    int best = std::numeric_limits<int>::max();
    std::vector<Bits> path(static_cast<std::size_t>(g.n_nodes));
    std::vector<int> depth(static_cast<std::size_t>(g.n_nodes));
    for (int root = 0; root < g.n_nodes; ++root) {
        std::fill(depth.begin(), depth.end(), -1);
        path[root].assign(static_cast<std::size_t>(words), 0);
        depth[root] = 0;
        std::queue<int> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            for (const auto& [w, e] : adj[u]) {
                if (depth[w] >= 0) continue;
                depth[w] = depth[u] + 1;
                path[w] = path[u];
                flip_bit(path[w], e);
                frontier.push(w);
            }
        }
        for (int e = 0; e < n_edges; ++e) {
            const auto [a, b] = g.ends[e];
            if (depth[a] < 0 || depth[b] < 0) continue;
            if (depth[a] + depth[b] + 1 >= best) continue;
            Bits cycle = path[a];
            for (int i = 0; i < words; ++i) cycle[i] ^= path[b][i];
            flip_bit(cycle, e);
            const int w = weight(cycle);
            if (w == 0 || w >= best) continue;
            if (!trivial.contains(cycle)) best = w;
        }
    }
    return best;
}

}  // namespace

bool SurfaceComplex::is_closed_surface() const {
    if (n_vertices < 0 || n_edges < 0 || n_faces < 0) return false;
    if (static_cast<int>(edge_endpoints.size()) != n_edges || static_cast<int>(face_boundaries.size()) != n_faces) {
        return false;
    }
    for (const auto& [u, v] : edge_endpoints) {
        if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices) return false;
    }
    std::vector<int> uses(static_cast<std::size_t>(n_edges), 0);
    for (const auto& face : face_boundaries) {
        for (int e : face) {
            if (e < 0 || e >= n_edges) return false;
            ++uses[e];
        }
    }
    return std::all_of(uses.begin(), uses.end(), [](int u) { return u == 2; });
}

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_(word_count(cols)), bits_(static_cast<std::size_t>(rows) * words_, 0) {
    if (rows < 0 || cols < 0) throw Error(ErrorCode::InvalidArgument, "negative matrix dimension");
}

bool BinaryMatrix::get(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * words_ + c / 64] >> (c % 64)) & 1U;
}

void BinaryMatrix::set(int r, int c, bool value) {
    std::uint64_t& w = bits_[static_cast<std::size_t>(r) * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    w = value ? (w | mask) : (w & ~mask);
}

void BinaryMatrix::flip(int r, int c) { bits_[static_cast<std::size_t>(r) * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

int BinaryMatrix::row_weight(int r) const {
    int w = 0;
    for (int i = 0; i < words_; ++i) w += std::popcount(row(r)[i]);
    return w;
}

bool BinaryMatrix::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

BinaryMatrix BinaryMatrix::mul_transpose(const BinaryMatrix& other) const {
    if (cols_ != other.cols_) throw Error(ErrorCode::InvalidArgument, "column counts differ");
    BinaryMatrix out(rows_, other.rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < other.rows_; ++j) {
            int parity = 0;
            for (int w = 0; w < words_; ++w) parity ^= std::popcount(row(i)[w] & other.row(j)[w]) & 1;
            if (parity != 0) out.set(i, j, true);
        }
    }
    return out;
}

int gf2_rank(const BinaryMatrix& m) { return RowSpace(m).dimension(); }

RowSpace::RowSpace(const BinaryMatrix& m) : words_(m.words_per_row()) {
    for (int r = 0; r < m.rows(); ++r) {
        Bits v(m.row(r), m.row(r) + words_);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const int p = pivots_[i];
            if ((v[p / 64] >> (p % 64)) & 1U) {
                for (int w = 0; w < words_; ++w) v[w] ^= basis_[i][w];
            }
        }
        for (int w = 0; w < words_; ++w) {
            if (v[w] != 0) {
                pivots_.push_back(w * 64 + std::countr_zero(v[w]));
                basis_.push_back(std::move(v));
                break;
            }
        }
    }
}

bool RowSpace::contains(Bits v) const {
    v.resize(static_cast<std::size_t>(words_), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const int p = pivots_[i];
        if ((v[p / 64] >> (p % 64)) & 1U) {
            for (int w = 0; w < words_; ++w) v[w] ^= basis_[i][w];
        }
    }
    return std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; });
}

SurfaceComplex build_toric(int l) { return build_square_quotient(l, false, false); }

SurfaceComplex build_projective(int l) { return build_square_quotient(l, true, true); }

SurfaceComplex build_klein(int l) { return build_square_quotient(l, true, false); }

SurfaceComplex build_polygon_code(const Surface& surface) {
    const int n_sides = surface.polygon_sides();
    // The projective plane is the 2-gon "a a", below the opposite-pairing minimum.
    const EdgePairing pairing = n_sides == 2 ? EdgePairing(2, {{1, 2, PairOrientation::Reversing}})
                                             : opposite_edge_pairing(n_sides, surface.orientability);

    std::vector<int> corner_vertex(static_cast<std::size_t>(n_sides) + 1);
    const auto cycles = vertex_cycles(pairing);
    for (int v = 0; v < static_cast<int>(cycles.size()); ++v) {
        for (int corner : cycles[v]) corner_vertex[corner] = v;
    }

    SurfaceComplex c;
    c.n_vertices = static_cast<int>(cycles.size());
    c.n_edges = n_sides / 2;
    c.n_faces = 1;
    std::vector<int> side_edge(static_cast<std::size_t>(n_sides) + 1);
    for (int e = 0; e < c.n_edges; ++e) {
        const SidePair& pr = pairing.pairs()[e];
        side_edge[pr.first] = e;
        side_edge[pr.second] = e;
        c.edge_endpoints.emplace_back(corner_vertex[pr.first], corner_vertex[pr.first % n_sides + 1]);
    }
    c.face_boundaries.emplace_back(side_edge.begin() + 1, side_edge.end());
    return c;
}

CssCode css_from_complex(const SurfaceComplex& c) {
    if (!c.is_closed_surface()) {
        throw Error(ErrorCode::NotClosedSurface, "every edge must bound faces exactly twice");
    }
    CssCode code{c.n_edges, BinaryMatrix(c.n_vertices, c.n_edges), BinaryMatrix(c.n_faces, c.n_edges)};
    for (int e = 0; e < c.n_edges; ++e) {
        code.h_x.flip(c.edge_endpoints[e].first, e);
        code.h_x.flip(c.edge_endpoints[e].second, e);
    }
    for (int f = 0; f < c.n_faces; ++f) {
        for (int e : c.face_boundaries[f]) code.h_z.flip(f, e);
    }
    return code;
}

int logical_count(const CssCode& code) { return code.n - gf2_rank(code.h_x) - gf2_rank(code.h_z); }

Distances brute_force_distances(const CssCode& code) {
    if (code.n > kExhaustiveQubitLimit) {
        throw Error(ErrorCode::TooManyQubits, "exhaustive search is capped at " +
                                                  std::to_string(kExhaustiveQubitLimit) + " qubits, got " +
                                                  std::to_string(code.n));
    }
    if (logical_count(code) <= 0) throw Error(ErrorCode::NoLogicals, "code encodes no logical qubits");

    // Smallest weight v with checks * v = 0 and v outside `trivial`.
    auto search = [n = code.n](const BinaryMatrix& checks, const BinaryMatrix& stabilizers) {
        const RowSpace trivial(stabilizers);
        std::vector<std::uint64_t> rows;
        for (int r = 0; r < checks.rows(); ++r) rows.push_back(checks.row(r)[0]);
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (int w = 1; w <= n; ++w) {
            // Gosper's hack walks all n-bit words of popcount w in order.
            for (std::uint64_t v = (std::uint64_t{1} << w) - 1; v < limit;) {
                const bool in_kernel =
                    std::all_of(rows.begin(), rows.end(), [v](std::uint64_t r) { return std::popcount(r & v) % 2 == 0; });
                if (in_kernel && !trivial.contains({v})) return w;
                const std::uint64_t c = v & (~v + 1);
                const std::uint64_t r = v + c;
                v = (((r ^ v) >> 2) / c) | r;
            }
        }
        return 0;
    };
    return {search(code.h_x, code.h_z), search(code.h_z, code.h_x), DistanceMethod::Exhaustive};
}

Distances cycle_distances(const SurfaceComplex& c) {
    const CssCode code = css_from_complex(c);
    if (logical_count(code) <= 0) throw Error(ErrorCode::NoLogicals, "code encodes no logical qubits");
    return {shortest_nontrivial_cycle(primal_graph(c), RowSpace(code.h_z)),
            shortest_nontrivial_cycle(dual_graph(c), RowSpace(code.h_x)), DistanceMethod::Cycle};
}

Distances compute_distances(const SurfaceComplex& c) {
    if (c.n_edges <= kExhaustiveQubitLimit) return brute_force_distances(css_from_complex(c));
    return cycle_distances(c);
}

bool verify_regularity(const SurfaceComplex& c, SchlafliSymbol sym) {
    if (!c.is_closed_surface()) return false;
    for (const auto& face : c.face_boundaries) {
        if (static_cast<int>(face.size()) != sym.p) return false;
    }
    std::vector<int> degree(static_cast<std::size_t>(c.n_vertices), 0);
    for (const auto& [u, v] : c.edge_endpoints) {
        ++degree[u];
        ++degree[v];
    }
    if (!std::all_of(degree.begin(), degree.end(), [&](int d) { return d == sym.q; })) return false;
    const long long qv = static_cast<long long>(sym.q) * c.n_vertices;
    const long long pf = static_cast<long long>(sym.p) * c.n_faces;
    return qv == 2LL * c.n_edges && pf == 2LL * c.n_edges;
}

void write_complex(std::ostream& out, const SurfaceComplex& c) {
    out << c.n_vertices << ' ' << c.n_edges << ' ' << c.n_faces << '\n';
    for (int e = 0; e < c.n_edges; ++e) {
        out << e << ' ' << c.edge_endpoints[e].first << ' ' << c.edge_endpoints[e].second << '\n';
    }
    for (int f = 0; f < c.n_faces; ++f) {
        out << f;
        for (int e : c.face_boundaries[f]) out << ' ' << e;
        out << '\n';
    }
}

SurfaceComplex read_complex(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> std::istringstream {
        while (std::getline(in, line)) {
            ++line_no;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            return std::istringstream(line);
        }
        throw Error(ErrorCode::ParseError, "unexpected end of input after line " + std::to_string(line_no));
    };
    auto fail = [&](const std::string& what) {
        return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
    };

    SurfaceComplex c;
    {
        std::istringstream header = next_line();
        if (!(header >> c.n_vertices >> c.n_edges >> c.n_faces) || c.n_vertices < 0 || c.n_edges < 0 || c.n_faces < 0) {
            throw fail("expected header 'V E F'");
        }
    }
    for (int e = 0; e < c.n_edges; ++e) {
        std::istringstream row = next_line();
        int id, u, v;
        if (!(row >> id >> u >> v) || id != e) throw fail("expected edge line '" + std::to_string(e) + " u v'");
        if (u < 0 || u >= c.n_vertices || v < 0 || v >= c.n_vertices) throw fail("vertex id out of range");
        c.edge_endpoints.emplace_back(u, v);
    }
    for (int f = 0; f < c.n_faces; ++f) {
        std::istringstream row = next_line();
        int id;
        if (!(row >> id) || id != f) throw fail("expected face line starting with " + std::to_string(f));
        std::vector<int> boundary;
        for (int e; row >> e;) {
            if (e < 0 || e >= c.n_edges) throw fail("edge id out of range");
            boundary.push_back(e);
        }
        if (!row.eof()) throw fail("malformed edge id");
        c.face_boundaries.push_back(std::move(boundary));
    }
    return c;
}

std::string to_text(const SurfaceComplex& c) {
    std::ostringstream out;
    write_complex(out, c);
    return out.str();
}

SurfaceComplex from_text(const std::string& text) {
    std::istringstream in(text);
    return read_complex(in);
}

}  // namespace aqsc
