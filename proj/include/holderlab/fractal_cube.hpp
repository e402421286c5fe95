#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "holderlab/dimension.hpp"
#include "holderlab/errors.hpp"
#include "holderlab/symbolic_space.hpp"

namespace holderlab {

using Cell = std::vector<std::int64_t>;

// Fractal cube K(n, D): attractor of x -> (x + d)/n over a digit set
// D subset of {0,...,n-1}^d. Digits are kept sorted lexicographically, so
// every derived quantity is independent of the input listing order.
class FractalCube {
public:
    static FractalCube make(std::int64_t n, std::int64_t d, std::vector<Cell> digits) {
        if (n < 2) throw std::invalid_argument("FractalCube: n must be >= 2");
        if (d < 1) throw std::invalid_argument("FractalCube: d must be >= 1");
        if (digits.empty()) throw std::invalid_argument("FractalCube: digit set is empty");
        for (const auto& dig : digits) {
            if (static_cast<std::int64_t>(dig.size()) != d)
                throw std::invalid_argument("FractalCube: digit arity mismatch");
            for (auto c : dig)
                if (c < 0 || c >= n) throw std::invalid_argument("FractalCube: digit out of range");
        }
        std::sort(digits.begin(), digits.end());
        if (std::adjacent_find(digits.begin(), digits.end()) != digits.end())
            throw std::invalid_argument("FractalCube: duplicate digit");
        FractalCube cube;
        cube.n_ = n;
        cube.d_ = d;
        cube.digits_ = std::move(digits);
        return cube;
    }

    std::int64_t n() const { return n_; }
    std::int64_t d() const { return d_; }
    std::int64_t digit_count() const { return static_cast<std::int64_t>(digits_.size()); }
    const std::vector<Cell>& digits() const { return digits_; }

    // n^d, guarded against overflow.
    std::int64_t cell_capacity() const {
        std::int64_t cap = 1;
        for (std::int64_t i = 0; i < d_; ++i) {
            if (cap > (std::int64_t{1} << 56) / n_) return std::int64_t{1} << 62;
            cap *= n_;
        }
        return cap;
    }

    bool is_full() const { return digit_count() == cell_capacity(); }

    friend bool operator==(const FractalCube& a, const FractalCube& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.digits_ == b.digits_;
    }

private:
    FractalCube() = default;
    std::int64_t n_ = 0, d_ = 0;
    std::vector<Cell> digits_;
};

inline DimensionValue cube_dimension(const FractalCube& c) {
    double v = std::log(static_cast<double>(c.digit_count())) / std::log(static_cast<double>(c.n()));
    return {v, "log(" + std::to_string(c.digit_count()) + ")/log(" + std::to_string(c.n()) + ")"};
}

// Normalized connected pattern of lattice cells: translated so the
// lexicographically least cell sits at the origin. Connectivity is the
// closed-cube relation (Chebyshev distance <= 1, corner contact counts).
class CellShape {
public:
    static CellShape normalized(std::vector<Cell> cells) {
        if (cells.empty()) throw std::invalid_argument("CellShape: empty cell set");
        std::sort(cells.begin(), cells.end());
        Cell origin = cells.front();
        for (auto& cell : cells)
            for (std::size_t i = 0; i < cell.size(); ++i) cell[i] -= origin[i];
        CellShape s;
        s.cells_ = std::move(cells);
        return s;
    }

    static CellShape single_cell(std::int64_t d) { return normalized({Cell(d, 0)}); }

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

    friend bool operator==(const CellShape& a, const CellShape& b) { return a.cells_ == b.cells_; }
    friend bool operator<(const CellShape& a, const CellShape& b) { return a.cells_ < b.cells_; }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (i) s += ",";
            s += "(";
            for (std::size_t j = 0; j < cells_[i].size(); ++j) {
                if (j) s += ",";
                s += std::to_string(cells_[i][j]);
            }
            s += ")";
        }
        return s + "}";
    }

private:
    CellShape() = default;
    std::vector<Cell> cells_;
};

namespace detail {

// Union-find over cell indices, path halving + union by size.
struct UnionFind {
    std::vector<std::size_t> parent, size;

    explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

inline bool cells_adjacent(const Cell& a, const Cell& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t delta = a[i] - b[i];
        if (delta > 1 || delta < -1) return false;
    }
    return true;
}

// All nonzero offsets with entries in {-1,0,1}: the closed-cube neighbor
// stencil in dimension d.
inline std::vector<Cell> neighbor_offsets(std::size_t d) {
    std::vector<Cell> offsets;
    Cell cur(d, -1);
    for (;;) {
        if (std::any_of(cur.begin(), cur.end(), [](std::int64_t o) { return o != 0; }))
            offsets.push_back(cur);
        std::size_t pos = d;
        bool wrapped = false;
        while (pos > 0) {
            --pos;
            if (++cur[pos] <= 1) break;
            cur[pos] = -1;
            if (pos == 0) wrapped = true;
        }
        if (wrapped) break;
    }
    return offsets;
}

// Connected components of a cell set under the closed-cube relation.
inline std::vector<std::vector<Cell>> connected_components(const std::vector<Cell>& cells) {
    if (cells.empty()) return {};
    std::size_t d = cells.front().size();
    std::map<Cell, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = i;
    UnionFind uf(cells.size());
    const auto offsets = neighbor_offsets(d);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (const auto& off : offsets) {
            Cell nb = cells[i];
            for (std::size_t j = 0; j < d; ++j) nb[j] += off[j];
            auto it = index.find(nb);
            if (it != index.end()) uf.unite(i, it->second);
        }
    }
    std::map<std::size_t, std::vector<Cell>> groups;
    for (std::size_t i = 0; i < cells.size(); ++i) groups[uf.find(i)].push_back(cells[i]);
    std::vector<std::vector<Cell>> out;
    out.reserve(groups.size());
    for (auto& [root, group] : groups) out.push_back(std::move(group));
    return out;
}

}  // namespace detail

// One subdivision step of a single shape: replace each cell by the digit
// pattern at scale 1/n and split the result into connected components.
// Returned shapes are normalized and sorted, repeats preserved.
inline std::vector<CellShape> child_components(const CellShape& shape, const FractalCube& cube) {
    std::vector<Cell> children;
    children.reserve(shape.size() * cube.digits().size());
    for (const auto& cell : shape.cells()) {
        for (const auto& digit : cube.digits()) {
            Cell child(cell.size());
            for (std::size_t i = 0; i < cell.size(); ++i)
                child[i] = cell[i] * cube.n() + digit[i];
            children.push_back(std::move(child));
        }
    }
    std::vector<CellShape> out;
    for (auto& comp : detail::connected_components(children))
        out.push_back(CellShape::normalized(std::move(comp)));
    std::sort(out.begin(), out.end());
    return out;
}

// Refinement of a shape family: children of every shape, deduplicated.
// Components never merge across distinct input shapes, so refining
// shape-by-shape is exact.
inline std::set<CellShape> refine_components(const std::set<CellShape>& shapes,
                                             const FractalCube& cube) {
    std::set<CellShape> out;
    for (const auto& s : shapes)
        for (auto& child : child_components(s, cube)) out.insert(std::move(child));
    return out;
}

// Three-valued total-disconnectedness certificate.
//   certified - the accumulated shape census is closed under refinement, so
//               component cell counts stay bounded forever and component
//               diameters shrink to zero: the attractor is totally
//               disconnected.
//   full_cube - D fills {0,...,n-1}^d; the attractor is the whole cube.
//   unknown   - bounds exhausted; certifies nothing either way.
struct TDStatus {
    enum class Kind { certified, full_cube, unknown };

    Kind kind = Kind::unknown;
    std::int64_t depth = 0;  // certification depth, or depth reached
    std::set<CellShape> census;
    std::size_t max_component_cells = 0;

    bool certified() const { return kind == Kind::certified; }

    std::string kind_name() const {
        switch (kind) {
            case Kind::certified: return "certified";
            case Kind::full_cube: return "full_cube";
            default: return "unknown";
        }
    }
};

struct TDLimits {
    std::int64_t max_depth = 8;
    std::size_t max_component_cells = 4096;
    std::size_t census_cap = 10000;
};

// Sound, incomplete certifier. A census fixed point proves total
// disconnectedness; growth past the limits proves nothing, so the negative
// side stays unknown except for the exact full-cube case.
inline TDStatus check_total_disconnectedness(const FractalCube& cube, TDLimits limits = {}) {
    TDStatus status;
    if (cube.is_full()) {
        status.kind = TDStatus::Kind::full_cube;
        return status;
    }
    std::vector<Cell> level1;
    for (const auto& digit : cube.digits()) level1.push_back(digit);
    std::vector<CellShape> current;
    for (auto& comp : detail::connected_components(level1))
        current.push_back(CellShape::normalized(std::move(comp)));

    std::set<CellShape> census;
    std::size_t max_cells = 0;
    std::int64_t depth = 1;
    for (;;) {
        for (const auto& s : current) max_cells = std::max(max_cells, s.size());
        status.depth = depth;
        status.max_component_cells = max_cells;
        if (max_cells > limits.max_component_cells) return status;  // unknown: growth
        census.insert(current.begin(), current.end());
        if (census.size() > limits.census_cap) return status;  // unknown: census blow-up
        std::vector<CellShape> next;
        for (const auto& s : current)
            for (auto& child : child_components(s, cube))
                if (!census.count(child)) next.push_back(std::move(child));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty()) {
            status.kind = TDStatus::Kind::certified;
            status.census = std::move(census);
            return status;
        }
        if (depth == limits.max_depth) {
            for (const auto& s : next) max_cells = std::max(max_cells, s.size());
            status.max_component_cells = max_cells;
            return status;  // unknown: depth exhausted
        }
        ++depth;
        current = std::move(next);
    }
}

// Symbolic model of a totally disconnected cube: (Omega_N, rho_{1/n}).
// Refuses without a certificate or an explicit override.
inline SymbolicSpace to_symbolic(const FractalCube& cube, const TDStatus& status,
                                 bool assume_totally_disconnected = false) {
    if (!status.certified() && !assume_totally_disconnected)
        throw UncertifiedCubeError(
            "to_symbolic: cube is not certified totally disconnected (status " +
            status.kind_name() + "); pass an explicit override to proceed");
    if (status.kind == TDStatus::Kind::full_cube && !assume_totally_disconnected)
        throw UncertifiedCubeError("to_symbolic: full cube is not totally disconnected");
    if (cube.digit_count() < 2)
        throw std::invalid_argument("to_symbolic: need at least two digits");
    return SymbolicSpace::uniform(cube.digit_count(),
                                  ScaleFactor::rational(Rational(1, cube.n())));
}

}  // namespace holderlab
