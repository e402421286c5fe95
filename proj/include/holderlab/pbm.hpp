#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "holderlab/errors.hpp"
#include "holderlab/fractal_cube.hpp"

namespace holderlab {

namespace detail {

inline void mark_cells(const FractalCube& cube, int depth, std::int64_t x, std::int64_t y,
                       std::int64_t stride, std::vector<std::uint8_t>& grid, std::int64_t width) {
    if (depth == 0) {
        grid[static_cast<std::size_t>(y * width + x)] = 1;
        return;
    }
    std::int64_t child_stride = stride / cube.n();
    for (const auto& digit : cube.digits()) {
        std::int64_t cx = x + digit[0] * child_stride;
        std::int64_t cy = cube.d() == 2 ? y + digit[1] * child_stride : y;
        mark_cells(cube, depth - 1, cx, cy, child_stride, grid, width);
    }
}

}  // namespace detail

// Plain-text PBM (P1) of the depth-k cell approximation. For d = 2 the
// image is n^k x n^k with row 0 at the TOP of the unit square (y = 1) and
// column 0 at x = 0; a pixel is black iff its cell address is a product of
// digits. d = 1 yields a single-row image.
inline std::string render_pbm(const FractalCube& cube, std::uint32_t depth,
                              std::int64_t max_pixels = std::int64_t{1} << 26) {
    if (cube.d() > 2) throw std::invalid_argument("render_pbm: only d <= 2 is supported");
    std::int64_t side = 1;
    for (std::uint32_t i = 0; i < depth; ++i) {
        if (side > max_pixels / cube.n()) throw EnumerationLimitError("render_pbm: pixel budget");
        side *= cube.n();
    }
    std::int64_t width = side;
    std::int64_t height = cube.d() == 2 ? side : 1;
    if (height != 0 && width > max_pixels / height)
        throw EnumerationLimitError("render_pbm: pixel budget");

    std::vector<std::uint8_t> grid(static_cast<std::size_t>(width * height), 0);
    detail::mark_cells(cube, static_cast<int>(depth), 0, 0, side, grid, width);

    std::string out = "P1\n" + std::to_string(width) + " " + std::to_string(height) + "\n";
    out.reserve(out.size() + static_cast<std::size_t>((width + 1) * height));
    for (std::int64_t row = 0; row < height; ++row) {
        std::int64_t y = height - 1 - row;  // file rows run top-down
        for (std::int64_t x = 0; x < width; ++x)
            out += grid[static_cast<std::size_t>(y * width + x)] ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace holderlab
