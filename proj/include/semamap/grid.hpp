#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "semamap/errors.hpp"

namespace semamap {

/// Position of a neuron on a rectangular sheet, in (row, col) grid coordinates.
struct GridPos {
    int row = 0;
    int col = 0;

    friend bool operator==(const GridPos&, const GridPos&) = default;
};

/// Rectangular sheet shape. Neurons are indexed row-major.
struct GridShape {
    int rows = 0;
    int cols = 0;

    friend bool operator==(const GridShape&, const GridShape&) = default;

    std::size_t neuron_count() const { return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols); }

    bool valid() const { return rows >= 1 && cols >= 1; }

    bool contains(GridPos p) const {
        return p.row >= 0 && p.row < rows && p.col >= 0 && p.col < cols;
    }

    /// Row-major index of a position. The mapping index <-> position is bijective.
    std::size_t index_of(GridPos p) const {
        return static_cast<std::size_t>(p.row) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(p.col);
    }

    GridPos pos_of(std::size_t index) const {
        return GridPos{static_cast<int>(index / static_cast<std::size_t>(cols)),
                       static_cast<int>(index % static_cast<std::size_t>(cols))};
    }
};

inline void require_valid_shape(const GridShape& s, const char* what) {
    if (!s.valid()) {
        throw invalid_shape_error(std::string(what) + ": grid shape must have rows >= 1 and cols >= 1, got " +
                                  std::to_string(s.rows) + "x" + std::to_string(s.cols));
    }
}

/// Euclidean distance between two grid positions, on integer coordinates
/// with no wraparound.
inline double grid_distance(GridPos a, GridPos b) {
    const double dr = static_cast<double>(a.row - b.row);
    const double dc = static_cast<double>(a.col - b.col);
    return std::sqrt(dr * dr + dc * dc);
}

inline double grid_distance_squared(GridPos a, GridPos b) {
    const double dr = static_cast<double>(a.row - b.row);
    const double dc = static_cast<double>(a.col - b.col);
    return dr * dr + dc * dc;
}

} // namespace semamap
