#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rugosity/errors.hpp"

namespace rugosity {

/// Integer voxel position. The third component is 0 for 2D grids.
using Voxel = std::array<int, 3>;

/// Extents of a 2D or 3D voxel grid. Data is stored row-major with the
/// last axis fastest; 2D grids keep extent[2] == 1 so indexing code can
/// stay dimension-agnostic.
struct GridDims {
    int ndim = 2;
    std::array<int, 3> extent{1, 1, 1};

    std::size_t voxel_count() const {
        return static_cast<std::size_t>(extent[0]) * static_cast<std::size_t>(extent[1]) *
               static_cast<std::size_t>(extent[2]);
    }

    std::size_t index(int i, int j, int k = 0) const {
        return (static_cast<std::size_t>(i) * extent[1] + static_cast<std::size_t>(j)) * extent[2] +
               static_cast<std::size_t>(k);
    }

    std::size_t index(const Voxel& v) const { return index(v[0], v[1], v[2]); }

    bool in_bounds(int i, int j, int k = 0) const {
        return i >= 0 && i < extent[0] && j >= 0 && j < extent[1] && k >= 0 && k < extent[2];
    }

    bool in_bounds(const Voxel& v) const { return in_bounds(v[0], v[1], v[2]); }

    /// Smallest extent over the real axes (the dummy third axis of a 2D
    /// grid is ignored).
    int min_extent() const {
        int m = extent[0] < extent[1] ? extent[0] : extent[1];
        if (ndim == 3 && extent[2] < m) m = extent[2];
        return m;
    }

    double diagonal() const {
        double s = 0.0;
        for (int a = 0; a < ndim; ++a) {
            const double e = static_cast<double>(extent[a]);
            s += e * e;
        }
        return std::sqrt(s);
    }

    bool operator==(const GridDims&) const = default;
};

/// Throws ValueError unless the dims describe a well-formed 2D/3D grid.
void validate_dims(const GridDims& dims);

/// Face-adjacent neighbor offsets: 4 in 2D, 6 in 3D.
std::vector<Voxel> face_offsets(int ndim);

/// All offsets with Chebyshev distance in [1, radius]: 8 in 2D and 26 in
/// 3D for radius 1.
std::vector<Voxel> chebyshev_offsets(int ndim, int radius);

inline Voxel add(const Voxel& a, const Voxel& b) {
    return Voxel{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

}  // namespace rugosity
