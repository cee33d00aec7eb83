#include "rugosity/grid.hpp"

#include <string>

namespace rugosity {

namespace {
constexpr std::size_t kMaxVoxels = std::size_t(1) << 31;
}

void validate_dims(const GridDims& dims) {
    if (dims.ndim != 2 && dims.ndim != 3) {
        throw ValueError("grid ndim must be 2 or 3, got " + std::to_string(dims.ndim));
    }
    for (int a = 0; a < 3; ++a) {
        if (dims.extent[a] < 1) {
            throw ValueError("grid extents must be positive");
        }
    }
    if (dims.ndim == 2 && dims.extent[2] != 1) {
        throw ValueError("2D grids must have extent[2] == 1");
    }
    if (dims.voxel_count() > kMaxVoxels) {
        throw ValueError("grid too large");
    }
}

std::vector<Voxel> face_offsets(int ndim) {
    std::vector<Voxel> offs;
    offs.reserve(2 * ndim);
    for (int a = 0; a < ndim; ++a) {
        for (int s : {-1, 1}) {
            Voxel o{0, 0, 0};
            o[a] = s;
            offs.push_back(o);
        }
    }
    return offs;
}

std::vector<Voxel> chebyshev_offsets(int ndim, int radius) {
    if (radius < 1) throw ValueError("neighborhood radius must be >= 1");
    std::vector<Voxel> offs;
    const int rk = ndim == 3 ? radius : 0;
    for (int di = -radius; di <= radius; ++di) {
        for (int dj = -radius; dj <= radius; ++dj) {
            for (int dk = -rk; dk <= rk; ++dk) {
                if (di == 0 && dj == 0 && dk == 0) continue;
                offs.push_back(Voxel{di, dj, dk});
            }
        }
    }
    return offs;
}

}  // namespace rugosity
