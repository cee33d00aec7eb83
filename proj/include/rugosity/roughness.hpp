#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rugosity/mask_core.hpp"

namespace rugosity {

/// Chebyshev neighborhood around a surface voxel, center excluded.
/// Radius 1 gives 8 neighbors in 2D and 26 in 3D; larger radii widen the
/// detector to multi-voxel features.
struct NeighborhoodSpec {
    int radius = 1;
};

/// Signed per-voxel roughness: positive where a voxel sits farther from
/// the centroid than its surface neighbors (spike), negative where it
/// sits closer (hole). Zero off the surface.
struct RoughnessField {
    GridDims dims;
    std::vector<double> data;

    double at(const Voxel& v) const { return data[dims.index(v)]; }
};

/// Boolean grid of voxels whose roughness magnitude exceeds a threshold.
struct FlagField {
    GridDims dims;
    std::vector<std::uint8_t> data;

    std::uint8_t at(const Voxel& v) const { return data[dims.index(v)]; }
    std::size_t count() const;
};

/// Square/cubic tiling window. The stride is fixed equal to the edge
/// length, so every voxel lands in exactly one window; windows at the far
/// edges may be partial.
struct WindowSpec {
    int w = 3;
};

struct RoughnessStats {
    double ri = 0.0;
    WindowSpec window;
    std::size_t m_windows = 0;           // windows containing surface voxels
    std::optional<double> residual;      // reference roughness, when known
    std::optional<double> absolute;      // ri - residual
};

/// Distance snapped to whole voxel steps. The roughness differences work
/// on this quantized scale so that sub-voxel rasterization jitter does
/// not register as roughness; a genuine one-voxel step always registers
/// as +/-1.
inline double voxel_quantize(double distance) {
    return static_cast<double>(std::llround(distance));
}

/// Throws ValueError unless 1 <= w <= min extent of dims.
void validate_window(const WindowSpec& win, const GridDims& dims);

/// Calls fn(lo, hi) for every tile of the stride-w tiling anchored at the
/// grid origin; hi is exclusive and clamped to the grid.
void for_each_window(const GridDims& dims, int w,
                     const std::function<void(const Voxel&, const Voxel&)>& fn);

/// Roughness of every surface voxel: the sum of quantized distance
/// differences against the surface voxels in its neighborhood. Neighbors
/// off the surface (or off the grid) contribute nothing.
RoughnessField roughness_field(const DistanceField& zm, const SurfaceMask& surface,
                               const NeighborhoodSpec& nb);

/// Windowed roughness index: tile the grid with stride-w windows, take
/// the mean absolute deviation of the centroid distances inside each
/// window that contains surface voxels, and average those deviations.
/// Throws EmptySurfaceError for an empty surface.
RoughnessStats roughness_index(const SurfaceMask& surface, const Centroid& c0,
                               const WindowSpec& win);

/// Excess roughness over a reference; negative means smoother than the
/// reference and is reported as-is.
double absolute_ri(double ri_pred, double ri_ref);

/// |ri_p - ri_g| / ri_g. Throws UndefinedMetricError when ri_g is zero.
double roughness_ratio(double ri_p, double ri_g);

/// Flags voxels with |roughness| > kappa. Negative kappa raises
/// ValueError.
FlagField detect_irregularities(const RoughnessField& df, double kappa);

/// Default window from the 3-10% band of the smallest grid extent.
WindowSpec default_window(const GridDims& dims);

}  // namespace rugosity
