#pragma once

#include "rugosity/mask_core.hpp"

namespace rugosity {

struct SurfaceDistanceStats {
    double hausdorff = 0.0;
    double assd = 0.0;
};

/// Exact bidirectional Hausdorff distance between two surfaces, using
/// voxel-center Euclidean distances. Throws ShapeError on dims mismatch
/// and EmptySurfaceError when either surface is empty.
double hausdorff(const SurfaceMask& gp, const SurfaceMask& gg);

/// Average symmetric surface distance: nearest-neighbor distances summed
/// in both directions and divided by the total surface voxel count.
/// Errors as hausdorff.
double assd(const SurfaceMask& gp, const SurfaceMask& gg);

/// Both metrics from one pass; cheaper than calling them separately.
SurfaceDistanceStats surface_distance_stats(const SurfaceMask& gp, const SurfaceMask& gg);

}  // namespace rugosity
