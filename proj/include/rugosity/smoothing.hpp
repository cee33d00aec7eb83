#pragma once

#include "rugosity/mask_core.hpp"
#include "rugosity/roughness.hpp"
#include "rugosity/roughness_distance.hpp"

namespace rugosity {

struct SmoothResult {
    VoxelMask mask;
    int iterations = 0;   // detection passes performed
    bool converged = false;  // true once a pass found no flags
};

/// One smoothing pass driven by a roughness flag field.
///
/// Flagged voxels with positive roughness that sit at least as far from
/// the centroid as every surface neighbor are spikes and get cleared.
/// Flagged voxels with negative roughness that sit at least as close as
/// every surface neighbor are holes; their face-adjacent background
/// neighbors whose quantized distance is strictly closer to the local
/// mean surface radius than the hole's own get filled. Flagged voxels on
/// a slope (positive sum but a farther neighbor, or the mirror case) are
/// left alone so the contour is never disconnected.
///
/// Throws ShapeError when flags or roughness dims differ from p.
VoxelMask smooth(const VoxelMask& p, const FlagField& flags, const RoughnessField& roughness);

/// Repeats detect -> smooth with threshold kappa until no voxel is
/// flagged or max_iters passes ran. The iteration count includes the
/// final all-clear detection pass.
SmoothResult smooth_iterative(const VoxelMask& p, double kappa, int max_iters,
                              const NeighborhoodSpec& nb = NeighborhoodSpec{});

/// One smoothing pass against a reference: flagged voxels with positive
/// field value are dropped from P, flagged voxels with negative value
/// (reference surface not matched by P) are set to foreground.
VoxelMask smooth_vs_reference(const VoxelMask& p, const VoxelMask& g, double kappa_c);

/// Iterative driver for the reference route.
SmoothResult smooth_iterative_vs_reference(const VoxelMask& p, const VoxelMask& g, double kappa_c,
                                           int max_iters);

}  // namespace rugosity
