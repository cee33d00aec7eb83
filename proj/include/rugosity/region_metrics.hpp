#pragma once

#include <cstdint>

#include "rugosity/mask_core.hpp"

namespace rugosity {

/// Voxel-wise confusion counts of a predicted mask P against a
/// ground-truth mask G over their shared grid.
struct OverlapCounts {
    std::int64_t tp = 0;  // |P ∩ G|
    std::int64_t fp = 0;  // |P \ G|
    std::int64_t fn = 0;  // |G \ P|
    std::int64_t tn = 0;  // neither

    std::int64_t total() const { return tp + fp + fn + tn; }
    std::int64_t p_volume() const { return tp + fp; }
    std::int64_t g_volume() const { return tp + fn; }
};

/// Counts tp/fp/fn/tn over the grid. Throws ShapeError when the masks
/// have different dims.
OverlapCounts overlap_counts(const VoxelMask& p, const VoxelMask& g);

/// Dice similarity 2|P∩G| / (|P|+|G|). Undefined when both masks are
/// empty.
double dsc(const OverlapCounts& c);

/// Symmetric volume difference, 1 - DSC.
double svd(const OverlapCounts& c);

/// Jaccard similarity |P∩G| / |P∪G|; algebraically DSC / (2 - DSC).
double jsc(const OverlapCounts& c);

/// |P∩G| / |P|. Undefined for empty P.
double precision(const OverlapCounts& c);

/// |P∩G| / |G|. Undefined for empty G. Also reported as sensitivity.
double recall(const OverlapCounts& c);

/// |(P∪G)^C| / |G^C| with the mask's own grid as the universe.
/// Undefined when G covers the whole grid.
double specificity(const OverlapCounts& c);

/// Relative volume difference ||P|-|G|| / |G|; ignores overlap entirely.
/// Undefined for empty G.
double rvd(const OverlapCounts& c);

}  // namespace rugosity
