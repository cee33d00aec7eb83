#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rugosity/mask_core.hpp"

namespace rugosity::synth {

enum class ShapeKind { Disk, Ball, Star };
enum class PerturbKind { Spike, Hole };
enum class Regularity { Regular, Irregular };

/// A radial surface perturbation. Irregular ones change the surface
/// radius abruptly (a thin column attached to or carved out of the
/// shape); regular ones ramp the radius gradually over an angular span so
/// neighboring contour positions stay within a voxel step of each other.
struct Perturbation {
    PerturbKind kind = PerturbKind::Spike;
    double length = 10.0;   // radial extent in voxels
    int width = 1;          // cross-section in voxels (irregular only)
    Regularity regularity = Regularity::Irregular;
    double azimuth_deg = 0.0;  // direction in the i-j plane
    double polar_deg = 90.0;   // 3D only; angle from the +k axis
};

struct ShapeSpec {
    ShapeKind kind = ShapeKind::Disk;
    int extent = 100;        // grid edge length (square/cubic)
    double radius = 25.0;    // outer radius for stars
    std::uint64_t seed = 0;  // reserved for randomized placement
    int star_points = 5;
    double star_inner_ratio = 0.55;  // inner radius / outer radius
    double star_rotation_deg = 90.0;
    std::vector<Perturbation> perturbations;
};

/// Deterministic rasterization of the spec. Throws ValueError when the
/// shape (radius plus longest spike) does not fit in the grid.
VoxelMask generate(const ShapeSpec& spec);

/// The six masks used throughout the experiments: smooth ground truth,
/// a variant with one tall irregular spike, and a variant with many
/// irregular spikes whose tallest matches the single one, in 2D and 3D.
struct PaperSuite {
    VoxelMask gt2d, little2d, many2d;
    VoxelMask gt3d, little3d, many3d;

    /// Fixed file names, in the same order as fields.
    static const std::vector<std::string>& names();
    const VoxelMask& by_name(const std::string& name) const;
};

PaperSuite paper_suite();

}  // namespace rugosity::synth
