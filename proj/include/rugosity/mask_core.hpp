#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rugosity/grid.hpp"

namespace rugosity {

/// Dense binary occupancy grid. Every element is 0 or 1.
struct VoxelMask {
    GridDims dims;
    std::vector<std::uint8_t> data;

    std::uint8_t at(int i, int j, int k = 0) const { return data[dims.index(i, j, k)]; }
    std::uint8_t at(const Voxel& v) const { return data[dims.index(v)]; }
    void set(int i, int j, int k, std::uint8_t value) { data[dims.index(i, j, k)] = value; }
    void set(const Voxel& v, std::uint8_t value) { data[dims.index(v)] = value; }

    std::size_t foreground_count() const;
};

/// Binary grid marking the foreground voxels that touch background (or
/// lie on the grid border) through a face.
struct SurfaceMask {
    GridDims dims;
    std::vector<std::uint8_t> data;

    std::uint8_t at(const Voxel& v) const { return data[dims.index(v)]; }
    std::size_t voxel_count_on_surface() const;
};

/// Continuous per-axis mean position of the surface voxels, in voxel
/// units. coord[2] is 0 for 2D grids.
struct Centroid {
    int ndim = 2;
    std::array<double, 3> coord{0.0, 0.0, 0.0};
};

/// Per-voxel Euclidean distance from the centroid; zero off the surface.
struct DistanceField {
    GridDims dims;
    std::vector<double> data;

    double at(const Voxel& v) const { return data[dims.index(v)]; }
};

/// Throws ValueError if the mask violates its invariants (bad dims, size
/// mismatch, or a byte outside {0,1}).
void validate_mask(const VoxelMask& mask);

/// Parses the MVOX byte format:
///   "MVOX <ndim> <d0> <d1> [<d2>]\n" followed by exactly d0*d1(*d2)
///   payload bytes, each 0x00 or 0x01, row-major with the last axis
///   fastest.
/// Bad magic or a dims/payload mismatch raises FormatError; a payload
/// byte outside {0,1} raises ValueError.
VoxelMask parse_mvox(const std::string& bytes);

/// Inverse of parse_mvox; the round trip is byte-identical.
std::string serialize_mvox(const VoxelMask& mask);

/// File wrappers around parse/serialize. Raise IoError on filesystem
/// failures.
VoxelMask load_mvox(const std::string& path);
void save_mvox(const std::string& path, const VoxelMask& mask);

/// Marks every foreground voxel with at least one face-adjacent
/// background or out-of-grid neighbor. Out-of-grid counts as background,
/// so objects touching the border have surface there.
SurfaceMask extract_surface(const VoxelMask& mask);

/// Arithmetic mean of the surface voxel coordinates. Throws
/// EmptySurfaceError when no voxel is marked.
Centroid centroid(const SurfaceMask& surface);

/// Euclidean distance of v from c0, independent of any mask.
double distance_to(const Voxel& v, const Centroid& c0);

/// Distance from every surface voxel to c0; zero at non-surface voxels.
DistanceField distance_field(const SurfaceMask& surface, const Centroid& c0);

/// Surface voxel positions in row-major scan order.
std::vector<Voxel> surface_voxels(const SurfaceMask& surface);

}  // namespace rugosity
