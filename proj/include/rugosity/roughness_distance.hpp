#pragma once

#include <vector>

#include "rugosity/mask_core.hpp"
#include "rugosity/roughness.hpp"

namespace rugosity {

/// Signed elementwise difference between two centroid-distance fields
/// computed about a shared centroid. Zero wherever neither surface
/// passes.
struct RoughnessDistanceField {
    GridDims dims;
    std::vector<double> data;

    double at(const Voxel& v) const { return data[dims.index(v)]; }
};

/// Distance field of P minus distance field of G, both taken about G's
/// centroid so the comparison is translation-stable. Throws ShapeError on
/// dims mismatch and EmptySurfaceError when G has no surface.
RoughnessDistanceField roughness_distance_field(const SurfaceMask& p, const SurfaceMask& g);

/// Same, but about an explicit shared centroid.
RoughnessDistanceField roughness_distance_field(const SurfaceMask& p, const SurfaceMask& g,
                                                const Centroid& c0);

/// Average roughness distance: mean of |field| over every grid element.
/// Grid padding therefore dilutes the value; report it together with the
/// dims.
double ard(const RoughnessDistanceField& f);

/// Mean of |field| over the union of the two surface supports only.
/// Returns 0 when the union is empty.
double ard_surface_union(const RoughnessDistanceField& f, const SurfaceMask& p,
                         const SurfaceMask& g);

/// Flags voxels with |field| > kappa_c. Negative kappa_c raises
/// ValueError.
FlagField detect_vs_reference(const RoughnessDistanceField& f, double kappa_c);

}  // namespace rugosity
