#include "rugosity/smoothing.hpp"

#include <cmath>
#include <limits>

namespace rugosity {

namespace {

// Most frequent quantized radius among the surface voxels within
// Chebyshev distance 2 of v (v included); smallest value on ties. Serves
// as the local estimate of where the unperturbed surface runs.
double local_mode_radius(const SurfaceMask& surface, const DistanceField& zeta, const Voxel& v,
                         const std::vector<Voxel>& wide_nbhd) {
    std::vector<std::pair<double, int>> counts;
    counts.emplace_back(voxel_quantize(zeta.at(v)), 1);
    for (const Voxel& o : wide_nbhd) {
        const Voxel u = add(v, o);
        if (!surface.dims.in_bounds(u) || !surface.at(u)) continue;
        const double qu = voxel_quantize(zeta.at(u));
        bool found = false;
        for (auto& [value, count] : counts) {
            if (value == qu) {
                ++count;
                found = true;
                break;
            }
        }
        if (!found) counts.emplace_back(qu, 1);
    }
    double mode = counts.front().first;
    int best = counts.front().second;
    for (const auto& [value, count] : counts) {
        if (count > best || (count == best && value < mode)) {
            mode = value;
            best = count;
        }
    }
    return mode;
}

// Applies one matrix-route pass with geometry already in hand. All
// decisions read the snapshot, so deletions (foreground voxels) and
// fills (background voxels) cannot collide. A flagged voxel only moves
// when it stands out from the local mode radius: spikes must sit above
// every neighbor and above the mode, pits below every neighbor and below
// the mode. Flagged voxels on slopes or next to a pit that drags their
// neighborhood down are left alone, which keeps the contour connected.
VoxelMask step_matrix(const VoxelMask& p, const FlagField& flags, const RoughnessField& rough,
                      const SurfaceMask& surface, const DistanceField& zeta, const Centroid& c0) {
    const GridDims& dims = p.dims;
    const auto nbhd = chebyshev_offsets(dims.ndim, 1);
    const auto wide_nbhd = chebyshev_offsets(dims.ndim, 2);
    const auto faces = face_offsets(dims.ndim);

    VoxelMask out = p;
    for (int i = 0; i < dims.extent[0]; ++i) {
        for (int j = 0; j < dims.extent[1]; ++j) {
            for (int k = 0; k < dims.extent[2]; ++k) {
                const std::size_t idx = dims.index(i, j, k);
                if (!flags.data[idx]) continue;
                if (!surface.data[idx]) {
                    throw ValueError("smooth: flagged voxel off the surface");
                }
                const double r = rough.data[idx];
                if (r == 0.0) {
                    throw ValueError("smooth: flagged voxel with zero roughness");
                }

                const Voxel v{i, j, k};
                const double qv = voxel_quantize(zeta.data[idx]);
                double qmax = -std::numeric_limits<double>::infinity();
                double qmin = std::numeric_limits<double>::infinity();
                for (const Voxel& o : nbhd) {
                    const Voxel u = add(v, o);
                    if (!dims.in_bounds(u)) continue;
                    const std::size_t uidx = dims.index(u);
                    if (!surface.data[uidx]) continue;
                    const double qu = voxel_quantize(zeta.data[uidx]);
                    if (qu > qmax) qmax = qu;
                    if (qu < qmin) qmin = qu;
                }
                const double mode = local_mode_radius(surface, zeta, v, wide_nbhd);

                if (r > 0.0) {
                    if (qv >= qmax && qv > mode) out.data[idx] = 0;
                } else {
                    if (qv > qmin || qv >= mode) continue;
                    for (const Voxel& o : faces) {
                        const Voxel u = add(v, o);
                        if (!dims.in_bounds(u)) continue;
                        const std::size_t uidx = dims.index(u);
                        if (p.data[uidx]) continue;
                        const double qu = voxel_quantize(distance_to(u, c0));
                        if (std::abs(qu - mode) < std::abs(qv - mode)) {
                            out.data[uidx] = 1;
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

VoxelMask smooth(const VoxelMask& p, const FlagField& flags, const RoughnessField& roughness) {
    if (flags.dims != p.dims || roughness.dims != p.dims) {
        throw ShapeError("smooth: dims differ");
    }
    if (flags.count() == 0) return p;
    const SurfaceMask surface = extract_surface(p);
    const Centroid c0 = centroid(surface);
    const DistanceField zeta = distance_field(surface, c0);
    return step_matrix(p, flags, roughness, surface, zeta, c0);
}

SmoothResult smooth_iterative(const VoxelMask& p, double kappa, int max_iters,
                              const NeighborhoodSpec& nb) {
    if (kappa < 0.0) throw ValueError("kappa must be >= 0");
    if (max_iters < 1) throw ValueError("max_iters must be >= 1");

    SmoothResult res{p, 0, false};
    for (int it = 1; it <= max_iters; ++it) {
        res.iterations = it;
        const SurfaceMask surface = extract_surface(res.mask);
        if (surface.voxel_count_on_surface() == 0) {
            res.converged = true;
            return res;
        }
        const Centroid c0 = centroid(surface);
        const DistanceField zeta = distance_field(surface, c0);
        const RoughnessField rough = roughness_field(zeta, surface, nb);
        const FlagField flags = detect_irregularities(rough, kappa);
        if (flags.count() == 0) {
            res.converged = true;
            return res;
        }
        res.mask = step_matrix(res.mask, flags, rough, surface, zeta, c0);
    }
    return res;
}

VoxelMask smooth_vs_reference(const VoxelMask& p, const VoxelMask& g, double kappa_c) {
    if (p.dims != g.dims) throw ShapeError("smooth_vs_reference: dims differ");
    const SurfaceMask sp = extract_surface(p);
    const SurfaceMask sg = extract_surface(g);
    const RoughnessDistanceField f = roughness_distance_field(sp, sg);
    const FlagField flags = detect_vs_reference(f, kappa_c);

    VoxelMask out = p;
    for (std::size_t i = 0; i < flags.data.size(); ++i) {
        if (!flags.data[i]) continue;
        out.data[i] = f.data[i] > 0.0 ? 0 : 1;
    }
    return out;
}

SmoothResult smooth_iterative_vs_reference(const VoxelMask& p, const VoxelMask& g, double kappa_c,
                                           int max_iters) {
    if (kappa_c < 0.0) throw ValueError("kappa_c must be >= 0");
    if (max_iters < 1) throw ValueError("max_iters must be >= 1");
    if (p.dims != g.dims) throw ShapeError("smooth_iterative_vs_reference: dims differ");

    const SurfaceMask sg = extract_surface(g);
    const Centroid c0 = centroid(sg);

    SmoothResult res{p, 0, false};
    for (int it = 1; it <= max_iters; ++it) {
        res.iterations = it;
        const SurfaceMask sp = extract_surface(res.mask);
        const RoughnessDistanceField f = roughness_distance_field(sp, sg, c0);
        const FlagField flags = detect_vs_reference(f, kappa_c);
        if (flags.count() == 0) {
            res.converged = true;
            return res;
        }
        for (std::size_t i = 0; i < flags.data.size(); ++i) {
            if (!flags.data[i]) continue;
            res.mask.data[i] = f.data[i] > 0.0 ? 0 : 1;
        }
    }
    return res;
}

}  // namespace rugosity
