#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is written directly from the definitions, favoring
// obviousness over speed, and shares no code with the implementations it
// verifies.

#include <cmath>
#include <cstdint>
#include <vector>

#include "rugosity/mask_core.hpp"
#include "rugosity/region_metrics.hpp"
#include "rugosity/roughness.hpp"

namespace oracles {

using rugosity::Centroid;
using rugosity::DistanceField;
using rugosity::GridDims;
using rugosity::SurfaceMask;
using rugosity::Voxel;
using rugosity::VoxelMask;

/// Surface by exhaustive face-neighbor scan.
inline std::vector<Voxel> surface_scan(const VoxelMask& m) {
    std::vector<Voxel> out;
    const GridDims& dims = m.dims;
    for (int i = 0; i < dims.extent[0]; ++i) {
        for (int j = 0; j < dims.extent[1]; ++j) {
            for (int k = 0; k < dims.extent[2]; ++k) {
                if (!m.at(i, j, k)) continue;
                bool exposed = false;
                for (int a = 0; a < dims.ndim && !exposed; ++a) {
                    for (int s = -1; s <= 1 && !exposed; s += 2) {
                        int n[3] = {i, j, k};
                        n[a] += s;
                        if (n[a] < 0 || n[a] >= dims.extent[a]) {
                            exposed = true;
                        } else if (!m.at(n[0], n[1], n[2])) {
                            exposed = true;
                        }
                    }
                }
                if (exposed) out.push_back(Voxel{i, j, k});
            }
        }
    }
    return out;
}

/// Confusion counts by a plain per-voxel loop.
inline rugosity::OverlapCounts count_scan(const VoxelMask& p, const VoxelMask& g) {
    rugosity::OverlapCounts c;
    for (std::size_t i = 0; i < p.data.size(); ++i) {
        const int pv = p.data[i], gv = g.data[i];
        c.tp += pv && gv;
        c.fp += pv && !gv;
        c.fn += !pv && gv;
        c.tn += !pv && !gv;
    }
    return c;
}

inline double dist(const Voxel& a, const Voxel& b) {
    const double di = a[0] - b[0], dj = a[1] - b[1], dk = a[2] - b[2];
    return std::sqrt(di * di + dj * dj + dk * dk);
}

/// All-pairs bidirectional Hausdorff distance.
inline double hausdorff_all_pairs(const std::vector<Voxel>& a, const std::vector<Voxel>& b) {
    double worst = 0.0;
    for (const auto [xs, ys] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
        for (const Voxel& x : *xs) {
            double best = std::numeric_limits<double>::infinity();
            for (const Voxel& y : *ys) {
                const double d = dist(x, y);
                if (d < best) best = d;
            }
            if (best > worst) worst = best;
        }
    }
    return worst;
}

/// All-pairs average symmetric surface distance.
inline double assd_all_pairs(const std::vector<Voxel>& a, const std::vector<Voxel>& b) {
    double sum = 0.0;
    for (const auto [xs, ys] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
        for (const Voxel& x : *xs) {
            double best = std::numeric_limits<double>::infinity();
            for (const Voxel& y : *ys) {
                const double d = dist(x, y);
                if (d < best) best = d;
            }
            sum += best;
        }
    }
    return sum / static_cast<double>(a.size() + b.size());
}

/// Roughness by a literal neighborhood scan over quantized distances.
inline double delta_zeta_at(const SurfaceMask& surface, const DistanceField& zm, const Voxel& v,
                            int radius) {
    const GridDims& dims = surface.dims;
    const double zv = static_cast<double>(std::llround(zm.at(v)));
    double acc = 0.0;
    const int rk = dims.ndim == 3 ? radius : 0;
    for (int di = -radius; di <= radius; ++di) {
        for (int dj = -radius; dj <= radius; ++dj) {
            for (int dk = -rk; dk <= rk; ++dk) {
                if (di == 0 && dj == 0 && dk == 0) continue;
                const Voxel u{v[0] + di, v[1] + dj, v[2] + dk};
                if (!dims.in_bounds(u) || !surface.at(u)) continue;
                acc += zv - static_cast<double>(std::llround(zm.at(u)));
            }
        }
    }
    return acc;
}

/// Windowed roughness index written straight from its definition: walk
/// the stride-w tiles, average |zeta - window mean| inside each tile that
/// holds surface voxels, then average over those tiles.
inline double ri_window_walk(const SurfaceMask& surface, const Centroid& c0, int w) {
    const GridDims& dims = surface.dims;
    double total = 0.0;
    std::size_t m = 0;
    for (int i0 = 0; i0 < dims.extent[0]; i0 += w) {
        for (int j0 = 0; j0 < dims.extent[1]; j0 += w) {
            for (int k0 = 0; k0 < dims.extent[2]; k0 += w) {
                std::vector<double> zs;
                for (int i = i0; i < std::min(i0 + w, dims.extent[0]); ++i) {
                    for (int j = j0; j < std::min(j0 + w, dims.extent[1]); ++j) {
                        for (int k = k0; k < std::min(k0 + w, dims.extent[2]); ++k) {
                            if (!surface.at(Voxel{i, j, k})) continue;
                            const double di = i - c0.coord[0];
                            const double dj = j - c0.coord[1];
                            const double dk = k - c0.coord[2];
                            zs.push_back(std::sqrt(di * di + dj * dj + dk * dk));
                        }
                    }
                }
                if (zs.empty()) continue;
                double mean = 0.0;
                for (double z : zs) mean += z;
                mean /= static_cast<double>(zs.size());
                double dev = 0.0;
                for (double z : zs) dev += std::abs(z - mean);
                total += dev / static_cast<double>(zs.size());
                ++m;
            }
        }
    }
    return total / static_cast<double>(m);
}

}  // namespace oracles
