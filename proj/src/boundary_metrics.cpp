#include "rugosity/boundary_metrics.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "rugosity/parallel.hpp"

namespace rugosity {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One-dimensional squared distance transform (lower envelope of
// parabolas). Positions with f == inf carry no site. Exact for integer
// site positions: candidate outputs are integers and the envelope
// boundaries are separated from them by far more than the float error.
void dt1d(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v,
          std::vector<double>& z, int n) {
    int q0 = 0;
    while (q0 < n && f[q0] == kInf) ++q0;
    if (q0 == n) {
        for (int q = 0; q < n; ++q) d[q] = kInf;
        return;
    }
    int k = 0;
    v[0] = q0;
    z[0] = -kInf;
    z[1] = kInf;
    for (int q = q0 + 1; q < n; ++q) {
        if (f[q] == kInf) continue;
        double s = 0.0;
        for (;;) {
            const int p = v[k];
            s = ((f[q] + static_cast<double>(q) * q) - (f[p] + static_cast<double>(p) * p)) /
                (2.0 * (q - p));
            if (k > 0 && s <= z[k]) {
                --k;
            } else {
                break;
            }
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kInf;
    }
    int j = 0;
    for (int q = 0; q < n; ++q) {
        while (z[j + 1] < q) ++j;
        const double dq = static_cast<double>(q - v[j]);
        d[q] = dq * dq + f[v[j]];
    }
}

// Exact squared Euclidean distance from every grid voxel to the nearest
// surface voxel, by separable transforms along each axis.
std::vector<double> nearest_sqdist(const SurfaceMask& surface) {
    const GridDims& dims = surface.dims;
    const int e0 = dims.extent[0], e1 = dims.extent[1], e2 = dims.extent[2];
    std::vector<double> grid(dims.voxel_count());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid[i] = surface.data[i] ? 0.0 : kInf;
    }

    struct Axis {
        int len;
        std::size_t stride;
        std::size_t lines;
    };
    const std::size_t plane12 = static_cast<std::size_t>(e1) * e2;
    const Axis axes[3] = {
        {e2, 1, static_cast<std::size_t>(e0) * e1},
        {e1, static_cast<std::size_t>(e2), static_cast<std::size_t>(e0) * e2},
        {e0, plane12, static_cast<std::size_t>(e1) * e2},
    };

    for (int a = 0; a < 3; ++a) {
        const Axis& ax = axes[a];
        if (ax.len <= 1) continue;
        par::for_blocks(ax.lines, 64, [&](std::size_t lo, std::size_t hi) {
            std::vector<double> f(ax.len), d(ax.len), z(ax.len + 1);
            std::vector<int> v(ax.len);
            for (std::size_t line = lo; line < hi; ++line) {
                // Base offset of this line in the flat grid.
                std::size_t base = 0;
                if (a == 0) {
                    base = line * static_cast<std::size_t>(e2);
                } else if (a == 1) {
                    const std::size_t i = line / e2, k = line % e2;
                    base = i * plane12 + k;
                } else {
                    base = line;
                }
                for (int q = 0; q < ax.len; ++q) f[q] = grid[base + q * ax.stride];
                dt1d(f, d, v, z, ax.len);
                for (int q = 0; q < ax.len; ++q) grid[base + q * ax.stride] = d[q];
            }
        });
    }
    return grid;
}

}  // namespace

SurfaceDistanceStats surface_distance_stats(const SurfaceMask& gp, const SurfaceMask& gg) {
    if (gp.dims != gg.dims) throw ShapeError("surface distance: dims differ");
    const std::vector<Voxel> pv = surface_voxels(gp);
    const std::vector<Voxel> gv = surface_voxels(gg);
    if (pv.empty() || gv.empty()) {
        throw EmptySurfaceError("surface distance: empty surface");
    }

    const std::vector<double> sq_to_p = nearest_sqdist(gp);
    const std::vector<double> sq_to_g = nearest_sqdist(gg);

    // Per-direction accumulators keep the metric exactly symmetric in its
    // arguments.
    double max_sq = 0.0;
    double sum_g = 0.0;
    double sum_p = 0.0;
    for (const Voxel& x : gv) {
        const double s = sq_to_p[gg.dims.index(x)];
        if (s > max_sq) max_sq = s;
        sum_g += std::sqrt(s);
    }
    for (const Voxel& x : pv) {
        const double s = sq_to_g[gp.dims.index(x)];
        if (s > max_sq) max_sq = s;
        sum_p += std::sqrt(s);
    }

    SurfaceDistanceStats out;
    out.hausdorff = std::sqrt(max_sq);
    out.assd = (sum_g + sum_p) / static_cast<double>(pv.size() + gv.size());
    return out;
}

double hausdorff(const SurfaceMask& gp, const SurfaceMask& gg) {
    return surface_distance_stats(gp, gg).hausdorff;
}

double assd(const SurfaceMask& gp, const SurfaceMask& gg) {
    return surface_distance_stats(gp, gg).assd;
}

}  // namespace rugosity
