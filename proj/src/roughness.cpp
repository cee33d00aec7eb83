#include "rugosity/roughness.hpp"

#include <cmath>
#include <functional>

#include "rugosity/parallel.hpp"

namespace rugosity {

std::size_t FlagField::count() const {
    std::size_t n = 0;
    for (std::uint8_t b : data) n += b;
    return n;
}

void validate_window(const WindowSpec& win, const GridDims& dims) {
    if (win.w < 1) throw ValueError("window size must be >= 1");
    if (win.w > dims.min_extent()) {
        throw ValueError("window size exceeds the smallest grid extent");
    }
}

void for_each_window(const GridDims& dims, int w,
                     const std::function<void(const Voxel&, const Voxel&)>& fn) {
    for (int i0 = 0; i0 < dims.extent[0]; i0 += w) {
        for (int j0 = 0; j0 < dims.extent[1]; j0 += w) {
            for (int k0 = 0; k0 < dims.extent[2]; k0 += w) {
                const Voxel lo{i0, j0, k0};
                const Voxel hi{
                    i0 + w < dims.extent[0] ? i0 + w : dims.extent[0],
                    j0 + w < dims.extent[1] ? j0 + w : dims.extent[1],
                    k0 + w < dims.extent[2] ? k0 + w : dims.extent[2],
                };
                fn(lo, hi);
            }
        }
    }
}

RoughnessField roughness_field(const DistanceField& zm, const SurfaceMask& surface,
                               const NeighborhoodSpec& nb) {
    if (zm.dims != surface.dims) throw ShapeError("roughness_field: dims differ");
    if (nb.radius < 1) throw ValueError("neighborhood radius must be >= 1");

    const GridDims& dims = surface.dims;
    RoughnessField df;
    df.dims = dims;
    df.data.assign(dims.voxel_count(), 0.0);

    const auto offs = chebyshev_offsets(dims.ndim, nb.radius);
    const int e1 = dims.extent[1];
    const int e2 = dims.extent[2];
    par::for_blocks(static_cast<std::size_t>(dims.extent[0]), 8, [&](std::size_t lo, std::size_t hi) {
        for (int i = static_cast<int>(lo); i < static_cast<int>(hi); ++i) {
            for (int j = 0; j < e1; ++j) {
                for (int k = 0; k < e2; ++k) {
                    const std::size_t idx = dims.index(i, j, k);
                    if (!surface.data[idx]) continue;
                    const double zc = voxel_quantize(zm.data[idx]);
                    double acc = 0.0;
                    for (const Voxel& o : offs) {
                        const int ni = i + o[0], nj = j + o[1], nk = k + o[2];
                        if (!dims.in_bounds(ni, nj, nk)) continue;
                        const std::size_t nidx = dims.index(ni, nj, nk);
                        if (!surface.data[nidx]) continue;
                        acc += zc - voxel_quantize(zm.data[nidx]);
                    }
                    df.data[idx] = acc;
                }
            }
        }
    });
    return df;
}

RoughnessStats roughness_index(const SurfaceMask& surface, const Centroid& c0,
                               const WindowSpec& win) {
    validate_window(win, surface.dims);
    const std::vector<Voxel> voxels = surface_voxels(surface);
    if (voxels.empty()) throw EmptySurfaceError("roughness_index: empty surface");

    const GridDims& dims = surface.dims;
    const int w = win.w;
    const int nw0 = (dims.extent[0] + w - 1) / w;
    const int nw1 = (dims.extent[1] + w - 1) / w;
    const int nw2 = (dims.extent[2] + w - 1) / w;
    const std::size_t nwin = static_cast<std::size_t>(nw0) * nw1 * nw2;

    std::vector<double> zeta(voxels.size());
    std::vector<std::size_t> wid(voxels.size());
    for (std::size_t n = 0; n < voxels.size(); ++n) {
        const Voxel& v = voxels[n];
        zeta[n] = distance_to(v, c0);
        wid[n] = (static_cast<std::size_t>(v[0] / w) * nw1 + v[1] / w) * nw2 + v[2] / w;
    }

    std::vector<double> sum(nwin, 0.0);
    std::vector<std::size_t> cnt(nwin, 0);
    for (std::size_t n = 0; n < voxels.size(); ++n) {
        sum[wid[n]] += zeta[n];
        ++cnt[wid[n]];
    }
    std::vector<double> dev(nwin, 0.0);
    for (std::size_t n = 0; n < voxels.size(); ++n) {
        const double mean = sum[wid[n]] / static_cast<double>(cnt[wid[n]]);
        dev[wid[n]] += std::abs(zeta[n] - mean);
    }

    double total = 0.0;
    std::size_t m = 0;
    for (std::size_t q = 0; q < nwin; ++q) {
        if (cnt[q] == 0) continue;
        total += dev[q] / static_cast<double>(cnt[q]);
        ++m;
    }

    RoughnessStats stats;
    stats.window = win;
    stats.m_windows = m;
    stats.ri = total / static_cast<double>(m);
    return stats;
}

double absolute_ri(double ri_pred, double ri_ref) { return ri_pred - ri_ref; }

double roughness_ratio(double ri_p, double ri_g) {
    if (ri_g <= 0.0) throw UndefinedMetricError("roughness ratio undefined: reference RI is zero");
    return std::abs(ri_p - ri_g) / ri_g;
}

FlagField detect_irregularities(const RoughnessField& df, double kappa) {
    if (kappa < 0.0) throw ValueError("kappa must be >= 0");
    FlagField flags;
    flags.dims = df.dims;
    flags.data.assign(df.data.size(), 0);
    for (std::size_t i = 0; i < df.data.size(); ++i) {
        if (std::abs(df.data[i]) > kappa) flags.data[i] = 1;
    }
    return flags;
}

WindowSpec default_window(const GridDims& dims) {
    int w = static_cast<int>(std::llround(0.07 * dims.min_extent()));
    if (w < 3) w = 3;
    if (w > dims.min_extent()) w = dims.min_extent();
    if (w < 1) w = 1;
    return WindowSpec{w};
}

}  // namespace rugosity
