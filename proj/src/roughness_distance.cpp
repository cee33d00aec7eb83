#include "rugosity/roughness_distance.hpp"

#include <cmath>

namespace rugosity {

RoughnessDistanceField roughness_distance_field(const SurfaceMask& p, const SurfaceMask& g) {
    if (p.dims != g.dims) throw ShapeError("roughness_distance_field: dims differ");
    return roughness_distance_field(p, g, centroid(g));
}

RoughnessDistanceField roughness_distance_field(const SurfaceMask& p, const SurfaceMask& g,
                                                const Centroid& c0) {
    if (p.dims != g.dims) throw ShapeError("roughness_distance_field: dims differ");
    const DistanceField zp = distance_field(p, c0);
    const DistanceField zg = distance_field(g, c0);

    RoughnessDistanceField f;
    f.dims = p.dims;
    f.data.resize(zp.data.size());
    for (std::size_t i = 0; i < f.data.size(); ++i) {
        f.data[i] = zp.data[i] - zg.data[i];
    }
    return f;
}

double ard(const RoughnessDistanceField& f) {
    double sum = 0.0;
    for (double v : f.data) sum += std::abs(v);
    return sum / static_cast<double>(f.data.size());
}

double ard_surface_union(const RoughnessDistanceField& f, const SurfaceMask& p,
                         const SurfaceMask& g) {
    if (f.dims != p.dims || f.dims != g.dims) {
        throw ShapeError("ard_surface_union: dims differ");
    }
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < f.data.size(); ++i) {
        if (!p.data[i] && !g.data[i]) continue;
        sum += std::abs(f.data[i]);
        ++n;
    }
    return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

FlagField detect_vs_reference(const RoughnessDistanceField& f, double kappa_c) {
    if (kappa_c < 0.0) throw ValueError("kappa_c must be >= 0");
    FlagField flags;
    flags.dims = f.dims;
    flags.data.assign(f.data.size(), 0);
    for (std::size_t i = 0; i < f.data.size(); ++i) {
        if (std::abs(f.data[i]) > kappa_c) flags.data[i] = 1;
    }
    return flags;
}

}  // namespace rugosity
