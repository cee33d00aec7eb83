#include "rugosity/region_metrics.hpp"

namespace rugosity {

OverlapCounts overlap_counts(const VoxelMask& p, const VoxelMask& g) {
    if (p.dims != g.dims) throw ShapeError("overlap_counts: mask dims differ");
    OverlapCounts c;
    const std::size_t n = p.data.size();
    for (std::size_t i = 0; i < n; ++i) {
        const bool pv = p.data[i] != 0;
        const bool gv = g.data[i] != 0;
        if (pv && gv) ++c.tp;
        else if (pv) ++c.fp;
        else if (gv) ++c.fn;
        else ++c.tn;
    }
    return c;
}

double dsc(const OverlapCounts& c) {
    const std::int64_t denom = 2 * c.tp + c.fp + c.fn;
    if (denom == 0) throw UndefinedMetricError("DSC undefined: both masks empty");
    return 2.0 * static_cast<double>(c.tp) / static_cast<double>(denom);
}

double svd(const OverlapCounts& c) { return 1.0 - dsc(c); }

double jsc(const OverlapCounts& c) {
    const std::int64_t uni = c.tp + c.fp + c.fn;
    if (uni == 0) throw UndefinedMetricError("JSC undefined: both masks empty");
    return static_cast<double>(c.tp) / static_cast<double>(uni);
}

double precision(const OverlapCounts& c) {
    if (c.p_volume() == 0) throw UndefinedMetricError("precision undefined: P empty");
    return static_cast<double>(c.tp) / static_cast<double>(c.p_volume());
}

double recall(const OverlapCounts& c) {
    if (c.g_volume() == 0) throw UndefinedMetricError("recall undefined: G empty");
    return static_cast<double>(c.tp) / static_cast<double>(c.g_volume());
}

double specificity(const OverlapCounts& c) {
    const std::int64_t g_complement = c.tn + c.fp;
    if (g_complement == 0) throw UndefinedMetricError("specificity undefined: G covers the grid");
    return static_cast<double>(c.tn) / static_cast<double>(g_complement);
}

double rvd(const OverlapCounts& c) {
    if (c.g_volume() == 0) throw UndefinedMetricError("RVD undefined: G empty");
    const double diff = static_cast<double>(c.p_volume() - c.g_volume());
    return std::abs(diff) / static_cast<double>(c.g_volume());
}

}  // namespace rugosity
