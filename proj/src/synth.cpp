#include "rugosity/synth.hpp"

#include <cmath>
#include <vector>

namespace rugosity::synth {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

Vec3 sub(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const Vec3& a) { return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z); }
Vec3 scaled(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }

Vec3 direction(int ndim, double azimuth_deg, double polar_deg) {
    const double az = azimuth_deg * kPi / 180.0;
    if (ndim == 2) return {std::cos(az), std::sin(az), 0.0};
    const double pol = polar_deg * kPi / 180.0;
    return {std::sin(pol) * std::cos(az), std::sin(pol) * std::sin(az), std::cos(pol)};
}

// Orthonormal frame perpendicular to d, used to spread column widths.
void perpendicular_frame(int ndim, const Vec3& d, Vec3& e1, Vec3& e2) {
    if (ndim == 2) {
        e1 = {-d.y, d.x, 0.0};
        e2 = {0.0, 0.0, 0.0};
        return;
    }
    const Vec3 axis = std::abs(d.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    Vec3 c = cross(d, axis);
    const double n = norm(c);
    e1 = scaled(c, 1.0 / n);
    e2 = cross(d, e1);
}

struct StarPolygon {
    std::vector<double> px, py;  // vertices relative to the center
};

StarPolygon make_star(const ShapeSpec& spec) {
    StarPolygon poly;
    const int n = spec.star_points;
    const double rot = spec.star_rotation_deg * kPi / 180.0;
    for (int p = 0; p < 2 * n; ++p) {
        const double r = (p % 2 == 0) ? spec.radius : spec.radius * spec.star_inner_ratio;
        const double a = rot + p * kPi / n;
        poly.px.push_back(r * std::cos(a));
        poly.py.push_back(r * std::sin(a));
    }
    return poly;
}

// Boundary radius of a star-shaped polygon along the ray at angle theta.
double polygon_radius(const StarPolygon& poly, double theta) {
    const double ux = std::cos(theta), uy = std::sin(theta);
    const std::size_t n = poly.px.size();
    double best = 0.0;
    for (std::size_t e = 0; e < n; ++e) {
        const std::size_t f = (e + 1) % n;
        const double ax = poly.px[e], ay = poly.py[e];
        const double bx = poly.px[f], by = poly.py[f];
        const double det = (bx - ax) * (-uy) + ux * (by - ay);
        if (std::abs(det) < 1e-12) continue;
        const double s = (ax * uy - ux * ay) / det;
        const double t = ((bx - ax) * (-ay) + ax * (by - ay)) / det;
        if (s >= -1e-9 && s <= 1.0 + 1e-9 && t > best) best = t;
    }
    return best;
}

void validate_spec(const ShapeSpec& spec) {
    if (spec.extent < 8) throw ValueError("shape extent must be >= 8");
    if (spec.radius < 2.0) throw ValueError("shape radius must be >= 2");
    const double half = spec.extent / 2.0;
    if (spec.radius > half) throw ValueError("shape radius exceeds the grid");
    if (spec.kind == ShapeKind::Star) {
        if (spec.star_points < 3) throw ValueError("star needs at least 3 points");
        if (spec.star_inner_ratio <= 0.1 || spec.star_inner_ratio >= 1.0) {
            throw ValueError("star inner ratio must lie in (0.1, 1)");
        }
    }
    for (const Perturbation& p : spec.perturbations) {
        if (p.length <= 0.0) throw ValueError("perturbation length must be positive");
        if (p.width < 1) throw ValueError("perturbation width must be >= 1");
        if (p.kind == PerturbKind::Spike && spec.radius + p.length > half) {
            throw ValueError("spike does not fit inside the grid");
        }
        if (p.kind == PerturbKind::Hole && p.length >= spec.radius) {
            throw ValueError("hole depth must be smaller than the radius");
        }
    }
}

}  // namespace

VoxelMask generate(const ShapeSpec& spec) {
    validate_spec(spec);

    const int ndim = spec.kind == ShapeKind::Ball ? 3 : 2;
    GridDims dims;
    dims.ndim = ndim;
    dims.extent = {spec.extent, spec.extent, ndim == 3 ? spec.extent : 1};

    const Vec3 c{(spec.extent - 1) / 2.0, (spec.extent - 1) / 2.0,
                 ndim == 3 ? (spec.extent - 1) / 2.0 : 0.0};

    StarPolygon poly;
    if (spec.kind == ShapeKind::Star) poly = make_star(spec);

    struct RegularPert {
        const Perturbation* p;
        Vec3 dir;
        double span;  // angular half-extent; slope stays below a voxel step
    };
    std::vector<RegularPert> regular;
    std::vector<const Perturbation*> irregular;
    for (const Perturbation& p : spec.perturbations) {
        if (p.regularity == Regularity::Regular) {
            regular.push_back({&p, direction(ndim, p.azimuth_deg, p.polar_deg),
                               3.0 * p.length / spec.radius});
        } else {
            irregular.push_back(&p);
        }
    }

    VoxelMask mask;
    mask.dims = dims;
    mask.data.assign(dims.voxel_count(), 0);

    for (int i = 0; i < dims.extent[0]; ++i) {
        for (int j = 0; j < dims.extent[1]; ++j) {
            for (int k = 0; k < dims.extent[2]; ++k) {
                const Vec3 rel{i - c.x, j - c.y, k - c.z};
                const double dist = norm(rel);
                double boundary = spec.radius;
                if (spec.kind == ShapeKind::Star) {
                    boundary = polygon_radius(poly, std::atan2(rel.y, rel.x));
                }
                for (const RegularPert& rp : regular) {
                    double cosang = 1.0;
                    if (dist > 1e-9) {
                        cosang = (rel.x * rp.dir.x + rel.y * rp.dir.y + rel.z * rp.dir.z) / dist;
                        if (cosang > 1.0) cosang = 1.0;
                        if (cosang < -1.0) cosang = -1.0;
                    }
                    const double ang = std::acos(cosang);
                    if (ang >= rp.span) continue;
                    const double h = rp.p->length * (1.0 - ang / rp.span);
                    boundary += rp.p->kind == PerturbKind::Spike ? h : -h;
                }
                if (dist <= boundary) mask.data[dims.index(i, j, k)] = 1;
            }
        }
    }

    // Irregular columns: abrupt radial features marched outward from the
    // measured base boundary (spikes paint, holes carve).
    for (const Perturbation* p : irregular) {
        const Vec3 d = direction(ndim, p->azimuth_deg, p->polar_deg);
        Vec3 e1, e2;
        perpendicular_frame(ndim, d, e1, e2);

        double rb = spec.radius;
        if (spec.kind == ShapeKind::Star) rb = polygon_radius(poly, std::atan2(d.y, d.x));

        double t_lo, t_hi;
        std::uint8_t value;
        if (p->kind == PerturbKind::Spike) {
            t_lo = rb - 2.0;
            // The tip voxel then sits `length` away from the nearest
            // surface voxel of the unperturbed shape.
            t_hi = rb + p->length - 1.0;
            value = 1;
        } else {
            t_lo = rb - p->length;
            t_hi = rb + 1.0;
            value = 0;
        }

        const int w = p->width;
        for (double t = t_lo; t <= t_hi + 1e-9; t += 0.25) {
            for (int m1 = 0; m1 < w; ++m1) {
                const double o1 = m1 - (w - 1) / 2.0;
                const int m2_max = ndim == 3 ? w : 1;
                for (int m2 = 0; m2 < m2_max; ++m2) {
                    const double o2 = ndim == 3 ? m2 - (w - 1) / 2.0 : 0.0;
                    const Vec3 pos{c.x + t * d.x + o1 * e1.x + o2 * e2.x,
                                   c.y + t * d.y + o1 * e1.y + o2 * e2.y,
                                   c.z + t * d.z + o1 * e1.z + o2 * e2.z};
                    const int vi = static_cast<int>(std::llround(pos.x));
                    const int vj = static_cast<int>(std::llround(pos.y));
                    const int vk = ndim == 3 ? static_cast<int>(std::llround(pos.z)) : 0;
                    if (dims.in_bounds(vi, vj, vk)) {
                        mask.data[dims.index(vi, vj, vk)] = value;
                    }
                }
            }
        }
    }

    validate_mask(mask);
    return mask;
}

namespace {

ShapeSpec suite_base(bool volumetric) {
    ShapeSpec spec;
    spec.kind = volumetric ? ShapeKind::Ball : ShapeKind::Disk;
    spec.extent = 100;
    // Fractional radius keeps the whole rasterized surface inside a
    // single voxel-rounding band, so the plain shapes carry no quantized
    // roughness of their own.
    spec.radius = 25.49;
    return spec;
}

Perturbation suite_spike(double length, double az, double pol) {
    Perturbation p;
    p.kind = PerturbKind::Spike;
    p.regularity = Regularity::Irregular;
    p.length = length;
    p.width = 2;
    p.azimuth_deg = az;
    p.polar_deg = pol;
    return p;
}

// Tallest spike first and placed identically in the one-spike and
// many-spike variants so their extreme distances coincide.
const double kSpikeLengths[8] = {20, 14, 12, 10, 8, 6, 4, 3};
const double kAzimuth2d[8] = {0, 47, 95, 139, 183, 228, 272, 316};
const double kAzimuth3d[8] = {0, 45, 95, 140, 185, 230, 275, 320};
const double kPolar3d[8] = {90, 60, 115, 80, 100, 65, 120, 90};

}  // namespace

PaperSuite paper_suite() {
    PaperSuite suite;

    ShapeSpec gt2 = suite_base(false);
    suite.gt2d = generate(gt2);

    ShapeSpec little2 = gt2;
    little2.perturbations.push_back(suite_spike(kSpikeLengths[0], kAzimuth2d[0], 90.0));
    suite.little2d = generate(little2);

    ShapeSpec many2 = gt2;
    for (int s = 0; s < 8; ++s) {
        many2.perturbations.push_back(suite_spike(kSpikeLengths[s], kAzimuth2d[s], 90.0));
    }
    suite.many2d = generate(many2);

    ShapeSpec gt3 = suite_base(true);
    suite.gt3d = generate(gt3);

    ShapeSpec little3 = gt3;
    little3.perturbations.push_back(suite_spike(kSpikeLengths[0], kAzimuth3d[0], kPolar3d[0]));
    suite.little3d = generate(little3);

    ShapeSpec many3 = gt3;
    for (int s = 0; s < 8; ++s) {
        many3.perturbations.push_back(suite_spike(kSpikeLengths[s], kAzimuth3d[s], kPolar3d[s]));
    }
    suite.many3d = generate(many3);

    return suite;
}

const std::vector<std::string>& PaperSuite::names() {
    static const std::vector<std::string> kNames = {"gt2d",    "little2d", "many2d",
                                                    "gt3d",    "little3d", "many3d"};
    return kNames;
}

const VoxelMask& PaperSuite::by_name(const std::string& name) const {
    if (name == "gt2d") return gt2d;
    if (name == "little2d") return little2d;
    if (name == "many2d") return many2d;
    if (name == "gt3d") return gt3d;
    if (name == "little3d") return little3d;
    if (name == "many3d") return many3d;
    throw ValueError("unknown suite mask '" + name + "'");
}

}  // namespace rugosity::synth
