#include <doctest.h>

#include <cmath>

#include "rugosity/boundary_metrics.hpp"
#include "rugosity/mask_core.hpp"
#include "rugosity/roughness.hpp"
#include "rugosity/synth.hpp"

#include "testutil.hpp"

using namespace rugosity;
using namespace rugosity::synth;

namespace {

double max_abs_roughness(const VoxelMask& m) {
    const SurfaceMask s = extract_surface(m);
    const Centroid c0 = centroid(s);
    const RoughnessField f = roughness_field(distance_field(s, c0), s, NeighborhoodSpec{1});
    double worst = 0.0;
    for (double v : f.data) worst = std::max(worst, std::abs(v));
    return worst;
}

double ri_of(const VoxelMask& m, int w) {
    const SurfaceMask s = extract_surface(m);
    return roughness_index(s, centroid(s), WindowSpec{w}).ri;
}

}  // namespace

TEST_CASE("disk area tracks pi r^2 within one percent") {
    const VoxelMask disk = generate(testutil::disk_spec(100, 30.0));
    const double expected = 3.14159265358979 * 30.0 * 30.0;
    const double got = static_cast<double>(disk.foreground_count());
    CHECK(std::abs(got - expected) <= 0.01 * expected);
}

TEST_CASE("ball with a 20-voxel spike moves the Hausdorff distance by 20") {
    ShapeSpec ball;
    ball.kind = ShapeKind::Ball;
    ball.extent = 100;
    ball.radius = 30.0;
    const VoxelMask plain = generate(ball);
    ShapeSpec spiked = ball;
    spiked.perturbations.push_back(testutil::spike(20, 1, false, 0));
    const double h = hausdorff(extract_surface(plain), extract_surface(generate(spiked)));
    CHECK(std::abs(h - 20.0) <= 1.0);
}

TEST_CASE("generation is deterministic") {
    ShapeSpec spec = testutil::disk_spec(80, 22.0);
    spec.perturbations.push_back(testutil::spike(10, 2, false, 45));
    spec.seed = 1234;
    CHECK(generate(spec).data == generate(spec).data);

    const PaperSuite a = paper_suite();
    const PaperSuite b = paper_suite();
    for (const std::string& name : PaperSuite::names()) {
        CHECK(a.by_name(name).data == b.by_name(name).data);
    }
}

TEST_CASE("shapes that do not fit are rejected") {
    ShapeSpec spec = testutil::disk_spec(100, 40.0);
    spec.perturbations.push_back(testutil::spike(25, 1, false, 0));
    CHECK_THROWS_AS(generate(spec), ValueError);

    ShapeSpec hole = testutil::disk_spec(100, 20.0);
    Perturbation p;
    p.kind = PerturbKind::Hole;
    p.length = 25.0;
    hole.perturbations.push_back(p);
    CHECK_THROWS_AS(generate(hole), ValueError);

    ShapeSpec star;
    star.kind = ShapeKind::Star;
    star.extent = 100;
    star.radius = 30.0;
    star.star_inner_ratio = 1.5;
    CHECK_THROWS_AS(generate(star), ValueError);
}

TEST_CASE("abrupt perturbations are rougher than gradual ones of equal length") {
    // Balanced pairs keep the centroid centered, isolating the
    // regularity contrast from alignment effects.
    ShapeSpec irregular = testutil::disk_spec(100, 25.49);
    irregular.perturbations.push_back(testutil::spike(10, 2, false, 0));
    irregular.perturbations.push_back(testutil::spike(10, 2, false, 180));
    ShapeSpec regular = testutil::disk_spec(100, 25.49);
    regular.perturbations.push_back(testutil::spike(10, 2, true, 0));
    regular.perturbations.push_back(testutil::spike(10, 2, true, 180));
    CHECK(max_abs_roughness(generate(irregular)) > max_abs_roughness(generate(regular)));

    ShapeSpec irr_hole = testutil::disk_spec(100, 25.49);
    Perturbation h1;
    h1.kind = PerturbKind::Hole;
    h1.length = 8.0;
    h1.regularity = Regularity::Irregular;
    Perturbation h2 = h1;
    h2.azimuth_deg = 180.0;
    irr_hole.perturbations.push_back(h1);
    irr_hole.perturbations.push_back(h2);
    ShapeSpec reg_hole = irr_hole;
    reg_hole.perturbations[0].regularity = Regularity::Regular;
    reg_hole.perturbations[1].regularity = Regularity::Regular;
    CHECK(max_abs_roughness(generate(irr_hole)) > max_abs_roughness(generate(reg_hole)));
}

TEST_CASE("holes carve volume out of the base shape") {
    const VoxelMask plain = generate(testutil::disk_spec(100, 25.49));
    ShapeSpec holed = testutil::disk_spec(100, 25.49);
    Perturbation p;
    p.kind = PerturbKind::Hole;
    p.length = 6.0;
    holed.perturbations.push_back(p);
    CHECK(generate(holed).foreground_count() < plain.foreground_count());
}

TEST_CASE("star: fits between its inner and outer disks") {
    ShapeSpec spec;
    spec.kind = ShapeKind::Star;
    spec.extent = 100;
    spec.radius = 34.0;
    spec.star_inner_ratio = 0.55;
    const VoxelMask star = generate(spec);
    const double outer_area = 3.14159265 * 34.0 * 34.0;
    const double inner_area = 3.14159265 * (34.0 * 0.55) * (34.0 * 0.55);
    const double got = static_cast<double>(star.foreground_count());
    CHECK(got > inner_area);
    CHECK(got < outer_area);
    CHECK(serialize_mvox(parse_mvox(serialize_mvox(star))) == serialize_mvox(star));
}

TEST_CASE("suite: equal tallest spikes, equal Hausdorff distances") {
    const PaperSuite suite = paper_suite();
    const SurfaceMask gt2 = extract_surface(suite.gt2d);
    const SurfaceMask little2 = extract_surface(suite.little2d);
    const SurfaceMask many2 = extract_surface(suite.many2d);
    const double h_little = hausdorff(gt2, little2);
    const double h_many = hausdorff(gt2, many2);
    CHECK(std::abs(h_little - 20.0) <= 1.0);
    CHECK(std::abs(h_little - h_many) <= 1e-12);
}

TEST_CASE("suite: roughness ordering at the default window") {
    const PaperSuite suite = paper_suite();
    CHECK(ri_of(suite.many2d, 7) > ri_of(suite.little2d, 7));
    CHECK(ri_of(suite.little2d, 7) > ri_of(suite.gt2d, 7));
    CHECK(ri_of(suite.many3d, 7) > ri_of(suite.little3d, 7));
    CHECK(ri_of(suite.little3d, 7) > ri_of(suite.gt3d, 7));
}

TEST_CASE("suite: every mask round-trips through the file format") {
    const PaperSuite suite = paper_suite();
    for (const std::string& name : PaperSuite::names()) {
        const std::string bytes = serialize_mvox(suite.by_name(name));
        CHECK(serialize_mvox(parse_mvox(bytes)) == bytes);
    }
}
