// rugosity: evaluate binary segmentation masks (overlap, boundary and
// roughness metrics), smooth irregular surfaces, and generate synthetic
// test shapes in the MVOX format.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rugosity/boundary_metrics.hpp"
#include "rugosity/mask_core.hpp"
#include "rugosity/region_metrics.hpp"
#include "rugosity/report.hpp"
#include "rugosity/roughness.hpp"
#include "rugosity/roughness_distance.hpp"
#include "rugosity/smoothing.hpp"
#include "rugosity/synth.hpp"
#include "rugosity/version.hpp"

namespace {

using namespace rugosity;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitShape = 3;
constexpr int kExitDegenerate = 4;

struct CommonOpts {
    int window = 0;  // 0 means "derive from grid size"
    double kappa = 0.0;
    double kappa_c = 0.0;
    int radius = 1;
    std::string format = "csv";
    bool strict = false;
    std::string out_path;
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + out_path + "' for writing");
    out << text;
    if (!out) throw IoError("write failure on '" + out_path + "'");
}

std::string dims_string(const GridDims& dims) {
    std::string s = std::to_string(dims.extent[0]);
    for (int a = 1; a < dims.ndim; ++a) s += "x" + std::to_string(dims.extent[a]);
    return s;
}

// Adds a metric unless it is undefined for the inputs; with --strict an
// undefined metric aborts the run instead.
void add_guarded(MetricReport& report, const std::string& name, bool strict,
                 const std::function<double()>& compute) {
    try {
        report.add_metric(name, compute());
    } catch (const UndefinedMetricError& e) {
        if (strict) throw;
        std::cerr << "warning: " << name << " skipped: " << e.what() << "\n";
    } catch (const EmptySurfaceError& e) {
        if (strict) throw;
        std::cerr << "warning: " << name << " skipped: " << e.what() << "\n";
    }
}

int window_for(const CommonOpts& opts, const GridDims& dims) {
    if (opts.window > 0) {
        validate_window(WindowSpec{opts.window}, dims);
        return opts.window;
    }
    return default_window(dims).w;
}

void add_common_parameters(MetricReport& report, const GridDims& dims, const CommonOpts& opts,
                           int window) {
    report.tool_version = kVersion;
    report.add_parameter("ndim", dims.ndim);
    report.add_parameter("dims", dims_string(dims));
    report.add_parameter("window", window);
    report.add_parameter("kappa", opts.kappa);
    report.add_parameter("kappa_c", opts.kappa_c);
    report.add_parameter("radius", opts.radius);
}

int cmd_metrics(const std::string& pred_path, const std::string& gt_path, const CommonOpts& opts) {
    const VoxelMask pred = load_mvox(pred_path);
    const VoxelMask gt = load_mvox(gt_path);
    if (pred.dims != gt.dims) throw ShapeError("pred and gt dims differ");

    const int window = window_for(opts, pred.dims);
    MetricReport report;
    add_common_parameters(report, pred.dims, opts, window);

    const OverlapCounts counts = overlap_counts(pred, gt);
    add_guarded(report, "dsc", opts.strict, [&] { return dsc(counts); });
    add_guarded(report, "svd", opts.strict, [&] { return svd(counts); });
    add_guarded(report, "jsc", opts.strict, [&] { return jsc(counts); });
    add_guarded(report, "precision", opts.strict, [&] { return precision(counts); });
    add_guarded(report, "recall", opts.strict, [&] { return recall(counts); });
    add_guarded(report, "specificity", opts.strict, [&] { return specificity(counts); });
    add_guarded(report, "rvd", opts.strict, [&] { return rvd(counts); });

    const SurfaceMask sp = extract_surface(pred);
    const SurfaceMask sg = extract_surface(gt);

    std::optional<SurfaceDistanceStats> dist;
    add_guarded(report, "hdd", opts.strict, [&] {
        dist = surface_distance_stats(sp, sg);
        return dist->hausdorff;
    });
    add_guarded(report, "assd", opts.strict, [&] {
        if (!dist) dist = surface_distance_stats(sp, sg);
        return dist->assd;
    });

    std::optional<double> ri_pred, ri_gt;
    add_guarded(report, "ri_pred", opts.strict, [&] {
        ri_pred = roughness_index(sp, centroid(sp), WindowSpec{window}).ri;
        return *ri_pred;
    });
    add_guarded(report, "ri_gt", opts.strict, [&] {
        ri_gt = roughness_index(sg, centroid(sg), WindowSpec{window}).ri;
        return *ri_gt;
    });
    if (ri_pred && ri_gt) {
        report.add_metric("ri_absolute", absolute_ri(*ri_pred, *ri_gt));
        add_guarded(report, "rr", opts.strict, [&] { return roughness_ratio(*ri_pred, *ri_gt); });
    }

    add_guarded(report, "ard_grid", opts.strict, [&] {
        return ard(roughness_distance_field(sp, sg));
    });
    add_guarded(report, "ard_union", opts.strict, [&] {
        return ard_surface_union(roughness_distance_field(sp, sg), sp, sg);
    });

    add_guarded(report, "flagged_roughness", opts.strict, [&] {
        const Centroid c0 = centroid(sp);
        const DistanceField zm = distance_field(sp, c0);
        const RoughnessField rough = roughness_field(zm, sp, NeighborhoodSpec{opts.radius});
        return static_cast<double>(detect_irregularities(rough, opts.kappa).count());
    });
    add_guarded(report, "flagged_reference", opts.strict, [&] {
        const RoughnessDistanceField f = roughness_distance_field(sp, sg);
        return static_cast<double>(detect_vs_reference(f, opts.kappa_c).count());
    });

    write_output(opts.format == "json" ? report.to_json() : report.to_csv(), opts.out_path);
    return kExitOk;
}

int cmd_sweep(const std::string& pred_path, const std::string& gt_path, int w_min, int w_max,
              const CommonOpts& opts) {
    const VoxelMask pred = load_mvox(pred_path);
    const VoxelMask gt = load_mvox(gt_path);
    if (pred.dims != gt.dims) throw ShapeError("pred and gt dims differ");
    if (w_min < 1 || w_min > w_max || w_max > pred.dims.min_extent()) {
        throw ValueError("window range must satisfy 1 <= w_min <= w_max <= min extent");
    }

    const SurfaceMask sp = extract_surface(pred);
    const SurfaceMask sg = extract_surface(gt);
    if (sp.voxel_count_on_surface() == 0 || sg.voxel_count_on_surface() == 0) {
        if (opts.strict) throw EmptySurfaceError("sweep needs non-empty surfaces");
        std::cerr << "warning: empty surface, emitting header only\n";
        write_output("window,ri_gt,ri_pred,rr\n", opts.out_path);
        return kExitOk;
    }
    const Centroid cp = centroid(sp);
    const Centroid cg = centroid(sg);

    std::ostringstream rows;
    rows << "window,ri_gt,ri_pred,rr\n";
    for (int w = w_min; w <= w_max; ++w) {
        const double rg = roughness_index(sg, cg, WindowSpec{w}).ri;
        const double rp = roughness_index(sp, cp, WindowSpec{w}).ri;
        std::string rr_text;
        try {
            rr_text = format_value(roughness_ratio(rp, rg));
        } catch (const UndefinedMetricError&) {
            if (opts.strict) throw;
            std::cerr << "warning: rr undefined at window " << w << "\n";
        }
        rows << w << "," << format_value(rg) << "," << format_value(rp) << "," << rr_text << "\n";
    }
    write_output(rows.str(), opts.out_path);
    return kExitOk;
}

int cmd_smooth(const std::string& in_path, const std::string& mask_out_path,
               const std::string& gt_path, int max_iters, const CommonOpts& opts) {
    const VoxelMask input = load_mvox(in_path);
    std::optional<VoxelMask> gt;
    if (!gt_path.empty()) {
        gt = load_mvox(gt_path);
        if (gt->dims != input.dims) throw ShapeError("input and gt dims differ");
    }

    const int window = window_for(opts, input.dims);
    MetricReport report;
    add_common_parameters(report, input.dims, opts, window);
    report.add_parameter("max_iters", max_iters);
    report.add_parameter("route", gt ? "reference" : "roughness");

    const SurfaceMask surf_before = extract_surface(input);
    std::optional<double> ri_before;
    add_guarded(report, "ri_before", opts.strict, [&] {
        ri_before = roughness_index(surf_before, centroid(surf_before), WindowSpec{window}).ri;
        return *ri_before;
    });

    const SmoothResult result =
        gt ? smooth_iterative_vs_reference(input, *gt, opts.kappa_c, max_iters)
           : smooth_iterative(input, opts.kappa, max_iters, NeighborhoodSpec{opts.radius});

    save_mvox(mask_out_path, result.mask);

    const SurfaceMask surf_after = extract_surface(result.mask);
    std::optional<double> ri_after;
    add_guarded(report, "ri_after", opts.strict, [&] {
        ri_after = roughness_index(surf_after, centroid(surf_after), WindowSpec{window}).ri;
        return *ri_after;
    });
    if (ri_before && ri_after) {
        report.add_metric("ri_change", *ri_after - *ri_before);
    }
    report.add_metric("iterations", result.iterations);
    report.add_metric("converged", result.converged ? 1.0 : 0.0);
    report.add_metric("foreground_before", static_cast<double>(input.foreground_count()));
    report.add_metric("foreground_after", static_cast<double>(result.mask.foreground_count()));

    write_output(opts.format == "json" ? report.to_json() : report.to_csv(), opts.out_path);
    return kExitOk;
}

synth::Perturbation parse_perturbation(const std::string& text, synth::PerturbKind kind) {
    synth::Perturbation p;
    p.kind = kind;
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.empty() || parts.size() > 5) {
        throw ValueError("perturbation must be LEN[:WIDTH[:reg|irreg[:AZIMUTH[:POLAR]]]]");
    }
    try {
        p.length = std::stod(parts[0]);
        if (parts.size() > 1) p.width = std::stoi(parts[1]);
        if (parts.size() > 2) {
            if (parts[2] == "reg" || parts[2] == "regular") {
                p.regularity = synth::Regularity::Regular;
            } else if (parts[2] == "irreg" || parts[2] == "irregular") {
                p.regularity = synth::Regularity::Irregular;
            } else {
                throw ValueError("perturbation regularity must be reg or irreg");
            }
        }
        if (parts.size() > 3) p.azimuth_deg = std::stod(parts[3]);
        if (parts.size() > 4) p.polar_deg = std::stod(parts[4]);
    } catch (const std::invalid_argument&) {
        throw ValueError("bad number in perturbation '" + text + "'");
    } catch (const std::out_of_range&) {
        throw ValueError("number out of range in perturbation '" + text + "'");
    }
    return p;
}

struct SynthOpts {
    std::string out_path;
    std::string suite_dir;
    std::string kind = "disk";
    int extent = 100;
    double radius = 25.0;
    std::uint64_t seed = 0;
    int star_points = 5;
    double star_inner = 0.55;
    double star_rotation = 90.0;
    std::vector<std::string> spikes;
    std::vector<std::string> holes;
};

int cmd_synth(const SynthOpts& so) {
    if (!so.suite_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(so.suite_dir, ec);
        if (ec) throw IoError("cannot create directory '" + so.suite_dir + "'");
        const synth::PaperSuite suite = synth::paper_suite();
        for (const std::string& name : synth::PaperSuite::names()) {
            const std::filesystem::path path = std::filesystem::path(so.suite_dir) / (name + ".mvox");
            save_mvox(path.string(), suite.by_name(name));
        }
        return kExitOk;
    }
    if (so.out_path.empty()) {
        throw ValueError("synth needs an output path or --paper-suite DIR");
    }

    synth::ShapeSpec spec;
    if (so.kind == "disk") spec.kind = synth::ShapeKind::Disk;
    else if (so.kind == "ball") spec.kind = synth::ShapeKind::Ball;
    else if (so.kind == "star") spec.kind = synth::ShapeKind::Star;
    else throw ValueError("kind must be disk, ball or star");
    spec.extent = so.extent;
    spec.radius = so.radius;
    spec.seed = so.seed;
    spec.star_points = so.star_points;
    spec.star_inner_ratio = so.star_inner;
    spec.star_rotation_deg = so.star_rotation;
    for (const std::string& s : so.spikes) {
        spec.perturbations.push_back(parse_perturbation(s, synth::PerturbKind::Spike));
    }
    for (const std::string& h : so.holes) {
        spec.perturbations.push_back(parse_perturbation(h, synth::PerturbKind::Hole));
    }

    save_mvox(so.out_path, synth::generate(spec));
    return kExitOk;
}

void add_common_flags(CLI::App* cmd, CommonOpts& opts, bool with_window = true) {
    if (with_window) {
        cmd->add_option("--window", opts.window, "Roughness window edge length (default: 7% of the smallest extent)");
    }
    cmd->add_option("--kappa", opts.kappa, "Roughness flag threshold");
    cmd->add_option("--kappa-c", opts.kappa_c, "Reference-route flag threshold");
    cmd->add_option("--radius", opts.radius, "Roughness neighborhood radius")->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--strict", opts.strict, "Fail on degenerate metrics instead of skipping them");
    cmd->add_option("--out", opts.out_path, "Write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Segmentation mask evaluation with surface roughness metrics"};
    app.require_subcommand(1);

    std::string pred_path, gt_path, in_path, mask_out, smooth_gt;
    int w_min = 3, w_max = 10, max_iters = 50;
    CommonOpts metrics_opts, sweep_opts, smooth_opts;
    SynthOpts synth_opts;

    CLI::App* metrics = app.add_subcommand("metrics", "Full metric report for a mask pair");
    metrics->add_option("pred", pred_path, "Predicted mask (MVOX)")->required();
    metrics->add_option("gt", gt_path, "Ground-truth mask (MVOX)")->required();
    add_common_flags(metrics, metrics_opts);

    CLI::App* sweep = app.add_subcommand("sweep", "Roughness index across a window range");
    sweep->add_option("pred", pred_path, "Predicted mask (MVOX)")->required();
    sweep->add_option("gt", gt_path, "Ground-truth mask (MVOX)")->required();
    sweep->add_option("w_min", w_min, "Smallest window")->required();
    sweep->add_option("w_max", w_max, "Largest window")->required();
    add_common_flags(sweep, sweep_opts, false);

    CLI::App* smooth = app.add_subcommand("smooth", "Remove irregular spikes and fill holes");
    smooth->add_option("input", in_path, "Input mask (MVOX)")->required();
    smooth->add_option("output", mask_out, "Smoothed mask destination (MVOX)")->required();
    smooth->add_option("--gt", smooth_gt, "Reference mask; switches to the reference route");
    smooth->add_option("--max-iters", max_iters, "Iteration cap")->check(CLI::PositiveNumber);
    add_common_flags(smooth, smooth_opts);

    CLI::App* synth_cmd = app.add_subcommand("synth", "Generate synthetic shapes");
    synth_cmd->add_option("output", synth_opts.out_path, "Destination (MVOX)");
    synth_cmd->add_option("--paper-suite", synth_opts.suite_dir,
                          "Write the six standard suite masks into a directory");
    synth_cmd->add_option("--kind", synth_opts.kind, "disk, ball or star");
    synth_cmd->add_option("--extent", synth_opts.extent, "Grid edge length");
    synth_cmd->add_option("--radius", synth_opts.radius, "Shape radius");
    synth_cmd->add_option("--seed", synth_opts.seed, "Generator seed");
    synth_cmd->add_option("--star-points", synth_opts.star_points, "Star point count");
    synth_cmd->add_option("--star-inner", synth_opts.star_inner, "Star inner/outer radius ratio");
    synth_cmd->add_option("--star-rotation", synth_opts.star_rotation, "Star rotation in degrees");
    synth_cmd->add_option("--spike", synth_opts.spikes,
                          "Spike LEN[:WIDTH[:reg|irreg[:AZIMUTH[:POLAR]]]] (repeatable)");
    synth_cmd->add_option("--hole", synth_opts.holes, "Hole, same format as --spike (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (metrics->parsed()) return cmd_metrics(pred_path, gt_path, metrics_opts);
        if (sweep->parsed()) return cmd_sweep(pred_path, gt_path, w_min, w_max, sweep_opts);
        if (smooth->parsed()) return cmd_smooth(in_path, mask_out, smooth_gt, max_iters, smooth_opts);
        if (synth_cmd->parsed()) return cmd_synth(synth_opts);
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitShape;
    } catch (const UndefinedMetricError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const EmptySurfaceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
