#include "commands.hpp"

#include "probfrac/csv.hpp"
#include "probfrac/dataset.hpp"
#include "probfrac/descriptor.hpp"
#include "probfrac/error.hpp"
#include "probfrac/estimator.hpp"
#include "probfrac/evaluate.hpp"
#include "probfrac/synth.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <ostream>

namespace fs = std::filesystem;

namespace probfrac::cli {

namespace {

struct DescriptorFlags {
    double alpha = kDefaultAlpha;
    double a0 = 0.1;
    int t_keep = 8;
    std::string variant = "grid";
    std::string scales = "auto";
};

void add_estimator_flags(CLI::App* cmd, DescriptorFlags& f) {
    cmd->add_option("--alpha", f.alpha, "exponent of the generalized probability sum")
        ->capture_default_str();
    cmd->add_option("--variant", f.variant, "cell placement: grid or gliding")->capture_default_str();
    cmd->add_option("--scales", f.scales, "cell sizes: auto, A..B, A..max or a comma list")
        ->capture_default_str();
}

void add_descriptor_flags(CLI::App* cmd, DescriptorFlags& f) {
    add_estimator_flags(cmd, f);
    cmd->add_option("--a0", f.a0, "Gaussian smoothing width in ln(delta) units")->capture_default_str();
    cmd->add_option("--t-keep", f.t_keep, "number of leading smoothed points kept")
        ->capture_default_str();
}

DescriptorConfig to_config(const DescriptorFlags& f) {
    DescriptorConfig cfg;
    cfg.alpha = f.alpha;
    cfg.a0 = f.a0;
    cfg.t_keep = f.t_keep;
    cfg.variant = parse_variant(f.variant);
    cfg.scales = ScalePolicy::parse(f.scales);
    cfg.validate();
    return cfg;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
    } else {
        write_file_atomic(path, content);
    }
}

struct DimArgs {
    std::string image;
    DescriptorFlags flags;
    std::string out;
};

int cmd_dim(const DimArgs& a, std::ostream& out) {
    const GrayImage img = load_image(a.image);
    const Variant variant = parse_variant(a.flags.variant);
    const ScaleSet scales = ScalePolicy::parse(a.flags.scales).resolve(img.width(), img.height());
    const LogLogCurve curve = loglog_curve(img, scales, a.flags.alpha, variant);
    const double d = fit_dimension(curve);
    emit(a.out, curve_csv(curve), out);
    char line[64];
    std::snprintf(line, sizeof(line), "D = %.12f\n", d);
    out << line;
    return kExitOk;
}

struct ExtractArgs {
    std::string input;
    DescriptorFlags flags;
    int threads = 0;
    std::string out;
    bool quiet = false;
};

int cmd_extract(const ExtractArgs& a, std::ostream& out, std::ostream& err) {
    const DescriptorConfig cfg = to_config(a.flags);
    std::error_code ec;
    if (fs::is_directory(a.input, ec)) {
        const DatasetManifest manifest = scan_dataset(a.input, 1);
        ProgressFn progress;
        if (!a.quiet) {
            progress = [&err](std::size_t done, std::size_t total) {
                if (done % 25 == 0 || done == total) err << "extracted " << done << "/" << total << "\n";
            };
        }
        const auto descriptors = extract_all(manifest, cfg, a.threads, progress);
        std::vector<std::string> labels;
        for (const auto& s : manifest.samples) labels.push_back(manifest.classes[static_cast<std::size_t>(s.label)]);
        emit(a.out, descriptor_csv(descriptors, labels), out);
    } else {
        const GrayImage img = load_image(a.input);
        const std::vector<DescriptorVector> one{extract_descriptors(img, cfg, fs::path(a.input).generic_string())};
        emit(a.out, descriptor_csv(one), out);
    }
    return kExitOk;
}

struct EvalArgs {
    std::string root;
    DescriptorFlags flags;
    int k = 5;
    std::uint64_t seed = 42;
    std::string classifier = "linear-svm";
    std::size_t pca_components = 0;  // 0: all
    bool pca_global = false;
    bool sweep = false;
    int threads = 0;
    std::string out_dir = ".";
    bool quiet = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
    const DescriptorConfig cfg = to_config(a.flags);
    EvalOptions opt;
    opt.k = a.k;
    opt.seed = a.seed;
    opt.classifier = parse_classifier(a.classifier);
    if (a.pca_components > 0) opt.n_components = a.pca_components;
    opt.pca_global = a.pca_global;
    opt.threads = a.threads;
    if (a.k < 2) throw ConfigError("--k must be at least 2");

    const DatasetManifest manifest = scan_dataset(a.root, static_cast<std::size_t>(a.k));
    ProgressFn progress;
    if (!a.quiet) {
        progress = [&err](std::size_t done, std::size_t total) {
            if (done % 25 == 0 || done == total) err << "extracted " << done << "/" << total << "\n";
        };
    }
    const auto descriptors = extract_all(manifest, cfg, a.threads, progress);
    const auto labels = manifest.labels();
    const FeatureMatrix x = to_features(descriptors, labels);
    EvalReport report = evaluate_features(x, opt, manifest.classes);
    report.descriptor = cfg;

    std::error_code ec;
    fs::create_directories(a.out_dir, ec);
    if (ec) throw LoadError(a.out_dir + ": cannot create directory: " + ec.message());
    const fs::path dir(a.out_dir);
    std::vector<std::string> names;
    for (const int l : labels) names.push_back(manifest.classes[static_cast<std::size_t>(l)]);
    write_file_atomic(dir / "descriptors.csv", descriptor_csv(descriptors, names));
    write_file_atomic(dir / "folds.csv", folds_csv(report));
    write_file_atomic(dir / "confusion.csv", confusion_csv(report));
    write_file_atomic(dir / "assignments.csv", assignments_csv(report, descriptors, labels));
    if (a.sweep) write_file_atomic(dir / "sweep.csv", sweep_csv(sweep_components(x, opt)));

    if (!a.quiet) {
        err << "variant=" << to_string(cfg.variant) << " alpha=" << format_double(cfg.alpha)
            << " a0=" << format_double(cfg.a0) << " t_keep=" << cfg.t_keep
            << " classifier=" << to_string(opt.classifier) << " pca=" << report.n_components
            << (opt.pca_global ? " (global)" : " (per fold)") << "\n";
    }
    out << summary_line(report) << "\n";
    return kExitOk;
}

struct SynthArgs {
    std::string kind;
    int count = 0;
    int size = 0;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    SynthParams params;
};

int cmd_synth(const SynthArgs& a, std::ostream& out) {
    const SynthKind kind = parse_synth_kind(a.kind);
    const auto files = write_synthetic(kind, a.count, a.size, a.seed, a.out_dir, a.params);
    out << "wrote " << files.size() << " images to " << a.out_dir << "\n";
    return kExitOk;
}

struct ManifestArgs {
    std::string root;
    int k = 5;
    std::string out;
};

int cmd_manifest(const ManifestArgs& a, std::ostream& out) {
    emit(a.out, manifest_csv(scan_dataset(a.root, static_cast<std::size_t>(a.k))), out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Probability-dimension fractal descriptors for gray-level textures", "probfrac"};
    app.require_subcommand(1);

    DimArgs dim;
    auto* dim_cmd = app.add_subcommand("dim", "Fit the probability dimension of one image");
    dim_cmd->add_option("image", dim.image, "PGM or PNG image")->required();
    add_estimator_flags(dim_cmd, dim.flags);
    dim_cmd->add_option("--out", dim.out, "write the curve CSV here instead of stdout");

    ExtractArgs ex;
    auto* ex_cmd = app.add_subcommand("extract", "Descriptor CSV for an image or a dataset");
    ex_cmd->add_option("input", ex.input, "image file or directory-per-class dataset")->required();
    add_descriptor_flags(ex_cmd, ex.flags);
    ex_cmd->add_option("--threads", ex.threads, "extraction threads (0: OpenMP default)");
    ex_cmd->add_option("--out", ex.out, "output CSV (default stdout)");
    ex_cmd->add_flag("--quiet", ex.quiet, "no progress on stderr");

    EvalArgs ev;
    auto* ev_cmd = app.add_subcommand("eval", "Stratified k-fold classification of a dataset");
    ev_cmd->add_option("root", ev.root, "directory-per-class dataset")->required();
    add_descriptor_flags(ev_cmd, ev.flags);
    ev_cmd->add_option("--k", ev.k, "number of folds")->capture_default_str();
    ev_cmd->add_option("--seed", ev.seed, "fold shuffling seed")->capture_default_str();
    ev_cmd->add_option("--classifier", ev.classifier, "linear-svm, nearest-mean or knn1")
        ->capture_default_str();
    ev_cmd->add_option("--pca-components", ev.pca_components, "PCA output size (default: all)");
    ev_cmd->add_flag("--pca-global", ev.pca_global, "fit PCA on all samples instead of per fold");
    ev_cmd->add_flag("--sweep-components", ev.sweep, "also write sweep.csv over PCA sizes");
    ev_cmd->add_option("--threads", ev.threads, "extraction/fold threads (0: OpenMP default)");
    ev_cmd->add_option("--out-dir", ev.out_dir, "directory for the CSV reports")->capture_default_str();
    ev_cmd->add_flag("--quiet", ev.quiet, "no progress on stderr");

    SynthArgs sy;
    auto* sy_cmd = app.add_subcommand("synth", "Write seeded synthetic texture PGMs");
    sy_cmd->add_option("kind", sy.kind, "blur-noise, grating or checkerboard")->required();
    sy_cmd->add_option("count", sy.count, "number of images")->required();
    sy_cmd->add_option("size", sy.size, "side length in pixels")->required();
    sy_cmd->add_option("seed", sy.seed, "random seed")->required();
    sy_cmd->add_option("--out-dir", sy.out_dir, "output directory")->capture_default_str();
    sy_cmd->add_option("--sigma", sy.params.sigma, "blur-noise Gaussian width")->capture_default_str();
    sy_cmd->add_option("--period", sy.params.period, "grating wavelength")->capture_default_str();
    sy_cmd->add_option("--cell", sy.params.cell, "checkerboard square side")->capture_default_str();
    sy_cmd->add_option("--noise", sy.params.noise, "additive noise std (gray levels)")
        ->capture_default_str();

    ManifestArgs mf;
    auto* mf_cmd = app.add_subcommand("manifest", "List a dataset as path,class CSV");
    mf_cmd->add_option("root", mf.root, "directory-per-class dataset")->required();
    mf_cmd->add_option("--k", mf.k, "minimum images per class")->capture_default_str();
    mf_cmd->add_option("--out", mf.out, "output CSV (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (*dim_cmd) return cmd_dim(dim, out);
        if (*ex_cmd) return cmd_extract(ex, out, err);
        if (*ev_cmd) return cmd_eval(ev, out, err);
        if (*sy_cmd) return cmd_synth(sy, out);
        if (*mf_cmd) return cmd_manifest(mf, out);
    } catch (const LoadError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitConfig;
}

}  // namespace probfrac::cli
