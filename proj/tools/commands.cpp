#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "config_file.hpp"
#include "falsebottom/alias.hpp"
#include "falsebottom/bundle.hpp"
#include "falsebottom/detect.hpp"
#include "falsebottom/ek60.hpp"
#include "falsebottom/numtext.hpp"
#include "falsebottom/render.hpp"
#include "falsebottom/version.hpp"

namespace falsebottom::cli {

namespace {

// Ordered `key = value` report printed to stdout. Numbers go through
// format_number so reports diff cleanly between runs.
class Report {
public:
    explicit Report(const std::string& command) {
        add("command", command);
        add("version", kVersion);
    }

    void add(const std::string& key, const std::string& value) {
        lines_.push_back(key + " = " + value);
    }
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, double value) { add(key, format_number(value)); }
    void add(const std::string& key, std::size_t value) { add(key, std::to_string(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) { add(key, value ? "true" : "false"); }

    void print(std::ostream& out) const {
        for (const auto& line : lines_) out << line << '\n';
    }

private:
    std::vector<std::string> lines_;
};

// ---------------------------------------------------------------- detector

// Detector parameters shared by `detect` and `clean`. The bound values are
// only applied over the config file when the user actually passed the flag,
// so precedence is defaults < config file < command line.
struct DetectorFlags {
    int window_along = 0;
    int window_athwart = 0;
    double t_theta = 0;
    double t_phi = 0;
    std::string t_min;
    int connectivity = 0;
    bool fill_holes = true;
    double token = 0;
    int threads = 1;

    CLI::Option* window_along_opt = nullptr;
    CLI::Option* window_athwart_opt = nullptr;
    CLI::Option* t_theta_opt = nullptr;
    CLI::Option* t_phi_opt = nullptr;
    CLI::Option* t_min_opt = nullptr;
    CLI::Option* connectivity_opt = nullptr;
    CLI::Option* fill_opt = nullptr;
    CLI::Option* token_opt = nullptr;
};

void add_detector_flags(CLI::App& sub, DetectorFlags& f) {
    f.window_along_opt = sub.add_option("--window-along", f.window_along,
                                        "Window side for the along-ship mean square");
    f.window_athwart_opt = sub.add_option("--window-athwart", f.window_athwart,
                                          "Window side for the athwart-ship mean square");
    f.t_theta_opt =
        sub.add_option("--t-theta", f.t_theta, "Along-ship angle threshold, counts^2");
    f.t_phi_opt =
        sub.add_option("--t-phi", f.t_phi, "Athwart-ship angle threshold, counts^2");
    f.t_min_opt = sub.add_option("--t-min", f.t_min,
                                 "Floor for the dynamic Sv threshold in dB, or 'none'");
    f.connectivity_opt =
        sub.add_option("--connectivity", f.connectivity, "Region-growing connectivity, 4 or 8");
    f.fill_opt = sub.add_flag("--fill-holes,!--no-fill-holes", f.fill_holes,
                              "Fill enclosed gaps in the mask");
    f.token_opt =
        sub.add_option("--token", f.token, "Replacement value written by the clean step");
    sub.add_option("--threads", f.threads, "Worker threads")->check(CLI::PositiveNumber);
}

DetectionConfig resolve_detection_config(const std::string& config_path,
                                         const DetectorFlags& f) {
    DetectionConfig cfg;
    if (!config_path.empty()) cfg = load_detection_config(config_path, cfg);
    if (f.window_along_opt->count()) cfg.window_along = f.window_along;
    if (f.window_athwart_opt->count()) cfg.window_athwart = f.window_athwart;
    if (f.t_theta_opt->count()) cfg.t_theta = f.t_theta;
    if (f.t_phi_opt->count()) cfg.t_phi = f.t_phi;
    if (f.t_min_opt->count()) {
        if (f.t_min == "none") {
            cfg.t_min = std::nullopt;
        } else {
            const auto v = parse_number(f.t_min);
            if (!v) {
                throw ParameterError("--t-min needs a number or 'none', got '" + f.t_min + "'");
            }
            cfg.t_min = *v;
        }
    }
    if (f.connectivity_opt->count()) cfg.connectivity = f.connectivity;
    if (f.fill_opt->count()) cfg.fill_holes = f.fill_holes;
    if (f.token_opt->count()) cfg.token = f.token;
    return cfg;
}

void report_detection_config(Report& rep, const DetectionConfig& cfg, int threads) {
    rep.add("window_along", cfg.window_along);
    rep.add("window_athwart", cfg.window_athwart);
    rep.add("t_theta", cfg.t_theta);
    rep.add("t_phi", cfg.t_phi);
    if (cfg.t_min)
        rep.add("t_min", *cfg.t_min);
    else
        rep.add("t_min", "none");
    rep.add("connectivity", cfg.connectivity);
    rep.add("fill_holes", cfg.fill_holes);
    rep.add("token", cfg.token);
    rep.add("threads", threads);
}

// ---------------------------------------------------------------- commands

struct IngestArgs {
    std::string input;
    std::string output;
    ek60::IngestOptions opt;
};

void run_ingest(const IngestArgs& a, Report& rep) {
    ek60::IngestStats stats;
    const GridBundle bundle = ek60::ingest_raw(std::filesystem::path(a.input), a.opt, &stats);
    write_bundle(a.output, bundle);

    rep.add("input", a.input);
    rep.add("output", a.output);
    for (const auto& [tag, count] : stats.datagram_counts) rep.add("datagrams_" + tag, count);
    rep.add("pings", stats.pings_used);
    rep.add("rows", bundle.echogram.rows());
    rep.add("cols", bundle.echogram.cols());
    rep.add("frequency_khz", bundle.echogram.frequency_khz());
    rep.add("range_step_m", bundle.echogram.range_step_m());
    rep.add("ping_interval_s", bundle.echogram.ping_interval_s());
}

struct DetectArgs {
    std::string input;
    std::string mask_out;
    DetectorFlags flags;
};

void run_detect(const DetectArgs& a, const std::string& config_path, Report& rep) {
    const DetectionConfig cfg = resolve_detection_config(config_path, a.flags);
    const GridBundle bundle = read_bundle(a.input);
    const DetectionResult result =
        detect_aliased_seabed(bundle.echogram, bundle.angles, bundle.seabed, cfg,
                              a.flags.threads);
    write_mask_text(a.mask_out, result.mask);

    const MaskStats stats = mask_stats(result.mask);
    rep.add("input", a.input);
    rep.add("rows", bundle.echogram.rows());
    rep.add("cols", bundle.echogram.cols());
    report_detection_config(rep, cfg, a.flags.threads);
    if (result.t_used)
        rep.add("t_used", *result.t_used);
    else
        rep.add("t_used", "none");
    rep.add("marked_cells", stats.count);
    rep.add("marked_fraction", stats.fraction);
    rep.add("mask_out", a.mask_out);
}

struct CleanArgs {
    std::string input;
    std::string output;
    std::string mask_path;
    DetectorFlags flags;
    CLI::Option* mask_opt = nullptr;
};

void run_clean(const CleanArgs& a, const std::string& config_path, Report& rep) {
    const DetectionConfig cfg = resolve_detection_config(config_path, a.flags);
    const GridBundle bundle = read_bundle(a.input);

    Mask mask;
    std::optional<double> t_used;
    const bool from_file = a.mask_opt->count() > 0;
    if (from_file) {
        mask = read_mask_text(a.mask_path);
        require_same_shape(bundle.echogram.rows(), bundle.echogram.cols(), mask.rows(),
                           mask.cols(), "echogram", "mask");
    } else {
        DetectionResult result =
            detect_aliased_seabed(bundle.echogram, bundle.angles, bundle.seabed, cfg,
                                  a.flags.threads);
        mask = std::move(result.mask);
        t_used = result.t_used;
    }

    const GridBundle cleaned{apply_mask(bundle.echogram, mask, cfg.token), bundle.angles,
                             bundle.seabed};
    write_bundle(a.output, cleaned);

    const MaskStats stats = mask_stats(mask);
    rep.add("input", a.input);
    rep.add("output", a.output);
    rep.add("mask", from_file ? a.mask_path : std::string("computed"));
    report_detection_config(rep, cfg, a.flags.threads);
    if (!from_file) {
        if (t_used)
            rep.add("t_used", *t_used);
        else
            rep.add("t_used", "none");
    }
    rep.add("marked_cells", stats.count);
    rep.add("marked_fraction", stats.fraction);
}

struct PredictArgs {
    double alias_range = 0;
    double seabed_depth = 0;
    double ping_interval = 0;
    double sound_speed = 1500.0;
    double logging_range = 0;
    std::vector<int> freqs;
    CLI::Option* alias_opt = nullptr;
    CLI::Option* seabed_opt = nullptr;
};

void run_predict(const PredictArgs& a, Report& rep) {
    AliasGeometry g;
    g.sound_speed_ms = a.sound_speed;
    g.ping_interval_s = a.ping_interval;
    g.logging_range_m = a.logging_range;
    g.validate();

    rep.add("sound_speed_ms", g.sound_speed_ms);
    rep.add("ping_interval_s", g.ping_interval_s);
    rep.add("logging_range_m", g.logging_range_m);
    rep.add("wrap_m", g.wrap_m());

    const bool have_alias = a.alias_opt->count() > 0;
    const bool have_seabed = a.seabed_opt->count() > 0;
    if (have_alias == have_seabed) {
        throw ParameterError("give exactly one of --seabed-depth or --alias-range");
    }

    if (have_seabed) {
        rep.add("seabed_depth_m", a.seabed_depth);
        rep.add("alias_range_m", aliased_range(a.seabed_depth, g));
        return;
    }

    if (a.freqs.empty()) {
        throw ParameterError(
            "--freq is required to invert an alias range; repeat it to cross-check "
            "other frequencies");
    }
    rep.add("alias_range_m", a.alias_range);
    const std::vector<double> candidates =
        candidate_true_depths(a.alias_range, g, a.freqs.front());
    rep.add("candidates", candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const std::string label = "candidate_" + std::to_string(i + 1);
        rep.add(label + "_m", candidates[i]);
        std::string checks;
        for (const int f : a.freqs) {
            if (!checks.empty()) checks += ", ";
            checks += std::to_string(f) + ' ';
            checks += cross_frequency_plausible(candidates[i], f, g) ? "plausible" : "refuting";
        }
        rep.add(label + "_checks", checks);
    }
}

struct RenderArgs {
    std::string input;
    std::string output;
    std::string mask_path;
    std::string colormap = "viridis";
    int scale = 1;
    double sv_min = -90.0;
    double sv_max = -30.0;
    CLI::Option* mask_opt = nullptr;
};

void run_render(const RenderArgs& a, Report& rep) {
    const GridBundle bundle = read_bundle(a.input);
    std::optional<Mask> mask;
    if (a.mask_opt->count() > 0) mask = read_mask_text(a.mask_path);

    RenderOptions opt;
    opt.colormap = a.colormap == "grey" ? Colormap::grey : Colormap::viridis;
    opt.scale = a.scale;
    opt.sv_min = a.sv_min;
    opt.sv_max = a.sv_max;

    const Image img = render_echogram(bundle.echogram, mask ? &*mask : nullptr, opt);
    write_png(a.output, img);

    rep.add("input", a.input);
    rep.add("output", a.output);
    rep.add("width", img.width);
    rep.add("height", img.height);
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Detect and remove aliased seabed echoes in split-beam echo sounder data"};
    app.set_version_flag("--version", std::string("falsebottom ") + kVersion);
    app.require_subcommand(1);

    std::string config_path;
    bool quiet = false;
    app.add_option("--config", config_path,
                   "Detector config file with key = value lines (flags win over it)");
    app.add_flag("--quiet,-q", quiet, "Suppress the report on stdout");

    IngestArgs ia;
    CLI::App* ingest = app.add_subcommand("ingest", "Convert an EK60 RAW file to a grid bundle");
    ingest->add_option("--input", ia.input, "RAW file")->required();
    ingest->add_option("--output", ia.output, "Bundle directory to create")->required();
    ingest->add_option("--frequency", ia.opt.frequency_khz,
                       "Channel to keep, by nominal frequency in kHz");
    ingest->add_option("--channel", ia.opt.channel, "Channel to keep, 1-based ordinal");
    ingest->add_flag("--swap-angle-bytes", ia.opt.swap_angle_bytes,
                     "Treat the low angle byte as along-ship instead of athwart-ship");
    ingest->add_option("--gain", ia.opt.gain_db, "Override gain, dB");
    ingest->add_option("--beam-angle", ia.opt.equivalent_beam_angle_db,
                       "Override equivalent beam angle, dB re 1 sr");
    ingest->add_option("--sa-correction", ia.opt.sa_correction_db, "Override Sa correction, dB");
    ingest->add_option("--power", ia.opt.transmit_power_w, "Override transmit power, W");
    ingest->add_option("--pulse", ia.opt.pulse_duration_s, "Override pulse duration, s");
    ingest->add_option("--absorption", ia.opt.absorption_db_m, "Override absorption, dB/m");
    ingest->add_option("--sound-speed", ia.opt.sound_speed_ms, "Override sound speed, m/s");

    DetectArgs da;
    CLI::App* detect = app.add_subcommand("detect", "Mask aliased seabed cells in a bundle");
    detect->add_option("--input", da.input, "Bundle directory")->required();
    detect->add_option("--mask-out", da.mask_out, "Mask file to write")->required();
    add_detector_flags(*detect, da.flags);

    CleanArgs ca;
    CLI::App* clean = app.add_subcommand("clean", "Replace masked cells and write a new bundle");
    clean->add_option("--input", ca.input, "Bundle directory")->required();
    clean->add_option("--output", ca.output, "Bundle directory to create")->required();
    ca.mask_opt = clean->add_option("--mask", ca.mask_path,
                                    "Mask file; when absent the detector runs first");
    add_detector_flags(*clean, ca.flags);

    PredictArgs pa;
    CLI::App* predict =
        app.add_subcommand("predict", "Alias-range arithmetic for a suspected false bottom");
    pa.seabed_opt = predict->add_option("--seabed-depth", pa.seabed_depth,
                                        "True seabed range, m: report its apparent alias");
    pa.alias_opt = predict->add_option(
        "--alias-range", pa.alias_range,
        "Apparent range of a suspected alias, m: report candidate true depths");
    pa.alias_opt->excludes(pa.seabed_opt);
    predict->add_option("--ping-interval", pa.ping_interval, "Ping interval, s")->required();
    predict->add_option("--sound-speed", pa.sound_speed, "Sound speed, m/s");
    predict->add_option("--logging-range", pa.logging_range, "Logging range, m")->required();
    predict->add_option("--freq", pa.freqs,
                        "Frequency to check, kHz; repeat to cross-check several");

    RenderArgs ra;
    CLI::App* render = app.add_subcommand("render", "Write a PNG echogram image");
    render->add_option("--input", ra.input, "Bundle directory")->required();
    render->add_option("--output", ra.output, "PNG file to write")->required();
    ra.mask_opt = render->add_option("--mask", ra.mask_path, "Mask file to overlay");
    render->add_option("--colormap", ra.colormap, "Color ramp")
        ->check(CLI::IsMember({"viridis", "grey"}));
    render->add_option("--scale", ra.scale, "Pixels per cell")->check(CLI::PositiveNumber);
    render->add_option("--sv-min", ra.sv_min, "Sv mapped to the bottom of the ramp, dB");
    render->add_option("--sv-max", ra.sv_max, "Sv mapped to the top of the ramp, dB");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help/version or the parse error
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        std::optional<Report> rep;
        if (app.got_subcommand(ingest)) {
            rep.emplace("ingest");
            run_ingest(ia, *rep);
        } else if (app.got_subcommand(detect)) {
            rep.emplace("detect");
            run_detect(da, config_path, *rep);
        } else if (app.got_subcommand(clean)) {
            rep.emplace("clean");
            run_clean(ca, config_path, *rep);
        } else if (app.got_subcommand(predict)) {
            rep.emplace("predict");
            run_predict(pa, *rep);
        } else {
            rep.emplace("render");
            run_render(ra, *rep);
        }

        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rep->add("duration_s", seconds);
        if (!quiet) rep->print(std::cout);
        return 0;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << " at offset " << e.offset() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace falsebottom::cli
