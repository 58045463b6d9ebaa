#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "ccorr/cli.hpp"
#include "ccorr/error.hpp"
#include "ccorr/harness.hpp"
#include "ccorr/random.hpp"
#include "ccorr/theory.hpp"
#include "json.hpp"

namespace ccorr::cli {

namespace {

struct Options {
    std::string model = "ar1";
    std::vector<double> a;
    double coupling = 1.0;
    std::vector<double> alpha;
    std::vector<double> c4;
    std::vector<double> f_bits;
    std::string lags;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t replicates = 0;
    std::string scheme = "gaussian";
    std::vector<std::string> estimators;
    std::uint64_t seed = 1;
    std::string out;
    unsigned threads = 0;
    std::size_t blocks = 6;
    std::string format = "csv";
    std::string input;
    std::string input_y;
    bool fixed_scheme = false;
    bool fresh_scheme_per_lag = false;
};

using Body = std::function<void(const Options&, RunRecorder&)>;

struct Command {
    std::string name;
    std::string help;
    std::function<void(CLI::App&, Options&)> setup;
    Body body;
};

// Option helpers. Defaults are set on Options before registration so that
// the help text shows them.
void add_common(CLI::App& app, Options& o) {
    app.add_option("--out", o.out, "Output directory")->required();
    app.add_option("--seed", o.seed, "Master seed")->capture_default_str();
    app.add_option("--threads", o.threads, "Worker threads (0 = all cores); never changes results")
        ->capture_default_str();
    app.set_config("--config", "", "Flat key = value file; flags override it");
}

void add_list(CLI::App& app, const std::string& name, std::vector<double>& v, const std::string& help) {
    app.add_option(name, v, help)->delimiter(',')->capture_default_str();
}

void add_lags(CLI::App& app, Options& o, std::string fallback) {
    o.lags = std::move(fallback);
    app.add_option("--lags", o.lags, "Lags as a..b or a comma list")->capture_default_str();
}

void add_model(CLI::App& app, Options& o) {
    app.add_option("--model", o.model, "Signal model (ar1)")->capture_default_str();
    app.add_option("--coupling", o.coupling, "Cross-channel coupling c; y = c x + sqrt(1-c^2) x'")
        ->capture_default_str();
}

void add_scheme(CLI::App& app, Options& o, std::string fallback) {
    o.scheme = std::move(fallback);
    app.add_option("--scheme", o.scheme,
                   "gaussian|bernoulli|ternary-half|ternary-hash|with-repl|without-repl")
        ->capture_default_str();
}

void add_estimators(CLI::App& app, Options& o, std::vector<std::string> fallback) {
    o.estimators = std::move(fallback);
    app.add_option("--estimators", o.estimators, "Comma list of estimator names")
        ->delimiter(',')
        ->capture_default_str();
}

void require_model(const Options& o) {
    if (o.model != "ar1") throw UnsupportedError("unknown model '" + o.model + "' (supported: ar1)");
}

double single(const std::vector<double>& v, const char* name) {
    if (v.size() != 1) throw DomainError(std::string("--") + name + " takes exactly one value here");
    return v.front();
}

ProjectionKind scheme_of(const Options& o) {
    const auto kind = parse_projection_kind(o.scheme);
    if (!kind) throw DomainError("unknown scheme '" + o.scheme + "'");
    return *kind;
}

std::vector<EstimatorKind> estimators_of(const Options& o) {
    if (o.estimators.empty()) throw DomainError("no estimators given");
    std::vector<EstimatorKind> kinds;
    for (const auto& name : o.estimators) {
        const auto kind = parse_estimator_kind(name);
        if (!kind) throw DomainError("unknown estimator '" + name + "'");
        kinds.push_back(*kind);
    }
    return kinds;
}

SignalFormat format_of(const Options& o) {
    const auto f = parse_signal_format(o.format);
    if (!f) throw DomainError("unknown format '" + o.format + "' (csv|f64)");
    return *f;
}

std::string_view scheme_column(EstimatorKind kind, ProjectionKind scheme) {
    switch (kind) {
        case EstimatorKind::Compressed:
        case EstimatorKind::QuantizedCompressed:
        case EstimatorKind::QuantizedCompressedCorrected:
            return to_string(scheme);
        case EstimatorKind::Subsampled:
        case EstimatorKind::QuantizedSubsampled:
        case EstimatorKind::QuantizedSubsampledCorrected:
            return to_string(ProjectionKind::SubsampleWithoutReplacement);
        default:
            return "none";
    }
}

std::optional<double> theory_variance(const CorrelationModel& model, EstimatorKind kind,
                                      ProjectionKind scheme, std::size_t n, std::size_t m,
                                      std::int64_t tau) {
    switch (kind) {
        case EstimatorKind::Plain: return theory::var_cN_finite(model, n, tau);
        case EstimatorKind::PlainShort: return theory::var_cN_finite(model, m, tau);
        case EstimatorKind::Compressed: return theory::var_compressed(model, n, m, scheme, tau);
        case EstimatorKind::Subsampled: return theory::var_subsampled(model, n, m, tau);
        default: return std::nullopt;
    }
}

// ---------------------------------------------------------------- theory

void setup_theory(CLI::App& app, Options& o) {
    add_model(app, o);
    o.a = {0.7};
    o.alpha = {10.0};
    o.c4 = {0.0};
    add_list(app, "--a", o.a, "AR(1) coefficients");
    add_list(app, "--alpha", o.alpha, "Compression rates N/M (> 1)");
    add_list(app, "--c4", o.c4, "Normalized fourth cumulant of the projection entries");
    add_lags(app, o, "0..19");
    app.add_option("--N", o.n, "Also emit finite-size variances for this window length");
    add_scheme(app, o, "gaussian");
}

void run_theory(const Options& o, RunRecorder& rec) {
    require_model(o);
    const auto lags = parse_lags(o.lags);
    for (double alpha : o.alpha) {
        if (!(alpha > 1.0)) throw DomainError("--alpha must be > 1 (got " + format_double(alpha) + ")");
    }
    CsvTable table({"a", "tau", "alpha", "c4", "v", "lim_var_cN", "lim_var_cM", "lim_var_CN",
                    "lim_var_sub", "delta_CN_cM"});
    for (double a : o.a) {
        const CorrelationModel model = Ar1Model(a, o.coupling).correlation();
        for (double alpha : o.alpha) {
            for (double c4 : o.c4) {
                for (std::int64_t tau : lags) {
                    const auto r = theory::asymptotics(model, tau, alpha, c4);
                    table.cell(a).cell(tau).cell(alpha).cell(c4).cell(r.v).cell(r.lim_var_cN)
                        .cell(r.lim_var_cM).cell(r.lim_var_CN).cell(r.lim_var_subsampled)
                        .cell(r.delta_CN_cM);
                    table.end_row();
                }
            }
        }
    }
    rec.write("theory.csv", table.text());

    if (o.n == 0) return;
    const ProjectionKind scheme = scheme_of(o);
    CsvTable finite({"a", "tau", "alpha", "N", "M", "scheme", "var_cN", "var_cM", "var_CN", "var_sub"});
    for (double a : o.a) {
        const CorrelationModel model = Ar1Model(a, o.coupling).correlation();
        for (double alpha : o.alpha) {
            const std::size_t m = compressed_dim(o.n, alpha);
            for (std::int64_t tau : lags) {
                finite.cell(a).cell(tau).cell(alpha).cell(o.n).cell(m).cell(to_string(scheme))
                    .cell(theory::var_cN_finite(model, o.n, tau))
                    .cell(theory::var_cN_finite(model, m, tau))
                    .cell(theory::var_compressed(model, o.n, m, scheme, tau))
                    .cell(theory::var_subsampled(model, o.n, m, tau));
                finite.end_row();
            }
        }
    }
    rec.write("theory_finite.csv", finite.text());
}

// -------------------------------------------------------------- simulate

void setup_simulate(CLI::App& app, Options& o) {
    add_model(app, o);
    o.a = {0.0, 0.4, 0.7};
    o.alpha = {10.0};
    o.n = 1000;
    o.replicates = 1000;
    add_list(app, "--a", o.a, "AR(1) coefficients");
    add_list(app, "--alpha", o.alpha, "Compression rate N/M");
    app.add_option("--N", o.n, "Window length")->capture_default_str();
    app.add_option("--M", o.m, "Compressed length (overrides --alpha)");
    app.add_option("--replicates", o.replicates, "Monte-Carlo replicates")->capture_default_str();
    add_lags(app, o, "0..19");
    add_scheme(app, o, "gaussian");
    add_estimators(app, o,
                   {"plain", "plain-m", "compressed", "subsampled", "q-plain-sin", "q-compressed-sin",
                    "q-subsampled-sin"});
    app.add_flag("--fixed-scheme", o.fixed_scheme, "Reuse one projection for all replicates");
    app.add_flag("--fresh-scheme-per-lag", o.fresh_scheme_per_lag, "Draw a new projection for each lag");
}

void run_simulate(const Options& o, RunRecorder& rec) {
    require_model(o);
    ExperimentConfig cfg;
    cfg.n = o.n;
    cfg.alpha = single(o.alpha, "alpha");
    if (o.m != 0) cfg.m = o.m;
    cfg.lags = parse_lags(o.lags);
    cfg.estimators = estimators_of(o);
    cfg.scheme = scheme_of(o);
    cfg.replicates = o.replicates;
    cfg.fixed_scheme = o.fixed_scheme;
    cfg.fresh_scheme_per_lag = o.fresh_scheme_per_lag;
    cfg.workers = o.threads;

    CsvTable table({"a", "estimator", "scheme", "tau", "mean", "var", "se", "se_var", "R", "var_theory"});
    for (std::size_t i = 0; i < o.a.size(); ++i) {
        const Ar1Model model(o.a[i], o.coupling);
        cfg.model = model;
        cfg.seed = derive_seed(o.seed, i);
        const McSummary s = run_mc(cfg);
        const CorrelationModel corr = model.correlation();
        for (const McEntry& e : s.entries) {
            table.cell(o.a[i]).cell(to_string(e.estimator)).cell(scheme_column(e.estimator, cfg.scheme))
                .cell(e.lag).cell(e.stats.mean).cell(e.stats.variance).cell(e.stats.se_mean)
                .cell(e.stats.se_variance).cell(s.replicates);
            if (auto v = theory_variance(corr, e.estimator, cfg.scheme, s.n, s.m, e.lag)) {
                table.cell(*v);
            } else {
                table.empty();
            }
            table.end_row();
        }
    }
    rec.write("simulate.csv", table.text());
}

// ---------------------------------------------------------------- region

void setup_region(CLI::App& app, Options& o) {
    o.a.clear();
    for (int i = 0; i < 100; ++i) o.a.push_back(i / 100.0);
    o.c4 = {0.0, 0.5};
    o.n = 1000;
    o.replicates = 0;
    add_list(app, "--alpha", o.alpha, "Compression rates (> 1), required");
    add_list(app, "--a", o.a, "AR(1) coefficient grid");
    add_list(app, "--c4", o.c4, "Fourth-cumulant values");
    app.add_option("--N", o.n, "Window length for the finite-size and Monte-Carlo columns")
        ->capture_default_str();
    app.add_option("--replicates", o.replicates, "Monte-Carlo replicates per grid point (0 = none)")
        ->capture_default_str();
}

void run_region(const Options& o, RunRecorder& rec) {
    if (o.alpha.empty()) throw DomainError("--alpha grid is empty");
    if (o.c4.empty()) throw DomainError("--c4 grid is empty");
    const RegionReport r =
        region_scan(o.alpha, o.a, o.c4, RegionMcConfig{o.n, o.replicates, o.seed, o.threads});
    CsvTable points({"alpha", "c4", "a", "delta_asymptotic", "delta_finite", "delta_mc", "delta_mc_se"});
    for (const auto& p : r.points) {
        points.cell(p.alpha).cell(p.c4).cell(p.a).cell(p.delta_asymptotic).cell(p.delta_finite);
        if (p.delta_mc) {
            points.cell(p.delta_mc->value).cell(p.delta_mc->standard_error);
        } else {
            points.empty().empty();
        }
        points.end_row();
    }
    CsvTable thresholds({"alpha", "c4", "a_star", "a_star_bisection", "a_star_finite", "a_star_mc"});
    for (const auto& t : r.thresholds) {
        thresholds.cell(t.alpha).cell(t.c4).cell(t.a_star).cell(t.a_star_bisection).cell(t.a_star_finite);
        if (t.a_star_mc) thresholds.cell(*t.a_star_mc); else thresholds.empty();
        thresholds.end_row();
    }
    rec.write("region_points.csv", points.text());
    rec.write("region_thresholds.csv", thresholds.text());
}

// ---------------------------------------------------------------- blocks

void setup_blocks(CLI::App& app, Options& o) {
    o.alpha = {5.0, 10.0, 20.0};
    o.n = 2000;
    app.add_option("--input", o.input, "Signal file (x)")->required();
    app.add_option("--input-y", o.input_y, "Second signal file for cross-correlation");
    app.add_option("--format", o.format, "csv|f64")->capture_default_str();
    app.add_option("--blocks", o.blocks, "Number of blocks")->capture_default_str();
    app.add_option("--N", o.n, "Window length per block")->capture_default_str();
    add_list(app, "--alpha", o.alpha, "Compression rates");
    add_lags(app, o, "0..49");
    add_scheme(app, o, "ternary-half");
    add_estimators(app, o,
                   {"plain", "q-plain-sin", "compressed", "q-compressed-sin", "q-subsampled-sin",
                    "plain-m"});
}

void run_blocks_cmd(const Options& o, RunRecorder& rec) {
    const SignalFormat format = format_of(o);
    const SignalWindow x = ingest_signal(o.input, format);
    const SignalWindow y = o.input_y.empty() ? x : ingest_signal(o.input_y, format);
    if (o.alpha.empty()) throw DomainError("--alpha list is empty");
    BlockConfig cfg;
    cfg.n = o.n;
    cfg.lags = parse_lags(o.lags);
    cfg.estimators = estimators_of(o);
    cfg.scheme = scheme_of(o);

    std::vector<std::string> header{"alpha"};
    for (const auto& name : o.estimators) header.push_back(name);
    CsvTable rmse(header);
    CsvTable detail({"alpha", "estimator", "tau", "mean", "stddev"});
    CsvTable reference({"tau", "reference", "reference_normalized"});
    for (std::size_t i = 0; i < o.alpha.size(); ++i) {
        cfg.alpha = o.alpha[i];
        cfg.seed = derive_seed(o.seed, i);
        const BlockReport r = run_blocks(x, y, o.blocks, cfg);
        if (i == 0) {
            for (std::size_t l = 0; l < r.lags.size(); ++l) {
                reference.cell(r.lags[l]).cell(r.reference[l]).cell(r.reference_normalized[l]);
                reference.end_row();
            }
        }
        rmse.cell(cfg.alpha);
        for (const auto& e : r.estimates) {
            rmse.cell(e.rmse);
            for (std::size_t l = 0; l < r.lags.size(); ++l) {
                detail.cell(cfg.alpha).cell(to_string(e.estimator)).cell(r.lags[l]).cell(e.mean[l])
                    .cell(e.stddev[l]);
                detail.end_row();
            }
        }
        rmse.end_row();
    }
    rec.write("rmse.csv", rmse.text());
    rec.write("blocks.csv", detail.text());
    rec.write("reference.csv", reference.text());
}

// ---------------------------------------------------------------- budget

void setup_budget(CLI::App& app, Options& o) {
    o.a = {0.7};
    o.alpha = {10.0};
    o.f_bits = {8.0, 16.0};
    o.n = 1024;
    o.replicates = 1000;
    add_list(app, "--a", o.a, "AR(1) coefficient");
    add_list(app, "--alpha", o.alpha, "Compression rate of the one-bit estimator");
    add_list(app, "--f", o.f_bits, "Bits per full-precision sample");
    app.add_option("--N", o.n, "Window length")->capture_default_str();
    app.add_option("--replicates", o.replicates, "Monte-Carlo replicates")->capture_default_str();
    add_lags(app, o, "0..19");
    add_scheme(app, o, "gaussian");
}

void run_budget(const Options& o, RunRecorder& rec) {
    BudgetConfig cfg;
    cfg.a = single(o.a, "a");
    cfg.n = o.n;
    cfg.alpha = single(o.alpha, "alpha");
    cfg.f_bits = o.f_bits;
    cfg.lags = parse_lags(o.lags);
    cfg.replicates = o.replicates;
    cfg.scheme = scheme_of(o);
    cfg.seed = o.seed;
    cfg.workers = o.threads;
    CsvTable table({"f", "tau", "M_quantized", "M_compressed", "var_quantized", "var_compressed", "ratio"});
    for (const BudgetRow& r : bit_budget_compare(cfg)) {
        table.cell(r.f).cell(r.lag).cell(r.m_quantized).cell(r.m_compressed).cell(r.var_quantized)
            .cell(r.var_compressed).cell(r.ratio);
        table.end_row();
    }
    rec.write("budget.csv", table.text());
}

// -------------------------------------------------------------- generate

void setup_generate(CLI::App& app, Options& o) {
    add_model(app, o);
    o.a = {0.7};
    o.n = 12500;
    add_list(app, "--a", o.a, "AR(1) coefficient");
    app.add_option("--N", o.n, "Number of samples")->capture_default_str();
    app.add_option("--format", o.format, "csv|f64")->capture_default_str();
}

void run_generate(const Options& o, RunRecorder& rec) {
    require_model(o);
    const SignalFormat format = format_of(o);
    if (o.n == 0) throw DomainError("--N must be positive");
    const SignalPair pair = generate_pair(Ar1Model(single(o.a, "a"), o.coupling), o.n, o.seed);
    const std::string ext = format == SignalFormat::Csv ? ".csv" : ".f64";
    auto emit = [&](const std::string& name, const SignalWindow& s) {
        const std::filesystem::path tmp = std::filesystem::path(o.out) / (name + ".tmp");
        write_signal(tmp, s, format);
        std::ifstream in(tmp, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        in.close();
        std::filesystem::remove(tmp);
        rec.write(name, buf.str());
    };
    emit("signal" + ext, pair.x);
    if (o.coupling != 1.0) emit("signal_y" + ext, pair.y);
}

const std::vector<Command>& commands() {
    static const std::vector<Command> list{
        {"theory", "Asymptotic (and optionally finite-size) variance tables", setup_theory, run_theory},
        {"simulate", "Monte-Carlo means and variances of the estimators", setup_simulate, run_simulate},
        {"region", "Sign map of the compression gain over (alpha, a, c4)", setup_region, run_region},
        {"blocks", "Block-wise RMSE evaluation of a recorded signal", setup_blocks, run_blocks_cmd},
        {"budget", "Equal-bit-budget comparison of one-bit and full-precision sketches", setup_budget,
         run_budget},
        {"generate", "Write a synthetic AR(1) signal", setup_generate, run_generate},
    };
    return list;
}

// Arguments that reproduce the parsed state, excluding run-location options.
std::vector<std::string> echo_args(const CLI::App& app) {
    std::vector<std::string> args;
    for (const CLI::Option* opt : app.get_options()) {
        const std::string name = opt->get_name();
        if (name == "--help" || name == "--config" || name == "--out" || name == "--threads") continue;
        if (opt->count() == 0) continue;
        if (opt->get_expected_min() == 0) {
            if (opt->as<bool>()) args.push_back(name);
            continue;
        }
        std::string joined;
        for (const auto& r : opt->results()) {
            if (!joined.empty()) joined += ',';
            joined += r;
        }
        args.push_back(name + "=" + joined);
    }
    return args;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const TruncationError*>(&e)) return static_cast<int>(ExitCode::Numeric);
    if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const DimensionError*>(&e) ||
        dynamic_cast<const UnsupportedError*>(&e)) {
        return static_cast<int>(ExitCode::Usage);
    }
    if (dynamic_cast<const Error*>(&e)) return static_cast<int>(ExitCode::Data);
    return static_cast<int>(ExitCode::Internal);
}

std::string usage() {
    std::string s = "usage: ccorr <command> [options]\n\ncommands:\n";
    for (const auto& c : commands()) s += "  " + c.name + std::string(10 - c.name.size(), ' ') + c.help + "\n";
    s += "  replay    Re-run a manifest and verify output digests\n";
    s += "\nRun 'ccorr <command> --help' for the options of a command.\n";
    return s;
}

int parse_app(CLI::App& app, std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return -1;
    } catch (const CLI::ParseError& e) {
        err << "ccorr " << app.get_name() << ": " << e.what() << "\n";
        return static_cast<int>(ExitCode::Usage);
    }
    return 0;
}

int run_command(const Command& cmd, const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    Options o;
    CLI::App app(cmd.help, cmd.name);
    cmd.setup(app, o);
    add_common(app, o);
    if (const int rc = parse_app(app, args, out, err); rc != 0) return rc < 0 ? 0 : rc;

    RunRecorder rec(o.out, cmd.name, echo_args(app), o.seed);
    cmd.body(o, rec);
    rec.finish();
    for (const auto& f : rec.outputs()) out << "wrote " << (std::filesystem::path(o.out) / f.name).string() << "\n";
    return 0;
}

int run_replay(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::string manifest_path;
    std::string out_dir;
    unsigned threads = 0;
    CLI::App app("Re-run a manifest and verify output digests", "replay");
    app.add_option("--manifest", manifest_path, "manifest.json of an earlier run")->required();
    app.add_option("--out", out_dir, "Output directory for the rerun")->required();
    app.add_option("--threads", threads, "Worker threads (0 = all cores)");
    if (const int rc = parse_app(app, args, out, err); rc != 0) return rc < 0 ? 0 : rc;

    std::ifstream in(manifest_path);
    if (!in) throw Error("cannot open " + manifest_path);
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(manifest_path + ": " + e.what(), 0);
    }
    if (!manifest.contains("command") || !manifest.contains("args")) {
        throw ParseError(manifest_path + ": missing command or args", 0);
    }
    std::vector<std::string> rerun{manifest["command"].get<std::string>()};
    for (const auto& a : manifest["args"]) rerun.push_back(a.get<std::string>());
    rerun.push_back("--out=" + out_dir);
    rerun.push_back("--threads=" + std::to_string(threads));
    if (rerun.front() == "replay") throw DomainError("a manifest cannot replay a replay");
    if (const int rc = run(rerun, out, err); rc != 0) return rc;

    std::ifstream fresh_in(std::filesystem::path(out_dir) / "manifest.json");
    const nlohmann::json fresh = nlohmann::json::parse(fresh_in);
    std::map<std::string, std::string> digests;
    for (const auto& f : fresh["outputs"]) digests[f["file"]] = f["sha256"];
    bool identical = true;
    for (const auto& f : manifest["outputs"]) {
        const std::string name = f["file"];
        const auto it = digests.find(name);
        const bool same = it != digests.end() && it->second == f["sha256"].get<std::string>();
        out << (same ? "identical " : "DIFFERENT ") << name << "\n";
        identical = identical && same;
    }
    if (!identical) {
        err << "ccorr replay: outputs differ from " << manifest_path << "\n";
        return static_cast<int>(ExitCode::Data);
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << usage();
        return static_cast<int>(ExitCode::Usage);
    }
    const std::string& name = args.front();
    if (name == "--help" || name == "-h" || name == "help") {
        out << usage();
        return 0;
    }
    if (name == "--version") {
        out << "ccorr " << kToolVersion << "\n";
        return 0;
    }
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    try {
        if (name == "replay") return run_replay(rest, out, err);
        for (const auto& cmd : commands()) {
            if (cmd.name == name) return run_command(cmd, rest, out, err);
        }
    } catch (const std::exception& e) {
        err << "ccorr " << name << ": " << e.what() << "\n";
        return exit_code_for(e);
    }
    err << "ccorr: unknown command '" << name << "'\n" << usage();
    return static_cast<int>(ExitCode::Usage);
}

}  // namespace ccorr::cli
