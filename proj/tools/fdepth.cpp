// Command-line front end: depth tables, screening, trimmed means, the
// contamination study, the resampling diagnostic and sample generation.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fdepth/depth.hpp"
#include "fdepth/estimators.hpp"
#include "fdepth/io.hpp"
#include "fdepth/parallel.hpp"
#include "fdepth/resample.hpp"
#include "fdepth/simulate.hpp"

namespace {

using namespace fdepth;

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::bad_config:
        case Errc::bad_model_id:
        case Errc::bad_j:
        case Errc::part_too_small:
            return 1;
        case Errc::not_factorizable:
            return 3;
        default:
            return 2;  // data validation
    }
}

// "" or "-" selects stdout.
void write_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::bad_config, "cannot open output file " + path);
    fn(out);
    if (!out)
        throw Error(Errc::bad_config, "failed writing " + path);
}

std::vector<DepthMethod> parse_methods(const std::string& list) {
    std::vector<DepthMethod> methods;
    size_t start = 0;
    while (start <= list.size()) {
        size_t comma = list.find(',', start);
        std::string label = list.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!label.empty())
            methods.push_back(DepthMethod::parse(label));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (methods.empty())
        throw Error(Errc::bad_config, "empty method list");
    return methods;
}

std::vector<int> parse_models(const std::string& list) {
    std::vector<int> models;
    size_t start = 0;
    while (start <= list.size()) {
        size_t comma = list.find(',', start);
        std::string field = list.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!field.empty()) {
            try {
                models.push_back(std::stoi(field));
            } catch (const std::exception&) {
                throw Error(Errc::bad_config, "bad model id '" + field + "'");
            }
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (models.empty())
        throw Error(Errc::bad_config, "empty model list");
    return models;
}

DepthMethod resolve_method(const std::string& label, int j_override) {
    DepthMethod method = DepthMethod::parse(label);
    if (j_override > 0) {
        using F = DepthMethod::Family;
        if (method.family != F::bd && method.family != F::gbd)
            throw Error(Errc::bad_config, "--J applies only to BD and GBD");
        method.j = j_override;
    }
    return method;
}

struct CommonOpts {
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--threads", opts.threads, "worker threads (0 = all cores)");
    // handled in expand_config before parsing; registered here for --help
    cmd->add_option("--config", "key=value file; command-line flags override");
}

std::string trimmed(const std::string& text) {
    size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos)
        return "";
    size_t last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

// Rewrites [sub, --config, file, flags...] as [sub, file-derived flags..., flags...]
// so the command line wins and unknown keys fail as unknown options.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::vector<std::string> expanded;
    std::string config_path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size())
                throw Error(Errc::bad_config, "--config needs a file path");
            config_path = args[++i];
            continue;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
            continue;
        }
        expanded.push_back(args[i]);
    }
    if (config_path.empty())
        return expanded;

    std::ifstream in(config_path);
    if (!in)
        throw Error(Errc::bad_config, "cannot open config file " + config_path);
    std::vector<std::string> from_file;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string entry = trimmed(line);
        if (entry.empty() || entry[0] == '#')
            continue;
        size_t eq = entry.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(Errc::bad_config, config_path + ":" + std::to_string(line_no) +
                                              ": expected key=value");
        from_file.push_back("--" + trimmed(entry.substr(0, eq)) + "=" +
                            trimmed(entry.substr(eq + 1)));
    }

    // insert after the subcommand token
    std::vector<std::string> result;
    size_t pos = 0;
    while (pos < expanded.size()) {
        result.push_back(expanded[pos]);
        ++pos;
        if (result.back().rfind("-", 0) != 0)
            break;
    }
    result.insert(result.end(), from_file.begin(), from_file.end());
    result.insert(result.end(), expanded.begin() + pos, expanded.end());
    return result;
}

DepthVector compute_depths(const FunctionalSample& sample, DepthMethod method, int k,
                           std::optional<uint64_t> seed) {
    if (k <= 1)
        return depth_all(sample, method);
    if (!seed)
        throw Error(Errc::bad_config, "--seed is required when K > 1");
    StreamKey key{*seed};
    auto rng = key.child(stream::partition).rng();
    Partition partition = random_partition(sample.n, k, rng);
    auto depths = resampled_depth_all_multi(sample, partition, {&method, 1});
    return std::move(depths.front());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"band-depth toolkit for samples of curves"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    CommonOpts common;

    // depth
    auto* depth_cmd = app.add_subcommand("depth", "per-curve depth and rank table");
    std::string depth_input, depth_method_label = "GBD", depth_out;
    int depth_j = 0, depth_k = 1;
    std::optional<uint64_t> depth_seed;
    depth_cmd->add_option("--input", depth_input, "curve CSV")->required();
    depth_cmd->add_option("--method", depth_method_label, "depth method label");
    depth_cmd->add_option("--J", depth_j, "bands per tuple for BD/GBD (2 or 3)");
    depth_cmd->add_option("--K", depth_k, "resampling parts (1 = full data)");
    depth_cmd->add_option("--seed", depth_seed, "RNG seed (required when K > 1)");
    depth_cmd->add_option("--out", depth_out, "output path (default stdout)");
    add_common(depth_cmd, common);

    // screen / trimmed-mean
    auto* screen_cmd = app.add_subcommand("screen", "flag the least-deep curves");
    auto* trim_cmd = app.add_subcommand("trimmed-mean", "depth-trimmed mean curve");
    std::string screen_input, screen_method_label = "GBD", screen_out, screen_estimate;
    double screen_alpha = 0.2;
    int screen_k = 1;
    std::optional<uint64_t> screen_seed;
    for (CLI::App* cmd : {screen_cmd, trim_cmd}) {
        cmd->add_option("--input", screen_input, "curve CSV")->required();
        cmd->add_option("--method", screen_method_label, "depth method label");
        cmd->add_option("--alpha", screen_alpha, "trim proportion in [0,1)");
        cmd->add_option("--K", screen_k, "resampling parts (1 = full data)");
        cmd->add_option("--seed", screen_seed, "RNG seed (required when K > 1)");
        cmd->add_option("--out", screen_out, "output path (default stdout)");
        add_common(cmd, common);
    }
    screen_cmd->add_option("--estimate", screen_estimate,
                           "also write the trimmed-mean curve CSV here");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "contamination study report");
    StudyConfig study;
    std::string sim_models = "0,1,2,3,4,5,6", sim_methods, sim_out, sim_raw;
    uint64_t sim_seed = 0;
    sim_cmd->add_option("--models", sim_models, "comma-separated model ids");
    sim_cmd->add_option("--methods", sim_methods, "comma-separated method labels");
    sim_cmd->add_option("--n", study.n, "curves per replication");
    sim_cmd->add_option("--V", study.v, "grid points");
    sim_cmd->add_option("--q", study.q, "contamination probability");
    sim_cmd->add_option("--M", study.m_size, "contamination size");
    sim_cmd->add_option("--alpha", study.alpha, "trim proportion");
    sim_cmd->add_option("--R", study.replications, "replications");
    sim_cmd->add_option("--K", study.k_parts, "resampling parts");
    sim_cmd->add_option("--k-points", study.k_points, "model 5 contaminated points");
    sim_cmd->add_option("--rough-k", study.rough_amplitude,
                        "model 6 rough-component variance");
    sim_cmd->add_option("--seed", sim_seed, "RNG seed")->required();
    sim_cmd->add_option("--out", sim_out, "report CSV path ('-' = stdout)");
    sim_cmd->add_option("--raw", sim_raw, "per-replication EI/EAI dump path");
    add_common(sim_cmd, common);

    // resample-check
    auto* check_cmd = app.add_subcommand("resample-check",
                                         "full-data vs resampled rank agreement");
    RankAgreementConfig agreement;
    std::string check_method_label = "GBD", check_out, check_corr_out;
    uint64_t check_seed = 0;
    check_cmd->add_option("--n", agreement.n, "curves per repeat");
    check_cmd->add_option("--V", agreement.v, "grid points");
    check_cmd->add_option("--K", agreement.k_parts, "resampling parts");
    check_cmd->add_option("--B", agreement.repeats, "repeats");
    check_cmd->add_option("--method", check_method_label, "depth method label");
    check_cmd->add_option("--mu", agreement.gp.mu, "covariance exponent");
    check_cmd->add_option("--seed", check_seed, "RNG seed")->required();
    check_cmd->add_option("--out", check_out, "positions CSV path (default stdout)");
    check_cmd->add_option("--corr-out", check_corr_out, "per-repeat correlations path");
    add_common(check_cmd, common);

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "emit a simulated sample as CSV");
    ContaminationConfig contamination;
    size_t gen_n = 150, gen_v = 30;
    std::string gen_out, gen_labels;
    uint64_t gen_seed = 0;
    gen_cmd->add_option("--model", contamination.model_id, "model id 0..6");
    gen_cmd->add_option("--n", gen_n, "curve count");
    gen_cmd->add_option("--V", gen_v, "grid points");
    gen_cmd->add_option("--q", contamination.q, "contamination probability");
    gen_cmd->add_option("--M", contamination.m_size, "contamination size");
    gen_cmd->add_option("--k-points", contamination.k_points, "model 5 point count");
    gen_cmd->add_option("--rough-k", contamination.rough.k,
                        "model 6 rough-component variance");
    gen_cmd->add_option("--seed", gen_seed, "RNG seed")->required();
    gen_cmd->add_option("--out", gen_out, "curve CSV path (default stdout)");
    gen_cmd->add_option("--labels", gen_labels, "contamination labels CSV path");
    add_common(gen_cmd, common);

    std::vector<std::string> args;
    try {
        args = expand_config(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        set_worker_count(common.threads);

        if (*depth_cmd) {
            auto sample = read_curves_file(depth_input);
            auto method = resolve_method(depth_method_label, depth_j);
            auto depths = compute_depths(sample, method, depth_k, depth_seed);
            write_output(depth_out,
                         [&](std::ostream& out) { write_depth_table(out, sample, depths); });
        } else if (*screen_cmd || *trim_cmd) {
            auto sample = read_curves_file(screen_input);
            auto method = resolve_method(screen_method_label, 0);
            auto depths = compute_depths(sample, method, screen_k, screen_seed);
            auto spec = make_trim_spec(sample.n, screen_alpha, method);
            Curve estimate = trimmed_mean(sample, depths, screen_alpha);
            std::string estimate_id = "trimmed_mean_" + method.label();
            if (*trim_cmd) {
                write_output(screen_out, [&](std::ostream& out) {
                    write_estimate(out, sample.grid, estimate, estimate_id);
                });
            } else {
                write_output(screen_out, [&](std::ostream& out) {
                    write_screen_table(out, sample, depths, spec.trim_count);
                });
                if (!screen_estimate.empty())
                    write_output(screen_estimate, [&](std::ostream& out) {
                        write_estimate(out, sample.grid, estimate, estimate_id);
                    });
            }
        } else if (*sim_cmd) {
            study.models = parse_models(sim_models);
            if (!sim_methods.empty())
                study.methods = parse_methods(sim_methods);
            study.seed = sim_seed;
            StudyReport report = run_study(study);
            write_study_text(std::cout, report);
            if (!sim_out.empty())
                write_output(sim_out,
                             [&](std::ostream& out) { write_study_csv(out, report); });
            if (!sim_raw.empty())
                write_output(sim_raw,
                             [&](std::ostream& out) { write_study_raw(out, report); });
        } else if (*check_cmd) {
            agreement.methods = {DepthMethod::parse(check_method_label)};
            agreement.seed = check_seed;
            auto reports = rank_agreement_study(agreement);
            write_output(check_out, [&](std::ostream& out) {
                write_agreement_table(out, reports.front());
            });
            if (!check_corr_out.empty())
                write_output(check_corr_out, [&](std::ostream& out) {
                    write_agreement_correlations(out, reports.front());
                });
        } else if (*gen_cmd) {
            Grid grid = canonical_grid(gen_v);
            StreamKey key{gen_seed};
            LabeledSample labeled =
                generate_model(contamination, gen_n, grid, key.child(stream::data));
            write_output(gen_out,
                         [&](std::ostream& out) { write_curves(out, labeled.sample); });
            if (!gen_labels.empty())
                write_output(gen_labels,
                             [&](std::ostream& out) { write_labels(out, labeled); });
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
