#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "jspectra/pipeline.hpp"

namespace {

using namespace jspectra;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitAssertionFailed = 2;

struct CommonFlags {
    std::string manifest_path;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::optional<double> gamma0;
    std::optional<int> num_eigs;
    std::vector<double> b_grid;
    double tol_scale = 1.0;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_manifest = true) {
    if (with_manifest)
        cmd->add_option("manifest", flags.manifest_path, "manifest JSON file")->required();
    cmd->add_option("--out", flags.out, "write the result here instead of stdout");
    cmd->add_option("--seed", flags.seed, "seed for all sampling");
    cmd->add_option("--samples", flags.samples, "number of sampled test-vector pairs");
    cmd->add_option("--gamma0", flags.gamma0, "base point for the variational solver");
    cmd->add_option("--num-eigs", flags.num_eigs, "how many eigenvalues to solve for");
    cmd->add_option("--b-grid", flags.b_grid, "candidate b values")->delimiter(',');
    cmd->add_option("--tol-scale", flags.tol_scale, "multiplies all tolerances");
}

Manifest load_with_overrides(const CommonFlags& flags) {
    Manifest manifest = load_manifest(flags.manifest_path);
    if (flags.seed) manifest.seed = flags.seed;
    if (flags.samples) manifest.samples = *flags.samples;
    if (flags.gamma0) manifest.gamma0 = flags.gamma0;
    if (flags.num_eigs) manifest.num_eigs = flags.num_eigs;
    if (!flags.b_grid.empty()) manifest.b_grid = flags.b_grid;
    return manifest;
}

void deliver(const std::string& content, const std::string& out) {
    if (out.empty())
        std::cout << content;
    else
        write_text_file(out, content);
}

std::string manifest_dir(const std::string& path) {
    return std::filesystem::path(path).parent_path().string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral analysis of J-self-adjoint block matrices"};
    app.require_subcommand(1);

    CommonFlags flags;
    bool no_krein = false, no_qnr = false;

    CLI::App* analyze = app.add_subcommand("analyze", "run the full pipeline");
    add_common(analyze, flags);
    analyze->add_flag("--no-krein", no_krein, "skip the Krein-space certificates");
    analyze->add_flag("--no-qnr", no_qnr, "skip numerical-range sampling");

    CLI::App* qnr = app.add_subcommand("qnr", "sample the quadratic numerical range as CSV");
    add_common(qnr, flags);

    CLI::App* certify = app.add_subcommand("certify", "emit a membership/bounds certificate");
    add_common(certify, flags);

    std::string example_name;
    int example_n = 16;
    std::string emit_dir = ".";
    std::string fn_u = "const:0", fn_w = "const:1", fn_q = "const:10", fn_v = "const:1";
    CLI::App* example = app.add_subcommand("example", "write a discretized example system");
    example->add_option("name", example_name, "ex1 or ex2")->required();
    example->add_option("n", example_n, "grid size")->required();
    example->add_option("--emit", emit_dir, "output directory");
    example->add_option("--u", fn_u, "potential in D (preset)");
    example->add_option("--w", fn_w, "coupling weight for ex1 (preset)");
    example->add_option("--q", fn_q, "potential in A for ex2 (preset)");
    example->add_option("--v", fn_v, "coupling factor for ex2 (preset)");

    CLI11_PARSE(app, argc, argv);

    try {
        Tolerances::global().scale(flags.tol_scale);

        if (analyze->parsed()) {
            Manifest manifest = load_with_overrides(flags);
            AnalyzeOptions options;
            options.krein = !no_krein;
            options.qnr = !no_qnr;
            AnalyzeOutcome outcome =
                run_analyze(manifest, manifest_dir(flags.manifest_path), options);
            deliver(outcome.report_json, flags.out);
            if (!outcome.all_passed) {
                for (const auto& f : outcome.failures)
                    std::cerr << "assertion failed: " << f << "\n";
                return kExitAssertionFailed;
            }
            return kExitOk;
        }
        if (qnr->parsed()) {
            Manifest manifest = load_with_overrides(flags);
            if (!manifest.seed)
                throw Error(ErrorCode::ParseError, "qnr sampling requires --seed or a manifest seed");
            QnrCsv csv = run_qnr_csv(manifest, manifest_dir(flags.manifest_path),
                                     manifest.samples, *manifest.seed);
            if (flags.out.empty()) {
                std::cout << csv.points;
            } else {
                write_text_file(flags.out, csv.points);
                std::filesystem::path boundary(flags.out);
                boundary.replace_extension(".boundary.csv");
                write_text_file(boundary.string(), csv.boundary);
            }
            return kExitOk;
        }
        if (certify->parsed()) {
            Manifest manifest = load_with_overrides(flags);
            deliver(run_certify(manifest, manifest_dir(flags.manifest_path)), flags.out);
            return kExitOk;
        }
        if (example->parsed()) {
            Manifest::ExampleSpec spec;
            spec.name = example_name;
            spec.n = example_n;
            spec.u = fn_u;
            spec.w = fn_w;
            spec.q = fn_q;
            spec.v = fn_v;
            std::string manifest_path = emit_example(spec, emit_dir);
            std::cout << manifest_path << "\n";
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
