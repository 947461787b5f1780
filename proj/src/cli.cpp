#include "slt/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "slt/baselines.hpp"
#include "slt/instances.hpp"
#include "slt/io.hpp"
#include "slt/oracles.hpp"
#include "slt/pipeline.hpp"
#include "slt/svg.hpp"

namespace slt {

RootedTree run_algorithm(const std::string& algo, const Instance& instance, unsigned threads) {
    if (algo == "steiner") {
        return build_slt(instance, Mode::steiner, threads).tree;
    }
    if (algo == "restricted") {
        return build_slt(instance, Mode::restricted, threads).tree;
    }
    if (algo == "kry") {
        return kry_slt(instance, instance.epsilon);
    }
    if (algo == "abp") {
        return abp_slt(instance, instance.epsilon);
    }
    if (algo == "solomon") {
        return solomon_slt(instance, instance.epsilon);
    }
    if (algo == "mst") {
        return mst_tree(instance);
    }
    throw std::invalid_argument("unknown algorithm: " + algo);
}

namespace {

struct GenArgs {
    std::string kind;
    double epsilon = 0.0;
    std::optional<std::size_t> n;
    std::optional<int> k;
    std::optional<double> delta;
    std::uint64_t seed = 1;
    std::string output;
};

struct BuildArgs {
    std::string algo;
    std::string input;
    std::string output;
    unsigned threads = 1;
};

struct VerifyArgs {
    std::string input;
    std::string tree;
    bool certificate = false;
    bool oracle = false;
};

struct BenchArgs {
    std::vector<std::string> algos;
    std::vector<double> eps;
    std::string kind;
    std::vector<std::uint64_t> seeds{1};
    std::optional<std::size_t> n;
    std::optional<int> k;
    std::optional<double> delta;
    std::string output;
};

struct PlotArgs {
    std::string input;
    std::string tree;
    std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    const Instance inst = generate(parse_kind(a.kind), a.epsilon, GenParams{a.n, a.k, a.delta}, a.seed);
    save_instance(a.output, inst);
    out << "points=" << inst.points.size() << "\n";
    return kExitOk;
}

int cmd_build(const BuildArgs& a, std::ostream& out) {
    const Instance inst = load_instance(a.input);
    const RootedTree tree = run_algorithm(a.algo, inst, a.threads);
    save_tree(a.output, tree);
    out << "weight=" << format_double(tree.weight()) << " vertices=" << tree.vertices.size() << "\n";
    return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const Instance inst = load_instance(a.input);
    const RootedTree tree = load_tree(a.tree);
    try {
        check_covers_instance(tree, inst);
    } catch (const std::invalid_argument& e) {
        err << "verify: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    const double stretch = root_stretch(tree, inst);
    const double weight = tree.weight();
    out << "stretch=" << format_double(stretch) << " lightness=" << format_double(lightness(tree, inst));
    int status = kExitOk;
    if (a.certificate) {
        const Certificate cert = steiner_lower_bound_certificate(inst, inst.epsilon, std::sqrt(inst.epsilon));
        out << " certificate=" << format_double(cert.value);
        if (weight < cert.value * (1.0 - 1e-12)) {
            err << "verify: tree weight is below the lower-bound certificate\n";
            status = kExitVerifyFailed;
        }
    }
    if (a.oracle) {
        const OptimalTree opt = brute_force_opt_st(inst, inst.epsilon);
        out << " opt=" << format_double(opt.weight);
        if (stretch <= (1.0 + inst.epsilon) * (1.0 + 1e-9) && weight < opt.weight * (1.0 - 1e-9)) {
            err << "verify: tree meets the stretch bound but is lighter than the optimum\n";
            status = kExitVerifyFailed;
        }
    }
    out << "\n";
    return status;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    std::ofstream csv(a.output);
    if (!csv) {
        throw std::runtime_error("cannot write " + a.output);
    }
    csv << "epsilon,algorithm,kind,n,seed,weight,mst_weight,lightness,max_stretch,runtime_ms\n";
    const InstanceKind kind = parse_kind(a.kind);
    std::size_t rows = 0;
    for (double eps : a.eps) {
        for (std::uint64_t seed : a.seeds) {
            const Instance inst = generate(kind, eps, GenParams{a.n, a.k, a.delta}, seed);
            const double mst_weight = mst(inst.points).weight;
            for (const std::string& algo : a.algos) {
                const auto start = std::chrono::steady_clock::now();
                const RootedTree tree = run_algorithm(algo, inst);
                const double ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                const double w = tree.weight();
                csv << format_double(eps) << ',' << algo << ',' << a.kind << ',' << inst.points.size() << ','
                    << seed << ',' << format_double(w) << ',' << format_double(mst_weight) << ','
                    << format_double(w / mst_weight) << ',' << format_double(root_stretch(tree, inst)) << ','
                    << format_double(ms) << '\n';
                ++rows;
            }
        }
    }
    out << "rows=" << rows << "\n";
    return kExitOk;
}

int cmd_plot(const PlotArgs& a) {
    const Instance inst = load_instance(a.input);
    std::optional<RootedTree> tree;
    if (!a.tree.empty()) {
        tree = load_tree(a.tree);
    }
    std::ofstream svg(a.output);
    if (!svg) {
        throw std::runtime_error("cannot write " + a.output);
    }
    write_svg(svg, inst, tree ? &*tree : nullptr);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shallow-light trees for planar point sets"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "generate an instance");
    g->add_option("--kind", gen.kind, "circle|comb|cnet-comb|sector-lb|uniform")->required();
    g->add_option("--epsilon", gen.epsilon)->required();
    g->add_option("--n", gen.n);
    g->add_option("--k", gen.k);
    g->add_option("--delta", gen.delta);
    g->add_option("--seed", gen.seed);
    g->add_option("-o,--output", gen.output)->required();

    BuildArgs build;
    auto* b = app.add_subcommand("build", "build a tree");
    b->add_option("--algo", build.algo)
        ->required()
        ->check(CLI::IsMember({"steiner", "restricted", "kry", "abp", "solomon", "mst"}));
    b->add_option("-i,--input", build.input)->required();
    b->add_option("-o,--output", build.output)->required();
    b->add_option("--threads", build.threads)->check(CLI::PositiveNumber);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "check a tree against an instance");
    v->add_option("-i,--input", verify.input)->required();
    v->add_option("-t,--tree", verify.tree)->required();
    v->add_flag("--certificate", verify.certificate);
    v->add_flag("--oracle", verify.oracle);

    BenchArgs bench;
    auto* be = app.add_subcommand("bench", "sweep algorithms over generated instances");
    be->add_option("--algos", bench.algos)->required()->delimiter(',');
    be->add_option("--eps-list", bench.eps)->required()->delimiter(',');
    be->add_option("--kind", bench.kind)->required();
    be->add_option("--seeds", bench.seeds)->delimiter(',');
    be->add_option("--n", bench.n);
    be->add_option("--k", bench.k);
    be->add_option("--delta", bench.delta);
    be->add_option("-o,--output", bench.output)->required();

    PlotArgs plot;
    auto* p = app.add_subcommand("plot", "render an instance and optional tree as SVG");
    p->add_option("-i,--input", plot.input)->required();
    p->add_option("-t,--tree", plot.tree);
    p->add_option("-o,--output", plot.output)->required();

    std::vector<const char*> argv;
    for (const std::string& s : args) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (g->parsed()) {
            return cmd_gen(gen, out);
        }
        if (b->parsed()) {
            return cmd_build(build, out);
        }
        if (v->parsed()) {
            return cmd_verify(verify, out, err);
        }
        if (be->parsed()) {
            return cmd_bench(bench, out);
        }
        return cmd_plot(plot);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace slt
