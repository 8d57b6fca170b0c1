// ramify command line: build filtered complexes, compute persistence,
// ramification forests and cophenetic distance matrices.  Talks to the core
// exclusively through the shared-library C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramify.h"

namespace {

struct ComplexDeleter {
    void operator()(ramify_complex* p) const { ramify_complex_free(p); }
};
struct BarcodeDeleter {
    void operator()(ramify_barcode* p) const { ramify_barcode_free(p); }
};
struct MatroidDeleter {
    void operator()(ramify_matroid* p) const { ramify_matroid_free(p); }
};
struct ForestDeleter {
    void operator()(ramify_forest* p) const { ramify_forest_free(p); }
};
struct DistmatDeleter {
    void operator()(ramify_distmat* p) const { ramify_distmat_free(p); }
};

using ComplexPtr = std::unique_ptr<ramify_complex, ComplexDeleter>;
using BarcodePtr = std::unique_ptr<ramify_barcode, BarcodeDeleter>;
using MatroidPtr = std::unique_ptr<ramify_matroid, MatroidDeleter>;
using ForestPtr = std::unique_ptr<ramify_forest, ForestDeleter>;
using DistmatPtr = std::unique_ptr<ramify_distmat, DistmatDeleter>;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(ramify_status status) {
    if (status != RAMIFY_OK) throw CliError(ramify_last_error());
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    ramify_string_free(s);
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw CliError("cannot open output file: " + path);
    out << text;
    if (!out) throw CliError("failed writing to " + path);
}

int64_t field_prime(const std::string& field, int64_t prime) {
    if (field == "rational") return 0;
    if (field == "gf") return prime;
    throw CliError("unknown field '" + field + "' (rational, gf)");
}

struct CommonOpts {
    std::string input;
    std::string demo;
    std::string output;
    std::string field = "rational";
    int64_t prime = 2;
    int max_dim = 2;
};

ComplexPtr open_complex(const CommonOpts& opts) {
    ramify_complex* c = nullptr;
    if (!opts.demo.empty())
        check(ramify_complex_demo(opts.demo.c_str(), &c));
    else if (!opts.input.empty())
        check(ramify_complex_load(opts.input.c_str(), &c));
    else
        throw CliError("no input: pass a filtration file or --demo");
    return ComplexPtr(c);
}

// matroid from either the built-in linear demo or a complex, per options
MatroidPtr open_matroid(const CommonOpts& opts, int degree) {
    ramify_matroid* m = nullptr;
    if (opts.demo == "s-epsilon") {
        check(ramify_matroid_demo_s_epsilon(&m));
        return MatroidPtr(m);
    }
    ComplexPtr complex = open_complex(opts);
    check(ramify_cophenetic_matroid(complex.get(), degree, field_prime(opts.field, opts.prime), &m));
    return MatroidPtr(m);
}

void add_field_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--field", opts.field, "coefficient field: rational or gf")->default_str("rational");
    cmd->add_option("--prime", opts.prime, "prime p for --field gf")->default_str("2");
}

// --- subcommands -----------------------------------------------------------------

int run_build(const std::string& kind, const std::string& input, int max_dim, double max_scale,
              const std::string& output) {
    ramify_complex* raw = nullptr;
    check(ramify_complex_build_file(kind.c_str(), input.c_str(), max_dim, max_scale, &raw));
    ComplexPtr complex(raw);

    for (int d = 0; d <= ramify_complex_top_dim(complex.get()); ++d)
        std::cerr << "dim " << d << ": " << ramify_complex_count_dim(complex.get(), d) << " simplices\n";
    std::cerr << "critical values: " << ramify_complex_critical_count(complex.get()) << "\n";

    char* text = nullptr;
    check(ramify_complex_format(complex.get(), &text));
    write_output(take_string(text), output);
    return 0;
}

int run_persist(const CommonOpts& opts, const std::string& format) {
    ComplexPtr complex = open_complex(opts);
    ramify_barcode* raw = nullptr;
    check(ramify_persistence(complex.get(), opts.max_dim, field_prime(opts.field, opts.prime), &raw));
    BarcodePtr barcode(raw);
    std::cerr << "bars: " << ramify_barcode_size(barcode.get()) << "\n";
    char* text = nullptr;
    check(ramify_barcode_export(barcode.get(), format.c_str(), &text));
    write_output(take_string(text), opts.output);
    return 0;
}

int run_forest(const CommonOpts& opts, int degree, const std::string& format, const std::string& seed,
               double seed_eps, bool seed_eps_set) {
    MatroidPtr matroid = open_matroid(opts, degree);
    ForestPtr forest;
    if (!seed.empty()) {
        if (!seed_eps_set) throw CliError("--seed requires --epsilon (the scale the seed is irreducible at)");
        std::vector<size_t> ids;
        std::string tok;
        for (std::istringstream is(seed); std::getline(is, tok, ',');) {
            if (tok.empty()) continue;
            ids.push_back(static_cast<size_t>(std::stoull(tok)));
        }
        ramify_forest* raw = nullptr;
        check(ramify_forest_build_seeded(matroid.get(), ids.data(), ids.size(), seed_eps, &raw));
        forest.reset(raw);
    } else {
        ramify_forest* raw = nullptr;
        check(ramify_forest_build(matroid.get(), &raw));
        forest.reset(raw);
    }
    if (ramify_forest_root_count(forest.get()) == 0) std::cerr << "forest is empty\n";
    char* text = nullptr;
    check(ramify_forest_export(forest.get(), format.c_str(), &text));
    write_output(take_string(text), opts.output);
    return 0;
}

int run_distmat(const CommonOpts& opts, int degree, double eps, bool eps_set) {
    MatroidPtr matroid = open_matroid(opts, degree);
    if (!eps_set) {
        // default: the first scale at which every generator exists
        eps = 0;
        for (size_t e = 0; e < ramify_matroid_ground_size(matroid.get()); ++e) {
            double birth = 0;
            check(ramify_matroid_element_birth(matroid.get(), e, &birth));
            eps = std::max(eps, birth);
        }
        std::cerr << "base scale: " << eps << "\n";
    }
    ramify_distmat* raw = nullptr;
    check(ramify_distance_matrix(matroid.get(), eps, nullptr, 0, &raw));
    DistmatPtr matrix(raw);
    char* text = nullptr;
    check(ramify_distmat_export(matrix.get(), &text));
    write_output(take_string(text), opts.output);
    return 0;
}

int run_check(const CommonOpts& opts) {
    bool all_ok = true;
    std::string report;

    if (opts.demo == "s-epsilon") {
        MatroidPtr matroid = open_matroid(opts, 0);
        for (size_t i = 0; i < ramify_matroid_critical_count(matroid.get()); ++i) {
            double eps = 0;
            check(ramify_matroid_critical_value(matroid.get(), i, &eps));
            int ok = 0;
            char* line = nullptr;
            check(ramify_matroid_check(matroid.get(), eps, &ok, &line));
            report += take_string(line) + "\n";
            all_ok = all_ok && ok;
        }
        write_output(report, opts.output);
        std::cerr << (all_ok ? "all checks passed\n" : "CHECK FAILED\n");
        return all_ok ? 0 : 1;
    }

    ComplexPtr complex = open_complex(opts);  // load validates face closure
    report += "closure: ok (" + std::to_string(ramify_complex_size(complex.get())) + " simplices)\n";
    const int top = ramify_complex_top_dim(complex.get());
    for (int k = 0; k <= std::min(opts.max_dim, top < 0 ? 0 : top); ++k) {
        ramify_matroid* raw = nullptr;
        check(ramify_cophenetic_matroid(complex.get(), k, field_prime(opts.field, opts.prime), &raw));
        MatroidPtr matroid(raw);
        const size_t gens = ramify_matroid_ground_size(matroid.get());
        report += "degree " + std::to_string(k) + ": " + std::to_string(gens) + " generators\n";
        for (size_t i = 0; i < ramify_matroid_critical_count(matroid.get()); ++i) {
            double eps = 0;
            check(ramify_matroid_critical_value(matroid.get(), i, &eps));
            int ok = 0;
            char* line = nullptr;
            check(ramify_matroid_check(matroid.get(), eps, &ok, &line));
            report += "  k=" + std::to_string(k) + " " + take_string(line) + "\n";
            all_ok = all_ok && ok;

            // ultrametric validation happens inside matrix construction
            ramify_distmat* dm = nullptr;
            ramify_status st = ramify_distance_matrix(matroid.get(), eps, nullptr, 0, &dm);
            if (st == RAMIFY_OK) {
                report += "  k=" + std::to_string(k) + " ultrametric at eps=" + std::to_string(eps) + ": ok (" +
                          std::to_string(ramify_distmat_size(dm)) + " classes)\n";
                ramify_distmat_free(dm);
            } else {
                report += "  k=" + std::to_string(k) + " ultrametric at eps=" + std::to_string(eps) +
                          ": FAILED: " + ramify_last_error() + "\n";
                all_ok = false;
            }
        }
    }
    write_output(report, opts.output);
    std::cerr << (all_ok ? "all checks passed\n" : "CHECK FAILED\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"persistent homology as filtered matroids: barcodes, ramification forests, cophenetic distances"};
    app.set_config("--config", "", "read options from a key=value file (command line wins)");
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "build a filtered complex from data and save it");
    std::string build_kind = "rips", build_input, build_output;
    int build_max_dim = 2;
    double build_max_scale = 0;
    build->add_option("--kind", build_kind, "rips | cech | clique | nerve")->default_str("rips");
    build->add_option("--max-dim", build_max_dim, "largest simplex dimension")->default_str("2");
    build->add_option("--max-scale", build_max_scale, "scale cutoff (rips/cech)");
    build->add_option("-o,--output", build_output, "output filtration file (default stdout)");
    build->add_option("input", build_input, "input file (CSV points, graph, or cover)")->required();

    // persist
    auto* persist = app.add_subcommand("persist", "compute the persistence barcode");
    CommonOpts persist_opts;
    std::string persist_format = "csv";
    persist->add_option("--max-dim", persist_opts.max_dim, "top homology degree")->default_str("2");
    persist->add_option("--format", persist_format, "csv | json | svg")->default_str("csv");
    add_field_options(persist, persist_opts);
    persist->add_option("--demo", persist_opts.demo, "built-in dataset: triangle");
    persist->add_option("-o,--output", persist_opts.output, "output file (default stdout)");
    persist->add_option("input", persist_opts.input, "filtration file");

    // forest
    auto* forest = app.add_subcommand("forest", "build the ramification forest of the cophenetic matroid");
    CommonOpts forest_opts;
    std::string forest_format = "newick", forest_seed;
    int forest_degree = 1;
    double forest_eps = 0;
    forest->add_option("--degree", forest_degree, "homological degree k")->default_str("1");
    forest->add_option("--format", forest_format, "newick | dot | json | svg")->default_str("newick");
    add_field_options(forest, forest_opts);
    forest->add_option("--demo", forest_opts.demo, "built-in dataset: triangle | s-epsilon");
    auto* seed_opt = forest->add_option("--seed", forest_seed, "explicit seed as comma-separated generator ids");
    auto* eps_opt = forest->add_option("--epsilon", forest_eps, "scale the seed is irreducible at")->needs(seed_opt);
    forest->add_option("-o,--output", forest_opts.output, "output file (default stdout)");
    forest->add_option("input", forest_opts.input, "filtration file");

    // distmat
    auto* distmat = app.add_subcommand("distmat", "cophenetic distance matrix between homology classes");
    CommonOpts distmat_opts;
    int distmat_degree = 1;
    double distmat_eps = 0;
    distmat->add_option("--degree", distmat_degree, "homological degree k")->default_str("1");
    auto* distmat_eps_opt =
        distmat->add_option("--epsilon", distmat_eps, "base scale (default: last generator birth)");
    add_field_options(distmat, distmat_opts);
    distmat->add_option("--demo", distmat_opts.demo, "built-in dataset: triangle");
    distmat->add_option("-o,--output", distmat_opts.output, "output file (default stdout)");
    distmat->add_option("input", distmat_opts.input, "filtration file");

    // check
    auto* checkcmd = app.add_subcommand("check", "run submodularity and ultrametric validators");
    CommonOpts check_opts;
    checkcmd->add_option("--max-dim", check_opts.max_dim, "top degree to validate")->default_str("2");
    add_field_options(checkcmd, check_opts);
    checkcmd->add_option("--demo", check_opts.demo, "built-in dataset: triangle | s-epsilon");
    checkcmd->add_option("-o,--output", check_opts.output, "report file (default stdout)");
    checkcmd->add_option("input", check_opts.input, "filtration file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            if ((build_kind == "rips" || build_kind == "cech") && !(build_max_scale > 0))
                throw CliError("--max-scale > 0 is required for rips and cech builds");
            return run_build(build_kind, build_input, build_max_dim, build_max_scale, build_output);
        }
        if (persist->parsed()) return run_persist(persist_opts, persist_format);
        if (forest->parsed())
            return run_forest(forest_opts, forest_degree, forest_format, forest_seed, forest_eps,
                              eps_opt->count() > 0);
        if (distmat->parsed())
            return run_distmat(distmat_opts, distmat_degree, distmat_eps, distmat_eps_opt->count() > 0);
        if (checkcmd->parsed()) return run_check(check_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
