// coulomb-cluster: build cluster seeds from gauge quivers, mutate, verify.
//
// Exit codes: 0 ok, 1 a verification check failed, 2 bad input,
// 3 construction failure, 4 element left the Laurent ring.

#include "qcluster/checks.hpp"
#include "qcluster/errors.hpp"
#include "qcluster/io.hpp"
#include "qcluster/toda.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qcluster;

namespace {

constexpr int kFail = 1;
constexpr int kBadInput = 2;
constexpr int kConstruction = 3;
constexpr int kNotLaurent = 4;

struct ExitError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ExitError{kBadInput, "cannot read " + path};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ExitError{kBadInput, "cannot write " + path};
    out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);)
        if (!item.empty()) out.push_back(item);
    return out;
}

int to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ExitError{kBadInput, "not an integer: " + s};
    }
}

// ---- build

struct BuildArgs {
    std::string gauge, out, dot, convention = "text";
};

int cmd_build(const BuildArgs& a) {
    GaugeQuiver g = parse_gauge_quiver(read_file(a.gauge));
    ClusterSeed cs;
    try {
        cs = build_cluster_seed(g, parse_flavor_convention(a.convention));
    } catch (const CountMismatch& e) {
        throw ExitError{kConstruction, e.what()};
    }
    std::vector<std::string> names;
    for (const auto& v : cs.vertices) names.push_back(v.name());
    write_file(a.out, seed_json(cs.seed, names) + "\n");
    if (!a.dot.empty()) write_file(a.dot, seed_dot(cs.seed, names));
    const auto kr = kernel_rank(exchange_matrix(cs.seed));
    std::cout << R"({"vertices": )" << cs.seed.size() << R"(, "kernel_rank": )" << kr << "}\n";
    std::cerr << "built " << cs.seed.size() << " vertices, kernel rank " << kr << "\n";
    return 0;
}

// ---- mutate

struct MutateArgs {
    std::string seed, sequence, named, element, out;
};

// "baxter_top:4", "dehn:3", "bifund:4,3"; the seed defaults to the matching quiver.
MutationSeq named_sequence(const std::string& name, std::optional<Seed>& default_seed) {
    const auto colon = name.find(':');
    if (colon == std::string::npos) throw ExitError{kBadInput, "named sequence must look like kind:n"};
    const std::string kind = name.substr(0, colon);
    const auto args = split(name.substr(colon + 1), ',');
    if (kind == "bifund") {
        if (args.size() != 2) throw ExitError{kBadInput, "bifund needs m,n"};
        const int m = to_int(args[0]), n = to_int(args[1]);
        default_seed = build_glued(m, n);
        return bifund_sequence(m, n);
    }
    if (args.size() != 1) throw ExitError{kBadInput, kind + " needs one size"};
    const int n = to_int(args[0]);
    const SequenceKind k = parse_sequence_kind(kind);
    default_seed = build_coxeter(n);
    return standard_sequence(k, n);
}

int cmd_mutate(const MutateArgs& a) {
    std::optional<Seed> seed;
    MutationSeq seq;
    if (!a.named.empty()) {
        seq = named_sequence(a.named, seed);
    } else {
        for (const auto& t : split(a.sequence, ',')) seq.steps.push_back(to_int(t) - 1);
    }
    if (!a.seed.empty()) seed = parse_seed_json(read_file(a.seed));
    if (!seed) throw ExitError{kBadInput, "no seed given"};
    for (int k : seq.steps)
        if (k < 0 || k >= static_cast<int>(seed->size()))
            throw ExitError{kBadInput, "vertex " + std::to_string(k + 1) + " out of range"};
        else if (seed->is_frozen(k))
            throw ExitError{kBadInput, "vertex " + std::to_string(k + 1) + " is frozen"};
    if (seq.post_permutation && seq.post_permutation->size() != seed->size())
        throw ExitError{kBadInput, "named sequence does not fit the seed"};

    if (a.element.empty()) {
        const Seed out = mutate_sequence(*seed, seq);
        const std::string js = seed_json(out);
        if (a.out.empty())
            std::cout << js << "\n";
        else
            write_file(a.out, js + "\n");
        std::cerr << "applied " << seq.steps.size() << " mutations\n";
        return 0;
    }
    const TorusElement x = parse_element_json(read_file(a.element), seed->ambient_dim);
    const SequenceResult r = apply_sequence(x, *seed, seq);
    if (!a.out.empty()) write_file(a.out, seed_json(r.seed) + "\n");
    if (!r.element) {
        std::cout << R"({"status": "NotLaurent", "failed_step": )" << *r.failed_step << "}\n";
        std::cerr << "element is not Laurent after step " << *r.failed_step + 1 << " (vertex "
                  << seq.steps[*r.failed_step] + 1 << ")\n";
        return kNotLaurent;
    }
    std::cout << element_json(*r.element) << "\n";
    std::cerr << "element has " << r.element->size() << " terms\n";
    return 0;
}

// ---- verify

struct VerifyArgs {
    std::string suite = "all";
    std::vector<std::string> partitions;
    std::string gauge;
    int depth = 8;
    int trials = 100;
    std::uint64_t rng_seed = 1;
    int threads = 0;
};

int cmd_verify(const VerifyArgs& a) {
    static const std::vector<std::string> suites{"coxeter", "toda", "bifund", "gauge", "catalog", "all"};
    if (std::find(suites.begin(), suites.end(), a.suite) == suites.end())
        throw ExitError{kBadInput, "unknown suite " + a.suite};
    std::vector<Partition> parts;
    for (const auto& p : a.partitions) parts.push_back(parse_partition(p));
    if (parts.empty()) parts = all_partitions();
    const FuzzOptions fuzz{a.depth, a.trials, a.rng_seed, a.threads > 0 ? a.threads : default_threads()};
    auto want = [&a](const char* s) { return a.suite == "all" || a.suite == s; };

    int total = 0, failed = 0;
    auto emit = [&](const std::vector<CheckReport>& reps) {
        for (const auto& r : reps) {
            std::cout << report_json(r) << "\n" << std::flush;
            ++total;
            failed += r.pass ? 0 : 1;
        }
    };

    if (want("coxeter"))
        for (int n = 2; n <= 6; ++n) emit(verify_coxeter(n));
    if (want("toda")) {
        for (int n = 2; n <= 3; ++n) {
            emit(verify_frozen_trick(n));
            emit(verify_dehn_invariance(n));
            emit(verify_htilde(n));
        }
        for (int n = 1; n <= 4; ++n) emit(verify_commutativity(n));
    }
    if (want("bifund"))
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n) emit(verify_bifund(m, n));
    if (want("gauge")) {
        if (!a.gauge.empty()) {
            emit(verify_gauge(parse_gauge_quiver(read_file(a.gauge)), a.gauge));
        } else {
            for (Partition p : parts) {
                emit(verify_figure(p));
                emit(verify_gauge(example_gauge_quiver(p), partition_name(p)));
            }
        }
    }
    if (want("catalog")) {
        for (Partition p : parts) {
            emit(verify_catalog_laurent(p, fuzz));
            emit(verify_commutation_transport(p));
            emit(verify_monopole_algebra(p));
        }
        emit({laurent_negative_control(fuzz)});
    }
    std::cerr << total - failed << "/" << total << " checks passed\n";
    return failed ? kFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster seeds for quiver gauge theories"};
    app.require_subcommand(1);

    BuildArgs ba;
    auto* build = app.add_subcommand("build", "Build the cluster seed of a gauge quiver");
    build->add_option("--gauge-quiver", ba.gauge, "Gauge quiver JSON")->required();
    build->add_option("--out", ba.out, "Seed JSON output")->required();
    build->add_option("--dot", ba.dot, "Graphviz output");
    build->add_option("--flavor-convention", ba.convention, "text or figures")
        ->check(CLI::IsMember({"text", "figures"}));

    MutateArgs ma;
    auto* mutate = app.add_subcommand("mutate", "Mutate a seed and optionally a torus element");
    mutate->add_option("--seed", ma.seed, "Seed JSON");
    auto* seq_opt = mutate->add_option("--sequence", ma.sequence, "Comma-separated 1-based vertices");
    auto* named_opt = mutate->add_option("--named", ma.named, "baxter_top:n, baxter_bottom:n, r_op:n, dehn:n, bifund:m,n");
    seq_opt->excludes(named_opt);
    mutate->add_option("--element", ma.element, "Torus element JSON");
    mutate->add_option("--out", ma.out, "Mutated seed JSON output");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", va.suite, "coxeter, toda, bifund, gauge, catalog or all");
    verify->add_option("--partition", va.partitions, "4, 31, 22 or 211 (repeatable)");
    verify->add_option("--gauge-quiver", va.gauge, "Gauge quiver JSON for the gauge suite");
    verify->add_option("--depth", va.depth, "Mutation depth for Laurent fuzzing")->check(CLI::NonNegativeNumber);
    verify->add_option("--trials", va.trials, "Fuzzing trials")->check(CLI::NonNegativeNumber);
    verify->add_option("--rng-seed", va.rng_seed, "Fuzzing seed");
    verify->add_option("--threads", va.threads, "Worker threads (default COULOMB_CLUSTER_THREADS or all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kBadInput;
    }

    try {
        if (*build) return cmd_build(ba);
        if (*mutate) {
            if (ma.sequence.empty() && ma.named.empty()) throw ExitError{kBadInput, "give --sequence or --named"};
            return cmd_mutate(ma);
        }
        return cmd_verify(va);
    } catch (const ExitError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const NotInSpan& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConstruction;
    } catch (const FrozenVertex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
}
