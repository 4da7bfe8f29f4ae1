// One PASS/FAIL line per acceptance criterion. With an argument N only
// criterion N runs; the exit code is nonzero iff a selected criterion fails.

#include "qcluster/checks.hpp"
#include "qcluster/toda.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qcluster;

namespace {

// Runtime limits in seconds.
constexpr double kLimit[11] = {0, 1, 1, 10, 30, 10, 30, 5, 10, 300, 60};

// Fuzzing parameters of criterion 9.
constexpr int kDepth = 8;
constexpr int kTrials = 100;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
    bool pass = true;
    std::string note;
};

void absorb(Outcome& o, const std::vector<CheckReport>& reps) {
    if (reps.empty()) o = {false, "no checks ran"};
    for (const auto& r : reps) {
        if (r.pass) continue;
        if (o.pass) o.note = r.check + " [" + r.inputs + "]" + (r.witness.empty() ? "" : " " + r.witness);
        o.pass = false;
    }
}

HalfIntMatrix from_arrows(int n, const std::vector<std::pair<int, int>>& arrows) {
    HalfIntMatrix m{IntMatrix(n, std::vector<int>(n, 0))};
    for (const auto& [a, b] : arrows) {
        m.twice[a][b] += 2;
        m.twice[b][a] -= 2;
    }
    return m;
}

// Q_4 as drawn, vertices 0..7; double arrows listed twice.
HalfIntMatrix drawn_q4() {
    return from_arrows(8, {{1, 0}, {0, 2}, {3, 2}, {1, 4}, {5, 4}, {3, 6}, {5, 7}, {7, 6},
                           {2, 1}, {2, 1}, {4, 3}, {4, 3}, {6, 5}, {6, 5}});
}

// Q'_4 as drawn.
HalfIntMatrix drawn_q4_prime() {
    return from_arrows(8, {{4, 6}, {5, 6}, {4, 7}, {5, 7}, {2, 1}, {0, 3}, {4, 3}, {2, 5},
                           {1, 0}, {1, 0}, {3, 2}, {3, 2}, {5, 4}, {5, 4}});
}

std::string first_diff(const HalfIntMatrix& a, const HalfIntMatrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a.twice[i][j] != b.twice[i][j])
                return "eps(" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(a.twice[i][j] / 2) +
                       ", drawn " + std::to_string(b.twice[i][j] / 2);
    return "";
}

Outcome c1() {
    Outcome o;
    const HalfIntMatrix got = exchange_matrix(build_coxeter(4));
    if (got != drawn_q4()) o = {false, "labels vs drawing: " + first_diff(got, drawn_q4())};
    if (got != coxeter_definition_matrix(4)) o = {false, "labels vs arrow list"};
    return o;
}

Outcome c2() {
    const Seed s = mutate_sequence(build_coxeter(4), standard_sequence(SequenceKind::baxter_top, 4));
    const HalfIntMatrix got = exchange_matrix(s);
    const std::string d = first_diff(got, drawn_q4_prime());
    return {d.empty(), d};
}

Outcome c3() {
    Outcome o;
    for (int n = 2; n <= 3; ++n) absorb(o, verify_frozen_trick(n));
    return o;
}

Outcome c4() {
    Outcome o;
    for (int n = 1; n <= 4; ++n) absorb(o, verify_commutativity(n));
    for (int n = 2; n <= 3; ++n) absorb(o, verify_htilde(n));
    return o;
}

Outcome c5() {
    Outcome o;
    for (int n = 2; n <= 3; ++n) absorb(o, verify_dehn_invariance(n));
    return o;
}

Outcome c6() {
    Outcome o;
    // The sequence as printed, read left to right as a composition.
    const std::vector<int> printed{2,  3, 1, 2,  0,  4,  5, 1, -1, 3,  4,  0, -2, 2,  6, 3, -1, -3,
                                   1,  5, 2, -2, -4, 0,  4, 1, -3, -1, 3, 0, -2, 2,  -1, 1, 0};
    std::vector<int> seq = bifund_order(4, 3);
    std::reverse(seq.begin(), seq.end());
    if (seq != printed) o = {false, "sequence differs from the printed tokens"};
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) absorb(o, verify_bifund(m, n));
    if (o.pass) o.note = std::to_string(printed.size()) + " tokens";
    return o;
}

Outcome c7() {
    Outcome o;
    const int counts[] = {16, 13, 10, 8};
    const int kernels[] = {4, 3, 2, 2};
    for (std::size_t i = 0; i < all_partitions().size(); ++i) {
        const Partition p = all_partitions()[i];
        const GaugeQuiver g = example_gauge_quiver(p);
        const ClusterSeed cs = build_cluster_seed(g);
        if (static_cast<int>(cs.seed.size()) != counts[i] || expected_vertex_count(g) != counts[i])
            o = {false, partition_name(p) + ": vertex count " + std::to_string(cs.seed.size())};
        if (static_cast<int>(kernel_rank(exchange_matrix(cs.seed))) != kernels[i])
            o = {false, partition_name(p) + ": kernel rank"};
        absorb(o, verify_figure(p));
    }
    return o;
}

Outcome c8() {
    Outcome o;
    absorb(o, verify_monopole_algebra(Partition::p211));
    absorb(o, verify_monopole_algebra(Partition::p22));
    absorb(o, verify_monopole_algebra(Partition::p4));  // reaches d = 3
    for (int d = 1; d <= 3; ++d) absorb(o, verify_partial_fractions(d));
    return o;
}

Outcome c9() {
    Outcome o;
    const FuzzOptions opt{kDepth, kTrials, kSeed, default_threads()};
    std::vector<std::string> failing;
    for (Partition p : {Partition::p211, Partition::p22})
        for (const auto& r : verify_catalog_laurent(p, opt))
            if (!r.pass) failing.push_back(r.inputs);
    if (!failing.empty()) {
        o.pass = false;
        o.note = "not Laurent:";
        for (const auto& f : failing) o.note += " " + f;
    }
    const CheckReport neg = laurent_negative_control(opt);
    if (!neg.pass) o = {false, "negative control did not fail"};
    return o;
}

Outcome c10() {
    Outcome o;
    int checked = 0;
    for (Partition p : all_partitions()) {
        const auto reps = verify_commutation_transport(p);
        for (const auto& r : reps) checked += r.check == "transport.commute";
        absorb(o, reps);
    }
    if (o.pass) o.note = std::to_string(checked) + " commuting pairs";
    return o;
}

const char* kTitle[11] = {"",
                          "coxeter quiver",
                          "baxter geometry",
                          "frozen-variable trick",
                          "toda integrability",
                          "dehn invariance",
                          "bifundamental sequence",
                          "gauge-to-cluster construction",
                          "monopole operator algebra",
                          "laurent fuzzing",
                          "commutation transport"};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Outcome()>> run{nullptr, c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
    int lo = 1, hi = 10;
    if (argc > 1) {
        lo = hi = std::atoi(argv[1]);
        if (lo < 1 || lo > 10) {
            std::fprintf(stderr, "criterion must be 1..10\n");
            return 2;
        }
    }
    int failed = 0;
    for (int c = lo; c <= hi; ++c) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run[c]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > kLimit[c]) {
            o.pass = false;
            o.note += " over the " + std::to_string(static_cast<int>(kLimit[c])) + " s limit";
        }
        std::printf("criterion %2d %-30s %s  %.3fs%s%s\n", c, kTitle[c], o.pass ? "PASS" : "FAIL", secs,
                    o.note.empty() ? "" : "  ", o.note.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed ? 1 : 0;
}
