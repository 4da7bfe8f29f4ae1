#pragma once

// Self-checks grouped by subject. Each returns one report per property.

#include "qcluster/clustermap.hpp"
#include "qcluster/report.hpp"

#include <cstdint>
#include <vector>

namespace qcluster {

// Exchange matrix of Q_n read off the arrow list of its definition, without labels.
HalfIntMatrix coxeter_definition_matrix(int n);

std::vector<CheckReport> verify_coxeter(int n);
// build_glued(m, n) under bifund_sequence(m, n) against build_glued(n, m).
std::vector<CheckReport> verify_bifund(int m, int n);

// Vertex count, kernel rank, loop classes, arrow reversal and sink images.
std::vector<CheckReport> verify_gauge(const GaugeQuiver& g, const std::string& inputs);
// Exchange matrix against the drawn quiver.
std::vector<CheckReport> verify_figure(Partition p);

struct FuzzOptions {
    int depth = 8;
    int trials = 100;
    std::uint64_t rng_seed = 1;
    int threads = 1;
};
std::vector<CheckReport> verify_catalog_laurent(Partition p, const FuzzOptions& opt);
// Rank-2 seed with eps_12 = 1 and Y(e_1); the report passes when fuzzing finds a failure.
CheckReport laurent_negative_control(const FuzzOptions& opt);

// Commutators of generators at distinct non-adjacent nodes, symmetric
// functional action on 1 and e_1(w).
std::vector<CheckReport> verify_monopole_algebra(Partition p);
// Partial fractions on a lone node of dimension d: E_{x^m} 1 = h_m(w).
std::vector<CheckReport> verify_partial_fractions(int d);

}  // namespace qcluster
