#pragma once

// The cluster quiver of a gauge quiver, monopole images and the
// verification harness tying the two sides together.

#include "qcluster/gauge.hpp"
#include "qcluster/heisenberg.hpp"
#include "qcluster/monopole.hpp"
#include "qcluster/qtorus.hpp"
#include "qcluster/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qcluster {

enum class VertexRole { base, frozen_y0, coxeter, arrow, flavor };

struct ClusterVertex {
    VertexRole role;
    std::string node;  // gauge node (empty for base)
    int index = 0;     // r of y^{(i)}_r for coxeter vertices
    int edge = -1;     // arrow vertices
    std::string z;     // flavor vertices
    std::string name() const;
};

// Flavor slot labels: text = p[i,d_i] - z, figures = z - p[i,1].
enum class FlavorConvention { text, figures };
FlavorConvention parse_flavor_convention(const std::string& s);

struct ClusterSeed {
    GaugeQuiver quiver;
    Seed seed;
    std::vector<ClusterVertex> vertices;

    int y(const std::string& node, int r) const;  // r = 0 is the frozen vertex
    int arrow(int edge) const;
    int base() const;
    int flavor(const std::string& z) const;
    std::vector<int> mutable_vertices() const;
};

// Vertex order: base, then for every gauge node in BFS order from the marked
// node its arrow vertices towards earlier nodes, the pairs y2, y1, y4, y3, ...,
// y0 and its flavor slots. Throws CountMismatch if the vertex count differs
// from 2 dim V + dim W + 1 - chi.
ClusterSeed build_cluster_seed(const GaugeQuiver& g, FlavorConvention conv = FlavorConvention::text);
int expected_vertex_count(const GaugeQuiver& g);

// Gauge nodes plus one glue node (the basepoint); base and flavor slots become
// edges from the glue node.
LoopGraph loop_graph(const ClusterSeed& cs);

struct MonopoleImage {
    QCoeff prefactor;
    int dehn_power = 0;
    TorusElement elem;
    std::vector<std::string> baxter_factors;  // one Q_i(z_t) per flavor variable
};
MonopoleImage sink_image_E(const ClusterSeed& cs, const std::string& node, int m);
MonopoleImage source_image_F(const ClusterSeed& cs, const std::string& node, int m);

struct ReverseArrow {
    GaugeQuiver reversed;
    MutationSeq seq;  // on the cluster seed; post_permutation maps onto the reversed construction
    std::vector<CheckReport> checks;
};
ReverseArrow reverse_arrow(const ClusterSeed& cs, int edge);

struct LaurentReport {
    bool pass = true;
    int trials = 0;
    std::vector<int> failing_sequence;
    int failing_trial = -1;
};
// Random walks of mutations at mutable vertices (no immediate repeats). Trials
// run on up to `threads` workers; trial t draws from its own generator
// seeded by (rng_seed, t), so results do not depend on the thread count.
LaurentReport verify_universally_laurent(const TorusElement& elem, const Seed& s, int depth, int trials,
                                         std::uint64_t rng_seed, int threads = 1);

// Worker count from COULOMB_CLUSTER_THREADS, else hardware concurrency.
int default_threads();

// ---- example partitions

enum class Partition { p4, p31, p22, p211 };
Partition parse_partition(const std::string& s);
std::string partition_name(Partition p);
const std::vector<Partition>& all_partitions();

std::string example_gauge_json(Partition p);
GaugeQuiver example_gauge_quiver(Partition p);

// Arrows (i, j, multiplicity) with 1-based vertex numbers as drawn, and the
// frozen vertices drawn as rectangles.
struct FigureQuiver {
    int vertices = 0;
    std::vector<int> frozen;
    std::vector<std::pair<int, int>> arrows;  // repeated for double arrows
};
FigureQuiver figure_quiver(Partition p);
HalfIntMatrix figure_exchange_matrix(const FigureQuiver& f);

struct CatalogEntry {
    std::string name;  // e.g. "E1", "F3"
    bool is_e = true;
    std::string node;
    int m = -1;
    QCoeff op_scale;  // the image is of op_scale times the operator
    TorusElement image;
};
std::vector<CatalogEntry> example_catalog(Partition p, const Seed& s);

DiffOp catalog_operator(const GaugeQuiver& g, const CatalogEntry& e);

// For every catalog pair whose difference operators commute, check that the
// torus images commute as well. Pairs that do not commute are reported with
// check "transport.skip".
std::vector<CheckReport> verify_commutation_transport(Partition p);

}  // namespace qcluster
