#include "qcluster/checks.hpp"
#include "qcluster/errors.hpp"
#include "qcluster/io.hpp"

#include <gtest/gtest.h>

using namespace qcluster;

namespace {

void expect_all_pass(const std::vector<CheckReport>& reps) {
    ASSERT_FALSE(reps.empty());
    for (const auto& r : reps)
        EXPECT_TRUE(r.pass) << r.check << " " << r.inputs << " " << r.witness << "\n" << r.lhs << "\n" << r.rhs;
}

}  // namespace

TEST(ClusterSeed, VertexCountsAndKernels) {
    const std::vector<std::pair<std::size_t, std::size_t>> want{{16, 4}, {13, 3}, {10, 2}, {8, 2}};
    for (std::size_t i = 0; i < all_partitions().size(); ++i) {
        const Partition p = all_partitions()[i];
        const ClusterSeed cs = build_cluster_seed(example_gauge_quiver(p));
        EXPECT_EQ(cs.seed.size(), want[i].first) << partition_name(p);
        EXPECT_EQ(kernel_rank(exchange_matrix(cs.seed)), want[i].second) << partition_name(p);
    }
}

TEST(ClusterSeed, MatchesDrawnQuivers) {
    for (Partition p : all_partitions()) expect_all_pass(verify_figure(p));
}

TEST(ClusterSeed, LabelsOfTheSmallestExample) {
    const ClusterSeed cs = build_cluster_seed(example_gauge_quiver(Partition::p211));
    const SymbolSpace& sp = *cs.seed.symbols;
    const std::vector<std::string> want{"p[1,1]",          "x[1,1] - p[1,1]", "p[1,1] - z[1]",  "p[1,1] - p[2,1]",
                                        "x[2,1] - p[2,1]", "p[2,1] - p[3,1]", "x[3,1] - p[3,1]", "p[3,1] - z[2]"};
    for (std::size_t v = 0; v < want.size(); ++v) EXPECT_EQ(sp.render(cs.seed.label(static_cast<int>(v))), want[v]);
    EXPECT_EQ(cs.seed.frozen, (std::set<int>{0, 1, 4, 6}));
}

TEST(ClusterSeed, FigureConventionFlipsFlavorSlots) {
    const ClusterSeed cs = build_cluster_seed(example_gauge_quiver(Partition::p211), FlavorConvention::figures);
    EXPECT_EQ(cs.seed.symbols->render(cs.seed.label(cs.flavor("z[1]"))), "-p[1,1] + z[1]");
    EXPECT_THROW(parse_flavor_convention("other"), UnknownKind);
}

TEST(ClusterSeed, GaugeChecksOnExamplesAndACycle) {
    for (Partition p : all_partitions()) expect_all_pass(verify_gauge(example_gauge_quiver(p), partition_name(p)));
    const GaugeQuiver cyc = parse_gauge_quiver(R"({
      "marked": "a",
      "gauge_nodes": [{"id": "a", "dim": 1}, {"id": "b", "dim": 2}, {"id": "c", "dim": 2}],
      "edges": [{"src": "b", "dst": "a"}, {"src": "c", "dst": "b"}, {"src": "a", "dst": "c"}],
      "flavor_nodes": [{"id": "f", "dim": 1, "attached_to": "c"}]
    })");
    expect_all_pass(verify_gauge(cyc, "cycle"));
}

TEST(ClusterSeed, ReversingTwiceRestoresTheQuiver) {
    const ClusterSeed cs = build_cluster_seed(example_gauge_quiver(Partition::p31));
    const ReverseArrow once = reverse_arrow(cs, 1);
    const ClusterSeed mid = build_cluster_seed(once.reversed);
    const ReverseArrow twice = reverse_arrow(mid, 1);
    EXPECT_EQ(twice.reversed.edges[1].src, "3");
    const Seed back = mutate_sequence(mutate_sequence(cs.seed, once.seq), twice.seq);
    for (int v : cs.mutable_vertices()) EXPECT_EQ(back.label(v), cs.seed.label(v)) << v;
    EXPECT_THROW(reverse_arrow(cs, 5), NotGaugeEdge);
}

TEST(MonopoleImages, SinksAndSources) {
    const ClusterSeed cs = build_cluster_seed(example_gauge_quiver(Partition::p4));
    const MonopoleImage e = sink_image_E(cs, "1", -1);
    EXPECT_EQ(e.dehn_power, 0);
    EXPECT_EQ(e.elem.str_in_chart(cs.seed), "Y(e2)");
    EXPECT_THROW(sink_image_E(cs, "2", -1), NotASink);
    const MonopoleImage f = source_image_F(cs, "3", -1);
    EXPECT_EQ(f.elem.str_in_chart(cs.seed), "Y(-e8 - e10 - e12)");
    EXPECT_EQ(f.baxter_factors.size(), 4u);
    EXPECT_EQ(f.prefactor, QCoeff::q_power(-1));
    EXPECT_THROW(source_image_F(cs, "1", -1), HasIncomingGaugeArrow);
}

TEST(Catalog, ExampleEntries) {
    const ClusterSeed cs = build_cluster_seed(example_gauge_quiver(Partition::p211));
    const auto cat = example_catalog(Partition::p211, cs.seed);
    ASSERT_EQ(cat.size(), 6u);
    EXPECT_EQ(cat[0].image.str_in_chart(cs.seed), "v^6*Y(e2)");
    EXPECT_EQ(cat[3].image.size(), 2u);
    EXPECT_EQ(parse_partition("2,1,1"), Partition::p211);
    EXPECT_THROW(parse_partition("5"), UnknownPartition);
}

TEST(Catalog, SinkImageAgreesWithCatalog) {
    for (Partition p : all_partitions()) {
        const auto reps = verify_catalog_laurent(p, {2, 3, 1, 1});
        for (const auto& r : reps)
            if (r.check == "catalog.sink_image") EXPECT_TRUE(r.pass) << r.inputs;
    }
}

TEST(Catalog, CommutingOperatorsCommutingImagesSmallest) {
    expect_all_pass(verify_commutation_transport(Partition::p211));
}

TEST(Io, SeedRoundTripAndDot) {
    const ClusterSeed cs = build_cluster_seed(example_gauge_quiver(Partition::p22));
    const Seed back = parse_seed_json(seed_json(cs.seed));
    EXPECT_EQ(back.basis, cs.seed.basis);
    EXPECT_EQ(back.form2, cs.seed.form2);
    EXPECT_EQ(back.frozen, cs.seed.frozen);
    EXPECT_EQ(back.labels(), cs.seed.labels());
    const std::string dot = seed_dot(cs.seed);
    EXPECT_NE(dot.find("v4 -> v5;\n  v4 -> v5;"), std::string::npos);
    EXPECT_NE(dot.find("v1 [label=\"1\", shape=box]"), std::string::npos);
    EXPECT_THROW(parse_seed_json(R"({"ambient_dim": 2, "basis": [[1,0],[0,1]], "form2": [[0,1],[1,0]]})"),
                 SchemaError);
}

TEST(Io, ElementRoundTrip) {
    TorusElement x(3);
    x.add_term({1, 0, -1}, 1 + QCoeff::v_power(2));
    x.add_term({0, 2, 0}, QCoeff::v_power(-3, -5));
    EXPECT_EQ(parse_element_json(element_json(x), 3), x);
    EXPECT_EQ(parse_element_json(R"([{"lattice_vector": [0, 1, 0], "coeff": 2}])", 3),
              TorusElement::monomial({0, 1, 0}, 2));
    EXPECT_THROW(parse_element_json(R"([{"lattice_vector": [0, 1]}])", 3), SchemaError);
}

TEST(Io, ReportLine) {
    const std::string line = report_json({"x.y", "n=2", false, "", "", "w"});
    EXPECT_EQ(line, R"({"check_id":"x.y","inputs":"n=2","status":"FAIL","witness":"w"})");
}
