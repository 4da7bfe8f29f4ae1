#include "qcluster/checks.hpp"
#include "qcluster/errors.hpp"
#include "qcluster/monopole.hpp"

#include <gtest/gtest.h>

using namespace qcluster;

namespace {

GaugeQuiver triangle() {
    return parse_gauge_quiver(R"({
      "marked": "a",
      "gauge_nodes": [{"id": "a", "dim": 1}, {"id": "b", "dim": 2}, {"id": "c", "dim": 1}],
      "edges": [{"src": "a", "dst": "b"}, {"src": "b", "dst": "c"}, {"src": "c", "dst": "a"}],
      "flavor_nodes": [{"id": "f", "dim": 1, "attached_to": "b"}]
    })");
}

}  // namespace

TEST(GaugeQuiver, Parsing) {
    const GaugeQuiver g = triangle();
    EXPECT_EQ(g.dim_v(), 4);
    EXPECT_EQ(g.dim_w(), 1);
    EXPECT_EQ(g.euler_characteristic(), 0);
    EXPECT_EQ(g.u_count(), 1);
    EXPECT_EQ(g.spanning_tree.size(), 2u);
    EXPECT_EQ(g.coloring.at("a"), Color::black);
    EXPECT_EQ(g.flavor_vars("b"), std::vector<std::string>{"z[1]"});
}

TEST(GaugeQuiver, SchemaErrors) {
    EXPECT_THROW(parse_gauge_quiver("{"), SchemaError);
    EXPECT_THROW(parse_gauge_quiver(R"({"marked": "a", "gauge_nodes": []})"), SchemaError);
    EXPECT_THROW(parse_gauge_quiver(R"({"marked": "a", "gauge_nodes": [{"id": "a", "dim": 0}]})"), SchemaError);
    EXPECT_THROW(parse_gauge_quiver(R"({"marked": "a", "gauge_nodes": [{"id": "a", "dim": 1}],
        "edges": [{"src": "a", "dst": "a"}]})"),
                 LoopEdge);
    EXPECT_THROW(parse_gauge_quiver(R"({"marked": "a", "gauge_nodes": [{"id": "a", "dim": 1}, {"id": "b", "dim": 1}]})"),
                 DisconnectedGraph);
}

TEST(GaugeQuiver, JsonRoundTrip) {
    const GaugeQuiver g = triangle();
    const GaugeQuiver h = parse_gauge_quiver(gauge_quiver_json(g));
    EXPECT_EQ(h.dim_v(), g.dim_v());
    EXPECT_EQ(h.spanning_tree, g.spanning_tree);
    EXPECT_EQ(h.coloring, g.coloring);
}

TEST(DiffOps, ShiftActsByQSquared) {
    const LaurentPoly w = LaurentPoly::variable("w[1,1]");
    const DiffOp d = DiffOp::term(LaurentPoly::constant(1), {{"w[1,1]", 1}});
    const auto r = act_symmetric(d, w);
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, w.scaled(QCoeff::q_power(2)));
    // D w = q^2 w D
    const DiffOp mw = DiffOp::scalar(w);
    EXPECT_EQ(do_compose(d, mw), do_compose(mw, d).map_coeffs([](const RationalFn& c) {
        return RationalFn(LaurentPoly::constant(QCoeff::q_power(2))) * c;
    }));
}

TEST(Monopoles, SigmaTwistIsAnInvolution) {
    const GaugeQuiver g = triangle();
    for (const auto& n : g.gauge_nodes) {
        const DiffOp e = monopole_E(g, n.id, 0);
        EXPECT_EQ(sigma_twist(sigma_twist(e, g), g), e);
        const DiffOp f = monopole_F(g, n.id, 1);
        EXPECT_EQ(sigma_twist(sigma_twist(f, g), g), f);
    }
}

TEST(Monopoles, SymmetricActionAndFarCommutators) {
    for (Partition p : {Partition::p211, Partition::p22, Partition::p31})
        for (const auto& r : verify_monopole_algebra(p)) EXPECT_TRUE(r.pass) << r.check << " " << r.inputs << " " << r.lhs;
}

TEST(Monopoles, PartialFractions) {
    for (int d = 1; d <= 3; ++d)
        for (const auto& r : verify_partial_fractions(d)) EXPECT_TRUE(r.pass) << r.inputs << " " << r.lhs;
}

TEST(Monopoles, MultiplicationByElementarySymmetric) {
    const GaugeQuiver g = example_gauge_quiver(Partition::p4);
    const auto ws = w_vars(g, "3");
    const auto r = act_symmetric(multiplication_e(g, "3", 2), LaurentPoly::constant(1));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, elementary_symmetric(ws, 2));
}

TEST(Monopoles, DressingByWShiftsTheSum) {
    // E_{x^1} = E_{x^0} composed with e_1 on a lone node of dimension 1.
    const GaugeQuiver g = parse_gauge_quiver(R"({"marked": "1", "gauge_nodes": [{"id": "1", "dim": 1}]})");
    const DiffOp e1 = monopole_E(g, "1", 1);
    const DiffOp e0 = monopole_E(g, "1", 0);
    EXPECT_EQ(e1, do_compose(multiplication_e(g, "1", 1), e0));
}
