#include "qcluster/clustermap.hpp"

#include "qcluster/errors.hpp"

#include <algorithm>

namespace qcluster {

Partition parse_partition(const std::string& s) {
    std::string t;
    std::copy_if(s.begin(), s.end(), std::back_inserter(t), [](char c) { return c != ',' && c != ' '; });
    if (t == "4") return Partition::p4;
    if (t == "31") return Partition::p31;
    if (t == "22") return Partition::p22;
    if (t == "211") return Partition::p211;
    throw UnknownPartition("unknown partition " + s);
}

std::string partition_name(Partition p) {
    switch (p) {
    case Partition::p4:
        return "4";
    case Partition::p31:
        return "3,1";
    case Partition::p22:
        return "2,2";
    case Partition::p211:
        return "2,1,1";
    }
    return "";
}

const std::vector<Partition>& all_partitions() {
    static const std::vector<Partition> all{Partition::p4, Partition::p31, Partition::p22, Partition::p211};
    return all;
}

std::string example_gauge_json(Partition p) {
    const char* head = R"({
  "marked": "1",
  "edges": [{"src": "2", "dst": "1"}, {"src": "3", "dst": "2"}],
)";
    std::string body;
    switch (p) {
    case Partition::p4:
        body = R"(  "gauge_nodes": [{"id": "1", "dim": 1}, {"id": "2", "dim": 2}, {"id": "3", "dim": 3}],
  "flavor_nodes": [{"id": "f", "dim": 4, "attached_to": "3"}]
})";
        break;
    case Partition::p31:
        body = R"(  "gauge_nodes": [{"id": "1", "dim": 1}, {"id": "2", "dim": 2}, {"id": "3", "dim": 2}],
  "flavor_nodes": [{"id": "f2", "dim": 1, "attached_to": "2"}, {"id": "f3", "dim": 2, "attached_to": "3"}]
})";
        break;
    case Partition::p22:
        body = R"(  "gauge_nodes": [{"id": "1", "dim": 1}, {"id": "2", "dim": 2}, {"id": "3", "dim": 1}],
  "flavor_nodes": [{"id": "f", "dim": 2, "attached_to": "2"}]
})";
        break;
    case Partition::p211:
        body = R"(  "gauge_nodes": [{"id": "1", "dim": 1}, {"id": "2", "dim": 1}, {"id": "3", "dim": 1}],
  "flavor_nodes": [{"id": "f1", "dim": 1, "attached_to": "1"}, {"id": "f3", "dim": 1, "attached_to": "3"}]
})";
        break;
    }
    return head + body + "\n";
}

GaugeQuiver example_gauge_quiver(Partition p) {
    return parse_gauge_quiver(example_gauge_json(p));
}

namespace {

std::vector<std::pair<int, int>> with_doubles(std::vector<std::pair<int, int>> single,
                                              const std::vector<std::pair<int, int>>& doubles) {
    for (const auto& a : doubles) {
        single.push_back(a);
        single.push_back(a);
    }
    return single;
}

}  // namespace

FigureQuiver figure_quiver(Partition p) {
    switch (p) {
    case Partition::p4:
        return {16,
                {1, 2, 6, 12},
                with_doubles({{3, 2}, {3, 4}, {5, 3}, {5, 6}, {6, 3}, {7, 4}, {5, 7}, {1, 2}, {7, 8}, {9, 7}, {9, 10},
                              {11, 8}, {9, 12}, {13, 10}, {11, 13}, {14, 10}, {11, 14}, {15, 10}, {11, 15}, {16, 10},
                              {11, 16}, {12, 7}},
                             {{4, 5}, {8, 9}, {10, 11}})};
    case Partition::p31:
        return {13,
                {1, 2, 6, 11},
                with_doubles({{3, 2}, {3, 4}, {5, 3}, {5, 6}, {6, 3}, {7, 4}, {5, 7}, {8, 4}, {5, 8}, {1, 2}, {10, 8},
                              {8, 9}, {10, 11}, {12, 9}, {10, 12}, {11, 8}, {13, 9}, {10, 13}},
                             {{4, 5}, {9, 10}})};
    case Partition::p22:
        return {10,
                {1, 2, 6, 10},
                with_doubles({{3, 2}, {3, 4}, {5, 3}, {5, 6}, {7, 4}, {5, 7}, {6, 3}, {8, 4}, {5, 8}, {9, 4}, {5, 9},
                              {10, 9}, {1, 2}},
                             {{4, 5}})};
    case Partition::p211:
        return {8, {1, 2, 5, 7}, {{3, 2}, {4, 2}, {5, 4}, {6, 5}, {7, 6}, {1, 2}, {8, 7}}};
    }
    throw UnknownPartition("unknown partition");
}

HalfIntMatrix figure_exchange_matrix(const FigureQuiver& f) {
    HalfIntMatrix m{IntMatrix(f.vertices, std::vector<int>(f.vertices, 0))};
    for (const auto& [a, b] : f.arrows) {
        m.twice[a - 1][b - 1] += 2;
        m.twice[b - 1][a - 1] -= 2;
    }
    return m;
}

namespace {

// Builder for vectors in the drawn 1-based vertex numbering.
struct Vec {
    const Seed& s;
    LVec operator()(std::initializer_list<std::pair<int, int>> c) const {
        std::vector<std::pair<int, int>> z;
        for (const auto& [v, k] : c) z.emplace_back(v - 1, k);
        return seed_vector(s, z);
    }
    LVec e(int v) const { return (*this)({{v, 1}}); }
    std::vector<LVec> es(std::initializer_list<int> vs) const {
        std::vector<LVec> out;
        for (int v : vs) out.push_back(e(v));
        return out;
    }
};

QCoeff q(int e) {
    return QCoeff::q_power(e);
}

TorusElement mono(const LVec& l, const QCoeff& c = 1) {
    return TorusElement::monomial(l, c);
}

TorusElement subset_range(const LVec& l, const std::vector<LVec>& vs, int kmax) {
    TorusElement out(static_cast<int>(l.size()));
    for (int k = 0; k <= kmax; ++k) out += subset_sum(l, vs, k);
    return out;
}

CatalogEntry entry(const std::string& name, const std::string& node, int m, const QCoeff& scale,
                   TorusElement image) {
    return {name, name[0] == 'E', node, m, scale, std::move(image)};
}

}  // namespace

std::vector<CatalogEntry> example_catalog(Partition p, const Seed& s) {
    const Vec V{s};
    std::vector<CatalogEntry> out;
    switch (p) {
    case Partition::p4: {
        out.push_back(entry("E1", "1", -1, 1, mono(V.e(2), q(3))));
        out.push_back(entry("E2", "2", -2, 1, chain_sum(V.e(6), V.es({3})).scaled(q(4))));
        out.push_back(entry("E3", "3", -3, 1, chain_sum(V.e(12), V.es({7, 5, 4, 7, 9})).scaled(q(5))));
        out.push_back(entry("F1", "1", -1, q(-1), chain_sum(V({{2, -1}}), V.es({3, 5, 4, 3})).scaled(q(1))));
        TorusElement f2 = chain_sum(V({{4, -1}, {5, -1}, {6, -1}}), V.es({5, 7, 9, 8, 11, 10}));
        f2 += chain_sum(V({{4, -1}, {5, -2}, {6, -1}, {7, -2}, {8, -1}, {9, -1}, {11, -1}}), V.es({10, 9, 8, 7, 4}));
        out.push_back(entry("F2", "2", -1, -1, f2));
        const LVec bar = V({{8, -2}, {9, -2}, {10, -1}, {11, -1}, {12, -1}});
        const LVec a = lv_add(bar, V({{8, -1}, {10, -1}, {11, -1}}));
        const LVec b = lv_add(bar, V({{8, -1}, {10, -2}, {11, -1}}));
        const auto J = V.es({13, 14, 15, 16});
        TorusElement f3 = chain_sum(bar, V.es({8, 11}));
        f3 += mono(a, q(1) + q(-1));
        f3 += mono(b);
        f3 += subset_sum(a, J, 1);
        f3 += subset_range(b, J, 4);
        out.push_back(entry("F3", "3", -1, q(1), f3));
        break;
    }
    case Partition::p31: {
        out.push_back(entry("E1", "1", -1, 1, mono(V.e(2), q(3))));
        out.push_back(entry("E2", "2", -2, 1, chain_sum(V.e(6), V.es({3})).scaled(q(4))));
        out.push_back(entry("E3", "3", -2, 1, chain_sum(V.e(11), V.es({8, 5, 4, 8, 10})).scaled(q(4))));
        out.push_back(entry("F1", "1", -1, q(-1), chain_sum(V({{2, -1}}), V.es({3, 5, 4, 3}))));
        TorusElement f2 = chain_sum(V({{4, -1}, {5, -1}, {6, -1}}), V.es({5, 7, 8, 10, 9}));
        f2 += chain_sum(V({{4, -1}, {5, -2}, {6, -1}, {8, -1}}), V.es({10, 9, 8, 7, 4}));
        out.push_back(entry("F2", "2", -1, -1, f2));
        out.push_back(entry("F3", "3", -1, -1, subset_range(V({{9, -1}, {11, -1}}), V.es({12, 13}), 2)));
        break;
    }
    case Partition::p22: {
        out.push_back(entry("E1", "1", -1, 1, mono(V.e(2), q(3))));
        out.push_back(entry("E2", "2", -2, 1, chain_sum(V.e(6), V.es({3})).scaled(q(4))));
        out.push_back(entry("E3", "3", -1, 1, chain_sum(V.e(10), V.es({9, 5, 4, 9})).scaled(q(3))));
        out.push_back(entry("F1", "1", -1, q(-1), chain_sum(V({{2, -1}}), V.es({3, 5, 4, 3}))));
        const LVec c = V({{4, -1}, {5, -2}, {6, -1}});
        TorusElement f2 = mono(V({{4, -1}, {5, -1}, {6, -1}}));
        f2 += mono(V({{4, -2}, {5, -2}, {6, -1}, {7, -1}, {8, -1}}));
        f2 += subset_range(lv_add(c, V({{9, -1}})), V.es({7, 8}), 2);
        f2 += subset_range(c, V.es({7, 8}), 2);
        out.push_back(entry("F2", "2", -1, -1, f2));
        out.push_back(entry("F3", "3", -1, q(-1), mono(V({{10, -1}}))));
        break;
    }
    case Partition::p211: {
        out.push_back(entry("E1", "1", -1, 1, mono(V.e(2), q(3))));
        out.push_back(entry("E2", "2", -1, 1, mono(V.e(5), q(3))));
        out.push_back(entry("E3", "3", -1, 1, mono(V.e(7), q(3))));
        out.push_back(entry("F1", "1", -1, 1, chain_sum(V({{2, -1}}), V.es({3})).scaled(q(1))));
        out.push_back(entry("F2", "2", -1, 1, mono(V({{5, -1}}), q(1))));
        out.push_back(entry("F3", "3", -1, 1, chain_sum(V({{7, -1}}), V.es({8})).scaled(q(1))));
        break;
    }
    }
    return out;
}

DiffOp catalog_operator(const GaugeQuiver& g, const CatalogEntry& e) {
    const DiffOp op = e.is_e ? monopole_E(g, e.node, e.m) : monopole_F(g, e.node, e.m);
    const RationalFn scale = LaurentPoly::constant(e.op_scale);
    return sigma_twist(op, g).map_coeffs([&](const RationalFn& c) { return scale * c; });
}

}  // namespace qcluster
