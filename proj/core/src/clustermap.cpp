#include "qcluster/clustermap.hpp"

#include "qcluster/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <random>
#include <thread>

namespace qcluster {

std::string ClusterVertex::name() const {
    switch (role) {
    case VertexRole::base:
        return "base";
    case VertexRole::frozen_y0:
        return "y0[" + node + "]";
    case VertexRole::coxeter:
        return "y" + std::to_string(index) + "[" + node + "]";
    case VertexRole::arrow:
        return "arrow[" + std::to_string(edge) + "]";
    case VertexRole::flavor:
        return "flavor[" + z + "]";
    }
    return "";
}

FlavorConvention parse_flavor_convention(const std::string& s) {
    if (s == "text") return FlavorConvention::text;
    if (s == "figures") return FlavorConvention::figures;
    throw UnknownKind("flavor convention must be text or figures");
}

int ClusterSeed::y(const std::string& node, int r) const {
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const auto& cv = vertices[v];
        if (cv.node != node) continue;
        if (r == 0 && cv.role == VertexRole::frozen_y0) return static_cast<int>(v);
        if (r > 0 && cv.role == VertexRole::coxeter && cv.index == r) return static_cast<int>(v);
    }
    throw IndexOutOfRange("no vertex y" + std::to_string(r) + " at node " + node);
}

int ClusterSeed::arrow(int edge) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].role == VertexRole::arrow && vertices[v].edge == edge) return static_cast<int>(v);
    throw IndexOutOfRange("no arrow vertex for edge " + std::to_string(edge));
}

int ClusterSeed::base() const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].role == VertexRole::base) return static_cast<int>(v);
    throw IndexOutOfRange("no base vertex");
}

int ClusterSeed::flavor(const std::string& z) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].role == VertexRole::flavor && vertices[v].z == z) return static_cast<int>(v);
    throw IndexOutOfRange("no flavor vertex " + z);
}

std::vector<int> ClusterSeed::mutable_vertices() const {
    std::vector<int> out;
    for (std::size_t v = 0; v < seed.size(); ++v)
        if (!seed.is_frozen(static_cast<int>(v))) out.push_back(static_cast<int>(v));
    return out;
}

int expected_vertex_count(const GaugeQuiver& g) {
    return 2 * g.dim_v() + g.dim_w() + 1 - g.euler_characteristic();
}

namespace {

std::string xs(const std::string& i, int r) {
    return "x[" + i + "," + std::to_string(r) + "]";
}

std::string ps(const std::string& i, int r) {
    return "p[" + i + "," + std::to_string(r) + "]";
}

std::vector<int> bfs_order(const GaugeQuiver& g) {
    const std::size_t n = g.gauge_nodes.size();
    std::vector<bool> seen(n, false);
    std::vector<int> order;
    const int root = g.node_index(g.marked);
    seen[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (const auto& e : g.edges) {
            const int a = g.node_index(e.src), b = g.node_index(e.dst);
            int w = -1;
            if (a == u) w = b;
            if (b == u) w = a;
            if (w < 0 || seen[w]) continue;
            seen[w] = true;
            queue.push_back(w);
        }
    }
    if (order.size() != n) throw DisconnectedGraph("gauge subgraph is not connected");
    return order;
}

}  // namespace

ClusterSeed build_cluster_seed(const GaugeQuiver& g, FlavorConvention conv) {
    auto sp = std::make_shared<SymbolSpace>();
    for (const auto& n : g.gauge_nodes)
        for (int r = 1; r <= n.dim; ++r) sp->add_pair(xs(n.id, r), ps(n.id, r));
    for (std::size_t f = 0; f < g.flavor_nodes.size(); ++f)
        for (const auto& z : g.flavor_vars_of(f)) sp->add(z, SymbolKind::central_z);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const std::string u = g.u_var(static_cast<int>(e));
        if (!u.empty()) sp->add(u, SymbolKind::central_u);
    }

    ClusterSeed cs;
    cs.quiver = g;
    std::vector<SymbolVector> labels;
    std::set<int> frozen;
    auto push = [&](ClusterVertex v, SymbolVector l, bool fz) {
        if (fz) frozen.insert(static_cast<int>(labels.size()));
        cs.vertices.push_back(std::move(v));
        labels.push_back(std::move(l));
    };

    const std::string& k = g.marked;
    push({VertexRole::base, "", 0, -1, ""}, sp->basis(ps(k, g.dim(k))), true);

    std::vector<bool> placed(g.gauge_nodes.size(), false);
    for (int ni : bfs_order(g)) {
        const std::string& i = g.gauge_nodes[ni].id;
        const int d = g.gauge_nodes[ni].dim;
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const auto& ed = g.edges[e];
            const std::string other = ed.src == i ? ed.dst : (ed.dst == i ? ed.src : "");
            if (other.empty() || !placed[g.node_index(other)]) continue;
            push({VertexRole::arrow, "", 0, static_cast<int>(e), ""},
                 sp->vec({{ps(ed.dst, g.dim(ed.dst)), 1}, {ps(ed.src, 1), -1}}), false);
        }
        for (int j = 1; j < d; ++j) {
            push({VertexRole::coxeter, i, 2 * j, -1, ""}, sp->vec({{xs(i, j + 1), 1}, {xs(i, j), -1}}), false);
            push({VertexRole::coxeter, i, 2 * j - 1, -1, ""},
                 sp->vec({{ps(i, j), 1}, {ps(i, j + 1), -1}, {xs(i, j), 1}, {xs(i, j + 1), -1}}), false);
        }
        SymbolVector y0 = sp->basis(xs(i, 1));
        for (int r = 1; r <= d; ++r) y0[sp->index(ps(i, r))] -= 1;
        push({VertexRole::frozen_y0, i, 0, -1, ""}, y0, true);
        for (const auto& z : g.flavor_vars(i)) {
            SymbolVector l = conv == FlavorConvention::text ? sp->vec({{ps(i, d), 1}, {z, -1}})
                                                            : sp->vec({{z, 1}, {ps(i, 1), -1}});
            push({VertexRole::flavor, i, 0, -1, z}, l, false);
        }
        placed[ni] = true;
    }
    if (static_cast<int>(labels.size()) != expected_vertex_count(g))
        throw CountMismatch("cluster quiver has " + std::to_string(labels.size()) + " vertices, expected " +
                            std::to_string(expected_vertex_count(g)));
    cs.seed = seed_from_vertex_labels(sp, labels, frozen);
    return cs;
}

LoopGraph loop_graph(const ClusterSeed& cs) {
    const GaugeQuiver& g = cs.quiver;
    LoopGraph lg;
    const int glue = static_cast<int>(g.gauge_nodes.size());
    lg.num_nodes = glue + 1;
    lg.basepoint = glue;
    lg.num_label_vertices = static_cast<int>(cs.seed.size());
    lg.node_vertices.resize(lg.num_nodes);
    for (std::size_t v = 0; v < cs.vertices.size(); ++v)
        if (cs.vertices[v].role == VertexRole::coxeter)
            lg.node_vertices[g.node_index(cs.vertices[v].node)].push_back(static_cast<int>(v));
    lg.edges.push_back({glue, g.node_index(g.marked), cs.base()});
    for (const auto& n : g.gauge_nodes)
        for (const auto& z : g.flavor_vars(n.id)) lg.edges.push_back({glue, g.node_index(n.id), cs.flavor(z)});
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        lg.edges.push_back({g.node_index(g.edges[e].src), g.node_index(g.edges[e].dst), cs.arrow(static_cast<int>(e))});
    return lg;
}

MonopoleImage sink_image_E(const ClusterSeed& cs, const std::string& node, int m) {
    const GaugeQuiver& g = cs.quiver;
    for (const auto& e : g.edges)
        if (e.src == node) throw NotASink("node " + node + " has an outgoing gauge arrow");
    const int d = g.dim(node);
    MonopoleImage out;
    out.prefactor = QCoeff::q_power(-(2 * (d - 1) + m));
    out.dehn_power = -d - m;
    out.elem = TorusElement::monomial(seed_vector(cs.seed, {{cs.y(node, 0), 1}}));
    return out;
}

MonopoleImage source_image_F(const ClusterSeed& cs, const std::string& node, int m) {
    const GaugeQuiver& g = cs.quiver;
    for (const auto& e : g.edges)
        if (e.dst == node) throw HasIncomingGaugeArrow("node " + node + " has an incoming gauge arrow");
    const int d = g.dim(node);
    MonopoleImage out;
    out.prefactor = QCoeff::q_power(-(m + d - 1), (d - 1) % 2 == 0 ? 1 : -1);
    out.dehn_power = m - d;
    std::vector<std::pair<int, int>> coeffs{{cs.y(node, 0), -1}};
    for (int r = 2; r <= 2 * d - 2; r += 2) coeffs.emplace_back(cs.y(node, r), -1);
    out.elem = TorusElement::monomial(seed_vector(cs.seed, coeffs));
    for (const auto& z : g.flavor_vars(node)) out.baxter_factors.push_back("Q_" + node + "(" + z + ")");
    return out;
}

namespace {

// Cluster vertex carrying glued index z for edge src -> dst (x-side = src).
int glued_vertex(const ClusterSeed& cs, int edge, const std::string& src, const std::string& dst, int z) {
    const int n = cs.quiver.dim(dst);
    if (z == 0) return cs.arrow(edge);
    if (z > 0) return cs.y(src, z);
    // -2k -> y_{2n-2k}, -2k+1 -> y_{2n-2k-1}
    return cs.y(dst, 2 * n + z - (z % 2 != 0 ? 2 : 0));
}

}  // namespace

ReverseArrow reverse_arrow(const ClusterSeed& cs, int edge) {
    const GaugeQuiver& g = cs.quiver;
    if (edge < 0 || edge >= static_cast<int>(g.edges.size())) throw NotGaugeEdge("no gauge edge " + std::to_string(edge));
    const std::string i = g.edges[edge].src, j = g.edges[edge].dst;
    const int m = g.dim(i), n = g.dim(j);

    ReverseArrow out;
    out.reversed = reverse_edge(g, edge);
    const ClusterSeed target = build_cluster_seed(out.reversed);

    for (int z : bifund_order(m, n)) out.seq.steps.push_back(glued_vertex(cs, edge, i, j, z));
    std::vector<int> perm(cs.seed.size());
    for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = static_cast<int>(v);
    for (int z = -2 * (n - 1); z <= 2 * (m - 1); ++z)
        perm[glued_vertex(cs, edge, i, j, z)] = glued_vertex(target, edge, j, i, bifund_renumber(m, n, z));
    out.seq.post_permutation = perm;

    const Seed after = mutate_sequence(cs.seed, out.seq);
    const SymbolSpace& sp = *cs.seed.symbols;
    const std::string inputs = "edge=" + std::to_string(edge) + ",m=" + std::to_string(m) + ",n=" + std::to_string(n);

    SymbolVector arrow_expect = sp.vec({{ps(i, m), 1}, {ps(j, 1), -1}});
    const SymbolVector arrow_got = after.label(target.arrow(edge));
    out.checks.push_back({"reverse_arrow.arrow_label", inputs, arrow_got == arrow_expect, sp.render(arrow_got),
                          sp.render(arrow_expect), ""});

    SymbolVector y0_expect = sp.basis(xs(i, 1));
    for (int r = 1; r <= n; ++r) y0_expect[sp.index(ps(j, r))] += 1;
    for (int r = 1; r <= m; ++r) y0_expect[sp.index(ps(i, r))] -= 1;
    y0_expect[sp.index(ps(i, 1))] -= n;
    const SymbolVector y0_got = after.label(target.y(i, 0));
    out.checks.push_back({"reverse_arrow.frozen_label", inputs, y0_got == y0_expect, sp.render(y0_got),
                          sp.render(y0_expect), ""});

    // Mutable labels coincide with the construction for the reversed quiver.
    CheckReport mut{"reverse_arrow.mutable_labels", inputs, true, "", "", ""};
    for (int v : target.mutable_vertices()) {
        if (after.label(v) == target.seed.label(v)) continue;
        mut.pass = false;
        mut.lhs += target.vertices[v].name() + "=" + sp.render(after.label(v)) + "; ";
        mut.rhs += target.vertices[v].name() + "=" + sp.render(target.seed.label(v)) + "; ";
    }
    out.checks.push_back(mut);

    const HalfIntMatrix ea = exchange_matrix(after), eb = exchange_matrix(target.seed);
    CheckReport mx{"reverse_arrow.mutable_exchange", inputs, true, "", "", ""};
    for (int a : target.mutable_vertices())
        for (int b : target.mutable_vertices())
            if (ea.twice[a][b] != eb.twice[a][b]) {
                mx.pass = false;
                mx.witness = target.vertices[a].name() + "," + target.vertices[b].name();
            }
    out.checks.push_back(mx);
    return out;
}

int default_threads() {
    if (const char* env = std::getenv("COULOMB_CLUSTER_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

LaurentReport verify_universally_laurent(const TorusElement& elem, const Seed& s, int depth, int trials,
                                         std::uint64_t rng_seed, int threads) {
    std::vector<int> mut;
    for (std::size_t v = 0; v < s.size(); ++v)
        if (!s.is_frozen(static_cast<int>(v))) mut.push_back(static_cast<int>(v));

    LaurentReport rep;
    rep.trials = trials;
    if (mut.empty() || trials <= 0) return rep;

    std::mutex lock;
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int t = next++; t < trials; t = next++) {
            std::seed_seq sq{static_cast<std::uint32_t>(rng_seed), static_cast<std::uint32_t>(rng_seed >> 32),
                             static_cast<std::uint32_t>(t)};
            std::mt19937_64 rng(sq);
            std::uniform_int_distribution<std::size_t> pick(0, mut.size() - 1);
            Seed cur = s;
            TorusElement x = elem;
            std::vector<int> path;
            int last = -1;
            for (int step = 0; step < depth; ++step) {
                int k = mut[pick(rng)];
                if (mut.size() > 1)
                    while (k == last) k = mut[pick(rng)];
                path.push_back(k);
                auto y = mutate_element(x, cur, k);
                if (!y) {
                    std::lock_guard<std::mutex> g(lock);
                    if (rep.pass || t < rep.failing_trial) {
                        rep.pass = false;
                        rep.failing_trial = t;
                        rep.failing_sequence = path;
                    }
                    break;
                }
                x = std::move(*y);
                cur = mutate_seed(cur, k);
                last = k;
            }
        }
    };
    const int nthreads = std::max(1, std::min(threads, trials));
    std::vector<std::thread> pool;
    for (int w = 1; w < nthreads; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return rep;
}

std::vector<CheckReport> verify_commutation_transport(Partition p) {
    const GaugeQuiver g = example_gauge_quiver(p);
    const ClusterSeed cs = build_cluster_seed(g);
    const auto cat = example_catalog(p, cs.seed);
    std::vector<DiffOp> ops;
    for (const auto& e : cat) ops.push_back(catalog_operator(g, e));
    std::vector<CheckReport> out;
    for (std::size_t a = 0; a < cat.size(); ++a)
        for (std::size_t b = a + 1; b < cat.size(); ++b) {
            const std::string inputs = partition_name(p) + ":" + cat[a].name + "," + cat[b].name;
            if (!do_commutator(ops[a], ops[b]).is_zero()) {
                out.push_back({"transport.skip", inputs, true, "", "", "operators do not commute"});
                continue;
            }
            const TorusElement c = te_commutator(cat[a].image, cat[b].image, cs.seed.form2);
            out.push_back({"transport.commute", inputs, c.is_zero(), c.str_in_chart(cs.seed), "0", ""});
        }
    return out;
}

}  // namespace qcluster
