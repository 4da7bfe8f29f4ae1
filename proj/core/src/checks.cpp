#include "qcluster/checks.hpp"

#include "qcluster/errors.hpp"

#include <functional>
#include <sstream>

namespace qcluster {

HalfIntMatrix coxeter_definition_matrix(int n) {
    if (n < 2) throw RankTooSmall("coxeter quiver needs n >= 2");
    HalfIntMatrix m{IntMatrix(2 * n, std::vector<int>(2 * n, 0))};
    auto arrow = [&m](int a, int b, int k) {
        m.twice[a][b] += 2 * k;
        m.twice[b][a] -= 2 * k;
    };
    for (int k = 1; k <= n - 1; ++k) arrow(2 * k, 2 * k - 1, 2);
    for (int k = 1; k <= n; ++k) arrow(2 * k - 1, 2 * k - 2, 1);
    for (int k = 1; k <= n - 2; ++k) arrow(2 * k - 1, 2 * k + 2, 1);
    arrow(0, 2, 1);
    arrow(2 * n - 3, 2 * n - 1, 1);
    return m;
}

namespace {

std::string matrix_str(const HalfIntMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ";" : "");
        for (std::size_t j = 0; j < m.size(); ++j) os << (j ? " " : "") << m.twice[i][j];
    }
    return os.str();
}

std::string first_difference(const HalfIntMatrix& a, const HalfIntMatrix& b) {
    if (a.size() != b.size()) return "size " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a.twice[i][j] != b.twice[i][j])
                return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " +
                       std::to_string(a.twice[i][j]) + " vs " + std::to_string(b.twice[i][j]) + " (doubled)";
    return "";
}

CheckReport matrix_check(const std::string& id, const std::string& inputs, const HalfIntMatrix& got,
                         const HalfIntMatrix& want) {
    const std::string diff = first_difference(got, want);
    CheckReport r{id, inputs, diff.empty(), "", "", diff};
    if (!r.pass) {
        r.lhs = matrix_str(got);
        r.rhs = matrix_str(want);
    }
    return r;
}

// Relabel a symbol vector between spaces by exchanging x/y and p/q.
SymbolVector swap_sides(const SymbolSpace& from, const SymbolSpace& to, const SymbolVector& v) {
    SymbolVector out = to.zero();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        std::string name = from.name(static_cast<int>(i));
        switch (name[0]) {
        case 'x':
            name[0] = 'y';
            break;
        case 'y':
            name[0] = 'x';
            break;
        case 'p':
            name[0] = 'q';
            break;
        case 'q':
            name[0] = 'p';
            break;
        }
        out[to.index(name)] += v[i];
    }
    return out;
}

}  // namespace

std::vector<CheckReport> verify_coxeter(int n) {
    const Seed s = build_coxeter(n);
    return {matrix_check("coxeter.definition", "n=" + std::to_string(n), exchange_matrix(s),
                         coxeter_definition_matrix(n))};
}

std::vector<CheckReport> verify_bifund(int m, int n) {
    const std::string inputs = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
    const Seed start = build_glued(m, n);
    const Seed target = build_glued(n, m);
    const Seed after = mutate_sequence(start, bifund_sequence(m, n));
    std::vector<CheckReport> out;
    out.push_back(matrix_check("bifund.exchange", inputs, exchange_matrix(after), exchange_matrix(target)));

    CheckReport lab{"bifund.labels", inputs, true, "", "", ""};
    for (std::size_t v = 0; v < after.size(); ++v) {
        const SymbolVector want = swap_sides(*target.symbols, *start.symbols, target.label(static_cast<int>(v)));
        const SymbolVector got = after.label(static_cast<int>(v));
        if (got == want) continue;
        lab.pass = false;
        lab.witness = "vertex " + std::to_string(v);
        lab.lhs = start.symbols->render(got);
        lab.rhs = start.symbols->render(want);
        break;
    }
    out.push_back(lab);
    return out;
}

std::vector<CheckReport> verify_gauge(const GaugeQuiver& g, const std::string& inputs) {
    std::vector<CheckReport> out;
    ClusterSeed cs;
    try {
        cs = build_cluster_seed(g);
    } catch (const CountMismatch& e) {
        out.push_back({"gauge.vertex_count", inputs, false, "", std::to_string(expected_vertex_count(g)), e.what()});
        return out;
    }
    const std::string count = std::to_string(cs.seed.size());
    out.push_back({"gauge.vertex_count", inputs, static_cast<int>(cs.seed.size()) == expected_vertex_count(g), count,
                   std::to_string(expected_vertex_count(g)), ""});

    const HalfIntMatrix eps = exchange_matrix(cs.seed);
    const int want_kernel = g.dim_w() + 1 - g.euler_characteristic();
    const auto kr = static_cast<int>(kernel_rank(eps));
    out.push_back({"gauge.kernel_rank", inputs, kr == want_kernel, std::to_string(kr), std::to_string(want_kernel), ""});

    // Loop classes lie in the kernel, carry central labels and span the kernel.
    const LoopGraph lg = loop_graph(cs);
    const auto labels = cs.seed.labels();
    CheckReport loops{"gauge.loop_classes", inputs, true, "", "", ""};
    RatMatrix rows;
    for (const auto& path : cycle_basis(lg)) {
        const LoopClass lc = loop_class(lg, path, cs.seed.symbols.get(), &labels);
        rows.emplace_back(lc.coeffs.begin(), lc.coeffs.end());
        for (std::size_t a = 0; a < eps.size() && loops.pass; ++a) {
            long long acc = 0;
            for (std::size_t b = 0; b < eps.size(); ++b) acc += static_cast<long long>(eps.twice[a][b]) * lc.coeffs[b];
            if (acc != 0) {
                loops.pass = false;
                loops.witness = "loop class not in the kernel at vertex " + std::to_string(a + 1);
            }
        }
        const SymbolSpace& sp = *cs.seed.symbols;
        for (std::size_t i = 0; i < lc.symbol.size() && loops.pass; ++i) {
            const SymbolKind k = sp.kind(static_cast<int>(i));
            if (lc.symbol[i] != 0 && (k == SymbolKind::position || k == SymbolKind::momentum)) {
                loops.pass = false;
                loops.witness = "loop label not central: " + sp.render(lc.symbol);
            }
        }
    }
    const auto lr = static_cast<int>(rows.empty() ? 0 : rational_rank(rows));
    if (loops.pass && lr != kr) {
        loops.pass = false;
        loops.witness = "loop classes span rank " + std::to_string(lr);
    }
    loops.lhs = std::to_string(rows.size()) + " loops";
    out.push_back(loops);

    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const ReverseArrow ra = reverse_arrow(cs, static_cast<int>(e));
        for (auto r : ra.checks) {
            r.inputs = inputs + "," + r.inputs;
            out.push_back(r);
        }
    }

    for (const auto& n : g.gauge_nodes) {
        bool sink = true;
        for (const auto& e : g.edges) sink = sink && e.src != n.id;
        if (!sink) continue;
        const MonopoleImage img = sink_image_E(cs, n.id, -1);
        const LaurentReport lr2 = verify_universally_laurent(img.elem, cs.seed, 6, 20, 1);
        out.push_back({"gauge.sink_laurent", inputs + ",node=" + n.id, lr2.pass, img.elem.str_in_chart(cs.seed), "", ""});
    }
    return out;
}

std::vector<CheckReport> verify_figure(Partition p) {
    const ClusterSeed cs = build_cluster_seed(example_gauge_quiver(p));
    const FigureQuiver f = figure_quiver(p);
    std::vector<CheckReport> out;
    out.push_back(matrix_check("figure.exchange", partition_name(p), exchange_matrix(cs.seed),
                               figure_exchange_matrix(f)));
    std::set<int> drawn;
    for (int v : f.frozen) drawn.insert(v - 1);
    out.push_back({"figure.frozen", partition_name(p), drawn == cs.seed.frozen, "", "", ""});
    return out;
}

std::vector<CheckReport> verify_catalog_laurent(Partition p, const FuzzOptions& opt) {
    const ClusterSeed cs = build_cluster_seed(example_gauge_quiver(p));
    std::vector<CheckReport> out;
    for (const auto& e : example_catalog(p, cs.seed)) {
        const LaurentReport r =
            verify_universally_laurent(e.image, cs.seed, opt.depth, opt.trials, opt.rng_seed, opt.threads);
        CheckReport rep{"catalog.laurent", partition_name(p) + ":" + e.name, r.pass, "", "", ""};
        if (!r.pass) {
            std::ostringstream os;
            os << "trial " << r.failing_trial << ", mutations";
            for (int k : r.failing_sequence) os << " " << k + 1;
            rep.witness = os.str();
        }
        out.push_back(rep);
    }
    // The sink node's E image is the catalog's E up to a scalar.
    for (const auto& e : example_catalog(p, cs.seed)) {
        if (!e.is_e || e.node != cs.quiver.marked) continue;
        const MonopoleImage img = sink_image_E(cs, e.node, e.m);
        const bool same = e.image.size() == 1 && img.elem.terms().begin()->first == e.image.terms().begin()->first;
        out.push_back({"catalog.sink_image", partition_name(p) + ":" + e.name, same, img.elem.str_in_chart(cs.seed),
                       e.image.str_in_chart(cs.seed), ""});
    }
    return out;
}

CheckReport laurent_negative_control(const FuzzOptions& opt) {
    Seed s;
    s.ambient_dim = 2;
    s.basis = {{1, 0}, {0, 1}};
    s.form2 = {{0, 2}, {-2, 0}};
    const TorusElement y1 = TorusElement::monomial({1, 0});
    const LaurentReport r = verify_universally_laurent(y1, s, opt.depth, opt.trials, opt.rng_seed, opt.threads);
    CheckReport rep{"laurent.negative_control", "eps12=1,Y(e1)", !r.pass, "", "", ""};
    if (!r.pass) {
        std::ostringstream os;
        os << "fails at mutations";
        for (int k : r.failing_sequence) os << " " << k + 1;
        rep.witness = os.str();
    }
    return rep;
}

std::vector<CheckReport> verify_monopole_algebra(Partition p) {
    const GaugeQuiver g = example_gauge_quiver(p);
    std::vector<CheckReport> out;
    const std::size_t nn = g.gauge_nodes.size();
    auto adjacent = [&g](const std::string& a, const std::string& b) {
        for (const auto& e : g.edges)
            if ((e.src == a && e.dst == b) || (e.src == b && e.dst == a)) return true;
        return false;
    };
    for (std::size_t a = 0; a < nn; ++a)
        for (std::size_t b = a + 1; b < nn; ++b) {
            const std::string& i = g.gauge_nodes[a].id;
            const std::string& j = g.gauge_nodes[b].id;
            if (adjacent(i, j)) continue;
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) {
                    const DiffOp A = x ? monopole_F(g, i, -1) : monopole_E(g, i, -1);
                    const DiffOp B = y ? monopole_F(g, j, -1) : monopole_E(g, j, -1);
                    const DiffOp c = do_commutator(A, B);
                    out.push_back({"monopole.commute",
                                   partition_name(p) + ":" + (x ? "F" : "E") + i + "," + (y ? "F" : "E") + j,
                                   c.is_zero(), c.is_zero() ? "0" : c.str(), "0", ""});
                }
        }

    const auto groups = w_groups(g);
    for (const auto& n : g.gauge_nodes) {
        const auto ws = w_vars(g, n.id);
        const std::vector<std::pair<std::string, LaurentPoly>> inputs{{"1", LaurentPoly::constant(1)},
                                                                      {"e1", elementary_symmetric(ws, 1)}};
        for (int m = -1; m <= 1; ++m)
            for (int f = 0; f < 2; ++f) {
                const DiffOp op = f ? monopole_F(g, n.id, m) : monopole_E(g, n.id, m);
                for (const auto& [fname, fn] : inputs) {
                    const auto r = act_symmetric(op, fn);
                    const bool ok = r && is_symmetric(*r, groups);
                    out.push_back({"monopole.symmetric_action",
                                   partition_name(p) + ":" + (f ? "F" : "E") + n.id + ",m=" + std::to_string(m) +
                                       ",f=" + fname,
                                   ok, r ? r->str() : "not Laurent", "", ""});
                }
            }
    }
    return out;
}

namespace {

LaurentPoly complete_homogeneous(const std::vector<std::string>& vars, int m) {
    if (m < 0) return LaurentPoly();
    LaurentPoly out;
    std::vector<int> e(vars.size(), 0);
    // Enumerate exponent vectors of total degree m.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == vars.size()) {
            e[i] = left;
            out += LaurentPoly::monomial(vars, e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, m);
    return out;
}

}  // namespace

std::vector<CheckReport> verify_partial_fractions(int d) {
    const GaugeQuiver g = parse_gauge_quiver(R"({"marked": "1", "gauge_nodes": [{"id": "1", "dim": )" +
                                             std::to_string(d) + "}]}");
    const auto ws = w_vars(g, "1");
    std::vector<CheckReport> out;
    for (int m = 0; m <= 2; ++m) {
        const auto r = act_symmetric(monopole_E(g, "1", m), LaurentPoly::constant(1));
        const LaurentPoly want = complete_homogeneous(ws, m);
        out.push_back({"monopole.partial_fractions", "d=" + std::to_string(d) + ",m=" + std::to_string(m),
                       r && *r == want, r ? r->str() : "not Laurent", want.str(), ""});
    }
    return out;
}

}  // namespace qcluster
