#include "qcluster/monopole.hpp"

#include "qcluster/errors.hpp"

namespace qcluster {

namespace {

LaurentPoly var(const std::string& name, int power = 1) {
    return LaurentPoly::variable(name, power);
}

LaurentPoly one() {
    return LaurentPoly::constant(1);
}

// 1 - c * num / den
LaurentPoly one_minus(const QCoeff& c, const LaurentPoly& num, const std::string& den) {
    return one() - (num * var(den, -1)).scaled(c);
}

LaurentPoly u_factor(const GaugeQuiver& g, int edge) {
    const std::string u = g.u_var(edge);
    return u.empty() ? one() : var(u);
}

}  // namespace

std::vector<std::string> w_vars(const GaugeQuiver& g, const std::string& node) {
    std::vector<std::string> out;
    for (int r = 1; r <= g.dim(node); ++r) out.push_back(GaugeQuiver::w(node, r));
    return out;
}

std::vector<std::vector<std::string>> w_groups(const GaugeQuiver& g) {
    std::vector<std::vector<std::string>> out;
    for (const auto& n : g.gauge_nodes) out.push_back(w_vars(g, n.id));
    return out;
}

DiffOp monopole_E(const GaugeQuiver& g, const std::string& node, int m) {
    const int di = g.dim(node);
    DiffOp out;
    for (int r = 1; r <= di; ++r) {
        const std::string wr = GaugeQuiver::w(node, r);
        LaurentPoly num = var(wr, m);
        LaurentPoly den = one();
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            if (g.edges[e].src != node) continue;
            const std::string& j = g.edges[e].dst;
            const LaurentPoly uw = u_factor(g, static_cast<int>(e)) * var(wr);
            for (int s = 1; s <= g.dim(j); ++s) num = num * one_minus(QCoeff::v_power(2), uw, GaugeQuiver::w(j, s));
        }
        for (int s = 1; s <= di; ++s)
            if (s != r) den = den * one_minus(1, var(GaugeQuiver::w(node, s)), wr);
        out.add_term(RationalFn(num, den), {{wr, 1}});
    }
    return out;
}

DiffOp monopole_F(const GaugeQuiver& g, const std::string& node, int m) {
    const int di = g.dim(node);
    DiffOp out;
    for (int r = 1; r <= di; ++r) {
        const std::string wr = GaugeQuiver::w(node, r);
        LaurentPoly num = var(wr, m).scaled(QCoeff::q_power(-2 * m));
        LaurentPoly den = one();
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            if (g.edges[e].dst != node) continue;
            const std::string& j = g.edges[e].src;
            const LaurentPoly u = u_factor(g, static_cast<int>(e));
            for (int s = 1; s <= g.dim(j); ++s)
                num = num * one_minus(QCoeff::v_power(2), u * var(GaugeQuiver::w(j, s)), wr);
        }
        for (const auto& z : g.flavor_vars(node)) num = num * one_minus(QCoeff::v_power(2), var(z), wr);
        for (int s = 1; s <= di; ++s)
            if (s != r) den = den * one_minus(1, var(wr), GaugeQuiver::w(node, s));
        out.add_term(RationalFn(num, den), {{wr, -1}});
    }
    return out;
}

DiffOp sigma_twist(const DiffOp& op, const GaugeQuiver& g) {
    if (g.coloring.size() != g.gauge_nodes.size()) throw MissingColoring("sigma needs a 2-coloring");
    std::vector<std::string> flip;
    for (const auto& n : g.gauge_nodes) {
        if (g.coloring.at(n.id) != Color::black) continue;
        for (const auto& w : w_vars(g, n.id)) flip.push_back(w);
        for (const auto& z : g.flavor_vars(n.id)) flip.push_back(z);
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.in_tree(static_cast<int>(e))) continue;
        if (g.coloring.at(g.edges[e].src) == g.coloring.at(g.edges[e].dst)) flip.push_back(g.u_var(static_cast<int>(e)));
    }
    return op.map_coeffs([&flip](const RationalFn& c) {
        RationalFn out = c;
        for (const auto& v : flip) out = out.negate_variable(v);
        return out;
    });
}

DiffOp multiplication_e(const GaugeQuiver& g, const std::string& node, int k) {
    return DiffOp::scalar(RationalFn(elementary_symmetric(w_vars(g, node), k)));
}

}  // namespace qcluster
