#include "qcluster/toda.hpp"

#include "qcluster/errors.hpp"

#include <string>

namespace qcluster {

namespace {

std::string sym(const char* s, int j) {
    return std::string(s) + "[" + std::to_string(j) + "]";
}

TorusElement y(const SymbolSpace& sp, std::initializer_list<std::pair<std::string, int>> terms, const QCoeff& c = 1) {
    return TorusElement::monomial(sp.vec(terms), c);
}

std::string in(int n, int k = -1) {
    return "n=" + std::to_string(n) + (k >= 0 ? ",k=" + std::to_string(k) : "");
}

std::vector<TorusElement> hamiltonian_row(int m, const SymbolSpace& sp, const IntMatrix& f2) {
    // rows[r][k] = H_k^{(r)}
    const int dim = static_cast<int>(sp.size());
    std::vector<std::vector<TorusElement>> rows;
    rows.push_back({TorusElement::one(dim)});
    for (int r = 0; r < m; ++r) {
        std::vector<TorusElement> next(r + 2, TorusElement(dim));
        const TorusElement pn = y(sp, {{sym("p", r + 1), 1}});
        for (int k = 0; k <= r + 1; ++k) {
            if (k <= r) next[k] += rows[r][k];
            if (k >= 1) next[k] += te_mul(pn, rows[r][k - 1], f2);
            if (k >= 1 && r >= 1 && k - 1 <= r - 1) {
                const TorusElement w = y(sp, {{sym("p", r + 1), 1}, {sym("x", r + 1), 1}, {sym("x", r), -1}});
                next[k] += te_mul(w, rows[r - 1][k - 1], f2);
            }
        }
        rows.push_back(std::move(next));
    }
    return rows[m];
}

}  // namespace

IntMatrix toda_form2(int n) {
    IntMatrix f = toda_space(n)->pairing_matrix();
    for (auto& row : f)
        for (auto& x : row) x *= 2;
    return f;
}

TorusElement hamiltonian(int n, int k, int m) {
    if (m < 0 || m > n) throw IndexOutOfRange("rank " + std::to_string(m));
    auto sp = toda_space(n);
    if (k < 0 || k > m) return TorusElement(static_cast<int>(sp->size()));
    return hamiltonian_row(m, *sp, toda_form2(n))[k];
}

std::vector<TorusElement> hamiltonians(int n) {
    auto sp = toda_space(n);
    return hamiltonian_row(n, *sp, toda_form2(n));
}

SymbolVector theta_vector(int n, const SymbolVector& a) {
    auto sp = toda_space(n);
    SymbolVector out = sp->zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const std::string& name = sp->name(static_cast<int>(i));
        std::string target;
        if (name == "specU") {
            target = "specV";
        } else if (name == "specV") {
            target = "specU";
        } else {
            const int j = std::stoi(name.substr(2, name.size() - 3));
            if (j == 0) throw std::invalid_argument("theta is not defined on index 0");
            target = name.substr(0, 2) + std::to_string(n + 1 - j) + "]";
        }
        out[sp->index(target)] -= a[i];
    }
    return out;
}

TorusElement theta(int n, const TorusElement& t) {
    TorusElement out(t.ambient_dim());
    for (const auto& [l, c] : t.terms()) out.add_term(theta_vector(n, l), c);
    return out;
}

TorusElement c_operator(int n, int k, CKind kind) {
    if (n < 1 || k < 1 || k > n) throw IndexOutOfRange("C operator index");
    auto sp = toda_space(n);
    const TorusElement plain = te_mul(y(*sp, {{sym("x", n), -1}}), hamiltonian(n, k - 1, n - 1), toda_form2(n));
    return kind == CKind::plain ? plain : theta(n, plain);
}

TorusElement frozen_expansion(int n) {
    auto sp = toda_space(n);
    const IntMatrix f2 = toda_form2(n);
    const auto hs = hamiltonians(n);
    TorusElement out(static_cast<int>(sp->size()));
    for (int k = 0; k <= n; ++k)
        out += te_mul(hs[k], y(*sp, {{"p[0]", 1}, {"x[0]", k}}), f2);
    return out;
}

MutationSeq frozen_trick_sequence(int n) {
    MutationSeq seq;
    seq.steps.push_back(augmented_a(n));
    for (int k = 1; k <= 2 * n - 2; ++k) seq.steps.push_back(k);
    return seq;
}

std::vector<SymbolVector> frozen_trick_labels(int n) {
    auto sp = toda_space(n);
    std::vector<SymbolVector> l(2 * n + 2);
    for (int k = 2; k <= n - 1; ++k)
        l[2 * k - 2] = sp->vec({{sym("p", k), 1}, {sym("p", k + 1), -1}, {sym("x", k), 1}, {sym("x", k + 1), -1}});
    for (int j = 1; j <= n - 1; ++j) l[2 * j - 1] = sp->vec({{sym("x", j + 1), 1}, {sym("x", j), -1}});
    l[2 * n - 2] = sp->vec({{sym("p", n), 1}, {"x[0]", 1}});
    l[2 * n - 1] = sp->vec({{sym("p", n), 1}, {"specV", 1}});
    l[0] = sp->vec({{"p[1]", -1}, {"specU", -1}});
    l[augmented_a(n)] = sp->vec({{"p[1]", 1}, {"p[2]", -1}, {"x[1]", 1}, {"x[2]", -1}});
    l[augmented_f(n)] = sp->basis("p[0]");
    return l;
}

std::vector<CheckReport> verify_frozen_trick(int n) {
    const Seed s = build_augmented_coxeter(n);
    auto sp = s.symbols;
    const TorusElement xf = TorusElement::monomial(sp->basis("p[0]"));
    const SequenceResult r = apply_sequence(xf, s, frozen_trick_sequence(n));

    std::vector<CheckReport> out;
    CheckReport expansion{"frozen_trick.expansion", in(n), false, "", "", ""};
    const TorusElement rhs = frozen_expansion(n);
    if (!r.element) {
        expansion.witness = "NotLaurent at step " + std::to_string(*r.failed_step);
    } else {
        expansion.pass = *r.element == rhs;
        expansion.lhs = r.element->str_labels(s);
    }
    expansion.rhs = rhs.str_labels(s);
    out.push_back(expansion);

    CheckReport labels{"frozen_trick.labels", in(n), true, "", "", ""};
    const auto expect = frozen_trick_labels(n);
    for (std::size_t v = 0; v < expect.size(); ++v) {
        const SymbolVector got = r.seed.label(static_cast<int>(v));
        if (got != expect[v]) {
            labels.pass = false;
            labels.lhs += "v" + std::to_string(v) + "=" + sp->render(got) + "; ";
            labels.rhs += "v" + std::to_string(v) + "=" + sp->render(expect[v]) + "; ";
        }
    }
    out.push_back(labels);
    return out;
}

std::vector<CheckReport> verify_dehn_invariance(int n) {
    // H_k Y(k specU) lies in the span of the quiver labels; the central
    // factor does not affect the mutation.
    const Seed s = build_coxeter(n);
    auto sp = s.symbols;
    const IntMatrix f2 = toda_form2(n);
    const auto hs = hamiltonians(n);
    const MutationSeq seq = standard_sequence(SequenceKind::dehn, n);
    std::vector<CheckReport> out;
    for (int k = 0; k <= n; ++k) {
        const TorusElement h = te_mul(hs[k], y(*sp, {{"specU", k}}), f2);
        CheckReport rep{"dehn.invariance", in(n, k), false, "", h.str_labels(s), ""};
        const SequenceResult r = apply_sequence(h, s, seq);
        if (!r.element) {
            rep.witness = "NotLaurent at step " + std::to_string(*r.failed_step);
        } else {
            rep.pass = *r.element == h;
            rep.lhs = r.element->str_labels(s);
        }
        out.push_back(rep);
    }
    return out;
}

std::vector<CheckReport> verify_commutativity(int n) {
    const IntMatrix f2 = toda_form2(n);
    const auto hs = hamiltonians(n);
    auto sp = toda_space(n);
    std::vector<CheckReport> out;
    for (int k = 0; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            const TorusElement c = te_commutator(hs[k], hs[l], f2);
            CheckReport rep{"toda.commute", in(n) + ",k=" + std::to_string(k) + ",l=" + std::to_string(l),
                            c.is_zero(), "", "0", ""};
            if (!rep.pass) rep.lhs = c.str();
            out.push_back(rep);
        }
    return out;
}

std::vector<CheckReport> verify_htilde(int n) {
    const IntMatrix f2 = toda_form2(n);
    const auto hs = hamiltonians(n);
    auto sp = toda_space(n);
    SymbolVector top = sp->zero();
    for (int j = 1; j <= n; ++j) top[sp->index(sym("p", j))] = -1;
    const TorusElement hn_inv = TorusElement::monomial(top);
    std::vector<CheckReport> out;
    for (int k = 0; k <= n; ++k) {
        const TorusElement lhs = theta(n, hs[k]);
        const TorusElement rhs = te_mul(hn_inv, hs[n - k], f2);
        out.push_back({"toda.htilde", in(n, k), lhs == rhs, lhs.str(), rhs.str(), ""});
    }
    return out;
}

}  // namespace qcluster
