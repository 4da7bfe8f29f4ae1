#include "qcluster/diffop.hpp"

#include <algorithm>
#include <sstream>

namespace qcluster {

DiffOp DiffOp::term(const RationalFn& f, const Shift& s) {
    DiffOp out;
    out.add_term(f, s);
    return out;
}

void DiffOp::add_term(const RationalFn& f, const Shift& s_in) {
    if (f.is_zero()) return;
    Shift s;
    for (const auto& [k, e] : s_in)
        if (e != 0) s[k] = e;
    auto [it, fresh] = terms_.emplace(s, f);
    if (fresh) return;
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    for (const auto& [s, c] : o.terms_) add_term(c, s);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    for (const auto& [s, c] : o.terms_) add_term(-c, s);
    return *this;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (const auto& [w, e] : s) {
            os << "*D" << w.substr(1);
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly apply_shift(const LaurentPoly& f, const Shift& s) {
    LaurentPoly out = f;
    for (const auto& [w, e] : s) out = out.substitute_scale(w, QCoeff::q_power(2 * e));
    return out;
}

RationalFn apply_shift(const RationalFn& f, const Shift& s) {
    RationalFn out = f;
    for (const auto& [w, e] : s) out = out.substitute_scale(w, QCoeff::q_power(2 * e));
    return out;
}

DiffOp do_compose(const DiffOp& a, const DiffOp& b) {
    DiffOp out;
    for (const auto& [sa, fa] : a.terms())
        for (const auto& [sb, fb] : b.terms()) {
            Shift s = sa;
            for (const auto& [w, e] : sb) s[w] += e;
            out.add_term(fa * apply_shift(fb, sa), s);
        }
    return out;
}

DiffOp do_commutator(const DiffOp& a, const DiffOp& b) {
    return do_compose(a, b) - do_compose(b, a);
}

std::optional<LaurentPoly> act_symmetric(const DiffOp& op, const LaurentPoly& f) {
    RationalFn sum;
    for (const auto& [s, c] : op.terms()) sum += c * RationalFn(apply_shift(f, s));
    if (!sum.is_laurent()) return std::nullopt;
    return sum.numerator();
}

namespace {

LaurentPoly swap_vars(const LaurentPoly& f, const std::string& a, const std::string& b) {
    std::vector<std::string> gens = f.generators();
    for (const auto& g : {a, b})
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    std::sort(gens.begin(), gens.end(), natural_less);
    const LaurentPoly al = f.aligned(gens);
    const int ia = al.gen_index(a), ib = al.gen_index(b);
    LaurentPoly out(gens);
    for (const auto& [key, c] : al.terms()) {
        Exponents e = key;
        std::swap(e[ia], e[ib]);
        out.add_term(e, c);
    }
    return out;
}

}  // namespace

bool is_symmetric(const LaurentPoly& f, const std::vector<std::vector<std::string>>& groups) {
    for (const auto& g : groups)
        for (std::size_t i = 0; i + 1 < g.size(); ++i)
            if (swap_vars(f, g[i], g[i + 1]) != f) return false;
    return true;
}

LaurentPoly elementary_symmetric(const std::vector<std::string>& vars, int k) {
    if (k == 0) return LaurentPoly::constant(1);
    LaurentPoly out;
    const std::size_t n = vars.size();
    if (k < 0 || k > static_cast<int>(n)) return out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        LaurentPoly m = LaurentPoly::constant(1);
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) m = m * LaurentPoly::variable(vars[i]);
        out += m;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

}  // namespace qcluster
