#include "qcluster/qtorus.hpp"

#include "qcluster/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qcluster {

TorusElement TorusElement::monomial(const LVec& lambda, const QCoeff& c) {
    TorusElement t(static_cast<int>(lambda.size()));
    t.add_term(lambda, c);
    return t;
}

QCoeff TorusElement::coefficient(const LVec& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? QCoeff() : it->second;
}

void TorusElement::add_term(const LVec& lambda, const QCoeff& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(lambda.size()) != dim_) throw std::invalid_argument("lattice dimension mismatch");
    auto [it, fresh] = terms_.emplace(lambda, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    if (is_zero() && dim_ == 0) dim_ = o.dim_;
    for (const auto& [l, c] : o.terms_) add_term(l, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    if (is_zero() && dim_ == 0) dim_ = o.dim_;
    for (const auto& [l, c] : o.terms_) add_term(l, -c);
    return *this;
}

TorusElement TorusElement::operator-() const {
    return scaled(-1);
}

TorusElement TorusElement::scaled(const QCoeff& c) const {
    TorusElement out(dim_);
    if (c.is_zero()) return out;
    for (const auto& [l, a] : terms_) out.terms_.emplace(l, a * c);
    return out;
}

namespace {

std::string coeff_prefix(const QCoeff& c) {
    if (c.is_one()) return "";
    if (c == QCoeff(-1)) return "-";
    if (c.is_monomial()) return c.str() + "*";
    return "(" + c.str() + ")*";
}

template <class Render>
std::string render_terms(const std::map<LVec, QCoeff>& terms, Render render) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << coeff_prefix(c) << render(l);
    }
    return os.str();
}

}  // namespace

std::string TorusElement::str() const {
    return render_terms(terms_, [](const LVec& l) {
        std::ostringstream os;
        os << "Y[";
        for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
        os << "]";
        return os.str();
    });
}

std::string TorusElement::str_in_chart(const Seed& s) const {
    return render_terms(terms_, [&s](const LVec& l) {
        auto c = solve_in_span(s.basis, l);
        if (!c) {
            std::ostringstream os;
            os << "Y[";
            for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
            os << "]";
            return os.str();
        }
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c->size(); ++i) {
            const Rational& a = (*c)[i];
            if (a == 0) continue;
            if (first)
                os << (a < 0 ? "-" : "");
            else
                os << (a < 0 ? " - " : " + ");
            first = false;
            const Rational m = a < 0 ? Rational(-a) : a;
            if (m != 1) os << m << "*";
            os << "e" << i + 1;
        }
        return "Y(" + (first ? std::string("0") : os.str()) + ")";
    });
}

std::string TorusElement::str_labels(const Seed& s) const {
    return render_terms(terms_, [&s](const LVec& l) {
        SymbolVector v = s.symbols->zero();
        for (std::size_t j = 0; j < l.size(); ++j)
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += l[j] * s.ambient_labels[j][i];
        return "Y(" + s.symbols->render(v) + ")";
    });
}

TorusElement te_mul(const TorusElement& a, const TorusElement& b, const IntMatrix& form2) {
    TorusElement out(std::max(a.ambient_dim(), b.ambient_dim()));
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms()) {
            const long long f = bilinear(form2, la, lb);
            out.add_term(lv_add(la, lb), (ca * cb).shifted(static_cast<int>(-f)));
        }
    return out;
}

TorusElement te_commutator(const TorusElement& a, const TorusElement& b, const IntMatrix& form2) {
    return te_mul(a, b, form2) - te_mul(b, a, form2);
}

namespace {

using UPoly = std::map<int, QCoeff>;  // Laurent polynomial in one variable x

void upoly_add(UPoly& p, int e, const QCoeff& c) {
    if (c.is_zero()) return;
    auto& slot = p[e];
    slot += c;
    if (slot.is_zero()) p.erase(e);
}

// p * (1 + u x)
UPoly mul_linear(const UPoly& p, const QCoeff& u) {
    UPoly out;
    for (const auto& [e, c] : p) {
        upoly_add(out, e, c);
        upoly_add(out, e + 1, c * u);
    }
    return out;
}

// p / (1 + u x) for a unit monomial u; nullopt if the division leaves a remainder.
std::optional<UPoly> div_linear(const UPoly& p, const QCoeff& u) {
    if (p.empty()) return UPoly{};
    const int lo = p.begin()->first, hi = p.rbegin()->first;
    if (hi == lo) return std::nullopt;
    const QCoeff uinv = *QCoeff(1).exact_div(u);
    auto at = [&p](int e) {
        auto it = p.find(e);
        return it == p.end() ? QCoeff() : it->second;
    };
    // N = (1 + u x) Q with Q spanning lo .. hi-1; solve from the top down.
    UPoly q;
    QCoeff next = at(hi) * uinv;
    for (int e = hi - 1; e >= lo; --e) {
        upoly_add(q, e, next);
        if (e == lo) break;
        next = (at(e) - next) * uinv;
    }
    if (at(lo) != (q.count(lo) ? q.at(lo) : QCoeff())) return std::nullopt;
    return q;
}

long long floor_mod(long long a, long long m) {
    const long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::optional<TorusElement> mutate_element(const TorusElement& x, const Seed& s, int k) {
    if (k < 0 || k >= static_cast<int>(s.size())) throw IndexOutOfRange("vertex " + std::to_string(k));
    if (s.is_frozen(k)) throw FrozenVertex("vertex " + std::to_string(k) + " is frozen");
    const LVec& ek = s.basis[k];
    int pivot = -1;
    for (std::size_t i = 0; i < ek.size(); ++i)
        if (ek[i] != 0 && (pivot < 0 || std::abs(ek[i]) < std::abs(ek[pivot]))) pivot = static_cast<int>(i);
    if (pivot < 0) throw std::logic_error("zero basis vector");

    // Each line mu0 - j e_k is Y(mu0) * n(x) with x = Y(-e_k) and
    // Y(mu0) x^j = q^{-jc} Y(mu0 - j e_k).
    struct Line {
        int c = 0;
        UPoly poly;
    };
    std::map<LVec, Line> lines;
    for (const auto& [lambda, coeff] : x.terms()) {
        const long long c2 = s.pair2(ek, lambda);
        if (c2 % 2 != 0) throw std::domain_error("half-integer pairing with a mutable direction");
        const int c = static_cast<int>(c2 / 2);
        const long long r = floor_mod(lambda[pivot], std::abs(ek[pivot]));
        const int f = static_cast<int>((lambda[pivot] - r) / ek[pivot]);
        LVec mu0 = lv_add(lambda, ek, -f);
        const int j = -f;
        Line& line = lines[mu0];
        line.c = c;
        upoly_add(line.poly, j, coeff.shifted(2 * j * c));
    }

    TorusElement out(x.ambient_dim());
    for (auto& [mu0, line] : lines) {
        UPoly p = std::move(line.poly);
        const int c = line.c;
        for (int a = 1; a <= std::abs(c); ++a) {
            if (c > 0) {
                p = mul_linear(p, QCoeff::q_power(2 * a - 1));
            } else {
                auto d = div_linear(p, QCoeff::q_power(-(2 * a - 1)));
                if (!d) return std::nullopt;
                p = std::move(*d);
            }
        }
        for (const auto& [j, b] : p) out.add_term(lv_add(mu0, ek, -j), b.shifted(-2 * j * c));
    }
    return out;
}

SequenceResult apply_sequence(const TorusElement& x, const Seed& s, const MutationSeq& seq) {
    SequenceResult res{s, x, std::nullopt};
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        auto next = mutate_element(*res.element, res.seed, seq.steps[i]);
        if (!next) {
            res.element.reset();
            res.failed_step = i;
            res.seed = mutate_seed(res.seed, seq.steps[i]);
            return res;
        }
        res.element = std::move(next);
        res.seed = mutate_seed(res.seed, seq.steps[i]);
    }
    if (!seq.post_permutation) return res;

    const auto& perm = *seq.post_permutation;
    TorusElement moved(x.ambient_dim());
    for (const auto& [lambda, c] : res.element->terms()) {
        auto coords = solve_in_span(res.seed.basis, lambda);
        if (!coords) throw NotInSpan("element leaves the span of the basis");
        std::vector<Rational> target(lambda.size(), 0);
        for (std::size_t i = 0; i < coords->size(); ++i) {
            const LVec& e = s.basis[perm[i]];
            for (std::size_t t = 0; t < e.size(); ++t) target[t] += (*coords)[i] * e[t];
        }
        LVec img(lambda.size());
        for (std::size_t t = 0; t < target.size(); ++t) {
            if (denominator(target[t]) != 1) throw NotInSpan("non-integral transported vector");
            img[t] = static_cast<int>(numerator(target[t]));
        }
        moved.add_term(img, c);
    }
    res.element = std::move(moved);
    res.seed = permute_vertices(res.seed, perm);
    return res;
}

RatMatrix ensemble_matrix(const Seed& s, const IntMatrix& M) {
    const HalfIntMatrix eps = exchange_matrix(s);
    const std::size_t n = eps.size();
    RatMatrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int mij = M.empty() ? 0 : M[i][j];
            if (mij != 0 && !(s.is_frozen(static_cast<int>(i)) && s.is_frozen(static_cast<int>(j))))
                throw std::invalid_argument("M may only touch frozen-frozen entries");
            m[i][j] = eps.at(i, j) + mij;
        }
    const Rational det = determinant(m);
    if (det != 1 && det != -1) throw NotUnimodular("det(eps + M) is not a unit");
    return *inverse(m);
}

TorusElement a_variable(const Seed& s, const IntMatrix& M, int k) {
    const RatMatrix ups = ensemble_matrix(s, M);
    LVec out(s.ambient_dim, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Rational& u = ups[i].at(k);
        if (denominator(u) != 1) throw NotUnimodular("non-integral ensemble matrix");
        out = lv_add(out, s.basis[i], static_cast<int>(numerator(u)));
    }
    return TorusElement::monomial(out);
}

TorusElement chain_sum(const LVec& l0, const std::vector<LVec>& tail) {
    TorusElement out(static_cast<int>(l0.size()));
    LVec cur = l0;
    out.add_term(cur, 1);
    for (const auto& l : tail) {
        cur = lv_add(cur, l, -1);
        out.add_term(cur, 1);
    }
    return out;
}

TorusElement subset_sum(const LVec& l, const std::vector<LVec>& vs, int k) {
    if (k < 0) throw IndexOutOfRange("negative subset size");
    if (k > static_cast<int>(vs.size())) throw SizeTooLarge("subset size exceeds set size");
    TorusElement out(static_cast<int>(l.size()));
    const std::size_t n = vs.size();
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    // Lexicographic walk over the k-subsets via prev_permutation.
    do {
        LVec cur = l;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) cur = lv_add(cur, vs[i], -1);
        out.add_term(cur, 1);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

LVec seed_vector(const Seed& s, const std::vector<std::pair<int, int>>& coeffs) {
    LVec out(s.ambient_dim, 0);
    for (const auto& [v, c] : coeffs) out = lv_add(out, s.basis.at(v), c);
    return out;
}

}  // namespace qcluster
