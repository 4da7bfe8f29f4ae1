#include "qcluster/coeffs.hpp"

#include <sstream>

namespace qcluster {

namespace {

// Inverse of a unit +/- v^a * monomial.
LaurentPoly unit_inverse(const LaurentPoly& u) {
    const auto& [e, c] = *u.terms().begin();
    Exponents ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    const auto& [ve, s] = *c.terms().begin();
    return LaurentPoly::monomial(u.generators(), ne, QCoeff::v_power(-ve, s));
}

LaurentPoly power(const LaurentPoly& f, int m) {
    LaurentPoly out = LaurentPoly::constant(1);
    for (int i = 0; i < m; ++i) out = out * f;
    return out;
}

}  // namespace

std::pair<LaurentPoly, LaurentPoly> normalize_factor(const LaurentPoly& f) {
    LaurentPoly unit = f.content_monomial();
    auto reduced = lp_exact_div(f, unit);
    LaurentPoly nf = reduced->trimmed();
    const QCoeff& lead = nf.terms().rbegin()->second;
    if (lead.terms().rbegin()->second < 0) {
        nf = -nf;
        unit = -unit;
    }
    return {unit.trimmed(), nf};
}

bool RationalFn::factor_less(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.generators() != b.generators()) return a.generators() < b.generators();
    return a.terms() < b.terms();
}

RationalFn::RationalFn(const LaurentPoly& num) : num_(num) {}

RationalFn::RationalFn(const LaurentPoly& num, const LaurentPoly& den) : num_(num) {
    if (den.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    multiply_factor(den, -1);
    reduce();
}

RationalFn RationalFn::inverse_of(const LaurentPoly& factor) {
    return RationalFn(LaurentPoly::constant(1), factor);
}

void RationalFn::multiply_factor(const LaurentPoly& f, int mult) {
    if (mult == 0) return;
    auto [unit, nf] = normalize_factor(f);
    // f^mult = unit^mult * nf^mult; negative mult means a denominator factor.
    if (mult > 0) {
        num_ = num_ * power(unit, mult) * power(nf, mult);
        return;
    }
    num_ = num_ * power(unit_inverse(unit), -mult);
    if (nf.is_constant() && nf.terms().begin()->second.is_one()) return;
    den_[nf] += -mult;
}

LaurentPoly RationalFn::denominator() const {
    LaurentPoly out = LaurentPoly::constant(1);
    for (const auto& [f, m] : den_) out = out * power(f, m);
    return out;
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = lp_exact_div(num_, it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        if (it->second == 0)
            it = den_.erase(it);
        else
            ++it;
    }
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    FactorMap common{&factor_less};
    for (const auto& [f, m] : den_) common[f] = m;
    for (const auto& [f, m] : o.den_) common[f] = std::max(common[f], m);
    auto lift = [&common](const RationalFn& r) {
        LaurentPoly n = r.num_;
        for (const auto& [f, m] : common) {
            auto it = r.den_.find(f);
            const int have = it == r.den_.end() ? 0 : it->second;
            n = n * power(f, m - have);
        }
        return n;
    };
    num_ = lift(*this) + lift(o);
    den_ = std::move(common);
    reduce();
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) {
    return *this += -o;
}

RationalFn RationalFn::operator-() const {
    RationalFn out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    RationalFn out;
    out.num_ = a.num_ * b.num_;
    if (out.num_.is_zero()) return out;
    out.den_ = a.den_;
    for (const auto& [f, m] : b.den_) out.den_[f] += m;
    out.reduce();
    return out;
}

bool RationalFn::operator==(const RationalFn& o) const {
    return (*this - o).is_zero();
}

RationalFn RationalFn::substitute_scale(const std::string& gen, const QCoeff& c) const {
    RationalFn out(num_.substitute_scale(gen, c));
    for (const auto& [f, m] : den_) out.multiply_factor(f.substitute_scale(gen, c), -m);
    out.reduce();
    return out;
}

RationalFn RationalFn::negate_variable(const std::string& gen) const {
    return substitute_scale(gen, QCoeff(-1));
}

Rational RationalFn::eval(const std::map<std::string, Rational>& assignment, const Rational& v) const {
    Rational out = lp_eval(num_, assignment, v);
    for (const auto& [f, m] : den_) {
        const Rational d = lp_eval(f, assignment, v);
        if (d == 0) throw std::domain_error("RationalFn::eval: pole");
        for (int i = 0; i < m; ++i) out /= d;
    }
    return out;
}

std::string RationalFn::str() const {
    if (den_.empty()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(";
    bool first = true;
    for (const auto& [f, m] : den_) {
        if (!first) os << "*";
        first = false;
        os << "(" << f.str() << ")";
        if (m != 1) os << "^" << m;
    }
    os << ")";
    return os.str();
}

}  // namespace qcluster
