#include "qcluster/coeffs.hpp"

#include "qcluster/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qcluster {

namespace {

Rational rpow(const Rational& x, int e) {
    Rational base = e >= 0 ? x : Rational(1) / x;
    Rational out = 1;
    for (int i = 0, n = std::abs(e); i < n; ++i) out *= base;
    return out;
}

}  // namespace

// ---------------------------------------------------------------- QCoeff

QCoeff::QCoeff(long long c) {
    if (c != 0) terms_[0] = c;
}

QCoeff::QCoeff(const Int& c) {
    if (c != 0) terms_[0] = c;
}

QCoeff QCoeff::v_power(int e, const Int& c) {
    QCoeff out;
    out.add_term(e, c);
    return out;
}

bool QCoeff::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Int QCoeff::coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void QCoeff::add_term(int e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QCoeff& QCoeff::operator+=(const QCoeff& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QCoeff& QCoeff::operator-=(const QCoeff& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QCoeff QCoeff::operator-() const {
    QCoeff out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

QCoeff operator*(const QCoeff& a, const QCoeff& b) {
    QCoeff out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

QCoeff QCoeff::shifted(int dv) const {
    QCoeff out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + dv, c);
    return out;
}

QCoeff QCoeff::v_substituted_inverse() const {
    QCoeff out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

std::optional<QCoeff> QCoeff::exact_div(const QCoeff& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return QCoeff{};
    // Long division from the top degree; the quotient degrees are bounded by
    // [min - dmin, max - dmax].
    const int lo = min_exp() - d.min_exp();
    const int hi = max_exp() - d.max_exp();
    if (hi < lo) return std::nullopt;
    QCoeff rem = *this;
    QCoeff quo;
    const Int& lead = d.terms_.rbegin()->second;
    const int dtop = d.max_exp();
    while (!rem.is_zero()) {
        const int e = rem.max_exp() - dtop;
        if (e < lo || e > hi) return std::nullopt;
        const Int& c = rem.terms_.rbegin()->second;
        if (c % lead != 0) return std::nullopt;
        QCoeff t = v_power(e, c / lead);
        quo += t;
        rem -= t * d;
    }
    return quo;
}

Rational QCoeff::eval(const Rational& v) const {
    Rational out = 0;
    for (const auto& [e, c] : terms_) out += Rational(c) * rpow(v, e);
    return out;
}

std::string QCoeff::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "v";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

// ---------------------------------------------------------------- names

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            const long long x = std::stoll(a.substr(i, i2 - i));
            const long long y = std::stoll(b.substr(j, j2 - j));
            if (x != y) return x < y;
            i = i2;
            j = j2;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
    return a < b;
}

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> g) {
    std::sort(g.begin(), g.end(), natural_less);
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

std::vector<std::string> gen_union(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a == b) return a;
    std::vector<std::string> g = a;
    g.insert(g.end(), b.begin(), b.end());
    return sorted_unique(std::move(g));
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(std::vector<std::string> gens) : gens_(sorted_unique(std::move(gens))) {}

LaurentPoly LaurentPoly::constant(const QCoeff& c, std::vector<std::string> gens) {
    LaurentPoly p(std::move(gens));
    p.add_term(Exponents(p.gens_.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> gens, Exponents e, const QCoeff& c) {
    if (gens.size() != e.size()) throw std::invalid_argument("exponent length mismatch");
    std::vector<std::pair<std::string, int>> pairs;
    for (std::size_t i = 0; i < gens.size(); ++i) pairs.emplace_back(gens[i], e[i]);
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return natural_less(x.first, y.first); });
    LaurentPoly p;
    Exponents ex;
    for (const auto& [g, k] : pairs) {
        if (!p.gens_.empty() && p.gens_.back() == g) {
            ex.back() += k;
            continue;
        }
        p.gens_.push_back(g);
        ex.push_back(k);
    }
    p.add_term(ex, c);
    return p;
}

LaurentPoly LaurentPoly::variable(const std::string& name, int power, const QCoeff& c) {
    return monomial({name}, {power}, c);
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

int LaurentPoly::gen_index(const std::string& name) const {
    auto it = std::lower_bound(gens_.begin(), gens_.end(), name, natural_less);
    if (it == gens_.end() || *it != name) return -1;
    return static_cast<int>(it - gens_.begin());
}

void LaurentPoly::add_term(const Exponents& e, const QCoeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::aligned(const std::vector<std::string>& gens) const {
    if (gens == gens_) return *this;
    LaurentPoly out;
    out.gens_ = gens;
    std::vector<int> pos(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        auto it = std::lower_bound(gens.begin(), gens.end(), gens_[i], natural_less);
        if (it == gens.end() || *it != gens_[i]) throw std::invalid_argument("aligned: not a superset");
        pos[i] = static_cast<int>(it - gens.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exponents ne(gens.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.gens_ != gens_) {
        auto g = gen_union(gens_, o.gens_);
        *this = aligned(g);
        LaurentPoly b = o.aligned(g);
        for (const auto& [e, c] : b.terms_) add_term(e, c);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    return *this += -o;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    out.gens_ = gens_;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.gens_ != b.gens_) {
        auto g = gen_union(a.gens_, b.gens_);
        return a.aligned(g) * b.aligned(g);
    }
    LaurentPoly out;
    out.gens_ = a.gens_;
    const std::size_t n = a.gens_.size();
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

LaurentPoly LaurentPoly::scaled(const QCoeff& c) const {
    LaurentPoly out;
    out.gens_ = gens_;
    if (c.is_zero()) return out;
    for (const auto& [e, k] : terms_) out.add_term(e, k * c);
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (gens_ == o.gens_) return terms_ == o.terms_;
    return (*this - o).is_zero();
}

LaurentPoly LaurentPoly::substitute_scale(const std::string& gen, const QCoeff& c) const {
    const int idx = gen_index(gen);
    if (idx < 0) return *this;
    LaurentPoly out;
    out.gens_ = gens_;
    for (const auto& [e, k] : terms_) {
        QCoeff f = 1;
        const int p = e[idx];
        if (p != 0) {
            if (!c.is_monomial()) {
                if (p < 0) throw std::invalid_argument("substitute_scale: non-unit scale with negative power");
                for (int i = 0; i < p; ++i) f = f * c;
            } else {
                // c = s * v^a, so c^p = s^p v^{ap}
                const auto& [a, s] = *c.terms().begin();
                Int sp = (p % 2 != 0 && s < 0) ? Int(-1) : Int(1);
                if (s != 1 && s != -1) {
                    if (p < 0) throw std::invalid_argument("substitute_scale: non-unit scale");
                    sp = pow(s, static_cast<unsigned>(p));
                }
                f = QCoeff::v_power(a * p, sp);
            }
        }
        out.add_term(e, k * f);
    }
    return out;
}

LaurentPoly LaurentPoly::negate_variable(const std::string& gen) const {
    return substitute_scale(gen, QCoeff(-1));
}

LaurentPoly LaurentPoly::content_monomial() const {
    if (terms_.empty()) throw std::invalid_argument("content of zero");
    Exponents lo = terms_.begin()->first;
    int vlo = terms_.begin()->second.min_exp();
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], e[i]);
        vlo = std::min(vlo, c.min_exp());
    }
    LaurentPoly out;
    out.gens_ = gens_;
    out.terms_.emplace(lo, QCoeff::v_power(vlo));
    return out;
}

LaurentPoly LaurentPoly::trimmed() const {
    std::vector<bool> used(gens_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return *this;
    LaurentPoly out;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (used[i]) out.gens_.push_back(gens_[i]);
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

std::pair<int, int> LaurentPoly::degree_range(int gen) const {
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            lo = hi = e[gen];
            first = false;
        }
        lo = std::min(lo, e[gen]);
        hi = std::max(hi, e[gen]);
    }
    return {lo, hi};
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) mono << "*";
            mono << gens_[i];
            if (e[i] != 1) mono << "^" << e[i];
            any = true;
        }
        std::string coeff;
        bool negative = false;
        QCoeff cc = c;
        if (c.is_monomial() && c.terms().begin()->second < 0) {
            negative = true;
            cc = -c;
        }
        if (!any) {
            coeff = cc.str();
        } else if (!cc.is_one()) {
            coeff = cc.is_monomial() ? cc.str() : "(" + cc.str() + ")";
            coeff += "*";
        }
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        os << coeff << mono.str();
    }
    return os.str();
}

// ---------------------------------------------------------------- free ops

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
    return a * b;
}

std::optional<LaurentPoly> lp_exact_div(const LaurentPoly& a_in, const LaurentPoly& b_in) {
    if (b_in.is_zero()) throw std::invalid_argument("lp_exact_div: zero divisor");
    if (a_in.is_zero()) return LaurentPoly(a_in.generators());
    const auto gens = gen_union(a_in.generators(), b_in.generators());
    const LaurentPoly a = a_in.aligned(gens);
    const LaurentPoly b = b_in.aligned(gens);
    const std::size_t n = gens.size();

    // Flatten with the v-exponent as a trailing coordinate; lex order on the
    // flattened key is a group order, so leading terms multiply.
    using Flat = std::map<Exponents, Int>;
    auto flatten = [](const LaurentPoly& p) {
        Flat f;
        for (const auto& [e, c] : p.terms())
            for (const auto& [ve, k] : c.terms()) {
                Exponents key = e;
                key.push_back(ve);
                f.emplace(std::move(key), k);
            }
        return f;
    };
    Flat rem = flatten(a);
    const Flat fb = flatten(b);

    auto box = [n](const Flat& f) {
        Exponents lo = f.begin()->first, hi = f.begin()->first;
        for (const auto& [k, c] : f)
            for (std::size_t i = 0; i <= n; ++i) {
                lo[i] = std::min(lo[i], k[i]);
                hi[i] = std::max(hi[i], k[i]);
            }
        return std::make_pair(lo, hi);
    };
    const auto [alo, ahi] = box(rem);
    const auto [blo, bhi] = box(fb);
    Exponents qlo(n + 1), qhi(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        qlo[i] = alo[i] - blo[i];
        qhi[i] = ahi[i] - bhi[i];
        if (qhi[i] < qlo[i]) return std::nullopt;
    }

    const auto& [blead, bcoef] = *fb.rbegin();
    Flat quo;
    Exponents t(n + 1), key(n + 1);
    while (!rem.empty()) {
        const auto& [rlead, rcoef] = *rem.rbegin();
        if (rcoef % bcoef != 0) return std::nullopt;
        for (std::size_t i = 0; i <= n; ++i) {
            t[i] = rlead[i] - blead[i];
            if (t[i] < qlo[i] || t[i] > qhi[i]) return std::nullopt;
        }
        const Int c = rcoef / bcoef;
        quo[t] += c;
        for (const auto& [bk, bc] : fb) {
            for (std::size_t i = 0; i <= n; ++i) key[i] = bk[i] + t[i];
            auto it = rem.find(key);
            if (it == rem.end()) {
                rem.emplace(key, -c * bc);
            } else {
                it->second -= c * bc;
                if (it->second == 0) rem.erase(it);
            }
        }
    }

    LaurentPoly out(gens);
    for (const auto& [k, c] : quo) {
        if (c == 0) continue;
        Exponents e(k.begin(), k.end() - 1);
        out.add_term(e, QCoeff::v_power(k.back(), c));
    }
    return out;
}

Rational lp_eval(const LaurentPoly& a, const std::map<std::string, Rational>& assignment, const Rational& v) {
    std::vector<Rational> vals;
    for (const auto& g : a.generators()) {
        auto it = assignment.find(g);
        if (it == assignment.end()) throw std::invalid_argument("lp_eval: unassigned generator " + g);
        if (it->second == 0) throw ZeroAssignment("lp_eval: generator " + g + " assigned 0");
        vals.push_back(it->second);
    }
    if (v == 0) throw ZeroAssignment("lp_eval: v assigned 0");
    Rational out = 0;
    for (const auto& [e, c] : a.terms()) {
        Rational t = c.eval(v);
        for (std::size_t i = 0; i < e.size(); ++i) t *= rpow(vals[i], e[i]);
        out += t;
    }
    return out;
}

}  // namespace qcluster
