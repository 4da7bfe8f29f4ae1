#pragma once

// Exact commutative arithmetic. The formal variable is v with q = v^2.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcluster {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Element of Z[v, v^-1].
class QCoeff {
public:
    QCoeff() = default;
    QCoeff(long long c);  // NOLINT: integers embed implicitly
    QCoeff(const Int& c);  // NOLINT

    static QCoeff v_power(int e, const Int& c = 1);
    static QCoeff q_power(int e, const Int& c = 1) { return v_power(2 * e, c); }

    const std::map<int, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int min_exp() const { return terms_.begin()->first; }
    int max_exp() const { return terms_.rbegin()->first; }
    Int coefficient(int e) const;

    QCoeff& operator+=(const QCoeff& o);
    QCoeff& operator-=(const QCoeff& o);
    QCoeff operator-() const;
    friend QCoeff operator+(QCoeff a, const QCoeff& b) { return a += b; }
    friend QCoeff operator-(QCoeff a, const QCoeff& b) { return a -= b; }
    friend QCoeff operator*(const QCoeff& a, const QCoeff& b);
    bool operator==(const QCoeff& o) const { return terms_ == o.terms_; }
    bool operator!=(const QCoeff& o) const { return !(*this == o); }
    bool operator<(const QCoeff& o) const { return terms_ < o.terms_; }

    QCoeff shifted(int dv) const;          // times v^dv
    QCoeff v_substituted_inverse() const;  // v -> v^-1
    std::optional<QCoeff> exact_div(const QCoeff& d) const;
    Rational eval(const Rational& v) const;

    // Ascending v-powers, e.g. "1 + v^2" or "-v^-1".
    std::string str() const;

private:
    void add_term(int e, const Int& c);
    std::map<int, Int> terms_;
};

using Exponents = std::vector<int>;

// Orders "w[1,10]" after "w[1,2]".
bool natural_less(const std::string& a, const std::string& b);

// Laurent polynomial over Z[v^±] in named commuting generators. The
// generator list is kept sorted with natural_less.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> gens);

    static LaurentPoly constant(const QCoeff& c, std::vector<std::string> gens = {});
    static LaurentPoly monomial(std::vector<std::string> gens, Exponents e, const QCoeff& c = 1);
    static LaurentPoly variable(const std::string& name, int power = 1, const QCoeff& c = 1);

    const std::vector<std::string>& generators() const { return gens_; }
    const std::map<Exponents, QCoeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }
    int gen_index(const std::string& name) const;  // -1 if absent

    void add_term(const Exponents& e, const QCoeff& c);
    // Re-express over a sorted superset of the current generators.
    LaurentPoly aligned(const std::vector<std::string>& gens) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const QCoeff& c) const;
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Generator g -> c * g, e.g. the q^2 shift of a difference operator.
    LaurentPoly substitute_scale(const std::string& gen, const QCoeff& c) const;
    // Generator g -> -g.
    LaurentPoly negate_variable(const std::string& gen) const;

    // Lowest exponent per generator plus lowest v-power; dividing by the
    // returned monomial leaves a polynomial with no monomial content.
    LaurentPoly content_monomial() const;
    // Drop generators that appear with exponent 0 everywhere.
    LaurentPoly trimmed() const;
    // Exponent range of one generator over all terms.
    std::pair<int, int> degree_range(int gen) const;

    std::string str() const;

private:
    std::vector<std::string> gens_;
    std::map<Exponents, QCoeff> terms_;
};

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
std::optional<LaurentPoly> lp_exact_div(const LaurentPoly& a, const LaurentPoly& b);
Rational lp_eval(const LaurentPoly& a, const std::map<std::string, Rational>& assignment,
                 const Rational& v);

// numerator / product of irreducible-looking factors. Factors are stored
// normalized (no monomial content, positive leading coefficient).
class RationalFn {
public:
    RationalFn() = default;
    RationalFn(const LaurentPoly& num);  // NOLINT
    RationalFn(const LaurentPoly& num, const LaurentPoly& den);

    static RationalFn inverse_of(const LaurentPoly& factor);

    const LaurentPoly& numerator() const { return num_; }
    LaurentPoly denominator() const;
    using FactorMap = std::map<LaurentPoly, int, bool (*)(const LaurentPoly&, const LaurentPoly&)>;
    const FactorMap& factors() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.empty(); }

    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn operator-() const;
    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    bool operator==(const RationalFn& o) const;
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    RationalFn substitute_scale(const std::string& gen, const QCoeff& c) const;
    RationalFn negate_variable(const std::string& gen) const;
    Rational eval(const std::map<std::string, Rational>& assignment, const Rational& v) const;

    std::string str() const;

private:
    static bool factor_less(const LaurentPoly& a, const LaurentPoly& b);
    void multiply_factor(const LaurentPoly& f, int mult);
    void reduce();

    LaurentPoly num_;
    FactorMap den_{&factor_less};
};

// Normal form of a factor: content removed, sign fixed. Returns the unit
// (+/- monomial) u with f = u * normalized.
std::pair<LaurentPoly, LaurentPoly> normalize_factor(const LaurentPoly& f);

}  // namespace qcluster
