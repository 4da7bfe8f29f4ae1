#pragma once

// q-difference operators in normal form: sum of f(w, z, u; q) * D^gamma with
// all shifts on the right. D[i,r] w[i,r] = q^2 w[i,r] D[i,r].

#include "qcluster/coeffs.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcluster {

// Generator name of w to exponent of its shift operator; zeros are dropped.
using Shift = std::map<std::string, int>;

class DiffOp {
public:
    DiffOp() = default;
    static DiffOp scalar(const RationalFn& f) { return term(f, {}); }
    static DiffOp term(const RationalFn& f, const Shift& s);

    const std::map<Shift, RationalFn>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const RationalFn& f, const Shift& s);
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    bool operator==(const DiffOp& o) const { return (*this - o).is_zero(); }

    // Apply a coefficient substitution to every term.
    template <class F>
    DiffOp map_coeffs(F f) const {
        DiffOp out;
        for (const auto& [s, c] : terms_) out.add_term(f(c), s);
        return out;
    }

    // JSON-ish rendering: one "coeff * D[..]^k" per term.
    std::string str() const;

private:
    std::map<Shift, RationalFn> terms_;
};

// f(w) -> f(q^{2 gamma} w)
RationalFn apply_shift(const RationalFn& f, const Shift& s);
LaurentPoly apply_shift(const LaurentPoly& f, const Shift& s);

DiffOp do_compose(const DiffOp& a, const DiffOp& b);
DiffOp do_commutator(const DiffOp& a, const DiffOp& b);

// Functional action (D f)(w) = f(q^2 w); nullopt if the result is not a
// Laurent polynomial.
std::optional<LaurentPoly> act_symmetric(const DiffOp& op, const LaurentPoly& f);

// Symmetric in each group of generators (checked by swapping neighbours).
bool is_symmetric(const LaurentPoly& f, const std::vector<std::vector<std::string>>& groups);

// e_k of the named variables.
LaurentPoly elementary_symmetric(const std::vector<std::string>& vars, int k);

}  // namespace qcluster
