#pragma once

// Quantum torus elements in fixed ambient coordinates and quantum mutation.

#include "qcluster/coeffs.hpp"
#include "qcluster/seed.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcluster {

// Finite sum of c * Y(lambda). Y(a)Y(b) = v^{-form2(a,b)} Y(a+b).
class TorusElement {
public:
    TorusElement() = default;
    explicit TorusElement(int ambient_dim) : dim_(ambient_dim) {}

    static TorusElement monomial(const LVec& lambda, const QCoeff& c = 1);
    static TorusElement one(int ambient_dim) { return monomial(LVec(ambient_dim, 0)); }

    int ambient_dim() const { return dim_; }
    const std::map<LVec, QCoeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    QCoeff coefficient(const LVec& lambda) const;

    void add_term(const LVec& lambda, const QCoeff& c);
    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    TorusElement operator-() const;
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    TorusElement scaled(const QCoeff& c) const;
    bool operator==(const TorusElement& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

    // "(1 + v^2)*Y[1,0,-1] + Y[0,0,0]" with raw ambient coordinates.
    std::string str() const;
    // Coordinates in a seed's current basis, 1-based: "v^-2*Y(e2 - e5)".
    std::string str_in_chart(const Seed& s) const;
    // Ambient vectors rendered through the seed's labels, "Y(p[1] + x[2])".
    std::string str_labels(const Seed& s) const;

private:
    int dim_ = 0;
    std::map<LVec, QCoeff> terms_;
};

TorusElement te_mul(const TorusElement& a, const TorusElement& b, const IntMatrix& form2);
TorusElement te_commutator(const TorusElement& a, const TorusElement& b, const IntMatrix& form2);

// mu_k(x), still in ambient coordinates; nullopt when the result is not
// Laurent (an exact division fails).
std::optional<TorusElement> mutate_element(const TorusElement& x, const Seed& s, int k);

struct SequenceResult {
    Seed seed;  // mutated seed, post_permutation applied
    std::optional<TorusElement> element;
    std::optional<std::size_t> failed_step;  // set iff element is empty
};

// Left fold of mutate_element. With a post_permutation the element is carried
// by the lattice map sending the permuted basis onto the initial basis, so a
// sequence that restores the quiver maps elements back to initial coordinates.
// The element must then lie in the span of the basis; throws NotInSpan if not.
SequenceResult apply_sequence(const TorusElement& x, const Seed& s, const MutationSeq& seq);

// Same as apply_sequence without any element.
inline Seed apply_sequence(const Seed& s, const MutationSeq& seq) {
    return mutate_sequence(s, seq);
}

// A_k = Y(sum_i upsilon_ik e_i) with upsilon = (eps + M)^-1. M is indexed by
// vertices and may be nonzero only on frozen-frozen entries.
TorusElement a_variable(const Seed& s, const IntMatrix& M, int k);
RatMatrix ensemble_matrix(const Seed& s, const IntMatrix& M);

// Y(l0) + Y(l0 - l1) + Y(l0 - l1 - l2) + ...
TorusElement chain_sum(const LVec& l0, const std::vector<LVec>& tail);
// Sum over k-subsets J of vs of Y(l - sum_{r in J} r).
TorusElement subset_sum(const LVec& l, const std::vector<LVec>& vs, int k);

// Vertex-indexed convenience for unit-basis (vertex-ambient) seeds: e(i) = unit vector i.
LVec seed_vector(const Seed& s, const std::vector<std::pair<int, int>>& coeffs);

}  // namespace qcluster
