#pragma once

// Cluster seeds as bases of a fixed ambient lattice with a fixed skew form.

#include "qcluster/heisenberg.hpp"
#include "qcluster/lattice.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qcluster {

struct Seed {
    int ambient_dim = 0;
    std::vector<LVec> basis;
    std::set<int> frozen;
    IntMatrix form2;  // twice the skew form on the ambient lattice

    // Optional label homomorphism: one SymbolVector per ambient coordinate.
    std::shared_ptr<const SymbolSpace> symbols;
    std::vector<SymbolVector> ambient_labels;

    std::size_t size() const { return basis.size(); }
    bool is_frozen(int v) const { return frozen.count(v) != 0; }
    bool has_labels() const { return symbols != nullptr; }
    SymbolVector label(int v) const;
    std::vector<SymbolVector> labels() const;
    // (e_i, e_j) doubled.
    long long pair2(const LVec& a, const LVec& b) const { return bilinear(form2, a, b); }
};

struct MutationSeq {
    std::vector<int> steps;
    // Vertex i of the mutated seed becomes vertex post_permutation[i].
    std::optional<std::vector<int>> post_permutation;
};

HalfIntMatrix exchange_matrix(const Seed& s);
Seed mutate_seed(const Seed& s, int k);
Seed permute_vertices(const Seed& s, const std::vector<int>& perm);
Seed mutate_sequence(const Seed& s, const MutationSeq& seq);

// Seed whose ambient lattice is the symbol space itself: the basis vectors
// are the labels and form2 is twice the pairing.
Seed seed_from_symbol_labels(std::shared_ptr<const SymbolSpace> space, const std::vector<SymbolVector>& labels,
                             std::set<int> frozen = {});
// Seed on Z^N with unit basis and form2 = twice the label brackets.
Seed seed_from_vertex_labels(std::shared_ptr<const SymbolSpace> space, const std::vector<SymbolVector>& labels,
                             std::set<int> frozen = {});

// Symbols x[0..n], p[0..n], specU, specV.
std::shared_ptr<const SymbolSpace> toda_space(int n);

Seed build_coxeter(int n);
// Vertices 0..2n-1 as in build_coxeter, then v_a = 2n and v_f = 2n+1.
Seed build_augmented_coxeter(int n);
int augmented_a(int n);
int augmented_f(int n);

// Glued quiver with vertices v_{-2(n-1)} .. v_{2(m-1)}, stored at position
// z + 2(n-1). Symbols x[1..m], p[1..m], y[1..n], q[1..n].
Seed build_glued(int m, int n);
int glued_position(int n, int z);

enum class SequenceKind { baxter_top, baxter_bottom, r_op, dehn };
SequenceKind parse_sequence_kind(const std::string& name);
MutationSeq standard_sequence(SequenceKind kind, int n);

// Array-ordered sequence on build_glued(m, n), in application order, as
// glued indices z (not positions).
std::vector<int> bifund_order(int m, int n);
// The same sequence on positions, with the renumbering onto build_glued(n, m).
// The result matches build_glued(n, m) with x/p and y/q exchanged.
MutationSeq bifund_sequence(int m, int n);
// Glued index in Q_{n,m} of glued vertex z of Q_{m,n} after the array sequence.
int bifund_renumber(int m, int n, int z);

}  // namespace qcluster
