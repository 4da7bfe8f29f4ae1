#pragma once

// Relativistic Toda Hamiltonians on the exponential Heisenberg torus.
// Elements live on the ambient lattice of toda_space(n), where Y(a) stands
// for the exponential of a and Y(a)Y(b) = q^{-2[a,b]} Y(b)Y(a).

#include "qcluster/qtorus.hpp"
#include "qcluster/report.hpp"

#include <vector>

namespace qcluster {

IntMatrix toda_form2(int n);

// H_k^{(m)} for m <= n, expressed on the symbols of toda_space(n).
TorusElement hamiltonian(int n, int k, int m);
inline TorusElement hamiltonian(int n, int k) { return hamiltonian(n, k, n); }
// All H_0^{(n)} .. H_n^{(n)}.
std::vector<TorusElement> hamiltonians(int n);

// x_j -> -x_{n+1-j}, p_j -> -p_{n+1-j}, specU -> -specV, specV -> -specU.
SymbolVector theta_vector(int n, const SymbolVector& a);
TorusElement theta(int n, const TorusElement& t);

enum class CKind { plain, tilde };
TorusElement c_operator(int n, int k, CKind kind);

// sum_k H_k^{(n)} Y(p_0 + k x_0)
TorusElement frozen_expansion(int n);
// Labels of the augmented quiver after mu_a, mu_1, ..., mu_{2n-2}.
std::vector<SymbolVector> frozen_trick_labels(int n);
MutationSeq frozen_trick_sequence(int n);

std::vector<CheckReport> verify_frozen_trick(int n);
std::vector<CheckReport> verify_dehn_invariance(int n);
std::vector<CheckReport> verify_commutativity(int n);
// theta(H_k) = H_n^{-1} H_{n-k}
std::vector<CheckReport> verify_htilde(int n);

}  // namespace qcluster
