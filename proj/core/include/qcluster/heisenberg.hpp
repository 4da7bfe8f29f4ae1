#pragma once

// Symbol space of the Heisenberg algebra, labels and the kernel lemma.

#include "qcluster/lattice.hpp"

#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qcluster {

enum class SymbolKind { position, momentum, central_z, central_u, spectral };

using SymbolVector = std::vector<int>;

// Ordered named generators. Each momentum symbol is paired with one
// position symbol; 2*pi*i [p, x] = 1. Central symbols pair to 0.
class SymbolSpace {
public:
    int add(const std::string& name, SymbolKind kind);
    // Adds "p" (momentum) and "x" (position) with <p, x> = 1.
    void add_pair(const std::string& x, const std::string& p);

    std::size_t size() const { return names_.size(); }
    const std::string& name(int i) const { return names_[i]; }
    SymbolKind kind(int i) const { return kinds_[i]; }
    int index(const std::string& name) const;  // throws on unknown
    bool contains(const std::string& name) const { return lookup_.count(name) != 0; }
    int partner(int i) const { return partner_[i]; }

    int pairing(int i, int j) const;
    IntMatrix pairing_matrix() const;

    SymbolVector zero() const { return SymbolVector(size(), 0); }
    SymbolVector vec(std::initializer_list<std::pair<std::string, int>> terms) const;
    SymbolVector vec(const std::vector<std::pair<std::string, int>>& terms) const;
    SymbolVector basis(const std::string& name) const { return vec({{name, 1}}); }

    // "x[2] - x[1]" style rendering; "0" for the zero vector.
    std::string render(const SymbolVector& v) const;
    // Inverse of render.
    SymbolVector parse(const std::string& text) const;

private:
    std::vector<std::string> names_;
    std::vector<SymbolKind> kinds_;
    std::vector<int> partner_;
    std::map<std::string, int> lookup_;
};

int bracket(const SymbolSpace& s, const SymbolVector& a, const SymbolVector& b);

// Matrix of brackets of the labels; the exchange matrix of the labelled quiver.
HalfIntMatrix exchange_from_labels(const SymbolSpace& s, const std::vector<SymbolVector>& labels);

std::size_t kernel_rank(const HalfIntMatrix& eps);

// The graph obtained from a gauge quiver by splitting framing nodes into
// one-dimensional nodes glued at one extra node. Every edge carries the
// quiver vertex whose label it contributes.
struct LoopGraph {
    struct Edge {
        int src;
        int dst;
        int label_vertex;
    };
    int num_nodes = 0;
    int basepoint = 0;
    std::vector<Edge> edges;
    // Vertices y_1 .. y_{2d-2} of each node; their label sum is p_1 - p_d.
    std::vector<std::vector<int>> node_vertices;
    int num_label_vertices = 0;
};

struct PathStep {
    int edge;
    bool forward;
};

struct LoopClass {
    std::vector<int> coeffs;  // over quiver vertices
    SymbolVector symbol;      // sum of coeffs times labels (empty if labels absent)
};

LoopClass loop_class(const LoopGraph& g, const std::vector<PathStep>& path,
                     const SymbolSpace* space = nullptr, const std::vector<SymbolVector>* labels = nullptr);

// One loop per non-tree edge of a BFS spanning tree rooted at the basepoint.
std::vector<std::vector<PathStep>> cycle_basis(const LoopGraph& g);

}  // namespace qcluster
