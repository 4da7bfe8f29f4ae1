#include "qcluster/heisenberg.hpp"

#include "qcluster/errors.hpp"

#include <cctype>
#include <deque>
#include <sstream>

namespace qcluster {

int SymbolSpace::add(const std::string& name, SymbolKind kind) {
    if (lookup_.count(name)) throw std::invalid_argument("duplicate symbol " + name);
    const int i = static_cast<int>(names_.size());
    names_.push_back(name);
    kinds_.push_back(kind);
    partner_.push_back(-1);
    lookup_[name] = i;
    return i;
}

void SymbolSpace::add_pair(const std::string& x, const std::string& p) {
    const int xi = add(x, SymbolKind::position);
    const int pi = add(p, SymbolKind::momentum);
    partner_[xi] = pi;
    partner_[pi] = xi;
}

int SymbolSpace::index(const std::string& name) const {
    auto it = lookup_.find(name);
    if (it == lookup_.end()) throw std::invalid_argument("unknown symbol " + name);
    return it->second;
}

int SymbolSpace::pairing(int i, int j) const {
    if (partner_[i] != j) return 0;
    return kinds_[i] == SymbolKind::momentum ? 1 : -1;
}

IntMatrix SymbolSpace::pairing_matrix() const {
    IntMatrix m(size(), std::vector<int>(size(), 0));
    for (std::size_t i = 0; i < size(); ++i)
        if (partner_[i] >= 0) m[i][partner_[i]] = pairing(static_cast<int>(i), partner_[i]);
    return m;
}

SymbolVector SymbolSpace::vec(std::initializer_list<std::pair<std::string, int>> terms) const {
    return vec(std::vector<std::pair<std::string, int>>(terms));
}

SymbolVector SymbolSpace::vec(const std::vector<std::pair<std::string, int>>& terms) const {
    SymbolVector v = zero();
    for (const auto& [name, c] : terms) v[index(name)] += c;
    return v;
}

std::string SymbolSpace::render(const SymbolVector& v) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const int c = v[i];
        if (c == 0) continue;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (std::abs(c) != 1) os << std::abs(c) << "*";
        os << names_[i];
    }
    return first ? "0" : os.str();
}

SymbolVector SymbolSpace::parse(const std::string& text) const {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    SymbolVector v = zero();
    if (s == "0" || s.empty()) return v;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        int coeff = 1;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i && j < s.size() && s[j] == '*') {
            coeff = std::stoi(s.substr(i, j - i));
            i = j + 1;
        }
        std::size_t k = i;
        int depth = 0;
        while (k < s.size()) {
            if (s[k] == '[') ++depth;
            if (s[k] == ']') --depth;
            if (depth == 0 && (s[k] == '+' || s[k] == '-')) break;
            ++k;
        }
        if (k == i) throw std::invalid_argument("cannot parse symbol vector: " + text);
        v[index(s.substr(i, k - i))] += sign * coeff;
        i = k;
    }
    return v;
}

int bracket(const SymbolSpace& s, const SymbolVector& a, const SymbolVector& b) {
    int out = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const int j = s.partner(static_cast<int>(i));
        if (j < 0) continue;
        out += a[i] * b[j] * s.pairing(static_cast<int>(i), j);
    }
    return out;
}

HalfIntMatrix exchange_from_labels(const SymbolSpace& s, const std::vector<SymbolVector>& labels) {
    const std::size_t n = labels.size();
    HalfIntMatrix m{IntMatrix(n, std::vector<int>(n, 0))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.twice[i][j] = 2 * bracket(s, labels[i], labels[j]);
    return m;
}

std::size_t kernel_rank(const HalfIntMatrix& eps) {
    return eps.size() - rational_rank(eps);
}

LoopClass loop_class(const LoopGraph& g, const std::vector<PathStep>& path, const SymbolSpace* space,
                     const std::vector<SymbolVector>* labels) {
    LoopClass out;
    out.coeffs.assign(g.num_label_vertices, 0);
    if (!path.empty()) {
        auto head = [&g](const PathStep& st) {
            const auto& e = g.edges.at(st.edge);
            return st.forward ? e.dst : e.src;
        };
        auto tail = [&g](const PathStep& st) {
            const auto& e = g.edges.at(st.edge);
            return st.forward ? e.src : e.dst;
        };
        if (tail(path.front()) != g.basepoint) throw NotClosed("path does not start at the basepoint");
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            if (head(path[k]) != tail(path[k + 1])) throw NotClosed("path is not connected");
        if (head(path.back()) != g.basepoint) throw NotClosed("path does not return to the basepoint");

        const std::size_t m = path.size();
        for (std::size_t k = 0; k < m; ++k) {
            const int sgn = path[k].forward ? 1 : -1;
            out.coeffs[g.edges[path[k].edge].label_vertex] += sgn;
            // Vertex between step k and step k+1 (cyclically): contributes the
            // node's Coxeter label sum when both steps run the same way.
            const PathStep& next = path[(k + 1) % m];
            const int sgn_next = next.forward ? 1 : -1;
            if (sgn == sgn_next) {
                for (int v : g.node_vertices.at(head(path[k]))) out.coeffs[v] += sgn_next;
            }
        }
    }
    if (space && labels) {
        out.symbol = space->zero();
        for (std::size_t v = 0; v < out.coeffs.size(); ++v)
            for (std::size_t i = 0; i < out.symbol.size(); ++i) out.symbol[i] += out.coeffs[v] * (*labels)[v][i];
    }
    return out;
}

std::vector<std::vector<PathStep>> cycle_basis(const LoopGraph& g) {
    // BFS tree: parent step for each node, as a step walking from the parent.
    std::vector<int> parent_edge(g.num_nodes, -1);
    std::vector<bool> parent_forward(g.num_nodes, true);
    std::vector<bool> seen(g.num_nodes, false);
    std::vector<bool> tree_edge(g.edges.size(), false);
    std::deque<int> queue{g.basepoint};
    seen[g.basepoint] = true;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const auto& ed = g.edges[e];
            int w = -1;
            bool fwd = true;
            if (ed.src == u)
                w = ed.dst;
            else if (ed.dst == u) {
                w = ed.src;
                fwd = false;
            }
            if (w < 0 || seen[w]) continue;
            seen[w] = true;
            parent_edge[w] = static_cast<int>(e);
            parent_forward[w] = fwd;
            tree_edge[e] = true;
            queue.push_back(w);
        }
    }
    auto path_from_base = [&](int node) {
        std::vector<PathStep> rev;
        while (node != g.basepoint) {
            rev.push_back({parent_edge[node], parent_forward[node]});
            const auto& ed = g.edges[parent_edge[node]];
            node = parent_forward[node] ? ed.src : ed.dst;
        }
        return std::vector<PathStep>(rev.rbegin(), rev.rend());
    };
    std::vector<std::vector<PathStep>> loops;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (tree_edge[e]) continue;
        const auto& ed = g.edges[e];
        std::vector<PathStep> loop = path_from_base(ed.src);
        loop.push_back({static_cast<int>(e), true});
        auto back = path_from_base(ed.dst);
        for (auto it = back.rbegin(); it != back.rend(); ++it) loop.push_back({it->edge, !it->forward});
        loops.push_back(std::move(loop));
    }
    return loops;
}

}  // namespace qcluster
