#pragma once

// Gauge-theory quivers: gauge nodes with dimensions, framing (flavor) nodes,
// oriented gauge edges, a marked node, a spanning tree and its 2-coloring.

#include <map>
#include <string>
#include <vector>

namespace qcluster {

enum class Color { black, white };

struct GaugeNode {
    std::string id;
    int dim = 1;
};

struct FlavorNode {
    std::string id;
    int dim = 1;
    std::string attached_to;
};

struct GaugeEdge {
    std::string src;
    std::string dst;
};

struct GaugeQuiver {
    std::vector<GaugeNode> gauge_nodes;
    std::vector<FlavorNode> flavor_nodes;
    std::vector<GaugeEdge> edges;
    std::string marked;
    std::vector<int> spanning_tree;  // edge indices
    std::map<std::string, Color> coloring;

    int node_index(const std::string& id) const;  // throws UnknownNode
    int dim(const std::string& id) const { return gauge_nodes[node_index(id)].dim; }
    int dim_v() const;
    int dim_w() const;
    int euler_characteristic() const;  // nodes minus edges
    bool in_tree(int edge) const;

    // Generator names: "w[i,r]", "z[t]" (global flavor numbering), "u[a]".
    static std::string w(const std::string& node, int r);
    static std::string d(const std::string& node, int r);
    // Flavor variables attached to a gauge node, in declaration order.
    std::vector<std::string> flavor_vars(const std::string& node) const;
    // Flavor variables of one flavor node.
    std::vector<std::string> flavor_vars_of(std::size_t flavor) const;
    // Equivariant parameter of an edge; empty for tree edges (u = 1).
    std::string u_var(int edge) const;
    int u_count() const;
};

// Parses and validates; fills a BFS spanning tree from the marked node and
// its induced coloring (marked node black) when they are omitted.
GaugeQuiver parse_gauge_quiver(const std::string& json_text);
std::string gauge_quiver_json(const GaugeQuiver& g);

// The same quiver with edge e reversed.
GaugeQuiver reverse_edge(const GaugeQuiver& g, int e);

}  // namespace qcluster
