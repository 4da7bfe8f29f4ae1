#include "qcluster/gauge.hpp"

#include "qcluster/errors.hpp"

#include <json.hpp>

#include <deque>
#include <set>

namespace qcluster {

using nlohmann::json;

int GaugeQuiver::node_index(const std::string& id) const {
    for (std::size_t i = 0; i < gauge_nodes.size(); ++i)
        if (gauge_nodes[i].id == id) return static_cast<int>(i);
    throw UnknownNode("unknown gauge node " + id);
}

int GaugeQuiver::dim_v() const {
    int s = 0;
    for (const auto& n : gauge_nodes) s += n.dim;
    return s;
}

int GaugeQuiver::dim_w() const {
    int s = 0;
    for (const auto& f : flavor_nodes) s += f.dim;
    return s;
}

int GaugeQuiver::euler_characteristic() const {
    return static_cast<int>(gauge_nodes.size()) - static_cast<int>(edges.size());
}

bool GaugeQuiver::in_tree(int edge) const {
    for (int e : spanning_tree)
        if (e == edge) return true;
    return false;
}

std::string GaugeQuiver::w(const std::string& node, int r) {
    return "w[" + node + "," + std::to_string(r) + "]";
}

std::string GaugeQuiver::d(const std::string& node, int r) {
    return "D[" + node + "," + std::to_string(r) + "]";
}

std::vector<std::string> GaugeQuiver::flavor_vars_of(std::size_t flavor) const {
    int t = 1;
    for (std::size_t f = 0; f < flavor; ++f) t += flavor_nodes[f].dim;
    std::vector<std::string> out;
    for (int s = 0; s < flavor_nodes.at(flavor).dim; ++s) out.push_back("z[" + std::to_string(t + s) + "]");
    return out;
}

std::vector<std::string> GaugeQuiver::flavor_vars(const std::string& node) const {
    std::vector<std::string> out;
    for (std::size_t f = 0; f < flavor_nodes.size(); ++f)
        if (flavor_nodes[f].attached_to == node) {
            auto v = flavor_vars_of(f);
            out.insert(out.end(), v.begin(), v.end());
        }
    return out;
}

std::string GaugeQuiver::u_var(int edge) const {
    if (in_tree(edge)) return "";
    int a = 0;
    for (int e = 0; e <= edge; ++e)
        if (!in_tree(e)) ++a;
    return "u[" + std::to_string(a) + "]";
}

int GaugeQuiver::u_count() const {
    return static_cast<int>(edges.size() - spanning_tree.size());
}

namespace {

std::string as_id(const json& v, const char* what) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw SchemaError(std::string(what) + " must be a string id");
}

int as_dim(const json& obj) {
    if (!obj.contains("dim") || !obj["dim"].is_number_integer()) throw SchemaError("node needs an integer dim");
    const int d = obj["dim"].get<int>();
    if (d < 1) throw SchemaError("dimensions must be positive");
    return d;
}

// BFS over the undirected gauge graph; returns tree edges in discovery order.
std::vector<int> bfs_tree(const GaugeQuiver& g, std::vector<int>* depth) {
    const std::size_t n = g.gauge_nodes.size();
    std::vector<int> dist(n, -1);
    std::vector<int> tree;
    const int root = g.node_index(g.marked);
    dist[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const int a = g.node_index(g.edges[e].src), b = g.node_index(g.edges[e].dst);
            int w = -1;
            if (a == u) w = b;
            if (b == u) w = a;
            if (w < 0 || dist[w] >= 0) continue;
            dist[w] = dist[u] + 1;
            tree.push_back(static_cast<int>(e));
            queue.push_back(w);
        }
    }
    for (int d : dist)
        if (d < 0) throw DisconnectedGraph("gauge subgraph is not connected");
    if (depth) *depth = dist;
    return tree;
}

}  // namespace

GaugeQuiver parse_gauge_quiver(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("top level must be an object");
    if (!doc.contains("gauge_nodes") || !doc["gauge_nodes"].is_array() || doc["gauge_nodes"].empty())
        throw SchemaError("gauge_nodes must be a non-empty array");

    GaugeQuiver g;
    std::set<std::string> ids;
    for (const auto& n : doc["gauge_nodes"]) {
        if (!n.is_object() || !n.contains("id")) throw SchemaError("gauge node needs an id");
        GaugeNode node{as_id(n["id"], "id"), as_dim(n)};
        if (!ids.insert(node.id).second) throw SchemaError("duplicate node id " + node.id);
        g.gauge_nodes.push_back(node);
    }
    if (doc.contains("flavor_nodes")) {
        if (!doc["flavor_nodes"].is_array()) throw SchemaError("flavor_nodes must be an array");
        for (const auto& f : doc["flavor_nodes"]) {
            if (!f.is_object() || !f.contains("id") || !f.contains("attached_to"))
                throw SchemaError("flavor node needs id and attached_to");
            FlavorNode fl{as_id(f["id"], "id"), as_dim(f), as_id(f["attached_to"], "attached_to")};
            if (!ids.insert(fl.id).second) throw SchemaError("duplicate node id " + fl.id);
            g.flavor_nodes.push_back(fl);
        }
    }
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw SchemaError("edges must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_object() || !e.contains("src") || !e.contains("dst")) throw SchemaError("edge needs src and dst");
            GaugeEdge edge{as_id(e["src"], "src"), as_id(e["dst"], "dst")};
            if (edge.src == edge.dst) throw LoopEdge("loop at node " + edge.src);
            g.edges.push_back(edge);
        }
    }
    if (!doc.contains("marked")) throw SchemaError("marked node missing");
    g.marked = as_id(doc["marked"], "marked");

    try {
        g.node_index(g.marked);
        for (const auto& f : g.flavor_nodes) g.node_index(f.attached_to);
        for (const auto& e : g.edges) {
            g.node_index(e.src);
            g.node_index(e.dst);
        }
    } catch (const UnknownNode& e) {
        throw SchemaError(e.what());
    }

    std::vector<int> depth;
    const std::vector<int> bfs = bfs_tree(g, &depth);

    if (doc.contains("spanning_tree")) {
        if (!doc["spanning_tree"].is_array()) throw SchemaError("spanning_tree must be an array of edge indices");
        for (const auto& e : doc["spanning_tree"]) {
            if (!e.is_number_integer()) throw SchemaError("spanning_tree entries must be integers");
            const int idx = e.get<int>();
            if (idx < 0 || idx >= static_cast<int>(g.edges.size())) throw SchemaError("spanning_tree index out of range");
            g.spanning_tree.push_back(idx);
        }
        // A spanning tree has nodes - 1 edges and connects everything.
        std::vector<int> comp(g.gauge_nodes.size());
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
        auto find = [&comp](int x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (int e : g.spanning_tree) {
            const int a = find(g.node_index(g.edges[e].src)), b = find(g.node_index(g.edges[e].dst));
            if (a == b) throw SchemaError("spanning_tree contains a cycle");
            comp[a] = b;
        }
        if (g.spanning_tree.size() + 1 != g.gauge_nodes.size()) throw SchemaError("spanning_tree does not span");
    } else {
        g.spanning_tree = bfs;
    }

    if (doc.contains("coloring")) {
        if (!doc["coloring"].is_object()) throw SchemaError("coloring must be an object");
        for (const auto& [id, c] : doc["coloring"].items()) {
            g.node_index(id);
            if (c == "black")
                g.coloring[id] = Color::black;
            else if (c == "white")
                g.coloring[id] = Color::white;
            else
                throw SchemaError("colors are black or white");
        }
        for (const auto& n : g.gauge_nodes)
            if (!g.coloring.count(n.id)) throw SchemaError("coloring misses node " + n.id);
        for (int e : g.spanning_tree)
            if (g.coloring[g.edges[e].src] == g.coloring[g.edges[e].dst])
                throw SchemaError("coloring is not proper on the spanning tree");
    } else {
        // Color by parity of depth in the chosen tree.
        std::vector<std::vector<int>> adj(g.gauge_nodes.size());
        for (int e : g.spanning_tree) {
            const int a = g.node_index(g.edges[e].src), b = g.node_index(g.edges[e].dst);
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<int> par(g.gauge_nodes.size(), -1);
        const int root = g.node_index(g.marked);
        par[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : adj[u])
                if (par[w] < 0) {
                    par[w] = 1 - par[u];
                    queue.push_back(w);
                }
        }
        for (std::size_t i = 0; i < g.gauge_nodes.size(); ++i)
            g.coloring[g.gauge_nodes[i].id] = par[i] == 0 ? Color::black : Color::white;
    }
    return g;
}

std::string gauge_quiver_json(const GaugeQuiver& g) {
    json doc;
    doc["gauge_nodes"] = json::array();
    for (const auto& n : g.gauge_nodes) doc["gauge_nodes"].push_back({{"id", n.id}, {"dim", n.dim}});
    doc["flavor_nodes"] = json::array();
    for (const auto& f : g.flavor_nodes)
        doc["flavor_nodes"].push_back({{"id", f.id}, {"dim", f.dim}, {"attached_to", f.attached_to}});
    doc["edges"] = json::array();
    for (const auto& e : g.edges) doc["edges"].push_back({{"src", e.src}, {"dst", e.dst}});
    doc["marked"] = g.marked;
    doc["spanning_tree"] = g.spanning_tree;
    doc["coloring"] = json::object();
    for (const auto& [id, c] : g.coloring) doc["coloring"][id] = c == Color::black ? "black" : "white";
    return doc.dump(2);
}

GaugeQuiver reverse_edge(const GaugeQuiver& g, int e) {
    if (e < 0 || e >= static_cast<int>(g.edges.size())) throw IndexOutOfRange("edge " + std::to_string(e));
    GaugeQuiver out = g;
    std::swap(out.edges[e].src, out.edges[e].dst);
    return out;
}

}  // namespace qcluster
