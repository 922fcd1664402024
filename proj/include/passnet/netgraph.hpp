#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>

#include "passnet/timeline.hpp"

namespace passnet {

/// Directed graph with integer multiplicities on edges. Node and edge
/// containers are ordered so iteration (and everything exported from it)
/// is deterministic.
template <typename Node>
class WeightedDigraph {
public:
    using EdgeMap = std::map<std::pair<Node, Node>, int>;

    void add_edge(const Node& u, const Node& v, int weight = 1) {
        nodes_.insert(u);
        nodes_.insert(v);
        edges_[{u, v}] += weight;
    }

    int weight(const Node& u, const Node& v) const {
        auto it = edges_.find({u, v});
        return it == edges_.end() ? 0 : it->second;
    }

    bool has_edge(const Node& u, const Node& v) const { return edges_.count({u, v}) > 0; }

    const std::set<Node>& nodes() const { return nodes_; }
    const EdgeMap& edges() const { return edges_; }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    long long total_weight() const {
        long long sum = 0;
        for (const auto& [edge, w] : edges_) sum += w;
        return sum;
    }

private:
    std::set<Node> nodes_;
    EdgeMap edges_;
};

/// Simple undirected graph, adjacency-set based.
template <typename Node>
class UndirectedGraph {
public:
    void add_edge(const Node& u, const Node& v) {
        if (u == v) return;
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
    void add_node(const Node& v) { adj_[v]; }

    bool has_edge(const Node& u, const Node& v) const {
        auto it = adj_.find(u);
        return it != adj_.end() && it->second.count(v) > 0;
    }

    const std::map<Node, std::set<Node>>& adjacency() const { return adj_; }
    std::size_t node_count() const { return adj_.size(); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& [v, nbrs] : adj_) twice += nbrs.size();
        return twice / 2;
    }

private:
    std::map<Node, std::set<Node>> adj_;
};

using PassGraph = WeightedDigraph<VirtualPlayer>;
using PlayerGraph = WeightedDigraph<PlayerId>;

/// The per-window directed graph G_i over virtual players.
struct WindowGraph {
    Window window;
    PassGraph graph;
};

PassGraph build_pass_graph(std::span<const PassEvent> events);
WindowGraph build_graph(std::span<const PassEvent> events_in_window, const Window& w);

/// Same node set; {u,v} linked when either direction is. Weights dropped.
UndirectedGraph<VirtualPlayer> undirected_projection(const PassGraph& g);

/// Player-level view: zones erased, parallel edge weights summed.
PlayerGraph collapse_zones(const PassGraph& g);

/// DOT digraph. Nodes read "name@ZoneLabel" when a roster is given,
/// "number@ZoneLabel" otherwise.
std::string export_dot(const PassGraph& g, const ZoneScheme& scheme = ZoneScheme::standard(),
                       const Roster* roster = nullptr);

/// Adjacency dump: {"nodes": [...], "edges": [...]} JSON.
std::string export_json(const WindowGraph& g,
                        const ZoneScheme& scheme = ZoneScheme::standard());

}  // namespace passnet
