#include "passnet/netgraph.hpp"

#include <nlohmann/json.hpp>

namespace passnet {

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string node_label(const VirtualPlayer& v, const ZoneScheme& scheme, const Roster* roster) {
    std::string who = std::to_string(v.player);
    if (roster) {
        if (const RosterEntry* entry = roster->find(v.player)) who = entry->name;
    }
    return who + "@" + scheme.label_of(v.zone);
}

}  // namespace

PassGraph build_pass_graph(std::span<const PassEvent> events) {
    PassGraph g;
    for (const auto& e : events) {
        g.add_edge(VirtualPlayer{e.passer, e.zone_from}, VirtualPlayer{e.receiver, e.zone_to});
    }
    return g;
}

WindowGraph build_graph(std::span<const PassEvent> events_in_window, const Window& w) {
    return WindowGraph{w, build_pass_graph(events_in_window)};
}

UndirectedGraph<VirtualPlayer> undirected_projection(const PassGraph& g) {
    UndirectedGraph<VirtualPlayer> u;
    for (const auto& v : g.nodes()) u.add_node(v);
    for (const auto& [edge, w] : g.edges()) u.add_edge(edge.first, edge.second);
    return u;
}

PlayerGraph collapse_zones(const PassGraph& g) {
    PlayerGraph out;
    for (const auto& [edge, w] : g.edges()) {
        out.add_edge(edge.first.player, edge.second.player, w);
    }
    return out;
}

std::string export_dot(const PassGraph& g, const ZoneScheme& scheme, const Roster* roster) {
    std::string out = "digraph {\n";
    for (const auto& v : g.nodes()) {
        out += "  \"" + dot_escape(node_label(v, scheme, roster)) + "\";\n";
    }
    for (const auto& [edge, w] : g.edges()) {
        out += "  \"" + dot_escape(node_label(edge.first, scheme, roster)) + "\" -> \"" +
               dot_escape(node_label(edge.second, scheme, roster)) + "\" [weight=" +
               std::to_string(w) + "];\n";
    }
    out += "}\n";
    return out;
}

std::string export_json(const WindowGraph& g, const ZoneScheme& scheme) {
    nlohmann::json doc;
    doc["window"] = {{"start", g.window.start},
                     {"length", g.window.length},
                     {"end", g.window.end()}};
    auto& nodes = doc["nodes"] = nlohmann::json::array();
    for (const auto& v : g.graph.nodes()) {
        nodes.push_back({{"player", v.player},
                         {"zone", v.zone},
                         {"zone_label", scheme.label_of(v.zone)}});
    }
    auto& edges = doc["edges"] = nlohmann::json::array();
    for (const auto& [edge, w] : g.graph.edges()) {
        edges.push_back({{"from", {{"player", edge.first.player}, {"zone", edge.first.zone}}},
                         {"to", {{"player", edge.second.player}, {"zone", edge.second.zone}}},
                         {"weight", w}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace passnet
