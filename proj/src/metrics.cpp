#include "passnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace passnet {

std::vector<PassChain> extract_chains(const MatchLog& log, int gap_threshold) {
    std::vector<PassChain> chains;
    for (const auto& e : log.events) {
        bool linked = false;
        if (!chains.empty()) {
            const PassEvent& prev = chains.back().events.back();
            linked = prev.half == e.half && prev.receiver == e.passer &&
                     e.minute - prev.minute <= gap_threshold;
        }
        if (linked) {
            chains.back().events.push_back(e);
        } else {
            chains.push_back(PassChain{{e}, global_minute(e)});
        }
    }
    return chains;
}

ChainStats avg_chain_length(std::span<const PassChain> chains, const Window& w) {
    ChainStats stats;
    double sum = 0.0;
    for (const auto& c : chains) {
        if (!w.contains(c.start)) continue;
        sum += c.length();
        ++stats.n;
    }
    if (stats.n == 0) return stats;
    stats.mean = sum / stats.n;
    if (stats.n > 1) {
        double ss = 0.0;
        for (const auto& c : chains) {
            if (!w.contains(c.start)) continue;
            double d = c.length() - stats.mean;
            ss += d * d;
        }
        stats.sem = std::sqrt(ss / (stats.n - 1)) / std::sqrt(double(stats.n));
    }
    return stats;
}

double passes_per_minute(std::span<const PassEvent> events_in_window, const Window& w) {
    return static_cast<double>(events_in_window.size()) / w.length;
}

namespace {

// Closed neighbor pairs at v, i.e. triangles through v.
long long triangles_at(const UndirectedGraph<VirtualPlayer>& u,
                       const std::set<VirtualPlayer>& nbrs) {
    long long closed = 0;
    for (auto a = nbrs.begin(); a != nbrs.end(); ++a) {
        for (auto b = std::next(a); b != nbrs.end(); ++b) {
            if (u.has_edge(*a, *b)) ++closed;
        }
    }
    return closed;
}

}  // namespace

double clustering_rate(const PassGraph& g, const ClusteringOptions& opts) {
    auto u = undirected_projection(g);

    if (opts.global_transitivity) {
        long long closed = 0;  // sums to 3 * triangle count
        long long triples = 0;
        for (const auto& [v, nbrs] : u.adjacency()) {
            long long d = static_cast<long long>(nbrs.size());
            triples += d * (d - 1) / 2;
            closed += triangles_at(u, nbrs);
        }
        return triples == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(triples);
    }

    double sum = 0.0;
    long long counted = 0;
    for (const auto& [v, nbrs] : u.adjacency()) {
        long long d = static_cast<long long>(nbrs.size());
        if (d < 2) {
            if (opts.include_deg1) ++counted;  // contributes 0
            continue;
        }
        long long pairs = d * (d - 1) / 2;
        sum += static_cast<double>(triangles_at(u, nbrs)) / static_cast<double>(pairs);
        ++counted;
    }
    return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

double density(const PassGraph& g, std::optional<int> full_space_players) {
    long long n = static_cast<long long>(g.node_count());
    if (full_space_players) {
        n = static_cast<long long>(*full_space_players) * kZoneCount;
    }
    if (n <= 1) return 0.0;
    return static_cast<double>(g.edge_count()) / (static_cast<double>(n) * (n - 1));
}

std::vector<CentralityRow> centrality(const PassGraph& g) {
    std::map<VirtualPlayer, CentralityRow> rows;
    for (const auto& v : g.nodes()) {
        rows[v] = CentralityRow{v.player, v.zone, 0, 0, 0, 0};
    }
    for (const auto& [edge, w] : g.edges()) {
        auto& from = rows[edge.first];
        auto& to = rows[edge.second];
        from.out_degree += 1;
        from.out_strength += w;
        to.in_degree += 1;
        to.in_strength += w;
    }
    std::vector<CentralityRow> out;
    out.reserve(rows.size());
    for (const auto& [v, row] : rows) out.push_back(row);
    std::sort(out.begin(), out.end(), [](const CentralityRow& a, const CentralityRow& b) {
        if (a.zone != b.zone) return a.zone < b.zone;
        long long sa = a.in_strength + a.out_strength;
        long long sb = b.in_strength + b.out_strength;
        if (sa != sb) return sa > sb;
        return a.player < b.player;
    });
    return out;
}

Metric metric_from_string(std::string_view name) {
    if (name == "pace") return Metric::Pace;
    if (name == "chains") return Metric::Chains;
    if (name == "clustering") return Metric::Clustering;
    if (name == "density") return Metric::Density;
    throw std::invalid_argument("unknown metric name '" + std::string(name) + "'");
}

std::string_view to_string(Metric m) {
    switch (m) {
        case Metric::Pace: return "pace";
        case Metric::Chains: return "chains";
        case Metric::Clustering: return "clustering";
        case Metric::Density: return "density";
    }
    return "?";
}

MetricSeries series(const MatchLog& log, PeriodGroup group, Metric metric,
                    const SeriesOptions& opts) {
    MetricSeries out;
    out.metric = std::string(to_string(metric));
    out.has_band = metric == Metric::Chains;

    auto ws = windows(log, group, opts.window_length, opts.window_step);
    if (ws.empty()) return out;
    auto events = group_events(log, group);

    std::vector<PassChain> chains;
    if (metric == Metric::Chains) {
        for (auto& c : extract_chains(log, opts.chain_gap)) {
            if (group.contains_half(c.events.front().half)) chains.push_back(std::move(c));
        }
    }

    for (const auto& w : ws) {
        MetricPoint p;
        p.window_end = w.end();
        switch (metric) {
            case Metric::Pace: {
                p.value = passes_per_minute(assign(events, w), w);
                break;
            }
            case Metric::Chains: {
                ChainStats st = avg_chain_length(chains, w);
                p.value = st.mean;
                p.sem = st.sem;
                p.n = st.n;
                break;
            }
            case Metric::Clustering: {
                p.value = clustering_rate(build_pass_graph(assign(events, w)), opts.clustering);
                break;
            }
            case Metric::Density: {
                p.value = density(build_pass_graph(assign(events, w)),
                                  opts.density_full_space_players);
                break;
            }
        }
        out.points.push_back(p);
    }
    return out;
}

}  // namespace passnet
