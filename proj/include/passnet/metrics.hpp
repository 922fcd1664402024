#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "passnet/netgraph.hpp"

namespace passnet {

/// Maximal run of consecutive passes: each receiver makes the next pass,
/// within the same half, with at most `gap_threshold` minutes between
/// touches.
struct PassChain {
    std::vector<PassEvent> events;
    GlobalMinute start = 0;  // global minute of the first pass

    int length() const { return static_cast<int>(events.size()); }
};

std::vector<PassChain> extract_chains(const MatchLog& log, int gap_threshold = 1);

struct ChainStats {
    double mean = 0.0;
    double sem = 0.0;  // sample std over sqrt(n), 0 when n < 2
    int n = 0;
};

/// Stats over chains *starting* inside `w`.
ChainStats avg_chain_length(std::span<const PassChain> chains, const Window& w);

double passes_per_minute(std::span<const PassEvent> events_in_window, const Window& w);

struct ClusteringOptions {
    bool include_deg1 = false;        // count degree<2 nodes as 0 in the average
    bool global_transitivity = false; // 3*triangles / connected triples instead
};

/// Mean local clustering on the undirected projection, averaged over nodes
/// of degree >= 2 (or all nodes with include_deg1). 0 when no node qualifies.
double clustering_rate(const PassGraph& g, const ClusteringOptions& opts = {});

/// |edges| / n(n-1) over active nodes; pass `full_space_players` to use the
/// whole players-times-9-zones node space instead.
double density(const PassGraph& g, std::optional<int> full_space_players = std::nullopt);

struct CentralityRow {
    PlayerId player = 0;
    ZoneId zone = 0;
    int in_degree = 0;
    int out_degree = 0;
    long long in_strength = 0;
    long long out_strength = 0;
};

/// One row per active virtual player, sorted by zone then descending total
/// strength (player number breaks ties).
std::vector<CentralityRow> centrality(const PassGraph& g);

enum class Metric { Pace, Chains, Clustering, Density };

Metric metric_from_string(std::string_view name);  // throws on unknown names
std::string_view to_string(Metric m);

struct MetricPoint {
    GlobalMinute window_end = 0;
    double value = 0.0;
    double sem = 0.0;
    int n = 0;
};

struct MetricSeries {
    std::string metric;
    bool has_band = false;  // chains series carry (sem, n)
    std::vector<MetricPoint> points;
};

struct SeriesOptions {
    int window_length = 15;
    int window_step = 1;
    int chain_gap = 1;
    ClusteringOptions clustering;
    std::optional<int> density_full_space_players;
};

/// Evaluates the chosen metric over every window of the group. Values are
/// anchored at each window's end minute.
MetricSeries series(const MatchLog& log, PeriodGroup group, Metric metric,
                    const SeriesOptions& opts = {});

}  // namespace passnet
