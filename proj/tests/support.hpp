#pragma once

// Test-side oracles and generators. Everything here is deliberately naive and
// independent of the library's computation paths.

#include <cmath>
#include <random>
#include <vector>

#include "passnet/metrics.hpp"
#include "passnet/netgraph.hpp"

namespace testsupport {

struct MeanSem {
    double mean = 0.0;
    double sem = 0.0;
};

// Textbook two-pass mean and standard error of the mean (n-1 denominator).
inline MeanSem mean_sem_oracle(const std::vector<double>& xs) {
    MeanSem r;
    if (xs.empty()) return r;
    double sum = 0.0;
    for (double x : xs) sum += x;
    r.mean = sum / xs.size();
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - r.mean) * (x - r.mean);
        double sample_sd = std::sqrt(ss / (xs.size() - 1));
        r.sem = sample_sd / std::sqrt(static_cast<double>(xs.size()));
    }
    return r;
}

// Brute-force local clustering by enumerating every node triple.
inline double clustering_oracle(const passnet::PassGraph& g, bool include_deg1 = false,
                                bool global_transitivity = false) {
    std::vector<passnet::VirtualPlayer> nodes(g.nodes().begin(), g.nodes().end());
    const std::size_t n = nodes.size();

    auto linked = [&](std::size_t a, std::size_t b) {
        return g.has_edge(nodes[a], nodes[b]) || g.has_edge(nodes[b], nodes[a]);
    };

    std::vector<long long> degree(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && linked(a, b)) ++degree[a];
        }
    }

    std::vector<long long> triangles(n, 0);
    long long triangle_total = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                if (linked(a, b) && linked(b, c) && linked(a, c)) {
                    ++triangles[a];
                    ++triangles[b];
                    ++triangles[c];
                    ++triangle_total;
                }
            }
        }
    }

    if (global_transitivity) {
        long long triples = 0;
        for (std::size_t a = 0; a < n; ++a) triples += degree[a] * (degree[a] - 1) / 2;
        return triples == 0 ? 0.0 : 3.0 * triangle_total / static_cast<double>(triples);
    }

    double sum = 0.0;
    long long counted = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (degree[a] < 2) {
            if (include_deg1) ++counted;
            continue;
        }
        sum += static_cast<double>(triangles[a]) /
               (static_cast<double>(degree[a]) * (degree[a] - 1) / 2.0);
        ++counted;
    }
    return counted == 0 ? 0.0 : sum / counted;
}

// Random directed graph over `n` virtual players with edge probability `p`.
inline passnet::PassGraph random_digraph(std::mt19937_64& rng, int n, double p) {
    passnet::PassGraph g;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> zone(1, 9);
    std::vector<passnet::VirtualPlayer> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back({i + 1, zone(rng)});
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b && unit(rng) < p) g.add_edge(nodes[a], nodes[b]);
        }
    }
    return g;
}

// Random well-formed match log: sorted minutes, valid ranges, no self passes.
inline passnet::MatchLog random_valid_log(std::mt19937_64& rng, int halves = 2,
                                          int events_per_half = 40, int players = 14) {
    passnet::MatchLog log;
    std::uniform_int_distribution<int> step(0, 2);
    std::uniform_int_distribution<int> player(1, players);
    std::uniform_int_distribution<int> zone(1, 9);
    for (int h = 1; h <= halves; ++h) {
        int cap = h <= 2 ? 60 : 25;
        int minute = 0;
        for (int i = 0; i < events_per_half && minute <= cap; ++i) {
            passnet::PassEvent e;
            e.half = h;
            e.minute = minute;
            e.passer = player(rng);
            do {
                e.receiver = player(rng);
            } while (e.receiver == e.passer);
            e.zone_from = zone(rng);
            e.zone_to = zone(rng);
            e.seq = static_cast<int>(log.events.size());
            log.events.push_back(e);
            minute += step(rng);
        }
    }
    return log;
}

}  // namespace testsupport
