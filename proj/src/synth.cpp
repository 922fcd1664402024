#include "passnet/synth.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace passnet {

namespace {

constexpr std::uint64_t kArrivalStream = 0xA1;
constexpr std::uint64_t kLengthStream = 0xB2;
constexpr std::uint64_t kPathStream = 0xC3;

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Substream key for (seed, purpose, half, counter). Counter-indexed draws
// keep runs with the same seed aligned even when parameters differ.
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t purpose, std::uint64_t half,
                         std::uint64_t counter) {
    return splitmix(splitmix(splitmix(seed ^ purpose * 0x9E3779B97F4A7C15ULL) ^
                             half * 0xC2B2AE3D27D4EB4FULL) ^
                    counter);
}

double to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;  // [0, 1)
}

int draw_index(double u, const double* weights, int count, int exclude) {
    double total = 0.0;
    for (int i = 0; i < count; ++i) {
        if (i != exclude) total += weights[i];
    }
    double x = u * total;
    int last = -1;
    for (int i = 0; i < count; ++i) {
        if (i == exclude) continue;
        x -= weights[i];
        last = i;
        if (x < 0.0) return i;
    }
    return last;  // guards against accumulated rounding
}

int geometric_length(double u, double q) {
    if (q <= 0.0) return 1;
    double len = 1.0 + std::floor(std::log1p(-u) / std::log(q));
    if (len > 1000000.0) return 1000000;
    return static_cast<int>(len);
}

int minute_cap(int half) { return half <= 2 ? 61 : 26; }

void check(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

SimConfig SimConfig::defaults() {
    SimConfig cfg;
    cfg.receiver_bias.assign(cfg.players, 1.0);
    for (auto& row : cfg.zone_transition) row.fill(1.0 / kZoneCount);
    return cfg;
}

void validate_config(const SimConfig& cfg) {
    check(!cfg.half_minutes.empty() && cfg.half_minutes.size() <= 4,
          "half_minutes must list 1..4 halves");
    for (std::size_t i = 0; i < cfg.half_minutes.size(); ++i) {
        check(cfg.half_minutes[i] >= 1, "half duration must be >= 1 minute");
        check(cfg.half_minutes[i] <= minute_cap(static_cast<int>(i) + 1),
              "half duration exceeds the plausible clock for that half");
    }
    check(cfg.players >= 2, "players must be >= 2");
    check(cfg.pass_rate > 0.0, "pass_rate must be positive");
    check(cfg.continuation_prob >= 0.0 && cfg.continuation_prob < 1.0,
          "continuation_prob must lie in [0, 1)");
    check(cfg.receiver_bias.size() == static_cast<std::size_t>(cfg.players),
          "receiver_bias must have one weight per player");
    for (double w : cfg.receiver_bias) check(w > 0.0, "receiver weights must be positive");
    for (const auto& row : cfg.zone_transition) {
        double sum = 0.0;
        for (double p : row) {
            check(p >= 0.0, "zone transition entries must be non-negative");
            sum += p;
        }
        check(std::abs(sum - 1.0) <= 1e-9, "zone transition rows must sum to 1");
    }
}

SimOutput simulate_detailed(const SimConfig& cfg) {
    validate_config(cfg);
    SimOutput out;
    out.log.team_label = "synthetic";

    const double chain_rate = cfg.pass_rate * (1.0 - cfg.continuation_prob);

    for (std::size_t half_idx = 0; half_idx < cfg.half_minutes.size(); ++half_idx) {
        const int half = static_cast<int>(half_idx) + 1;
        const double duration = cfg.half_minutes[half_idx];
        double t = 0.0;
        ZoneId ball_zone = 5;        // each half kicks off from the central zone
        PlayerId prev_receiver = 0;  // 0: nobody to exclude at the half's kickoff

        for (std::uint64_t k = 0;; ++k) {
            double gap_u = to_unit(stream_key(cfg.seed, kArrivalStream, half, k));
            t += -std::log1p(-gap_u) / chain_rate;
            if (t >= duration) break;
            const int minute = static_cast<int>(t);

            double len_u = to_unit(stream_key(cfg.seed, kLengthStream, half, k));
            const int length = geometric_length(len_u, cfg.continuation_prob);

            std::mt19937_64 path(stream_key(cfg.seed, kPathStream, half, k));
            // A new possession starts with someone other than the player who
            // ended the previous one, so recovered chains match ground truth.
            PlayerId passer = 1 + draw_index(to_unit(path()), cfg.receiver_bias.data(),
                                             cfg.players, prev_receiver - 1);
            for (int i = 0; i < length; ++i) {
                PlayerId receiver = 1 + draw_index(to_unit(path()), cfg.receiver_bias.data(),
                                                   cfg.players, passer - 1);
                ZoneId zone_to = 1 + draw_index(to_unit(path()),
                                                cfg.zone_transition[ball_zone - 1].data(),
                                                kZoneCount, -1);
                PassEvent e;
                e.half = half;
                e.minute = minute;
                e.passer = passer;
                e.zone_from = ball_zone;
                e.receiver = receiver;
                e.zone_to = zone_to;
                e.seq = static_cast<int>(out.log.events.size());
                out.log.events.push_back(e);
                passer = receiver;
                ball_zone = zone_to;
            }
            prev_receiver = passer;
            out.chain_lengths.push_back(length);
        }
    }
    return out;
}

MatchLog simulate(const SimConfig& cfg) { return simulate_detailed(cfg).log; }

SimConfig scenario(std::string_view name) {
    SimConfig cfg = SimConfig::defaults();
    std::array<double, kZoneCount> mass{};
    if (name == "disruption") {
        cfg.pass_rate = 6.0;
        cfg.continuation_prob = 0.6;
        mass = {0.15, 0.15, 0.15, 0.20, 0.15, 0.05, 0.05, 0.05, 0.05};
    } else if (name == "domination") {
        cfg.pass_rate = 8.0;
        cfg.continuation_prob = 0.85;
        mass = {0.03, 0.03, 0.03, 0.05, 0.16, 0.14, 0.14, 0.21, 0.21};
    } else {
        throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
    }
    for (auto& row : cfg.zone_transition) row = mass;
    return cfg;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_double(std::string_view s, int line) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(line, "bad number '" + std::string(s) + "'");
    }
    return value;
}

long long parse_ll(std::string_view s, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(line, "bad integer '" + std::string(s) + "'");
    }
    return value;
}

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::size_t end = comma == std::string_view::npos ? s.size() : comma;
        out.push_back(trim(s.substr(pos, end - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

SimConfig parse_sim_config(std::string_view text) {
    SimConfig cfg = SimConfig::defaults();
    bool bias_given = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        std::string_view raw = text.substr(pos, end - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;

        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "expected key=value");
        }
        std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));

        if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_ll(value, line_no));
        } else if (key == "half_minutes") {
            cfg.half_minutes.clear();
            for (auto part : split_commas(value)) {
                cfg.half_minutes.push_back(static_cast<int>(parse_ll(part, line_no)));
            }
        } else if (key == "players") {
            cfg.players = static_cast<int>(parse_ll(value, line_no));
        } else if (key == "pass_rate") {
            cfg.pass_rate = parse_double(value, line_no);
        } else if (key == "continuation_prob") {
            cfg.continuation_prob = parse_double(value, line_no);
        } else if (key == "receiver_bias") {
            cfg.receiver_bias.clear();
            for (auto part : split_commas(value)) {
                cfg.receiver_bias.push_back(parse_double(part, line_no));
            }
            bias_given = true;
        } else if (key.rfind("zone_transition_", 0) == 0) {
            long long row = parse_ll(key.substr(16), line_no);
            if (row < 1 || row > kZoneCount) {
                throw ParseError(line_no, "zone_transition row outside 1..9");
            }
            auto parts = split_commas(value);
            if (parts.size() != kZoneCount) {
                throw ParseError(line_no, "zone_transition row needs 9 values");
            }
            for (int i = 0; i < kZoneCount; ++i) {
                cfg.zone_transition[row - 1][i] = parse_double(parts[i], line_no);
            }
        } else {
            throw ParseError(line_no, "unknown key '" + key + "'");
        }
    }

    if (!bias_given) cfg.receiver_bias.assign(cfg.players, 1.0);
    validate_config(cfg);
    return cfg;
}

std::string write_sim_config(const SimConfig& cfg) {
    std::string out;
    out += "seed=" + std::to_string(cfg.seed) + "\n";
    out += "half_minutes=";
    for (std::size_t i = 0; i < cfg.half_minutes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(cfg.half_minutes[i]);
    }
    out += "\nplayers=" + std::to_string(cfg.players) + "\n";
    out += "pass_rate=" + format_double(cfg.pass_rate) + "\n";
    out += "continuation_prob=" + format_double(cfg.continuation_prob) + "\n";
    out += "receiver_bias=";
    for (std::size_t i = 0; i < cfg.receiver_bias.size(); ++i) {
        if (i) out += ',';
        out += format_double(cfg.receiver_bias[i]);
    }
    out += '\n';
    for (int row = 1; row <= kZoneCount; ++row) {
        out += "zone_transition_" + std::to_string(row) + "=";
        for (int i = 0; i < kZoneCount; ++i) {
            if (i) out += ',';
            out += format_double(cfg.zone_transition[row - 1][i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace passnet
