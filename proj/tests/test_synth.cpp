#include "doctest.h"

#include <cmath>
#include <map>

#include "passnet/metrics.hpp"
#include "passnet/synth.hpp"
#include "support.hpp"

using namespace passnet;

namespace {

bool same_config(const SimConfig& a, const SimConfig& b) {
    return a.seed == b.seed && a.half_minutes == b.half_minutes && a.players == b.players &&
           a.pass_rate == b.pass_rate && a.continuation_prob == b.continuation_prob &&
           a.zone_transition == b.zone_transition && a.receiver_bias == b.receiver_bias;
}

// Pearson statistic for geometric-length bins 1..10 plus a pooled >=11 tail.
double geometric_chi2(const std::vector<int>& lengths, double q) {
    const int kBins = 10;
    std::vector<double> observed(kBins + 1, 0.0);
    for (int len : lengths) {
        if (len <= kBins) {
            observed[len - 1] += 1.0;
        } else {
            observed[kBins] += 1.0;
        }
    }
    const double n = static_cast<double>(lengths.size());
    double chi2 = 0.0;
    for (int k = 1; k <= kBins; ++k) {
        double expected = n * (1.0 - q) * std::pow(q, k - 1);
        double d = observed[k - 1] - expected;
        chi2 += d * d / expected;
    }
    double tail_expected = n * std::pow(q, kBins);
    double d = observed[kBins] - tail_expected;
    chi2 += d * d / tail_expected;
    return chi2;
}

// Upper 1% point of chi-square with 10 degrees of freedom.
constexpr double kChi2Crit10df99 = 23.209251158954356;

}  // namespace

TEST_CASE("default config is valid and uniform") {
    SimConfig cfg = SimConfig::defaults();
    validate_config(cfg);
    CHECK(cfg.players == 11);
    CHECK(cfg.receiver_bias.size() == 11);
    CHECK(cfg.zone_transition[0][0] == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("config validation rejects out-of-domain fields") {
    auto broken = [](auto mutate) {
        SimConfig cfg = SimConfig::defaults();
        mutate(cfg);
        return cfg;
    };
    CHECK_THROWS_AS(validate_config(broken([](SimConfig& c) { c.half_minutes.clear(); })),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        validate_config(broken([](SimConfig& c) { c.half_minutes = {45, 45, 15, 15, 15}; })),
        std::invalid_argument);
    CHECK_THROWS_AS(validate_config(broken([](SimConfig& c) { c.half_minutes = {0}; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(broken([](SimConfig& c) { c.half_minutes = {62, 45}; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(broken([](SimConfig& c) { c.players = 1; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(broken([](SimConfig& c) { c.pass_rate = 0.0; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(broken([](SimConfig& c) { c.continuation_prob = 1.0; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(broken([](SimConfig& c) { c.continuation_prob = -0.1; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(broken([](SimConfig& c) { c.receiver_bias.pop_back(); })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(broken([](SimConfig& c) { c.receiver_bias[0] = 0.0; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        validate_config(broken([](SimConfig& c) { c.zone_transition[3][0] += 0.5; })),
        std::invalid_argument);
    CHECK_THROWS_AS(
        validate_config(broken([](SimConfig& c) { c.zone_transition[3][0] = -1.0; })),
        std::invalid_argument);
}

TEST_CASE("simulation is deterministic in the seed") {
    SimConfig cfg = SimConfig::defaults();
    cfg.seed = 11;
    cfg.continuation_prob = 0.5;
    std::string a = serialize_log(simulate(cfg));
    std::string b = serialize_log(simulate(cfg));
    CHECK(a == b);
    CHECK_FALSE(a.empty());

    cfg.seed = 12;
    CHECK(serialize_log(simulate(cfg)) != a);
}

TEST_CASE("simulated events respect every log invariant") {
    SimConfig cfg = SimConfig::defaults();
    cfg.seed = 5;
    cfg.continuation_prob = 0.7;
    cfg.half_minutes = {45, 45, 15, 15};
    MatchLog log = simulate(cfg);
    REQUIRE_FALSE(log.events.empty());
    CHECK(log.team_label == "synthetic");

    int prev_half = 1;
    int prev_minute = 0;
    for (const auto& e : log.events) {
        CHECK(e.half >= prev_half);
        if (e.half == prev_half) CHECK(e.minute >= prev_minute);
        CHECK(e.minute >= 0);
        CHECK(e.minute < 45);
        CHECK(e.passer >= 1);
        CHECK(e.passer <= cfg.players);
        CHECK(e.receiver >= 1);
        CHECK(e.receiver <= cfg.players);
        CHECK(e.passer != e.receiver);
        CHECK(e.zone_from >= 1);
        CHECK(e.zone_from <= 9);
        CHECK(e.zone_to >= 1);
        CHECK(e.zone_to <= 9);
        prev_half = e.half;
        prev_minute = e.minute;
    }
}

TEST_CASE("zero continuation makes every possession a single pass") {
    SimConfig cfg = SimConfig::defaults();
    cfg.seed = 3;
    SimOutput out = simulate_detailed(cfg);
    REQUIRE_FALSE(out.chain_lengths.empty());
    for (int len : out.chain_lengths) CHECK(len == 1);
    CHECK(out.log.events.size() == out.chain_lengths.size());
}

TEST_CASE("chain extraction recovers the generator's ground truth") {
    for (double q : {0.0, 0.3, 0.6, 0.85}) {
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            SimConfig cfg = SimConfig::defaults();
            cfg.seed = seed;
            cfg.continuation_prob = q;
            SimOutput out = simulate_detailed(cfg);
            for (int gap : {0, 1, 3}) {
                auto chains = extract_chains(out.log, gap);
                REQUIRE(chains.size() == out.chain_lengths.size());
                for (std::size_t i = 0; i < chains.size(); ++i) {
                    CHECK(chains[i].length() == out.chain_lengths[i]);
                }
            }
        }
    }
}

TEST_CASE("mean chain length approaches 1/(1-q)") {
    SimConfig cfg = SimConfig::defaults();
    cfg.continuation_prob = 0.75;
    cfg.pass_rate = 24.0;  // 6 chains per minute
    std::vector<double> lengths;
    for (std::uint64_t seed = 201; seed <= 204; ++seed) {
        cfg.seed = seed;
        for (int len : simulate_detailed(cfg).chain_lengths) {
            lengths.push_back(len);
        }
    }
    REQUIRE(lengths.size() > 1500);
    auto stats = testsupport::mean_sem_oracle(lengths);
    CHECK(std::abs(stats.mean - 4.0) < 3.0 * stats.sem + 1e-9);
}

TEST_CASE("the configured pass rate emerges over a full match") {
    SimConfig cfg = SimConfig::defaults();
    cfg.seed = 42;
    cfg.pass_rate = 6.0;
    cfg.continuation_prob = 0.5;
    MatchLog log = simulate(cfg);
    double pace = static_cast<double>(log.events.size()) / 90.0;
    CHECK(pace > 5.0);
    CHECK(pace < 7.0);
}

TEST_CASE("chain lengths pass a goodness-of-fit check against the geometric law") {
    const double q = 0.6;
    std::vector<int> lengths;
    for (std::uint64_t seed = 301; seed <= 305; ++seed) {
        SimConfig cfg = SimConfig::defaults();
        cfg.seed = seed;
        cfg.continuation_prob = q;
        cfg.pass_rate = 60.0;
        auto out = simulate_detailed(cfg);
        lengths.insert(lengths.end(), out.chain_lengths.begin(), out.chain_lengths.end());
    }
    REQUIRE(lengths.size() > 10000);
    CHECK(geometric_chi2(lengths, q) < kChi2Crit10df99);
}

TEST_CASE("simulated logs survive the serialize/parse round trip") {
    SimConfig cfg = SimConfig::defaults();
    cfg.seed = 9;
    cfg.continuation_prob = 0.8;
    MatchLog log = simulate(cfg);
    MatchLog reparsed =
        parse_log(serialize_log(log), ZoneScheme::standard(), ParseMode::Strict);
    CHECK(reparsed.events == log.events);
}

TEST_CASE("scenario presets encode the intended contrast") {
    SimConfig dis = scenario("disruption");
    SimConfig dom = scenario("domination");
    validate_config(dis);
    validate_config(dom);

    CHECK(1.0 / (1.0 - dis.continuation_prob) == doctest::Approx(2.5));
    CHECK(1.0 / (1.0 - dom.continuation_prob) == doctest::Approx(20.0 / 3.0));
    CHECK(dom.pass_rate > dis.pass_rate);

    // offensive zones (6..9) carry more mass under domination
    double dis_off = 0.0;
    double dom_off = 0.0;
    for (int z = 6; z <= 9; ++z) {
        dis_off += dis.zone_transition[4][z - 1];
        dom_off += dom.zone_transition[4][z - 1];
    }
    CHECK(dom_off > dis_off);

    dis.seed = dom.seed = 77;
    CHECK(serialize_log(simulate(dis)) != serialize_log(simulate(dom)));

    CHECK_THROWS_AS(scenario("tiki-taka"), std::invalid_argument);
}

TEST_CASE("sim config files round-trip") {
    SimConfig cfg = scenario("domination");
    cfg.seed = 123456789;
    cfg.half_minutes = {45, 45, 15, 15};
    cfg.players = 14;
    cfg.receiver_bias.assign(14, 1.0);
    cfg.receiver_bias[7] = 2.5;

    SimConfig back = parse_sim_config(write_sim_config(cfg));
    CHECK(same_config(cfg, back));
}

TEST_CASE("sim config parsing accepts comments and defaults the bias") {
    SimConfig cfg = parse_sim_config(
        "# two short halves\n"
        "seed=7\n"
        "half_minutes=10,10\n"
        "players=5\n"
        "pass_rate=3.5\n"
        "continuation_prob=0.25\n");
    CHECK(cfg.seed == 7);
    CHECK(cfg.half_minutes == std::vector<int>{10, 10});
    CHECK(cfg.players == 5);
    CHECK(cfg.receiver_bias == std::vector<double>(5, 1.0));
    CHECK(cfg.zone_transition[8][8] == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("sim config parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_sim_config("tempo=9\n"), ParseError);
    CHECK_THROWS_AS(parse_sim_config("no equals sign\n"), ParseError);
    CHECK_THROWS_AS(parse_sim_config("seed=abc\n"), ParseError);
    CHECK_THROWS_AS(parse_sim_config("pass_rate=fast\n"), ParseError);
    CHECK_THROWS_AS(parse_sim_config("zone_transition_0=1,0,0,0,0,0,0,0,0\n"), ParseError);
    CHECK_THROWS_AS(parse_sim_config("zone_transition_1=1,0,0\n"), ParseError);
    CHECK_THROWS_AS(parse_sim_config("players=1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sim_config("continuation_prob=1\n"), std::invalid_argument);
}

TEST_CASE("receiver bias shifts who gets the ball") {
    SimConfig cfg = SimConfig::defaults();
    cfg.seed = 55;
    cfg.players = 4;
    cfg.continuation_prob = 0.6;
    cfg.pass_rate = 30.0;
    cfg.receiver_bias = {1.0, 1.0, 1.0, 20.0};
    MatchLog log = simulate(cfg);

    // the favoured player holds the ball roughly half the time; the rest
    // split the remainder, so a 2x margin is far below expectation
    std::map<PlayerId, int> received;
    for (const auto& e : log.events) received[e.receiver] += 1;
    CHECK(received[4] > received[1] * 2);
    CHECK(received[4] > received[2] * 2);
    CHECK(received[4] > received[3] * 2);
}

TEST_CASE("each half kicks off from the central zone") {
    SimConfig cfg = SimConfig::defaults();
    cfg.seed = 21;
    cfg.half_minutes = {45, 45};
    MatchLog log = simulate(cfg);
    REQUIRE_FALSE(log.events.empty());
    CHECK(log.events.front().zone_from == 5);
    for (std::size_t i = 1; i < log.events.size(); ++i) {
        if (log.events[i].half != log.events[i - 1].half) {
            CHECK(log.events[i].zone_from == 5);
        }
    }
}
