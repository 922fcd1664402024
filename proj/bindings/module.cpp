#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "passnet/metrics.hpp"
#include "passnet/netgraph.hpp"
#include "passnet/synth.hpp"

namespace py = pybind11;
using namespace passnet;

namespace {

PeriodGroup period_from(const std::string& name) {
    if (name == "regulation") return PeriodGroup{PeriodKind::Regulation};
    if (name == "extratime") return PeriodGroup{PeriodKind::ExtraTime};
    throw std::invalid_argument("unknown period '" + name + "' (regulation or extratime)");
}

using Issue = std::pair<int, std::string>;

std::vector<Issue> issues_of(const std::vector<ParseIssue>& in) {
    std::vector<Issue> out;
    out.reserve(in.size());
    for (const auto& issue : in) out.emplace_back(issue.line, issue.message);
    return out;
}

using NodePair = std::pair<int, int>;

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "temporal pass-network analysis: parsing, windowing, graph metrics, simulation";
    m.attr("__version__") = "0.1.0";
    m.attr("ZONE_COUNT") = kZoneCount;

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<ZoneScheme>(m, "ZoneScheme")
        .def_static("standard", [] { return ZoneScheme::standard(); })
        .def_static("parse", &ZoneScheme::parse, py::arg("text"))
        .def("label_of", &ZoneScheme::label_of, py::arg("zone"))
        .def("id_of", &ZoneScheme::id_of, py::arg("label"))
        .def_static("canonical_labels", [] {
            const auto& labels = ZoneScheme::canonical_labels();
            return std::vector<std::string>(labels.begin(), labels.end());
        });

    py::class_<PassEvent>(m, "PassEvent")
        .def(py::init([](int half, int minute, int passer, int zone_from, int receiver,
                         int zone_to) {
                 PassEvent e;
                 e.half = half;
                 e.minute = minute;
                 e.passer = passer;
                 e.zone_from = zone_from;
                 e.receiver = receiver;
                 e.zone_to = zone_to;
                 return e;
             }),
             py::arg("half"), py::arg("minute"), py::arg("passer"), py::arg("zone_from"),
             py::arg("receiver"), py::arg("zone_to"))
        .def_readwrite("half", &PassEvent::half)
        .def_readwrite("minute", &PassEvent::minute)
        .def_readwrite("passer", &PassEvent::passer)
        .def_readwrite("zone_from", &PassEvent::zone_from)
        .def_readwrite("receiver", &PassEvent::receiver)
        .def_readwrite("zone_to", &PassEvent::zone_to)
        .def_readonly("seq", &PassEvent::seq)
        .def_readonly("line", &PassEvent::line)
        .def(py::self == py::self)
        .def("__repr__", [](const PassEvent& e) {
            return "PassEvent(" + std::to_string(e.half) + " " + std::to_string(e.minute) +
                   " " + std::to_string(e.passer) + " " + std::to_string(e.zone_from) + " " +
                   std::to_string(e.receiver) + " " + std::to_string(e.zone_to) + ")";
        });

    py::enum_<Position>(m, "Position")
        .value("Goalkeeper", Position::Goalkeeper)
        .value("Defender", Position::Defender)
        .value("Midfielder", Position::Midfielder)
        .value("Forward", Position::Forward);

    py::class_<RosterEntry>(m, "RosterEntry")
        .def(py::init([](int number, std::string name, Position position) {
                 return RosterEntry{number, std::move(name), position};
             }),
             py::arg("number"), py::arg("name"), py::arg("position"))
        .def_readwrite("number", &RosterEntry::number)
        .def_readwrite("name", &RosterEntry::name)
        .def_readwrite("position", &RosterEntry::position)
        .def("__repr__", [](const RosterEntry& e) {
            return "RosterEntry(" + std::to_string(e.number) + ", '" + e.name + "')";
        });

    py::class_<Roster>(m, "Roster")
        .def(py::init<std::vector<RosterEntry>>(), py::arg("entries"))
        .def("contains", &Roster::contains, py::arg("number"))
        .def("find",
             [](const Roster& r, PlayerId number) -> std::optional<RosterEntry> {
                 const RosterEntry* entry = r.find(number);
                 if (!entry) return std::nullopt;
                 return *entry;
             },
             py::arg("number"))
        .def("entries", &Roster::entries)
        .def("__len__", &Roster::size)
        .def("__contains__", &Roster::contains);

    py::class_<MatchLog>(m, "MatchLog")
        .def(py::init<>())
        .def_readwrite("events", &MatchLog::events)
        .def_readwrite("roster", &MatchLog::roster)
        .def_readwrite("match_label", &MatchLog::match_label)
        .def_readwrite("team_label", &MatchLog::team_label)
        .def("__len__", [](const MatchLog& log) { return log.events.size(); });

    py::class_<Window>(m, "Window")
        .def(py::init([](GlobalMinute start, int length, int index) {
                 return Window{start, length, index};
             }),
             py::arg("start"), py::arg("length") = 15, py::arg("index") = 0)
        .def_readwrite("start", &Window::start)
        .def_readwrite("length", &Window::length)
        .def_readwrite("index", &Window::index)
        .def_property_readonly("end", &Window::end)
        .def("contains", &Window::contains, py::arg("minute"))
        .def(py::self == py::self)
        .def("__repr__", [](const Window& w) {
            return "Window([" + std::to_string(w.start) + ", " + std::to_string(w.end()) +
                   "))";
        });

    py::class_<PassChain>(m, "PassChain")
        .def_readonly("events", &PassChain::events)
        .def_readonly("start", &PassChain::start)
        .def_property_readonly("length", &PassChain::length)
        .def("__len__", &PassChain::length);

    py::class_<ChainStats>(m, "ChainStats")
        .def_readonly("mean", &ChainStats::mean)
        .def_readonly("sem", &ChainStats::sem)
        .def_readonly("n", &ChainStats::n)
        .def("__repr__", [](const ChainStats& s) {
            return "ChainStats(mean=" + std::to_string(s.mean) + ", sem=" +
                   std::to_string(s.sem) + ", n=" + std::to_string(s.n) + ")";
        });

    py::class_<CentralityRow>(m, "CentralityRow")
        .def_readonly("player", &CentralityRow::player)
        .def_readonly("zone", &CentralityRow::zone)
        .def_readonly("in_degree", &CentralityRow::in_degree)
        .def_readonly("out_degree", &CentralityRow::out_degree)
        .def_readonly("in_strength", &CentralityRow::in_strength)
        .def_readonly("out_strength", &CentralityRow::out_strength);

    py::class_<MetricPoint>(m, "MetricPoint")
        .def_readonly("window_end", &MetricPoint::window_end)
        .def_readonly("value", &MetricPoint::value)
        .def_readonly("sem", &MetricPoint::sem)
        .def_readonly("n", &MetricPoint::n);

    py::class_<MetricSeries>(m, "MetricSeries")
        .def_readonly("metric", &MetricSeries::metric)
        .def_readonly("has_band", &MetricSeries::has_band)
        .def_readonly("points", &MetricSeries::points)
        .def("__len__", [](const MetricSeries& s) { return s.points.size(); });

    py::class_<PassGraph>(m, "PassGraph")
        .def("node_count", &PassGraph::node_count)
        .def("edge_count", &PassGraph::edge_count)
        .def("total_weight", &PassGraph::total_weight)
        .def("nodes",
             [](const PassGraph& g) {
                 std::vector<NodePair> out;
                 for (const auto& v : g.nodes()) out.emplace_back(v.player, v.zone);
                 return out;
             })
        .def("edges",
             [](const PassGraph& g) {
                 std::vector<std::tuple<NodePair, NodePair, int>> out;
                 for (const auto& [edge, w] : g.edges()) {
                     out.emplace_back(NodePair{edge.first.player, edge.first.zone},
                                      NodePair{edge.second.player, edge.second.zone}, w);
                 }
                 return out;
             })
        .def("weight",
             [](const PassGraph& g, NodePair u, NodePair v) {
                 return g.weight({u.first, u.second}, {v.first, v.second});
             },
             py::arg("u"), py::arg("v"))
        .def("has_edge", [](const PassGraph& g, NodePair u, NodePair v) {
            return g.has_edge({u.first, u.second}, {v.first, v.second});
        });

    py::class_<PlayerGraph>(m, "PlayerGraph")
        .def("node_count", &PlayerGraph::node_count)
        .def("edge_count", &PlayerGraph::edge_count)
        .def("total_weight", &PlayerGraph::total_weight)
        .def("nodes",
             [](const PlayerGraph& g) {
                 return std::vector<PlayerId>(g.nodes().begin(), g.nodes().end());
             })
        .def("edges",
             [](const PlayerGraph& g) {
                 std::vector<std::tuple<int, int, int>> out;
                 for (const auto& [edge, w] : g.edges()) {
                     out.emplace_back(edge.first, edge.second, w);
                 }
                 return out;
             })
        .def("weight", &PlayerGraph::weight, py::arg("u"), py::arg("v"));

    m.def(
        "parse_log",
        [](const std::string& text, const ZoneScheme& scheme) {
            return parse_log(text, scheme, ParseMode::Strict);
        },
        py::arg("text"), py::arg("scheme") = ZoneScheme::standard(),
        "Parse the six-integer line format, raising ParseError on the first bad line.");
    m.def(
        "parse_log_lenient",
        [](const std::string& text, const ZoneScheme& scheme) {
            ParseReport report;
            MatchLog log = parse_log(text, scheme, ParseMode::Lenient, &report);
            return py::make_tuple(log, issues_of(report.skipped), issues_of(report.warnings));
        },
        py::arg("text"), py::arg("scheme") = ZoneScheme::standard(),
        "Parse forgivingly; returns (log, skipped, warnings) with (line, message) pairs.");
    m.def("serialize_log", &serialize_log, py::arg("log"));
    m.def("parse_roster", &parse_roster, py::arg("text"));
    m.def("validate", &validate, py::arg("log"));

    m.def("to_global", &to_global, py::arg("half"), py::arg("minute"));
    m.def(
        "group_events",
        [](const MatchLog& log, const std::string& period) {
            return group_events(log, period_from(period));
        },
        py::arg("log"), py::arg("period"));
    m.def(
        "windows",
        [](const MatchLog& log, const std::string& period, int length, int step) {
            return windows(log, period_from(period), length, step);
        },
        py::arg("log"), py::arg("period"), py::arg("length") = 15, py::arg("step") = 1);
    m.def(
        "assign",
        [](const std::vector<PassEvent>& events, const Window& w) {
            return assign(events, w);
        },
        py::arg("events"), py::arg("window"));

    m.def(
        "build_graph",
        [](const std::vector<PassEvent>& events) { return build_pass_graph(events); },
        py::arg("events"));
    m.def("collapse_zones", &collapse_zones, py::arg("graph"));
    m.def(
        "export_dot",
        [](const PassGraph& g, const ZoneScheme& scheme, const std::optional<Roster>& roster) {
            return export_dot(g, scheme, roster ? &*roster : nullptr);
        },
        py::arg("graph"), py::arg("scheme") = ZoneScheme::standard(),
        py::arg("roster") = std::nullopt);
    m.def(
        "export_json",
        [](const PassGraph& g, const Window& w, const ZoneScheme& scheme) {
            return export_json(WindowGraph{w, g}, scheme);
        },
        py::arg("graph"), py::arg("window"), py::arg("scheme") = ZoneScheme::standard());

    m.def("extract_chains", &extract_chains, py::arg("log"), py::arg("gap_threshold") = 1);
    m.def(
        "avg_chain_length",
        [](const std::vector<PassChain>& chains, const Window& w) {
            return avg_chain_length(chains, w);
        },
        py::arg("chains"), py::arg("window"));
    m.def(
        "passes_per_minute",
        [](const std::vector<PassEvent>& events, const Window& w) {
            return passes_per_minute(events, w);
        },
        py::arg("events"), py::arg("window"));
    m.def(
        "clustering_rate",
        [](const PassGraph& g, bool include_deg1, bool global_transitivity) {
            ClusteringOptions opts;
            opts.include_deg1 = include_deg1;
            opts.global_transitivity = global_transitivity;
            return clustering_rate(g, opts);
        },
        py::arg("graph"), py::arg("include_deg1") = false,
        py::arg("global_transitivity") = false);
    m.def("density", &density, py::arg("graph"),
          py::arg("full_space_players") = std::nullopt);
    m.def("centrality", &centrality, py::arg("graph"));
    m.def(
        "series",
        [](const MatchLog& log, const std::string& period, const std::string& metric,
           int window_length, int window_step, int chain_gap, bool include_deg1,
           bool global_transitivity, std::optional<int> full_space_players) {
            SeriesOptions opts;
            opts.window_length = window_length;
            opts.window_step = window_step;
            opts.chain_gap = chain_gap;
            opts.clustering.include_deg1 = include_deg1;
            opts.clustering.global_transitivity = global_transitivity;
            opts.density_full_space_players = full_space_players;
            return series(log, period_from(period), metric_from_string(metric), opts);
        },
        py::arg("log"), py::arg("period"), py::arg("metric"), py::arg("window_length") = 15,
        py::arg("window_step") = 1, py::arg("chain_gap") = 1,
        py::arg("include_deg1") = false, py::arg("global_transitivity") = false,
        py::arg("full_space_players") = std::nullopt);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init(&SimConfig::defaults))
        .def_static("defaults", &SimConfig::defaults)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("half_minutes", &SimConfig::half_minutes)
        .def_readwrite("players", &SimConfig::players)
        .def_readwrite("pass_rate", &SimConfig::pass_rate)
        .def_readwrite("continuation_prob", &SimConfig::continuation_prob)
        .def_readwrite("zone_transition", &SimConfig::zone_transition)
        .def_readwrite("receiver_bias", &SimConfig::receiver_bias);

    m.def("validate_config", &validate_config, py::arg("config"));
    m.def("simulate", &simulate, py::arg("config"));
    m.def(
        "simulate_detailed",
        [](const SimConfig& cfg) {
            SimOutput out = simulate_detailed(cfg);
            return py::make_tuple(out.log, out.chain_lengths);
        },
        py::arg("config"), "Returns (log, ground_truth_chain_lengths).");
    m.def("scenario", &scenario, py::arg("name"));
    m.def("parse_sim_config", &parse_sim_config, py::arg("text"));
    m.def("write_sim_config", &write_sim_config, py::arg("config"));
}
