#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "passnet/metrics.hpp"
#include "passnet/netgraph.hpp"
#include "passnet/synth.hpp"

namespace {

using namespace passnet;

// Raised for bad inputs discovered after flag parsing: exit code 1 territory.
struct RunError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw RunError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// path "-" targets stdout
void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw RunError("cannot write '" + path + "'");
    out << content;
    if (!out) throw RunError("cannot write '" + path + "'");
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct CommonInputs {
    std::string log_path;
    std::string roster_path;
    std::string scheme_path;
};

ZoneScheme load_scheme(const std::string& flag_path) {
    std::string path = flag_path;
    if (path.empty()) {
        if (const char* env = std::getenv("PASSNET_ZONE_SCHEME")) path = env;
    }
    if (path.empty()) return ZoneScheme::standard();
    return ZoneScheme::parse(read_file(path));
}

std::optional<Roster> load_roster(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return parse_roster(read_file(path));
}

MatchLog load_log(const CommonInputs& in, const ZoneScheme& scheme,
                  ParseReport* report = nullptr) {
    MatchLog log = parse_log(read_file(in.log_path), scheme,
                             report ? ParseMode::Lenient : ParseMode::Strict, report);
    log.roster = load_roster(in.roster_path);
    log.match_label = in.log_path;
    return log;
}

int run_validate(const CommonInputs& in, bool strict) {
    ZoneScheme scheme = load_scheme(in.scheme_path);
    ParseReport report;
    MatchLog log = load_log(in, scheme, &report);

    for (const auto& issue : report.skipped) {
        std::cout << "error: " << issue.message << ", line " << issue.line << "\n";
    }
    std::size_t warning_count = report.warnings.size();
    for (const auto& issue : report.warnings) {
        std::cout << "warning: " << issue.message << ", line " << issue.line << "\n";
    }
    for (const auto& finding : validate(log)) {
        std::cout << "warning: " << finding << "\n";
        ++warning_count;
    }
    std::cout << report.skipped.size() << " errors, " << warning_count << " warnings\n";

    if (!report.skipped.empty()) return 1;
    if (strict && warning_count > 0) return 1;
    return 0;
}

struct AnalyzeOpts {
    std::string metric = "all";
    std::string period = "all";
    std::string format = "csv";
    std::string outdir = ".";
    SeriesOptions series;
    bool density_full_space = false;
};

std::vector<Metric> selected_metrics(const std::string& name) {
    if (name == "all") {
        return {Metric::Pace, Metric::Chains, Metric::Clustering, Metric::Density};
    }
    return {metric_from_string(name)};
}

std::vector<PeriodGroup> selected_periods(const std::string& name) {
    if (name == "regulation") return {PeriodGroup{PeriodKind::Regulation}};
    if (name == "extratime") return {PeriodGroup{PeriodKind::ExtraTime}};
    return {PeriodGroup{PeriodKind::Regulation}, PeriodGroup{PeriodKind::ExtraTime}};
}

std::string series_csv(const MetricSeries& s) {
    std::string out = s.has_band ? "window_end,value,sem,n\n" : "window_end,value\n";
    for (const auto& p : s.points) {
        out += std::to_string(p.window_end) + "," + fixed6(p.value);
        if (s.has_band) {
            out += "," + fixed6(p.sem) + "," + std::to_string(p.n);
        }
        out += "\n";
    }
    return out;
}

nlohmann::json series_json(const MetricSeries& s) {
    nlohmann::json doc;
    doc["metric"] = s.metric;
    auto& points = doc["points"] = nlohmann::json::array();
    for (const auto& p : s.points) {
        nlohmann::json point{{"window_end", p.window_end}, {"value", p.value}};
        if (s.has_band) {
            point["sem"] = p.sem;
            point["n"] = p.n;
        }
        points.push_back(std::move(point));
    }
    return doc;
}

int run_analyze(const CommonInputs& in, const AnalyzeOpts& opts) {
    ZoneScheme scheme = load_scheme(in.scheme_path);
    MatchLog log = load_log(in, scheme);

    SeriesOptions series_opts = opts.series;
    if (opts.density_full_space) {
        if (!log.roster) throw RunError("--density-full-space needs --roster");
        series_opts.density_full_space_players = static_cast<int>(log.roster->size());
    }

    for (PeriodGroup group : selected_periods(opts.period)) {
        std::string period_name(to_string(group.kind));
        if (group_events(log, group).empty()) {
            std::cerr << "warning: no " << period_name << " events in '" << in.log_path
                      << "'\n";
        }

        std::vector<Metric> metrics = selected_metrics(opts.metric);
        if (opts.format == "json") {
            nlohmann::json doc;
            doc["period"] = period_name;
            auto& all = doc["series"] = nlohmann::json::array();
            for (Metric m : metrics) {
                all.push_back(series_json(series(log, group, m, series_opts)));
            }
            std::string stem = metrics.size() > 1 ? "metrics" : std::string(to_string(metrics[0]));
            write_output(opts.outdir + "/" + stem + "_" + period_name + ".json",
                         doc.dump(2) + "\n");
        } else {
            for (Metric m : metrics) {
                MetricSeries s = series(log, group, m, series_opts);
                write_output(opts.outdir + "/" + std::string(to_string(m)) + "_" +
                                 period_name + ".csv",
                             series_csv(s));
            }
        }
    }
    return 0;
}

struct ScopedEvents {
    std::string label;
    std::vector<PassEvent> events;
    std::optional<Window> window;
};

// scope forms: match, window:M, half:H, period:NAME
ScopedEvents resolve_scope(const MatchLog& log, const std::string& scope, int window_length) {
    ScopedEvents out;
    out.label = scope;

    auto outside = [&]() -> RunError {
        return RunError("scope '" + scope + "' outside match span");
    };

    if (scope == "match") {
        out.events = log.events;
        if (out.events.empty()) throw outside();
        return out;
    }
    std::size_t colon = scope.find(':');
    std::string kind = scope.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : scope.substr(colon + 1);

    if (kind == "window") {
        int end_minute = 0;
        try {
            end_minute = std::stoi(arg);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--scope", "window scope needs an integer minute");
        }
        for (PeriodKind pk : {PeriodKind::Regulation, PeriodKind::ExtraTime}) {
            PeriodGroup group{pk};
            for (const Window& w : windows(log, group, window_length, 1)) {
                if (w.end() == end_minute) {
                    out.events = assign(group_events(log, group), w);
                    out.window = w;
                    return out;
                }
            }
        }
        throw outside();
    }
    if (kind == "half") {
        int half = 0;
        try {
            half = std::stoi(arg);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--scope", "half scope needs an integer 1..4");
        }
        for (const auto& e : log.events) {
            if (e.half == half) out.events.push_back(e);
        }
        if (out.events.empty()) throw outside();
        return out;
    }
    if (kind == "period") {
        if (arg != "regulation" && arg != "extratime") {
            throw CLI::ValidationError("--scope", "period scope needs regulation or extratime");
        }
        PeriodGroup group{arg == "regulation" ? PeriodKind::Regulation
                                              : PeriodKind::ExtraTime};
        out.events = group_events(log, group);
        if (out.events.empty()) throw outside();
        return out;
    }
    throw CLI::ValidationError("--scope", "unknown scope '" + scope + "'");
}

int run_centrality(const CommonInputs& in, const std::string& scope, int window_length,
                   const std::string& format, const std::string& out_path) {
    ZoneScheme scheme = load_scheme(in.scheme_path);
    MatchLog log = load_log(in, scheme);
    ScopedEvents scoped = resolve_scope(log, scope, window_length);

    PassGraph graph = build_pass_graph(scoped.events);
    auto rows = centrality(graph);

    if (format == "json") {
        nlohmann::json doc;
        doc["scope"] = scoped.label;
        auto& out_rows = doc["rows"] = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row{{"player", r.player},
                               {"zone", r.zone},
                               {"zone_label", scheme.label_of(r.zone)},
                               {"in_degree", r.in_degree},
                               {"out_degree", r.out_degree},
                               {"in_strength", r.in_strength},
                               {"out_strength", r.out_strength}};
            if (log.roster) {
                const RosterEntry* entry = log.roster->find(r.player);
                row["name"] = entry ? entry->name : "";
            }
            out_rows.push_back(std::move(row));
        }
        write_output(out_path, doc.dump(2) + "\n");
        return 0;
    }

    std::string csv = "player,zone,in_deg,out_deg,in_str,out_str";
    if (log.roster) csv += ",name";
    csv += "\n";
    for (const auto& r : rows) {
        csv += std::to_string(r.player) + "," + std::to_string(r.zone) + "," +
               std::to_string(r.in_degree) + "," + std::to_string(r.out_degree) + "," +
               std::to_string(r.in_strength) + "," + std::to_string(r.out_strength);
        if (log.roster) {
            const RosterEntry* entry = log.roster->find(r.player);
            csv += ",";
            if (entry) csv += entry->name;
        }
        csv += "\n";
    }
    write_output(out_path, csv);
    return 0;
}

int run_export_graph(const CommonInputs& in, int end_minute, int window_length,
                     const std::string& format, const std::string& out_path) {
    ZoneScheme scheme = load_scheme(in.scheme_path);
    MatchLog log = load_log(in, scheme);
    ScopedEvents scoped =
        resolve_scope(log, "window:" + std::to_string(end_minute), window_length);

    WindowGraph wg = build_graph(scoped.events, *scoped.window);
    if (format == "json") {
        write_output(out_path, export_json(wg, scheme));
    } else {
        const Roster* roster = log.roster ? &*log.roster : nullptr;
        write_output(out_path, export_dot(wg.graph, scheme, roster));
    }
    return 0;
}

int run_simulate(const std::string& scenario_name, const std::string& config_path,
                 std::optional<std::uint64_t> seed, const std::string& out_path) {
    SimConfig cfg;
    if (!scenario_name.empty()) {
        cfg = scenario(scenario_name);
    } else {
        cfg = parse_sim_config(read_file(config_path));
    }
    if (seed) cfg.seed = *seed;
    write_output(out_path, serialize_log(simulate(cfg)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pass network toolkit: parse, window, graph, measure, simulate"};
    app.require_subcommand(1);

    CommonInputs inputs;
    int exit_code = 0;

    auto add_common = [&](CLI::App* cmd, bool roster_flag = true) {
        cmd->add_option("log", inputs.log_path, "pass log file")->required();
        if (roster_flag) {
            cmd->add_option("--roster", inputs.roster_path, "squad roster CSV");
        }
        cmd->add_option("--zone-scheme", inputs.scheme_path,
                        "zone scheme file (default: PASSNET_ZONE_SCHEME or built-in)");
    };

    // validate
    bool strict = false;
    CLI::App* validate_cmd = app.add_subcommand("validate", "check a pass log");
    add_common(validate_cmd);
    validate_cmd->add_flag("--strict", strict, "treat warnings as failures");
    validate_cmd->callback([&] { exit_code = run_validate(inputs, strict); });

    // analyze
    AnalyzeOpts analyze;
    bool cl_deg1 = false;
    bool cl_global = false;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "write windowed metric series");
    add_common(analyze_cmd);
    analyze_cmd->add_option("--metric", analyze.metric, "pace|chains|clustering|density|all")
        ->check(CLI::IsMember({"pace", "chains", "clustering", "density", "all"}));
    analyze_cmd->add_option("--period", analyze.period, "regulation|extratime|all")
        ->check(CLI::IsMember({"regulation", "extratime", "all"}));
    analyze_cmd->add_option("--format", analyze.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    analyze_cmd->add_option("--outdir", analyze.outdir, "output directory");
    analyze_cmd->add_option("--window-length", analyze.series.window_length, "minutes")
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--window-step", analyze.series.window_step, "minutes")
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--chain-gap", analyze.series.chain_gap, "max minutes between passes")
        ->check(CLI::NonNegativeNumber);
    CLI::Option* deg1_opt = analyze_cmd->add_flag("--clustering-include-deg1", cl_deg1,
                                                  "average leaves in as zero");
    analyze_cmd->add_flag("--clustering-global", cl_global, "global transitivity instead")
        ->excludes(deg1_opt);
    analyze_cmd->add_flag("--density-full-space", analyze.density_full_space,
                          "denominator over roster x zones");
    analyze_cmd->callback([&] {
        analyze.series.clustering.include_deg1 = cl_deg1;
        analyze.series.clustering.global_transitivity = cl_global;
        exit_code = run_analyze(inputs, analyze);
    });

    // centrality
    std::string scope = "match";
    std::string cent_format = "csv";
    std::string cent_out = "-";
    int cent_window_length = 15;
    CLI::App* centrality_cmd = app.add_subcommand("centrality", "degree/strength table");
    add_common(centrality_cmd);
    centrality_cmd->add_option("--scope", scope, "match | window:M | half:H | period:NAME");
    centrality_cmd->add_option("--window-length", cent_window_length, "minutes")
        ->check(CLI::PositiveNumber);
    centrality_cmd->add_option("--format", cent_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    centrality_cmd->add_option("--out", cent_out, "output file, - for stdout");
    centrality_cmd->callback([&] {
        exit_code = run_centrality(inputs, scope, cent_window_length, cent_format, cent_out);
    });

    // export-graph
    int end_minute = 0;
    int graph_window_length = 15;
    std::string graph_format = "dot";
    std::string graph_out = "-";
    CLI::App* export_cmd = app.add_subcommand("export-graph", "one window's pass graph");
    add_common(export_cmd);
    export_cmd->add_option("--minute", end_minute, "global minute the window ends at")
        ->required();
    export_cmd->add_option("--window-length", graph_window_length, "minutes")
        ->check(CLI::PositiveNumber);
    export_cmd->add_option("--format", graph_format, "dot|json")
        ->check(CLI::IsMember({"dot", "json"}));
    export_cmd->add_option("--out", graph_out, "output file, - for stdout");
    export_cmd->callback([&] {
        exit_code =
            run_export_graph(inputs, end_minute, graph_window_length, graph_format, graph_out);
    });

    // simulate
    std::string scenario_name;
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string sim_out = "-";
    CLI::App* simulate_cmd = app.add_subcommand("simulate", "generate a synthetic log");
    CLI::Option* scenario_opt =
        simulate_cmd->add_option("--scenario", scenario_name, "disruption|domination");
    simulate_cmd->add_option("--config", config_path, "key=value config file")
        ->excludes(scenario_opt);
    simulate_cmd->add_option("--seed", seed, "override the generator seed");
    simulate_cmd->add_option("--out", sim_out, "output file, - for stdout");
    simulate_cmd->callback([&] {
        if (scenario_name.empty() && config_path.empty()) {
            throw CLI::RequiredError("--scenario or --config");
        }
        exit_code = run_simulate(scenario_name, config_path, seed, sim_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const RunError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
