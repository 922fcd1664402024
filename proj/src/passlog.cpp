#include "passnet/passlog.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>

namespace passnet {

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

std::string_view strip_bom(std::string_view text) {
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
    return text;
}

// Calls fn(line_no, line) for every physical line, 1-based, without the
// terminator. A trailing newline does not produce a phantom empty line.
template <typename F>
void for_each_line(std::string_view text, F&& fn) {
    std::size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        fn(++line_no, text.substr(pos, end - pos));
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
    }
}

// Tokenizes on runs of spaces/tabs.
std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool parse_int(std::string_view field, int& out) {
    long long value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return false;
    if (value < INT32_MIN || value > INT32_MAX) return false;
    out = static_cast<int>(value);
    return true;
}

int minute_bound(int half) { return half <= 2 ? 60 : 25; }

struct LineError {
    std::string message;
};

// Returns an event or the reason the line is unusable. Minute plausibility is
// reported separately: such events are still well formed.
std::optional<LineError> parse_event_line(std::string_view line, PassEvent& e,
                                          bool& minute_suspect) {
    auto fields = split_fields(line);
    if (fields.size() != 6) {
        return LineError{"expected 6 fields, found " + std::to_string(fields.size())};
    }
    int values[6];
    static const char* kFieldNames[6] = {"half", "minute", "passer", "zone",
                                         "receiver", "zone'"};
    for (int i = 0; i < 6; ++i) {
        if (!parse_int(fields[i], values[i])) {
            return LineError{std::string("non-integer ") + kFieldNames[i] + " field '" +
                             std::string(fields[i]) + "'"};
        }
    }
    e.half = values[0];
    e.minute = values[1];
    e.passer = values[2];
    e.zone_from = values[3];
    e.receiver = values[4];
    e.zone_to = values[5];

    if (e.half < 1 || e.half > 4) {
        return LineError{"half " + std::to_string(e.half) + " outside 1..4"};
    }
    if (e.minute < 0) {
        return LineError{"negative minute " + std::to_string(e.minute)};
    }
    if (e.passer < 1) {
        return LineError{"passer number " + std::to_string(e.passer) + " not positive"};
    }
    if (e.receiver < 1) {
        return LineError{"receiver number " + std::to_string(e.receiver) + " not positive"};
    }
    if (e.zone_from < 1 || e.zone_from > kZoneCount) {
        return LineError{"zone " + std::to_string(e.zone_from) + " outside 1..9"};
    }
    if (e.zone_to < 1 || e.zone_to > kZoneCount) {
        return LineError{"zone " + std::to_string(e.zone_to) + " outside 1..9"};
    }
    if (e.passer == e.receiver) {
        return LineError{"passer equals receiver"};
    }
    minute_suspect = e.minute > minute_bound(e.half);
    return std::nullopt;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(message + ", line " + std::to_string(line)), line_(line) {}

const ZoneScheme& ZoneScheme::standard() {
    static const ZoneScheme scheme = [] {
        ZoneScheme s;
        s.labels_ = canonical_labels();
        return s;
    }();
    return scheme;
}

const std::array<std::string, kZoneCount>& ZoneScheme::canonical_labels() {
    static const std::array<std::string, kZoneCount> labels = {
        "OwnBox",      "OwnWingbackLeft", "OwnWingbackRight", "OwnMidfield", "Center",
        "OppWingLeft", "OppWingRight",    "OppMidfield",      "OppBox"};
    return labels;
}

ZoneScheme ZoneScheme::parse(std::string_view text) {
    ZoneScheme scheme;
    std::array<bool, kZoneCount> id_seen{};
    std::set<std::string> labels_seen;

    text = strip_bom(text);
    int last_line = 0;
    for_each_line(text, [&](int line_no, std::string_view raw) {
        last_line = line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') return;

        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "zone scheme line is not id=Label");
        }
        int id = 0;
        if (!parse_int(trim(line.substr(0, eq)), id) || id < 1 || id > kZoneCount) {
            throw ParseError(line_no, "zone id outside 1..9");
        }
        std::string label(trim(line.substr(eq + 1)));
        const auto& canon = canonical_labels();
        if (std::find(canon.begin(), canon.end(), label) == canon.end()) {
            throw ParseError(line_no, "unknown zone label '" + label + "'");
        }
        if (id_seen[id - 1]) {
            throw ParseError(line_no, "duplicate zone id " + std::to_string(id));
        }
        if (!labels_seen.insert(label).second) {
            throw ParseError(line_no, "duplicate zone label '" + label + "'");
        }
        id_seen[id - 1] = true;
        scheme.labels_[id - 1] = std::move(label);
    });
    for (int id = 1; id <= kZoneCount; ++id) {
        if (!id_seen[id - 1]) {
            throw ParseError(last_line, "zone id " + std::to_string(id) + " missing");
        }
    }
    return scheme;
}

const std::string& ZoneScheme::label_of(ZoneId id) const {
    if (id < 1 || id > kZoneCount) throw std::out_of_range("zone id outside 1..9");
    return labels_[id - 1];
}

ZoneId ZoneScheme::id_of(std::string_view label) const {
    for (int id = 1; id <= kZoneCount; ++id) {
        if (labels_[id - 1] == label) return id;
    }
    throw std::out_of_range("unknown zone label '" + std::string(label) + "'");
}

std::string_view to_string(Position p) {
    switch (p) {
        case Position::Goalkeeper: return "Goalkeeper";
        case Position::Defender: return "Defender";
        case Position::Midfielder: return "Midfielder";
        case Position::Forward: return "Forward";
    }
    return "?";
}

std::optional<Position> position_from_string(std::string_view s) {
    if (s == "Goalkeeper") return Position::Goalkeeper;
    if (s == "Defender") return Position::Defender;
    if (s == "Midfielder") return Position::Midfielder;
    if (s == "Forward") return Position::Forward;
    return std::nullopt;
}

Roster::Roster(std::vector<RosterEntry> entries) : entries_(std::move(entries)) {
    std::set<PlayerId> numbers;
    for (const auto& e : entries_) {
        if (e.number < 1) throw std::invalid_argument("squad number must be positive");
        if (!numbers.insert(e.number).second) {
            throw std::invalid_argument("duplicate squad number " + std::to_string(e.number));
        }
    }
}

bool Roster::contains(PlayerId number) const { return find(number) != nullptr; }

const RosterEntry* Roster::find(PlayerId number) const {
    for (const auto& e : entries_) {
        if (e.number == number) return &e;
    }
    return nullptr;
}

MatchLog parse_log(std::string_view text, const ZoneScheme& scheme, ParseMode mode,
                   ParseReport* report) {
    (void)scheme;  // zone ids are scheme-independent; labels only matter on export
    MatchLog log;
    text = strip_bom(text);

    for_each_line(text, [&](int line_no, std::string_view raw) {
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') return;

        PassEvent e;
        bool minute_suspect = false;
        auto error = parse_event_line(line, e, minute_suspect);
        if (error) {
            if (mode == ParseMode::Strict) throw ParseError(line_no, error->message);
            if (report) report->skipped.push_back({line_no, error->message});
            return;
        }
        if (minute_suspect) {
            std::string msg = "minute " + std::to_string(e.minute) + " beyond " +
                              std::to_string(minute_bound(e.half)) + " for half " +
                              std::to_string(e.half);
            if (mode == ParseMode::Strict) throw ParseError(line_no, msg);
            if (report) report->warnings.push_back({line_no, msg});
        }
        e.seq = static_cast<int>(log.events.size());
        e.line = line_no;
        log.events.push_back(e);
    });

    std::stable_sort(log.events.begin(), log.events.end(),
                     [](const PassEvent& a, const PassEvent& b) {
                         if (a.half != b.half) return a.half < b.half;
                         return a.minute < b.minute;
                     });
    return log;
}

std::string serialize_log(const MatchLog& log) {
    std::string out;
    for (const auto& e : log.events) {
        out += std::to_string(e.half);
        out += ' ';
        out += std::to_string(e.minute);
        out += ' ';
        out += std::to_string(e.passer);
        out += ' ';
        out += std::to_string(e.zone_from);
        out += ' ';
        out += std::to_string(e.receiver);
        out += ' ';
        out += std::to_string(e.zone_to);
        out += '\n';
    }
    return out;
}

Roster parse_roster(std::string_view text) {
    text = strip_bom(text);
    std::vector<RosterEntry> entries;
    std::set<PlayerId> numbers;

    bool header_seen = false;
    for_each_line(text, [&](int line_no, std::string_view raw) {
        std::string_view line = trim(raw);
        if (line.empty()) return;
        if (!header_seen) {
            if (line != "number,name,position") {
                throw ParseError(line_no, "expected header 'number,name,position'");
            }
            header_seen = true;
            return;
        }

        std::size_t c1 = line.find(',');
        std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
            line.find(',', c2 + 1) != std::string_view::npos) {
            throw ParseError(line_no, "expected 3 comma-separated fields");
        }
        RosterEntry entry;
        if (!parse_int(trim(line.substr(0, c1)), entry.number) || entry.number < 1) {
            throw ParseError(line_no, "squad number must be a positive integer");
        }
        entry.name = std::string(trim(line.substr(c1 + 1, c2 - c1 - 1)));
        if (entry.name.empty()) throw ParseError(line_no, "empty player name");
        auto position = position_from_string(trim(line.substr(c2 + 1)));
        if (!position) {
            throw ParseError(line_no, "unknown position '" +
                                          std::string(trim(line.substr(c2 + 1))) + "'");
        }
        entry.position = *position;
        if (!numbers.insert(entry.number).second) {
            throw ParseError(line_no, "duplicate squad number " + std::to_string(entry.number));
        }
        entries.push_back(std::move(entry));
    });
    if (!header_seen) throw ParseError(1, "expected header 'number,name,position'");
    return Roster(std::move(entries));
}

std::vector<std::string> validate(const MatchLog& log) {
    std::vector<std::string> findings;

    // Recover file order to spot ordering problems the parser smoothed over.
    std::vector<const PassEvent*> by_seq;
    by_seq.reserve(log.events.size());
    for (const auto& e : log.events) by_seq.push_back(&e);
    std::sort(by_seq.begin(), by_seq.end(),
              [](const PassEvent* a, const PassEvent* b) { return a->seq < b->seq; });

    int prev_half = 0;
    int max_half = 0;
    int prev_minute = -1;
    for (const PassEvent* e : by_seq) {
        if (e->half < max_half) {
            findings.push_back("half order violation at line " + std::to_string(e->line) +
                               " (half " + std::to_string(e->half) + " after half " +
                               std::to_string(max_half) + ")");
        }
        if (e->half == prev_half && e->minute < prev_minute) {
            findings.push_back("minute decreases within half " + std::to_string(e->half) +
                               " at line " + std::to_string(e->line));
        }
        prev_half = e->half;
        max_half = std::max(max_half, e->half);
        prev_minute = e->minute;
    }

    if (log.roster) {
        std::set<PlayerId> reported;
        for (const PassEvent* e : by_seq) {
            for (PlayerId p : {e->passer, e->receiver}) {
                if (!log.roster->contains(p) && reported.insert(p).second) {
                    findings.push_back("unknown player " + std::to_string(p) + " at line " +
                                       std::to_string(e->line));
                }
            }
        }
    }

    if (log.events.size() >= kZoneCoverageMinEvents) {
        std::array<bool, kZoneCount> visited{};
        for (const auto& e : log.events) {
            visited[e.zone_from - 1] = true;
            visited[e.zone_to - 1] = true;
        }
        for (int z = 1; z <= kZoneCount; ++z) {
            if (!visited[z - 1]) {
                findings.push_back("zone " + std::to_string(z) + " never visited");
            }
        }
    }

    return findings;
}

}  // namespace passnet
