#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace passnet {

using PlayerId = int;
using ZoneId = int;

constexpr int kZoneCount = 9;

/// Maps zone ids 1..9 to pitch-region labels. The mapping must be a
/// bijection onto the nine canonical labels.
class ZoneScheme {
public:
    // Default numbering: 1..4 defensive, 5 center, 6..9 offensive.
    static const ZoneScheme& standard();

    // zone-scheme file: nine "id=Label" lines.
    static ZoneScheme parse(std::string_view text);

    const std::string& label_of(ZoneId id) const;
    ZoneId id_of(std::string_view label) const;

    static const std::array<std::string, kZoneCount>& canonical_labels();

private:
    ZoneScheme() = default;
    std::array<std::string, kZoneCount> labels_{};  // index id-1
};

struct PassEvent {
    int half = 1;          // 1,2 regulation; 3,4 extra time
    int minute = 0;        // within-half clock, starting at 0
    PlayerId passer = 0;
    ZoneId zone_from = 0;
    PlayerId receiver = 0;
    ZoneId zone_to = 0;
    int seq = 0;           // record index assigned at parse time
    int line = 0;          // source line, 0 when synthetic

    friend bool operator==(const PassEvent& a, const PassEvent& b) {
        // seq/line are bookkeeping, not identity
        return a.half == b.half && a.minute == b.minute && a.passer == b.passer &&
               a.zone_from == b.zone_from && a.receiver == b.receiver && a.zone_to == b.zone_to;
    }
};

enum class Position { Goalkeeper, Defender, Midfielder, Forward };

std::string_view to_string(Position p);
std::optional<Position> position_from_string(std::string_view s);

struct RosterEntry {
    PlayerId number = 0;
    std::string name;
    Position position = Position::Goalkeeper;
};

class Roster {
public:
    Roster() = default;
    explicit Roster(std::vector<RosterEntry> entries);

    const std::vector<RosterEntry>& entries() const { return entries_; }
    bool contains(PlayerId number) const;
    const RosterEntry* find(PlayerId number) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<RosterEntry> entries_;
};

struct MatchLog {
    std::vector<PassEvent> events;  // sorted by (half, minute, seq)
    std::optional<Roster> roster;
    std::string match_label;
    std::string team_label;
};

/// A (player, zone) pair; the node unit of every pass graph.
struct VirtualPlayer {
    PlayerId player = 0;
    ZoneId zone = 0;

    auto operator<=>(const VirtualPlayer&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

struct ParseIssue {
    int line = 0;
    std::string message;
};

struct ParseReport {
    std::vector<ParseIssue> skipped;   // lines dropped in lenient mode
    std::vector<ParseIssue> warnings;  // kept events with suspect fields
};

enum class ParseMode { Strict, Lenient };

/// Parses the six-integer-per-line pass format:
///   <half> <minute> <player> <zone> <player'> <zone'>
/// Blank lines and lines whose first non-blank character is '#' are ignored.
/// Strict mode throws ParseError at the first bad line; lenient mode skips
/// bad lines (recorded in `report`) and keeps events whose only defect is an
/// implausible minute, with a warning.
MatchLog parse_log(std::string_view text, const ZoneScheme& scheme, ParseMode mode,
                   ParseReport* report = nullptr);

/// Inverse of parse_log: one event per line, single spaces, LF endings.
std::string serialize_log(const MatchLog& log);

/// Roster CSV with header "number,name,position". Throws ParseError.
Roster parse_roster(std::string_view text);

/// Warnings for suspicious but parseable logs: minute regressions within a
/// half, out-of-order halves, players missing from the roster, and (for
/// match-sized logs) pitch zones that never appear.
std::vector<std::string> validate(const MatchLog& log);

// Zone-coverage warnings only make sense once a log is big enough to
// plausibly cover the pitch.
constexpr std::size_t kZoneCoverageMinEvents = 50;

}  // namespace passnet
