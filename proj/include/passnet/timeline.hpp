#pragma once

#include <span>
#include <vector>

#include "passnet/passlog.hpp"

namespace passnet {

using GlobalMinute = int;

/// Minutes from kickoff at which each half nominally starts. Stoppage time
/// simply runs past the boundary.
constexpr std::array<GlobalMinute, 4> kHalfOffsets = {0, 45, 90, 105};

GlobalMinute to_global(int half, int minute);
GlobalMinute global_minute(const PassEvent& e);

/// Half-open span [start, start+length) on the global clock.
struct Window {
    GlobalMinute start = 0;
    int length = 15;
    int index = 0;

    GlobalMinute end() const { return start + length; }
    bool contains(GlobalMinute m) const { return start <= m && m < end(); }

    friend bool operator==(const Window&, const Window&) = default;
};

enum class PeriodKind { Regulation, ExtraTime };

struct PeriodGroup {
    PeriodKind kind = PeriodKind::Regulation;

    bool contains_half(int half) const {
        return kind == PeriodKind::Regulation ? (half == 1 || half == 2)
                                              : (half == 3 || half == 4);
    }
};

std::string_view to_string(PeriodKind kind);

/// Events of the group's halves, in log order.
std::vector<PassEvent> group_events(const MatchLog& log, PeriodGroup group);

/// Trailing windows over the group's event span: the first starts at the
/// group's first event minute, subsequent ones step by `step`, and the last
/// is the latest whose full span fits before (last event minute + 1). Empty
/// when the span is shorter than `length`.
std::vector<Window> windows(const MatchLog& log, PeriodGroup group, int length = 15,
                            int step = 1);

/// Subsequence of `events` whose global minute falls inside `w`.
std::vector<PassEvent> assign(std::span<const PassEvent> events, const Window& w);

}  // namespace passnet
