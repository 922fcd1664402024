#include "passnet/timeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace passnet {

GlobalMinute to_global(int half, int minute) {
    if (half < 1 || half > 4) {
        throw std::invalid_argument("half " + std::to_string(half) + " outside 1..4");
    }
    return kHalfOffsets[half - 1] + minute;
}

GlobalMinute global_minute(const PassEvent& e) { return to_global(e.half, e.minute); }

std::string_view to_string(PeriodKind kind) {
    return kind == PeriodKind::Regulation ? "regulation" : "extratime";
}

std::vector<PassEvent> group_events(const MatchLog& log, PeriodGroup group) {
    std::vector<PassEvent> out;
    for (const auto& e : log.events) {
        if (group.contains_half(e.half)) out.push_back(e);
    }
    return out;
}

std::vector<Window> windows(const MatchLog& log, PeriodGroup group, int length, int step) {
    if (length < 1) throw std::invalid_argument("window length must be >= 1");
    if (step < 1) throw std::invalid_argument("window step must be >= 1");

    auto events = group_events(log, group);
    if (events.empty()) return {};

    GlobalMinute first = global_minute(events.front());
    GlobalMinute last = first;
    for (const auto& e : events) {
        GlobalMinute m = global_minute(e);
        first = std::min(first, m);
        last = std::max(last, m);
    }

    std::vector<Window> out;
    int index = 0;
    for (GlobalMinute start = first; start + length <= last + 1; start += step) {
        out.push_back(Window{start, length, index++});
    }
    return out;
}

std::vector<PassEvent> assign(std::span<const PassEvent> events, const Window& w) {
    std::vector<PassEvent> out;
    for (const auto& e : events) {
        if (w.contains(global_minute(e))) out.push_back(e);
    }
    return out;
}

}  // namespace passnet
