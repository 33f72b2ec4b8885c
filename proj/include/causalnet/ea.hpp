#pragma once

#include "causalnet/es.hpp"

namespace causalnet {

using Step = std::pair<EventSet, EventSet>;

class EventAutomaton {
public:
    EventAutomaton() = default;
    EventAutomaton(EventSet events, std::set<EventSet> states, std::set<Step> steps, EventSet initial);

    const EventSet& events() const { return events_; }
    const std::set<EventSet>& states() const { return states_; }
    const std::set<Step>& steps() const { return steps_; }
    const EventSet& initial() const { return initial_; }
    bool has_step(const EventSet& from, const EventSet& to) const { return steps_.count({from, to}) > 0; }

    bool operator==(const EventAutomaton&) const = default;

private:
    EventSet events_;
    std::set<EventSet> states_;
    std::set<Step> steps_;
    EventSet initial_;
};

// States in canonical order: by size, then lexicographically.
std::vector<EventSet> ordered_states(const EventAutomaton& ea);

EventAutomaton cdes_to_ea(const Cdes& cdes);

struct EaAnalysis {
    bool simple = false;
    bool complete = false;
    bool finitely_caused = false;
    bool finitely_inhibited = false;
    PairSet conflict;
    std::string witness;  // first failing property, if any
};

EaAnalysis analyze_ea(const EventAutomaton& ea);

std::set<EventSet> allow_set(const EventAutomaton& ea, const Label& e);
std::set<EventSet> inhib_set(const EventAutomaton& ea, const Label& e);

Cdes ea_to_cdes(const EventAutomaton& ea);

struct CdesEquivResult {
    bool equivalent = false;
    std::string witness;
};

CdesEquivResult cdes_equiv(const Cdes& a, const Cdes& b);

}  // namespace causalnet
