#include "causalnet/ea.hpp"

#include <algorithm>

namespace causalnet {

EventAutomaton::EventAutomaton(EventSet events, std::set<EventSet> states, std::set<Step> steps, EventSet initial)
    : events_(std::move(events)), states_(std::move(states)), steps_(std::move(steps)), initial_(std::move(initial))
{
    for (const auto& s : states_)
        if (!subset_of(s, events_))
            throw Error(ErrorCode::invalid_model, "state " + show(s) + " mentions undeclared events");
    for (const auto& [from, to] : steps_)
        if (!states_.count(from) || !states_.count(to))
            throw Error(ErrorCode::invalid_model, "step " + show(from) + " -> " + show(to) + " leaves the states");
    if (!states_.count(initial_)) throw Error(ErrorCode::invalid_model, "initial state is not a state");
}

std::vector<EventSet> ordered_states(const EventAutomaton& ea)
{
    std::vector<EventSet> out(ea.states().begin(), ea.states().end());
    std::stable_sort(out.begin(), out.end(),
                     [](const EventSet& a, const EventSet& b) { return a.size() < b.size(); });
    return out;
}

EventAutomaton cdes_to_ea(const Cdes& cdes)
{
    const Family confs = es_configurations(cdes).family();
    std::set<Step> steps;
    for (const auto& c : confs)
        for (const auto& e : cdes.events()) {
            if (c.count(e)) continue;
            EventSet c2 = c;
            c2.insert(e);
            if (confs.count(c2) && cdes_enabled(cdes, c, e)) steps.insert({c, c2});
        }
    return EventAutomaton(cdes.events(), confs, std::move(steps), {});
}

std::set<EventSet> allow_set(const EventAutomaton& ea, const Label& e)
{
    std::set<EventSet> out;
    for (const auto& s : ea.states()) {
        if (s.count(e)) continue;
        EventSet s2 = s;
        s2.insert(e);
        if (ea.has_step(s, s2)) out.insert(s);
    }
    return out;
}

std::set<EventSet> inhib_set(const EventAutomaton& ea, const Label& e)
{
    std::set<EventSet> out;
    for (const auto& s : ea.states()) {
        if (s.count(e)) continue;
        EventSet with = s;
        with.insert(e);
        const bool later = std::any_of(ea.states().begin(), ea.states().end(),
                                       [&](const EventSet& t) { return subset_of(with, t); });
        if (!later) continue;
        bool steps_to_e = false;
        for (const auto& [from, to] : ea.steps())
            if (from == s && to.count(e)) {
                steps_to_e = true;
                break;
            }
        if (!steps_to_e) out.insert(s);
    }
    return out;
}

namespace {

PairSet ea_conflict(const EventAutomaton& ea)
{
    PairSet out;
    const auto& ev = ea.events();
    for (auto i = ev.begin(); i != ev.end(); ++i)
        for (auto j = std::next(i); j != ev.end(); ++j) {
            const bool together = std::any_of(ea.states().begin(), ea.states().end(),
                                              [&](const EventSet& s) { return s.count(*i) && s.count(*j); });
            if (!together) out.insert({*i, *j});
        }
    return out;
}

}  // namespace

EaAnalysis analyze_ea(const EventAutomaton& ea)
{
    EaAnalysis a;
    a.conflict = ea_conflict(ea);
    a.simple = true;
    for (const auto& e : ea.events())
        if (allow_set(ea, e).empty()) {
            a.simple = false;
            a.witness = "not simple: no step adds '" + e + "' alone";
            break;
        }
    std::set<EventSet> reach{ea.initial()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [from, to] : ea.steps())
            if (reach.count(from) && reach.insert(to).second) grew = true;
    }
    a.complete = reach == ea.states();
    if (!a.complete && a.witness.empty()) {
        for (const auto& s : ea.states())
            if (!reach.count(s)) {
                a.witness = "not complete: " + show(s) + " unreachable";
                break;
            }
    }
    // Finite automata always admit finite witness families.
    a.finitely_caused = true;
    a.finitely_inhibited = true;
    return a;
}

namespace {

Entry entry_for(const std::set<EventSet>& allow, const std::set<EventSet>& inhib, const Label& e)
{
    Entry z;
    for (const auto& x : allow) z.insert({x, {}});
    for (const auto& x : inhib) z.insert({x, {e}});
    return z;
}

// Whether the single entry z lets e fire at state s.
bool entry_enables(const Entry& z, const EventSet& context, const EventSet& s)
{
    const EventSet seen = set_intersection(context, s);
    return std::any_of(z.begin(), z.end(),
                       [&](const ContextPair& p) { return p.first == seen && subset_of(p.second, s); });
}

}  // namespace

Cdes ea_to_cdes(const EventAutomaton& ea)
{
    const EaAnalysis a = analyze_ea(ea);
    if (!a.simple || !a.complete) throw Error(ErrorCode::property_violation, a.witness);
    EventSet used;
    for (const auto& s : ea.states()) used.insert(s.begin(), s.end());
    if (used != ea.events())
        throw Error(ErrorCode::property_violation, "events " + show(set_difference(ea.events(), used)) +
                                                       " occur in no state");

    std::map<Label, std::vector<Entry>> cd;
    for (const auto& e : ea.events()) {
        const std::set<EventSet> allow = allow_set(ea, e);
        std::set<EventSet> inhib = inhib_set(ea, e);
        // The inhibition family alone can leave e enabled at a state without an e-step
        // when the offending events stay outside the context; block those states too.
        bool grew = true;
        while (grew) {
            grew = false;
            const Entry z = entry_for(allow, inhib, e);
            const EventSet context = cxt(z);
            for (const auto& s : ea.states()) {
                if (s.count(e) || allow.count(s) || inhib.count(s)) continue;
                if (!conflict_free(a.conflict, set_union(s, {e}))) continue;
                if (entry_enables(z, context, s)) {
                    inhib.insert(s);
                    grew = true;
                    break;
                }
            }
        }
        cd[e] = {entry_for(allow, inhib, e)};
    }
    return Cdes(ea.events(), a.conflict, std::move(cd));
}

Cdes elementarize(const Cdes& cdes)
{
    return ea_to_cdes(cdes_to_ea(cdes));
}

CdesEquivResult cdes_equiv(const Cdes& a, const Cdes& b)
{
    if (a.events() != b.events())
        return {false, "event sets differ: " + show(a.events()) + " vs " + show(b.events())};
    const EventAutomaton ea = cdes_to_ea(a);
    const EventAutomaton eb = cdes_to_ea(b);
    for (const auto& s : ea.states())
        if (!eb.states().count(s)) return {false, "configuration " + show(s) + " only in first"};
    for (const auto& s : eb.states())
        if (!ea.states().count(s)) return {false, "configuration " + show(s) + " only in second"};
    for (const auto& [f, t] : ea.steps())
        if (!eb.has_step(f, t)) return {false, "step " + show(f) + " -> " + show(t) + " only in first"};
    for (const auto& [f, t] : eb.steps())
        if (!ea.has_step(f, t)) return {false, "step " + show(f) + " -> " + show(t) + " only in second"};
    return {true, {}};
}

}  // namespace causalnet
