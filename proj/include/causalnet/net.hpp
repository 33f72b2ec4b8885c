#pragma once

#include "causalnet/common.hpp"

#include <optional>

namespace causalnet {

struct Transition {
    TransId id;
    Label label;
    std::set<PlaceId> pre;
    std::set<PlaceId> post;
    std::set<PlaceId> inhibit;
    std::set<PlaceId> read;

    bool operator==(const Transition&) const = default;
};

// Labelled contextual net. Validated on construction and immutable afterwards.
class ContextualNet {
public:
    ContextualNet() = default;
    ContextualNet(std::set<PlaceId> places, std::vector<Transition> transitions, Marking initial);

    const std::set<PlaceId>& places() const { return places_; }
    const std::map<TransId, Transition>& transitions() const { return transitions_; }
    const Marking& initial() const { return initial_; }

    bool has_transition(const TransId& t) const { return transitions_.count(t) > 0; }
    const Transition& transition(const TransId& t) const;
    const Label& label(const TransId& t) const { return transition(t).label; }

    // •s and s•
    const std::set<TransId>& producers(const PlaceId& s) const;
    const std::set<TransId>& consumers(const PlaceId& s) const;

    std::set<Label> labels() const;
    std::set<TransId> with_label(const Label& a) const;
    bool has_contextual_arcs() const;

    bool operator==(const ContextualNet&) const = default;

private:
    std::set<PlaceId> places_;
    std::map<TransId, Transition> transitions_;
    Marking initial_;
    std::map<PlaceId, std::set<TransId>> producers_;
    std::map<PlaceId, std::set<TransId>> consumers_;
};

bool enabled(const ContextualNet& net, const Marking& m, const TransId& t);
Marking fire(const ContextualNet& net, const Marking& m, const TransId& t);

struct FiringStep {
    TransId transition;
    Marking marking;  // after the step
};

struct FiringSequence {
    Marking start;
    std::vector<FiringStep> steps;

    const Marking& lead() const { return steps.empty() ? start : steps.back().marking; }
    State state() const;
};

struct Behaviour {
    std::vector<FiringSequence> firing_sequences;  // includes the empty sequence
    std::set<State> states;
    std::set<Configuration> configurations;
    std::set<Trace> traces;
    std::set<Marking> reachable_markings;
    bool complete = true;

    std::set<State> maximal_states() const;
};

Behaviour behaviour(const ContextualNet& net, const Bounds& bounds = {});

// Deduplicated exploration of (marking, state) pairs; cheaper than behaviour().
struct StateSpace {
    std::set<State> states;
    std::set<Marking> reachable_markings;
    bool complete = true;
};

StateSpace explore(const ContextualNet& net, const Bounds& bounds = {});
// Same, but throws BoundExceeded when incomplete.
StateSpace explore_complete(const ContextualNet& net, const Bounds& bounds = {});

Configuration configuration_of(const ContextualNet& net, const State& x);
// Label-set configurations; throws InvalidModel if some configuration repeats a label.
Family configuration_sets(const ContextualNet& net, const Bounds& bounds = {});

struct NetClass {
    bool safe = false;
    bool single_execution = false;
    bool unfolding = false;
    bool conflict_saturated = false;
};

NetClass classify(const ContextualNet& net, const Bounds& bounds = {});

PairSet semantic_conflict(const ContextualNet& net, const Bounds& bounds = {});
PairSet semantic_conflict(const ContextualNet& net, const StateSpace& space);

ContextualNet saturate_conflicts(const ContextualNet& net, const Bounds& bounds = {});
ContextualNet subnet(const ContextualNet& net, const std::set<TransId>& keep);

struct EquivResult {
    bool equivalent = false;
    std::string witness;
};

EquivResult net_equiv(const ContextualNet& a, const ContextualNet& b, const Bounds& bounds = {});

// Label-preserving isomorphism on places and transitions, respecting every arc kind and the marking.
bool isomorphic(const ContextualNet& a, const ContextualNet& b);

}  // namespace causalnet
