#pragma once

#include "causalnet/es.hpp"
#include "causalnet/net.hpp"

namespace causalnet {

// Canonical names of synthesized places.
namespace place_names {
std::string input(const Label& e);   // ast:e, marked, consumed by e
std::string output(const Label& e);  // e:ast, produced by e
std::string order(const Label& before, const Label& after);  // lt:e:e'
std::string conflict(const Label& a, const Label& b);        // cf:e:e'
std::string bundle(std::size_t index, const Label& e);       // bundle:i:e
}  // namespace place_names

struct OccurrenceNetView {
    ContextualNet net;
    Relation causality;  // strict, events only
    PairSet immediate_conflict;
    PairSet conflict;
};

struct OnValidation {
    ModelReport report;
    std::optional<OccurrenceNetView> view;  // present when valid
};

OnValidation validate_on(const ContextualNet& net, const Bounds& bounds = {});
Pes on_to_pes(const ContextualNet& on, const Bounds& bounds = {});
ContextualNet pes_to_on(const Pes& pes);

struct UnravelNetView {
    ContextualNet net;
    PairSet conflict;  // semantic
};

struct UnValidation {
    ModelReport report;
    std::optional<UnravelNetView> view;
};

UnValidation validate_un(const ContextualNet& net, const Bounds& bounds = {});

// Structural consequences every unravel net must satisfy: marked places are never produced,
// no transition fires twice, and a shared preset or postset implies semantic conflict.
ModelReport check_unravel_propositions(const ContextualNet& un, const Bounds& bounds = {});

std::set<EventSet> un_causes(const ContextualNet& un, const TransId& t);
Bes un_to_bes(const ContextualNet& un, const Bounds& bounds = {});
ContextualNet bes_to_un(const Bes& bes);

}  // namespace causalnet
