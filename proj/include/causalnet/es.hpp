#pragma once

#include "causalnet/common.hpp"

#include <optional>

namespace causalnet {

// Prime event structure. Causality is stored transitively closed; conflict is stored as given.
class Pes {
public:
    Pes() = default;
    Pes(EventSet events, Relation causality, PairSet conflict);

    const EventSet& events() const { return events_; }
    const Relation& causality() const { return causality_; }
    const PairSet& conflict() const { return conflict_; }

    bool precedes(const Label& a, const Label& b) const { return causality_.count({a, b}) > 0; }
    bool in_conflict(const Label& a, const Label& b) const { return contains(conflict_, a, b); }
    EventSet causes(const Label& e) const;  // strict

    bool operator==(const Pes&) const = default;

private:
    EventSet events_;
    Relation causality_;
    PairSet conflict_;
};

struct Bundle {
    EventSet set;
    Label event;
    auto operator<=>(const Bundle&) const = default;
};

class Bes {
public:
    Bes() = default;
    Bes(EventSet events, std::set<Bundle> bundles, PairSet conflict);

    const EventSet& events() const { return events_; }
    const std::set<Bundle>& bundles() const { return bundles_; }
    const PairSet& conflict() const { return conflict_; }
    bool in_conflict(const Label& a, const Label& b) const { return contains(conflict_, a, b); }
    std::vector<EventSet> bundles_of(const Label& e) const;

    bool operator==(const Bes&) const = default;

private:
    EventSet events_;
    std::set<Bundle> bundles_;
    PairSet conflict_;
};

// (X, Y): X is the context that must be present exactly, Y the dependencies.
using ContextPair = std::pair<EventSet, EventSet>;
using Entry = std::set<ContextPair>;

// Context-dependent event structure.
class Cdes {
public:
    Cdes() = default;
    Cdes(EventSet events, PairSet conflict, std::map<Label, std::vector<Entry>> entries);

    const EventSet& events() const { return events_; }
    const PairSet& conflict() const { return conflict_; }
    const std::map<Label, std::vector<Entry>>& all_entries() const { return entries_; }
    const std::vector<Entry>& entries(const Label& e) const;
    bool in_conflict(const Label& a, const Label& b) const { return contains(conflict_, a, b); }

    bool operator==(const Cdes&) const = default;

private:
    EventSet events_;
    PairSet conflict_;
    std::map<Label, std::vector<Entry>> entries_;  // entries kept sorted and deduplicated
};

EventSet cxt(const Entry& z);
bool conflict_free(const PairSet& conflict, const EventSet& s);

ModelReport validate_es(const Pes& pes);
ModelReport validate_es(const Bes& bes);
ModelReport validate_es(const Cdes& cdes);

// False when e is already in C.
bool cdes_enabled(const Cdes& cdes, const EventSet& c, const Label& e);

// Configuration -> lexicographically least witnessing sequence.
struct EsConfigSet {
    std::map<EventSet, Trace> witnesses;

    Family family() const;
    bool contains(const EventSet& c) const { return witnesses.count(c) > 0; }
    std::size_t size() const { return witnesses.size(); }
};

EsConfigSet es_configurations(const Pes& pes, std::optional<std::size_t> size_bound = {});
EsConfigSet es_configurations(const Bes& bes, std::optional<std::size_t> size_bound = {});
EsConfigSet es_configurations(const Cdes& cdes, std::optional<std::size_t> size_bound = {});

bool is_elementary(const Cdes& cdes);
// ea_to_cdes(cdes_to_ea(cdes)); defined with the automaton code.
Cdes elementarize(const Cdes& cdes);

// The PES viewed as a bundle structure: each strict cause gives a singleton bundle.
Bes pes_as_bes(const Pes& pes);

}  // namespace causalnet
