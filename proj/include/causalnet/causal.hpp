#pragma once

#include "causalnet/classic.hpp"
#include "causalnet/ea.hpp"

namespace causalnet {

// t before t' when t consumes from an inhibitor place of t', or produces into a read place of t'.
Relation prec(const ContextualNet& net);

struct LabelViews {
    EventSet inhibitor_consumers;  // labels of s• for s in °t
    EventSet inhibitor_producers;  // labels of •s for s in °t
    EventSet read_producers;       // labels of •s for s in ^t
};

LabelViews label_views(const ContextualNet& net, const TransId& t);

struct CausalNetView {
    ContextualNet net;
    Relation precedes;
    PairSet conflict;        // semantic, on transitions
    PairSet label_conflict;  // on labels
    std::map<TransId, LabelViews> views;
};

CausalNetView causal_view(const ContextualNet& net, const Bounds& bounds = {});
PairSet label_conflict(const ContextualNet& net, const PairSet& conflict);

ModelReport validate_pcn(const ContextualNet& net, const Bounds& bounds = {});

struct CnValidation {
    ModelReport report;
    CausalNetView view;
};

CnValidation validate_cn(const ContextualNet& net, const Bounds& bounds = {});

struct CnClass {
    bool occurrence_causal = false;
    bool plainly_caused = false;
    bool well_behaved = false;
    ModelReport details;
};

CnClass classify_cn(const ContextualNet& cn, const Bounds& bounds = {});
bool is_well_behaved(const ContextualNet& cn, std::string* witness = nullptr);

ContextualNet pes_to_cn(const Pes& pes);
ContextualNet on_to_cn(const ContextualNet& on, const Bounds& bounds = {});
Pes cn_to_pes(const ContextualNet& cn, const Bounds& bounds = {});
ContextualNet cn_to_on(const ContextualNet& cn, const Bounds& bounds = {});

ContextualNet un_to_cn(const ContextualNet& un, const Bounds& bounds = {});

struct IniMaxBund {
    EventSet ini;
    std::set<EventSet> max_bund;
};

IniMaxBund ini_maxbund(const ContextualNet& cn, const Label& a, const Bounds& bounds = {});
Bes cn_to_bes(const ContextualNet& cn, const Bounds& bounds = {});
ContextualNet bes_to_cn(const Bes& bes, const Bounds& bounds = {});

ContextualNet cdes_to_cn(const Cdes& cdes);
Cdes cn_to_cdes(const ContextualNet& cn);

}  // namespace causalnet
