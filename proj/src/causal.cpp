#include "causalnet/causal.hpp"

#include <algorithm>
#include <functional>

namespace causalnet {

Relation prec(const ContextualNet& net)
{
    Relation out;
    for (const auto& [t, a] : net.transitions())
        for (const auto& [u, b] : net.transitions())
            if (!set_intersection(a.pre, b.inhibit).empty() || !set_intersection(a.post, b.read).empty())
                out.insert({t, u});
    return out;
}

namespace {

EventSet labels_of(const ContextualNet& net, const std::set<TransId>& ts)
{
    EventSet out;
    for (const auto& t : ts) out.insert(net.label(t));
    return out;
}

bool has_cycle(const Relation& r, const std::set<TransId>& within)
{
    std::map<TransId, int> colour;
    std::function<bool(const TransId&)> dfs = [&](const TransId& v) {
        colour[v] = 1;
        for (auto it = r.lower_bound({v, std::string{}}); it != r.end() && it->first == v; ++it) {
            const auto& w = it->second;
            if (!within.count(w)) continue;
            if (colour[w] == 1) return true;
            if (colour[w] == 0 && dfs(w)) return true;
        }
        colour[v] = 2;
        return false;
    };
    for (const auto& v : within)
        if (colour[v] == 0 && dfs(v)) return true;
    return false;
}

}  // namespace

LabelViews label_views(const ContextualNet& net, const TransId& t)
{
    const Transition& tr = net.transition(t);
    LabelViews v;
    for (const auto& s : tr.inhibit) {
        auto a = labels_of(net, net.consumers(s));
        auto b = labels_of(net, net.producers(s));
        v.inhibitor_consumers.insert(a.begin(), a.end());
        v.inhibitor_producers.insert(b.begin(), b.end());
    }
    for (const auto& s : tr.read) {
        auto b = labels_of(net, net.producers(s));
        v.read_producers.insert(b.begin(), b.end());
    }
    return v;
}

PairSet label_conflict(const ContextualNet& net, const PairSet& conflict)
{
    PairSet out;
    const auto labels = net.labels();
    for (auto i = labels.begin(); i != labels.end(); ++i)
        for (auto j = std::next(i); j != labels.end(); ++j) {
            bool all = true;
            for (const auto& t : net.with_label(*i))
                for (const auto& u : net.with_label(*j))
                    if (!contains(conflict, t, u)) all = false;
            if (all) out.insert({*i, *j});
        }
    return out;
}

namespace {

CausalNetView make_view(const ContextualNet& net, const StateSpace& space)
{
    CausalNetView v{net, prec(net), semantic_conflict(net, space), {}, {}};
    v.label_conflict = label_conflict(net, v.conflict);
    for (const auto& [t, tr] : net.transitions()) v.views[t] = label_views(net, t);
    return v;
}

void add_pcn_checks(ModelReport& r, const ContextualNet& net, const Relation& pr, const PairSet& conflict)
{
    std::string flat;
    for (const auto& [t, a] : net.transitions()) {
        for (const auto& [u, b] : net.transitions())
            if (!set_intersection(a.post, b.pre).empty() && flat.empty())
                flat = "'" + t + "' feeds '" + u + "' through the flow";
        if (!set_intersection(a.pre, a.inhibit).empty() && flat.empty())
            flat = "'" + t + "' is inhibited by its own preset";
        if (!set_intersection(a.post, a.read).empty() && flat.empty()) flat = "'" + t + "' reads its own postset";
    }
    r.add("flow-flat", flat.empty(), flat);

    std::string single;
    for (const auto& [t, a] : net.transitions())
        for (const auto& s : a.inhibit)
            if (labels_of(net, net.consumers(s)).size() > 1 && single.empty())
                single = "inhibitor place '" + s + "' of '" + t + "' is consumed under several labels";
    r.add("inhibitor places consumed under one label", single.empty(), single);

    std::string anti;
    for (const auto& [t, u] : pr)
        if (pr.count({u, t}) && anti.empty()) anti = t + " and " + u + " precede each other";
    r.add("prec antisymmetric", anti.empty(), anti);
    r.add("finite contexts", true);

    std::string shared;
    for (const auto& [t, u] : conflict)
        if (set_intersection(net.transition(t).pre, net.transition(u).pre).empty() && shared.empty())
            shared = t + " and " + u + " conflict without a common preset place";
    r.add("conflict shares a preset place", shared.empty(), shared);

    std::string same;
    for (const auto& [t, a] : net.transitions())
        for (const auto& [u, b] : net.transitions())
            if (t < u && a.label == b.label && !contains(conflict, t, u) && same.empty())
                same = t + " and " + u + " share label '" + a.label + "' and can co-occur";
    r.add("equal labels conflict", same.empty(), same);
}

}  // namespace

CausalNetView causal_view(const ContextualNet& net, const Bounds& bounds)
{
    return make_view(net, explore_complete(net, bounds));
}

ModelReport validate_pcn(const ContextualNet& net, const Bounds& bounds)
{
    ModelReport r{"pcn", {}};
    const StateSpace space = explore_complete(net, bounds);
    add_pcn_checks(r, net, prec(net), semantic_conflict(net, space));
    return r;
}

CnValidation validate_cn(const ContextualNet& net, const Bounds& bounds)
{
    const StateSpace space = explore_complete(net, bounds);
    CnValidation out{{"cn", {}}, make_view(net, space)};
    add_pcn_checks(out.report, net, out.view.precedes, out.view.conflict);

    std::string cyc;
    std::set<TransId> fired;
    for (const auto& x : space.states) {
        const EventSet sx = support(x);
        fired.insert(sx.begin(), sx.end());
        if (cyc.empty() && has_cycle(out.view.precedes, sx)) cyc = "prec is cyclic within state " + show(x);
    }
    out.report.add("prec a partial order on every state", cyc.empty(), cyc);
    std::string dead;
    for (const auto& [t, tr] : net.transitions())
        if (!fired.count(t)) {
            dead = t;
            break;
        }
    out.report.add("every transition fires", dead.empty(), dead);
    return out;
}

bool is_well_behaved(const ContextualNet& cn, std::string* witness)
{
    auto fail = [&](std::string w) {
        if (witness) *witness = std::move(w);
        return false;
    };
    for (const auto& a : cn.labels()) {
        const auto group = cn.with_label(a);
        const Transition& first = cn.transition(*group.begin());
        if (first.post.size() != 1) return fail("'" + first.id + "' does not have a singleton postset");
        std::size_t own = 0;
        for (const auto& s : first.pre)
            if (labels_of(cn, cn.consumers(s)) == EventSet{a}) ++own;
        if (own != 1) return fail("'" + first.id + "' has " + std::to_string(own) + " preset places of its own");
        const auto v0 = label_views(cn, first.id);
        const EventSet env0 = set_union(v0.inhibitor_consumers, v0.inhibitor_producers);
        for (const auto& t : group) {
            const Transition& tr = cn.transition(t);
            if (tr.pre != first.pre || tr.post != first.post)
                return fail("'" + t + "' and '" + first.id + "' differ in preset or postset");
            const auto v = label_views(cn, t);
            if (set_union(v.inhibitor_consumers, v.inhibitor_producers) != env0)
                return fail("'" + t + "' and '" + first.id + "' inhibit on different labels");
        }
    }
    return true;
}

namespace {

// Matches °t with °t' so that paired places are consumed under equal or label-conflicting labels.
bool inhibitors_match(const ContextualNet& net, const Transition& a, const Transition& b, const PairSet& lc)
{
    std::vector<EventSet> la, lb;
    for (const auto& s : a.inhibit) la.push_back(labels_of(net, net.consumers(s)));
    for (const auto& s : b.inhibit) lb.push_back(labels_of(net, net.consumers(s)));
    if (la.size() != lb.size()) return false;
    auto compatible = [&](const EventSet& x, const EventSet& y) {
        if (x == y) return true;
        if (x.size() != 1 || y.size() != 1) return false;
        return contains(lc, *x.begin(), *y.begin());
    };
    std::vector<bool> used(lb.size(), false);
    std::function<bool(std::size_t)> match = [&](std::size_t i) {
        if (i == la.size()) return true;
        for (std::size_t j = 0; j < lb.size(); ++j)
            if (!used[j] && compatible(la[i], lb[j])) {
                used[j] = true;
                if (match(i + 1)) return true;
                used[j] = false;
            }
        return false;
    };
    return match(0);
}

CnClass classify_with(const ContextualNet& cn, const CausalNetView& v)
{
    CnClass c;
    ModelReport& r = c.details;
    r.kind = "cn-class";
    const bool no_reads = std::all_of(cn.transitions().begin(), cn.transitions().end(),
                                      [](const auto& kv) { return kv.second.read.empty(); });
    r.add("no read arcs", no_reads);

    const bool injective = cn.labels().size() == cn.transitions().size();
    r.add("injective labelling", injective);
    const Relation closed = transitive_closure(v.precedes);
    std::string refl;
    for (const auto& [a, b] : closed)
        if (a == b) refl = a;
    r.add("prec acyclic", refl.empty(), refl);
    std::string inherit;
    for (const auto& [t, u] : v.conflict)
        for (const auto& [x, y] : closed) {
            if (!inherit.empty()) break;
            if (x == u && y != t && !contains(v.conflict, t, y)) inherit = t + "#" + u + " not inherited by " + y;
            if (x == t && y != u && !contains(v.conflict, u, y)) inherit = u + "#" + t + " not inherited by " + y;
        }
    r.add("conflict inherited along prec", inherit.empty(), inherit);
    c.occurrence_causal = no_reads && injective && refl.empty() && inherit.empty();

    std::string produced;
    for (const auto& [t, tr] : cn.transitions())
        for (const auto& s : tr.inhibit)
            if (!cn.producers(s).empty() && produced.empty()) produced = "inhibitor place '" + s + "' is produced";
    r.add("inhibitor places unproduced", produced.empty(), produced);
    std::string matched;
    for (const auto& [t, a] : cn.transitions())
        for (const auto& [u, b] : cn.transitions())
            if (t < u && a.label == b.label && matched.empty() && !inhibitors_match(cn, a, b, v.label_conflict))
                matched = t + " and " + u + " have incompatible inhibitors";
    r.add("equal labels have matching inhibitors", matched.empty(), matched);
    c.plainly_caused = no_reads && produced.empty() && matched.empty();

    std::string wb;
    c.well_behaved = is_well_behaved(cn, &wb);
    r.add("well behaved", c.well_behaved, wb);
    return c;
}

}  // namespace

CnClass classify_cn(const ContextualNet& cn, const Bounds& bounds)
{
    return classify_with(cn, causal_view(cn, bounds));
}

ContextualNet pes_to_cn(const Pes& pes)
{
    namespace pn = place_names;
    std::set<PlaceId> places;
    std::map<TransId, Transition> ts;
    Marking m;
    for (const auto& e : pes.events()) {
        places.insert(pn::input(e));
        places.insert(pn::output(e));
        m[pn::input(e)] = 1;
        ts[e] = {e, e, {pn::input(e)}, {pn::output(e)}, {}, {}};
    }
    for (const auto& [a, b] : pes.conflict()) {
        auto s = pn::conflict(a, b);
        places.insert(s);
        m[s] = 1;
        ts[a].pre.insert(s);
        ts[b].pre.insert(s);
    }
    for (const auto& [a, b] : pes.causality()) ts[b].inhibit.insert(pn::input(a));
    std::vector<Transition> list;
    for (auto& [id, t] : ts) list.push_back(std::move(t));
    return ContextualNet(std::move(places), std::move(list), std::move(m));
}

ContextualNet on_to_cn(const ContextualNet& on, const Bounds& bounds)
{
    return pes_to_cn(on_to_pes(on, bounds));
}

Pes cn_to_pes(const ContextualNet& cn, const Bounds& bounds)
{
    const CausalNetView v = causal_view(cn, bounds);
    const CnClass c = classify_with(cn, v);
    if (!c.occurrence_causal)
        throw Error(ErrorCode::not_occurrence_causal, "not occurrence causal: " + c.details.first_failure());
    Relation lt;
    for (const auto& [a, b] : transitive_closure(v.precedes)) lt.insert({cn.label(a), cn.label(b)});
    PairSet conflict;
    for (const auto& [a, b] : v.conflict) conflict.insert(unordered(cn.label(a), cn.label(b)));
    return Pes(cn.labels(), std::move(lt), std::move(conflict));
}

ContextualNet cn_to_on(const ContextualNet& cn, const Bounds& bounds)
{
    return pes_to_on(cn_to_pes(cn, bounds));
}

ContextualNet un_to_cn(const ContextualNet& un, const Bounds& bounds)
{
    namespace pn = place_names;
    const UnValidation v = validate_un(un, bounds);
    if (!v.view) throw Error(ErrorCode::invalid_model, "not an unravel net: " + v.report.first_failure());
    std::set<PlaceId> places;
    Marking m;
    std::map<TransId, std::set<PlaceId>> shared;
    for (const auto& [t, tr] : un.transitions()) {
        places.insert(pn::input(t));
        places.insert(pn::output(t));
        m[pn::input(t)] = 1;
        shared[t].insert(pn::input(t));
    }
    for (const auto& [a, b] : v.view->conflict) {
        auto s = pn::conflict(a, b);
        places.insert(s);
        m[s] = 1;
        shared[a].insert(s);
        shared[b].insert(s);
    }
    std::vector<Transition> list;
    for (const auto& [t, tr] : un.transitions())
        for (const auto& y : un_causes(un, t)) {
            Transition inc{t + "|" + join(y), t, shared[t], {pn::output(t)}, {}, {}};
            for (const auto& u : y) inc.inhibit.insert(pn::input(u));
            list.push_back(std::move(inc));
        }
    return ContextualNet(std::move(places), std::move(list), std::move(m));
}

namespace {

IniMaxBund ini_maxbund_with(const ContextualNet& cn, const Label& a, const CausalNetView& v)
{
    IniMaxBund out;
    for (const auto& t : cn.with_label(a)) {
        auto l = v.views.at(t).inhibitor_consumers;
        out.ini.insert(l.begin(), l.end());
    }
    const std::vector<Label> ini(out.ini.begin(), out.ini.end());
    std::vector<EventSet> cliques;
    for (std::size_t mask = 1; mask < (std::size_t{1} << ini.size()); ++mask) {
        EventSet y;
        for (std::size_t i = 0; i < ini.size(); ++i)
            if (mask >> i & 1) y.insert(ini[i]);
        bool clique = true;
        for (auto i = y.begin(); i != y.end() && clique; ++i)
            for (auto j = std::next(i); j != y.end(); ++j)
                if (!contains(v.label_conflict, *i, *j)) {
                    clique = false;
                    break;
                }
        if (clique) cliques.push_back(std::move(y));
    }
    for (const auto& y : cliques) {
        const bool maximal = std::none_of(cliques.begin(), cliques.end(), [&](const EventSet& z) {
            return z.size() > y.size() && subset_of(y, z);
        });
        if (maximal) out.max_bund.insert(y);
    }
    return out;
}

}  // namespace

IniMaxBund ini_maxbund(const ContextualNet& cn, const Label& a, const Bounds& bounds)
{
    const CausalNetView v = causal_view(cn, bounds);
    const CnClass c = classify_with(cn, v);
    if (!c.plainly_caused)
        throw Error(ErrorCode::not_plainly_caused, "not plainly caused: " + c.details.first_failure());
    if (cn.with_label(a).empty()) throw Error(ErrorCode::unknown_id, "unknown label '" + a + "'");
    return ini_maxbund_with(cn, a, v);
}

Bes cn_to_bes(const ContextualNet& cn, const Bounds& bounds)
{
    const CausalNetView v = causal_view(cn, bounds);
    const CnClass c = classify_with(cn, v);
    if (!c.plainly_caused)
        throw Error(ErrorCode::not_plainly_caused, "not plainly caused: " + c.details.first_failure());
    std::set<Bundle> bundles;
    for (const auto& a : cn.labels())
        for (const auto& y : ini_maxbund_with(cn, a, v).max_bund) bundles.insert({y, a});
    return Bes(cn.labels(), std::move(bundles), v.label_conflict);
}

ContextualNet bes_to_cn(const Bes& bes, const Bounds& bounds)
{
    return un_to_cn(bes_to_un(bes), bounds);
}

ContextualNet cdes_to_cn(const Cdes& cdes)
{
    namespace pn = place_names;
    if (!is_elementary(cdes)) throw Error(ErrorCode::not_elementary, "some event does not have exactly one entry");
    std::set<PlaceId> places;
    Marking m;
    std::map<Label, std::set<PlaceId>> shared;
    for (const auto& e : cdes.events()) {
        places.insert(pn::input(e));
        places.insert(pn::output(e));
        m[pn::input(e)] = 1;
        shared[e].insert(pn::input(e));
    }
    for (const auto& [a, b] : cdes.conflict()) {
        auto s = pn::conflict(a, b);
        places.insert(s);
        m[s] = 1;
        shared[a].insert(s);
        shared[b].insert(s);
    }
    std::vector<Transition> list;
    for (const auto& e : cdes.events()) {
        const Entry& z = cdes.entries(e).front();
        const EventSet context = cxt(z);
        for (const auto& [x, y] : z) {
            Transition t{e + "|" + join(x) + "|" + join(y), e, shared[e], {pn::output(e)}, {}, {}};
            for (const auto& u : x) t.inhibit.insert(pn::input(u));
            for (const auto& u : set_difference(context, set_union(x, y))) t.inhibit.insert(pn::output(u));
            for (const auto& u : y) t.read.insert(pn::output(u));
            list.push_back(std::move(t));
        }
    }
    return ContextualNet(std::move(places), std::move(list), std::move(m));
}

Cdes cn_to_cdes(const ContextualNet& cn)
{
    std::string why;
    if (!is_well_behaved(cn, &why)) throw Error(ErrorCode::not_well_behaved, "not well behaved: " + why);
    std::map<Label, std::vector<Entry>> cd;
    for (const auto& a : cn.labels()) {
        Entry z;
        for (const auto& t : cn.with_label(a)) {
            const LabelViews v = label_views(cn, t);
            z.insert({v.inhibitor_consumers, v.read_producers});
        }
        cd[a] = {std::move(z)};
    }
    PairSet conflict;
    for (const auto& [t, a] : cn.transitions())
        for (const auto& [u, b] : cn.transitions())
            if (a.label < b.label && !set_intersection(a.pre, b.pre).empty()) conflict.insert({a.label, b.label});
    return Cdes(cn.labels(), std::move(conflict), std::move(cd));
}

}  // namespace causalnet
