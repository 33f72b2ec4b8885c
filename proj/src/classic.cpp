#include "causalnet/classic.hpp"

#include <algorithm>
#include <functional>

namespace causalnet {

namespace place_names {
std::string input(const Label& e) { return "ast:" + e; }
std::string output(const Label& e) { return e + ":ast"; }
std::string order(const Label& before, const Label& after) { return "lt:" + before + ":" + after; }
std::string conflict(const Label& a, const Label& b)
{
    auto [x, y] = unordered(a, b);
    return "cf:" + x + ":" + y;
}
std::string bundle(std::size_t index, const Label& e) { return "bundle:" + std::to_string(index) + ":" + e; }
}  // namespace place_names

namespace {

struct FlowGraph {
    std::map<std::string, std::set<std::string>> succ;

    explicit FlowGraph(const ContextualNet& net)
    {
        for (const auto& s : net.places()) succ[s];
        for (const auto& [id, t] : net.transitions()) {
            auto& out = succ[id];
            out.insert(t.post.begin(), t.post.end());
            for (const auto& s : t.pre) succ[s].insert(id);
        }
    }

    std::string find_cycle() const
    {
        std::map<std::string, int> colour;
        std::string found;
        std::function<bool(const std::string&)> dfs = [&](const std::string& v) {
            colour[v] = 1;
            for (const auto& w : succ.at(v)) {
                if (colour[w] == 1) {
                    found = w;
                    return true;
                }
                if (colour[w] == 0 && dfs(w)) return true;
            }
            colour[v] = 2;
            return false;
        };
        for (const auto& [v, ws] : succ)
            if (colour[v] == 0 && dfs(v)) return found;
        return {};
    }

    std::set<std::string> reachable_from(const std::set<std::string>& roots) const
    {
        std::set<std::string> seen(roots.begin(), roots.end());
        std::vector<std::string> todo(roots.begin(), roots.end());
        while (!todo.empty()) {
            auto v = todo.back();
            todo.pop_back();
            for (const auto& w : succ.at(v))
                if (seen.insert(w).second) todo.push_back(w);
        }
        return seen;
    }
};

std::string first_with_contextual_arcs(const ContextualNet& net)
{
    for (const auto& [id, t] : net.transitions())
        if (!t.inhibit.empty() || !t.read.empty()) return id;
    return {};
}

std::string first_non_identity_label(const ContextualNet& net)
{
    for (const auto& [id, t] : net.transitions())
        if (t.label != id) return id;
    return {};
}

Relation event_order(const ContextualNet& net)
{
    Relation direct;
    for (const auto& [id, t] : net.transitions())
        for (const auto& s : t.post)
            for (const auto& u : net.consumers(s)) direct.insert({id, u});
    return transitive_closure(direct);
}

PairSet inherited_conflict(const ContextualNet& net, const Relation& lt, const PairSet& immediate)
{
    auto below = [&](const TransId& x) {
        std::set<TransId> out{x};
        for (const auto& [a, b] : lt)
            if (b == x) out.insert(a);
        return out;
    };
    std::map<TransId, std::set<TransId>> down;
    for (const auto& [id, t] : net.transitions()) down[id] = below(id);
    PairSet out;
    for (const auto& [x, dx] : down)
        for (const auto& [y, dy] : down) {
            if (y < x) continue;
            bool clash = false;
            for (const auto& a : dx) {
                for (const auto& b : dy)
                    if (a != b && contains(immediate, a, b)) {
                        clash = true;
                        break;
                    }
                if (clash) break;
            }
            if (clash) out.insert({x, y});
        }
    return out;
}

std::string unsafe_witness(const StateSpace& space)
{
    for (const auto& m : space.reachable_markings)
        if (!is_set(m)) return "reachable marking " + show(m);
    return {};
}

}  // namespace

OnValidation validate_on(const ContextualNet& net, const Bounds& bounds)
{
    OnValidation out;
    ModelReport& r = out.report;
    r.kind = "on";
    auto ctx = first_with_contextual_arcs(net);
    r.add("no contextual arcs", ctx.empty(), ctx.empty() ? "" : "transition '" + ctx + "'");
    if (!ctx.empty()) return out;
    auto lab = first_non_identity_label(net);
    r.add("identity labelling", lab.empty(), lab);

    const FlowGraph g(net);
    auto cyc = g.find_cycle();
    r.add("acyclic", cyc.empty(), cyc.empty() ? "" : "cycle through '" + cyc + "'");

    std::string pre1, marked;
    for (const auto& s : net.places()) {
        if (net.producers(s).size() > 1 && pre1.empty()) pre1 = "condition '" + s + "' has " +
                                                                 std::to_string(net.producers(s).size()) + " producers";
        if (net.initial().count(s) && !net.producers(s).empty() && marked.empty())
            marked = "marked condition '" + s + "' is produced";
    }
    r.add("condition presets at most singleton", pre1.empty(), pre1);
    r.add("initial conditions unproduced", marked.empty(), marked);

    const auto reach = g.reachable_from(support(net.initial()));
    std::string orphan;
    for (const auto& s : net.places())
        if (!reach.count(s)) {
            orphan = s;
            break;
        }
    r.add("conditions rooted in initial marking", orphan.empty(), orphan);
    r.add("finite histories", true);

    if (!cyc.empty()) {
        r.add("safe", false, "not checked on a cyclic net");
        return out;
    }
    const StateSpace space = explore(net, bounds);
    auto unsafe = space.complete ? unsafe_witness(space) : "enumeration bound exceeded";
    r.add("safe", unsafe.empty(), unsafe);

    OccurrenceNetView view{net, event_order(net), {}, {}};
    for (const auto& s : net.places()) {
        const auto& cs = net.consumers(s);
        for (auto i = cs.begin(); i != cs.end(); ++i)
            for (auto j = std::next(i); j != cs.end(); ++j) view.immediate_conflict.insert({*i, *j});
    }
    view.conflict = inherited_conflict(net, view.causality, view.immediate_conflict);
    std::string self;
    for (const auto& [a, b] : view.conflict)
        if (a == b) {
            self = a + "#" + a;
            break;
        }
    r.add("conflict irreflexive", self.empty(), self);
    if (r.valid()) out.view = std::move(view);
    return out;
}

Pes on_to_pes(const ContextualNet& on, const Bounds& bounds)
{
    auto v = validate_on(on, bounds);
    if (!v.view) throw Error(ErrorCode::invalid_model, "not an occurrence net: " + v.report.first_failure());
    EventSet events;
    for (const auto& [id, t] : on.transitions()) events.insert(id);
    return Pes(std::move(events), v.view->causality, v.view->conflict);
}

ContextualNet pes_to_on(const Pes& pes)
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
    for (const auto& [a, b] : pes.causality()) {
        auto s = pn::order(a, b);
        places.insert(s);
        ts[a].post.insert(s);
        ts[b].pre.insert(s);
    }
    for (const auto& [a, b] : pes.conflict()) {
        auto s = pn::conflict(a, b);
        places.insert(s);
        m[s] = 1;
        ts[a].pre.insert(s);
        ts[b].pre.insert(s);
    }
    std::vector<Transition> list;
    for (auto& [id, t] : ts) list.push_back(std::move(t));
    return ContextualNet(std::move(places), std::move(list), std::move(m));
}

UnValidation validate_un(const ContextualNet& net, const Bounds& bounds)
{
    UnValidation out;
    ModelReport& r = out.report;
    r.kind = "un";
    auto ctx = first_with_contextual_arcs(net);
    r.add("no contextual arcs", ctx.empty(), ctx.empty() ? "" : "transition '" + ctx + "'");
    if (!ctx.empty()) return out;
    auto lab = first_non_identity_label(net);
    r.add("identity labelling", lab.empty(), lab);

    const StateSpace space = explore_complete(net, bounds);
    auto unsafe = unsafe_witness(space);
    r.add("safe", unsafe.empty(), unsafe);

    std::string bad_state;
    std::set<TransId> fired;
    for (const auto& x : space.states) {
        const EventSet sx = support(x);
        fired.insert(sx.begin(), sx.end());
        if (!bad_state.empty()) continue;
        const ContextualNet sub = subnet(net, sx);
        if (auto c = FlowGraph(sub).find_cycle(); !c.empty()) {
            bad_state = "subnet of " + show(sx) + " has a cycle through '" + c + "'";
            continue;
        }
        for (const auto& s : sub.places())
            if (sub.consumers(s).size() > 1) {
                bad_state = "subnet of " + show(sx) + " branches at '" + s + "'";
                break;
            }
    }
    r.add("state subnets acyclic and conflict-free", bad_state.empty(), bad_state);
    std::string dead;
    for (const auto& [id, t] : net.transitions())
        if (!fired.count(id)) {
            dead = id;
            break;
        }
    r.add("every transition fires", dead.empty(), dead);

    if (r.valid()) {
        // Derived consequences; failing here means the checks above are inconsistent.
        std::string m;
        for (const auto& [s, n] : net.initial())
            if (!net.producers(s).empty()) m = "internal inconsistency: marked place '" + s + "' is produced";
        r.add("marked places unproduced", m.empty(), m);
        bool single = std::all_of(space.states.begin(), space.states.end(), is_set);
        r.add("single execution", single, single ? "" : "internal inconsistency: a transition fires twice");
    }
    if (r.valid()) out.view = UnravelNetView{net, semantic_conflict(net, space)};
    return out;
}

ModelReport check_unravel_propositions(const ContextualNet& un, const Bounds& bounds)
{
    ModelReport r{"un-propositions", {}};
    const StateSpace space = explore_complete(un, bounds);
    const PairSet conflict = semantic_conflict(un, space);
    std::string m;
    for (const auto& [s, n] : un.initial())
        if (!un.producers(s).empty()) m = s;
    r.add("marked places unproduced", m.empty(), m);
    bool single = std::all_of(space.states.begin(), space.states.end(), is_set);
    r.add("single execution", single);
    std::string post, pre;
    for (const auto& s : un.places()) {
        auto check = [&](const std::set<TransId>& ts, std::string& witness) {
            for (auto i = ts.begin(); i != ts.end(); ++i)
                for (auto j = std::next(i); j != ts.end(); ++j)
                    if (!contains(conflict, *i, *j) && witness.empty())
                        witness = *i + " and " + *j + " share '" + s + "' without conflict";
        };
        check(un.producers(s), post);
        check(un.consumers(s), pre);
    }
    r.add("shared postset implies conflict", post.empty(), post);
    r.add("shared preset implies conflict", pre.empty(), pre);
    return r;
}

std::set<EventSet> un_causes(const ContextualNet& un, const TransId& t)
{
    std::vector<PlaceId> produced;
    for (const auto& s : un.transition(t).pre)
        if (!un.producers(s).empty()) produced.push_back(s);
    std::set<EventSet> out;
    if (produced.empty()) {
        out.insert(EventSet{});
        return out;
    }
    EventSet pick;
    std::function<void(std::size_t)> choose = [&](std::size_t i) {
        if (i == produced.size()) {
            for (const auto& s : produced)
                if (set_intersection(un.producers(s), pick).size() != 1) return;
            out.insert(pick);
            return;
        }
        for (const auto& u : un.producers(produced[i])) {
            const bool fresh = pick.insert(u).second;
            choose(i + 1);
            if (fresh) pick.erase(u);
        }
    };
    choose(0);
    return out;
}

Bes un_to_bes(const ContextualNet& un, const Bounds& bounds)
{
    auto v = validate_un(un, bounds);
    if (!v.view) throw Error(ErrorCode::invalid_model, "not an unravel net: " + v.report.first_failure());
    EventSet events;
    std::set<Bundle> bundles;
    for (const auto& [id, t] : un.transitions()) {
        events.insert(id);
        for (const auto& s : t.pre)
            if (!un.producers(s).empty()) bundles.insert({un.producers(s), id});
    }
    return Bes(std::move(events), std::move(bundles), v.view->conflict);
}

ContextualNet bes_to_un(const Bes& bes)
{
    namespace pn = place_names;
    const auto confs = es_configurations(bes);
    EventSet live;
    for (const auto& [c, w] : confs.witnesses) live.insert(c.begin(), c.end());
    for (const auto& e : bes.events())
        if (!live.count(e)) throw Error(ErrorCode::unfirable_event, "event '" + e + "' occurs in no configuration");

    std::set<PlaceId> places;
    std::map<TransId, Transition> ts;
    Marking m;
    for (const auto& e : bes.events()) {
        places.insert(pn::input(e));
        places.insert(pn::output(e));
        m[pn::input(e)] = 1;
        ts[e] = {e, e, {pn::input(e)}, {pn::output(e)}, {}, {}};
    }
    for (const auto& [a, b] : bes.conflict()) {
        auto s = pn::conflict(a, b);
        places.insert(s);
        m[s] = 1;
        ts[a].pre.insert(s);
        ts[b].pre.insert(s);
    }
    std::map<Label, std::size_t> counter;
    for (const auto& b : bes.bundles()) {
        auto s = pn::bundle(counter[b.event]++, b.event);
        places.insert(s);
        ts[b.event].pre.insert(s);
        for (const auto& y : b.set) ts[y].post.insert(s);
    }
    std::vector<Transition> list;
    for (auto& [id, t] : ts) list.push_back(std::move(t));
    return ContextualNet(std::move(places), std::move(list), std::move(m));
}

}  // namespace causalnet
