#include "causalnet/net.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace causalnet {

namespace {

const std::set<TransId> no_transitions;

void check_declared(const std::set<PlaceId>& places, const Transition& t,
                    const std::set<PlaceId>& arcs, std::string_view kind)
{
    for (const auto& s : arcs)
        if (!places.count(s))
            throw Error(ErrorCode::invalid_model,
                        "transition '" + t.id + "' " + std::string(kind) + " arc to undeclared place '" + s + "'");
}

}  // namespace

ContextualNet::ContextualNet(std::set<PlaceId> places, std::vector<Transition> transitions, Marking initial)
    : places_(std::move(places))
{
    for (auto& t : transitions) {
        if (t.id.empty()) throw Error(ErrorCode::invalid_model, "transition with empty id");
        if (places_.count(t.id))
            throw Error(ErrorCode::invalid_model, "'" + t.id + "' is both a place and a transition");
        if (t.pre.empty())
            throw Error(ErrorCode::invalid_model, "transition '" + t.id + "' has an empty preset");
        check_declared(places_, t, t.pre, "pre");
        check_declared(places_, t, t.post, "post");
        check_declared(places_, t, t.inhibit, "inhibitor");
        check_declared(places_, t, t.read, "read");
        for (const auto& s : t.pre) consumers_[s].insert(t.id);
        for (const auto& s : t.post) producers_[s].insert(t.id);
        const TransId id = t.id;
        if (!transitions_.emplace(id, std::move(t)).second)
            throw Error(ErrorCode::invalid_model, "duplicate transition '" + id + "'");
    }
    for (const auto& [s, n] : initial) {
        if (!places_.count(s)) throw Error(ErrorCode::invalid_model, "marking of undeclared place '" + s + "'");
        if (n > 0) initial_[s] = n;
    }
}

const Transition& ContextualNet::transition(const TransId& t) const
{
    auto it = transitions_.find(t);
    if (it == transitions_.end()) throw Error(ErrorCode::unknown_id, "unknown transition '" + t + "'");
    return it->second;
}

const std::set<TransId>& ContextualNet::producers(const PlaceId& s) const
{
    auto it = producers_.find(s);
    return it == producers_.end() ? no_transitions : it->second;
}

const std::set<TransId>& ContextualNet::consumers(const PlaceId& s) const
{
    auto it = consumers_.find(s);
    return it == consumers_.end() ? no_transitions : it->second;
}

std::set<Label> ContextualNet::labels() const
{
    std::set<Label> out;
    for (const auto& [id, t] : transitions_) out.insert(t.label);
    return out;
}

std::set<TransId> ContextualNet::with_label(const Label& a) const
{
    std::set<TransId> out;
    for (const auto& [id, t] : transitions_)
        if (t.label == a) out.insert(id);
    return out;
}

bool ContextualNet::has_contextual_arcs() const
{
    return std::any_of(transitions_.begin(), transitions_.end(),
                       [](const auto& kv) { return !kv.second.inhibit.empty() || !kv.second.read.empty(); });
}

namespace {

unsigned count(const Marking& m, const PlaceId& s)
{
    auto it = m.find(s);
    return it == m.end() ? 0 : it->second;
}

std::string why_disabled(const Transition& t, const Marking& m)
{
    for (const auto& s : t.pre)
        if (count(m, s) == 0) return "preset place '" + s + "' is empty";
    for (const auto& s : t.read)
        if (count(m, s) == 0 && !t.pre.count(s)) return "read place '" + s + "' is empty";
    // •t + ^t as a multiset: a place both consumed and read needs two tokens
    for (const auto& s : t.read)
        if (t.pre.count(s) && count(m, s) < 2) return "place '" + s + "' needs two tokens";
    for (const auto& s : t.inhibit)
        if (count(m, s) > 0) return "inhibitor place '" + s + "' is marked";
    return {};
}

}  // namespace

bool enabled(const ContextualNet& net, const Marking& m, const TransId& t)
{
    return why_disabled(net.transition(t), m).empty();
}

Marking fire(const ContextualNet& net, const Marking& m, const TransId& t)
{
    const Transition& tr = net.transition(t);
    if (auto why = why_disabled(tr, m); !why.empty())
        throw Error(ErrorCode::not_enabled, "transition '" + t + "' not enabled: " + why);
    Marking out = m;
    for (const auto& s : tr.pre)
        if (--out[s] == 0) out.erase(s);
    for (const auto& s : tr.post) ++out[s];
    return out;
}

State FiringSequence::state() const
{
    State x;
    for (const auto& step : steps) ++x[step.transition];
    return x;
}

namespace {

bool multiset_leq(const Multiset& a, const Multiset& b)
{
    for (const auto& [k, n] : a) {
        auto it = b.find(k);
        if (it == b.end() || it->second < n) return false;
    }
    return true;
}

}  // namespace

std::set<State> Behaviour::maximal_states() const
{
    std::set<State> out;
    for (const auto& x : states) {
        bool maximal = true;
        for (const auto& y : states)
            if (y != x && multiset_leq(x, y)) {
                maximal = false;
                break;
            }
        if (maximal) out.insert(x);
    }
    return out;
}

namespace {

// Index-based view of a net used by the enumerators.
struct Compiled {
    struct Trans {
        std::vector<std::size_t> pre, post, inhibit, read;
        std::vector<std::size_t> read_and_pre;  // places needing two tokens
    };
    std::vector<PlaceId> places;
    std::vector<TransId> transitions;
    std::vector<Trans> trans;
    std::vector<std::uint32_t> initial;

    explicit Compiled(const ContextualNet& net)
    {
        std::map<PlaceId, std::size_t> index;
        for (const auto& s : net.places()) {
            index[s] = places.size();
            places.push_back(s);
        }
        auto idx = [&](const std::set<PlaceId>& ps) {
            std::vector<std::size_t> out;
            for (const auto& s : ps) out.push_back(index.at(s));
            return out;
        };
        for (const auto& [id, t] : net.transitions()) {
            transitions.push_back(id);
            Trans c{idx(t.pre), idx(t.post), idx(t.inhibit), idx(t.read), {}};
            for (const auto& s : t.read)
                if (t.pre.count(s)) c.read_and_pre.push_back(index.at(s));
            trans.push_back(std::move(c));
        }
        initial.assign(places.size(), 0);
        for (const auto& [s, n] : net.initial()) initial[index.at(s)] = n;
    }

    bool enabled(const std::vector<std::uint32_t>& m, std::size_t t) const
    {
        const Trans& c = trans[t];
        for (auto s : c.pre)
            if (m[s] == 0) return false;
        for (auto s : c.read)
            if (m[s] == 0) return false;
        for (auto s : c.read_and_pre)
            if (m[s] < 2) return false;
        for (auto s : c.inhibit)
            if (m[s] > 0) return false;
        return true;
    }

    void fire(std::vector<std::uint32_t>& m, std::size_t t) const
    {
        for (auto s : trans[t].pre) --m[s];
        for (auto s : trans[t].post) ++m[s];
    }

    Marking marking(const std::vector<std::uint32_t>& m) const
    {
        Marking out;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) out[places[i]] = m[i];
        return out;
    }

    State state(const std::vector<std::uint32_t>& x) const
    {
        State out;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i]) out[transitions[i]] = x[i];
        return out;
    }
};

}  // namespace

Behaviour behaviour(const ContextualNet& net, const Bounds& bounds)
{
    const Compiled c(net);
    struct Node {
        std::size_t parent;
        std::size_t transition;
        std::size_t depth;
        std::vector<std::uint32_t> marking;
    };
    std::vector<Node> nodes;
    nodes.push_back({0, 0, 0, c.initial});
    Behaviour out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t t = 0; t < c.trans.size(); ++t) {
            if (!c.enabled(nodes[i].marking, t)) continue;
            if (nodes[i].depth >= bounds.max_depth || nodes.size() >= bounds.max_sequences) {
                out.complete = false;
                break;
            }
            auto m = nodes[i].marking;
            c.fire(m, t);
            nodes.push_back({i, t, nodes[i].depth + 1, std::move(m)});
        }
    }
    out.firing_sequences.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::vector<std::size_t> path;
        for (std::size_t j = i; j != 0; j = nodes[j].parent) path.push_back(j);
        std::reverse(path.begin(), path.end());
        FiringSequence seq{c.marking(c.initial), {}};
        Trace trace;
        State x;
        Configuration cfg;
        for (auto j : path) {
            const TransId& t = c.transitions[nodes[j].transition];
            seq.steps.push_back({t, c.marking(nodes[j].marking)});
            trace.push_back(net.label(t));
            ++x[t];
            ++cfg[net.label(t)];
        }
        out.reachable_markings.insert(seq.lead());
        out.states.insert(std::move(x));
        out.configurations.insert(std::move(cfg));
        out.traces.insert(std::move(trace));
        out.firing_sequences.push_back(std::move(seq));
    }
    return out;
}

StateSpace explore(const ContextualNet& net, const Bounds& bounds)
{
    const Compiled c(net);
    using Key = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
    std::set<Key> seen;
    std::deque<std::pair<Key, std::size_t>> queue;
    Key start{c.initial, std::vector<std::uint32_t>(c.trans.size(), 0)};
    seen.insert(start);
    queue.emplace_back(start, 0);
    StateSpace out;
    while (!queue.empty()) {
        auto [key, depth] = std::move(queue.front());
        queue.pop_front();
        out.states.insert(c.state(key.second));
        out.reachable_markings.insert(c.marking(key.first));
        for (std::size_t t = 0; t < c.trans.size(); ++t) {
            if (!c.enabled(key.first, t)) continue;
            if (depth >= bounds.max_depth) {
                out.complete = false;
                continue;
            }
            Key next = key;
            c.fire(next.first, t);
            ++next.second[t];
            if (seen.count(next)) continue;
            if (seen.size() >= bounds.max_sequences) {
                out.complete = false;
                continue;
            }
            seen.insert(next);
            queue.emplace_back(std::move(next), depth + 1);
        }
    }
    return out;
}

StateSpace explore_complete(const ContextualNet& net, const Bounds& bounds)
{
    StateSpace s = explore(net, bounds);
    if (!s.complete)
        throw Error(ErrorCode::bound_exceeded,
                    "enumeration exceeded depth " + std::to_string(bounds.max_depth) + " or " +
                        std::to_string(bounds.max_sequences) + " explored nodes");
    return s;
}

Configuration configuration_of(const ContextualNet& net, const State& x)
{
    Configuration cfg;
    for (const auto& [t, n] : x) cfg[net.label(t)] += n;
    return cfg;
}

Family configuration_sets(const ContextualNet& net, const Bounds& bounds)
{
    Family out;
    for (const auto& x : explore_complete(net, bounds).states) {
        Configuration cfg = configuration_of(net, x);
        if (!is_set(cfg))
            throw Error(ErrorCode::invalid_model, "configuration " + show(cfg) + " repeats a label");
        out.insert(support(cfg));
    }
    return out;
}

PairSet semantic_conflict(const ContextualNet& net, const StateSpace& space)
{
    std::set<Pair> together;
    for (const auto& x : space.states) {
        EventSet s = support(x);
        for (auto i = s.begin(); i != s.end(); ++i)
            for (auto j = std::next(i); j != s.end(); ++j) together.insert({*i, *j});
    }
    PairSet out;
    const auto& ts = net.transitions();
    for (auto i = ts.begin(); i != ts.end(); ++i)
        for (auto j = std::next(i); j != ts.end(); ++j)
            if (!together.count({i->first, j->first})) out.insert({i->first, j->first});
    return out;
}

PairSet semantic_conflict(const ContextualNet& net, const Bounds& bounds)
{
    return semantic_conflict(net, explore_complete(net, bounds));
}

NetClass classify(const ContextualNet& net, const Bounds& bounds)
{
    const StateSpace space = explore_complete(net, bounds);
    NetClass c;
    c.safe = std::all_of(space.reachable_markings.begin(), space.reachable_markings.end(), is_set);
    c.single_execution = std::all_of(space.states.begin(), space.states.end(), is_set);
    c.unfolding = std::all_of(space.states.begin(), space.states.end(),
                              [&](const State& x) { return is_set(configuration_of(net, x)); });
    c.conflict_saturated = true;
    for (const auto& [t, u] : semantic_conflict(net, space))
        if (set_intersection(net.transition(t).pre, net.transition(u).pre).empty()) {
            c.conflict_saturated = false;
            break;
        }
    return c;
}

ContextualNet saturate_conflicts(const ContextualNet& net, const Bounds& bounds)
{
    const StateSpace space = explore_complete(net, bounds);
    for (const auto& x : space.states)
        if (!is_set(x))
            throw Error(ErrorCode::not_single_execution, "state " + show(x) + " fires a transition twice");
    std::set<PlaceId> places = net.places();
    std::map<TransId, Transition> trans = net.transitions();
    Marking m = net.initial();
    for (const auto& [t, u] : semantic_conflict(net, space)) {
        PlaceId s = "sat:" + t + ":" + u;
        while (places.count(s) || trans.count(s)) s += "'";
        places.insert(s);
        m[s] = 1;
        trans[t].pre.insert(s);
        trans[u].pre.insert(s);
    }
    std::vector<Transition> ts;
    for (auto& [id, t] : trans) ts.push_back(std::move(t));
    return ContextualNet(std::move(places), std::move(ts), std::move(m));
}

ContextualNet subnet(const ContextualNet& net, const std::set<TransId>& keep)
{
    std::set<PlaceId> places;
    std::vector<Transition> ts;
    for (const auto& t : keep) {
        const Transition& tr = net.transition(t);
        places.insert(tr.pre.begin(), tr.pre.end());
        places.insert(tr.post.begin(), tr.post.end());
    }
    auto restrict = [&](const std::set<PlaceId>& ps) { return set_intersection(ps, places); };
    for (const auto& t : keep) {
        const Transition& tr = net.transition(t);
        ts.push_back({tr.id, tr.label, tr.pre, tr.post, restrict(tr.inhibit), restrict(tr.read)});
    }
    Marking m;
    for (const auto& [s, n] : net.initial())
        if (places.count(s)) m[s] = n;
    return ContextualNet(std::move(places), std::move(ts), std::move(m));
}

EquivResult net_equiv(const ContextualNet& a, const ContextualNet& b, const Bounds& bounds)
{
    std::set<TransId> ta, tb;
    for (const auto& [id, t] : a.transitions()) ta.insert(id);
    for (const auto& [id, t] : b.transitions()) tb.insert(id);
    if (ta != tb) return {false, "transition sets differ: " + show(ta) + " vs " + show(tb)};
    for (const auto& t : ta)
        if (a.label(t) != b.label(t)) return {false, "label of '" + t + "' differs"};
    const auto sa = explore_complete(a, bounds).states;
    const auto sb = explore_complete(b, bounds).states;
    for (const auto& x : sa)
        if (!sb.count(x)) return {false, "state " + show(x) + " only in first net"};
    for (const auto& x : sb)
        if (!sa.count(x)) return {false, "state " + show(x) + " only in second net"};
    return {true, {}};
}

bool isomorphic(const ContextualNet& a, const ContextualNet& b)
{
    if (a.places().size() != b.places().size() || a.transitions().size() != b.transitions().size())
        return false;
    std::map<Label, std::vector<TransId>> ga, gb;
    for (const auto& [id, t] : a.transitions()) ga[t.label].push_back(id);
    for (const auto& [id, t] : b.transitions()) gb[t.label].push_back(id);
    if (ga.size() != gb.size()) return false;
    for (const auto& [l, v] : ga)
        if (!gb.count(l) || gb[l].size() != v.size()) return false;

    // A place is described by its marking and its arcs, with transitions renamed into b.
    using Signature = std::pair<unsigned, std::set<std::pair<TransId, int>>>;
    auto signatures = [](const ContextualNet& n, const std::map<TransId, TransId>& rename) {
        std::map<PlaceId, Signature> sig;
        for (const auto& s : n.places()) sig[s].first = n.initial().count(s) ? n.initial().at(s) : 0;
        for (const auto& [id, t] : n.transitions()) {
            const TransId& r = rename.at(id);
            for (const auto& s : t.pre) sig[s].second.insert({r, 0});
            for (const auto& s : t.post) sig[s].second.insert({r, 1});
            for (const auto& s : t.inhibit) sig[s].second.insert({r, 2});
            for (const auto& s : t.read) sig[s].second.insert({r, 3});
        }
        std::multiset<Signature> out;
        for (auto& [s, g] : sig) out.insert(std::move(g));
        return out;
    };
    std::map<TransId, TransId> identity;
    for (const auto& [id, t] : b.transitions()) identity[id] = id;
    const auto target = signatures(b, identity);

    std::vector<Label> labels;
    for (const auto& [l, v] : ga) labels.push_back(l);
    std::map<TransId, TransId> rename;
    std::function<bool(std::size_t)> search = [&](std::size_t li) -> bool {
        if (li == labels.size()) return signatures(a, rename) == target;
        auto targets = gb[labels[li]];
        std::sort(targets.begin(), targets.end());
        do {
            for (std::size_t k = 0; k < targets.size(); ++k) rename[ga[labels[li]][k]] = targets[k];
            if (search(li + 1)) return true;
        } while (std::next_permutation(targets.begin(), targets.end()));
        return false;
    };
    return search(0);
}

}  // namespace causalnet
