#include "causalnet/oracle.hpp"

#include <algorithm>
#include <random>

namespace causalnet::oracle {

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p; }
    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

    template <class T>
    const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

private:
    std::mt19937_64 engine_;
};

std::vector<Label> event_names(std::size_t n)
{
    std::vector<Label> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

unsigned capped(unsigned max_events)
{
    return std::clamp(max_events, 1u, 8u);
}

[[noreturn]] void exhausted(std::string_view kind, const GenSpec& spec)
{
    throw Error(ErrorCode::retries_exhausted,
                "no valid " + std::string(kind) + " after " + std::to_string(spec.max_retries) + " attempts");
}

}  // namespace

Pes generate_pes(const GenSpec& spec)
{
    Rng rng(spec.seed);
    for (unsigned attempt = 0; attempt < spec.max_retries; ++attempt) {
        const auto ev = event_names(rng.between(1, capped(spec.max_events)));
        Relation lt;
        for (std::size_t i = 0; i < ev.size(); ++i)
            for (std::size_t j = i + 1; j < ev.size(); ++j)
                if (rng.chance(spec.causality)) lt.insert({ev[i], ev[j]});
        lt = transitive_closure(lt);
        PairSet conflict;
        for (std::size_t i = 0; i < ev.size(); ++i)
            for (std::size_t j = i + 1; j < ev.size(); ++j)
                if (!lt.count({ev[i], ev[j]}) && rng.chance(spec.conflict)) conflict.insert({ev[i], ev[j]});
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& [a, b] : PairSet(conflict))
                for (const auto& [x, y] : lt) {
                    if (x == a) grew |= conflict.insert(unordered(b, y)).second;
                    if (x == b) grew |= conflict.insert(unordered(a, y)).second;
                }
        }
        Pes pes(EventSet(ev.begin(), ev.end()), lt, conflict);
        if (validate_es(pes).valid()) return pes;
    }
    exhausted("pes", spec);
}

namespace {

std::set<EventSet> maximal_cliques(const EventSet& within, const PairSet& conflict)
{
    const std::vector<Label> v(within.begin(), within.end());
    std::vector<EventSet> cliques;
    for (std::size_t mask = 1; mask < (std::size_t{1} << v.size()); ++mask) {
        EventSet y;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (mask >> i & 1) y.insert(v[i]);
        bool ok = true;
        for (const auto& a : y)
            for (const auto& b : y)
                if (a < b && !contains(conflict, a, b)) ok = false;
        if (ok) cliques.push_back(std::move(y));
    }
    std::set<EventSet> out;
    for (const auto& y : cliques)
        if (std::none_of(cliques.begin(), cliques.end(),
                         [&](const EventSet& z) { return z.size() > y.size() && subset_of(y, z); }))
            out.insert(y);
    return out;
}

}  // namespace

// Conflict is saturated to the semantic one and each event's bundles are exactly the maximal
// conflict cliques of their union, which is the shape the causal-net translations reproduce.
Bes generate_bes(const GenSpec& spec)
{
    Rng rng(spec.seed);
    for (unsigned attempt = 0; attempt < spec.max_retries; ++attempt) {
        const auto ev = event_names(rng.between(1, capped(spec.max_events)));
        PairSet conflict;
        for (std::size_t i = 0; i < ev.size(); ++i)
            for (std::size_t j = i + 1; j < ev.size(); ++j)
                if (rng.chance(spec.conflict)) conflict.insert({ev[i], ev[j]});
        std::set<Bundle> bundles;
        for (std::size_t j = 1; j < ev.size(); ++j) {
            const std::vector<Label> earlier(ev.begin(), ev.begin() + static_cast<std::ptrdiff_t>(j));
            const std::size_t count = rng.chance(spec.bundle) ? (rng.chance(0.3) ? 2 : 1) : 0;
            for (std::size_t k = 0; k < count; ++k) {
                EventSet x{rng.pick(earlier)};
                for (const auto& y : earlier) {
                    if (x.count(y) || !rng.chance(0.5)) continue;
                    if (std::all_of(x.begin(), x.end(), [&](const Label& z) { return contains(conflict, y, z); }))
                        x.insert(y);
                }
                bundles.insert({x, ev[j]});
            }
        }
        const EventSet events(ev.begin(), ev.end());
        const Bes raw(events, bundles, conflict);
        if (!validate_es(raw).valid()) continue;
        const Family confs = es_configurations(raw).family();
        EventSet live;
        for (const auto& c : confs) live.insert(c.begin(), c.end());
        if (live != events) continue;
        PairSet saturated;
        for (std::size_t i = 0; i < ev.size(); ++i)
            for (std::size_t j = i + 1; j < ev.size(); ++j)
                if (std::none_of(confs.begin(), confs.end(),
                                 [&](const EventSet& c) { return c.count(ev[i]) && c.count(ev[j]); }))
                    saturated.insert({ev[i], ev[j]});
        bool canonical = true;
        for (const auto& e : events) {
            EventSet ini;
            std::set<EventSet> own;
            for (const auto& b : raw.bundles_of(e)) {
                ini.insert(b.begin(), b.end());
                own.insert(b);
            }
            if (!ini.empty() && maximal_cliques(ini, saturated) != own) canonical = false;
        }
        if (!canonical) continue;
        Bes bes(events, bundles, saturated);
        if (validate_es(bes).valid()) return bes;
    }
    exhausted("bes", spec);
}

EventAutomaton generate_ea(const GenSpec& spec)
{
    Rng rng(spec.seed);
    for (unsigned attempt = 0; attempt < spec.max_retries; ++attempt) {
        const auto ev = event_names(rng.between(1, capped(spec.max_events)));
        const EventSet events(ev.begin(), ev.end());
        PairSet conflict;
        for (std::size_t i = 0; i < ev.size(); ++i)
            for (std::size_t j = i + 1; j < ev.size(); ++j)
                if (rng.chance(spec.conflict * 0.5)) conflict.insert({ev[i], ev[j]});
        std::map<Label, std::vector<Entry>> cd;
        for (const auto& e : ev) {
            const std::size_t entries = rng.chance(0.2) ? 2 : 1;
            for (std::size_t k = 0; k < entries; ++k) {
                Entry z;
                std::set<EventSet> contexts;
                if (rng.chance(0.5)) {
                    z.insert({{}, {}});
                    contexts.insert({});
                }
                const std::size_t pairs = rng.between(1, 3);
                for (std::size_t p = 0; p < pairs; ++p) {
                    EventSet x, y;
                    for (const auto& u : ev) {
                        if (u == e) continue;
                        if (rng.chance(spec.context)) x.insert(u);
                        else if (rng.chance(spec.causality * 0.5)) y.insert(u);
                    }
                    if (!conflict_free(conflict, x) || !conflict_free(conflict, y)) continue;
                    if (!contexts.insert(x).second) continue;
                    z.insert({x, y});
                }
                if (!z.empty()) cd[e].push_back(std::move(z));
            }
        }
        const Cdes raw(events, conflict, cd);
        if (!validate_es(raw).valid()) continue;
        const EventAutomaton full = cdes_to_ea(raw);
        EventSet live;
        for (const auto& s : full.states()) live.insert(s.begin(), s.end());
        if (live.empty()) continue;
        EventAutomaton ea(live, full.states(), full.steps(), full.initial());
        const EaAnalysis a = analyze_ea(ea);
        if (a.simple && a.complete) return ea;
    }
    exhausted("ea", spec);
}

Cdes generate_cdes(const GenSpec& spec)
{
    return ea_to_cdes(generate_ea(spec));
}

namespace {

// Events are added one at a time, consuming existing conditions and producing fresh ones;
// when merge is set an output may reuse a condition produced by an event sharing an input.
ContextualNet grow_net(Rng& rng, std::size_t n, bool merge)
{
    std::set<PlaceId> places;
    Marking m;
    std::vector<PlaceId> available;
    const std::size_t initial = rng.between(1, 3);
    for (std::size_t i = 0; i < initial; ++i) {
        PlaceId s = "c" + std::to_string(places.size());
        places.insert(s);
        m[s] = 1;
        available.push_back(s);
    }
    std::map<PlaceId, std::set<TransId>> consumers;
    std::vector<Transition> ts;
    for (const auto& e : event_names(n)) {
        Transition t{e, e, {}, {}, {}, {}};
        const std::size_t inputs = rng.chance(0.35) ? 2 : 1;
        for (std::size_t k = 0; k < inputs; ++k) t.pre.insert(rng.pick(available));
        const std::size_t outputs = rng.between(1, 2);
        for (std::size_t k = 0; k < outputs; ++k) {
            if (merge && rng.chance(0.4)) {
                std::vector<PlaceId> candidates;
                for (const auto& u : ts)
                    for (const auto& s : t.pre)
                        if (u.pre.count(s))
                            for (const auto& o : u.post) candidates.push_back(o);
                if (!candidates.empty()) {
                    t.post.insert(rng.pick(candidates));
                    continue;
                }
            }
            PlaceId s = "c" + std::to_string(places.size());
            places.insert(s);
            t.post.insert(s);
            available.push_back(s);
        }
        ts.push_back(std::move(t));
    }
    return ContextualNet(std::move(places), std::move(ts), std::move(m));
}

}  // namespace

ContextualNet generate_on(const GenSpec& spec)
{
    Rng rng(spec.seed);
    for (unsigned attempt = 0; attempt < spec.max_retries; ++attempt) {
        ContextualNet net = grow_net(rng, rng.between(1, capped(spec.max_events)), false);
        if (validate_on(net).view) return net;
    }
    exhausted("on", spec);
}

ContextualNet generate_un(const GenSpec& spec)
{
    Rng rng(spec.seed);
    for (unsigned attempt = 0; attempt < spec.max_retries; ++attempt) {
        ContextualNet net = grow_net(rng, rng.between(1, capped(spec.max_events)), true);
        try {
            if (validate_un(net).view) return net;
        } catch (const Error&) {
        }
    }
    exhausted("un", spec);
}

ContextualNet generate_single_execution_net(const GenSpec& spec)
{
    Rng rng(spec.seed);
    const Bounds small{16, 20000};
    for (unsigned attempt = 0; attempt < spec.max_retries; ++attempt) {
        const std::size_t np = rng.between(2, 6);
        const std::size_t nt = rng.between(1, capped(spec.max_events));
        std::vector<PlaceId> ps;
        for (std::size_t i = 0; i < np; ++i) ps.push_back("p" + std::to_string(i));
        Marking m;
        for (const auto& s : ps)
            if (rng.chance(0.5)) m[s] = 1;
        if (m.empty()) m[ps.front()] = 1;
        const std::vector<Label> labels = {"a", "b", "c", "d"};
        std::vector<Transition> ts;
        for (std::size_t i = 0; i < nt; ++i) {
            Transition t{"t" + std::to_string(i), rng.pick(labels), {rng.pick(ps)}, {}, {}, {}};
            if (rng.chance(0.3)) t.pre.insert(rng.pick(ps));
            const std::size_t outputs = rng.below(3);
            for (std::size_t k = 0; k < outputs; ++k) t.post.insert(rng.pick(ps));
            if (rng.chance(spec.context)) t.inhibit.insert(rng.pick(ps));
            if (rng.chance(spec.context)) t.read.insert(rng.pick(ps));
            ts.push_back(std::move(t));
        }
        ContextualNet net(std::set<PlaceId>(ps.begin(), ps.end()), std::move(ts), m);
        const StateSpace space = explore(net, small);
        if (!space.complete) continue;
        if (std::all_of(space.states.begin(), space.states.end(), is_set)) return net;
    }
    exhausted("single-execution net", spec);
}

}  // namespace causalnet::oracle
