#include "causalnet/oracle.hpp"

#include <algorithm>
#include <functional>

namespace causalnet::oracle {

namespace {

void guard(std::size_t& visited)
{
    if (++visited > visit_limit)
        throw Error(ErrorCode::bound_exceeded, "oracle visited more than " + std::to_string(visit_limit) + " sequences");
}

unsigned tokens(const Marking& m, const PlaceId& s)
{
    auto it = m.find(s);
    return it == m.end() ? 0 : it->second;
}

// Written out from the firing rule rather than reusing net_core.
bool may_fire(const Transition& t, const Marking& m)
{
    Marking need;
    for (const auto& s : t.pre) ++need[s];
    for (const auto& s : t.read) ++need[s];
    for (const auto& [s, n] : need)
        if (tokens(m, s) < n) return false;
    for (const auto& s : t.inhibit)
        if (tokens(m, s) != 0) return false;
    return true;
}

}  // namespace

std::set<Configuration> net_configurations(const ContextualNet& net)
{
    std::set<Configuration> out;
    std::size_t visited = 0;
    Configuration cfg;
    std::function<void(const Marking&, std::size_t)> dfs = [&](const Marking& m, std::size_t depth) {
        guard(visited);
        out.insert(cfg);
        if (depth > net.transitions().size() * 4 + 8)
            throw Error(ErrorCode::bound_exceeded, "oracle sequence too long; net may be unbounded");
        for (const auto& [id, t] : net.transitions()) {
            if (!may_fire(t, m)) continue;
            Marking next = m;
            for (const auto& s : t.pre) next[s] -= 1;
            for (const auto& s : t.post) next[s] += 1;
            ++cfg[t.label];
            dfs(next, depth + 1);
            if (--cfg[t.label] == 0) cfg.erase(t.label);
        }
    };
    dfs(net.initial(), 0);
    return out;
}

Family configs(const ContextualNet& net)
{
    Family out;
    for (const auto& c : net_configurations(net)) {
        EventSet s;
        for (const auto& [l, n] : c) {
            if (n > 1) throw Error(ErrorCode::invalid_model, "label '" + l + "' occurs twice in a configuration");
            s.insert(l);
        }
        out.insert(std::move(s));
    }
    return out;
}

Family configs(const Pes& pes)
{
    const std::vector<Label> ev(pes.events().begin(), pes.events().end());
    if (ev.size() > 20) throw Error(ErrorCode::bound_exceeded, "too many events for subset enumeration");
    Family out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << ev.size()); ++mask) {
        EventSet x;
        for (std::size_t i = 0; i < ev.size(); ++i)
            if (mask >> i & 1) x.insert(ev[i]);
        bool ok = true;
        for (const auto& a : x)
            for (const auto& b : x)
                if (a != b && pes.in_conflict(a, b)) ok = false;
        for (const auto& [a, b] : pes.causality())
            if (x.count(b) && !x.count(a)) ok = false;
        if (ok) out.insert(std::move(x));
    }
    return out;
}

namespace {

using Step = std::function<bool(const EventSet& done, const Label& e)>;

Family sequences(const EventSet& events, const PairSet& conflict, const Step& allowed)
{
    Family out;
    std::size_t visited = 0;
    EventSet done;
    std::function<void()> dfs = [&] {
        guard(visited);
        out.insert(done);
        for (const auto& e : events) {
            if (done.count(e)) continue;
            bool clash = false;
            for (const auto& d : done)
                if (conflict.count({std::min(d, e), std::max(d, e)})) clash = true;
            if (clash || !allowed(done, e)) continue;
            done.insert(e);
            dfs();
            done.erase(e);
        }
    };
    dfs();
    return out;
}

}  // namespace

Family configs(const Bes& bes)
{
    return sequences(bes.events(), bes.conflict(), [&](const EventSet& done, const Label& e) {
        for (const auto& b : bes.bundles()) {
            if (b.event != e) continue;
            bool hit = false;
            for (const auto& x : b.set) hit = hit || done.count(x);
            if (!hit) return false;
        }
        return true;
    });
}

Family configs(const Cdes& cdes)
{
    return sequences(cdes.events(), cdes.conflict(), [&](const EventSet& done, const Label& e) {
        for (const auto& z : cdes.entries(e)) {
            EventSet context;
            for (const auto& p : z) context.insert(p.first.begin(), p.first.end());
            EventSet seen;
            for (const auto& x : context)
                if (done.count(x)) seen.insert(x);
            bool some = false;
            for (const auto& [x, y] : z) {
                bool deps = true;
                for (const auto& d : y) deps = deps && done.count(d);
                some = some || (x == seen && deps);
            }
            if (!some) return false;
        }
        return true;
    });
}

ConfigDiff config_sets_equal(const Family& a, const Family& b)
{
    for (const auto& x : a)
        if (!b.count(x)) return {false, x, true};
    for (const auto& x : b)
        if (!a.count(x)) return {false, x, false};
    return {};
}

}  // namespace causalnet::oracle
