#include "causalnet/es.hpp"

#include <algorithm>
#include <functional>

namespace causalnet {

namespace {

void require_event(const EventSet& events, const Label& e, std::string_view where)
{
    if (!events.count(e))
        throw Error(ErrorCode::invalid_model, "undeclared event '" + e + "' in " + std::string(where));
}

PairSet normalized(const PairSet& conflict, const EventSet& events)
{
    PairSet out;
    for (const auto& [a, b] : conflict) {
        require_event(events, a, "conflict");
        require_event(events, b, "conflict");
        out.insert(unordered(a, b));
    }
    return out;
}

}  // namespace

Pes::Pes(EventSet events, Relation causality, PairSet conflict) : events_(std::move(events))
{
    for (const auto& [a, b] : causality) {
        require_event(events_, a, "causality");
        require_event(events_, b, "causality");
    }
    causality_ = transitive_closure(causality);
    conflict_ = normalized(conflict, events_);
}

EventSet Pes::causes(const Label& e) const
{
    EventSet out;
    for (const auto& [a, b] : causality_)
        if (b == e) out.insert(a);
    return out;
}

Bes::Bes(EventSet events, std::set<Bundle> bundles, PairSet conflict)
    : events_(std::move(events)), bundles_(std::move(bundles))
{
    for (const auto& b : bundles_) {
        require_event(events_, b.event, "bundle");
        for (const auto& x : b.set) require_event(events_, x, "bundle of '" + b.event + "'");
    }
    conflict_ = normalized(conflict, events_);
}

std::vector<EventSet> Bes::bundles_of(const Label& e) const
{
    std::vector<EventSet> out;
    for (const auto& b : bundles_)
        if (b.event == e) out.push_back(b.set);
    return out;
}

Cdes::Cdes(EventSet events, PairSet conflict, std::map<Label, std::vector<Entry>> entries)
    : events_(std::move(events))
{
    conflict_ = normalized(conflict, events_);
    for (auto& [e, zs] : entries) {
        require_event(events_, e, "entries");
        for (const auto& z : zs)
            for (const auto& [x, y] : z) {
                for (const auto& v : x) require_event(events_, v, "context of '" + e + "'");
                for (const auto& v : y) require_event(events_, v, "dependencies of '" + e + "'");
            }
        std::sort(zs.begin(), zs.end());
        zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
        if (!zs.empty()) entries_[e] = std::move(zs);
    }
}

const std::vector<Entry>& Cdes::entries(const Label& e) const
{
    static const std::vector<Entry> none;
    auto it = entries_.find(e);
    return it == entries_.end() ? none : it->second;
}

EventSet cxt(const Entry& z)
{
    EventSet out;
    for (const auto& [x, y] : z) out.insert(x.begin(), x.end());
    return out;
}

bool conflict_free(const PairSet& conflict, const EventSet& s)
{
    for (const auto& [a, b] : conflict)
        if (s.count(a) && s.count(b)) return false;
    return true;
}

namespace {

std::string first_pair_in_conflict(const PairSet& conflict, const EventSet& s)
{
    for (const auto& [a, b] : conflict)
        if (s.count(a) && s.count(b)) return a + "#" + b;
    return {};
}

std::string reflexive_conflict(const PairSet& conflict)
{
    for (const auto& [a, b] : conflict)
        if (a == b) return a + "#" + a;
    return {};
}

}  // namespace

ModelReport validate_es(const Pes& pes)
{
    ModelReport r{"pes", {}};
    std::string cyc;
    for (const auto& [a, b] : pes.causality())
        if (a == b) cyc = a + "<" + a;
    r.add("causality irreflexive", cyc.empty(), cyc);
    auto refl = reflexive_conflict(pes.conflict());
    r.add("conflict irreflexive", refl.empty(), refl);
    std::string hered;
    for (const auto& [a, b] : pes.conflict()) {
        for (const auto& [x, y] : pes.causality()) {
            if (!hered.empty()) break;
            if ((x == b && !pes.in_conflict(a, y)) || (x == a && !pes.in_conflict(b, y)))
                hered = a + "#" + b + " but not inherited by " + y;
        }
    }
    r.add("conflict hereditary", hered.empty(), hered);
    r.add("finite causes", true);
    return r;
}

ModelReport validate_es(const Bes& bes)
{
    ModelReport r{"bes", {}};
    auto refl = reflexive_conflict(bes.conflict());
    r.add("conflict irreflexive", refl.empty(), refl);
    std::string empty, self, clique;
    for (const auto& b : bes.bundles()) {
        if (b.set.empty() && empty.empty()) empty = "empty bundle for '" + b.event + "'";
        if (b.set.count(b.event) && self.empty()) self = "'" + b.event + "' in its own bundle";
        for (auto i = b.set.begin(); i != b.set.end() && clique.empty(); ++i)
            for (auto j = std::next(i); j != b.set.end(); ++j)
                if (!bes.in_conflict(*i, *j)) {
                    clique = *i + " and " + *j + " share a bundle of '" + b.event + "' without conflict";
                    break;
                }
    }
    r.add("bundles nonempty", empty.empty(), empty);
    r.add("event outside own bundles", self.empty(), self);
    r.add("bundle members pairwise in conflict", clique.empty(), clique);
    return r;
}

ModelReport validate_es(const Cdes& cdes)
{
    ModelReport r{"cdes", {}};
    auto refl = reflexive_conflict(cdes.conflict());
    r.add("conflict irreflexive", refl.empty(), refl);
    std::string empty, xs, ys, fun;
    for (const auto& [e, zs] : cdes.all_entries())
        for (const auto& z : zs) {
            if (z.empty() && empty.empty()) empty = "empty entry for '" + e + "'";
            std::set<EventSet> seen;
            for (const auto& [x, y] : z) {
                if (xs.empty()) {
                    auto w = first_pair_in_conflict(cdes.conflict(), x);
                    if (!w.empty()) xs = "context " + show(x) + " of '" + e + "' has " + w;
                }
                if (ys.empty()) {
                    auto w = first_pair_in_conflict(cdes.conflict(), y);
                    if (!w.empty()) ys = "dependencies " + show(y) + " of '" + e + "' have " + w;
                }
                if (!seen.insert(x).second && fun.empty())
                    fun = "context " + show(x) + " of '" + e + "' has two dependency sets";
            }
        }
    r.add("entries nonempty", empty.empty(), empty);
    r.add("contexts conflict-free", xs.empty(), xs);
    r.add("dependencies conflict-free", ys.empty(), ys);
    r.add("entries functional", fun.empty(), fun);
    return r;
}

bool cdes_enabled(const Cdes& cdes, const EventSet& c, const Label& e)
{
    if (!cdes.events().count(e)) throw Error(ErrorCode::unknown_id, "unknown event '" + e + "'");
    if (c.count(e)) return false;
    for (const auto& z : cdes.entries(e)) {
        const EventSet seen = set_intersection(cxt(z), c);
        const bool ok = std::any_of(z.begin(), z.end(), [&](const ContextPair& p) {
            return p.first == seen && subset_of(p.second, c);
        });
        if (!ok) return false;
    }
    return true;
}

Family EsConfigSet::family() const
{
    Family out;
    for (const auto& [c, w] : witnesses) out.insert(c);
    return out;
}

namespace {

using Extends = std::function<bool(const EventSet&, const Label&)>;

EsConfigSet grow(const EventSet& events, const PairSet& conflict, std::optional<std::size_t> size_bound,
                 const Extends& extends)
{
    const std::size_t cap = size_bound.value_or(events.size());
    EsConfigSet out;
    out.witnesses[{}] = {};
    std::map<EventSet, Trace> level{{{}, {}}};
    for (std::size_t k = 0; k < cap && !level.empty(); ++k) {
        std::map<EventSet, Trace> next;
        for (const auto& [c, w] : level)
            for (const auto& e : events) {
                if (c.count(e)) continue;
                bool clash = false;
                for (const auto& x : c)
                    if (contains(conflict, x, e)) {
                        clash = true;
                        break;
                    }
                if (clash || !extends(c, e)) continue;
                EventSet c2 = c;
                c2.insert(e);
                Trace w2 = w;
                w2.push_back(e);
                auto it = next.find(c2);
                if (it == next.end())
                    next.emplace(std::move(c2), std::move(w2));
                else if (w2 < it->second)
                    it->second = std::move(w2);
            }
        for (const auto& kv : next) out.witnesses.insert(kv);
        level = std::move(next);
    }
    return out;
}

}  // namespace

EsConfigSet es_configurations(const Pes& pes, std::optional<std::size_t> size_bound)
{
    return grow(pes.events(), pes.conflict(), size_bound,
                [&](const EventSet& c, const Label& e) { return subset_of(pes.causes(e), c); });
}

EsConfigSet es_configurations(const Bes& bes, std::optional<std::size_t> size_bound)
{
    return grow(bes.events(), bes.conflict(), size_bound, [&](const EventSet& c, const Label& e) {
        for (const auto& x : bes.bundles_of(e))
            if (set_intersection(x, c).empty()) return false;
        return true;
    });
}

EsConfigSet es_configurations(const Cdes& cdes, std::optional<std::size_t> size_bound)
{
    return grow(cdes.events(), cdes.conflict(), size_bound,
                [&](const EventSet& c, const Label& e) { return cdes_enabled(cdes, c, e); });
}

bool is_elementary(const Cdes& cdes)
{
    for (const auto& e : cdes.events())
        if (cdes.entries(e).size() != 1) return false;
    return true;
}

Bes pes_as_bes(const Pes& pes)
{
    std::set<Bundle> bundles;
    for (const auto& [a, b] : pes.causality()) bundles.insert({{a}, b});
    return Bes(pes.events(), std::move(bundles), pes.conflict());
}

}  // namespace causalnet
