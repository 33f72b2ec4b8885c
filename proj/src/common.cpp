#include "causalnet/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace causalnet {

Pair unordered(const std::string& a, const std::string& b)
{
    return a < b ? Pair{a, b} : Pair{b, a};
}

bool contains(const PairSet& pairs, const std::string& a, const std::string& b)
{
    return pairs.count(unordered(a, b)) > 0;
}

EventSet support(const Multiset& m)
{
    EventSet out;
    for (const auto& [k, n] : m)
        if (n > 0) out.insert(k);
    return out;
}

bool is_set(const Multiset& m)
{
    return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second <= 1; });
}

Multiset as_multiset(const EventSet& s)
{
    Multiset m;
    for (const auto& x : s) m[x] = 1;
    return m;
}

bool subset_of(const EventSet& small, const EventSet& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

EventSet set_union(const EventSet& a, const EventSet& b)
{
    EventSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

EventSet set_intersection(const EventSet& a, const EventSet& b)
{
    EventSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

EventSet set_difference(const EventSet& a, const EventSet& b)
{
    EventSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

Relation transitive_closure(const Relation& r)
{
    Relation closed = r;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Arrow> fresh;
        for (const auto& [a, b] : closed) {
            auto it = closed.lower_bound({b, std::string{}});
            for (; it != closed.end() && it->first == b; ++it)
                if (!closed.count({a, it->second})) fresh.emplace_back(a, it->second);
        }
        for (auto& f : fresh) grew |= closed.insert(std::move(f)).second;
    }
    return closed;
}

std::string join(const EventSet& s, std::string_view sep)
{
    std::string out;
    for (const auto& x : s) {
        if (!out.empty()) out += sep;
        out += x;
    }
    return out;
}

std::string show(const EventSet& s)
{
    return "{" + join(s) + "}";
}

std::string show(const Multiset& m)
{
    std::string out;
    for (const auto& [k, n] : m)
        for (unsigned i = 0; i < n; ++i) {
            if (!out.empty()) out += ",";
            out += k;
        }
    return "{" + out + "}";
}

std::string show(const Trace& t)
{
    std::string out;
    for (const auto& x : t) {
        if (!out.empty()) out += " ";
        out += x;
    }
    return "<" + out + ">";
}

Bounds Bounds::from_env()
{
    Bounds b;
    const char* raw = std::getenv("CAUSALNET_BOUNDS");
    if (!raw) return b;
    std::istringstream in(raw);
    std::size_t depth = 0, seqs = 0;
    char comma = 0;
    if (in >> depth >> comma >> seqs && comma == ',' && depth > 0 && seqs > 0) {
        b.max_depth = depth;
        b.max_sequences = seqs;
    }
    return b;
}

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::invalid_model: return "InvalidModel";
    case ErrorCode::unknown_id: return "UnknownId";
    case ErrorCode::not_enabled: return "NotEnabled";
    case ErrorCode::bound_exceeded: return "BoundExceeded";
    case ErrorCode::not_single_execution: return "NotSingleExecution";
    case ErrorCode::property_violation: return "PropertyViolation";
    case ErrorCode::not_occurrence_causal: return "NotOccurrenceCausal";
    case ErrorCode::not_plainly_caused: return "NotPlainlyCaused";
    case ErrorCode::not_well_behaved: return "NotWellBehaved";
    case ErrorCode::not_elementary: return "NotElementary";
    case ErrorCode::unfirable_event: return "UnfirableEvent";
    case ErrorCode::retries_exhausted: return "RetriesExhausted";
    }
    return "Error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code)
{
}

bool ModelReport::valid() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* ModelReport::find(std::string_view name) const
{
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool ModelReport::passed(std::string_view name) const
{
    const Check* c = find(name);
    return c && c->passed;
}

void ModelReport::add(std::string name, bool passed, std::string witness)
{
    checks.push_back({std::move(name), passed, std::move(witness)});
}

std::string ModelReport::first_failure() const
{
    for (const auto& c : checks)
        if (!c.passed) return c.witness.empty() ? c.name : c.name + ": " + c.witness;
    return {};
}

}  // namespace causalnet
