#include "causalnet/io.hpp"

#include <fstream>
#include <sstream>

namespace causalnet {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
    throw Error(ErrorCode::parse, field + ": " + what);
}

const json& member(const json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing");
    return *it;
}

const json* optional_member(const json& j, const std::string& key)
{
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

std::string text(const json& j, const std::string& path)
{
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

std::set<std::string> strings(const json& j, const std::string& path)
{
    if (!j.is_array()) fail(path, "expected an array of strings");
    std::set<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.insert(text(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::set<std::string> strings_or_empty(const json& j, const std::string& key, const std::string& path)
{
    const json* m = optional_member(j, key);
    return m ? strings(*m, path + "." + key) : std::set<std::string>{};
}

std::vector<std::pair<std::string, std::string>> pairs(const json& j, const std::string& path)
{
    if (!j.is_array()) fail(path, "expected an array of pairs");
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != 2) fail(p, "expected a pair");
        out.emplace_back(text(j[i][0], p + "[0]"), text(j[i][1], p + "[1]"));
    }
    return out;
}

void check_events(const EventSet& events, const EventSet& used, const std::string& path)
{
    for (const auto& e : used)
        if (!events.count(e)) fail(path, "undeclared event '" + e + "'");
}

ContextualNet parse_net(const json& j)
{
    const auto places = strings(member(j, "places", "$"), "$.places");
    const json& ts = member(j, "transitions", "$");
    if (!ts.is_array()) fail("$.transitions", "expected an array");
    std::vector<Transition> list;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string p = "$.transitions[" + std::to_string(i) + "]";
        Transition t;
        t.id = text(member(ts[i], "id", p), p + ".id");
        const json* label = optional_member(ts[i], "label");
        t.label = label ? text(*label, p + ".label") : t.id;
        t.pre = strings_or_empty(ts[i], "pre", p);
        t.post = strings_or_empty(ts[i], "post", p);
        t.inhibit = strings_or_empty(ts[i], "inhibit", p);
        t.read = strings_or_empty(ts[i], "read", p);
        for (const auto* kind : {"pre", "post", "inhibit", "read"}) {
            const auto arcs = strings_or_empty(ts[i], kind, p);
            for (const auto& s : arcs)
                if (!places.count(s))
                    fail(p + "." + kind, "arc " + (std::string(kind) == "post" ? t.id + " -> " + s : s + " -> " + t.id) +
                                             " names undeclared place '" + s + "'");
        }
        list.push_back(std::move(t));
    }
    Marking m;
    if (const json* mk = optional_member(j, "marking")) {
        if (!mk->is_object()) fail("$.marking", "expected an object");
        for (const auto& [s, n] : mk->items()) {
            if (!n.is_number_unsigned()) fail("$.marking." + s, "expected a non-negative integer");
            if (!places.count(s)) fail("$.marking." + s, "undeclared place");
            m[s] = n.get<unsigned>();
        }
    }
    try {
        return ContextualNet(places, std::move(list), std::move(m));
    } catch (const Error& e) {
        fail("$", e.what());
    }
}

PairSet parse_conflict(const json& j, const EventSet& events)
{
    PairSet out;
    if (const json* c = optional_member(j, "conflict")) {
        for (const auto& [a, b] : pairs(*c, "$.conflict")) {
            check_events(events, {a, b}, "$.conflict");
            out.insert(unordered(a, b));
        }
    }
    return out;
}

Pes parse_pes(const json& j)
{
    const auto events = strings(member(j, "events", "$"), "$.events");
    Relation lt;
    if (const json* l = optional_member(j, "lt"))
        for (const auto& [a, b] : pairs(*l, "$.lt")) {
            check_events(events, {a, b}, "$.lt");
            lt.insert({a, b});
        }
    return Pes(events, lt, parse_conflict(j, events));
}

Bes parse_bes(const json& j)
{
    const auto events = strings(member(j, "events", "$"), "$.events");
    std::set<Bundle> bundles;
    if (const json* bs = optional_member(j, "bundles")) {
        if (!bs->is_array()) fail("$.bundles", "expected an array");
        for (std::size_t i = 0; i < bs->size(); ++i) {
            const std::string p = "$.bundles[" + std::to_string(i) + "]";
            Bundle b{strings(member((*bs)[i], "set", p), p + ".set"), text(member((*bs)[i], "event", p), p + ".event")};
            check_events(events, b.set, p + ".set");
            check_events(events, {b.event}, p + ".event");
            bundles.insert(std::move(b));
        }
    }
    return Bes(events, bundles, parse_conflict(j, events));
}

Cdes parse_cdes(const json& j)
{
    const auto events = strings(member(j, "events", "$"), "$.events");
    std::map<Label, std::vector<Entry>> cd;
    if (const json* list = optional_member(j, "cd")) {
        if (!list->is_array()) fail("$.cd", "expected an array");
        for (std::size_t i = 0; i < list->size(); ++i) {
            const std::string p = "$.cd[" + std::to_string(i) + "]";
            const Label e = text(member((*list)[i], "event", p), p + ".event");
            check_events(events, {e}, p + ".event");
            const json& entries = member((*list)[i], "entries", p);
            if (!entries.is_array()) fail(p + ".entries", "expected an array of entries");
            for (std::size_t k = 0; k < entries.size(); ++k) {
                const std::string q = p + ".entries[" + std::to_string(k) + "]";
                if (!entries[k].is_array()) fail(q, "expected an array of context pairs");
                Entry z;
                for (std::size_t n = 0; n < entries[k].size(); ++n) {
                    const std::string r = q + "[" + std::to_string(n) + "]";
                    EventSet x = strings(member(entries[k][n], "x", r), r + ".x");
                    EventSet y = strings(member(entries[k][n], "y", r), r + ".y");
                    check_events(events, x, r + ".x");
                    check_events(events, y, r + ".y");
                    z.insert({std::move(x), std::move(y)});
                }
                cd[e].push_back(std::move(z));
            }
        }
    }
    return Cdes(events, parse_conflict(j, events), cd);
}

EventAutomaton parse_ea(const json& j)
{
    const auto events = strings(member(j, "events", "$"), "$.events");
    const json& st = member(j, "states", "$");
    if (!st.is_array()) fail("$.states", "expected an array");
    std::vector<EventSet> states;
    for (std::size_t i = 0; i < st.size(); ++i) {
        const std::string p = "$.states[" + std::to_string(i) + "]";
        states.push_back(strings(st[i], p));
        check_events(events, states.back(), p);
    }
    auto state_at = [&](const json& v, const std::string& p) -> const EventSet& {
        if (!v.is_number_unsigned() || v.get<std::size_t>() >= states.size()) fail(p, "expected a state index");
        return states[v.get<std::size_t>()];
    };
    std::set<Step> steps;
    if (const json* sj = optional_member(j, "step")) {
        if (!sj->is_array()) fail("$.step", "expected an array");
        for (std::size_t i = 0; i < sj->size(); ++i) {
            const std::string p = "$.step[" + std::to_string(i) + "]";
            if (!(*sj)[i].is_array() || (*sj)[i].size() != 2) fail(p, "expected a pair of indices");
            steps.insert({state_at((*sj)[i][0], p + "[0]"), state_at((*sj)[i][1], p + "[1]")});
        }
    }
    const EventSet initial = state_at(member(j, "initial", "$"), "$.initial");
    try {
        return EventAutomaton(events, std::set<EventSet>(states.begin(), states.end()), steps, initial);
    } catch (const Error& e) {
        fail("$", e.what());
    }
}

json sorted_array(const std::set<std::string>& s)
{
    json a = json::array();
    for (const auto& x : s) a.push_back(x);
    return a;
}

json conflict_json(const PairSet& c)
{
    json a = json::array();
    for (const auto& [x, y] : c) a.push_back({x, y});
    return a;
}

struct ToJson {
    json operator()(const ContextualNet& n) const
    {
        json ts = json::array();
        for (const auto& [id, t] : n.transitions())
            ts.push_back({{"id", id},
                          {"label", t.label},
                          {"pre", sorted_array(t.pre)},
                          {"post", sorted_array(t.post)},
                          {"inhibit", sorted_array(t.inhibit)},
                          {"read", sorted_array(t.read)}});
        json m = json::object();
        for (const auto& [s, k] : n.initial()) m[s] = k;
        return {{"kind", "contextual-net"}, {"places", sorted_array(n.places())}, {"transitions", ts}, {"marking", m}};
    }

    json operator()(const Pes& p) const
    {
        json lt = json::array();
        for (const auto& [a, b] : p.causality()) lt.push_back({a, b});
        return {{"kind", "pes"}, {"events", sorted_array(p.events())}, {"lt", lt}, {"conflict", conflict_json(p.conflict())}};
    }

    json operator()(const Bes& b) const
    {
        json bs = json::array();
        for (const auto& x : b.bundles()) bs.push_back({{"set", sorted_array(x.set)}, {"event", x.event}});
        return {{"kind", "bes"}, {"events", sorted_array(b.events())}, {"bundles", bs}, {"conflict", conflict_json(b.conflict())}};
    }

    json operator()(const Cdes& c) const
    {
        json cd = json::array();
        for (const auto& [e, zs] : c.all_entries()) {
            json entries = json::array();
            for (const auto& z : zs) {
                json pairs = json::array();
                for (const auto& [x, y] : z) pairs.push_back({{"x", sorted_array(x)}, {"y", sorted_array(y)}});
                entries.push_back(pairs);
            }
            cd.push_back({{"event", e}, {"entries", entries}});
        }
        return {{"kind", "cdes"}, {"events", sorted_array(c.events())}, {"conflict", conflict_json(c.conflict())}, {"cd", cd}};
    }

    json operator()(const EventAutomaton& a) const
    {
        const auto order = ordered_states(a);
        std::map<EventSet, std::size_t> index;
        json states = json::array();
        for (std::size_t i = 0; i < order.size(); ++i) {
            index[order[i]] = i;
            states.push_back(sorted_array(order[i]));
        }
        std::set<std::pair<std::size_t, std::size_t>> steps;
        for (const auto& [f, t] : a.steps()) steps.insert({index.at(f), index.at(t)});
        json sj = json::array();
        for (const auto& [f, t] : steps) sj.push_back({f, t});
        return {{"kind", "ea"}, {"events", sorted_array(a.events())}, {"states", states}, {"step", sj}, {"initial", index.at(a.initial())}};
    }
};

}  // namespace

std::string kind_of(const Model& m)
{
    static const char* names[] = {"contextual-net", "pes", "bes", "cdes", "ea"};
    return names[m.index()];
}

Model parse_model(const json& j)
{
    const std::string kind = text(member(j, "kind", "$"), "$.kind");
    if (kind == "contextual-net") return parse_net(j);
    if (kind == "pes") return parse_pes(j);
    if (kind == "bes") return parse_bes(j);
    if (kind == "cdes") return parse_cdes(j);
    if (kind == "ea") return parse_ea(j);
    fail("$.kind", "unknown kind '" + kind + "'");
}

Model parse_model_text(const std::string& s)
{
    json j;
    try {
        j = json::parse(s);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::parse, std::string("malformed JSON: ") + e.what());
    }
    return parse_model(j);
}

Model parse_model_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::parse, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_model_text(buf.str());
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

json to_json(const Model& m)
{
    return std::visit(ToJson{}, m);
}

std::string serialize_model(const Model& m)
{
    return to_json(m).dump(2) + "\n";
}

void write_model_file(const Model& m, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::parse, "cannot write '" + path + "'");
    out << serialize_model(m);
}

json to_json(const ModelReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        json o = {{"name", c.name}, {"passed", c.passed}};
        if (!c.witness.empty()) o["witness"] = c.witness;
        checks.push_back(o);
    }
    return {{"kind", r.kind}, {"valid", r.valid()}, {"checks", checks}};
}

json to_json(const Family& f)
{
    json a = json::array();
    for (const auto& s : f) a.push_back(sorted_array(s));
    return a;
}

json to_json(const oracle::RoundTripVerdict& v)
{
    json stages = json::array();
    for (const auto& s : v.stages) stages.push_back({{"name", s.name}, {"configurations", to_json(s.configurations)}});
    json claims = json::array();
    for (const auto& c : v.claims) claims.push_back({{"name", c.name}, {"holds", c.holds}, {"gating", c.gating}});
    json o = {{"model", v.model_id}, {"chain", v.chain},     {"passed", v.passed},
              {"oracle_agrees", v.oracle_agrees}, {"stages", stages}, {"claims", claims}};
    if (!v.failure.empty()) o["failure"] = v.failure;
    if (v.first_mismatch) o["first_mismatch"] = sorted_array(*v.first_mismatch);
    return o;
}

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const ContextualNet& net)
{
    std::ostringstream o;
    o << "digraph net {\n  rankdir=LR;\n";
    for (const auto& s : net.places()) {
        auto it = net.initial().find(s);
        const std::string tokens = it == net.initial().end() ? "" : " (" + std::to_string(it->second) + ")";
        o << "  " << quoted("p:" + s) << " [shape=circle,label=" << quoted(s + tokens) << "];\n";
    }
    for (const auto& [id, t] : net.transitions()) {
        o << "  " << quoted("t:" + id) << " [shape=box,label=" << quoted(id + " / " + t.label) << "];\n";
        for (const auto& s : t.pre) o << "  " << quoted("p:" + s) << " -> " << quoted("t:" + id) << ";\n";
        for (const auto& s : t.post) o << "  " << quoted("t:" + id) << " -> " << quoted("p:" + s) << ";\n";
        for (const auto& s : t.inhibit)
            o << "  " << quoted("p:" + s) << " -> " << quoted("t:" + id) << " [arrowhead=odot];\n";
        for (const auto& s : t.read)
            o << "  " << quoted("p:" + s) << " -> " << quoted("t:" + id) << " [dir=none];\n";
    }
    o << "}\n";
    return o.str();
}

std::string to_dot(const EventAutomaton& ea)
{
    std::ostringstream o;
    o << "digraph automaton {\n";
    for (const auto& s : ordered_states(ea)) {
        o << "  " << quoted(show(s)) << " [shape=" << (s == ea.initial() ? "doublecircle" : "circle") << "];\n";
    }
    for (const auto& [f, t] : ea.steps()) o << "  " << quoted(show(f)) << " -> " << quoted(show(t)) << ";\n";
    o << "}\n";
    return o.str();
}

}  // namespace causalnet
