#include "cli.hpp"

#include "CLI11.hpp"
#include "causalnet/io.hpp"

#include <fstream>
#include <iostream>

namespace causalnet::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::parse: return parse_error;
    case ErrorCode::bound_exceeded: return bound_exceeded;
    case ErrorCode::not_enabled:
    case ErrorCode::retries_exhausted: return mismatch;
    default: return validation_failure;
    }
}

void report_error(std::ostream& err, std::string_view kind, const std::string& message)
{
    err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

json marking_json(const Multiset& m)
{
    json o = json::object();
    for (const auto& [k, n] : m) o[k] = n;
    return o;
}

template <class T>
const T& expect(const Model& m, std::string_view what)
{
    if (!std::holds_alternative<T>(m))
        throw Error(ErrorCode::parse, "expected " + std::string(what) + ", got " + kind_of(m));
    return std::get<T>(m);
}

int validate(const Model& m, const std::string& as, const Bounds& bounds, std::ostream& out)
{
    ModelReport r;
    if (const auto* net = std::get_if<ContextualNet>(&m)) {
        if (as == "on") r = validate_on(*net, bounds).report;
        else if (as == "un") r = validate_un(*net, bounds).report;
        else if (as == "pcn") r = validate_pcn(*net, bounds);
        else if (as == "cn") r = validate_cn(*net, bounds).report;
        else if (as.empty() || as == "net") r = {"contextual-net", {{"well formed", true, {}}}};
        else throw Error(ErrorCode::parse, "unknown --as '" + as + "'");
    } else if (const auto* p = std::get_if<Pes>(&m)) {
        r = validate_es(*p);
    } else if (const auto* b = std::get_if<Bes>(&m)) {
        r = validate_es(*b);
    } else if (const auto* c = std::get_if<Cdes>(&m)) {
        r = validate_es(*c);
    } else {
        const EaAnalysis a = analyze_ea(std::get<EventAutomaton>(m));
        r.kind = "ea";
        r.add("simple", a.simple);
        r.add("complete", a.complete);
        r.add("finitely caused", a.finitely_caused);
        r.add("finitely inhibited", a.finitely_inhibited);
    }
    out << to_json(r).dump(2) << "\n";
    return r.valid() ? ok : validation_failure;
}

int behaviour_cmd(const Model& m, const Bounds& bounds, std::ostream& out)
{
    json o;
    if (const auto* net = std::get_if<ContextualNet>(&m)) {
        const Behaviour b = behaviour(*net, bounds);
        json states = json::array(), maximal = json::array(), confs = json::array(), traces = json::array(),
             markings = json::array();
        for (const auto& x : b.states) states.push_back(marking_json(x));
        for (const auto& x : b.maximal_states()) maximal.push_back(marking_json(x));
        for (const auto& c : b.configurations) confs.push_back(marking_json(c));
        for (const auto& t : b.traces) traces.push_back(t);
        for (const auto& mk : b.reachable_markings) markings.push_back(marking_json(mk));
        o = {{"complete", b.complete},       {"states", states},  {"maximal_states", maximal},
             {"configurations", confs},      {"traces", traces},  {"reachable_markings", markings},
             {"firing_sequences", b.firing_sequences.size()}};
        out << o.dump(2) << "\n";
        return b.complete ? ok : bound_exceeded;
    }
    EsConfigSet cs;
    if (const auto* p = std::get_if<Pes>(&m)) cs = es_configurations(*p);
    else if (const auto* b = std::get_if<Bes>(&m)) cs = es_configurations(*b);
    else if (const auto* c = std::get_if<Cdes>(&m)) cs = es_configurations(*c);
    else {
        const auto& ea = std::get<EventAutomaton>(m);
        out << json{{"configurations", to_json(ea.states())}}.dump(2) << "\n";
        return ok;
    }
    json confs = json::array();
    for (const auto& [c, w] : cs.witnesses) confs.push_back({{"configuration", c}, {"witness", w}});
    out << json{{"configurations", confs}}.dump(2) << "\n";
    return ok;
}

int classify_cmd(const Model& m, const Bounds& bounds, std::ostream& out)
{
    const auto& net = expect<ContextualNet>(m, "a contextual net");
    const NetClass c = classify(net, bounds);
    json o = {{"safe", c.safe},
              {"single_execution", c.single_execution},
              {"unfolding", c.unfolding},
              {"conflict_saturated", c.conflict_saturated}};
    const CnValidation v = validate_cn(net, bounds);
    o["causal_net"] = to_json(v.report);
    const CnClass k = classify_cn(net, bounds);
    o["occurrence_causal"] = k.occurrence_causal;
    o["plainly_caused"] = k.plainly_caused;
    o["well_behaved"] = k.well_behaved;
    out << o.dump(2) << "\n";
    return ok;
}

Model translate(const Model& m, const std::string& from, const std::string& to, const Bounds& bounds)
{
    auto net = [&]() -> const ContextualNet& { return expect<ContextualNet>(m, "a contextual net"); };
    const std::string edge = from + "->" + to;
    if (edge == "on->pes") return on_to_pes(net(), bounds);
    if (edge == "pes->on") return pes_to_on(expect<Pes>(m, "a pes"));
    if (edge == "un->bes") return un_to_bes(net(), bounds);
    if (edge == "bes->un") return bes_to_un(expect<Bes>(m, "a bes"));
    if (edge == "on->cn") return on_to_cn(net(), bounds);
    if (edge == "pes->cn") return pes_to_cn(expect<Pes>(m, "a pes"));
    if (edge == "cn->pes") return cn_to_pes(net(), bounds);
    if (edge == "cn->on") return cn_to_on(net(), bounds);
    if (edge == "un->cn") return un_to_cn(net(), bounds);
    if (edge == "cn->bes") return cn_to_bes(net(), bounds);
    if (edge == "bes->cn") return bes_to_cn(expect<Bes>(m, "a bes"), bounds);
    if (edge == "cdes->cn") return cdes_to_cn(expect<Cdes>(m, "a cdes"));
    if (edge == "cn->cdes") return cn_to_cdes(net());
    if (edge == "cdes->ea") return cdes_to_ea(expect<Cdes>(m, "a cdes"));
    if (edge == "ea->cdes") return ea_to_cdes(expect<EventAutomaton>(m, "an ea"));
    if (edge == "cdes->cdes") return elementarize(expect<Cdes>(m, "a cdes"));
    if (edge == "net->net") return saturate_conflicts(net(), bounds);
    throw Error(ErrorCode::parse, "no translation from '" + from + "' to '" + to + "'");
}

Family configurations_of(const Model& m, const Bounds& bounds)
{
    if (const auto* n = std::get_if<ContextualNet>(&m)) return configuration_sets(*n, bounds);
    if (const auto* p = std::get_if<Pes>(&m)) return es_configurations(*p).family();
    if (const auto* b = std::get_if<Bes>(&m)) return es_configurations(*b).family();
    if (const auto* c = std::get_if<Cdes>(&m)) return es_configurations(*c).family();
    return std::get<EventAutomaton>(m).states();
}

int equiv_cmd(const Model& a, const Model& b, bool by_configurations, const Bounds& bounds, std::ostream& out)
{
    bool equal = false;
    std::string witness;
    std::string mode;
    if (!by_configurations && a.index() == b.index() && std::holds_alternative<ContextualNet>(a)) {
        mode = "states";
        auto r = net_equiv(std::get<ContextualNet>(a), std::get<ContextualNet>(b), bounds);
        equal = r.equivalent;
        witness = r.witness;
    } else if (!by_configurations && a.index() == b.index() && std::holds_alternative<Cdes>(a)) {
        mode = "automata";
        auto r = cdes_equiv(std::get<Cdes>(a), std::get<Cdes>(b));
        equal = r.equivalent;
        witness = r.witness;
    } else {
        mode = "configurations";
        auto d = oracle::config_sets_equal(configurations_of(a, bounds), configurations_of(b, bounds));
        equal = d.equal;
        if (d.witness) witness = show(*d.witness) + (d.witness_in_first ? " only in first" : " only in second");
    }
    json o = {{"equivalent", equal}, {"mode", mode}};
    if (!witness.empty()) o["witness"] = witness;
    out << o.dump(2) << "\n";
    return equal ? ok : mismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Contextual nets, causal nets and event structures"};
    app.require_subcommand(1);

    std::string file, file2, as, from, to, output, fixtures, chain, report_path, model_path;
    bool by_configurations = false;
    std::uint64_t seed = 1;
    unsigned instances = 100, max_events = 6;

    auto* validate_cmd = app.add_subcommand("validate", "check a model against its definition");
    validate_cmd->add_option("file", file)->required();
    validate_cmd->add_option("--as", as, "net kind: net, on, un, pcn, cn");

    auto* behaviour_sub = app.add_subcommand("behaviour", "states, configurations and traces");
    behaviour_sub->add_option("file", file)->required();

    auto* classify_sub = app.add_subcommand("classify", "net and causal-net classification");
    classify_sub->add_option("file", file)->required();

    auto* translate_sub = app.add_subcommand("translate", "translate a model between kinds");
    translate_sub->add_option("file", file)->required();
    translate_sub->add_option("--from", from)->required();
    translate_sub->add_option("--to", to)->required();
    translate_sub->add_option("-o,--output", output);

    auto* equiv_sub = app.add_subcommand("equiv", "compare two models");
    equiv_sub->add_option("first", file)->required();
    equiv_sub->add_option("second", file2)->required();
    equiv_sub->add_flag("--configurations", by_configurations, "compare configuration sets only");

    auto* roundtrip_sub = app.add_subcommand("roundtrip", "run translation round trips");
    roundtrip_sub->add_option("--seed", seed);
    roundtrip_sub->add_option("--instances", instances);
    roundtrip_sub->add_option("--max-events", max_events);
    roundtrip_sub->add_option("--fixtures", fixtures, "directory with fixture models");
    roundtrip_sub->add_option("--chain", chain, "run only this chain");
    roundtrip_sub->add_option("--model", model_path, "run --chain on this net instead of generated ones");
    roundtrip_sub->add_option("--report", report_path, "write the JSON report here instead of stdout");

    auto* dot_sub = app.add_subcommand("dot", "graphviz rendering of a net or automaton");
    dot_sub->add_option("file", file)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        report_error(err, "UsageError", e.what());
        return parse_error;
    }

    const Bounds bounds = Bounds::from_env();
    try {
        if (*validate_cmd) return validate(parse_model_file(file), as, bounds, out);
        if (*behaviour_sub) return behaviour_cmd(parse_model_file(file), bounds, out);
        if (*classify_sub) return classify_cmd(parse_model_file(file), bounds, out);
        if (*translate_sub) {
            const Model result = translate(parse_model_file(file), from, to, bounds);
            if (output.empty()) out << serialize_model(result);
            else write_model_file(result, output);
            return ok;
        }
        if (*equiv_sub) return equiv_cmd(parse_model_file(file), parse_model_file(file2), by_configurations, bounds, out);
        if (*roundtrip_sub) {
            oracle::SuiteSpec spec;
            spec.seed = seed;
            spec.instances = instances;
            spec.max_events = max_events;
            spec.fixtures_dir = fixtures;
            spec.bounds = bounds;
            std::vector<oracle::RoundTripVerdict> verdicts;
            if (!model_path.empty()) {
                if (chain.empty()) throw Error(ErrorCode::parse, "--model needs --chain");
                const Model m = parse_model_file(model_path);
                const auto* n = std::get_if<ContextualNet>(&m);
                if (!n) throw Error(ErrorCode::parse, "--model must be a contextual net");
                verdicts.push_back(oracle::run_chain_on(chain, model_path, *n, bounds));
            } else if (chain.empty()) verdicts = oracle::roundtrip_suite(spec);
            else verdicts = oracle::run_chain(chain, spec);
            json list = json::array();
            std::size_t failed = 0;
            for (const auto& v : verdicts) {
                failed += v.passed ? 0 : 1;
                list.push_back(to_json(v));
            }
            const json report = {{"total", verdicts.size()}, {"failed", failed}, {"verdicts", list}};
            if (report_path.empty()) out << report.dump(2) << "\n";
            else {
                std::ofstream f(report_path);
                f << report.dump(2) << "\n";
                out << json{{"total", verdicts.size()}, {"failed", failed}}.dump() << "\n";
            }
            return failed == 0 ? ok : mismatch;
        }
        if (*dot_sub) {
            const Model m = parse_model_file(file);
            if (const auto* n = std::get_if<ContextualNet>(&m)) out << to_dot(*n);
            else if (const auto* a = std::get_if<EventAutomaton>(&m)) out << to_dot(*a);
            else if (const auto* c = std::get_if<Cdes>(&m)) out << to_dot(cdes_to_ea(*c));
            else throw Error(ErrorCode::parse, "dot needs a net, an automaton or a cdes");
            return ok;
        }
    } catch (const Error& e) {
        report_error(err, to_string(e.code()), e.what());
        return exit_code_for(e.code());
    }
    return ok;
}

}  // namespace causalnet::cli
