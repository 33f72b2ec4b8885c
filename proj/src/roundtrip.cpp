#include "causalnet/io.hpp"
#include "causalnet/oracle.hpp"

#include <filesystem>
#include <functional>

namespace causalnet::oracle {

namespace {

class Recorder {
public:
    Recorder(std::string id, std::string chain, Bounds bounds) : bounds_(bounds)
    {
        v_.model_id = std::move(id);
        v_.chain.push_back(std::move(chain));
    }

    void step(std::string name) { v_.chain.push_back(std::move(name)); }

    void stage(std::string name, Family main, const Family& naive)
    {
        if (main != naive) {
            v_.oracle_agrees = false;
            const auto d = config_sets_equal(main, naive);
            note("oracle disagrees on " + name + " at " + show(*d.witness));
        }
        v_.stages.push_back({std::move(name), std::move(main)});
    }

    void stage(std::string name, const ContextualNet& net)
    {
        stage(std::move(name), configuration_sets(net, bounds_), configs(net));
    }
    void stage(std::string name, const Pes& pes) { stage(std::move(name), es_configurations(pes).family(), configs(pes)); }
    void stage(std::string name, const Bes& bes) { stage(std::move(name), es_configurations(bes).family(), configs(bes)); }
    void stage(std::string name, const Cdes& cdes)
    {
        stage(std::move(name), es_configurations(cdes).family(), configs(cdes));
    }
    void stage(std::string name, const EventAutomaton& ea)
    {
        v_.stages.push_back({std::move(name), ea.states()});
    }

    void claim(std::string name, bool holds, bool gating = true)
    {
        if (!holds && gating) note("claim failed: " + name);
        v_.claims.push_back({std::move(name), holds, gating});
    }

    // Facts every causal net built by a translation should have.
    void causal_claims(const std::string& name, const ContextualNet& cn)
    {
        const NetClass c = classify(cn, bounds_);
        claim(name + " single execution", c.single_execution);
        claim(name + " unfolding", c.unfolding);
        claim(name + " conflict saturated", c.conflict_saturated, false);
        claim(name + " valid causal net", validate_cn(cn, bounds_).report.valid(), false);
    }

    const Bounds& bounds() const { return bounds_; }

    void oracle_check(bool agrees, const std::string& what)
    {
        if (agrees) return;
        v_.oracle_agrees = false;
        note("oracle disagrees on " + what);
    }

    void reject(const std::string& why)
    {
        rejected_ = true;
        note(why);
    }

    RoundTripVerdict finish()
    {
        bool equal = !rejected_;
        for (std::size_t i = 1; i < v_.stages.size() && equal; ++i) {
            const auto d = config_sets_equal(v_.stages.front().configurations, v_.stages[i].configurations);
            if (!d.equal) {
                equal = false;
                v_.first_mismatch = d.witness;
                note("configurations of " + v_.stages[i].name + " differ at " + show(*d.witness));
            }
        }
        const bool claims = std::all_of(v_.claims.begin(), v_.claims.end(),
                                        [](const Claim& c) { return c.holds || !c.gating; });
        v_.passed = equal && claims && v_.oracle_agrees;
        return std::move(v_);
    }

private:
    void note(const std::string& s)
    {
        if (v_.failure.empty()) v_.failure = s;
    }

    RoundTripVerdict v_;
    Bounds bounds_;
    bool rejected_ = false;
};

RoundTripVerdict guarded(Recorder rec, const std::function<void(Recorder&)>& body)
{
    try {
        body(rec);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::invalid_model)
            rec.reject("rejected at validation: " + std::string(e.what()));
        else
            rec.reject(std::string(to_string(e.code())) + ": " + e.what());
    }
    return rec.finish();
}

void chain_on_pes_on(Recorder& r, const ContextualNet& on)
{
    r.stage("on", on);
    const Pes pes = on_to_pes(on, r.bounds());
    r.step("on_to_pes");
    r.stage("pes", pes);
    const ContextualNet back = pes_to_on(pes);
    r.step("pes_to_on");
    r.stage("on'", back);
    r.claim("pes is valid", validate_es(pes).valid());
    r.claim("on' is an occurrence net", validate_on(back, r.bounds()).view.has_value());
    r.claim("on_to_pes(on') = pes", on_to_pes(back, r.bounds()) == pes);
}

void chain_pes_on_pes(Recorder& r, const Pes& pes)
{
    r.stage("pes", pes);
    const ContextualNet on = pes_to_on(pes);
    r.step("pes_to_on");
    r.stage("on", on);
    const NetClass c = classify(on, r.bounds());
    r.claim("on is an occurrence net", validate_on(on, r.bounds()).view.has_value());
    r.claim("on safe, single execution, unfolding", c.safe && c.single_execution && c.unfolding);
    const Pes back = on_to_pes(on, r.bounds());
    r.step("on_to_pes");
    r.stage("pes'", back);
    r.claim("pes' = pes", back == pes);
}

void chain_un_bes_un(Recorder& r, const ContextualNet& un)
{
    r.stage("un", un);
    const Bes bes = un_to_bes(un, r.bounds());
    r.step("un_to_bes");
    r.stage("bes", bes);
    r.claim("bes is valid", validate_es(bes).valid());
    const ContextualNet back = bes_to_un(bes);
    r.step("bes_to_un");
    r.stage("un'", back);
    r.claim("un' is an unravel net", validate_un(back, r.bounds()).view.has_value());
    r.claim("un' propositions", check_unravel_propositions(back, r.bounds()).valid());
}

void chain_pes_cn_pes(Recorder& r, const Pes& pes)
{
    r.stage("pes", pes);
    const ContextualNet cn = pes_to_cn(pes);
    r.step("pes_to_cn");
    r.stage("cn", cn);
    r.claim("cn occurrence causal", classify_cn(cn, r.bounds()).occurrence_causal);
    r.causal_claims("cn", cn);
    const Pes back = cn_to_pes(cn, r.bounds());
    r.step("cn_to_pes");
    r.stage("pes'", back);
    r.claim("pes' = pes", back == pes);
    const ContextualNet cn2 = pes_to_cn(back);
    r.step("pes_to_cn");
    r.stage("cn'", cn2);
    const ContextualNet on = cn_to_on(cn, r.bounds());
    r.stage("cn_to_on(cn)", on);
    r.claim("cn_to_on(cn) is an occurrence net", validate_on(on, r.bounds()).view.has_value());
}

void chain_on_cn(Recorder& r, const ContextualNet& on)
{
    r.stage("on", on);
    const ContextualNet cn = on_to_cn(on, r.bounds());
    r.step("on_to_cn");
    r.stage("cn", cn);
    r.claim("cn occurrence causal", classify_cn(cn, r.bounds()).occurrence_causal);
    r.causal_claims("cn", cn);
}

void chain_un_cn(Recorder& r, const ContextualNet& un)
{
    r.stage("un", un);
    const ContextualNet cn = un_to_cn(un, r.bounds());
    r.step("un_to_cn");
    r.stage("cn", cn);
    r.claim("cn plainly caused", classify_cn(cn, r.bounds()).plainly_caused);
    r.causal_claims("cn", cn);
}

void chain_bes_cn_bes(Recorder& r, const Bes& bes)
{
    r.stage("bes", bes);
    const ContextualNet cn = bes_to_cn(bes, r.bounds());
    r.step("bes_to_cn");
    r.stage("cn", cn);
    r.claim("cn plainly caused", classify_cn(cn, r.bounds()).plainly_caused);
    r.causal_claims("cn", cn);
    const Bes back = cn_to_bes(cn, r.bounds());
    r.step("cn_to_bes");
    r.stage("bes'", back);
    r.claim("bes' = bes", back == bes);
    const ContextualNet cn2 = bes_to_cn(back, r.bounds());
    r.step("bes_to_cn");
    r.stage("cn'", cn2);
}

void chain_cdes_cn_cdes(Recorder& r, const Cdes& cdes)
{
    r.stage("cdes", cdes);
    const ContextualNet cn = cdes_to_cn(cdes);
    r.step("cdes_to_cn");
    r.stage("cn", cn);
    r.claim("cn well behaved", is_well_behaved(cn));
    r.causal_claims("cn", cn);
    const Cdes back = cn_to_cdes(cn);
    r.step("cn_to_cdes");
    r.stage("cdes'", back);
    r.claim("cdes' elementary", is_elementary(back));
    r.claim("cdes' equivalent to cdes", cdes_equiv(cdes, back).equivalent);
    const ContextualNet cn2 = cdes_to_cn(back);
    r.step("cdes_to_cn");
    r.stage("cn'", cn2);
}

void chain_cdes_ea_cdes(Recorder& r, const Cdes& cdes)
{
    r.stage("cdes", cdes);
    const EventAutomaton ea = cdes_to_ea(cdes);
    r.step("cdes_to_ea");
    r.stage("ea", ea);
    const EaAnalysis a = analyze_ea(ea);
    r.claim("ea simple, complete, finitely caused and inhibited",
            a.simple && a.complete && a.finitely_caused && a.finitely_inhibited);
    const Cdes back = ea_to_cdes(ea);
    r.step("ea_to_cdes");
    r.stage("cdes'", back);
    r.claim("cdes' elementary", is_elementary(back));
    r.claim("cdes_to_ea(cdes') = ea", cdes_to_ea(back) == ea);
}

void chain_cn_cdes_cn(Recorder& r, const ContextualNet& cn)
{
    r.stage("cn", cn);
    r.claim("cn well behaved", is_well_behaved(cn));
    const Cdes cdes = cn_to_cdes(cn);
    r.step("cn_to_cdes");
    r.stage("cdes", cdes);
    const ContextualNet back = cdes_to_cn(cdes);
    r.step("cdes_to_cn");
    r.stage("cn'", back);
    r.claim("cn' isomorphic to cn", isomorphic(cn, back));
}

void chain_saturate(Recorder& r, const ContextualNet& net)
{
    r.stage("net", net);
    const ContextualNet sat = saturate_conflicts(net, r.bounds());
    r.step("saturate_conflicts");
    r.stage("saturated", sat);
    r.claim("saturated net is conflict saturated", classify(sat, r.bounds()).conflict_saturated);
    r.claim("same states", net_equiv(net, sat, r.bounds()).equivalent);
}

std::uint64_t instance_seed(std::uint64_t base, std::size_t chain, unsigned i)
{
    return base * 1'000'003ULL + chain * 10'007ULL + i;
}

}  // namespace

RoundTripVerdict run_chain_on(const std::string& chain, const std::string& model_id, const ContextualNet& net,
                              const Bounds& bounds)
{
    static const std::map<std::string, void (*)(Recorder&, const ContextualNet&)> chains = {
        {"on-pes-on", chain_on_pes_on}, {"un-bes-un", chain_un_bes_un}, {"on-cn", chain_on_cn},
        {"un-cn", chain_un_cn},         {"cn-cdes-cn", chain_cn_cdes_cn}, {"saturate", chain_saturate},
    };
    const auto it = chains.find(chain);
    if (it == chains.end()) throw Error(ErrorCode::unknown_id, "chain '" + chain + "' does not start from a net");
    return guarded(Recorder(model_id, chain, bounds), [&](Recorder& r) { it->second(r, net); });
}

std::vector<RoundTripVerdict> run_chain(const std::string& chain, const SuiteSpec& spec)
{
    const auto pos = std::find(chain_names.begin(), chain_names.end(), chain);
    if (pos == chain_names.end()) throw Error(ErrorCode::unknown_id, "unknown chain '" + chain + "'");
    const std::size_t index = static_cast<std::size_t>(pos - chain_names.begin());
    std::vector<RoundTripVerdict> out;
    for (unsigned i = 0; i < spec.instances; ++i) {
        GenSpec g;
        g.seed = instance_seed(spec.seed, index, i);
        g.max_events = spec.max_events;
        Recorder rec(chain + "#" + std::to_string(i), chain, spec.bounds);
        out.push_back(guarded(std::move(rec), [&](Recorder& r) {
            if (chain == "on-pes-on") chain_on_pes_on(r, generate_on(g));
            else if (chain == "pes-on-pes") chain_pes_on_pes(r, generate_pes(g));
            else if (chain == "un-bes-un") chain_un_bes_un(r, generate_un(g));
            else if (chain == "pes-cn-pes") chain_pes_cn_pes(r, generate_pes(g));
            else if (chain == "on-cn") chain_on_cn(r, generate_on(g));
            else if (chain == "un-cn") chain_un_cn(r, generate_un(g));
            else if (chain == "bes-cn-bes") chain_bes_cn_bes(r, generate_bes(g));
            else if (chain == "cdes-cn-cdes") chain_cdes_cn_cdes(r, generate_cdes(g));
            else chain_cdes_ea_cdes(r, generate_cdes(g));
        }));
    }
    return out;
}

std::vector<RoundTripVerdict> fixture_verdicts(const std::string& dir, const Bounds& bounds)
{
    namespace fs = std::filesystem;
    std::vector<RoundTripVerdict> out;
    auto run = [&](const std::string& file, const std::string& chain,
                   const std::function<void(Recorder&, const Model&)>& body) {
        Recorder rec(file, chain, bounds);
        out.push_back(guarded(std::move(rec), [&](Recorder& r) { body(r, parse_model_file((fs::path(dir) / file).string())); }));
    };
    auto net = [](const Model& m) -> const ContextualNet& { return std::get<ContextualNet>(m); };
    auto cdes = [](const Model& m) -> const Cdes& { return std::get<Cdes>(m); };

    run("fig1.json", "saturate", [&](Recorder& r, const Model& m) { chain_saturate(r, net(m)); });
    run("onfix.json", "on-pes-on", [&](Recorder& r, const Model& m) { chain_on_pes_on(r, net(m)); });
    run("onfix.json", "on-cn", [&](Recorder& r, const Model& m) { chain_on_cn(r, net(m)); });
    run("onfix.json", "pes-cn-pes", [&](Recorder& r, const Model& m) {
        chain_pes_cn_pes(r, on_to_pes(net(m), r.bounds()));
    });
    run("unfix.json", "un-bes-un", [&](Recorder& r, const Model& m) { chain_un_bes_un(r, net(m)); });
    run("unfix.json", "un-cn", [&](Recorder& r, const Model& m) { chain_un_cn(r, net(m)); });
    run("unfix.json", "bes-cn-bes", [&](Recorder& r, const Model& m) {
        chain_bes_cn_bes(r, un_to_bes(net(m), r.bounds()));
    });
    for (const char* f : {"cndrop.json", "cngrow.json", "cnres.json"})
        run(f, "cn-cdes-cn", [&](Recorder& r, const Model& m) { chain_cn_cdes_cn(r, net(m)); });
    for (const char* f : {"res.json", "drop.json", "grow.json"}) {
        run(f, "cdes-cn-cdes", [&](Recorder& r, const Model& m) { chain_cdes_cn_cdes(r, cdes(m)); });
        run(f, "cdes-ea-cdes", [&](Recorder& r, const Model& m) { chain_cdes_ea_cdes(r, cdes(m)); });
    }
    return out;
}

std::vector<RoundTripVerdict> roundtrip_suite(const SuiteSpec& spec)
{
    std::vector<RoundTripVerdict> out;
    if (!spec.fixtures_dir.empty()) out = fixture_verdicts(spec.fixtures_dir, spec.bounds);
    if (spec.generated)
        for (const auto& chain : chain_names) {
            auto part = run_chain(chain, spec);
            std::move(part.begin(), part.end(), std::back_inserter(out));
        }
    return out;
}

std::vector<RoundTripVerdict> un_proposition_suite(std::uint64_t seed, unsigned instances, unsigned max_events)
{
    std::vector<RoundTripVerdict> out;
    for (unsigned i = 0; i < instances; ++i) {
        GenSpec g;
        g.seed = instance_seed(seed, 100, i);
        g.max_events = max_events;
        Recorder rec("un-propositions#" + std::to_string(i), "un-propositions", {});
        out.push_back(guarded(std::move(rec), [&](Recorder& r) {
            const ContextualNet un = generate_un(g);
            r.stage("un", un);
            for (const auto& c : check_unravel_propositions(un, r.bounds()).checks) r.claim(c.name, c.passed);
        }));
    }
    return out;
}

std::vector<RoundTripVerdict> saturation_suite(std::uint64_t seed, unsigned instances, unsigned max_transitions)
{
    std::vector<RoundTripVerdict> out;
    for (unsigned i = 0; i < instances; ++i) {
        GenSpec g;
        g.seed = instance_seed(seed, 200, i);
        g.max_events = max_transitions;
        Recorder rec("saturation#" + std::to_string(i), "saturate", {});
        out.push_back(guarded(std::move(rec), [&](Recorder& r) {
            const ContextualNet net = generate_single_execution_net(g);
            // Labels may repeat here, so compare label multisets with the oracle directly.
            const ContextualNet sat = saturate_conflicts(net, r.bounds());
            r.step("saturate_conflicts");
            for (const auto* n : {&net, &sat}) {
                std::set<Configuration> main;
                for (const auto& x : explore_complete(*n, r.bounds()).states) main.insert(configuration_of(*n, x));
                r.oracle_check(main == net_configurations(*n), n == &net ? "net" : "saturated");
            }
            r.claim("saturated net is conflict saturated", classify(sat, r.bounds()).conflict_saturated);
            r.claim("same states", net_equiv(net, sat, r.bounds()).equivalent);
        }));
    }
    return out;
}

}  // namespace causalnet::oracle
