#pragma once

#include "causalnet/causal.hpp"

#include <cstdint>
#include <optional>

namespace causalnet::oracle {

inline constexpr std::size_t visit_limit = 1'000'000;

// Naive depth-first enumerations sharing no code with the main modules.
std::set<Configuration> net_configurations(const ContextualNet& net);
Family configs(const ContextualNet& net);  // throws InvalidModel on repeated labels
Family configs(const Pes& pes);
Family configs(const Bes& bes);
Family configs(const Cdes& cdes);

struct ConfigDiff {
    bool equal = true;
    std::optional<EventSet> witness;
    bool witness_in_first = false;
};

ConfigDiff config_sets_equal(const Family& a, const Family& b);

struct GenSpec {
    std::uint64_t seed = 1;
    unsigned max_events = 6;
    double causality = 0.3;
    double conflict = 0.3;
    double bundle = 0.5;
    double context = 0.35;
    unsigned max_retries = 5000;
};

Pes generate_pes(const GenSpec& spec);
Bes generate_bes(const GenSpec& spec);
EventAutomaton generate_ea(const GenSpec& spec);
Cdes generate_cdes(const GenSpec& spec);
ContextualNet generate_on(const GenSpec& spec);
ContextualNet generate_un(const GenSpec& spec);
ContextualNet generate_single_execution_net(const GenSpec& spec);

struct Stage {
    std::string name;
    Family configurations;
};

struct Claim {
    std::string name;
    bool holds = false;
    bool gating = true;  // informational claims never fail a verdict
};

struct RoundTripVerdict {
    std::string model_id;
    std::vector<std::string> chain;
    std::vector<Stage> stages;
    std::vector<Claim> claims;
    bool passed = false;
    bool oracle_agrees = true;
    std::string failure;
    std::optional<EventSet> first_mismatch;
};

struct SuiteSpec {
    std::uint64_t seed = 1;
    unsigned instances = 100;
    unsigned max_events = 6;
    std::string fixtures_dir;  // empty: generated instances only
    bool generated = true;
    Bounds bounds;
};

inline const std::vector<std::string> chain_names = {
    "on-pes-on", "pes-on-pes", "un-bes-un", "pes-cn-pes", "on-cn",
    "un-cn",     "bes-cn-bes", "cdes-cn-cdes", "cdes-ea-cdes",
};

std::vector<RoundTripVerdict> roundtrip_suite(const SuiteSpec& spec);
std::vector<RoundTripVerdict> run_chain(const std::string& chain, const SuiteSpec& spec);
// One chain applied to a given net: on-pes-on, un-bes-un, on-cn, un-cn, cn-cdes-cn or saturate.
RoundTripVerdict run_chain_on(const std::string& chain, const std::string& model_id, const ContextualNet& net,
                              const Bounds& bounds = {});
std::vector<RoundTripVerdict> fixture_verdicts(const std::string& fixtures_dir, const Bounds& bounds = {});

// Unravel-net structural propositions over generated instances.
std::vector<RoundTripVerdict> un_proposition_suite(std::uint64_t seed, unsigned instances, unsigned max_events);
// saturate_conflicts over generated single-execution nets.
std::vector<RoundTripVerdict> saturation_suite(std::uint64_t seed, unsigned instances, unsigned max_transitions);

}  // namespace causalnet::oracle
