#include "support.hpp"

#include "causalnet/oracle.hpp"

using namespace causalnet;
using namespace causalnet::test;

TEST(Oracle, AgreesOnFixtureNets)
{
    for (const char* f : {"fig1.json", "onfix.json", "unfix.json", "cndrop.json", "cngrow.json", "cnres.json",
                          "pcn_example.json"})
        EXPECT_EQ(oracle::configs(net(f)), configuration_sets(net(f))) << f;
}

TEST(Oracle, AgreesOnFixtureStructures)
{
    for (const char* f : {"res.json", "drop.json", "grow.json"})
        EXPECT_EQ(oracle::configs(cdes(f)), es_configurations(cdes(f)).family()) << f;
    EXPECT_EQ(oracle::configs(load<Pes>("pes_example.json")), es_configurations(load<Pes>("pes_example.json")).family());
    EXPECT_EQ(oracle::configs(load<Bes>("bes_example.json")), es_configurations(load<Bes>("bes_example.json")).family());
}

TEST(Oracle, NetConfigurationsAsMultisets)
{
    const auto confs = oracle::net_configurations(net("fig1.json"));
    EXPECT_EQ(confs.size(), 3u);
    EXPECT_TRUE(confs.count(Configuration{{"a", 1}, {"b", 1}}));
}

TEST(Oracle, DiffWitness)
{
    const auto d = oracle::config_sets_equal(oracle::configs(cdes("res.json")), oracle::configs(cdes("drop.json")));
    EXPECT_FALSE(d.equal);
    ASSERT_TRUE(d.witness);
    EXPECT_EQ(*d.witness, EventSet{"c"});
    EXPECT_TRUE(d.witness_in_first);
    EXPECT_TRUE(oracle::config_sets_equal(family({{}}), family({{}})).equal);
}

TEST(Oracle, GeneratorsAreDeterministic)
{
    oracle::GenSpec g;
    g.seed = 42;
    EXPECT_EQ(oracle::generate_pes(g), oracle::generate_pes(g));
    EXPECT_EQ(oracle::generate_bes(g), oracle::generate_bes(g));
    EXPECT_EQ(oracle::generate_cdes(g), oracle::generate_cdes(g));
    EXPECT_EQ(oracle::generate_ea(g), oracle::generate_ea(g));
    EXPECT_TRUE(isomorphic(oracle::generate_on(g), oracle::generate_on(g)));
    EXPECT_TRUE(isomorphic(oracle::generate_un(g), oracle::generate_un(g)));
}

TEST(Oracle, GeneratedModelsAreValid)
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        oracle::GenSpec g;
        g.seed = seed;
        EXPECT_TRUE(validate_es(oracle::generate_pes(g)).valid()) << seed;
        EXPECT_TRUE(validate_es(oracle::generate_bes(g)).valid()) << seed;
        EXPECT_TRUE(validate_es(oracle::generate_cdes(g)).valid()) << seed;
        EXPECT_TRUE(validate_on(oracle::generate_on(g)).report.valid()) << seed;
        EXPECT_TRUE(validate_un(oracle::generate_un(g)).report.valid()) << seed;
        EXPECT_TRUE(analyze_ea(oracle::generate_ea(g)).simple) << seed;
        EXPECT_LE(oracle::generate_pes(g).events().size(), g.max_events);
    }
}

TEST(Oracle, FixtureVerdictsPass)
{
    for (const auto& v : oracle::fixture_verdicts(CAUSALNET_FIXTURE_DIR)) {
        EXPECT_TRUE(v.passed) << v.model_id << ": " << v.failure;
        EXPECT_TRUE(v.oracle_agrees) << v.model_id;
    }
}

TEST(Oracle, SmallSuitePasses)
{
    oracle::SuiteSpec s;
    s.instances = 10;
    const auto verdicts = oracle::roundtrip_suite(s);
    EXPECT_EQ(verdicts.size(), 10 * oracle::chain_names.size());
    for (const auto& v : verdicts) EXPECT_TRUE(v.passed) << v.model_id << ": " << v.failure;
}

TEST(Oracle, InvalidInputRejectedAtValidation)
{
    // FIG1 is not an occurrence net, so the occurrence chain must refuse it.
    const auto v = oracle::run_chain_on("on-pes-on", "fig1", net("fig1.json"));
    EXPECT_FALSE(v.passed);
    EXPECT_EQ(v.failure.rfind("rejected at validation", 0), 0u) << v.failure;
    EXPECT_EQ(code_of([] { oracle::run_chain_on("pes-on-pes", "x", net("fig1.json")); }), ErrorCode::unknown_id);
}

TEST(Oracle, ChainOnGivenNet)
{
    const auto v = oracle::run_chain_on("un-bes-un", "unfix", net("unfix.json"));
    EXPECT_TRUE(v.passed) << v.failure;
    EXPECT_GE(v.stages.size(), 3u);
}
