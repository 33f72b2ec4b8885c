#include "support.hpp"

using namespace causalnet;
using namespace causalnet::test;

TEST(NetCore, Fig1FiringFromInitialMarking)
{
    const auto fig1 = net("fig1.json");
    const Marking m0 = fig1.initial();
    EXPECT_FALSE(enabled(fig1, m0, "t1"));  // s2 marked, s6 empty
    EXPECT_TRUE(enabled(fig1, m0, "t2"));
    EXPECT_TRUE(enabled(fig1, m0, "t3"));
    const Marking m1 = fire(fig1, m0, "t3");
    EXPECT_EQ(m1, (Marking{{"s1", 1}, {"s6", 1}}));
    EXPECT_TRUE(enabled(fig1, m1, "t1"));
    EXPECT_EQ(fire(fig1, m1, "t1"), (Marking{{"s4", 1}, {"s6", 1}}));
}

TEST(NetCore, FireDisabledNamesBlockingPlace)
{
    const auto fig1 = net("fig1.json");
    try {
        fire(fig1, fig1.initial(), "t1");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::not_enabled);
        EXPECT_NE(std::string(e.what()).find("s6"), std::string::npos);
    }
}

TEST(NetCore, UnknownTransition)
{
    const auto fig1 = net("fig1.json");
    EXPECT_EQ(code_of([&] { enabled(fig1, fig1.initial(), "nope"); }), ErrorCode::unknown_id);
}

TEST(NetCore, ReadAndConsumeSamePlaceNeedsTwoTokens)
{
    const ContextualNet n({"p", "q"}, {{"t", "a", {"p"}, {"q"}, {}, {"p"}}}, {{"p", 1}});
    EXPECT_FALSE(enabled(n, {{"p", 1}}, "t"));
    EXPECT_TRUE(enabled(n, {{"p", 2}}, "t"));
}

TEST(NetCore, EmptyPresetRejected)
{
    EXPECT_EQ(code_of([] { ContextualNet({"p"}, {{"t", "a", {}, {"p"}, {}, {}}}, {}); }),
              ErrorCode::invalid_model);
}

TEST(NetCore, Fig1Behaviour)
{
    const auto b = behaviour(net("fig1.json"));
    EXPECT_TRUE(b.complete);
    const std::set<State> states{{}, {{"t2", 1}}, {{"t3", 1}}, {{"t1", 1}, {"t3", 1}}};
    EXPECT_EQ(b.states, states);
    EXPECT_EQ(b.maximal_states(), (std::set<State>{{{"t2", 1}}, {{"t1", 1}, {"t3", 1}}}));
    EXPECT_EQ(b.configurations, (std::set<Configuration>{{}, {{"a", 1}}, {{"a", 1}, {"b", 1}}}));
    EXPECT_EQ(b.traces, (std::set<Trace>{{}, {"a"}, {"a", "b"}}));
    EXPECT_EQ(b.firing_sequences.size(), 4u);
}

TEST(NetCore, NoTransitionsGivesOnlyEmptySequence)
{
    const ContextualNet n({"p"}, {}, {{"p", 1}});
    const auto b = behaviour(n);
    EXPECT_EQ(b.firing_sequences.size(), 1u);
    EXPECT_EQ(b.configurations, (std::set<Configuration>{{}}));
}

TEST(NetCore, UnboundedNetFlagsIncomplete)
{
    const ContextualNet n({"p"}, {{"t", "a", {"p"}, {"p"}, {}, {}}}, {{"p", 1}});
    const auto b = behaviour(n, {5, 1000});
    EXPECT_FALSE(b.complete);
    EXPECT_EQ(code_of([&] { explore_complete(n, {5, 1000}); }), ErrorCode::bound_exceeded);
}

TEST(NetCore, Fig1ClassificationAndConflict)
{
    const auto fig1 = net("fig1.json");
    const NetClass c = classify(fig1);
    EXPECT_TRUE(c.safe);
    EXPECT_TRUE(c.single_execution);
    EXPECT_TRUE(c.unfolding);
    EXPECT_FALSE(c.conflict_saturated);  // t1 and t2 conflict with no shared preset place
    EXPECT_EQ(semantic_conflict(fig1), (PairSet{{"t1", "t2"}, {"t2", "t3"}}));
}

TEST(NetCore, SaturationAddsPlacePerConflictAndKeepsStates)
{
    const auto fig1 = net("fig1.json");
    const auto sat = saturate_conflicts(fig1);
    EXPECT_EQ(sat.places().size(), fig1.places().size() + 2);
    EXPECT_TRUE(classify(sat).conflict_saturated);
    EXPECT_TRUE(net_equiv(fig1, sat).equivalent);
}

TEST(NetCore, SaturationRejectsRepeatedFiring)
{
    const ContextualNet n({"p"}, {{"t", "a", {"p"}, {"p"}, {}, {}}}, {{"p", 1}});
    EXPECT_EQ(code_of([&] { saturate_conflicts(n, {3, 100}); }), ErrorCode::bound_exceeded);
    const ContextualNet twice({"p"}, {{"t", "a", {"p"}, {}, {}, {}}}, {{"p", 2}});
    EXPECT_EQ(code_of([&] { saturate_conflicts(twice); }), ErrorCode::not_single_execution);
}

TEST(NetCore, SubnetRestrictsArcs)
{
    const auto fig1 = net("fig1.json");
    const auto sub = subnet(fig1, {"t1", "t3"});
    EXPECT_EQ(sub.places(), (std::set<PlaceId>{"s1", "s2", "s3", "s4", "s6"}));
    EXPECT_EQ(sub.transition("t1").inhibit, (std::set<PlaceId>{"s2"}));
    const auto only = subnet(fig1, {"t2"});
    EXPECT_EQ(only.places(), (std::set<PlaceId>{"s2", "s5"}));
    EXPECT_EQ(subnet(fig1, {}).places().size(), 0u);
}

TEST(NetCore, EquivWitnessOnDifferentStates)
{
    const auto fig1 = net("fig1.json");
    const ContextualNet other({"s1", "s2", "s3", "s4", "s5", "s6"},
                              {{"t1", "b", {"s1"}, {"s4"}, {}, {}},
                               {"t2", "a", {"s2"}, {"s5"}, {}, {}},
                               {"t3", "a", {"s2", "s3"}, {"s6"}, {}, {}}},
                              fig1.initial());
    const auto r = net_equiv(fig1, other);
    EXPECT_FALSE(r.equivalent);
    EXPECT_FALSE(r.witness.empty());
    EXPECT_TRUE(net_equiv(fig1, fig1).equivalent);
}

TEST(NetCore, IsomorphismIgnoresNames)
{
    const ContextualNet a({"p", "q"}, {{"x", "a", {"p"}, {"q"}, {}, {}}}, {{"p", 1}});
    const ContextualNet b({"u", "v"}, {{"y", "a", {"u"}, {"v"}, {}, {}}}, {{"u", 1}});
    const ContextualNet c({"u", "v"}, {{"y", "a", {"u"}, {"v"}, {}, {}}}, {{"v", 1}});
    EXPECT_TRUE(isomorphic(a, b));
    EXPECT_FALSE(isomorphic(a, c));
}

TEST(NetCore, BoundsFromEnvironment)
{
    setenv("CAUSALNET_BOUNDS", "7,99", 1);
    auto b = Bounds::from_env();
    EXPECT_EQ(b.max_depth, 7u);
    EXPECT_EQ(b.max_sequences, 99u);
    setenv("CAUSALNET_BOUNDS", "junk", 1);
    b = Bounds::from_env();
    EXPECT_EQ(b.max_depth, 32u);
    unsetenv("CAUSALNET_BOUNDS");
}
