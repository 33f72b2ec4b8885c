#include "support.hpp"

using namespace causalnet;
using namespace causalnet::test;

namespace {

// Round-trip counterexample for the plain inhibition set, kept small.
Cdes tricky()
{
    return Cdes({"e", "x", "y"}, {},
                {{"e", {Entry{{EventSet{}, EventSet{}}, {EventSet{"x"}, EventSet{"e"}}}}},
                 {"x", {Entry{{EventSet{"e"}, EventSet{}}, {EventSet{"y"}, EventSet{}}, {EventSet{"e", "y"}, EventSet{"x"}}}}},
                 {"y", {Entry{{EventSet{}, EventSet{}}, {EventSet{"x"}, EventSet{"y"}}}}}});
}

}  // namespace

TEST(EaCore, GrowAutomatonMissesLateStep)
{
    const auto ea = cdes_to_ea(cdes("grow.json"));
    EXPECT_EQ(ea.states().size(), 8u);
    EXPECT_TRUE(ea.has_step({}, {"c"}));
    EXPECT_TRUE(ea.has_step({"a", "b"}, {"a", "b", "c"}));
    EXPECT_FALSE(ea.has_step({"b"}, {"b", "c"}));
    EXPECT_TRUE(ea.initial().empty());
}

TEST(EaCore, OrderedStatesBySizeThenLex)
{
    const auto order = ordered_states(cdes_to_ea(cdes("drop.json")));
    ASSERT_EQ(order.size(), 7u);
    EXPECT_EQ(order[0], EventSet{});
    EXPECT_EQ(order[1], EventSet{"a"});
    EXPECT_EQ(order[2], EventSet{"b"});
    EXPECT_EQ(order.back(), (EventSet{"a", "b", "c"}));
}

TEST(EaCore, GrowAllowAndInhibit)
{
    const auto ea = cdes_to_ea(cdes("grow.json"));
    EXPECT_EQ(allow_set(ea, "c"), family({{}, {"a"}, {"a", "b"}}));
    EXPECT_EQ(inhib_set(ea, "c"), family({{"b"}}));
}

TEST(EaCore, ResAllowAndInhibit)
{
    const auto ea = cdes_to_ea(cdes("res.json"));
    EXPECT_EQ(allow_set(ea, "a"), family({{}, {"c"}, {"b", "c"}}));
    EXPECT_EQ(inhib_set(ea, "a"), family({{"b"}}));
}

TEST(EaCore, AnalysisOfTranslatedAutomaton)
{
    const auto a = analyze_ea(cdes_to_ea(cdes("res.json")));
    EXPECT_TRUE(a.simple);
    EXPECT_TRUE(a.complete);
    EXPECT_TRUE(a.finitely_caused);
    EXPECT_TRUE(a.finitely_inhibited);
    EXPECT_TRUE(a.conflict.empty());
    EXPECT_TRUE(a.witness.empty());
}

TEST(EaCore, ConflictFromMissingUnion)
{
    const EventAutomaton ea({"a", "b"}, {{}, {"a"}, {"b"}}, {{{}, {"a"}}, {{}, {"b"}}}, {});
    const auto a = analyze_ea(ea);
    EXPECT_EQ(a.conflict, (PairSet{unordered("a", "b")}));
    const Cdes back = ea_to_cdes(ea);
    EXPECT_TRUE(back.in_conflict("a", "b"));
    EXPECT_EQ(es_configurations(back).family(), family({{}, {"a"}, {"b"}}));
}

TEST(EaCore, RoundTripsOfFixtures)
{
    for (const char* f : {"res.json", "drop.json", "grow.json"}) {
        const Cdes c = cdes(f);
        const Cdes back = ea_to_cdes(cdes_to_ea(c));
        EXPECT_TRUE(cdes_equiv(c, back).equivalent) << f;
        EXPECT_EQ(cdes_to_ea(back), cdes_to_ea(c)) << f;
    }
}

TEST(EaCore, GrowEntryForC)
{
    const Cdes back = ea_to_cdes(cdes_to_ea(cdes("grow.json")));
    ASSERT_EQ(back.entries("c").size(), 1u);
    EXPECT_EQ(cxt(back.entries("c").front()), (EventSet{"a", "b"}));
    EXPECT_FALSE(cdes_enabled(back, {"b"}, "c"));
    EXPECT_TRUE(cdes_enabled(back, {"a", "b"}, "c"));
}

TEST(EaCore, PlainInhibitionSetMissesState)
{
    const auto ea = cdes_to_ea(tricky());
    ASSERT_TRUE(ea.states().count({"x", "y"}));
    EXPECT_FALSE(ea.has_step({"x", "y"}, {"e", "x", "y"}));
    // {x,y} is not listed as inhibiting e, yet its context projection is allowed.
    EXPECT_FALSE(inhib_set(ea, "e").count({"x", "y"}));
    const Cdes back = ea_to_cdes(ea);
    EXPECT_FALSE(cdes_enabled(back, {"x", "y"}, "e"));
    EXPECT_EQ(cdes_to_ea(back), ea);
}

TEST(EaCore, PropertyViolations)
{
    // Not complete: {a} unreachable.
    const EventAutomaton orphan({"a"}, {{}, {"a"}}, {}, {});
    EXPECT_FALSE(analyze_ea(orphan).complete);
    EXPECT_EQ(code_of([&] { ea_to_cdes(orphan); }), ErrorCode::property_violation);
    // Not simple: a two-event step.
    const EventAutomaton jump({"a", "b"}, {{}, {"a", "b"}}, {{{}, {"a", "b"}}}, {});
    EXPECT_FALSE(analyze_ea(jump).simple);
    EXPECT_EQ(code_of([&] { ea_to_cdes(jump); }), ErrorCode::property_violation);
}

TEST(EaCore, MalformedAutomatonRejected)
{
    EXPECT_EQ(code_of([] { EventAutomaton({"a"}, {{}}, {{{}, {"a"}}}, {}); }), ErrorCode::invalid_model);
}

TEST(EaCore, EquivalenceWitness)
{
    const auto r = cdes_equiv(cdes("res.json"), cdes("drop.json"));
    EXPECT_FALSE(r.equivalent);
    EXPECT_FALSE(r.witness.empty());
}
