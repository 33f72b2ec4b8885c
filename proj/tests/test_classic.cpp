#include "support.hpp"

using namespace causalnet;
using namespace causalnet::test;

TEST(ClassicNets, OccurrenceNetFixture)
{
    const auto v = validate_on(net("onfix.json"));
    ASSERT_TRUE(v.report.valid()) << v.report.first_failure();
    ASSERT_TRUE(v.view);
    EXPECT_EQ(v.view->conflict, (PairSet{unordered("a", "b"), unordered("a", "c")}));
    EXPECT_EQ(v.view->immediate_conflict, (PairSet{unordered("a", "b")}));
    EXPECT_EQ(v.view->causality, (Relation{{"b", "c"}}));
}

TEST(ClassicNets, ConditionWithTwoProducersIsNotOccurrence)
{
    const ContextualNet n({"p", "q", "r"},
                          {{"a", "a", {"p"}, {"r"}, {}, {}}, {"b", "b", {"q"}, {"r"}, {}, {}}},
                          {{"p", 1}, {"q", 1}});
    EXPECT_FALSE(validate_on(n).report.valid());
}

TEST(ClassicNets, ContextualNetIsNotOccurrence)
{
    const auto v = validate_on(net("fig1.json"));
    EXPECT_FALSE(v.report.valid());
    EXPECT_FALSE(v.view);
}

TEST(ClassicNets, OnToPes)
{
    const Pes p = on_to_pes(net("onfix.json"));
    EXPECT_EQ(p, load<Pes>("pes_example.json"));
}

TEST(ClassicNets, PesToOnPlaces)
{
    const auto on = pes_to_on(load<Pes>("pes_example.json"));
    EXPECT_EQ(on.places().size(), 9u);
    EXPECT_TRUE(on.places().count(place_names::input("a")));
    EXPECT_TRUE(on.places().count(place_names::output("c")));
    EXPECT_TRUE(on.places().count(place_names::order("b", "c")));
    EXPECT_TRUE(on.places().count(place_names::conflict("a", "b")));
    EXPECT_TRUE(validate_on(on).report.valid());
    EXPECT_EQ(on_to_pes(on), load<Pes>("pes_example.json"));
}

TEST(ClassicNets, UnravelNetFixture)
{
    const auto v = validate_un(net("unfix.json"));
    ASSERT_TRUE(v.report.valid()) << v.report.first_failure();
    EXPECT_EQ(v.view->conflict, (PairSet{unordered("a", "b")}));
    EXPECT_FALSE(validate_on(net("unfix.json")).report.valid());
}

TEST(ClassicNets, OccurrenceNetIsUnravel)
{
    EXPECT_TRUE(validate_un(net("onfix.json")).report.valid());
}

TEST(ClassicNets, UnravelPropositions)
{
    EXPECT_TRUE(check_unravel_propositions(net("unfix.json")).valid());
}

TEST(ClassicNets, UnCauses)
{
    const auto un = net("unfix.json");
    EXPECT_EQ(un_causes(un, "c"), family({{"a"}, {"b"}}));
    EXPECT_EQ(un_causes(un, "a"), family({{}}));
}

TEST(ClassicNets, UnToBes)
{
    const Bes b = un_to_bes(net("unfix.json"));
    EXPECT_EQ(b, load<Bes>("bes_example.json"));
    EXPECT_EQ(es_configurations(b).family(), configuration_sets(net("unfix.json")));
}

TEST(ClassicNets, BesToUn)
{
    const auto bes = load<Bes>("bes_example.json");
    const auto un = bes_to_un(bes);
    EXPECT_TRUE(validate_un(un).report.valid());
    EXPECT_EQ(un_to_bes(un), bes);
}

TEST(ClassicNets, DeadBesEventRejected)
{
    const Bes dead({"a", "b"}, {{{"a"}, "b"}}, {{"a", "b"}});
    EXPECT_EQ(code_of([&] { bes_to_un(dead); }), ErrorCode::unfirable_event);
}

TEST(ClassicNets, EmptyStructures)
{
    const auto on = pes_to_on(Pes{});
    EXPECT_TRUE(on.places().empty());
    EXPECT_TRUE(on.transitions().empty());
    EXPECT_EQ(un_to_bes(bes_to_un(Bes{})), Bes{});
}
