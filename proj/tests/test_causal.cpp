#include "support.hpp"

#include <algorithm>

using namespace causalnet;
using namespace causalnet::test;

TEST(CausalNets, PrecOfPcnExample)
{
    EXPECT_EQ(prec(net("pcn_example.json")), (Relation{{"t3", "t1"}, {"t1", "t4"}, {"t2", "t4"}, {"t3", "t4"}}));
}

TEST(CausalNets, PrecOfDrop)
{
    EXPECT_EQ(prec(net("cndrop.json")), (Relation{{"t1", "t2"}, {"t4", "t3"}}));
}

TEST(CausalNets, LabelViews)
{
    const auto v = label_views(net("cndrop.json"), "t3");
    EXPECT_EQ(v.inhibitor_producers, EventSet{"b"});
    EXPECT_EQ(v.read_producers, EventSet{"a"});
    EXPECT_TRUE(v.inhibitor_consumers.empty());
}

TEST(CausalNets, ValidFixtures)
{
    for (const char* f : {"pcn_example.json", "cndrop.json", "cngrow.json"}) {
        const auto v = validate_cn(net(f));
        EXPECT_TRUE(v.report.valid()) << f << ": " << v.report.first_failure();
    }
}

TEST(CausalNets, ResNetFailsSharedPreset)
{
    const auto r = validate_pcn(net("cnres.json"));
    EXPECT_FALSE(r.valid());
    EXPECT_FALSE(r.passed("conflict shares a preset place"));
    EXPECT_TRUE(r.passed("flow-flat"));
}

TEST(CausalNets, PrecCycleRejected)
{
    // a reads what b produces and b is inhibited by what a consumes.
    const ContextualNet n({"p", "q", "r", "s"},
                          {{"a", "a", {"p"}, {"s"}, {}, {"r"}}, {"b", "b", {"q"}, {"r"}, {"p"}, {}}},
                          {{"p", 1}, {"q", 1}});
    EXPECT_FALSE(validate_pcn(n).passed("prec antisymmetric"));
}

TEST(CausalNets, ClassifyTranslations)
{
    const auto oc = classify_cn(on_to_cn(net("onfix.json")));
    EXPECT_TRUE(oc.occurrence_causal);
    EXPECT_TRUE(oc.plainly_caused);
    const auto pc = classify_cn(un_to_cn(net("unfix.json")));
    EXPECT_FALSE(pc.occurrence_causal);
    EXPECT_TRUE(pc.plainly_caused);
    std::string why;
    EXPECT_TRUE(is_well_behaved(net("cndrop.json"), &why)) << why;
    EXPECT_TRUE(classify_cn(net("cndrop.json")).well_behaved);
}

TEST(CausalNets, PesRoundTrip)
{
    const auto pes = load<Pes>("pes_example.json");
    const auto cn = pes_to_cn(pes);
    EXPECT_TRUE(validate_cn(cn).report.valid());
    EXPECT_EQ(cn_to_pes(cn), pes);
    EXPECT_EQ(on_to_pes(cn_to_on(cn)), pes);
}

TEST(CausalNets, OnRoundTripKeepsConfigurations)
{
    const auto on = net("onfix.json");
    EXPECT_EQ(configuration_sets(on_to_cn(on)), configuration_sets(on));
    EXPECT_EQ(on_to_pes(cn_to_on(on_to_cn(on))), on_to_pes(on));
}

TEST(CausalNets, NotOccurrenceCausal)
{
    EXPECT_EQ(code_of([] { cn_to_pes(un_to_cn(net("unfix.json"))); }), ErrorCode::not_occurrence_causal);
}

TEST(CausalNets, IniMaxBund)
{
    const auto cn = un_to_cn(net("unfix.json"));
    const auto ib = ini_maxbund(cn, "c");
    EXPECT_EQ(ib.ini, (EventSet{"a", "b"}));
    EXPECT_EQ(ib.max_bund, family({{"a", "b"}}));
}

TEST(CausalNets, UnravelToBesAgrees)
{
    const auto un = net("unfix.json");
    EXPECT_EQ(cn_to_bes(un_to_cn(un)), un_to_bes(un));
}

TEST(CausalNets, BesRoundTrip)
{
    const auto bes = load<Bes>("bes_example.json");
    EXPECT_EQ(cn_to_bes(bes_to_cn(bes)), bes);
}

TEST(CausalNets, BesRoundTripCounterexample)
{
    // c conflicts with a only, so the maximal bundles of t become {a,b} and {a,c}.
    const Bes bes({"a", "b", "c", "t"}, {{{"a", "b"}, "t"}, {{"c"}, "t"}},
                  {unordered("a", "b"), unordered("a", "c")});
    ASSERT_TRUE(validate_es(bes).valid());
    const Bes back = cn_to_bes(bes_to_cn(bes));
    EXPECT_NE(back, bes);
    const auto bundles = back.bundles_of("t");
    EXPECT_NE(std::find(bundles.begin(), bundles.end(), EventSet{"a", "c"}), bundles.end());
    // a never coexists with t in the net, so the extra bundle adds no configuration.
    EXPECT_TRUE(back.in_conflict("a", "t"));
    EXPECT_EQ(es_configurations(back).family(), es_configurations(bes).family());
}

TEST(CausalNets, CdesToCnMatchesFixtures)
{
    EXPECT_TRUE(isomorphic(cdes_to_cn(cdes("drop.json")), net("cndrop.json")));
    EXPECT_TRUE(isomorphic(cdes_to_cn(cdes("grow.json")), net("cngrow.json")));
    EXPECT_TRUE(isomorphic(cdes_to_cn(cdes("res.json")), net("cnres.json")));
}

TEST(CausalNets, CdesToCnKeepsConfigurations)
{
    for (const char* f : {"res.json", "drop.json", "grow.json"})
        EXPECT_EQ(configuration_sets(cdes_to_cn(cdes(f))), es_configurations(cdes(f)).family()) << f;
}

TEST(CausalNets, CnToCdes)
{
    const Cdes back = cn_to_cdes(net("cndrop.json"));
    EXPECT_TRUE(cdes_equiv(back, cdes("drop.json")).equivalent);
    ASSERT_EQ(back.entries("c").size(), 1u);
    EXPECT_EQ(back, cdes("drop.json"));
}

TEST(CausalNets, NonElementaryRejected)
{
    const Cdes two({"a", "b", "c"}, {},
                   {{"c", {Entry{{EventSet{}, EventSet{"a"}}}, Entry{{EventSet{}, EventSet{"b"}}}}}});
    EXPECT_EQ(code_of([&] { cdes_to_cn(two); }), ErrorCode::not_elementary);
}
