#include "support.hpp"

using namespace causalnet;
using namespace causalnet::test;

namespace {

Family all_subsets_of_abc()
{
    Family f;
    for (int mask = 0; mask < 8; ++mask) {
        EventSet s;
        if (mask & 1) s.insert("a");
        if (mask & 2) s.insert("b");
        if (mask & 4) s.insert("c");
        f.insert(s);
    }
    return f;
}

}  // namespace

TEST(EsCore, ResConfigurations)
{
    Family expected = all_subsets_of_abc();
    expected.erase({"a", "b"});
    EXPECT_EQ(es_configurations(cdes("res.json")).family(), expected);
}

TEST(EsCore, DropConfigurations)
{
    Family expected = all_subsets_of_abc();
    expected.erase({"c"});
    EXPECT_EQ(es_configurations(cdes("drop.json")).family(), expected);
}

TEST(EsCore, GrowConfigurations)
{
    EXPECT_EQ(es_configurations(cdes("grow.json")).family(), all_subsets_of_abc());
}

TEST(EsCore, ContextOfEntry)
{
    const auto res = cdes("res.json");
    EXPECT_EQ(cxt(res.entries("a").front()), (EventSet{"b"}));
    EXPECT_EQ(cxt(res.entries("c").front()), EventSet{});
}

TEST(EsCore, EnablingFollowsContextPairs)
{
    const auto res = cdes("res.json");
    EXPECT_TRUE(cdes_enabled(res, {}, "a"));
    EXPECT_FALSE(cdes_enabled(res, {"b"}, "a"));
    EXPECT_TRUE(cdes_enabled(res, {"b", "c"}, "a"));
    EXPECT_FALSE(cdes_enabled(res, {"a"}, "a"));
    const auto drop = cdes("drop.json");
    EXPECT_FALSE(cdes_enabled(drop, {}, "c"));
    EXPECT_TRUE(cdes_enabled(drop, {"a"}, "c"));
    EXPECT_TRUE(cdes_enabled(drop, {"b"}, "c"));
    EXPECT_EQ(code_of([&] { cdes_enabled(drop, {}, "z"); }), ErrorCode::unknown_id);
}

TEST(EsCore, EveryEntryMustBeSatisfied)
{
    // Two entries for c: needs a, and needs b.
    const Cdes two({"a", "b", "c"}, {},
                   {{"c", {Entry{{EventSet{}, EventSet{"a"}}}, Entry{{EventSet{}, EventSet{"b"}}}}}});
    EXPECT_FALSE(is_elementary(two));
    EXPECT_FALSE(cdes_enabled(two, {"a"}, "c"));
    EXPECT_TRUE(cdes_enabled(two, {"a", "b"}, "c"));
}

TEST(EsCore, WitnessIsLexicographicallyLeast)
{
    const auto confs = es_configurations(cdes("grow.json"));
    EXPECT_EQ(confs.witnesses.at({"a", "b", "c"}), (Trace{"a", "b", "c"}));
    const auto drop = es_configurations(cdes("drop.json"));
    EXPECT_EQ(drop.witnesses.at({"b", "c"}), (Trace{"b", "c"}));
    EXPECT_EQ(drop.witnesses.at({"a", "c"}), (Trace{"a", "c"}));
}

TEST(EsCore, SizeBoundCapsCardinality)
{
    const auto confs = es_configurations(cdes("grow.json"), 1);
    EXPECT_EQ(confs.size(), 4u);
}

TEST(EsCore, PesConfigurationsAreLeftClosedConflictFree)
{
    const Pes pes({"a", "b", "c"}, {{"b", "c"}}, {{"a", "b"}, {"a", "c"}});
    EXPECT_TRUE(validate_es(pes).valid());
    EXPECT_EQ(es_configurations(pes).family(), family({{}, {"a"}, {"b"}, {"b", "c"}}));
}

TEST(EsCore, PesConflictMustBeInherited)
{
    const Pes pes({"a", "b", "c"}, {{"b", "c"}}, {{"a", "b"}});
    const auto r = validate_es(pes);
    EXPECT_FALSE(r.valid());
    EXPECT_FALSE(r.passed("conflict hereditary"));
}

TEST(EsCore, PesCausalityIsClosed)
{
    const Pes pes({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {});
    EXPECT_TRUE(pes.precedes("a", "c"));
    const Pes cyclic({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {});
    EXPECT_FALSE(validate_es(cyclic).passed("causality irreflexive"));
}

TEST(EsCore, BesBundleMembersMustConflict)
{
    const Bes ok({"a", "b", "c"}, {{{"a", "b"}, "c"}}, {{"a", "b"}});
    EXPECT_TRUE(validate_es(ok).valid());
    EXPECT_EQ(es_configurations(ok).family(), family({{}, {"a"}, {"b"}, {"a", "c"}, {"b", "c"}}));
    const Bes bad({"a", "b", "c"}, {{{"a", "b"}, "c"}}, {});
    EXPECT_FALSE(validate_es(bad).passed("bundle members pairwise in conflict"));
}

TEST(EsCore, CdesValidation)
{
    EXPECT_TRUE(validate_es(cdes("res.json")).valid());
    const Cdes nonfunctional({"a", "b"}, {}, {{"a", {Entry{{EventSet{}, EventSet{}}, {EventSet{}, EventSet{"b"}}}}}});
    EXPECT_FALSE(validate_es(nonfunctional).passed("entries functional"));
    const Cdes conflicting({"a", "b", "c"}, {{"a", "b"}}, {{"c", {Entry{{EventSet{"a", "b"}, EventSet{}}}}}});
    EXPECT_FALSE(validate_es(conflicting).passed("contexts conflict-free"));
}

TEST(EsCore, UndeclaredEventRejectedOnConstruction)
{
    EXPECT_EQ(code_of([] { Pes({"a"}, {{"a", "z"}}, {}); }), ErrorCode::invalid_model);
}

TEST(EsCore, Elementarity)
{
    EXPECT_TRUE(is_elementary(cdes("res.json")));
    const Cdes empty;
    EXPECT_TRUE(is_elementary(empty));
    EXPECT_EQ(es_configurations(empty).family(), family({{}}));
}

TEST(EsCore, ElementarizeKeepsConfigurations)
{
    const Cdes two({"a", "b", "c"}, {},
                   {{"c", {Entry{{EventSet{}, EventSet{"a"}}}, Entry{{EventSet{}, EventSet{"b"}}}}}});
    const Cdes e = elementarize(two);
    EXPECT_TRUE(is_elementary(e));
    EXPECT_EQ(es_configurations(e).family(), es_configurations(two).family());
    EXPECT_TRUE(cdes_equiv(e, two).equivalent);
}

TEST(EsCore, PesAsBes)
{
    const Pes pes({"a", "b", "c"}, {{"b", "c"}}, {{"a", "b"}, {"a", "c"}});
    EXPECT_EQ(es_configurations(pes_as_bes(pes)).family(), es_configurations(pes).family());
}
