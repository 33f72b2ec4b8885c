#include "support.hpp"

#include <filesystem>
#include <fstream>

using namespace causalnet;
using namespace causalnet::test;

namespace {

std::string parse_error_of(const std::string& text)
{
    try {
        parse_model_text(text);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::parse);
        return e.what();
    }
    ADD_FAILURE() << "accepted: " << text;
    return {};
}

}  // namespace

TEST(Io, FixturesRoundTripCanonically)
{
    for (const auto& entry : std::filesystem::directory_iterator(CAUSALNET_FIXTURE_DIR)) {
        const Model m = parse_model_file(entry.path().string());
        const std::string once = serialize_model(m);
        const Model again = parse_model_text(once);
        EXPECT_EQ(serialize_model(again), once) << entry.path();
        EXPECT_EQ(to_json(again), to_json(m)) << entry.path();
    }
}

TEST(Io, KindsAreReported)
{
    EXPECT_EQ(kind_of(parse_model_file(fixture_path("fig1.json"))), "contextual-net");
    EXPECT_EQ(kind_of(parse_model_file(fixture_path("pes_example.json"))), "pes");
    EXPECT_EQ(kind_of(parse_model_file(fixture_path("bes_example.json"))), "bes");
    EXPECT_EQ(kind_of(parse_model_file(fixture_path("res.json"))), "cdes");
    EXPECT_EQ(kind_of(Model{cdes_to_ea(cdes("res.json"))}), "ea");
}

TEST(Io, AutomatonSurvivesSerialization)
{
    const EventAutomaton ea = cdes_to_ea(cdes("grow.json"));
    EXPECT_EQ(std::get<EventAutomaton>(parse_model_text(serialize_model(ea))), ea);
}

TEST(Io, UnknownKind)
{
    EXPECT_NE(parse_error_of(R"({"kind":"widget"})").find("$.kind"), std::string::npos);
}

TEST(Io, UndeclaredPlaceIsNamed)
{
    const auto msg = parse_error_of(
        R"({"kind":"contextual-net","places":["p"],"transitions":[{"id":"t","label":"a","pre":["p"],"post":["zz"]}],"marking":{"p":1}})");
    EXPECT_NE(msg.find("$.transitions[0].post"), std::string::npos) << msg;
    EXPECT_NE(msg.find("zz"), std::string::npos) << msg;
}

TEST(Io, WrongTypeIsLocated)
{
    const auto msg = parse_error_of(R"({"kind":"pes","events":["a"],"lt":[["a",3]],"conflict":[]})");
    EXPECT_NE(msg.find("$.lt[0][1]"), std::string::npos) << msg;
}

TEST(Io, MalformedJson)
{
    parse_error_of("{");
    EXPECT_EQ(code_of([] { parse_model_file("/nonexistent/model.json"); }), ErrorCode::parse);
}

TEST(Io, WriteAndReadFile)
{
    const auto path = std::filesystem::temp_directory_path() / "causalnet_io_test.json";
    write_model_file(net("cndrop.json"), path.string());
    EXPECT_TRUE(isomorphic(std::get<ContextualNet>(parse_model_file(path.string())), net("cndrop.json")));
    std::filesystem::remove(path);
}

TEST(Io, DotMarksArcKinds)
{
    const std::string dot = to_dot(net("fig1.json"));
    EXPECT_EQ(dot.rfind("digraph", 0), 0u);
    EXPECT_NE(dot.find("\"p:s2\" -> \"t:t1\" [arrowhead=odot]"), std::string::npos);
    EXPECT_NE(dot.find("\"p:s6\" -> \"t:t1\" [dir=none]"), std::string::npos);
    EXPECT_NE(to_dot(cdes_to_ea(cdes("res.json"))).find("digraph"), std::string::npos);
}

TEST(Io, ReportJson)
{
    const auto j = to_json(validate_pcn(net("cnres.json")));
    EXPECT_FALSE(j.at("valid").get<bool>());
    EXPECT_FALSE(j.at("checks").empty());
}
