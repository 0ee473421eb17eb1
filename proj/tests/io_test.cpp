#include <gtest/gtest.h>

#include "alcove/io.hpp"
#include "alcove/verify.hpp"

using namespace alcove;

TEST(Json, RootsSchema) {
    io::Json j = io::roots_json(build_root_system("G2"));
    EXPECT_EQ(j["schema"], "alcove.roots");
    EXPECT_EQ(j["schema_version"], io::kSchemaVersion);
    EXPECT_EQ(j["dual_coxeter"], 4);
    EXPECT_EQ(j["positive_roots"].size(), 6u);
    EXPECT_EQ(j["comarks"], io::Json::array({1, 2}));
}

TEST(Json, FacesSchema) {
    io::Json j = io::faces_json(build_root_system("A2"));
    EXPECT_EQ(j["schema"], "alcove.faces");
    EXPECT_EQ(j["faces"].size(), 7u);
    for (const auto& f : j["faces"]) EXPECT_EQ(f["isotropy_order"], f["isotropy_order_lattice"]);
}

TEST(Json, GridNullsNonRegularColumns) {
    WeylGroup W(build_root_system("A1"));
    CharacterTable t = character_table(W, 1, GridMode::Full);
    io::Json j = io::grid_json(W.root_system(), t);
    EXPECT_EQ(j["grid"], "full");
    ASSERT_EQ(j["points"].size(), 6u);
    for (std::size_t c = 0; c < 6; ++c) EXPECT_EQ(j["values"][0][c].is_null(), !j["points"][c]["regular"].get<bool>());
    EXPECT_EQ(j.dump(), io::grid_json(W.root_system(), character_table(W, 1, GridMode::Full)).dump());
}

TEST(Json, FusionTriples) {
    WeylGroup W(build_root_system("A1"));
    FusionTable t = fusion_table(VerlindeContext(W, 1));
    io::Json j = io::fusion_json(W.root_system(), t, {{1, 1}});
    ASSERT_EQ(j["coefficients"].size(), 1u);
    EXPECT_EQ(j["coefficients"][0]["c"], io::Json::array({"0"}));  // exact rationals as strings
    EXPECT_EQ(j["invariant_violations"].size(), 0u);
}

TEST(Json, ReportsAggregatePassed) {
    VerifyConfig cfg;
    cfg.systems = {parse_cartan_type("A1")};
    cfg.levels = {1};
    cfg.samples = 5;
    cfg.suites = {"fundamental", "isotropy"};
    io::Json j = io::reports_json(run_verification(cfg));
    EXPECT_EQ(j["schema"], "alcove.verify");
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["reports"].size(), 2u);
}

TEST(Csv, Formatting) {
    EXPECT_EQ(io::csv_complex(ComplexValue(1.0, -0.5)), "1-0.5i");
    EXPECT_EQ(io::csv_complex(ComplexValue(0.25, 2.0)), "0.25+2i");
    EXPECT_EQ(io::csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(io::csv_field("say \"x\""), "\"say \"\"x\"\"\"");
    EXPECT_EQ(io::csv_row({"x", "y"}), "x,y\n");
}

TEST(Csv, FusionSlab) {
    WeylGroup W(build_root_system("A1"));
    FusionTable t = fusion_table(VerlindeContext(W, 1));
    std::string csv = io::fusion_csv(t, {{1, 1}});
    EXPECT_NE(csv.find("\n(1),(1),1,0\n"), std::string::npos) << csv;
}
