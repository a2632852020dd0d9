#include <gtest/gtest.h>

#include "query.hpp"
#include "shipped_db.hpp"

using namespace coincalc;
using query::json;
using testutil::fixture;
using testutil::shipped_db;

namespace {

json ask(const std::string& text) { return query::run(shipped_db(), json::parse(text)); }

std::vector<std::string> failing_keys(const json& report) {
  std::vector<std::string> keys;
  for (const auto& c : report.at("checks"))
    for (const auto& f : c.at("failures")) keys.push_back(f.at("key"));
  return keys;
}

}  // namespace

TEST(Query, PiSphere) {
  json r = ask(R"({"command":"pi-sphere","m":9,"n":6})");
  EXPECT_EQ(r["status"], "ok");
  EXPECT_EQ(r["payload"]["group"]["torsion"], json({24}));
  EXPECT_EQ(query::exit_code(r), 0);

  json gap = ask(R"({"command":"pi-sphere","m":40,"n":3})");
  EXPECT_EQ(gap["status"], "unknown");
  EXPECT_EQ(query::exit_code(gap), 2);
}

TEST(Query, ClassifyProjective) {
  json r = ask(R"({"command":"classify","space":"rp","nprime":6,"m":9,"f1":[1],"f2":[1]})");
  EXPECT_EQ(r["payload"]["table_row"], 3);
  EXPECT_EQ(r["payload"]["mc"], 1);
  EXPECT_EQ(r["rule_trace"], json({"projective-table-row-3", "stable-boundary-kernel"}));

  json loose = ask(R"({"command":"classify","space":"rp","nprime":6,"m":9,"f1":[12],"f2":[12]})");
  EXPECT_EQ(loose["payload"]["table_row"], 1);
  EXPECT_TRUE(loose["payload"]["loose"].get<bool>());
}

TEST(Query, ClassifySphereInfinite) {
  // pi_7(S^4) = Z + Z12; the Hopf class is not a suspension.
  json r = ask(R"({"command":"classify","space":"sphere","n":4,"m":7,"f1":[1,0],"f2":[0,0]})");
  ASSERT_EQ(r["status"], "ok");
  EXPECT_EQ(r["payload"]["mc"], "inf");
}

TEST(Query, Filtration) {
  json r = ask(R"({"command":"filtration","space":"rp","nprime":6,"m":9,"q":2})");
  EXPECT_EQ(r["payload"]["subgroup"]["group"]["torsion"], json({2}));
  EXPECT_EQ(r["payload"]["subgroup"]["generators"][0]["coords"], json({12}));
  EXPECT_EQ(r["payload"]["ambient"]["torsion"], json({24}));
  EXPECT_EQ(r["payload"]["pi_c"]["group"]["text"], "0");

  json inf = ask(R"({"command":"filtration","space":"rp","nprime":10,"m":17,"q":"inf"})");
  EXPECT_EQ(inf["payload"]["subgroup"]["group"]["torsion"], json({2}));
  EXPECT_EQ(inf["payload"]["q"], "inf");
}

TEST(Query, Grassmann) {
  json even = ask(R"({"command":"grassmann","r":6,"m":4})");
  EXPECT_EQ(even["payload"]["all_loose"], "true");
  EXPECT_EQ(even["status"], "ok");
  json odd = ask(R"({"command":"grassmann","r":5})");
  EXPECT_EQ(odd["payload"]["all_loose"], "unknown");
  EXPECT_EQ(query::exit_code(odd), 2);
}

TEST(Query, Loose) {
  json r = ask(R"({"command":"loose","space":"sphere","n":5,"m":5,"f1":[1],"f2":[1]})");
  EXPECT_TRUE(r["payload"]["loose"].get<bool>());
  EXPECT_EQ(r["rule_trace"], json({"sphere-antipodal-rule"}));
}

TEST(Query, BadRequests) {
  for (const char* text : {R"({"command":"nope"})", R"({"m":1})", R"([1,2])",
                           R"({"command":"pi-sphere","m":"x","n":2})",
                           R"({"command":"classify","space":"rp","nprime":6,"m":9,"f1":[1,2],"f2":[1]})",
                           R"({"command":"filtration","space":"sphere","n":4,"m":7,"q":0})",
                           R"({"command":"pi-space","space":"torus","m":3})"}) {
    json r = ask(text);
    EXPECT_EQ(r["status"], "error") << text;
    EXPECT_EQ(r["error_kind"], "invalid_argument") << text;
    EXPECT_EQ(query::exit_code(r), 1);
  }
}

TEST(Query, HumanRendering) {
  std::string text = query::render_human(ask(R"({"command":"pi-sphere","m":9,"n":6})"));
  EXPECT_NE(text.find("pi_9(S^6) = Z24"), std::string::npos);
  std::string err = query::render_human(ask(R"({"command":"nope"})"));
  EXPECT_EQ(err.rfind("error: ", 0), 0u);
}

TEST(Query, Deterministic) {
  const char* text = R"({"command":"filtration","space":"sphere","n":6,"m":14,"q":3})";
  EXPECT_EQ(ask(text).dump(), ask(text).dump());
}

TEST(ValidateDb, ShippedPasses) {
  json r = query::validate_database(shipped_db());
  EXPECT_TRUE(r["passed"].get<bool>()) << r.dump(2);
  for (const auto& c : r["checks"]) EXPECT_GT(c["instances"].get<int>(), 0) << c["name"];
}

TEST(ValidateDb, SeededFaults) {
  struct Case {
    const char* file;
    const char* check;
    const char* key;
  };
  for (const Case& c : {Case{"freudenthal_fault.json", "load", "suspension(m=8,n=5)"},
                        Case{"range_hole.json", "load", "pi_8(S^5)"},
                        Case{"bad_torsion_chain.json", "load", "pi_9(S^6)"},
                        Case{"antipodal_not_involution.json", "antipodal-involution", "antipodal(m=7,n=4)"},
                        Case{"stability_inconsistent.json", "stability-consistency", "stable_suspension(m=8,n=5)"},
                        Case{"stiefel_inexact.json", "exactness", "exactness(K=R,m=9,n'=6)"}}) {
    json r = query::validate_db_file(fixture(c.file));
    EXPECT_FALSE(r["passed"].get<bool>()) << c.file;
    EXPECT_EQ(failing_keys(r), std::vector<std::string>{c.key}) << c.file;
    for (const auto& check : r["checks"])
      EXPECT_EQ(check["passed"].get<bool>(), check["name"] != c.check) << c.file << " " << check["name"];
  }
  for (const char* ok : {"small_valid.json", "stiefel_exactness.json", "empty.json"})
    EXPECT_TRUE(query::validate_db_file(fixture(ok))["passed"].get<bool>()) << ok;
}

TEST(ValidateDb, MissingFile) {
  json r = query::validate_db_file(fixture("does_not_exist.json"));
  EXPECT_FALSE(r["passed"].get<bool>());
}
