#include <sstream>

#include "doctest.h"
#include "nct/io.hpp"

using namespace nct;

TEST_CASE("family serialization carries kind and parameter") {
  auto f = build_covering_family(Provenance::EvenBasic, 8, Group::S);
  json j = to_json(f);
  CHECK(j["n"] == 8);
  CHECK(j["group"] == "S");
  CHECK(j["provenance"] == "even-basic");
  REQUIRE(j["members"].size() == 3);
  CHECK(j["members"][0]["kind"] == "intransitive");
  CHECK(j["members"][0]["param"] == 1);
  CHECK(j["members"][2]["kind"] == "imprimitive");
  CHECK(j["members"][2]["param"] == 2);
}

TEST_CASE("bracket rows round through both encodings") {
  auto br = gamma_bracket(38, Group::S);
  json row = bracket_row(br);
  CHECK(row["lower"] == 10);
  CHECK(row["upper"] == 10);
  CHECK(row["closed_form"] == 10);

  std::ostringstream csv;
  write_csv(csv, bracket_columns(), {row});
  std::string text = csv.str();
  CHECK(text.rfind("# nct-schema=1\n", 0) == 0);
  CHECK(text.find("38,S,10") != std::string::npos);

  std::ostringstream js;
  write_json(js, {row});
  json parsed = json::parse(js.str());
  REQUIRE(parsed.is_array());
  CHECK(parsed[0]["n"] == 38);
}

TEST_CASE("extremal rows expose the characteristic vector") {
  ExtremalProblem p{ExtremalVariant::CoprimeSumFree, 6};
  auto r = max_extremal(p);
  json row = extremal_row(p, r);
  CHECK(row["maximum"] == 4);
  CHECK(row["witness"].get<std::string>().size() == 6);
}

TEST_CASE("catalog and classifier rows") {
  const auto& cat = primitive_catalog(57);
  REQUIRE(!cat.entries.empty());
  json row = catalog_row(57, cat.entries.front(), cat.valid);
  CHECK(row["n"] == 57);
  CHECK(row["valid"] == true);

  auto rep = classify_restricted_triples(36);
  json summary = triples_summary_row(rep);
  CHECK(summary["within_ceiling"] == true);
  if (!rep.hits.empty()) {
    json hit = triple_hit_row(36, rep.hits.front());
    CHECK(hit["kind"] == "restricted-triples");
    CHECK(!hit["tags"].get<std::string>().empty());
  }
}

TEST_CASE("csv quotes cells containing separators") {
  json row;
  row["n"] = 1;
  row["kind"] = "a,b";
  std::ostringstream os;
  write_csv(os, {"n", "kind"}, {row});
  CHECK(os.str().find("\"a,b\"") != std::string::npos);
}
