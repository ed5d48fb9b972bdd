// The OpenMP kernels must produce byte-identical results to the serial
// reference paths; threads change timing only.
#include "doctest.h"
#include "nct/bounds.hpp"
#include "nct/io.hpp"

using namespace nct;

TEST_CASE("family verification: serial reference vs parallel sweep") {
  std::vector<CoveringFamily> fams;
  for (Provenance tag : applicable_provenances(42, Group::S))
    fams.push_back(build_covering_family(tag, 42, Group::S));
  // one family is deliberately broken so uncovered lists are nonempty
  CoveringFamily broken;
  broken.n = 42;
  broken.group = Group::S;
  broken.provenance = Provenance::Custom;
  broken.members.push_back(SubgroupClass::intransitive(42, 1));
  broken.members.push_back(SubgroupClass::imprimitive(42, 7));
  fams.push_back(broken);

  auto serial = verify_families_serial(fams);
  VerifyOptions par;
  par.threads = 2;
  auto parallel = verify_families(fams, par);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].covered == parallel[i].covered);
    CHECK(serial[i].required_types == parallel[i].required_types);
    CHECK(serial[i].uncovered_types == parallel[i].uncovered_types);
  }
}

TEST_CASE("model construction: serial reference vs parallel fill") {
  for (auto [n, g] : {std::pair{30, Group::S}, std::pair{37, Group::A}}) {
    auto serial = build_model_serial(n, g);
    auto parallel = build_model(n, g, 2);
    REQUIRE(serial.universe.size() == parallel.universe.size());
    CHECK(serial.universe == parallel.universe);
    for (size_t i = 0; i < serial.coverage.size(); ++i)
      CHECK(serial.coverage[i] == parallel.coverage[i]);
  }
}

TEST_CASE("min cover: value and witness independent of thread count") {
  for (auto [n, g] : {std::pair{38, Group::S}, std::pair{41, Group::A}}) {
    auto m = build_model(n, g);
    SolveOptions one;
    one.threads = 1;
    SolveOptions two;
    two.threads = 2;
    auto a = min_cover(m, one);
    auto b = min_cover(m, two);
    CHECK(a.size == b.size);
    CHECK(a.chosen == b.chosen);
    CHECK(a.lex_least);
    CHECK(b.lex_least);
  }
}

TEST_CASE("bracket rows are byte-identical across thread counts") {
  BracketOptions one;
  one.threads = 1;
  BracketOptions two;
  two.threads = 2;
  for (auto [n, g] : {std::pair{36, Group::S}, std::pair{39, Group::A}}) {
    auto ra = bracket_row(gamma_bracket(n, g, one));
    auto rb = bracket_row(gamma_bracket(n, g, two));
    CHECK(ra.dump() == rb.dump());
  }
}
