#include <catch_amalgamated.hpp>

#include "dicube/io.hpp"
#include "dicube/spaces.hpp"

using namespace dicube;

TEST_CASE("lattice round trip", "[io]") {
  for (auto const& L : {lattice::n5(), lattice::boolean(3), lattice::m3()}) {
    auto M = io::lattice_from_json(io::to_json(L));
    CHECK(M.size() == L.size());
    for (Element x = 0; x < L.size(); ++x) {
      for (Element y = 0; y < L.size(); ++y) {
        CHECK(M.leq(x, y) == L.leq(x, y));
      }
    }
  }
}

TEST_CASE("cubical set round trip", "[io]") {
  for (auto const& C : {cset::torus(3), cset::klein(2), cset::sphere(2, 3)}) {
    auto D = io::cset_from_json(io::to_json(C));
    CHECK(D.counts() == C.counts());
    CHECK(io::to_json(D) == io::to_json(C));
  }
}

TEST_CASE("invalid cubical sets are rejected", "[io]") {
  auto j = io::to_json(cset::torus(2));
  // point the lower face of the first edge at a nonexistent vertex
  j["faces"]["1"][0][0] = 7;
  CHECK_THROWS_AS(io::cset_from_json(j), std::invalid_argument);
  auto k = io::to_json(cset::torus(2));
  k["faces"]["2"][0][0] = k["faces"]["2"][0][0].get<Index>() == 0 ? 1 : 0;
  CHECK_THROWS_AS(io::cset_from_json(k), std::invalid_argument);
}

TEST_CASE("monoid and category round trip", "[io]") {
  auto M = io::monoid_from_json(io::to_json(cat::s3()));
  for (Index x = 0; x < 6; ++x) {
    for (Index y = 0; y < 6; ++y) {
      CHECK(M.mul(x, y) == cat::s3().mul(x, y));
    }
  }
  auto S = io::category_from_json(io::to_json(cat::chain_category(2)));
  CHECK(S.objects() == 3);
  CHECK(S.morphisms() == 6);
  CHECK(S.is_thin());
  auto T = io::category_from_json(io::to_json(cat::zmod(3)));
  CHECK(T.objects() == 1);
  CHECK(T.morphisms() == 3);
}

TEST_CASE("dot output", "[io]") {
  auto s = io::to_dot(cset::circle(2));
  CHECK(s.find("v0 -> v0") != std::string::npos);
}

TEST_CASE("named spaces resolve", "[io]") {
  for (auto const& name : spaces::builtin_names()) {
    CHECK(spaces::builtin(name, 3));
  }
  CHECK(spaces::builtin("nerve:z2", 2)->count(1) == 2);
  CHECK(spaces::builtin("sd2:circle", 2)->count(0) == 2);
  CHECK_FALSE(spaces::builtin("sd0:circle", 2));
  CHECK_FALSE(spaces::builtin("nothing", 2));
  CHECK_FALSE(spaces::builtin("cube3", 2));
}
