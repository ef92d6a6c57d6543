#include <catch_amalgamated.hpp>

#include "dicube/invariants.hpp"
#include "dicube/oracle.hpp"

using namespace dicube;

TEST_CASE("path components", "[inv]") {
  CHECK(inv::pi0(cset::torus(2)).count == 1);
  CHECK(inv::pi0(cset::point(2)).count == 1);
  auto two = cset::disjoint_union(cset::circle(2), cset::torus(2));
  CHECK(inv::pi0(two).count == 2);
  auto grid = cset::from_lattice(lattice::grid(2, 2), 2);
  CHECK(inv::pi0(grid).count == 1);
}

TEST_CASE("thin method agrees with exhaustive search", "[inv]") {
  std::vector<CubicalSet> spaces{cset::circle(2), cset::representable(1, 2),
                                 cset::representable(2, 2), cset::torus(2)};
  for (auto const& B : spaces) {
    for (auto const& S : {cat::chain_category(1), cat::chain_category(2),
                          cat::discrete(2)}) {
      auto t = inv::hom_classes(B, S, inv::Method::thin);
      auto e = inv::hom_classes(B, S, inv::Method::exhaustive);
      CHECK(t->classes.count == e->classes.count);
    }
  }
}

TEST_CASE("groupoid method agrees with exhaustive search", "[inv]") {
  std::vector<CubicalSet> spaces{cset::circle(2), cset::torus(2),
                                 cset::klein(2)};
  for (auto const& B : spaces) {
    for (auto const& M : {cat::zmod(2), cat::zmod(3), cat::s3()}) {
      auto S = cat::from_monoid(M);
      auto g = inv::hom_classes(B, S, inv::Method::groupoid);
      auto e = inv::hom_classes(B, S, inv::Method::exhaustive);
      CHECK(g->classes.count == e->classes.count);
      CHECK(g->classes.method == inv::Method::groupoid);
      // classify must be consistent with the representatives
      for (Index i = 0; i < g->classes.representatives.size(); ++i) {
        CHECK(g->classes.classify(g->classes.representatives[i]) == i);
      }
    }
  }
}

TEST_CASE("automatic dispatch", "[inv]") {
  auto B = cset::circle(2);
  CHECK(inv::hom_classes(B, cat::from_monoid(cat::s3()))->classes.method
        == inv::Method::groupoid);
  CHECK(inv::hom_classes(B, cat::chain_category(2))->classes.method
        == inv::Method::thin);
  CHECK(inv::hom_classes(B, cat::from_monoid(cat::idempotent2()))
            ->classes.method
        == inv::Method::exhaustive);
}

TEST_CASE("classes of maps agree with the presheaf oracle", "[inv]") {
  std::vector<CubicalSet> spaces{cset::circle(2), cset::representable(1, 2),
                                 cset::torus(2)};
  for (auto const& B : spaces) {
    for (auto const& S : {cat::from_monoid(cat::zmod(2)),
                          cat::from_monoid(cat::idempotent2()),
                          cat::chain_category(1)}) {
      auto fast = inv::hom_classes(B, S);
      auto slow = oracle::hom_classes_presheaf_oracle(B, cat::nerve(S, 2));
      CHECK(fast->classes.count == slow.count());
    }
  }
}

TEST_CASE("first cohomology", "[inv]") {
  auto H = inv::h1(cset::torus(2), cat::zmod(2));
  CHECK(H->count() == 4);
  REQUIRE(H->monoid);
  CHECK(inv::find_monoid_isomorphism(
      *H->monoid, inv::product(cat::zmod(2), cat::zmod(2))));
  // Klein bottle: pairs (a, b) in Z/4 with 2a = 2b
  auto K = inv::h1(cset::klein(2), cat::zmod(4));
  CHECK(K->count() == 8);
  CHECK(inv::h1(cset::circle(2), cat::zmod(5))->count() == 5);
  CHECK(inv::h1(cset::sphere(2, 2), cat::zmod(5))->count() == 1);
}

TEST_CASE("homotopy monoids", "[inv]") {
  auto C = inv::loop_classes(cset::circle(3), 0, 1);
  CHECK(C.loops.size() == 2);
  CHECK(C.count() == 2);
  CHECK_FALSE(C.monoid);

  auto N = inv::loop_classes(cat::nerve(cat::from_monoid(cat::zmod(2)), 3), 0,
                             1);
  CHECK(N.count() == 2);
  REQUIRE(N.monoid);
  CHECK(inv::find_monoid_isomorphism(*N.monoid, cat::zmod(2)));

  auto S = inv::loop_classes(cset::sphere(2, 3), 0, 2);
  CHECK(S.loops.size() == 3);
}

TEST_CASE("monoid constructions", "[inv]") {
  auto P = inv::product(cat::zmod(2), cat::zmod(3));
  CHECK(P.size() == 6);
  CHECK(inv::find_monoid_isomorphism(P, cat::zmod(6)));
  CHECK_FALSE(inv::find_monoid_isomorphism(cat::zmod(4),
                                           inv::product(cat::zmod(2),
                                                        cat::zmod(2))));
}

TEST_CASE("budget is enforced", "[inv]") {
  auto B = cset::subdivide(cset::torus(2), 2).set;
  CHECK_THROWS_AS(inv::h1(B, cat::idempotent2(), inv::Method::automatic, 100),
                  BudgetExceeded);
}
