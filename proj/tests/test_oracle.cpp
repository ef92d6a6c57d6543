#include <catch_amalgamated.hpp>

#include "dicube/cat.hpp"
#include "dicube/oracle.hpp"

using namespace dicube;

namespace {

  std::size_t factorial(unsigned n) {
    return n == 0 ? 1 : n * factorial(n - 1);
  }

}  // namespace

TEST_CASE("monotone enumeration", "[oracle]") {
  // Dedekind numbers count monotone maps 2^n -> [1]
  CHECK(oracle::box_monotone(1, 1).size() == 3);
  CHECK(oracle::box_monotone(2, 1).size() == 6);
  CHECK(oracle::box_monotone(3, 1).size() == 20);
  // monotone maps [2] -> [1]
  CHECK(oracle::all_monotone(lattice::chain(2).poset(),
                             lattice::chain(1).poset())
            .size()
        == 4);
  CHECK(oracle::box_monotone(2, 2, true).size() == 2);
}

TEST_CASE("lattice homomorphism predicates", "[oracle]") {
  cube::FunctionTable meet{2, 1, {0, 0, 0, 1}};
  cube::FunctionTable proj{2, 1, {0, 0, 1, 1}};
  CHECK_FALSE(oracle::is_lattice_hom(meet));
  CHECK(oracle::is_lattice_hom(proj));
  CHECK(oracle::is_interval_preserving(proj));
  CHECK(oracle::is_surjective(proj));
  CHECK_FALSE(oracle::is_bijective(proj));
}

TEST_CASE("filter, closure and normal forms coincide", "[oracle]") {
  auto all = oracle::closure_upto(3);
  for (unsigned m = 0; m <= 3; ++m) {
    for (unsigned n = 0; n <= 3; ++n) {
      std::set<cube::FunctionTable> nf;
      for (auto const& phi : cube::enumerate(m, n)) {
        nf.insert(cube::table(phi));
      }
      CAPTURE(m, n);
      CHECK(oracle::box_by_filter(m, n) == nf);
      CHECK(oracle::restrict_dims(all, m, n) == nf);
    }
  }
}

TEST_CASE("automorphism characterizations", "[oracle]") {
  for (unsigned n = 0; n <= 3; ++n) {
    auto s = oracle::automorphism_sets(n);
    for (auto const& x : s) {
      CHECK(x.size() == factorial(n));
      CHECK(x == s[0]);
    }
  }
}

TEST_CASE("surjection characterizations", "[oracle]") {
  for (unsigned m = 0; m <= 3; ++m) {
    for (unsigned n = 0; n <= m; ++n) {
      auto s = oracle::surjection_sets(m, n);
      CHECK(s[0] == s[1]);
      CHECK(s[1] == s[2]);
    }
  }
}

TEST_CASE("brute-force cubical functions", "[oracle]") {
  auto C = cset::torus(2);
  // maps out of the point are the vertices
  CHECK(oracle::all_functions(cset::point(2), C).size() == C.count(0));
  CHECK(oracle::all_functions(cset::representable(2, 2), C).size()
        == C.count(2));
  CHECK_THROWS_AS(oracle::all_functions(cset::point(2), cset::point(3)),
                  std::invalid_argument);
}

TEST_CASE("homotopy graph", "[oracle]") {
  // functors [1] -> [1] are 00, 01, 11 and the natural transformations
  // 00 => 01 => 11 connect them
  auto G = oracle::homotopy_graph(cset::representable(1, 2),
                                  cat::nerve(cat::chain_category(1), 2));
  CHECK(G.nodes.size() == 3);
  CHECK(oracle::hom_classes_presheaf_oracle(
            cset::representable(1, 2), cat::nerve(cat::chain_category(1), 2))
            .count()
        == 1);
  // loops in ner Z/3 are conjugation classes: all distinct
  CHECK(oracle::hom_classes_presheaf_oracle(
            cset::circle(2), cat::nerve(cat::from_monoid(cat::zmod(3)), 2))
            .count()
        == 3);
}
