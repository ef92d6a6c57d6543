#include <catch_amalgamated.hpp>

#include "dicube/cset.hpp"
#include "dicube/oracle.hpp"

using namespace dicube;

TEST_CASE("representables have one cell per cube morphism", "[cset]") {
  for (unsigned n = 0; n <= 3; ++n) {
    auto R = cset::representable(n, 3);
    CHECK(R.validate().empty());
    for (unsigned k = 0; k <= 3; ++k) {
      CHECK(R.count(k) == cube::enumerate(k, n).size());
    }
  }
}

TEST_CASE("named spaces", "[cset]") {
  using V = std::vector<std::size_t>;
  CHECK(cset::circle(2).cube_counts() == V{1, 1, 0});
  CHECK(cset::torus(2).cube_counts() == V{1, 2, 1});
  CHECK(cset::klein(2).cube_counts() == V{1, 2, 1});
  CHECK(cset::sphere(2, 2).cube_counts() == V{1, 0, 1});
  for (auto const& C : {cset::circle(3), cset::torus(3), cset::klein(3),
                        cset::sphere(2, 3), cset::point(3)}) {
    CHECK(C.validate().empty());
  }
}

TEST_CASE("Yoneda: maps out of a representable are its cells", "[cset]") {
  for (auto const& C : {cset::circle(2), cset::torus(2), cset::klein(2)}) {
    for (unsigned n = 0; n <= 2; ++n) {
      CHECK(cset::all_homs(cset::representable(n, 2), C).size() == C.count(n));
    }
  }
}

TEST_CASE("hom search agrees with the brute-force oracle", "[cset]") {
  std::vector<CubicalSet> spaces{cset::representable(1, 2), cset::circle(2),
                                 cset::torus(2), cset::sphere(2, 2)};
  for (auto const& A : spaces) {
    for (auto const& B : spaces) {
      CHECK(cset::all_homs(A, B).size() == oracle::all_functions(A, B).size());
    }
  }
}

TEST_CASE("subdivided cubes are grids", "[cset]") {
  for (unsigned n = 1; n <= 2; ++n) {
    for (unsigned k = 1; k <= 2; ++k) {
      auto S = cset::subdivide(cset::representable(n, 2), k);
      auto G = cset::from_lattice(lattice::grid(k + 1, n), 2);
      CAPTURE(n, k);
      CHECK(S.set.validate().empty());
      CHECK(cset::is_isomorphic(S.set, G));
    }
  }
}

TEST_CASE("subdivision multiplies cube counts", "[cset]") {
  // sd_k of the torus has k^2 vertices, 2k^2 edges, k^2 squares up to
  // transposition
  for (unsigned k = 1; k <= 3; ++k) {
    auto S = cset::subdivide(cset::torus(2), k - 1).set;
    CHECK(S.cube_counts()
          == std::vector<std::size_t>{k * k, 2 * k * k, k * k});
  }
}

TEST_CASE("tensor of intervals is the square", "[cset]") {
  auto I = cset::representable(1, 2);
  auto T = cset::tensor(I, I);
  CHECK(T.set.validate().empty());
  CHECK(cset::is_isomorphic(T.set, cset::representable(2, 2)));
}

TEST_CASE("collapsing the boundary of a square gives the 2-sphere",
          "[cset]") {
  auto Q = cset::collapse(cset::representable(2, 2), cset::boundary(2, 2));
  CHECK(Q.set.validate().empty());
  CHECK(cset::is_isomorphic(Q.set, cset::sphere(2, 2)));
}

TEST_CASE("closed stars and subpresheaves", "[cset]") {
  auto R = cset::representable(2, 2);
  for (Index v = 0; v < R.count(0); ++v) {
    auto S = cset::closed_star(R, v);
    CHECK(cset::is_subpresheaf(R, S));
  }
  auto B = cset::boundary(2, 2);
  CHECK(cset::is_subpresheaf(R, B));
  CHECK(B.subset_of(cset::full_sub(R)));
  CHECK(cset::empty_sub(R).subset_of(B));
}
