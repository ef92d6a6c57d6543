#include <catch_amalgamated.hpp>

#include <numeric>

#include "dicube/lattice.hpp"

using namespace dicube;

namespace {

  bool brute_distributive(FiniteLattice const& L) {
    for (Element x = 0; x < L.size(); ++x) {
      for (Element y = 0; y < L.size(); ++y) {
        for (Element z = 0; z < L.size(); ++z) {
          if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool brute_modular(FiniteLattice const& L) {
    for (Element x = 0; x < L.size(); ++x) {
      for (Element y = 0; y < L.size(); ++y) {
        for (Element z = 0; z < L.size(); ++z) {
          if (L.leq(x, z)
              && L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool join_is_least_upper_bound(FiniteLattice const& L) {
    for (Element x = 0; x < L.size(); ++x) {
      for (Element y = 0; y < L.size(); ++y) {
        Element j = L.join(x, y);
        if (!L.leq(x, j) || !L.leq(y, j)) {
          return false;
        }
        for (Element z = 0; z < L.size(); ++z) {
          if (L.leq(x, z) && L.leq(y, z) && !L.leq(j, z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("catalog sizes", "[lattice]") {
  // unlabelled lattices on 1..7 elements
  std::vector<std::size_t> expected{1, 1, 1, 2, 5, 15, 53};
  std::vector<std::size_t> got(8, 0);
  for (auto const& L : lattice::catalog(7)) {
    ++got[L.size()];
  }
  got.erase(got.begin());
  CHECK(got == expected);
}

TEST_CASE("catalog entries are lattices and pairwise non-isomorphic",
          "[lattice]") {
  auto all = lattice::catalog(6);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(join_is_least_upper_bound(all[i]));
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].size() == all[j].size()) {
        CHECK_FALSE(lattice::is_isomorphic(all[i], all[j]));
      }
    }
  }
}

TEST_CASE("distributivity and modularity agree with the identities",
          "[lattice]") {
  for (auto const& L : lattice::catalog(7)) {
    CHECK(L.is_distributive() == brute_distributive(L));
    CHECK(lattice::is_modular(L) == brute_modular(L));
    CHECK(lattice::distributivity_profile(L).agree());
  }
  CHECK(lattice::is_modular(lattice::m3()));
  CHECK_FALSE(lattice::m3().is_distributive());
  CHECK_FALSE(lattice::is_modular(lattice::n5()));
}

TEST_CASE("named lattices", "[lattice]") {
  CHECK(lattice::chain(3).size() == 4);
  CHECK(lattice::boolean(3).size() == 8);
  CHECK(lattice::grid(2, 2).size() == 9);
  CHECK(lattice::is_isomorphic(lattice::m(3), lattice::m3()));
  CHECK_FALSE(lattice::is_isomorphic(lattice::m3(), lattice::n5()));
  CHECK(lattice::is_isomorphic(lattice::boolean(2), lattice::grid(1, 2)));
  std::vector<bool> not_lattice{true, false, false, true};
  CHECK_THROWS(FiniteLattice(Poset(2, not_lattice)));
}

TEST_CASE("boolean intervals of a boolean lattice", "[lattice]") {
  // every pair a <= b in 2^n spans a boolean interval: 3^n of them
  CHECK(lattice::boolean_intervals(lattice::boolean(2)).size() == 9);
  CHECK(lattice::boolean_intervals(lattice::boolean(3)).size() == 27);
  // a chain has only points and covers
  CHECK(lattice::boolean_intervals(lattice::chain(3)).size() == 4 + 3);
}

TEST_CASE("subdividing grids gives finer grids", "[lattice]") {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t n = 1; n <= 2; ++n) {
      auto S = lattice::subdivide_lattice(lattice::grid(1, n), k);
      CAPTURE(k, n);
      CHECK(lattice::is_isomorphic(S, lattice::grid(k + 1, n)));
    }
  }
  CHECK(lattice::is_isomorphic(lattice::subdivide_lattice(lattice::chain(2), 1),
                               lattice::chain(4)));
  CHECK_THROWS(lattice::subdivide_lattice(lattice::n5(), 1));
}

TEST_CASE("identity maps are Dis-morphisms", "[lattice]") {
  for (auto L : {lattice::boolean(2), lattice::chain(3), lattice::grid(2, 2)}) {
    auto                 P = std::make_shared<FiniteLattice const>(L);
    std::vector<Element> id(L.size());
    std::iota(id.begin(), id.end(), 0);
    lattice::LatticeMap f{P, P, id};
    CHECK(lattice::is_monotone(f));
    CHECK(lattice::is_dis_morphism(f).is_dis);
  }
  // collapsing 2^2 onto [1] by the meet is monotone but not a lattice map
  auto B = std::make_shared<FiniteLattice const>(lattice::boolean(2));
  auto I = std::make_shared<FiniteLattice const>(lattice::chain(1));
  std::vector<Element> meet(4, 0);
  meet[B->top()] = I->top();
  lattice::LatticeMap f{B, I, meet};
  CHECK(lattice::is_monotone(f));
  CHECK_FALSE(lattice::is_dis_morphism(f).is_dis);
}
