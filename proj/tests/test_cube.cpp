#include <catch_amalgamated.hpp>

#include <set>

#include "dicube/cube.hpp"

using namespace dicube;

namespace {

  // Normal forms [1]^m -> [1]^n: choose j output slots for distinct
  // projections (ordered choice of inputs), the rest are constants.
  std::size_t count_formula(unsigned m, unsigned n) {
    auto binom = [](unsigned a, unsigned b) {
      std::size_t r = 1;
      for (unsigned i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
      }
      return r;
    };
    std::size_t total = 0;
    for (unsigned j = 0; j <= std::min(m, n); ++j) {
      std::size_t falling = 1;
      for (unsigned i = 0; i < j; ++i) {
        falling *= m - i;
      }
      total += binom(n, j) * falling * (std::size_t(1) << (n - j));
    }
    return total;
  }

  std::vector<Point> values(CubeMorphism const& phi) {
    return cube::table(phi).values;
  }

}  // namespace

TEST_CASE("morphism counts match the closed formula", "[cube]") {
  for (unsigned m = 0; m <= 4; ++m) {
    for (unsigned n = 0; n <= 4; ++n) {
      CAPTURE(m, n);
      CHECK(cube::enumerate(m, n).size() == count_formula(m, n));
    }
  }
  CHECK(cube::enumerate(2, 2).size() == 14);
}

TEST_CASE("enumeration is sorted and duplicate free", "[cube]") {
  auto all = cube::enumerate(3, 3);
  CHECK(std::is_sorted(all.begin(), all.end()));
  std::set<std::vector<Point>> tables;
  for (auto const& phi : all) {
    tables.insert(values(phi));
  }
  CHECK(tables.size() == all.size());
}

TEST_CASE("composition agrees with function composition", "[cube]") {
  for (auto const& f : cube::enumerate(2, 3)) {
    for (auto const& g : cube::enumerate(3, 2)) {
      auto h = cube::compose(g, f);
      for (Point x = 0; x < 4; ++x) {
        REQUIRE(h(x) == g(f(x)));
      }
    }
  }
  CHECK_THROWS_AS(cube::compose(cube::identity(2), cube::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("tensor acts coordinatewise", "[cube]") {
  auto f = cube::face(1, 1, 2);
  auto g = cube::transposition(1, 2);
  auto t = cube::tensor(f, g);
  REQUIRE(t.dom() == 3);
  REQUIRE(t.cod() == 4);
  for (Point x = 0; x < 8; ++x) {
    Point a = x >> 2, b = x & 3;
    CHECK(t(x) == ((f(a) << 2) | g(b)));
  }
}

TEST_CASE("cubical identities among generators", "[cube]") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned i = 1; i <= n; ++i) {
      for (int a = 0; a < 2; ++a) {
        CHECK(cube::compose(cube::codegeneracy(i, n - 1), cube::face(a, i, n))
              == cube::identity(n - 1));
      }
    }
    for (unsigned i = 1; i + 1 <= n; ++i) {
      auto t = cube::transposition(i, n);
      CHECK(cube::compose(t, t) == cube::identity(n));
    }
  }
}

TEST_CASE("classification matches injectivity and surjectivity", "[cube]") {
  for (unsigned m = 0; m <= 3; ++m) {
    for (unsigned n = 0; n <= 3; ++n) {
      for (auto const& phi : cube::enumerate(m, n)) {
        auto v    = values(phi);
        bool inj  = std::set<Point>(v.begin(), v.end()).size() == v.size();
        bool surj = std::set<Point>(v.begin(), v.end()).size()
                    == (std::size_t(1) << n);
        auto k    = cube::classify(phi);
        CAPTURE(phi.to_string());
        CHECK((k == cube::Kind::iso) == (inj && surj));
        CHECK((k == cube::Kind::mono) == (inj && !surj));
        CHECK((k == cube::Kind::epi) == (surj && !inj));
      }
    }
  }
}

TEST_CASE("decomposition recomposes to the morphism", "[cube]") {
  for (auto const& phi : cube::enumerate(3, 3)) {
    auto gens = cube::decompose(phi);
    auto acc  = cube::identity(phi.dom());
    for (auto const& g : gens) {
      REQUIRE(g.dom() == acc.cod());
      acc = cube::compose(g.morphism(), acc);
    }
    CHECK(acc == phi);
    auto [e, m] = cube::epi_mono_factorize(phi);
    CHECK(cube::compose(m, e) == phi);
  }
}

TEST_CASE("function tables are recognized", "[cube]") {
  for (auto const& phi : cube::enumerate(2, 3)) {
    auto r = cube::from_function(cube::table(phi));
    REQUIRE(r.morphism);
    CHECK(*r.morphism == phi);
  }
  // the meet [1]^2 -> [1] is monotone but does not preserve joins
  cube::FunctionTable meet{2, 1, {0, 0, 0, 1}};
  auto                r = cube::from_function(meet);
  CHECK_FALSE(r.morphism);
  CHECK_FALSE(r.witness.empty());
  cube::FunctionTable antitone{1, 1, {1, 0}};
  CHECK_THROWS_AS(cube::from_function(antitone), std::invalid_argument);
}

TEST_CASE("parsing round trips", "[cube]") {
  for (auto const& phi : cube::enumerate(2, 3)) {
    CHECK(cube::parse(phi.to_string()) == phi);
  }
  CHECK_THROWS_AS(cube::parse("2->2: [p1, p1]"), std::invalid_argument);
  CHECK_THROWS_AS(cube::parse("1->1: [p2]"), std::invalid_argument);
  CHECK_THROWS_AS(cube::parse("garbage"), std::invalid_argument);
}
