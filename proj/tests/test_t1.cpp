#include <catch_amalgamated.hpp>

#include "dicube/cset.hpp"
#include "dicube/t1.hpp"

using namespace dicube;

namespace {

  std::size_t commuting_pairs(FinMonoid const& M) {
    std::size_t n = 0;
    for (Index a = 0; a < M.size(); ++a) {
      for (Index b = 0; b < M.size(); ++b) {
        n += M.mul(a, b) == M.mul(b, a);
      }
    }
    return n;
  }

  std::size_t equal_squares(FinMonoid const& M) {
    std::size_t n = 0;
    for (Index a = 0; a < M.size(); ++a) {
      for (Index b = 0; b < M.size(); ++b) {
        n += M.mul(a, a) == M.mul(b, b);
      }
    }
    return n;
  }

}  // namespace

TEST_CASE("presentation of the circle", "[t1]") {
  auto P = t1::fundamental_presentation(cset::circle(2));
  CHECK(P.objects == 1);
  CHECK(P.generators.size() == 1);
  CHECK(P.relations.empty());
}

TEST_CASE("presentation of the torus", "[t1]") {
  auto P = t1::fundamental_presentation(cset::torus(2));
  CHECK(P.objects == 1);
  CHECK(P.generators.size() == 2);
  REQUIRE(P.relations.size() == 1);
  auto const& r = P.relations[0];
  CHECK(r.lhs.size() == 2);
  CHECK(r.rhs.size() == 2);
  CHECK(r.lhs[0] == r.rhs[1]);
  CHECK(r.lhs[1] == r.rhs[0]);
  CHECK_FALSE(t1::relation_string(P, r).empty());
  CHECK(t1::to_dot(P).find("digraph") != std::string::npos);
}

TEST_CASE("functors out of the torus are commuting pairs", "[t1]") {
  for (auto const& M : {cat::zmod(3), cat::s3(), cat::idempotent2(),
                        cat::capped_addition()}) {
    CHECK(t1::t1_functor_count(cset::torus(2), cat::from_monoid(M))
          == commuting_pairs(M));
  }
}

TEST_CASE("functors out of the Klein bottle have equal squares", "[t1]") {
  for (auto const& M : {cat::zmod(4), cat::s3(), cat::idempotent2()}) {
    CHECK(t1::t1_functor_count(cset::klein(2), cat::from_monoid(M))
          == equal_squares(M));
  }
}

TEST_CASE("functors out of a square into a thin category", "[t1]") {
  // the square presents the poset [1]^2, so functors to [k] are monotone
  // maps 2^2 -> [k]
  auto R = cset::representable(2, 2);
  for (std::size_t k = 1; k <= 3; ++k) {
    std::size_t monotone = 0;
    for (std::size_t a = 0; a <= k; ++a) {
      for (std::size_t b = a; b <= k; ++b) {
        for (std::size_t c = a; c <= k; ++c) {
          for (std::size_t d = std::max(b, c); d <= k; ++d) {
            ++monotone;
          }
        }
      }
    }
    CHECK(t1::t1_functor_count(R, cat::chain_category(k)) == monotone);
  }
}

TEST_CASE("truncation below 2 is rejected", "[t1]") {
  CHECK_THROWS_AS(t1::fundamental_presentation(cset::circle(1)),
                  std::invalid_argument);
}
