#include <catch_amalgamated.hpp>

#include "dicube/cat.hpp"

using namespace dicube;

namespace {

  std::size_t commuting_squares(FinMonoid const& M) {
    std::size_t n = 0;
    for (Index a = 0; a < M.size(); ++a) {
      for (Index b = 0; b < M.size(); ++b) {
        for (Index c = 0; c < M.size(); ++c) {
          for (Index d = 0; d < M.size(); ++d) {
            n += M.mul(a, b) == M.mul(c, d);
          }
        }
      }
    }
    return n;
  }

  // Functors from the poset [1]^3 to a one-object category: an element on
  // each of the 12 cover edges, with every 2-face commuting.
  std::size_t commuting_cubes(FinMonoid const& M) {
    // edge (x, i): from point x with bit i clear to x | bit i
    auto edge = [](Point x, unsigned i) {
      unsigned slot = 0;
      for (unsigned j = 0, k = 0; j < 3; ++j) {
        if (j != i) {
          slot |= ((x >> j) & 1u) << k++;
        }
      }
      return i * 4 + slot;
    };
    std::size_t        count = 0, n = M.size(), total = 1;
    std::vector<Index> e(12, 0);
    for (int i = 0; i < 12; ++i) {
      total *= n;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (auto& v : e) {
        v = Index(c % n);
        c /= n;
      }
      bool ok = true;
      for (Point x = 0; x < 8 && ok; ++x) {
        for (unsigned i = 0; i < 3 && ok; ++i) {
          for (unsigned j = i + 1; j < 3 && ok; ++j) {
            Point bi = 1u << i, bj = 1u << j;
            if (x & (bi | bj)) {
              continue;
            }
            ok = M.mul(e[edge(x, i)], e[edge(x | bi, j)])
                 == M.mul(e[edge(x, j)], e[edge(x | bj, i)]);
          }
        }
      }
      count += ok;
    }
    return count;
  }

}  // namespace

TEST_CASE("builtin monoids satisfy the axioms", "[cat]") {
  for (auto const& M : {cat::zmod(4), cat::s3(), cat::idempotent2(),
                        cat::capped_addition(), cat::trivial_monoid()}) {
    for (Index x = 0; x < M.size(); ++x) {
      CHECK(M.mul(M.unit(), x) == x);
      CHECK(M.mul(x, M.unit()) == x);
      for (Index y = 0; y < M.size(); ++y) {
        for (Index z = 0; z < M.size(); ++z) {
          CHECK(M.mul(M.mul(x, y), z) == M.mul(x, M.mul(y, z)));
        }
      }
    }
  }
  CHECK(cat::zmod(5).is_commutative());
  CHECK_FALSE(cat::s3().is_commutative());
  CHECK(cat::builtin_monoid("z3")->size() == 3);
  CHECK(cat::builtin_monoid("zmod6")->size() == 6);
  CHECK_FALSE(cat::builtin_monoid("nope"));
}

TEST_CASE("cancellativity", "[cat]") {
  CHECK(cat::is_cancellative(cat::zmod(4)).cancellative);
  CHECK(cat::is_cancellative(cat::s3()).cancellative);
  auto v = cat::is_cancellative(cat::idempotent2());
  CHECK_FALSE(v.cancellative);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("conjugacy classes", "[cat]") {
  CHECK(cat::conjugacy_classes(cat::s3()).partition.count() == 3);
  CHECK(cat::conjugacy_classes(cat::zmod(4)).partition.count() == 4);
  auto Q = cat::conjugacy_classes(cat::idempotent2());
  CHECK(Q.partition.count() == 1);
  REQUIRE(Q.quotient);
  CHECK(Q.quotient->size() == 1);
}

TEST_CASE("categories from posets", "[cat]") {
  auto C = cat::chain_category(2);
  CHECK(C.objects() == 3);
  CHECK(C.morphisms() == 6);
  CHECK(C.is_thin());
  CHECK_FALSE(C.is_groupoid());
  CHECK(cat::discrete(3).is_groupoid());
  CHECK(cat::from_monoid(cat::s3()).is_groupoid());
  CHECK_FALSE(cat::from_monoid(cat::idempotent2()).is_groupoid());
}

TEST_CASE("nerve cell counts", "[cat]") {
  for (auto const& M : {cat::zmod(2), cat::zmod(3), cat::idempotent2(),
                        cat::s3()}) {
    unsigned trunc = M.size() <= 3 ? 3 : 2;
    auto     N     = cat::nerve(cat::from_monoid(M), trunc);
    CAPTURE(M.name());
    CHECK(N.validate().empty());
    CHECK(N.count(0) == 1);
    CHECK(N.count(1) == M.size());
    CHECK(N.count(2) == commuting_squares(M));
    if (trunc == 3) {
      CHECK(N.count(3) == commuting_cubes(M));
    }
  }
  // functors [1]^k -> [1] are monotone Boolean functions
  auto N = cat::nerve(cat::chain_category(1), 3);
  CHECK(N.counts() == std::vector<std::size_t>{2, 3, 6, 20});
}

TEST_CASE("functors from a loop are monoid elements", "[cat]") {
  cat::Presentation P;
  P.objects    = 1;
  P.generators = {{0, 0, "e"}};
  for (auto const& M : {cat::zmod(3), cat::s3(), cat::idempotent2()}) {
    auto S  = cat::from_monoid(M);
    auto Fs = cat::enumerate_functors(P, S);
    CHECK(Fs.size() == M.size());
    // natural transformations between loops are conjugations
    CHECK(cat::functor_homotopy_classes(P, S, Fs).count()
          == cat::conjugacy_classes(M).partition.count());
  }
}
