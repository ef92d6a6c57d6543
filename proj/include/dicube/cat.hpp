// dicube - finite directed cubical homotopy
//
// Finite categories and monoids by table, presentations by generators and
// relations, functor enumeration, natural transformations and homotopy
// classes of functors, and cubical nerves.
//
// Composition is written diagrammatically: compose(f, g) = f;g is "f then
// g".  For a monoid, f;g is the product f*g.

#ifndef DICUBE_CAT_HPP_
#define DICUBE_CAT_HPP_

#include <algorithm>      // for sort
#include <functional>     // for function
#include <map>            // for map
#include <optional>       // for optional
#include <stdexcept>      // for invalid_argument
#include <string>         // for string
#include <tuple>          // for tie
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "common.hpp"
#include "cset.hpp"

namespace dicube {

  class FinMonoid {
   public:
    FinMonoid() = default;

    FinMonoid(std::size_t n, Index unit, std::vector<Index> table,
              std::string name = "")
        : _n(n), _unit(unit), _table(std::move(table)), _name(std::move(name)) {
      if (_table.size() != n * n || unit >= n) {
        throw std::invalid_argument("monoid: table or unit out of range");
      }
      for (auto v : _table) {
        if (v >= n) {
          throw std::invalid_argument("monoid: value out of range");
        }
      }
      for (Index x = 0; x < n; ++x) {
        if (mul(unit, x) != x || mul(x, unit) != x) {
          throw std::invalid_argument("monoid: unit law fails at "
                                      + std::to_string(x));
        }
        for (Index y = 0; y < n; ++y) {
          for (Index z = 0; z < n; ++z) {
            if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
              throw std::invalid_argument("monoid: not associative");
            }
          }
        }
      }
      _commutative = true;
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          _commutative &= mul(x, y) == mul(y, x);
        }
      }
    }

    std::size_t size() const noexcept {
      return _n;
    }

    Index unit() const noexcept {
      return _unit;
    }

    Index mul(Index x, Index y) const {
      return _table[x * _n + y];
    }

    bool is_commutative() const noexcept {
      return _commutative;
    }

    std::vector<Index> const& table() const noexcept {
      return _table;
    }

    std::string const& name() const noexcept {
      return _name;
    }

   private:
    std::size_t        _n    = 0;
    Index              _unit = 0;
    std::vector<Index> _table;
    bool               _commutative = false;
    std::string        _name;
  };

  class FinCat {
   public:
    FinCat() = default;

    //! comp[f * M + g] = f;g for composable pairs, UNSET otherwise.
    FinCat(std::size_t objects, std::vector<Index> src, std::vector<Index> tgt,
           std::vector<Index> identity, std::vector<Index> comp,
           std::string name = "")
        : _objects(objects),
          _src(std::move(src)),
          _tgt(std::move(tgt)),
          _id(std::move(identity)),
          _comp(std::move(comp)),
          _name(std::move(name)) {
      std::size_t M = _src.size();
      if (_tgt.size() != M || _id.size() != objects || _comp.size() != M * M) {
        throw std::invalid_argument("category: table sizes inconsistent");
      }
      for (Index x = 0; x < objects; ++x) {
        if (_src[_id[x]] != x || _tgt[_id[x]] != x) {
          throw std::invalid_argument("category: bad identity");
        }
      }
      for (Index f = 0; f < M; ++f) {
        for (Index g = 0; g < M; ++g) {
          Index h = _comp[f * M + g];
          if ((_tgt[f] == _src[g]) != (h != UNSET)) {
            throw std::invalid_argument(
                "category: composition defined on wrong pairs");
          }
          if (h != UNSET && (_src[h] != _src[f] || _tgt[h] != _tgt[g])) {
            throw std::invalid_argument("category: composite has wrong ends");
          }
        }
        if (compose(_id[_src[f]], f) != f || compose(f, _id[_tgt[f]]) != f) {
          throw std::invalid_argument("category: unit law fails");
        }
      }
      for (Index f = 0; f < M; ++f) {
        for (Index g = 0; g < M; ++g) {
          if (_tgt[f] != _src[g]) {
            continue;
          }
          for (Index h = 0; h < M; ++h) {
            if (_tgt[g] == _src[h]
                && compose(compose(f, g), h) != compose(f, compose(g, h))) {
              throw std::invalid_argument("category: not associative");
            }
          }
        }
      }
      _hom.assign(objects * objects, {});
      for (Index f = 0; f < M; ++f) {
        _hom[_src[f] * objects + _tgt[f]].push_back(f);
      }
    }

    std::size_t objects() const noexcept {
      return _objects;
    }

    std::size_t morphisms() const noexcept {
      return _src.size();
    }

    Index src(Index f) const {
      return _src[f];
    }

    Index tgt(Index f) const {
      return _tgt[f];
    }

    Index identity(Index x) const {
      return _id[x];
    }

    //! f;g
    Index compose(Index f, Index g) const {
      return _comp[f * morphisms() + g];
    }

    std::vector<Index> const& hom(Index x, Index y) const {
      return _hom[x * _objects + y];
    }

    bool is_thin() const {
      for (auto const& h : _hom) {
        if (h.size() > 1) {
          return false;
        }
      }
      return true;
    }

    std::optional<Index> inverse(Index f) const {
      for (Index g : hom(tgt(f), src(f))) {
        if (compose(f, g) == identity(src(f))
            && compose(g, f) == identity(tgt(f))) {
          return g;
        }
      }
      return std::nullopt;
    }

    bool is_groupoid() const {
      for (Index f = 0; f < morphisms(); ++f) {
        if (!inverse(f)) {
          return false;
        }
      }
      return true;
    }

    std::string const& name() const noexcept {
      return _name;
    }

   private:
    std::size_t                     _objects = 0;
    std::vector<Index>              _src, _tgt, _id, _comp;
    std::vector<std::vector<Index>> _hom;
    std::string                     _name;
  };

  namespace cat {

    ////////////////////////////////////////////////////////////////////////
    // Catalog
    ////////////////////////////////////////////////////////////////////////

    inline FinMonoid zmod(std::size_t n) {
      std::vector<Index> t(n * n);
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          t[x * n + y] = static_cast<Index>((x + y) % n);
        }
      }
      return FinMonoid(n, 0, t, "zmod" + std::to_string(n));
    }

    inline FinMonoid trivial_monoid() {
      return FinMonoid(1, 0, {0}, "trivial");
    }

    //! {1, a} with a*a = a.
    inline FinMonoid idempotent2() {
      return FinMonoid(2, 0, {0, 1, 1, 1}, "idem2");
    }

    //! {0, 1, inf} under addition capped at inf (2 is inf).
    inline FinMonoid capped_addition() {
      return FinMonoid(3, 0, {0, 1, 2, 1, 2, 2, 2, 2, 2}, "capped");
    }

    //! Permutations of {0,1,2} in lexicographic order; x*y = x o y.
    inline FinMonoid s3() {
      std::vector<std::vector<int>> perms;
      std::vector<int>              p{0, 1, 2};
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      std::vector<Index> t(36);
      for (Index x = 0; x < 6; ++x) {
        for (Index y = 0; y < 6; ++y) {
          std::vector<int> q(3);
          for (int i = 0; i < 3; ++i) {
            q[i] = perms[x][perms[y][i]];
          }
          t[x * 6 + y] = static_cast<Index>(
              std::find(perms.begin(), perms.end(), q) - perms.begin());
        }
      }
      return FinMonoid(6, 0, t, "s3");
    }

    inline std::optional<FinMonoid> builtin_monoid(std::string const& name) {
      if (name.rfind("zmod", 0) == 0 && name.size() > 4) {
        return zmod(std::stoul(name.substr(4)));
      }
      if ((name[0] == 'z' || name[0] == 'Z') && name.size() > 1
          && name.find_first_not_of("0123456789", 1) == std::string::npos) {
        return zmod(std::stoul(name.substr(1)));
      }
      if (name == "trivial") {
        return trivial_monoid();
      }
      if (name == "idem2") {
        return idempotent2();
      }
      if (name == "capped") {
        return capped_addition();
      }
      if (name == "s3") {
        return s3();
      }
      return std::nullopt;
    }

    //! One-object category; morphism x is the element x.
    inline FinCat from_monoid(FinMonoid const& M) {
      std::size_t        n = M.size();
      std::vector<Index> src(n, 0), tgt(n, 0), comp(n * n);
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          comp[x * n + y] = M.mul(x, y);
        }
      }
      return FinCat(1, src, tgt, {M.unit()}, comp, M.name());
    }

    //! A poset as a thin category; morphisms are the pairs x <= y in
    //! lexicographic order.
    inline FinCat from_poset(Poset const& P, std::string name = "") {
      std::size_t        n = P.size();
      std::vector<Index> src, tgt, id(n);
      std::map<std::pair<Index, Index>, Index> index;
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          if (P.le(x, y)) {
            index[{x, y}] = static_cast<Index>(src.size());
            src.push_back(x);
            tgt.push_back(y);
          }
        }
        id[x] = index[{x, x}];
      }
      std::size_t        M = src.size();
      std::vector<Index> comp(M * M, UNSET);
      for (Index f = 0; f < M; ++f) {
        for (Index g = 0; g < M; ++g) {
          if (tgt[f] == src[g]) {
            comp[f * M + g] = index.at({src[f], tgt[g]});
          }
        }
      }
      return FinCat(n, src, tgt, id, comp, std::move(name));
    }

    inline FinCat chain_category(std::size_t k) {
      return from_poset(lattice::chain(k).poset(), "[" + std::to_string(k) + "]");
    }

    inline FinCat discrete(std::size_t n) {
      std::vector<bool> leq(n * n, false);
      for (std::size_t x = 0; x < n; ++x) {
        leq[x * n + x] = true;
      }
      return from_poset(Poset(n, leq), "discrete" + std::to_string(n));
    }

    inline FinCat terminal_category() {
      return discrete(1);
    }

    inline std::optional<FinCat> builtin_category(std::string const& name) {
      if (name.rfind("chain", 0) == 0 && name.size() > 5) {
        return chain_category(std::stoul(name.substr(5)));
      }
      if (name == "interval") {
        return chain_category(1);
      }
      if (name.rfind("discrete", 0) == 0 && name.size() > 8) {
        return discrete(std::stoul(name.substr(8)));
      }
      if (name == "terminal") {
        return terminal_category();
      }
      if (auto M = builtin_monoid(name)) {
        return from_monoid(*M);
      }
      return std::nullopt;
    }

    ////////////////////////////////////////////////////////////////////////
    // Monoid properties
    ////////////////////////////////////////////////////////////////////////

    struct Cancellativity {
      bool        cancellative;
      std::string witness;
    };

    inline Cancellativity is_cancellative(FinMonoid const& M) {
      for (Index x = 0; x < M.size(); ++x) {
        for (Index y = 0; y < M.size(); ++y) {
          for (Index z = y + 1; z < M.size(); ++z) {
            if (M.mul(x, y) == M.mul(x, z)) {
              return {false, std::to_string(x) + "*" + std::to_string(y)
                                 + " = " + std::to_string(x) + "*"
                                 + std::to_string(z)};
            }
            if (M.mul(y, x) == M.mul(z, x)) {
              return {false, std::to_string(y) + "*" + std::to_string(x)
                                 + " = " + std::to_string(z) + "*"
                                 + std::to_string(x)};
            }
          }
        }
      }
      return {true, ""};
    }

    struct ConjugacyQuotient {
      Partition                partition;
      std::optional<FinMonoid> quotient;  // for commutative M
    };

    //! Classes of the equivalence generated by x ~ y when xz = zy.
    inline ConjugacyQuotient conjugacy_classes(FinMonoid const& M) {
      DisjointSets ds(M.size());
      for (Index x = 0; x < M.size(); ++x) {
        for (Index y = 0; y < M.size(); ++y) {
          for (Index z = 0; z < M.size(); ++z) {
            if (M.mul(x, z) == M.mul(z, y)) {
              ds.unite(x, y);
            }
          }
        }
      }
      ConjugacyQuotient Q{Partition::from(ds), std::nullopt};
      if (M.is_commutative()) {
        std::size_t        k = Q.partition.count();
        std::vector<Index> t(k * k, UNSET);
        for (Index x = 0; x < M.size(); ++x) {
          for (Index y = 0; y < M.size(); ++y) {
            Index a = Q.partition.class_of[x], b = Q.partition.class_of[y];
            Index c = Q.partition.class_of[M.mul(x, y)];
            if (t[a * k + b] == UNSET) {
              t[a * k + b] = c;
            } else if (t[a * k + b] != c) {
              throw Falsification(
                  "conjugacy quotient: product not well defined");
            }
          }
        }
        Q.quotient = FinMonoid(k, Q.partition.class_of[M.unit()], t,
                               M.name() + "/conj");
      }
      return Q;
    }

    ////////////////////////////////////////////////////////////////////////
    // Presentations and functors
    ////////////////////////////////////////////////////////////////////////

    struct Presentation {
      struct Generator {
        Index       src, tgt;
        std::string name;
      };
      struct Relation {
        std::vector<Index> lhs, rhs;  // generator words, left to right
        Index              src, tgt;
      };
      std::size_t            objects = 0;
      std::vector<Generator> generators;
      std::vector<Relation>  relations;

      void validate() const {
        for (auto const& g : generators) {
          if (g.src >= objects || g.tgt >= objects) {
            throw std::invalid_argument("presentation: generator endpoint");
          }
        }
        for (auto const& r : relations) {
          for (auto const* w : {&r.lhs, &r.rhs}) {
            Index at = r.src;
            for (Index g : *w) {
              if (g >= generators.size() || generators[g].src != at) {
                throw std::invalid_argument("presentation: relation word "
                                            "is not a path");
              }
              at = generators[g].tgt;
            }
            if (at != r.tgt) {
              throw std::invalid_argument("presentation: relation ends "
                                          "mismatch");
            }
          }
        }
      }
    };

    struct Functor {
      std::vector<Index> obj;
      std::vector<Index> gen;

      bool operator==(Functor const& that) const {
        return obj == that.obj && gen == that.gen;
      }

      bool operator<(Functor const& that) const {
        return std::tie(obj, gen) < std::tie(that.obj, that.gen);
      }
    };

    inline Index evaluate(FinCat const& S, Functor const& F,
                          std::vector<Index> const& word, Index start) {
      Index m = S.identity(F.obj[start]);
      for (Index g : word) {
        m = S.compose(m, F.gen[g]);
      }
      return m;
    }

    //! Depth-first enumeration of functors P -> S; callback returns false to
    //! stop.
    inline void for_each_functor(Presentation const& P, FinCat const& S,
                                 std::function<bool(Functor const&)> cb,
                                 std::size_t budget = DEFAULT_BUDGET) {
      P.validate();
      Budget      B(budget, "functor enumeration");
      std::size_t G = P.generators.size();
      // relations checkable after generator i is assigned
      std::vector<std::vector<std::size_t>> ready(G + 1);
      for (std::size_t r = 0; r < P.relations.size(); ++r) {
        std::size_t last = 0;
        for (auto const* w : {&P.relations[r].lhs, &P.relations[r].rhs}) {
          for (Index g : *w) {
            last = std::max<std::size_t>(last, g + 1);
          }
        }
        ready[last].push_back(r);
      }
      Functor F{std::vector<Index>(P.objects, UNSET),
                std::vector<Index>(G, UNSET)};
      bool    stop       = false;
      auto    relations_ok = [&](std::size_t i) {
        for (auto r : ready[i]) {
          auto const& rel = P.relations[r];
          if (F.obj[rel.src] == UNSET) {
            continue;  // checked once objects are assigned
          }
          if (evaluate(S, F, rel.lhs, rel.src)
              != evaluate(S, F, rel.rhs, rel.src)) {
            return false;
          }
        }
        return true;
      };
      auto finish = [&](auto&& self, Index x) -> void {
        while (x < P.objects && F.obj[x] != UNSET) {
          ++x;
        }
        if (x == P.objects) {
          if (!relations_ok(0)) {
            return;
          }
          stop = !cb(F);
          return;
        }
        for (Index o = 0; o < S.objects() && !stop; ++o) {
          F.obj[x] = o;
          self(self, x + 1);
        }
        F.obj[x] = UNSET;
      };
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == G) {
          finish(finish, 0);
          return;
        }
        auto const& g = P.generators[i];
        for (Index m = 0; m < S.morphisms() && !stop; ++m) {
          B.charge();
          Index s = S.src(m), t = S.tgt(m);
          if ((F.obj[g.src] != UNSET && F.obj[g.src] != s)
              || (F.obj[g.tgt] != UNSET && F.obj[g.tgt] != t)
              || (g.src == g.tgt && s != t)) {
            continue;
          }
          bool set_s = F.obj[g.src] == UNSET;
          if (set_s) {
            F.obj[g.src] = s;
          }
          bool set_t = F.obj[g.tgt] == UNSET;
          if (set_t) {
            F.obj[g.tgt] = t;
          }
          F.gen[i] = m;
          if (relations_ok(i + 1)) {
            self(self, i + 1);
          }
          F.gen[i] = UNSET;
          if (set_t) {
            F.obj[g.tgt] = UNSET;
          }
          if (set_s) {
            F.obj[g.src] = UNSET;
          }
        }
      };
      rec(rec, 0);
    }

    inline std::vector<Functor> enumerate_functors(
        Presentation const& P, FinCat const& S,
        std::size_t budget = DEFAULT_BUDGET) {
      std::vector<Functor> out;
      for_each_functor(
          P, S,
          [&](Functor const& F) {
            out.push_back(F);
            return true;
          },
          budget);
      return out;
    }

    //! Components u of a natural transformation F => G, i.e.
    //! F(e);u_tgt = u_src;G(e) for every generator e.
    inline std::optional<std::vector<Index>>
    find_nat_trans(Presentation const& P, FinCat const& S, Functor const& F,
                   Functor const& G) {
      std::vector<Index> u(P.objects, UNSET);
      // generators grouped by their later endpoint
      std::vector<std::vector<Index>> check(P.objects);
      for (Index e = 0; e < P.generators.size(); ++e) {
        check[std::max(P.generators[e].src, P.generators[e].tgt)].push_back(e);
      }
      auto rec = [&](auto&& self, Index x) -> bool {
        if (x == P.objects) {
          return true;
        }
        for (Index m : S.hom(F.obj[x], G.obj[x])) {
          u[x]    = m;
          bool ok = true;
          for (Index e : check[x]) {
            auto const& g = P.generators[e];
            if (S.compose(F.gen[e], u[g.tgt]) != S.compose(u[g.src], G.gen[e])) {
              ok = false;
              break;
            }
          }
          if (ok && self(self, x + 1)) {
            return true;
          }
        }
        u[x] = UNSET;
        return false;
      };
      if (rec(rec, 0)) {
        return u;
      }
      return std::nullopt;
    }

    //! Zig-zag classes of natural transformations among the given functors.
    inline Partition functor_homotopy_classes(Presentation const&         P,
                                              FinCat const&               S,
                                              std::vector<Functor> const& Fs,
                                              std::size_t budget
                                              = DEFAULT_BUDGET) {
      Budget       B(budget, "natural transformation search");
      DisjointSets ds(Fs.size());
      for (std::size_t i = 0; i < Fs.size(); ++i) {
        for (std::size_t j = i + 1; j < Fs.size(); ++j) {
          if (ds.find(i) == ds.find(j)) {
            continue;
          }
          B.charge();
          if (find_nat_trans(P, S, Fs[i], Fs[j])
              || find_nat_trans(P, S, Fs[j], Fs[i])) {
            ds.unite(i, j);
          }
        }
      }
      return Partition::from(ds);
    }

    ////////////////////////////////////////////////////////////////////////
    // Nerves
    ////////////////////////////////////////////////////////////////////////

    //! Functors [1]^k -> S as tables over pairs (x, y) of points,
    //! entry x * 2^k + y, UNSET-as-int (-1) where x is not below y.
    inline std::vector<Key> cube_functors(FinCat const& S, unsigned k) {
      Point            size = Point(1) << k;
      std::vector<Key> out;
      // edge (y - bit i) -> y assigned when y is reached
      std::vector<Index> edge(size * k, UNSET);
      std::vector<Index> obj(size, UNSET);
      auto rec = [&](auto&& self, Point y, unsigned i) -> void {
        if (y == size) {
          Key t(std::size_t(size) * size, -1);
          for (Point a = 0; a < size; ++a) {
            for (Point b = 0; b < size; ++b) {
              if ((a & b) != a) {
                continue;
              }
              Index m = S.identity(obj[a]);
              Point z = a;
              for (unsigned j = 0; j < k; ++j) {
                Point bit = Point(1) << (k - 1 - j);
                if ((b & bit) && !(z & bit)) {
                  z |= bit;
                  m = S.compose(m, edge[z * k + j]);
                }
              }
              t[a * size + b] = static_cast<int>(m);
            }
          }
          out.push_back(std::move(t));
          return;
        }
        if (y == 0) {
          for (Index o = 0; o < S.objects(); ++o) {
            obj[0] = o;
            self(self, 1, 0);
          }
          return;
        }
        if (i == k) {
          self(self, y + 1, 0);
          return;
        }
        Point bit = Point(1) << (k - 1 - i);
        if (!(y & bit)) {
          self(self, y, i + 1);
          return;
        }
        Point x = y & ~bit;
        for (Index m = 0; m < S.morphisms(); ++m) {
          if (S.src(m) != obj[x]) {
            continue;
          }
          if (obj[y] != UNSET && S.tgt(m) != obj[y]) {
            continue;
          }
          bool set_obj = obj[y] == UNSET;
          obj[y]       = S.tgt(m);
          edge[y * k + i] = m;
          // squares with top y whose other edges are assigned
          bool ok = true;
          for (unsigned j = 0; j < i && ok; ++j) {
            Point bj = Point(1) << (k - 1 - j);
            if (!(y & bj)) {
              continue;
            }
            Point w = x & ~bj;  // bottom corner
            // w -> w+bj -> y  versus  w -> w+bit -> y
            Index p1 = S.compose(edge[(w | bj) * k + j], m);
            Index p2 = S.compose(edge[(w | bit) * k + i], edge[y * k + j]);
            ok       = p1 == p2;
          }
          if (ok) {
            self(self, y, i + 1);
          }
          edge[y * k + i] = UNSET;
          if (set_obj) {
            obj[y] = UNSET;
          }
        }
      };
      rec(rec, 0, 0);
      std::sort(out.begin(), out.end());
      return out;
    }

    //! The cubical nerve, truncated at N.
    inline CubicalSet nerve(FinCat const& S, unsigned N = 3) {
      cset::PresheafModel M;
      M.N = N;
      for (unsigned k = 0; k <= N; ++k) {
        M.keys.push_back(cube_functors(S, k));
      }
      M.precompose = [](Key const& t, unsigned k, CubeMorphism const& phi) {
        Point kk = Point(1) << k;
        Point mm = Point(1) << phi.dom();
        Key   out(std::size_t(mm) * mm, -1);
        for (Point a = 0; a < mm; ++a) {
          for (Point b = 0; b < mm; ++b) {
            if ((a & b) == a) {
              out[a * mm + b] = t[phi(a) * kk + phi(b)];
            }
          }
        }
        return out;
      };
      return cset::build(M);
    }

    //! The cubical function ner S -> ner S' induced by a functor given on
    //! objects and morphisms.
    inline CubicalFunction nerve_map(CubicalSet const& A, CubicalSet const& B,
                                     std::vector<Index> const& on_morphisms) {
      CubicalFunction f;
      for (unsigned n = 0; n <= A.trunc(); ++n) {
        std::unordered_map<Key, Index, VectorHash> idx;
        for (Index c = 0; c < B.count(n); ++c) {
          idx.emplace(B.keys()[n][c], c);
        }
        f.map.emplace_back();
        for (auto t : A.keys()[n]) {
          for (auto& v : t) {
            if (v >= 0) {
              v = static_cast<int>(on_morphisms[v]);
            }
          }
          f.map[n].push_back(idx.at(t));
        }
      }
      return f;
    }

  }  // namespace cat
}  // namespace dicube

#endif  // DICUBE_CAT_HPP_
