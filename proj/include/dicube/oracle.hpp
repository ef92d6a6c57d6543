// dicube - finite directed cubical homotopy
//
// Brute-force reference engines.  Nothing here calls the normal-form
// algebra, the lattice-map recognizers, the hom search or the fundamental
// category code; results are compared against those in the tests.
//
// Points of [1]^n use the same bitmask encoding as cube.hpp (coordinate i,
// 1-based, at bit n - i), so coordinatewise join and meet are | and &.

#ifndef DICUBE_ORACLE_HPP_
#define DICUBE_ORACLE_HPP_

#include <algorithm>      // for next_permutation
#include <numeric>        // for iota
#include <set>            // for set
#include <stdexcept>      // for invalid_argument
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair
#include <vector>         // for vector

#include "cat.hpp"
#include "cset.hpp"
#include "cube.hpp"

namespace dicube {
  namespace oracle {

    using Table = cube::FunctionTable;

    ////////////////////////////////////////////////////////////////////////
    // Monotone maps
    ////////////////////////////////////////////////////////////////////////

    //! Monotone maps P -> Q as value vectors, lexicographic order.
    inline std::vector<std::vector<Index>>
    all_monotone(Poset const& P, Poset const& Q,
                 std::size_t budget = DEFAULT_BUDGET) {
      std::vector<std::vector<Index>> out;
      std::vector<Index>              f(P.size(), 0);
      Budget                          B(budget, "monotone enumeration");
      auto rec = [&](auto&& self, std::size_t x) -> void {
        if (x == P.size()) {
          B.charge();
          out.push_back(f);
          return;
        }
        for (Index y = 0; y < Q.size(); ++y) {
          bool ok = true;
          for (std::size_t w = 0; w < x && ok; ++w) {
            if (P.le(w, x)) {
              ok = Q.le(f[w], y);
            }
            if (P.le(x, w)) {
              ok = ok && Q.le(y, f[w]);
            }
          }
          if (ok) {
            f[x] = y;
            self(self, x + 1);
          }
        }
      };
      rec(rec, 0);
      return out;
    }

    inline bool below(Point x, Point y) {
      return (x & ~y) == 0;
    }

    //! Monotone maps [1]^m -> [1]^n, optionally injective.
    inline std::vector<Table> box_monotone(unsigned m, unsigned n,
                                           bool        injective = false,
                                           std::size_t budget = DEFAULT_BUDGET) {
      Point              dm = Point(1) << m, dn = Point(1) << n;
      std::vector<Table> out;
      Table              t{m, n, std::vector<Point>(dm, 0)};
      std::vector<bool>  used(dn, false);
      Budget             B(budget, "monotone box enumeration");
      auto rec = [&](auto&& self, Point x) -> void {
        if (x == dm) {
          B.charge();
          out.push_back(t);
          return;
        }
        for (Point y = 0; y < dn; ++y) {
          if (injective && used[y]) {
            continue;
          }
          bool ok = true;
          // w < x numerically whenever w is below x
          for (Point w = 0; w < x && ok; ++w) {
            if (below(w, x)) {
              ok = below(t.values[w], y);
            }
          }
          if (ok) {
            t.values[x] = y;
            used[y]     = true;
            self(self, x + 1);
            used[y] = false;
          }
        }
      };
      rec(rec, 0);
      return out;
    }

    inline bool is_lattice_hom(Table const& t) {
      Point d = Point(1) << t.dom;
      for (Point x = 0; x < d; ++x) {
        for (Point y = 0; y < d; ++y) {
          if (t.values[x | y] != (t.values[x] | t.values[y])
              || t.values[x & y] != (t.values[x] & t.values[y])) {
            return false;
          }
        }
      }
      return true;
    }

    //! Image of every interval [a, b] is the interval [f(a), f(b)].
    inline bool is_interval_preserving(Table const& t) {
      Point d = Point(1) << t.dom, e = Point(1) << t.cod;
      for (Point a = 0; a < d; ++a) {
        for (Point b = a; b < d; ++b) {
          if (!below(a, b)) {
            continue;
          }
          std::vector<bool> hit(e, false);
          for (Point x = a; x <= b; ++x) {
            if (below(a, x) && below(x, b)) {
              hit[t.values[x]] = true;
            }
          }
          for (Point z = 0; z < e; ++z) {
            bool in = below(t.values[a], z) && below(z, t.values[b]);
            if (in != hit[z]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    inline bool is_surjective(Table const& t) {
      std::vector<bool> hit(std::size_t(1) << t.cod, false);
      for (auto v : t.values) {
        hit[v] = true;
      }
      return std::find(hit.begin(), hit.end(), false) == hit.end();
    }

    inline bool is_bijective(Table const& t) {
      return t.dom == t.cod && is_surjective(t);
    }

    //! Monotone maps [1]^m -> [1]^n that are interval-preserving lattice
    //! homomorphisms.
    inline std::set<Table> box_by_filter(unsigned m, unsigned n) {
      std::set<Table> out;
      for (auto const& t : box_monotone(m, n)) {
        if (is_lattice_hom(t) && is_interval_preserving(t)) {
          out.insert(t);
        }
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Generator closure
    ////////////////////////////////////////////////////////////////////////

    inline Table after(Table const& g, Table const& f) {
      if (f.cod != g.dom) {
        throw std::invalid_argument("oracle compose: dimension mismatch");
      }
      Table h{f.dom, g.cod, {}};
      for (auto v : f.values) {
        h.values.push_back(g.values[v]);
      }
      return h;
    }

    inline Table tensor(Table const& f, Table const& g) {
      Table h{f.dom + g.dom, f.cod + g.cod, {}};
      Point mask = (Point(1) << g.dom) - 1;
      for (Point x = 0; x < (Point(1) << h.dom); ++x) {
        h.values.push_back(f.values[x >> g.dom] << g.cod
                           | g.values[x & mask]);
      }
      return h;
    }

    inline Table identity(unsigned n) {
      Table t{n, n, {}};
      for (Point x = 0; x < (Point(1) << n); ++x) {
        t.values.push_back(x);
      }
      return t;
    }

    //! All tables with dimensions at most D generated from the cofaces
    //! [1]^0 -> [1], the codegeneracy [1] -> [1]^0, the transposition of
    //! [1]^2 and identities, under composition and tensor.
    inline std::set<Table> closure_upto(unsigned    D,
                                        std::size_t budget = DEFAULT_BUDGET) {
      std::vector<Table> seeds{identity(0), identity(1),
                               Table{0, 1, {0}}, Table{0, 1, {1}},
                               Table{1, 0, {0, 0}}, Table{2, 2, {0, 2, 1, 3}}};
      std::set<Table>    all;
      std::vector<Table> list, work;
      Budget             B(budget, "generator closure");
      auto add = [&](Table t) {
        if (t.dom <= D && t.cod <= D && all.insert(t).second) {
          list.push_back(t);
          work.push_back(std::move(t));
        }
      };
      for (auto& s : seeds) {
        if (s.dom <= D && s.cod <= D) {
          add(s);
        }
      }
      while (!work.empty()) {
        Table t = work.back();
        work.pop_back();
        B.charge();
        for (std::size_t i = 0; i < list.size(); ++i) {
          Table u = list[i];
          if (u.cod == t.dom) {
            add(after(t, u));
          }
          if (t.cod == u.dom) {
            add(after(u, t));
          }
          if (t.dom + u.dom <= D && t.cod + u.cod <= D) {
            add(tensor(t, u));
            add(tensor(u, t));
          }
        }
      }
      return all;
    }

    inline std::set<Table> restrict_dims(std::set<Table> const& all,
                                         unsigned m, unsigned n) {
      std::set<Table> out;
      for (auto const& t : all) {
        if (t.dom == m && t.cod == n) {
          out.insert(t);
        }
      }
      return out;
    }

    inline std::set<Table> generator_closure(unsigned m, unsigned n) {
      return restrict_dims(closure_upto(std::max(m, n) + 1), m, n);
    }

    ////////////////////////////////////////////////////////////////////////
    // Isomorphisms and epimorphisms of cubes
    ////////////////////////////////////////////////////////////////////////

    //! sigma_i : [1]^k -> [1]^{k-1} deleting coordinate i (1-based).
    inline Table delete_coordinate(unsigned i, unsigned k) {
      Table t{k, k - 1, {}};
      for (Point x = 0; x < (Point(1) << k); ++x) {
        Point hi = x >> (k - i + 1), lo = x & ((Point(1) << (k - i)) - 1);
        t.values.push_back(hi << (k - i) | lo);
      }
      return t;
    }

    //! Swap of coordinates i and i + 1 (1-based) on [1]^k.
    inline Table swap_coordinates(unsigned i, unsigned k) {
      Table t{k, k, {}};
      for (Point x = 0; x < (Point(1) << k); ++x) {
        Point a = x >> (k - i) & 1, b = x >> (k - i - 1) & 1;
        Point y = x & ~(Point(3) << (k - i - 1));
        t.values.push_back(y | b << (k - i) | a << (k - i - 1));
      }
      return t;
    }

    //! x |-> (x_{pi(1)}, ..., x_{pi(n)}), pi 0-based.
    inline Table permutation(std::vector<unsigned> const& pi) {
      unsigned n = static_cast<unsigned>(pi.size());
      Table    t{n, n, {}};
      for (Point x = 0; x < (Point(1) << n); ++x) {
        Point y = 0;
        for (unsigned j = 0; j < n; ++j) {
          y = y << 1 | (x >> (n - 1 - pi[j]) & 1);
        }
        t.values.push_back(y);
      }
      return t;
    }

    //! Composites starting at the identity of [1]^m of the given steps,
    //! keeping those landing in [1]^n.
    inline std::set<Table> reachable(unsigned m, unsigned n, bool delete_ok) {
      std::set<Table>    seen{identity(m)};
      std::vector<Table> work{identity(m)};
      while (!work.empty()) {
        Table t = work.back();
        work.pop_back();
        unsigned           k = t.cod;
        std::vector<Table> steps;
        for (unsigned i = 1; i + 1 <= k; ++i) {
          steps.push_back(swap_coordinates(i, k));
        }
        if (delete_ok && k > n) {
          for (unsigned i = 1; i <= k; ++i) {
            steps.push_back(delete_coordinate(i, k));
          }
        }
        for (auto const& s : steps) {
          Table u = after(s, t);
          if (seen.insert(u).second) {
            work.push_back(u);
          }
        }
      }
      std::set<Table> out;
      for (auto const& t : seen) {
        if (t.cod == n) {
          out.insert(t);
        }
      }
      return out;
    }

    //! The six characterizations of automorphisms of [1]^n as sets of
    //! tables, in this order: bijective monotone, interval-preserving
    //! bijection, lattice isomorphism, coordinate permutation, composite of
    //! principal transpositions, cube isomorphism.
    inline std::vector<std::set<Table>> automorphism_sets(unsigned n) {
      std::vector<std::set<Table>> s(6);
      for (auto const& t : box_monotone(n, n, true)) {
        s[0].insert(t);
        if (is_interval_preserving(t)) {
          s[1].insert(t);
        }
        if (is_lattice_hom(t)) {
          s[2].insert(t);
        }
      }
      std::vector<unsigned> pi(n);
      std::iota(pi.begin(), pi.end(), 0u);
      do {
        s[3].insert(permutation(pi));
      } while (std::next_permutation(pi.begin(), pi.end()));
      s[4] = reachable(n, n, false);
      for (auto const& phi : cube::enumerate(n, n)) {
        if (cube::classify(phi) == cube::Kind::iso) {
          s[5].insert(cube::table(phi));
        }
      }
      return s;
    }

    //! Lattice homomorphisms [1]^m -> [1]^n: products of coordinatewise
    //! homomorphisms [1]^m -> [1] found by filtering monotone maps.
    inline std::vector<Table> box_lattice_homs(unsigned m, unsigned n) {
      std::vector<Table> coords;
      for (auto const& t : box_monotone(m, 1)) {
        if (is_lattice_hom(t)) {
          coords.push_back(t);
        }
      }
      std::vector<Table>       out;
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        Table t{m, n, {}};
        for (Point x = 0; x < (Point(1) << m); ++x) {
          Point y = 0;
          for (unsigned j = 0; j < n; ++j) {
            y = y << 1 | coords[pick[j]].values[x];
          }
          t.values.push_back(y);
        }
        out.push_back(std::move(t));
        unsigned j = n;
        while (j > 0 && ++pick[j - 1] == coords.size()) {
          pick[--j] = 0;
        }
        if (j == 0) {
          break;
        }
      }
      return out;
    }

    //! The three characterizations of surjections [1]^m -> [1]^n:
    //! surjective interval-preserving lattice homomorphisms, surjective
    //! lattice homomorphisms, composites of codegeneracies and principal
    //! transpositions.
    inline std::vector<std::set<Table>> surjection_sets(unsigned m,
                                                        unsigned n) {
      std::vector<std::set<Table>> s(3);
      for (auto const& t : box_lattice_homs(m, n)) {
        if (is_surjective(t)) {
          s[1].insert(t);
          if (is_interval_preserving(t)) {
            s[0].insert(t);
          }
        }
      }
      if (m >= n) {
        s[2] = reachable(m, n, true);
      }
      return s;
    }

    ////////////////////////////////////////////////////////////////////////
    // Cubical functions and homotopies
    ////////////////////////////////////////////////////////////////////////

    //! Every cubical function B -> C, found by assigning cells in order of
    //! dimension and checking each face, degeneracy and transposition.
    inline std::vector<CubicalFunction>
    all_functions(CubicalSet const& B, CubicalSet const& C,
                  std::size_t budget = DEFAULT_BUDGET) {
      unsigned N = std::min(B.trunc(), C.trunc());
      if (B.trunc() != C.trunc()) {
        throw std::invalid_argument("all_functions: truncations differ");
      }
      // cells of C by their face tuple
      std::vector<std::unordered_map<Key, std::vector<Index>, VectorHash>> by(
          N + 1);
      auto faces = [](CubicalSet const& X, unsigned n, Index c) {
        Key k;
        for (unsigned i = 1; i <= n; ++i) {
          k.push_back(int(X.face(n, 0, i, c)));
          k.push_back(int(X.face(n, 1, i, c)));
        }
        return k;
      };
      for (unsigned n = 1; n <= N; ++n) {
        for (Index c = 0; c < C.count(n); ++c) {
          by[n][faces(C, n, c)].push_back(c);
        }
      }
      // degeneracies landing on each cell of B
      std::vector<std::vector<std::vector<std::pair<unsigned, Index>>>> degs(
          N + 1);
      for (unsigned n = 0; n <= N; ++n) {
        degs[n].resize(B.count(n));
      }
      for (unsigned n = 0; n < N; ++n) {
        for (Index y = 0; y < B.count(n); ++y) {
          for (unsigned i = 1; i <= n + 1; ++i) {
            degs[n + 1][B.degen(n, i, y)].emplace_back(i, y);
          }
        }
      }
      // each cell right after the last of its faces, so that squares
      // prune edge choices early
      std::vector<std::pair<unsigned, Index>> order;
      for (Index c = 0; c < B.count(0); ++c) {
        order.emplace_back(0, c);
      }
      for (unsigned n = 1; n <= N; ++n) {
        std::vector<std::vector<Index>> pos(n);
        for (unsigned d = 0; d < n; ++d) {
          pos[d].assign(B.count(d), 0);
        }
        for (std::size_t k = 0; k < order.size(); ++k) {
          pos[order[k].first][order[k].second] = static_cast<Index>(k);
        }
        std::vector<std::vector<Index>> after_pos(order.size());
        for (Index c = 0; c < B.count(n); ++c) {
          Index last = 0;
          for (unsigned i = 1; i <= n; ++i) {
            for (int a = 0; a < 2; ++a) {
              last = std::max(last, pos[n - 1][B.face(n, a, i, c)]);
            }
          }
          after_pos[last].push_back(c);
        }
        std::vector<std::pair<unsigned, Index>> next;
        for (std::size_t k = 0; k < order.size(); ++k) {
          next.push_back(order[k]);
          for (Index c : after_pos[k]) {
            next.emplace_back(n, c);
          }
        }
        order = std::move(next);
      }
      CubicalFunction f;
      f.map.resize(N + 1);
      for (unsigned n = 0; n <= N; ++n) {
        f.map[n].assign(B.count(n), UNSET);
      }
      std::vector<CubicalFunction> out;
      Budget                       bud(budget, "cubical function enumeration");
      std::vector<Index>           all_vertices(C.count(0));
      std::iota(all_vertices.begin(), all_vertices.end(), Index(0));
      static std::vector<Index> const none;
      auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
          out.push_back(f);
          return;
        }
        auto [n, x] = order[k];
        std::vector<Index> const* cand = &all_vertices;
        if (n > 0) {
          Key key;
          for (unsigned i = 1; i <= n; ++i) {
            key.push_back(int(f.map[n - 1][B.face(n, 0, i, x)]));
            key.push_back(int(f.map[n - 1][B.face(n, 1, i, x)]));
          }
          auto it = by[n].find(key);
          cand    = it == by[n].end() ? &none : &it->second;
        }
        for (Index y : *cand) {
          bud.charge();
          bool ok = true;
          for (auto [i, w] : degs[n][x]) {
            ok = ok && C.degen(n - 1, i, f.map[n - 1][w]) == y;
          }
          for (unsigned i = 1; i < n && ok; ++i) {
            Index t = B.transp(n, i, x);
            if (t == x) {
              ok = C.transp(n, i, y) == y;
            } else if (f.map[n][t] != UNSET) {
              ok = C.transp(n, i, y) == f.map[n][t]
                   && C.transp(n, i, f.map[n][t]) == y;
            }
          }
          if (ok) {
            f.map[n][x] = y;
            self(self, k + 1);
          }
        }
        f.map[n][x] = UNSET;
      };
      rec(rec, 0);
      return out;
    }

    struct HomotopyGraph {
      std::vector<CubicalFunction>         nodes;
      std::vector<std::pair<Index, Index>> edges;  // deduplicated, i < j
      std::size_t                          homotopies = 0;
    };

    //! Nodes are all cubical functions B -> C, edges the elementary
    //! homotopies B (x) [1] -> C between their two ends.
    inline HomotopyGraph homotopy_graph(CubicalSet const& B,
                                        CubicalSet const& C,
                                        std::size_t budget = DEFAULT_BUDGET) {
      HomotopyGraph G;
      G.nodes = all_functions(B, C, budget);
      std::map<std::vector<std::vector<Index>>, Index> index;
      for (Index i = 0; i < G.nodes.size(); ++i) {
        index[G.nodes[i].map] = i;
      }
      unsigned N     = B.trunc();
      auto     I     = cset::representable(1, N);
      auto     T     = cset::tensor(B, I);
      // B -> B (x) [1] at either end
      std::vector<std::vector<std::vector<Index>>> ends(2);
      for (int a = 0; a < 2; ++a) {
        Index v = cset::representable_cell(I, cube::vertex(Point(a), 1));
        ends[a].resize(N + 1);
        for (unsigned m = 0; m <= N; ++m) {
          for (Index b = 0; b < B.count(m); ++b) {
            ends[a][m].push_back(T.cell(m, 0, b, v, cube::identity(m)));
          }
        }
      }
      std::set<std::pair<Index, Index>> edges;
      for (auto const& H : all_functions(T.set, C, budget)) {
        ++G.homotopies;
        Index e[2];
        for (int a = 0; a < 2; ++a) {
          std::vector<std::vector<Index>> m(N + 1);
          for (unsigned d = 0; d <= N; ++d) {
            for (Index c : ends[a][d]) {
              m[d].push_back(H(d, c));
            }
          }
          e[a] = index.at(m);
        }
        if (e[0] != e[1]) {
          edges.emplace(std::min(e[0], e[1]), std::max(e[0], e[1]));
        }
      }
      G.edges.assign(edges.begin(), edges.end());
      return G;
    }

    //! Connected components of the homotopy graph.
    inline Partition hom_classes_presheaf_oracle(
        CubicalSet const& B, CubicalSet const& C,
        std::size_t budget = DEFAULT_BUDGET) {
      auto         G = homotopy_graph(B, C, budget);
      DisjointSets ds(G.nodes.size());
      for (auto [i, j] : G.edges) {
        ds.unite(i, j);
      }
      return Partition::from(ds);
    }

  }  // namespace oracle
}  // namespace dicube

#endif  // DICUBE_ORACLE_HPP_
