// dicube - finite directed cubical homotopy
//
// Dimension-truncated cubical sets over the symmetric cube category.
//
// A CubicalSet stores the cells of dimensions 0..N together with the actions
// of all generating morphisms:
//   face(n, alpha, i, c)   d_{alpha,i} : C_n -> C_{n-1},  1 <= i <= n
//   degen(n, i, c)         s_i         : C_n -> C_{n+1},  1 <= i <= n+1, n < N
//   transp(n, i, c)        t_i         : C_n -> C_n,      1 <= i <= n-1
// The action of an arbitrary morphism is computed from its generator
// decomposition.  Degenerate cells are stored like any other cell.

#ifndef DICUBE_CSET_HPP_
#define DICUBE_CSET_HPP_

#include <algorithm>      // for sort, fill
#include <array>          // for array
#include <deque>          // for deque
#include <functional>     // for function
#include <map>            // for map
#include <memory>         // for shared_ptr
#include <stdexcept>      // for invalid_argument
#include <string>         // for string
#include <tuple>          // for tuple
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair
#include <vector>         // for vector

#include "common.hpp"
#include "cube.hpp"
#include "lattice.hpp"

namespace dicube {

  inline constexpr Index UNSET = Index(-1);

  using Key = std::vector<int>;

  namespace detail {
    inline std::vector<cube::Generator> const&
    cached_decompose(CubeMorphism const& phi) {
      static std::map<CubeMorphism, std::vector<cube::Generator>> cache;
      auto it = cache.find(phi);
      if (it == cache.end()) {
        it = cache.emplace(phi, cube::decompose(phi)).first;
      }
      return it->second;
    }
  }  // namespace detail

  class CubicalSet {
   public:
    CubicalSet() = default;

    CubicalSet(unsigned N, std::vector<std::size_t> counts)
        : _N(N), _counts(std::move(counts)) {
      if (_counts.size() != N + 1) {
        throw std::invalid_argument("cubical set: need N+1 cell counts");
      }
      _face.resize(N + 1);
      _degen.resize(N + 1);
      _transp.resize(N + 1);
      for (unsigned n = 0; n <= N; ++n) {
        _face[n].assign(2 * n * _counts[n], UNSET);
        if (n < N) {
          _degen[n].assign((n + 1) * _counts[n], UNSET);
        }
        if (n >= 2) {
          _transp[n].assign((n - 1) * _counts[n], UNSET);
        }
      }
    }

    unsigned trunc() const noexcept {
      return _N;
    }

    std::size_t count(unsigned n) const {
      return _counts.at(n);
    }

    std::vector<std::size_t> const& counts() const noexcept {
      return _counts;
    }

    std::size_t total() const {
      std::size_t t = 0;
      for (auto c : _counts) {
        t += c;
      }
      return t;
    }

    Index face(unsigned n, int alpha, unsigned i, Index c) const {
      return _face[n][((i - 1) * 2 + (alpha ? 1 : 0)) * _counts[n] + c];
    }

    Index degen(unsigned n, unsigned i, Index c) const {
      return _degen[n][(i - 1) * _counts[n] + c];
    }

    Index transp(unsigned n, unsigned i, Index c) const {
      return _transp[n][(i - 1) * _counts[n] + c];
    }

    void set_face(unsigned n, int alpha, unsigned i, Index c, Index v) {
      _face[n][((i - 1) * 2 + (alpha ? 1 : 0)) * _counts[n] + c] = v;
    }

    void set_degen(unsigned n, unsigned i, Index c, Index v) {
      _degen[n][(i - 1) * _counts[n] + c] = v;
    }

    void set_transp(unsigned n, unsigned i, Index c, Index v) {
      _transp[n][(i - 1) * _counts[n] + c] = v;
    }

    //! Action of a generator on a cell of dimension g.n.
    Index apply(cube::Generator const& g, Index c) const {
      switch (g.type) {
        case cube::Generator::face:
          return face(g.n, g.alpha, g.i, c);
        case cube::Generator::codegeneracy:
          return degen(g.n, g.i, c);
        default:
          return transp(g.n, g.i, c);
      }
    }

    //! C(phi)(c) for c of dimension phi.cod().
    Index act(CubeMorphism const& phi, Index c) const {
      if (phi.dom() > _N || phi.cod() > _N) {
        throw std::invalid_argument("act: " + phi.to_string()
                                    + " exceeds truncation "
                                    + std::to_string(_N));
      }
      auto const& gens = detail::cached_decompose(phi);
      for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
        c = apply(*it, c);
      }
      return c;
    }

    //! All generators whose action starts in dimension n.
    std::vector<cube::Generator> generators_from(unsigned n) const {
      std::vector<cube::Generator> out;
      for (unsigned i = 1; i <= n; ++i) {
        out.push_back({cube::Generator::face, 0, i, n});
        out.push_back({cube::Generator::face, 1, i, n});
      }
      if (n < _N) {
        for (unsigned i = 1; i <= n + 1; ++i) {
          out.push_back({cube::Generator::codegeneracy, 0, i, n});
        }
      }
      for (unsigned i = 1; i + 1 <= n; ++i) {
        out.push_back({cube::Generator::transposition, 0, i, n});
      }
      return out;
    }

    //! Computes degeneracy flags; call after all tables are filled.
    void finalize() {
      for (unsigned n = 0; n <= _N; ++n) {
        for (auto v : _face[n]) {
          if (v == UNSET) {
            throw std::invalid_argument("cubical set: unset face");
          }
        }
        for (auto v : _degen[n]) {
          if (v == UNSET) {
            throw std::invalid_argument("cubical set: unset degeneracy");
          }
        }
        for (auto v : _transp[n]) {
          if (v == UNSET) {
            throw std::invalid_argument("cubical set: unset transposition");
          }
        }
      }
      _degenerate.assign(_N + 1, {});
      for (unsigned n = 0; n <= _N; ++n) {
        _degenerate[n].assign(_counts[n], false);
      }
      for (unsigned n = 0; n < _N; ++n) {
        for (unsigned i = 1; i <= n + 1; ++i) {
          for (Index c = 0; c < _counts[n]; ++c) {
            _degenerate[n + 1][degen(n, i, c)] = true;
          }
        }
      }
    }

    bool is_degenerate(unsigned n, Index c) const {
      return _degenerate[n][c];
    }

    std::vector<Index> nondegenerate(unsigned n) const {
      std::vector<Index> out;
      for (Index c = 0; c < _counts[n]; ++c) {
        if (!_degenerate[n][c]) {
          out.push_back(c);
        }
      }
      return out;
    }

    std::vector<std::size_t> nondegenerate_counts() const {
      std::vector<std::size_t> out;
      for (unsigned n = 0; n <= _N; ++n) {
        out.push_back(nondegenerate(n).size());
      }
      return out;
    }

    //! Orbit representatives (smallest index) of nondegenerate n-cells under
    //! the transposition action.  A nondegenerate cube and its coordinate
    //! permutations are distinct cells but one geometric cube.
    std::vector<Index> nondegenerate_orbits(unsigned n) const {
      std::vector<Index> out;
      std::vector<bool>  seen(_counts[n], false);
      for (Index c = 0; c < _counts[n]; ++c) {
        if (_degenerate[n][c] || seen[c]) {
          continue;
        }
        out.push_back(c);
        std::vector<Index> stack{c};
        seen[c] = true;
        while (!stack.empty()) {
          Index d = stack.back();
          stack.pop_back();
          for (unsigned i = 1; i + 1 <= n; ++i) {
            Index e = transp(n, i, d);
            if (!seen[e]) {
              seen[e] = true;
              stack.push_back(e);
            }
          }
        }
      }
      return out;
    }

    std::vector<std::size_t> cube_counts() const {
      std::vector<std::size_t> out;
      for (unsigned n = 0; n <= _N; ++n) {
        out.push_back(nondegenerate_orbits(n).size());
      }
      return out;
    }

    //! The fully degenerate n-cell at vertex v.
    Index degenerate_at(Index v, unsigned n) const {
      return act(cube::terminal(n), v);
    }

    //! Vertices of an n-cell, indexed by the points of [1]^n.
    std::vector<Index> vertices(unsigned n, Index c) const {
      std::vector<Index> out;
      for (Point x = 0; x < (Point(1) << n); ++x) {
        out.push_back(act(cube::vertex(x, n), c));
      }
      return out;
    }

    //! Source and target vertex of a 1-cell.
    std::pair<Index, Index> endpoints(Index e) const {
      return {face(1, 0, 1, e), face(1, 1, 1, e)};
    }

    //! Checks functoriality: C(phi o g) = C(g) C(phi) for every morphism
    //! phi and generator g within the truncation, and that degenerate cells
    //! are closed under transpositions.  Returns an empty string on success.
    std::string validate() const {
      for (unsigned n = 0; n <= _N; ++n) {
        for (unsigned m = 0; m <= _N; ++m) {
          for (auto const& phi : cube::enumerate(m, n)) {
            for (auto const& g : generators_into(m)) {
              auto comp = cube::compose(phi, g.morphism());
              for (Index c = 0; c < _counts[n]; ++c) {
                if (act(comp, c) != apply(g, act(phi, c))) {
                  return "functoriality fails for " + phi.to_string()
                         + " after " + g.morphism().to_string()
                         + " on cell " + std::to_string(c) + " of dimension "
                         + std::to_string(n);
                }
              }
            }
          }
        }
      }
      for (unsigned n = 2; n <= _N; ++n) {
        for (unsigned i = 1; i + 1 <= n; ++i) {
          for (Index c = 0; c < _counts[n]; ++c) {
            if (_degenerate[n][c] && !_degenerate[n][transp(n, i, c)]) {
              return "degenerate cells not closed under transposition";
            }
          }
        }
      }
      return "";
    }

    //! Optional per-cell keys recorded by model-based constructors.
    std::vector<std::vector<Key>> const& keys() const noexcept {
      return _keys;
    }

    void set_keys(std::vector<std::vector<Key>> keys) {
      _keys = std::move(keys);
    }

   private:
    //! Generators g with codomain dimension m and domain within truncation.
    std::vector<cube::Generator> generators_into(unsigned m) const {
      std::vector<cube::Generator> out;
      if (m >= 1) {
        for (unsigned i = 1; i <= m; ++i) {
          out.push_back({cube::Generator::face, 0, i, m});
          out.push_back({cube::Generator::face, 1, i, m});
        }
      }
      if (m + 1 <= _N) {
        for (unsigned i = 1; i <= m + 1; ++i) {
          out.push_back({cube::Generator::codegeneracy, 0, i, m});
        }
      }
      for (unsigned i = 1; i + 1 <= m; ++i) {
        out.push_back({cube::Generator::transposition, 0, i, m});
      }
      return out;
    }

    unsigned                                _N = 0;
    std::vector<std::size_t>                _counts;
    std::vector<std::vector<Index>>         _face;
    std::vector<std::vector<Index>>         _degen;
    std::vector<std::vector<Index>>         _transp;
    std::vector<std::vector<bool>>          _degenerate;
    std::vector<std::vector<Key>>           _keys;
  };

  //! Per-dimension cell maps.
  struct CubicalFunction {
    std::vector<std::vector<Index>> map;

    Index operator()(unsigned n, Index c) const {
      return map[n][c];
    }
  };

  //! Per-dimension membership flags.
  struct Subpresheaf {
    std::vector<std::vector<bool>> cells;

    bool contains(unsigned n, Index c) const {
      return cells[n][c];
    }

    std::size_t size() const {
      std::size_t s = 0;
      for (auto const& v : cells) {
        for (bool b : v) {
          s += b;
        }
      }
      return s;
    }

    bool subset_of(Subpresheaf const& that) const {
      for (std::size_t n = 0; n < cells.size(); ++n) {
        for (std::size_t c = 0; c < cells[n].size(); ++c) {
          if (cells[n][c] && !that.cells[n][c]) {
            return false;
          }
        }
      }
      return true;
    }

    bool operator==(Subpresheaf const& that) const {
      return cells == that.cells;
    }
  };

  namespace cset {

    ////////////////////////////////////////////////////////////////////////
    // Model-based construction
    ////////////////////////////////////////////////////////////////////////

    //! Cells given by keys, actions by a precomposition rule
    //! precompose(key of an n-cell, n, phi : [1]^m -> [1]^n) = key of an
    //! m-cell.
    struct PresheafModel {
      unsigned                                                    N = 0;
      std::vector<std::vector<Key>>                               keys;
      std::function<Key(Key const&, unsigned, CubeMorphism const&)> precompose;
    };

    inline CubicalSet build(PresheafModel const& M) {
      std::vector<std::size_t> counts;
      for (auto const& k : M.keys) {
        counts.push_back(k.size());
      }
      CubicalSet C(M.N, counts);
      std::vector<std::unordered_map<Key, Index, VectorHash>> index(M.N + 1);
      for (unsigned n = 0; n <= M.N; ++n) {
        for (Index c = 0; c < M.keys[n].size(); ++c) {
          if (!index[n].emplace(M.keys[n][c], c).second) {
            throw std::invalid_argument("build: duplicate key");
          }
        }
      }
      auto lookup = [&](unsigned n, Key const& k) {
        auto it = index[n].find(k);
        if (it == index[n].end()) {
          throw std::invalid_argument(
              "build: model is not closed under the cube action in "
              "dimension "
              + std::to_string(n));
        }
        return it->second;
      };
      for (unsigned n = 0; n <= M.N; ++n) {
        for (Index c = 0; c < M.keys[n].size(); ++c) {
          auto const& k = M.keys[n][c];
          for (unsigned i = 1; i <= n; ++i) {
            for (int a = 0; a < 2; ++a) {
              C.set_face(n, a, i, c,
                         lookup(n - 1, M.precompose(k, n, cube::face(a, i, n))));
            }
          }
          if (n < M.N) {
            for (unsigned i = 1; i <= n + 1; ++i) {
              C.set_degen(n, i, c,
                          lookup(n + 1,
                                 M.precompose(k, n, cube::codegeneracy(i, n))));
            }
          }
          for (unsigned i = 1; i + 1 <= n; ++i) {
            C.set_transp(n, i, c,
                         lookup(n, M.precompose(k, n,
                                                cube::transposition(i, n))));
          }
        }
      }
      C.finalize();
      C.set_keys(M.keys);
      return C;
    }

    inline Key to_key(CubeMorphism const& phi) {
      return Key(phi.outputs().begin(), phi.outputs().end());
    }

    inline CubeMorphism from_key(unsigned dom, Key const& k) {
      return CubeMorphism(dom, std::vector<std::uint8_t>(k.begin(), k.end()));
    }

    //! The representable cubical set on [1]^n; k-cells are the cube
    //! morphisms [1]^k -> [1]^n in enumeration order.
    inline CubicalSet representable(unsigned n, unsigned N = 3) {
      if (N < n) {
        throw std::invalid_argument("representable: truncation below "
                                    "dimension");
      }
      PresheafModel M;
      M.N = N;
      for (unsigned k = 0; k <= N; ++k) {
        M.keys.emplace_back();
        for (auto const& phi : cube::enumerate(k, n)) {
          M.keys.back().push_back(to_key(phi));
        }
      }
      M.precompose = [n](Key const& key, unsigned k, CubeMorphism const& phi) {
        return to_key(cube::compose(from_key(k, key), phi));
      };
      (void) n;
      return build(M);
    }

    //! The cell of representable(n) given by a morphism.
    inline Index representable_cell(CubicalSet const& R, CubeMorphism const& phi) {
      auto const& ks = R.keys()[phi.dom()];
      auto        it = std::find(ks.begin(), ks.end(), to_key(phi));
      if (it == ks.end()) {
        throw std::invalid_argument("representable_cell: not found");
      }
      return static_cast<Index>(it - ks.begin());
    }

    inline CubicalSet point(unsigned N = 3) {
      return representable(0, N);
    }

    //! Cells of representable(n) lying in a proper face.
    inline Subpresheaf boundary(unsigned n, unsigned N = 3) {
      auto        R = representable(n, N);
      Subpresheaf S;
      for (unsigned k = 0; k <= N; ++k) {
        S.cells.emplace_back();
        for (auto const& key : R.keys()[k]) {
          bool proper = false;
          for (int c : key) {
            proper |= c < 2;
          }
          S.cells.back().push_back(proper);
        }
      }
      return S;
    }

    //! Enumerates interval-preserving lattice homomorphisms [1]^k -> L as
    //! value tables.
    inline std::vector<Key> lattice_cubes(FiniteLattice const& L, unsigned k) {
      std::vector<Key> out;
      std::vector<int> atoms(k);
      Point            size = Point(1) << k;
      for (Element b = 0; b < L.size(); ++b) {
        auto up = L.upper_covers(b);
        up.push_back(b);
        std::sort(up.begin(), up.end());
        auto rec = [&](auto&& self, unsigned i) -> void {
          if (i == k) {
            Key t(size);
            for (Point x = 0; x < size; ++x) {
              Element v = b;
              for (unsigned j = 0; j < k; ++j) {
                if (coord(x, k, j)) {
                  v = L.join(v, atoms[j]);
                }
              }
              t[x] = static_cast<int>(v);
            }
            // lattice hom and Boolean-interval images
            for (Point x = 0; x < size; ++x) {
              for (Point y = 0; y < size; ++y) {
                if (t[x & y] != int(L.meet(t[x], t[y]))) {
                  return;
                }
              }
            }
            for (Point a = 0; a < size; ++a) {
              for (Point c = 0; c < size; ++c) {
                if ((a & c) != a) {
                  continue;
                }
                std::vector<Element> img;
                for (Point z = 0; z < size; ++z) {
                  if ((a & z) == a && (z & c) == z) {
                    img.push_back(t[z]);
                  }
                }
                auto I = lattice::as_interval(L, img);
                if (!I || !I->boolean_rank) {
                  return;
                }
              }
            }
            out.push_back(std::move(t));
            return;
          }
          for (Element a : up) {
            atoms[i] = static_cast<int>(a);
            self(self, i + 1);
          }
        };
        rec(rec, 0);
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    //! The cubical set whose n-cells are the Dis-morphisms [1]^n -> L.
    inline CubicalSet from_lattice(FiniteLattice const& L, unsigned N = 3) {
      if (!L.is_distributive()) {
        throw std::invalid_argument("from_lattice: lattice is not "
                                    "distributive");
      }
      PresheafModel M;
      M.N = N;
      for (unsigned k = 0; k <= N; ++k) {
        M.keys.push_back(lattice_cubes(L, k));
      }
      M.precompose = [](Key const& t, unsigned, CubeMorphism const& phi) {
        Key out(std::size_t(1) << phi.dom());
        for (Point x = 0; x < out.size(); ++x) {
          out[x] = t[phi(x)];
        }
        return out;
      };
      return build(M);
    }

    ////////////////////////////////////////////////////////////////////////
    // Subpresheaves and functions
    ////////////////////////////////////////////////////////////////////////

    inline Subpresheaf empty_sub(CubicalSet const& C) {
      Subpresheaf S;
      for (unsigned n = 0; n <= C.trunc(); ++n) {
        S.cells.emplace_back(C.count(n), false);
      }
      return S;
    }

    inline Subpresheaf full_sub(CubicalSet const& C) {
      Subpresheaf S;
      for (unsigned n = 0; n <= C.trunc(); ++n) {
        S.cells.emplace_back(C.count(n), true);
      }
      return S;
    }

    //! Closes S under all generator actions.
    inline void close(CubicalSet const& C, Subpresheaf& S) {
      std::vector<std::pair<unsigned, Index>> stack;
      for (unsigned n = 0; n <= C.trunc(); ++n) {
        for (Index c = 0; c < C.count(n); ++c) {
          if (S.cells[n][c]) {
            stack.emplace_back(n, c);
          }
        }
      }
      while (!stack.empty()) {
        auto [n, c] = stack.back();
        stack.pop_back();
        for (auto const& g : C.generators_from(n)) {
          unsigned m = g.dom();
          Index    d = C.apply(g, c);
          if (!S.cells[m][d]) {
            S.cells[m][d] = true;
            stack.emplace_back(m, d);
          }
        }
      }
    }

    inline bool is_subpresheaf(CubicalSet const& C, Subpresheaf const& S) {
      auto T = S;
      close(C, T);
      return T == S;
    }

    //! The smallest subpresheaf containing the cell.
    inline Subpresheaf supp(CubicalSet const& C, unsigned n, Index c) {
      auto S        = empty_sub(C);
      S.cells[n][c] = true;
      close(C, S);
      return S;
    }

    inline Subpresheaf unite(Subpresheaf S, Subpresheaf const& T) {
      for (std::size_t n = 0; n < S.cells.size(); ++n) {
        for (std::size_t c = 0; c < S.cells[n].size(); ++c) {
          S.cells[n][c] = S.cells[n][c] || T.cells[n][c];
        }
      }
      return S;
    }

    inline Subpresheaf intersect(Subpresheaf S, Subpresheaf const& T) {
      for (std::size_t n = 0; n < S.cells.size(); ++n) {
        for (std::size_t c = 0; c < S.cells[n].size(); ++c) {
          S.cells[n][c] = S.cells[n][c] && T.cells[n][c];
        }
      }
      return S;
    }

    //! Union of the supports of all cells having v as a vertex.
    inline Subpresheaf closed_star(CubicalSet const& C, Index v) {
      auto S = empty_sub(C);
      for (unsigned n = 0; n <= C.trunc(); ++n) {
        for (Index c = 0; c < C.count(n); ++c) {
          auto vs = C.vertices(n, c);
          if (std::find(vs.begin(), vs.end(), v) != vs.end()) {
            S.cells[n][c] = true;
          }
        }
      }
      close(C, S);
      return S;
    }

    inline Subpresheaf image(CubicalSet const& B, CubicalFunction const& f,
                             Subpresheaf const& S) {
      auto T = empty_sub(B);
      for (unsigned n = 0; n < S.cells.size(); ++n) {
        for (Index c = 0; c < S.cells[n].size(); ++c) {
          if (S.cells[n][c]) {
            T.cells[n][f(n, c)] = true;
          }
        }
      }
      return T;
    }

    struct Restriction {
      CubicalSet                      set;
      std::vector<std::vector<Index>> to_parent;    // new -> old
      std::vector<std::vector<Index>> from_parent;  // old -> new or UNSET
    };

    //! A subpresheaf as a cubical set in its own right.
    inline Restriction restrict(CubicalSet const& C, Subpresheaf const& S) {
      if (!is_subpresheaf(C, S)) {
        throw std::invalid_argument("restrict: not a subpresheaf");
      }
      Restriction              R;
      std::vector<std::size_t> counts;
      for (unsigned n = 0; n <= C.trunc(); ++n) {
        R.to_parent.emplace_back();
        R.from_parent.emplace_back(C.count(n), UNSET);
        for (Index c = 0; c < C.count(n); ++c) {
          if (S.cells[n][c]) {
            R.from_parent[n][c] = static_cast<Index>(R.to_parent[n].size());
            R.to_parent[n].push_back(c);
          }
        }
        counts.push_back(R.to_parent[n].size());
      }
      R.set = CubicalSet(C.trunc(), counts);
      for (unsigned n = 0; n <= C.trunc(); ++n) {
        for (Index c = 0; c < counts[n]; ++c) {
          Index old = R.to_parent[n][c];
          for (unsigned i = 1; i <= n; ++i) {
            for (int a = 0; a < 2; ++a) {
              R.set.set_face(n, a, i, c,
                             R.from_parent[n - 1][C.face(n, a, i, old)]);
            }
          }
          if (n < C.trunc()) {
            for (unsigned i = 1; i <= n + 1; ++i) {
              R.set.set_degen(n, i, c,
                              R.from_parent[n + 1][C.degen(n, i, old)]);
            }
          }
          for (unsigned i = 1; i + 1 <= n; ++i) {
            R.set.set_transp(n, i, c, R.from_parent[n][C.transp(n, i, old)]);
          }
        }
      }
      R.set.finalize();
      return R;
    }

    inline std::string check_function(CubicalSet const& A, CubicalSet const& B,
                                      CubicalFunction const& f) {
      if (f.map.size() != A.trunc() + 1 || B.trunc() < A.trunc()) {
        return "dimension mismatch";
      }
      for (unsigned n = 0; n <= A.trunc(); ++n) {
        if (f.map[n].size() != A.count(n)) {
          return "wrong number of cells in dimension " + std::to_string(n);
        }
        for (Index c = 0; c < A.count(n); ++c) {
          if (f(n, c) >= B.count(n)) {
            return "value out of range";
          }
          for (auto const& g : A.generators_from(n)) {
            if (f(g.dom(), A.apply(g, c)) != B.apply(g, f(n, c))) {
              return "does not commute with " + g.morphism().to_string()
                     + " on cell " + std::to_string(c) + " of dimension "
                     + std::to_string(n);
            }
          }
        }
      }
      return "";
    }

    inline bool is_cubical_function(CubicalSet const& A, CubicalSet const& B,
                                    CubicalFunction const& f) {
      return check_function(A, B, f).empty();
    }

    //! g after f.
    inline CubicalFunction compose(CubicalFunction const& g,
                                   CubicalFunction const& f) {
      CubicalFunction h;
      for (std::size_t n = 0; n < f.map.size(); ++n) {
        h.map.emplace_back();
        for (Index c : f.map[n]) {
          h.map[n].push_back(g.map[n][c]);
        }
      }
      return h;
    }

    inline CubicalFunction identity_function(CubicalSet const& C) {
      CubicalFunction f;
      for (unsigned n = 0; n <= C.trunc(); ++n) {
        f.map.emplace_back(C.count(n));
        for (Index c = 0; c < C.count(n); ++c) {
          f.map[n][c] = c;
        }
      }
      return f;
    }

    //! The map representable(n) -> C classifying an n-cell c.
    inline CubicalFunction yoneda(CubicalSet const& R, CubicalSet const& C,
                                  unsigned n, Index c) {
      CubicalFunction f;
      for (unsigned k = 0; k <= R.trunc(); ++k) {
        f.map.emplace_back();
        for (auto const& key : R.keys()[k]) {
          f.map[k].push_back(C.act(from_key(k, key), c));
        }
      }
      (void) n;
      return f;
    }

    ////////////////////////////////////////////////////////////////////////
    // Coproducts and quotients
    ////////////////////////////////////////////////////////////////////////

    inline CubicalSet disjoint_union(CubicalSet const& A, CubicalSet const& B) {
      if (A.trunc() != B.trunc()) {
        throw std::invalid_argument("disjoint_union: truncations differ");
      }
      std::vector<std::size_t> counts;
      for (unsigned n = 0; n <= A.trunc(); ++n) {
        counts.push_back(A.count(n) + B.count(n));
      }
      CubicalSet C(A.trunc(), counts);
      auto       copy = [&](CubicalSet const& X, auto off) {
        for (unsigned n = 0; n <= X.trunc(); ++n) {
          for (Index c = 0; c < X.count(n); ++c) {
            Index cc = static_cast<Index>(c + off(n));
            for (unsigned i = 1; i <= n; ++i) {
              for (int a = 0; a < 2; ++a) {
                C.set_face(n, a, i, cc,
                           static_cast<Index>(X.face(n, a, i, c) + off(n - 1)));
              }
            }
            if (n < X.trunc()) {
              for (unsigned i = 1; i <= n + 1; ++i) {
                C.set_degen(n, i, cc,
                            static_cast<Index>(X.degen(n, i, c) + off(n + 1)));
              }
            }
            for (unsigned i = 1; i + 1 <= n; ++i) {
              C.set_transp(n, i, cc,
                           static_cast<Index>(X.transp(n, i, c) + off(n)));
            }
          }
        }
      };
      copy(A, [](unsigned) { return std::size_t(0); });
      copy(B, [&](unsigned n) { return A.count(n); });
      C.finalize();
      return C;
    }

    struct Quotient {
      CubicalSet      set;
      CubicalFunction projection;
    };

    struct CellPair {
      unsigned dim;
      Index    a;
      Index    b;
    };

    //! Coequalizer of the identifications: the smallest congruence
    //! containing the pairs.
    inline Quotient quotient(CubicalSet const& C,
                             std::vector<CellPair> const& pairs) {
      std::vector<std::size_t> offset(C.trunc() + 2, 0);
      for (unsigned n = 0; n <= C.trunc(); ++n) {
        offset[n + 1] = offset[n] + C.count(n);
      }
      DisjointSets          ds(offset.back());
      std::deque<CellPair>  work;
      for (auto const& p : pairs) {
        if (p.dim > C.trunc() || p.a >= C.count(p.dim)
            || p.b >= C.count(p.dim)) {
          throw std::invalid_argument("quotient: cell out of range");
        }
        work.push_back(p);
      }
      while (!work.empty()) {
        auto p = work.front();
        work.pop_front();
        if (!ds.unite(offset[p.dim] + p.a, offset[p.dim] + p.b)) {
          continue;
        }
        for (auto const& g : C.generators_from(p.dim)) {
          work.push_back({g.dom(), C.apply(g, p.a), C.apply(g, p.b)});
        }
      }
      // classes per dimension, numbered by smallest member
      Quotient                        Q;
      std::vector<std::size_t>        counts;
      std::vector<std::vector<Index>> rep(C.trunc() + 1);
      Q.projection.map.resize(C.trunc() + 1);
      for (unsigned n = 0; n <= C.trunc(); ++n) {
        std::unordered_map<std::size_t, Index> id;
        for (Index c = 0; c < C.count(n); ++c) {
          auto r  = ds.find(offset[n] + c);
          auto it = id.find(r);
          if (it == id.end()) {
            it = id.emplace(r, static_cast<Index>(rep[n].size())).first;
            rep[n].push_back(c);
          }
          Q.projection.map[n].push_back(it->second);
        }
        counts.push_back(rep[n].size());
      }
      Q.set = CubicalSet(C.trunc(), counts);
      auto const& P = Q.projection.map;
      for (unsigned n = 0; n <= C.trunc(); ++n) {
        for (Index k = 0; k < counts[n]; ++k) {
          Index c = rep[n][k];
          for (unsigned i = 1; i <= n; ++i) {
            for (int a = 0; a < 2; ++a) {
              Q.set.set_face(n, a, i, k, P[n - 1][C.face(n, a, i, c)]);
            }
          }
          if (n < C.trunc()) {
            for (unsigned i = 1; i <= n + 1; ++i) {
              Q.set.set_degen(n, i, k, P[n + 1][C.degen(n, i, c)]);
            }
          }
          for (unsigned i = 1; i + 1 <= n; ++i) {
            Q.set.set_transp(n, i, k, P[n][C.transp(n, i, c)]);
          }
        }
      }
      Q.set.finalize();
      return Q;
    }

    //! Collapses a subpresheaf A to a point: every cell of A is identified
    //! with the degenerate cell at the first vertex of A.
    inline Quotient collapse(CubicalSet const& C, Subpresheaf const& A) {
      Index v = UNSET;
      for (Index c = 0; c < C.count(0); ++c) {
        if (A.cells[0][c]) {
          v = c;
          break;
        }
      }
      if (v == UNSET) {
        throw std::invalid_argument("collapse: subpresheaf has no vertex");
      }
      std::vector<CellPair> pairs;
      for (unsigned n = 0; n <= C.trunc(); ++n) {
        Index d = C.degenerate_at(v, n);
        for (Index c = 0; c < C.count(n); ++c) {
          if (A.cells[n][c] && c != d) {
            pairs.push_back({n, c, d});
          }
        }
      }
      return quotient(C, pairs);
    }

    ////////////////////////////////////////////////////////////////////////
    // Tensor product
    ////////////////////////////////////////////////////////////////////////

    struct Tensor {
      CubicalSet set;
      // (p, q, a, b, m, outputs of phi) -> cell index in dimension m
      std::unordered_map<Key, Index, VectorHash> lookup;

      //! The class of (a in A_p, b in B_q, phi : [1]^m -> [1]^{p+q}).
      Index cell(unsigned p, unsigned q, Index a, Index b,
                 CubeMorphism const& phi) const {
        Key k{int(p), int(q), int(a), int(b), int(phi.dom())};
        for (auto c : phi.outputs()) {
          k.push_back(c);
        }
        auto it = lookup.find(k);
        if (it == lookup.end()) {
          throw std::invalid_argument("tensor: triple out of range");
        }
        return it->second;
      }
    };

    //! Day convolution, truncated at the common truncation N; only triples
    //! with p + q <= N are formed.
    inline Tensor tensor(CubicalSet const& A, CubicalSet const& B) {
      if (A.trunc() != B.trunc()) {
        throw std::invalid_argument("tensor: truncations differ");
      }
      unsigned N = A.trunc();
      struct Triple {
        unsigned p, q;
        Index    a, b;
        unsigned m;
        Key      phi;
      };
      std::vector<Triple>                        triples;
      std::unordered_map<Key, Index, VectorHash> id;
      auto key = [](unsigned p, unsigned q, Index a, Index b, unsigned m,
                    Key const& phi) {
        Key k{int(p), int(q), int(a), int(b), int(m)};
        k.insert(k.end(), phi.begin(), phi.end());
        return k;
      };
      std::vector<std::vector<std::vector<Key>>> homs(N + 1);
      for (unsigned m = 0; m <= N; ++m) {
        homs[m].resize(N + 1);
        for (unsigned d = 0; d <= N; ++d) {
          for (auto const& phi : cube::enumerate(m, d)) {
            homs[m][d].push_back(to_key(phi));
          }
        }
      }
      for (unsigned p = 0; p <= N; ++p) {
        for (unsigned q = 0; p + q <= N; ++q) {
          for (Index a = 0; a < A.count(p); ++a) {
            for (Index b = 0; b < B.count(q); ++b) {
              for (unsigned m = 0; m <= N; ++m) {
                for (auto const& phi : homs[m][p + q]) {
                  id.emplace(key(p, q, a, b, m, phi),
                             static_cast<Index>(triples.size()));
                  triples.push_back({p, q, a, b, m, phi});
                }
              }
            }
          }
        }
      }
      DisjointSets ds(triples.size());
      auto         find_id = [&](unsigned p, unsigned q, Index a, Index b,
                         unsigned m, CubeMorphism const& phi) {
        return id.at(key(p, q, a, b, m, to_key(phi)));
      };
      // (A(alpha) a, b, phi) ~ (a, b, (alpha (x) 1) phi), likewise for B
      for (unsigned p = 0; p <= N; ++p) {
        for (unsigned q = 0; p + q <= N; ++q) {
          for (unsigned side = 0; side < 2; ++side) {
            unsigned    d = side == 0 ? p : q;
            auto const& X = side == 0 ? A : B;
            for (auto const& g : X.generators_from(d)) {
              unsigned d2 = g.dom();
              unsigned p2 = side == 0 ? d2 : p, q2 = side == 0 ? q : d2;
              if (p2 + q2 > N) {
                continue;
              }
              auto gm = g.morphism();
              auto lifted = side == 0 ? cube::tensor(gm, cube::identity(q))
                                      : cube::tensor(cube::identity(p), gm);
              for (Index a = 0; a < A.count(p); ++a) {
                for (Index b = 0; b < B.count(q); ++b) {
                  Index a2 = side == 0 ? X.apply(g, a) : a;
                  Index b2 = side == 0 ? b : X.apply(g, b);
                  for (unsigned m = 0; m <= N; ++m) {
                    for (auto const& pk : homs[m][p2 + q2]) {
                      auto phi = from_key(m, pk);
                      ds.unite(find_id(p2, q2, a2, b2, m, phi),
                               find_id(p, q, a, b, m,
                                       cube::compose(lifted, phi)));
                    }
                  }
                }
              }
            }
          }
        }
      }
      std::vector<Index> cls;
      ds.labels(cls);
      // renumber classes per dimension
      std::vector<std::unordered_map<Index, Index>> local(N + 1);
      std::vector<std::vector<Index>>               rep(N + 1);
      Tensor                                        T;
      for (Index t = 0; t < triples.size(); ++t) {
        unsigned m  = triples[t].m;
        auto     it = local[m].find(cls[t]);
        if (it == local[m].end()) {
          it = local[m].emplace(cls[t], static_cast<Index>(rep[m].size()))
                   .first;
          rep[m].push_back(t);
        }
        T.lookup.emplace(key(triples[t].p, triples[t].q, triples[t].a,
                             triples[t].b, m, triples[t].phi),
                         it->second);
      }
      PresheafModel M;
      M.N = N;
      for (unsigned m = 0; m <= N; ++m) {
        M.keys.emplace_back();
        for (Index k = 0; k < rep[m].size(); ++k) {
          M.keys[m].push_back({int(k)});
        }
      }
      M.precompose = [&](Key const& k, unsigned m, CubeMorphism const& psi) {
        auto const& t   = triples[rep[m][k[0]]];
        auto        phi = cube::compose(from_key(m, t.phi), psi);
        return Key{int(T.lookup.at(
            key(t.p, t.q, t.a, t.b, psi.dom(), to_key(phi))))};
      };
      T.set = build(M);
      return T;
    }

    ////////////////////////////////////////////////////////////////////////
    // Standard spaces
    ////////////////////////////////////////////////////////////////////////

    inline CubicalSet circle(unsigned N = 3) {
      return collapse(representable(1, N), boundary(1, N)).set;
    }

    inline CubicalSet sphere(unsigned n, unsigned N = 3) {
      return collapse(representable(n, N), boundary(n, N)).set;
    }

    inline CubicalSet torus(unsigned N = 3) {
      auto S = circle(N);
      return tensor(S, S).set;
    }

    //! The square with d_{+,1} ~ d_{-,2} and d_{-,1} ~ d_{+,2}.
    inline CubicalSet klein(unsigned N = 3) {
      auto  R   = representable(2, N);
      Index top = representable_cell(R, cube::identity(2));
      return quotient(R, {{1, R.face(2, 1, 1, top), R.face(2, 0, 2, top)},
                          {1, R.face(2, 0, 1, top), R.face(2, 1, 2, top)}})
          .set;
    }

    ////////////////////////////////////////////////////////////////////////
    // Subdivision
    ////////////////////////////////////////////////////////////////////////

    struct Subdivision {
      unsigned   k = 0;  // sd_{k+1}
      CubicalSet set;
      // blocks[n] = from_lattice([k+1]^n)
      std::vector<CubicalSet> blocks;
      // (n, c, block cell x, dim m) -> cell of set
      std::unordered_map<Key, Index, VectorHash> lookup;
      // carrier[m][u] = (dimension, cell) of C whose support is the
      // smallest subpresheaf B with u in sd B
      std::vector<std::vector<std::pair<unsigned, Index>>> carrier;
      std::vector<std::vector<std::vector<std::pair<unsigned, Index>>>> reps;

      Index cell(unsigned n, Index c, unsigned m, Index x) const {
        return lookup.at(Key{int(n), int(c), int(m), int(x)});
      }
    };

    //! Image of an element of [k+1]^{n'} (lexicographic index) under
    //! sd(phi) : [k+1]^{n'} -> [k+1]^n.
    inline int sd_element(CubeMorphism const& phi, unsigned k, int e) {
      unsigned         base = k + 2, np = phi.dom();
      std::vector<int> t(np);
      for (unsigned i = np; i-- > 0;) {
        t[i] = e % int(base);
        e /= int(base);
      }
      int out = 0;
      for (unsigned j = 0; j < phi.cod(); ++j) {
        auto c = phi.output(j);
        int  v = c == 0 ? 0 : c == 1 ? int(k + 1) : t[c - 2];
        out    = out * int(base) + v;
      }
      return out;
    }

    //! sd_{k+1} C as the colimit of pairs (c in C_n, x in sd_{k+1}[1]^n)
    //! glued along the generator actions.  Assumes C is N-skeletal.
    inline Subdivision subdivide(CubicalSet const& C, unsigned k) {
      unsigned    N = C.trunc();
      Subdivision S;
      S.k = k;
      for (unsigned n = 0; n <= N; ++n) {
        S.blocks.push_back(from_lattice(lattice::grid(k + 1, n), N));
      }
      std::vector<std::vector<std::unordered_map<Key, Index, VectorHash>>>
          bindex(N + 1);
      for (unsigned n = 0; n <= N; ++n) {
        bindex[n].resize(N + 1);
        for (unsigned m = 0; m <= N; ++m) {
          for (Index x = 0; x < S.blocks[n].count(m); ++x) {
            bindex[n][m].emplace(S.blocks[n].keys()[m][x], x);
          }
        }
      }
      // pair ids
      std::vector<std::vector<std::vector<std::size_t>>> base(N + 1);
      std::size_t                                         total = 0;
      for (unsigned n = 0; n <= N; ++n) {
        base[n].resize(N + 1);
        for (unsigned m = 0; m <= N; ++m) {
          base[n][m].resize(C.count(n));
          for (Index c = 0; c < C.count(n); ++c) {
            base[n][m][c] = total;
            total += S.blocks[n].count(m);
          }
        }
      }
      DisjointSets ds(total);
      for (unsigned n = 0; n <= N; ++n) {
        for (auto const& g : C.generators_from(n)) {
          unsigned n2  = g.dom();
          auto     phi = g.morphism();
          for (unsigned m = 0; m <= N; ++m) {
            for (Index x = 0; x < S.blocks[n2].count(m); ++x) {
              Key y = S.blocks[n2].keys()[m][x];
              for (auto& e : y) {
                e = sd_element(phi, k, e);
              }
              Index yx = bindex[n][m].at(y);
              for (Index c = 0; c < C.count(n); ++c) {
                ds.unite(base[n2][m][C.apply(g, c)] + x, base[n][m][c] + yx);
              }
            }
          }
        }
      }
      std::vector<Index> cls;
      ds.labels(cls);
      std::vector<std::unordered_map<Index, Index>> local(N + 1);
      S.reps.resize(N + 1);
      std::vector<std::vector<std::tuple<unsigned, Index, Index>>> first(
          N + 1);
      for (unsigned n = 0; n <= N; ++n) {
        for (unsigned m = 0; m <= N; ++m) {
          for (Index c = 0; c < C.count(n); ++c) {
            for (Index x = 0; x < S.blocks[n].count(m); ++x) {
              Index cl = cls[base[n][m][c] + x];
              auto  it = local[m].find(cl);
              if (it == local[m].end()) {
                it = local[m].emplace(cl, Index(first[m].size())).first;
                first[m].emplace_back(n, c, x);
                S.reps[m].emplace_back();
              }
              S.lookup.emplace(Key{int(n), int(c), int(m), int(x)},
                               it->second);
              S.reps[m][it->second].emplace_back(n, c);
            }
          }
        }
      }
      PresheafModel M;
      M.N = N;
      for (unsigned m = 0; m <= N; ++m) {
        M.keys.emplace_back();
        for (Index u = 0; u < first[m].size(); ++u) {
          M.keys[m].push_back({int(u)});
        }
      }
      M.precompose = [&](Key const& key, unsigned m, CubeMorphism const& psi) {
        auto [n, c, x] = first[m][key[0]];
        Index y        = S.blocks[n].act(psi, x);
        return Key{int(S.lookup.at(Key{int(n), int(c), int(psi.dom()),
                                       int(y)}))};
      };
      S.set = build(M);
      // carriers
      std::vector<std::vector<Subpresheaf>> supps(N + 1);
      std::vector<std::vector<bool>>        have(N + 1);
      for (unsigned n = 0; n <= N; ++n) {
        supps[n].resize(C.count(n));
        have[n].assign(C.count(n), false);
      }
      auto get_supp = [&](unsigned n, Index c) -> Subpresheaf const& {
        if (!have[n][c]) {
          supps[n][c] = supp(C, n, c);
          have[n][c]  = true;
        }
        return supps[n][c];
      };
      S.carrier.resize(N + 1);
      for (unsigned m = 0; m <= N; ++m) {
        for (auto& rs : S.reps[m]) {
          std::sort(rs.begin(), rs.end());
          rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
          std::pair<unsigned, Index> best  = rs.front();
          std::size_t                bsize = get_supp(best.first, best.second)
                                  .size();
          for (auto const& r : rs) {
            auto s = get_supp(r.first, r.second).size();
            if (s < bsize) {
              best  = r;
              bsize = s;
            }
          }
          auto const& B = get_supp(best.first, best.second);
          for (auto const& r : rs) {
            if (!B.subset_of(get_supp(r.first, r.second))) {
              throw Falsification("subdivide: cell has no least carrier");
            }
          }
          S.carrier[m].push_back(best);
        }
      }
      return S;
    }

    //! sd_{k+1} f : sd A -> sd B.
    inline CubicalFunction subdivide_function(Subdivision const&     sdA,
                                              Subdivision const&     sdB,
                                              CubicalFunction const& f) {
      CubicalFunction g;
      unsigned        N = sdA.set.trunc();
      g.map.resize(N + 1);
      for (unsigned m = 0; m <= N; ++m) {
        g.map[m].assign(sdA.set.count(m), UNSET);
      }
      for (auto const& [key, u] : sdA.lookup) {
        unsigned n = key[0], m = key[2];
        Index    c = key[1], x = key[3];
        Index    v = sdB.cell(n, f(n, c), m, x);
        if (g.map[m][u] == UNSET) {
          g.map[m][u] = v;
        } else if (g.map[m][u] != v) {
          throw Falsification("subdivide_function: not well defined");
        }
      }
      return g;
    }

    //! The carrier of a cell of sd C as a subpresheaf of C.
    inline Subpresheaf carrier(CubicalSet const& C, Subdivision const& S,
                               unsigned m, Index u) {
      auto [n, c] = S.carrier[m][u];
      return supp(C, n, c);
    }

    //! Cells of sd C lying in sd B for a subpresheaf B of C.
    inline Subpresheaf subdivided_sub(CubicalSet const& C, Subdivision const& S,
                                      Subpresheaf const& B) {
      auto T = empty_sub(S.set);
      for (unsigned m = 0; m <= S.set.trunc(); ++m) {
        for (Index u = 0; u < S.set.count(m); ++u) {
          T.cells[m][u] = carrier(C, S, m, u).subset_of(B);
        }
      }
      return T;
    }

    //! The copoint sd_3 C -> C.  On a block (c, x) it is
    //! C(eps o x)(c) with eps : [3]^n -> [1]^n coordinatewise
    //! {0,1} -> 0, {2,3} -> 1.
    inline CubicalFunction epsilon(CubicalSet const& C, Subdivision const& S) {
      if (S.k != 2) {
        throw std::invalid_argument("epsilon: defined on sd_3 only");
      }
      unsigned        N = C.trunc();
      CubicalFunction e;
      e.map.resize(N + 1);
      for (unsigned m = 0; m <= N; ++m) {
        e.map[m].assign(S.set.count(m), UNSET);
      }
      std::map<std::tuple<unsigned, unsigned, Index>, CubeMorphism> memo;
      for (auto const& [key, u] : S.lookup) {
        unsigned n = key[0], m = key[2];
        Index    c = key[1], x = key[3];
        auto     mk = std::make_tuple(n, m, x);
        auto     it = memo.find(mk);
        if (it == memo.end()) {
          cube::FunctionTable t{m, n, {}};
          for (int v : S.blocks[n].keys()[m][x]) {
            Point p = 0;
            for (unsigned j = n; j-- > 0;) {
              p |= Point(v % 4 >= 2 ? 1 : 0) << (n - 1 - j);
              v /= 4;
            }
            t.values.push_back(p);
          }
          auto r = cube::from_function(t);
          if (!r.morphism) {
            throw Falsification("epsilon: block map is not a cube morphism: "
                                + r.witness);
          }
          it = memo.emplace(mk, *r.morphism).first;
        }
        Index v = C.act(it->second, c);
        if (e.map[m][u] == UNSET) {
          e.map[m][u] = v;
        } else if (e.map[m][u] != v) {
          throw Falsification("epsilon: not well defined on the colimit");
        }
      }
      return e;
    }

    ////////////////////////////////////////////////////////////////////////
    // Hom search
    ////////////////////////////////////////////////////////////////////////

    struct HomSearchOptions {
      std::size_t budget    = DEFAULT_BUDGET;
      bool        injective = false;
      // restricts the image of each cell; empty means unrestricted
      std::function<bool(unsigned, Index, Index)> allowed;
      // prescribed values (UNSET = free); empty means none
      std::vector<std::vector<Index>> fixed;
    };

    //! Enumerates cubical functions A -> B by depth-first search with
    //! propagation along all generators.  The callback returns false to
    //! stop the search.
    inline void enumerate_homs(CubicalSet const& A, CubicalSet const& B,
                               HomSearchOptions const&                    opt,
                               std::function<bool(CubicalFunction const&)> cb) {
      if (B.trunc() < A.trunc()) {
        throw std::invalid_argument("hom search: target truncated too low");
      }
      unsigned                        N = A.trunc();
      Budget                          budget(opt.budget, "hom search");
      std::vector<std::vector<Index>> map(N + 1);
      std::vector<std::vector<Index>> users(N + 1);
      for (unsigned n = 0; n <= N; ++n) {
        map[n].assign(A.count(n), UNSET);
        if (opt.injective) {
          users[n].assign(B.count(n), UNSET);
        }
      }
      std::vector<std::vector<std::vector<cube::Generator>>> gens(N + 1);
      for (unsigned n = 0; n <= N; ++n) {
        gens[n].push_back(A.generators_from(n));
      }
      std::vector<std::pair<unsigned, Index>> trail;

      auto assign = [&](unsigned n0, Index a0, Index b0) -> bool {
        std::vector<std::tuple<unsigned, Index, Index>> work{{n0, a0, b0}};
        while (!work.empty()) {
          auto [n, a, b] = work.back();
          work.pop_back();
          if (map[n][a] != UNSET) {
            if (map[n][a] != b) {
              return false;
            }
            continue;
          }
          if (opt.allowed && !opt.allowed(n, a, b)) {
            return false;
          }
          if (!opt.fixed.empty() && opt.fixed[n][a] != UNSET
              && opt.fixed[n][a] != b) {
            return false;
          }
          if (opt.injective) {
            if (users[n][b] != UNSET) {
              return false;
            }
            users[n][b] = a;
          }
          map[n][a] = b;
          trail.emplace_back(n, a);
          for (auto const& g : gens[n][0]) {
            work.emplace_back(g.dom(), A.apply(g, a), B.apply(g, b));
          }
        }
        return true;
      };
      auto undo = [&](std::size_t mark) {
        while (trail.size() > mark) {
          auto [n, a] = trail.back();
          trail.pop_back();
          if (opt.injective) {
            users[n][map[n][a]] = UNSET;
          }
          map[n][a] = UNSET;
        }
      };
      // prescribed values first
      if (!opt.fixed.empty()) {
        for (unsigned n = 0; n <= N; ++n) {
          for (Index a = 0; a < A.count(n); ++a) {
            if (opt.fixed[n][a] != UNSET && !assign(n, a, opt.fixed[n][a])) {
              return;
            }
          }
        }
      }
      // target cells bucketed by their first pair of faces
      std::vector<std::vector<Index>> all(N + 1);
      std::vector<std::unordered_map<std::uint64_t, std::vector<Index>>>
          buckets(N + 1);
      for (unsigned n = 0; n <= N; ++n) {
        for (Index b = 0; b < B.count(n); ++b) {
          if (n == 0) {
            all[n].push_back(b);
          } else {
            auto key = (std::uint64_t(B.face(n, 0, 1, b)) << 32)
                       | B.face(n, 1, 1, b);
            buckets[n][key].push_back(b);
          }
        }
      }
      bool stop = false;
      auto rec  = [&](auto&& self, unsigned n, Index a) -> void {
        while (n <= N && (a >= A.count(n) || map[n][a] != UNSET)) {
          if (a >= A.count(n)) {
            ++n;
            a = 0;
          } else {
            ++a;
          }
        }
        if (n > N) {
          stop = !cb(CubicalFunction{map});
          return;
        }
        std::vector<Index> const* cands = &all[n];
        if (n >= 1) {
          auto key = (std::uint64_t(map[n - 1][A.face(n, 0, 1, a)]) << 32)
                     | map[n - 1][A.face(n, 1, 1, a)];
          auto it  = buckets[n].find(key);
          if (it == buckets[n].end()) {
            return;
          }
          cands = &it->second;
        }
        for (Index b : *cands) {
          if (stop) {
            break;
          }
          budget.charge();
          bool ok = true;
          for (unsigned i = 1; i <= n && ok; ++i) {
            for (int s = 0; s < 2 && ok; ++s) {
              ok = map[n - 1][A.face(n, s, i, a)] == B.face(n, s, i, b);
            }
          }
          if (!ok) {
            continue;
          }
          std::size_t mark = trail.size();
          if (assign(n, a, b)) {
            self(self, n, a + 1);
          }
          undo(mark);
        }
      };
      rec(rec, 0, 0);
    }

    inline std::vector<CubicalFunction>
    all_homs(CubicalSet const& A, CubicalSet const& B,
             HomSearchOptions const& opt = {}) {
      std::vector<CubicalFunction> out;
      enumerate_homs(A, B, opt, [&](CubicalFunction const& f) {
        out.push_back(f);
        return true;
      });
      return out;
    }

    namespace detail {

      //! Joint colour refinement of the cells of A and B: cells get equal
      //! colours only if their face, degeneracy and transposition
      //! neighbourhoods agree, iterated to a fixpoint.  Isomorphisms
      //! preserve colours.
      inline std::array<std::vector<std::vector<int>>, 2>
      refine_colors(CubicalSet const& A, CubicalSet const& B) {
        unsigned N = A.trunc();
        std::array<CubicalSet const*, 2>                  sets{&A, &B};
        std::array<std::vector<std::vector<int>>, 2>      col;
        for (int s = 0; s < 2; ++s) {
          col[s].resize(N + 1);
          for (unsigned n = 0; n <= N; ++n) {
            col[s][n].resize(sets[s]->count(n));
            for (Index c = 0; c < sets[s]->count(n); ++c) {
              col[s][n][c] = int(n) * 2 + sets[s]->is_degenerate(n, c);
            }
          }
        }
        std::size_t classes = 0;
        while (true) {
          std::map<std::vector<int>, int>              ids;
          std::array<std::vector<std::vector<int>>, 2> next;
          for (int s = 0; s < 2; ++s) {
            auto const& X = *sets[s];
            // incoming edges: (kind, label, colour of source)
            std::vector<std::vector<std::vector<int>>> in(N + 1);
            for (unsigned n = 0; n <= N; ++n) {
              in[n].resize(X.count(n));
            }
            for (unsigned n = 1; n <= N; ++n) {
              for (Index d = 0; d < X.count(n); ++d) {
                for (unsigned i = 1; i <= n; ++i) {
                  for (int a = 0; a < 2; ++a) {
                    auto& v = in[n - 1][X.face(n, a, i, d)];
                    v.insert(v.end(), {0, int(2 * i + a), col[s][n][d]});
                  }
                }
              }
            }
            for (unsigned n = 0; n < N; ++n) {
              for (Index y = 0; y < X.count(n); ++y) {
                for (unsigned i = 1; i <= n + 1; ++i) {
                  auto& v = in[n + 1][X.degen(n, i, y)];
                  v.insert(v.end(), {1, int(i), col[s][n][y]});
                }
              }
            }
            next[s].resize(N + 1);
            for (unsigned n = 0; n <= N; ++n) {
              for (Index c = 0; c < X.count(n); ++c) {
                std::vector<int> sig{col[s][n][c]};
                for (unsigned i = 1; i <= n; ++i) {
                  sig.push_back(col[s][n - 1][X.face(n, 0, i, c)]);
                  sig.push_back(col[s][n - 1][X.face(n, 1, i, c)]);
                }
                for (unsigned i = 1; n < N && i <= n + 1; ++i) {
                  sig.push_back(col[s][n + 1][X.degen(n, i, c)]);
                }
                for (unsigned i = 1; i + 1 <= n; ++i) {
                  sig.push_back(col[s][n][X.transp(n, i, c)]);
                }
                // sort incoming triples
                auto&                         v = in[n][c];
                std::vector<std::array<int, 3>> t;
                for (std::size_t k = 0; k < v.size(); k += 3) {
                  t.push_back({v[k], v[k + 1], v[k + 2]});
                }
                std::sort(t.begin(), t.end());
                sig.push_back(-1);
                for (auto const& x : t) {
                  sig.insert(sig.end(), x.begin(), x.end());
                }
                auto it = ids.emplace(std::move(sig), int(ids.size())).first;
                next[s][n].push_back(it->second);
              }
            }
          }
          col = std::move(next);
          if (ids.size() == classes) {
            break;
          }
          classes = ids.size();
        }
        return col;
      }

    }  // namespace detail

    inline std::optional<CubicalFunction>
    find_isomorphism(CubicalSet const& A, CubicalSet const& B,
                     std::size_t budget = DEFAULT_BUDGET) {
      if (A.trunc() != B.trunc() || A.counts() != B.counts()
          || A.nondegenerate_counts() != B.nondegenerate_counts()) {
        return std::nullopt;
      }
      auto col = detail::refine_colors(A, B);
      for (unsigned n = 0; n <= A.trunc(); ++n) {
        auto a = col[0][n], b = col[1][n];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return std::nullopt;
        }
      }
      HomSearchOptions opt;
      opt.budget    = budget;
      opt.injective = true;
      opt.allowed   = [&col](unsigned n, Index a, Index b) {
        return col[0][n][a] == col[1][n][b];
      };
      std::optional<CubicalFunction> out;
      enumerate_homs(A, B, opt, [&](CubicalFunction const& f) {
        out = f;
        return false;
      });
      return out;
    }

    inline bool is_isomorphic(CubicalSet const& A, CubicalSet const& B,
                              std::size_t budget = DEFAULT_BUDGET) {
      return find_isomorphism(A, B, budget).has_value();
    }

  }  // namespace cset
}  // namespace dicube

#endif  // DICUBE_CSET_HPP_
