// dicube - finite directed cubical homotopy
//
// Finite posets and lattices stored with explicit order, join and meet
// tables; Boolean intervals; lattice maps and the Dis-morphism test; the
// order-theoretic edgewise subdivision sd_{k+1}; and the modularity /
// distributivity checks on intervals.
//
// Elements are integer indices.  The built-in constructors ([k], [1]^n,
// products, monotone-function lattices) number elements lexicographically by
// their coordinate tuples, which are kept in FiniteLattice::coords().

#ifndef DICUBE_LATTICE_HPP_
#define DICUBE_LATTICE_HPP_

#include <algorithm>      // for sort, find
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t
#include <numeric>        // for iota
#include <map>            // for map
#include <memory>         // for shared_ptr
#include <optional>       // for optional
#include <sstream>        // for ostringstream
#include <stdexcept>      // for invalid_argument
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair
#include <vector>         // for vector

#include "common.hpp"

namespace dicube {

  using Element = Index;

  ////////////////////////////////////////////////////////////////////////
  // Poset
  ////////////////////////////////////////////////////////////////////////

  class Poset {
   public:
    Poset() = default;

    //! Builds a poset from a relation table; throws std::invalid_argument if
    //! the relation is not reflexive, antisymmetric and transitive.
    Poset(std::size_t n, std::vector<bool> leq) : _n(n), _leq(std::move(leq)) {
      if (_leq.size() != n * n) {
        throw std::invalid_argument("poset: relation table has wrong size");
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (!le(x, x)) {
          throw std::invalid_argument("poset: relation is not reflexive at "
                                      + std::to_string(x));
        }
        for (std::size_t y = 0; y < n; ++y) {
          if (x != y && le(x, y) && le(y, x)) {
            throw std::invalid_argument("poset: relation is not antisymmetric");
          }
          if (!le(x, y)) {
            continue;
          }
          for (std::size_t z = 0; z < n; ++z) {
            if (le(y, z) && !le(x, z)) {
              throw std::invalid_argument("poset: relation is not transitive");
            }
          }
        }
      }
    }

    std::size_t size() const noexcept {
      return _n;
    }

    bool le(std::size_t x, std::size_t y) const {
      return _leq[x * _n + y];
    }

    //! True if y covers x (x < y with nothing strictly between).
    bool covers(std::size_t x, std::size_t y) const {
      if (x == y || !le(x, y)) {
        return false;
      }
      for (std::size_t z = 0; z < _n; ++z) {
        if (z != x && z != y && le(x, z) && le(z, y)) {
          return false;
        }
      }
      return true;
    }

    std::vector<bool> const& relation() const noexcept {
      return _leq;
    }

   private:
    std::size_t       _n = 0;
    std::vector<bool> _leq;
  };

  ////////////////////////////////////////////////////////////////////////
  // FiniteLattice
  ////////////////////////////////////////////////////////////////////////

  class FiniteLattice {
   public:
    FiniteLattice() = default;

    //! Derives join and meet tables from a poset; throws if some pair lacks
    //! a least upper or greatest lower bound, or the poset is empty.
    explicit FiniteLattice(Poset p, std::vector<std::vector<int>> coords = {})
        : _poset(std::move(p)), _coords(std::move(coords)) {
      std::size_t n = _poset.size();
      if (n == 0) {
        throw std::invalid_argument("lattice: empty poset");
      }
      if (!_coords.empty() && _coords.size() != n) {
        throw std::invalid_argument("lattice: coordinate labels mismatch");
      }
      _join.assign(n * n, 0);
      _meet.assign(n * n, 0);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x; y < n; ++y) {
          auto j = bound(x, y, true);
          auto m = bound(x, y, false);
          if (!j || !m) {
            throw std::invalid_argument("lattice: elements "
                                        + std::to_string(x) + ", "
                                        + std::to_string(y)
                                        + " have no join or meet");
          }
          _join[x * n + y] = _join[y * n + x] = *j;
          _meet[x * n + y] = _meet[y * n + x] = *m;
        }
      }
      _bottom = 0;
      _top    = 0;
      for (std::size_t x = 0; x < n; ++x) {
        _bottom = _meet[_bottom * n + x];
        _top    = _join[_top * n + x];
      }
      _distributive = true;
      for (std::size_t x = 0; x < n && _distributive; ++x) {
        for (std::size_t y = 0; y < n && _distributive; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
              _distributive = false;
              break;
            }
          }
        }
      }
    }

    std::size_t size() const noexcept {
      return _poset.size();
    }

    Poset const& poset() const noexcept {
      return _poset;
    }

    bool leq(Element x, Element y) const {
      return _poset.le(x, y);
    }

    Element join(Element x, Element y) const {
      return _join[x * size() + y];
    }

    Element meet(Element x, Element y) const {
      return _meet[x * size() + y];
    }

    Element bottom() const noexcept {
      return _bottom;
    }

    Element top() const noexcept {
      return _top;
    }

    bool is_distributive() const noexcept {
      return _distributive;
    }

    //! Coordinate labels of the elements (may be empty).
    std::vector<std::vector<int>> const& coords() const noexcept {
      return _coords;
    }

    std::string label(Element x) const {
      if (_coords.empty()) {
        return std::to_string(x);
      }
      std::string s = "(";
      for (std::size_t i = 0; i < _coords[x].size(); ++i) {
        s += (i ? "," : "") + std::to_string(_coords[x][i]);
      }
      return s + ")";
    }

    bool covers(Element x, Element y) const {
      return _poset.covers(x, y);
    }

    std::vector<Element> upper_covers(Element x) const {
      std::vector<Element> out;
      for (Element y = 0; y < size(); ++y) {
        if (covers(x, y)) {
          out.push_back(y);
        }
      }
      return out;
    }

    std::vector<Element> lower_covers(Element x) const {
      std::vector<Element> out;
      for (Element y = 0; y < size(); ++y) {
        if (covers(y, x)) {
          out.push_back(y);
        }
      }
      return out;
    }

   private:
    std::optional<Element> bound(std::size_t x, std::size_t y, bool upper) {
      std::size_t            n = _poset.size();
      std::optional<Element> best;
      for (std::size_t z = 0; z < n; ++z) {
        bool is_bound = upper ? (_poset.le(x, z) && _poset.le(y, z))
                              : (_poset.le(z, x) && _poset.le(z, y));
        if (!is_bound) {
          continue;
        }
        if (!best) {
          best = static_cast<Element>(z);
        } else if (upper ? _poset.le(z, *best) : _poset.le(*best, z)) {
          best = static_cast<Element>(z);
        }
      }
      if (!best) {
        return best;
      }
      // the candidate must be comparable to every bound
      for (std::size_t z = 0; z < n; ++z) {
        bool is_bound = upper ? (_poset.le(x, z) && _poset.le(y, z))
                              : (_poset.le(z, x) && _poset.le(z, y));
        if (is_bound && !(upper ? _poset.le(*best, z) : _poset.le(z, *best))) {
          return std::nullopt;
        }
      }
      return best;
    }

    Poset                         _poset;
    std::vector<std::vector<int>> _coords;
    std::vector<Element>          _join;
    std::vector<Element>          _meet;
    Element                       _bottom       = 0;
    Element                       _top          = 0;
    bool                          _distributive = false;
  };

  using LatticePtr = std::shared_ptr<FiniteLattice const>;

  namespace lattice {

    //! Lattice on coordinate tuples ordered componentwise; tuples must be
    //! listed in lexicographic order and closed under componentwise max/min.
    inline FiniteLattice
    from_tuples(std::vector<std::vector<int>> tuples,
                std::vector<std::vector<int>> const& orders = {}) {
      std::size_t       n = tuples.size();
      std::vector<bool> leq(n * n, false);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          bool le = true;
          for (std::size_t i = 0; i < tuples[x].size() && le; ++i) {
            le = tuples[x][i] <= tuples[y][i];
          }
          leq[x * n + y] = le;
        }
      }
      (void) orders;
      return FiniteLattice(Poset(n, std::move(leq)), std::move(tuples));
    }

    //! The ordinal [k] = {0 < 1 < ... < k}.
    inline FiniteLattice chain(std::size_t k) {
      std::vector<std::vector<int>> t;
      for (std::size_t i = 0; i <= k; ++i) {
        t.push_back({static_cast<int>(i)});
      }
      return from_tuples(std::move(t));
    }

    //! The n-fold power [k]^n, lexicographic order on tuples.
    inline FiniteLattice grid(std::size_t k, std::size_t n) {
      std::vector<std::vector<int>> t(1);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<int>> next;
        for (auto const& prefix : t) {
          for (std::size_t v = 0; v <= k; ++v) {
            auto p = prefix;
            p.push_back(static_cast<int>(v));
            next.push_back(std::move(p));
          }
        }
        t = std::move(next);
      }
      return from_tuples(std::move(t));
    }

    //! The Boolean lattice [1]^n.
    inline FiniteLattice boolean(std::size_t n) {
      return grid(1, n);
    }

    //! Cartesian product, element (a, b) has index a * |M| + b.
    inline FiniteLattice product(FiniteLattice const& L,
                                 FiniteLattice const& M) {
      std::size_t       n = L.size() * M.size();
      std::vector<bool> leq(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          leq[x * n + y] = L.leq(x / M.size(), y / M.size())
                           && M.leq(x % M.size(), y % M.size());
        }
      }
      std::vector<std::vector<int>> coords;
      for (std::size_t x = 0; x < n; ++x) {
        std::vector<int> c = L.coords().empty()
                                 ? std::vector<int>{int(x / M.size())}
                                 : L.coords()[x / M.size()];
        std::vector<int> d = M.coords().empty()
                                 ? std::vector<int>{int(x % M.size())}
                                 : M.coords()[x % M.size()];
        c.insert(c.end(), d.begin(), d.end());
        coords.push_back(std::move(c));
      }
      return FiniteLattice(Poset(n, std::move(leq)), std::move(coords));
    }

    //! Lattice given by its cover relation on elements 0..n-1 (the order is
    //! the reflexive-transitive closure).
    inline FiniteLattice
    from_covers(std::size_t                                     n,
                std::vector<std::pair<std::size_t, std::size_t>> covers) {
      std::vector<bool> leq(n * n, false);
      for (std::size_t x = 0; x < n; ++x) {
        leq[x * n + x] = true;
      }
      for (auto [a, b] : covers) {
        leq[a * n + b] = true;
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (leq[i * n + k] && leq[k * n + j]) {
              leq[i * n + j] = true;
            }
          }
        }
      }
      return FiniteLattice(Poset(n, std::move(leq)));
    }

    //! The diamond M3: 0, three atoms 1, 2, 3, and top 4.
    inline FiniteLattice m3() {
      return from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    }

    //! The pentagon N5: 0 < 1 < 2 < 4 and 0 < 3 < 4.
    inline FiniteLattice n5() {
      return from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
    }

    //! The lattice with bottom, k pairwise incomparable atoms, and top.
    inline FiniteLattice m(std::size_t k) {
      std::vector<std::pair<std::size_t, std::size_t>> c;
      for (std::size_t i = 1; i <= k; ++i) {
        c.push_back({0, i});
        c.push_back({i, k + 1});
      }
      return from_covers(k + 2, std::move(c));
    }

    ////////////////////////////////////////////////////////////////////////
    // Intervals
    ////////////////////////////////////////////////////////////////////////

    struct Interval {
      Element              min;
      Element              max;
      std::vector<Element> elements;  // sorted
      std::optional<int>   boolean_rank;

      bool operator==(Interval const& that) const {
        return min == that.min && max == that.max;
      }
    };

    inline std::vector<Element> interval_elements(FiniteLattice const& L,
                                                  Element a, Element b) {
      std::vector<Element> out;
      for (Element z = 0; z < L.size(); ++z) {
        if (L.leq(a, z) && L.leq(z, b)) {
          out.push_back(z);
        }
      }
      return out;
    }

    //! Rank k if [a, b] is lattice isomorphic to [1]^k.
    //!
    //! Tests that joins of subsets of the atoms of [a, b] are pairwise
    //! distinct, exhaust the interval, and are ordered like the subsets.
    inline std::optional<int> boolean_rank(FiniteLattice const& L,
                                           Element a, Element b) {
      if (!L.leq(a, b)) {
        return std::nullopt;
      }
      auto elems = interval_elements(L, a, b);
      std::vector<Element> atoms;
      for (Element z : elems) {
        if (L.covers(a, z)) {
          atoms.push_back(z);
        }
      }
      std::size_t k = atoms.size();
      if (k > 20 || elems.size() != (std::size_t(1) << k)) {
        return std::nullopt;
      }
      std::vector<Element> img(std::size_t(1) << k);
      for (std::size_t s = 0; s < img.size(); ++s) {
        Element j = a;
        for (std::size_t i = 0; i < k; ++i) {
          if (s >> i & 1) {
            j = L.join(j, atoms[i]);
          }
        }
        img[s] = j;
      }
      for (std::size_t s = 0; s < img.size(); ++s) {
        for (std::size_t t = 0; t < img.size(); ++t) {
          bool subset = (s & t) == s;
          if (subset != L.leq(img[s], img[t])) {
            return std::nullopt;
          }
        }
      }
      return static_cast<int>(k);
    }

    inline Interval make_interval(FiniteLattice const& L, Element a,
                                  Element b) {
      if (a >= L.size() || b >= L.size()) {
        throw std::out_of_range("interval: element out of range");
      }
      if (!L.leq(a, b)) {
        throw std::invalid_argument("interval: min is not below max");
      }
      return Interval{a, b, interval_elements(L, a, b), boolean_rank(L, a, b)};
    }

    //! All Boolean intervals [x, y], ordered by (min, max).
    inline std::vector<Interval> boolean_intervals(FiniteLattice const& L) {
      std::vector<Interval> out;
      for (Element a = 0; a < L.size(); ++a) {
        for (Element b = 0; b < L.size(); ++b) {
          if (!L.leq(a, b)) {
            continue;
          }
          auto r = boolean_rank(L, a, b);
          if (r) {
            out.push_back(Interval{a, b, interval_elements(L, a, b), r});
          }
        }
      }
      return out;
    }

    //! If the set is exactly an interval of L, return that interval.
    inline std::optional<Interval> as_interval(FiniteLattice const&   L,
                                               std::vector<Element> set) {
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      if (set.empty()) {
        return std::nullopt;
      }
      Element lo = set[0], hi = set[0];
      for (Element x : set) {
        lo = L.meet(lo, x);
        hi = L.join(hi, x);
      }
      if (std::find(set.begin(), set.end(), lo) == set.end()
          || std::find(set.begin(), set.end(), hi) == set.end()) {
        return std::nullopt;
      }
      auto elems = interval_elements(L, lo, hi);
      if (elems != set) {
        return std::nullopt;
      }
      return Interval{lo, hi, std::move(elems), boolean_rank(L, lo, hi)};
    }

    ////////////////////////////////////////////////////////////////////////
    // Lattice maps
    ////////////////////////////////////////////////////////////////////////

    struct LatticeMap {
      LatticePtr           domain;
      LatticePtr           codomain;
      std::vector<Element> table;

      Element operator()(Element x) const {
        return table.at(x);
      }
    };

    inline void check_shape(LatticeMap const& f) {
      if (!f.domain || !f.codomain) {
        throw std::invalid_argument("lattice map: missing domain or codomain");
      }
      if (f.table.size() != f.domain->size()) {
        throw std::invalid_argument("lattice map: table length "
                                    + std::to_string(f.table.size())
                                    + " does not match domain size "
                                    + std::to_string(f.domain->size()));
      }
      for (Element v : f.table) {
        if (v >= f.codomain->size()) {
          throw std::invalid_argument("lattice map: value out of range");
        }
      }
    }

    inline bool is_monotone(LatticeMap const& f) {
      check_shape(f);
      auto const& L = *f.domain;
      auto const& M = *f.codomain;
      for (Element x = 0; x < L.size(); ++x) {
        for (Element y = 0; y < L.size(); ++y) {
          if (L.leq(x, y) && !M.leq(f.table[x], f.table[y])) {
            return false;
          }
        }
      }
      return true;
    }

    struct DisVerdict {
      bool        is_dis;        // lattice hom sending Boolean intervals onto
                                 // Boolean intervals
      bool        restrictions;  // every restriction to a Boolean interval
                                 // is a surjective hom onto a Boolean interval
      std::string witness;       // empty when is_dis
    };

    //! Decides whether f is a Dis-morphism, evaluating both the global
    //! criterion and the interval-by-interval criterion.  For distributive
    //! domain and codomain the two must agree; disagreement raises
    //! Falsification.
    inline DisVerdict is_dis_morphism(LatticeMap const& f) {
      check_shape(f);
      auto const& L = *f.domain;
      auto const& M = *f.codomain;
      if (!is_monotone(f)) {
        throw std::invalid_argument("dis-morphism: map is not monotone");
      }
      DisVerdict v{true, true, ""};

      auto show = [&](Element x) { return L.label(x); };

      // global criterion
      for (Element x = 0; x < L.size() && v.is_dis; ++x) {
        for (Element y = 0; y < L.size(); ++y) {
          if (f(L.join(x, y)) != M.join(f(x), f(y))) {
            v.is_dis  = false;
            v.witness = "join not preserved on " + show(x) + ", " + show(y);
            break;
          }
          if (f(L.meet(x, y)) != M.meet(f(x), f(y))) {
            v.is_dis  = false;
            v.witness = "meet not preserved on " + show(x) + ", " + show(y);
            break;
          }
        }
      }
      auto bools = boolean_intervals(L);
      for (auto const& I : bools) {
        std::vector<Element> img;
        for (Element x : I.elements) {
          img.push_back(f(x));
        }
        auto J = as_interval(M, img);
        bool ok = J && J->boolean_rank;
        if (!ok) {
          if (v.is_dis) {
            v.is_dis  = false;
            v.witness = "image of Boolean interval [" + show(I.min) + ","
                        + show(I.max) + "] is not a Boolean interval";
          }
          v.restrictions = false;
          continue;
        }
        // restriction is a lattice hom onto J
        for (Element x : I.elements) {
          for (Element y : I.elements) {
            if (f(L.join(x, y)) != M.join(f(x), f(y))
                || f(L.meet(x, y)) != M.meet(f(x), f(y))) {
              v.restrictions = false;
            }
          }
        }
        if (!v.restrictions && v.witness.empty() && !v.is_dis) {
          v.witness = "restriction to [" + show(I.min) + "," + show(I.max)
                      + "] is not a lattice homomorphism";
        }
      }
      if (!v.restrictions && v.witness.empty()) {
        v.witness = "some restriction to a Boolean interval fails";
      }
      if (L.is_distributive() && M.is_distributive()
          && v.is_dis != v.restrictions) {
        throw Falsification("the two Dis-morphism criteria disagree");
      }
      return v;
    }

    ////////////////////////////////////////////////////////////////////////
    // Subdivision
    ////////////////////////////////////////////////////////////////////////

    //! sd_{k+1} L: monotone functions [k] -> L whose image lies in a Boolean
    //! interval, ordered pointwise.  Element coords are the value tuples
    //! (zeta(0), ..., zeta(k)) in lexicographic order.  k = 0 gives a copy
    //! of L.
    inline FiniteLattice subdivide_lattice(FiniteLattice const& L,
                                           std::size_t          k) {
      if (!L.is_distributive()) {
        throw std::invalid_argument("subdivide: lattice is not distributive");
      }
      std::vector<std::vector<int>> tuples;
      std::vector<int>              cur;
      // depth-first in lexicographic order
      auto rec = [&](auto&& self) -> void {
        if (cur.size() == k + 1) {
          if (boolean_rank(L, cur.front(), cur.back())) {
            tuples.push_back(cur);
          }
          return;
        }
        for (Element z = 0; z < L.size(); ++z) {
          if (!cur.empty() && !L.leq(cur.back(), z)) {
            continue;
          }
          if (!cur.empty() && !boolean_rank(L, cur.front(), z)) {
            continue;
          }
          cur.push_back(static_cast<int>(z));
          self(self);
          cur.pop_back();
        }
      };
      rec(rec);
      std::size_t       n = tuples.size();
      std::vector<bool> leq(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          bool le = true;
          for (std::size_t i = 0; i <= k && le; ++i) {
            le = L.leq(tuples[x][i], tuples[y][i]);
          }
          leq[x * n + y] = le;
        }
      }
      FiniteLattice out(Poset(n, std::move(leq)), tuples);
      // pointwise join/meet must stay inside the family
      std::map<std::vector<int>, Element> index;
      for (std::size_t x = 0; x < n; ++x) {
        index[tuples[x]] = static_cast<Element>(x);
      }
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          std::vector<int> j(k + 1);
          for (std::size_t i = 0; i <= k; ++i) {
            j[i] = static_cast<int>(L.join(tuples[x][i], tuples[y][i]));
          }
          auto it = index.find(j);
          if (it == index.end() || it->second != out.join(x, y)) {
            throw Falsification("subdivision is not a sublattice of L^[k]");
          }
        }
      }
      return out;
    }

    //! Precomposition sd_{m+1} L -> sd_{n+1} L by a monotone injection
    //! phi: [n] -> [m] given as its value list.
    inline LatticeMap subdivision_restriction(FiniteLattice const&    L,
                                              std::vector<int> const& phi,
                                              std::size_t             m) {
      if (phi.empty()) {
        throw std::invalid_argument("restriction: empty domain");
      }
      for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i] < 0 || phi[i] > static_cast<int>(m)) {
          throw std::invalid_argument("restriction: value out of range");
        }
        if (i > 0 && phi[i] <= phi[i - 1]) {
          throw std::invalid_argument(
              "restriction: map is not a monotone injection");
        }
      }
      std::size_t n   = phi.size() - 1;
      auto        dom = std::make_shared<FiniteLattice>(subdivide_lattice(L, m));
      auto        cod = std::make_shared<FiniteLattice>(subdivide_lattice(L, n));
      std::map<std::vector<int>, Element> index;
      for (Element x = 0; x < cod->size(); ++x) {
        index[cod->coords()[x]] = x;
      }
      LatticeMap f{dom, cod, {}};
      for (Element x = 0; x < dom->size(); ++x) {
        std::vector<int> v;
        for (int p : phi) {
          v.push_back(dom->coords()[x][p]);
        }
        f.table.push_back(index.at(v));
      }
      return f;
    }

    ////////////////////////////////////////////////////////////////////////
    // Modularity and distributivity checks
    ////////////////////////////////////////////////////////////////////////

    //! True iff x v - : [x^y, y] -> [x, xvy] and y ^ - : [x, xvy] -> [x^y, y]
    //! are mutually inverse bijections.
    inline bool diamond_check(FiniteLattice const& L, Element x, Element y) {
      if (x >= L.size() || y >= L.size()) {
        throw std::out_of_range("diamond: element out of range");
      }
      Element lo = L.meet(x, y), hi = L.join(x, y);
      for (Element z : interval_elements(L, lo, y)) {
        if (L.meet(y, L.join(x, z)) != z) {
          return false;
        }
      }
      for (Element w : interval_elements(L, x, hi)) {
        if (L.join(x, L.meet(y, w)) != w) {
          return false;
        }
      }
      return true;
    }

    inline bool is_modular(FiniteLattice const& L) {
      for (Element x = 0; x < L.size(); ++x) {
        for (Element y = 0; y < L.size(); ++y) {
          for (Element z = 0; z < L.size(); ++z) {
            if (L.join(L.meet(x, y), L.meet(x, z))
                != L.meet(L.join(L.meet(x, y), z), x)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    struct DistributivityProfile {
      bool distributive_identity;
      bool cover_diamonds_boolean;
      bool interval_hulls_boolean;

      bool agree() const {
        return distributive_identity == cover_diamonds_boolean
               && cover_diamonds_boolean == interval_hulls_boolean;
      }
    };

    inline DistributivityProfile distributivity_profile(FiniteLattice const& L) {
      DistributivityProfile p{L.is_distributive(), true, true};
      // pairs of distinct upper (or lower) covers of a common element
      for (Element x = 0; x < L.size() && p.cover_diamonds_boolean; ++x) {
        for (auto const& nbrs : {L.upper_covers(x), L.lower_covers(x)}) {
          for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
              Element              y = nbrs[i], z = nbrs[j];
              std::vector<Element> s{L.meet(y, z), L.join(y, z), y, z};
              auto                 I = as_interval(L, s);
              if (!I || !I->boolean_rank) {
                p.cover_diamonds_boolean = false;
              }
            }
          }
        }
      }
      auto bools = boolean_intervals(L);
      for (std::size_t i = 0; i < bools.size() && p.interval_hulls_boolean;
           ++i) {
        for (std::size_t j = i + 1; j < bools.size(); ++j) {
          auto const& I = bools[i];
          auto const& J = bools[j];
          if (I.max != J.max && I.min != J.min) {
            continue;
          }
          Element lo = L.meet(I.min, J.min), hi = L.join(I.max, J.max);
          if (!boolean_rank(L, lo, hi)) {
            p.interval_hulls_boolean = false;
            break;
          }
        }
      }
      return p;
    }

    //! Images of I x J under join and meet; both must be Boolean intervals
    //! when L is distributive, otherwise Falsification is raised.
    inline std::pair<Interval, Interval>
    boolean_interval_images(FiniteLattice const& L, Interval const& I,
                            Interval const& J) {
      if (!I.boolean_rank || !J.boolean_rank) {
        throw std::invalid_argument("interval images: arguments not Boolean");
      }
      std::vector<Element> joins, meets;
      for (Element x : I.elements) {
        for (Element y : J.elements) {
          joins.push_back(L.join(x, y));
          meets.push_back(L.meet(x, y));
        }
      }
      auto J1 = as_interval(L, joins);
      auto J2 = as_interval(L, meets);
      if (!J1 || !J1->boolean_rank || !J2 || !J2->boolean_rank) {
        throw Falsification("join or meet image of Boolean intervals ["
                            + L.label(I.min) + "," + L.label(I.max) + "], ["
                            + L.label(J.min) + "," + L.label(J.max)
                            + "] is not a Boolean interval");
      }
      return {*J1, *J2};
    }

    ////////////////////////////////////////////////////////////////////////
    // Isomorphism search
    ////////////////////////////////////////////////////////////////////////

    //! An order isomorphism L -> M if one exists.
    inline std::optional<std::vector<Element>>
    find_isomorphism(FiniteLattice const& L, FiniteLattice const& M) {
      std::size_t n = L.size();
      if (n != M.size()) {
        return std::nullopt;
      }
      auto profile = [](FiniteLattice const& K, Element x) {
        std::size_t below = 0, above = 0;
        for (Element y = 0; y < K.size(); ++y) {
          below += K.leq(y, x);
          above += K.leq(x, y);
        }
        return std::tuple(below, above, K.upper_covers(x).size(),
                          K.lower_covers(x).size());
      };
      std::vector<decltype(profile(L, 0))> pl, pm;
      for (Element x = 0; x < n; ++x) {
        pl.push_back(profile(L, x));
        pm.push_back(profile(M, x));
      }
      // order L by breadth-first search from the bottom along covers
      std::vector<Element> order{L.bottom()};
      std::vector<bool>    seen(n, false);
      seen[L.bottom()] = true;
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (Element y : L.upper_covers(order[i])) {
          if (!seen[y]) {
            seen[y] = true;
            order.push_back(y);
          }
        }
      }
      std::vector<Element> map(n, Element(-1));
      std::vector<bool>    used(n, false);
      auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) {
          return true;
        }
        Element x = order[i];
        for (Element y = 0; y < n; ++y) {
          if (used[y] || pl[x] != pm[y]) {
            continue;
          }
          bool ok = true;
          for (std::size_t j = 0; j < i && ok; ++j) {
            Element a = order[j];
            ok = L.leq(a, x) == M.leq(map[a], y)
                 && L.leq(x, a) == M.leq(y, map[a]);
          }
          if (!ok) {
            continue;
          }
          map[x]  = y;
          used[y] = true;
          if (self(self, i + 1)) {
            return true;
          }
          used[y] = false;
        }
        return false;
      };
      if (rec(rec, 0)) {
        return map;
      }
      return std::nullopt;
    }

    inline bool is_isomorphic(FiniteLattice const& L, FiniteLattice const& M) {
      return find_isomorphism(L, M).has_value();
    }

    //! All lattices with at most max_size elements, one per isomorphism
    //! class, ordered by size.  Bounded posets are generated from
    //! naturally labelled inner posets and deduplicated by a canonical
    //! relation code over relabellings of the inner elements.
    inline std::vector<FiniteLattice> catalog(std::size_t max_size) {
      if (max_size > 10) {
        throw std::invalid_argument("lattice catalog: size above 10");
      }
      std::vector<FiniteLattice> out;
      for (std::size_t n = 1; n <= max_size; ++n) {
        if (n <= 2) {
          out.push_back(chain(n - 1));
          continue;
        }
        std::size_t                   k = n - 2;
        std::vector<std::uint32_t>    below(k, 0);  // strict down-sets
        std::map<std::uint64_t, std::vector<std::uint32_t>> found;
        std::vector<std::size_t>      perm(k);
        auto leq_full = [&](std::vector<std::uint32_t> const& b) {
          std::vector<bool> leq(n * n, false);
          for (std::size_t x = 0; x < n; ++x) {
            leq[x] = true;                  // bottom
            leq[x * n + n - 1] = true;      // top
            leq[x * n + x] = true;
          }
          for (std::size_t y = 0; y < k; ++y) {
            for (std::size_t x = 0; x < k; ++x) {
              if (b[y] >> x & 1) {
                leq[(x + 1) * n + y + 1] = true;
              }
            }
          }
          return leq;
        };
        auto is_lattice = [&](std::vector<bool> const& leq) {
          std::vector<std::uint32_t> up(n, 0);
          for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
              if (leq[x * n + y]) {
                up[x] |= std::uint32_t(1) << y;
              }
            }
          }
          for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = x + 1; y < n; ++y) {
              std::uint32_t ub    = up[x] & up[y];
              bool          least = false;
              for (std::size_t z = 0; z < n && !least; ++z) {
                least = (ub >> z & 1) && (ub & ~up[z]) == 0;
              }
              if (!least) {
                return false;
              }
            }
          }
          return true;
        };
        auto canonical = [&](std::vector<std::uint32_t> const& b) {
          std::iota(perm.begin(), perm.end(), 0);
          std::uint64_t best = ~std::uint64_t(0);
          do {
            std::uint64_t code = 0;
            for (std::size_t y = 0; y < k; ++y) {
              for (std::size_t x = 0; x < k; ++x) {
                code = code << 1 | (b[perm[y]] >> perm[x] & 1);
              }
            }
            best = std::min(best, code);
          } while (std::next_permutation(perm.begin(), perm.end()));
          return best;
        };
        auto rec = [&](auto&& self, std::size_t j) -> void {
          if (j == k) {
            if (is_lattice(leq_full(below))) {
              found.emplace(canonical(below), below);
            }
            return;
          }
          for (std::uint32_t d = 0; d < (std::uint32_t(1) << j); ++d) {
            bool closed = true;
            for (std::size_t x = 0; x < j && closed; ++x) {
              closed = !(d >> x & 1) || (below[x] & ~d) == 0;
            }
            if (closed) {
              below[j] = d;
              self(self, j + 1);
            }
          }
          below[j] = 0;
        };
        rec(rec, 0);
        for (auto const& [code, b] : found) {
          out.emplace_back(Poset(n, leq_full(b)));
        }
      }
      return out;
    }

    //! Graphviz rendering of the Hasse diagram.
    inline std::string to_dot(FiniteLattice const& L,
                              std::string const&   name = "L") {
      std::ostringstream os;
      os << "digraph " << name << " {\n  rankdir=BT;\n";
      for (Element x = 0; x < L.size(); ++x) {
        os << "  n" << x << " [label=\"" << L.label(x) << "\"];\n";
      }
      for (Element x = 0; x < L.size(); ++x) {
        for (Element y : L.upper_covers(x)) {
          os << "  n" << x << " -> n" << y << ";\n";
        }
      }
      os << "}\n";
      return os.str();
    }

  }  // namespace lattice
}  // namespace dicube

#endif  // DICUBE_LATTICE_HPP_
