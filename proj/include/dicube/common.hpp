// dicube - finite directed cubical homotopy
//
// Shared vocabulary types: error classes, enumeration budgets and a
// disjoint-set forest with smallest-index representatives.

#ifndef DICUBE_COMMON_HPP_
#define DICUBE_COMMON_HPP_

#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t
#include <numeric>    // for iota
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <vector>     // for vector

namespace dicube {

  //! Index of an element of a finite set (lattice element, cell, morphism).
  using Index = std::uint32_t;

  //! Raised when an enumeration would exceed its configured budget.
  //!
  //! Budgets are never silently truncated: callers either raise the budget or
  //! receive this error.
  class BudgetExceeded : public std::runtime_error {
   public:
    explicit BudgetExceeded(std::string const& what)
        : std::runtime_error("budget exceeded: " + what) {}
  };

  //! Raised when a computation contradicts a property that is supposed to
  //! hold unconditionally (e.g. a lemma about distributive lattices).
  class Falsification : public std::logic_error {
   public:
    explicit Falsification(std::string const& what)
        : std::logic_error("falsification: " + what) {}
  };

  //! Default enumeration budget (candidate maps).
  inline constexpr std::size_t DEFAULT_BUDGET = 1'000'000;

  //! Counts work against a budget and throws BudgetExceeded past the limit.
  class Budget {
   public:
    explicit Budget(std::size_t limit = DEFAULT_BUDGET, std::string what = "")
        : _limit(limit), _used(0), _what(std::move(what)) {}

    void charge(std::size_t n = 1) {
      _used += n;
      if (_used > _limit) {
        throw BudgetExceeded(_what + " (limit " + std::to_string(_limit)
                             + ")");
      }
    }

    std::size_t used() const noexcept {
      return _used;
    }

    std::size_t limit() const noexcept {
      return _limit;
    }

   private:
    std::size_t _limit;
    std::size_t _used;
    std::string _what;
  };

  //! Disjoint-set forest whose representative is always the smallest index
  //! of the class.
  class DisjointSets {
   public:
    DisjointSets() = default;

    explicit DisjointSets(std::size_t n) : _parent(n) {
      std::iota(_parent.begin(), _parent.end(), std::size_t(0));
    }

    std::size_t size() const noexcept {
      return _parent.size();
    }

    std::size_t find(std::size_t x) {
      std::size_t root = x;
      while (_parent[root] != root) {
        root = _parent[root];
      }
      while (_parent[x] != root) {
        std::size_t next = _parent[x];
        _parent[x]       = root;
        x                = next;
      }
      return root;
    }

    //! Returns true if the two classes were distinct.
    bool unite(std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (x < y) {
        _parent[y] = x;
      } else {
        _parent[x] = y;
      }
      return true;
    }

    //! Class index of every element, classes numbered in order of their
    //! smallest member.  Returns the number of classes.
    std::size_t labels(std::vector<Index>& out) {
      out.assign(_parent.size(), 0);
      std::vector<Index> id(_parent.size(), Index(-1));
      std::size_t        next = 0;
      for (std::size_t x = 0; x < _parent.size(); ++x) {
        std::size_t r = find(x);
        if (id[r] == Index(-1)) {
          id[r] = static_cast<Index>(next++);
        }
        out[x] = id[r];
      }
      return next;
    }

   private:
    std::vector<std::size_t> _parent;
  };

  //! A partition of {0, ..., n-1}: class index per element plus one
  //! representative (smallest member) per class.
  struct Partition {
    std::vector<Index> class_of;
    std::vector<Index> representative;

    std::size_t count() const noexcept {
      return representative.size();
    }

    static Partition from(DisjointSets& ds) {
      Partition p;
      std::size_t n = ds.labels(p.class_of);
      p.representative.assign(n, 0);
      std::vector<bool> seen(n, false);
      for (std::size_t x = 0; x < p.class_of.size(); ++x) {
        if (!seen[p.class_of[x]]) {
          seen[p.class_of[x]]             = true;
          p.representative[p.class_of[x]] = static_cast<Index>(x);
        }
      }
      return p;
    }
  };

  //! Hash for std::vector of integral values.
  struct VectorHash {
    template <typename T>
    std::size_t operator()(std::vector<T> const& v) const noexcept {
      std::size_t h = v.size();
      for (auto const& x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }
  };

}  // namespace dicube

#endif  // DICUBE_COMMON_HPP_
