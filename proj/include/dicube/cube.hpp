// dicube - finite directed cubical homotopy
//
// The symmetric cube category: objects [1]^n, morphisms in normal form.
//
// A morphism phi : [1]^m -> [1]^n is stored as n output codes:
//   0 -> constant 0, 1 -> constant 1, 2 + i -> projection onto input i
// (inputs 0-based, distinct projections).  Comparing code vectors
// lexicographically orders morphisms with const0 < const1 < p1 < p2 < ...
//
// A point of [1]^n is a bitmask; coordinate i (0-based) is bit n-1-i, so the
// numeric order of points is the lexicographic order of coordinate tuples.

#ifndef DICUBE_CUBE_HPP_
#define DICUBE_CUBE_HPP_

#include <algorithm>  // for sort, find
#include <cstdint>    // for uint8_t
#include <optional>   // for optional
#include <sstream>    // for ostringstream
#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <tuple>      // for tie
#include <vector>     // for vector

#include "common.hpp"

namespace dicube {

  using Point = std::uint32_t;

  inline int coord(Point x, unsigned n, unsigned i) {
    return (x >> (n - 1 - i)) & 1u;
  }

  inline Point set_coord(Point x, unsigned n, unsigned i, int v) {
    Point bit = Point(1) << (n - 1 - i);
    return v ? (x | bit) : (x & ~bit);
  }

  class CubeMorphism {
   public:
    static constexpr std::uint8_t CONST0 = 0;
    static constexpr std::uint8_t CONST1 = 1;

    CubeMorphism() = default;

    CubeMorphism(unsigned dom, std::vector<std::uint8_t> out)
        : _dom(dom), _out(std::move(out)) {
      std::vector<bool> seen(dom, false);
      for (auto c : _out) {
        if (c < 2) {
          continue;
        }
        unsigned i = c - 2;
        if (i >= dom) {
          throw std::invalid_argument("cube morphism: projection index "
                                      + std::to_string(i + 1)
                                      + " exceeds domain dimension "
                                      + std::to_string(dom));
        }
        if (seen[i]) {
          throw std::invalid_argument(
              "cube morphism: repeated projection (diagonal)");
        }
        seen[i] = true;
      }
    }

    static std::uint8_t proj(unsigned i) {
      return static_cast<std::uint8_t>(i + 2);
    }

    unsigned dom() const noexcept {
      return _dom;
    }

    unsigned cod() const noexcept {
      return static_cast<unsigned>(_out.size());
    }

    std::vector<std::uint8_t> const& outputs() const noexcept {
      return _out;
    }

    std::uint8_t output(unsigned j) const {
      return _out[j];
    }

    bool is_const(unsigned j) const {
      return _out[j] < 2;
    }

    Point operator()(Point x) const {
      Point    y = 0;
      unsigned n = cod();
      for (unsigned j = 0; j < n; ++j) {
        int v = _out[j] < 2 ? _out[j] : coord(x, _dom, _out[j] - 2);
        y     = set_coord(y, n, j, v);
      }
      return y;
    }

    bool operator==(CubeMorphism const& that) const {
      return _dom == that._dom && _out == that._out;
    }

    bool operator!=(CubeMorphism const& that) const {
      return !(*this == that);
    }

    bool operator<(CubeMorphism const& that) const {
      return std::tie(_dom, _out) < std::tie(that._dom, that._out);
    }

    //! "2->3: [0, p1, p2]"
    std::string to_string() const {
      std::ostringstream os;
      os << _dom << "->" << cod() << ": [";
      for (unsigned j = 0; j < cod(); ++j) {
        os << (j ? ", " : "");
        if (_out[j] < 2) {
          os << int(_out[j]);
        } else {
          os << 'p' << (_out[j] - 1);
        }
      }
      os << ']';
      return os.str();
    }

   private:
    unsigned                  _dom = 0;
    std::vector<std::uint8_t> _out;
  };

  namespace cube {

    inline CubeMorphism identity(unsigned n) {
      std::vector<std::uint8_t> out(n);
      for (unsigned j = 0; j < n; ++j) {
        out[j] = CubeMorphism::proj(j);
      }
      return CubeMorphism(n, std::move(out));
    }

    //! g o f
    inline CubeMorphism compose(CubeMorphism const& g, CubeMorphism const& f) {
      if (f.cod() != g.dom()) {
        throw std::invalid_argument("compose: " + g.to_string() + " after "
                                    + f.to_string()
                                    + " has mismatched dimensions");
      }
      std::vector<std::uint8_t> out(g.cod());
      for (unsigned j = 0; j < g.cod(); ++j) {
        auto c = g.output(j);
        out[j] = c < 2 ? c : f.output(c - 2);
      }
      return CubeMorphism(f.dom(), std::move(out));
    }

    inline CubeMorphism tensor(CubeMorphism const& f, CubeMorphism const& g) {
      auto out = f.outputs();
      for (auto c : g.outputs()) {
        out.push_back(c < 2 ? c : static_cast<std::uint8_t>(c + f.dom()));
      }
      return CubeMorphism(f.dom() + g.dom(), std::move(out));
    }

    //! Coface [1]^{n-1} -> [1]^n inserting the constant alpha at coordinate
    //! i, 1 <= i <= n.
    inline CubeMorphism face(int alpha, unsigned i, unsigned n) {
      if (i < 1 || i > n) {
        throw std::invalid_argument("face: index out of range");
      }
      std::vector<std::uint8_t> out;
      for (unsigned j = 1; j <= n; ++j) {
        if (j < i) {
          out.push_back(CubeMorphism::proj(j - 1));
        } else if (j == i) {
          out.push_back(static_cast<std::uint8_t>(alpha ? 1 : 0));
        } else {
          out.push_back(CubeMorphism::proj(j - 2));
        }
      }
      return CubeMorphism(n - 1, std::move(out));
    }

    //! Codegeneracy [1]^{n+1} -> [1]^n deleting coordinate i, 1 <= i <= n+1.
    inline CubeMorphism codegeneracy(unsigned i, unsigned n) {
      if (i < 1 || i > n + 1) {
        throw std::invalid_argument("codegeneracy: index out of range");
      }
      std::vector<std::uint8_t> out;
      for (unsigned j = 1; j <= n; ++j) {
        out.push_back(CubeMorphism::proj(j < i ? j - 1 : j));
      }
      return CubeMorphism(n + 1, std::move(out));
    }

    //! Principal transposition of coordinates i and i+1 on [1]^n.
    inline CubeMorphism transposition(unsigned i, unsigned n) {
      if (i < 1 || i + 1 > n) {
        throw std::invalid_argument("transposition: index out of range");
      }
      auto id = identity(n);
      auto out = id.outputs();
      std::swap(out[i - 1], out[i]);
      return CubeMorphism(n, std::move(out));
    }

    //! The unique morphism [1]^n -> [1]^0.
    inline CubeMorphism terminal(unsigned n) {
      return CubeMorphism(n, {});
    }

    //! The vertex [1]^0 -> [1]^n at point x.
    inline CubeMorphism vertex(Point x, unsigned n) {
      std::vector<std::uint8_t> out(n);
      for (unsigned j = 0; j < n; ++j) {
        out[j] = static_cast<std::uint8_t>(coord(x, n, j));
      }
      return CubeMorphism(0, std::move(out));
    }

    enum class Kind { iso, epi, mono, neither };

    inline char const* to_string(Kind k) {
      switch (k) {
        case Kind::iso:
          return "iso";
        case Kind::epi:
          return "epi";
        case Kind::mono:
          return "mono";
        default:
          return "neither";
      }
    }

    inline Kind classify(CubeMorphism const& phi) {
      bool              has_const = false;
      std::vector<bool> hit(phi.dom(), false);
      for (auto c : phi.outputs()) {
        if (c < 2) {
          has_const = true;
        } else {
          hit[c - 2] = true;
        }
      }
      bool all_hit = std::find(hit.begin(), hit.end(), false) == hit.end();
      if (!has_const && all_hit) {
        return Kind::iso;
      }
      if (!has_const) {
        return Kind::epi;
      }
      if (all_hit) {
        return Kind::mono;
      }
      return Kind::neither;
    }

    //! All normal forms [1]^m -> [1]^n in lexicographic order.
    inline std::vector<CubeMorphism> enumerate(unsigned m, unsigned n,
                                               unsigned bound = 6) {
      if (m > bound || n > bound) {
        throw std::invalid_argument("enumerate: dimension exceeds bound "
                                    + std::to_string(bound));
      }
      std::vector<CubeMorphism> out;
      std::vector<std::uint8_t> cur;
      std::vector<bool>         used(m, false);
      auto rec = [&](auto&& self) -> void {
        if (cur.size() == n) {
          out.emplace_back(m, cur);
          return;
        }
        for (unsigned c = 0; c < m + 2; ++c) {
          if (c >= 2 && used[c - 2]) {
            continue;
          }
          if (c >= 2) {
            used[c - 2] = true;
          }
          cur.push_back(static_cast<std::uint8_t>(c));
          self(self);
          cur.pop_back();
          if (c >= 2) {
            used[c - 2] = false;
          }
        }
      };
      rec(rec);
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Factorizations
    ////////////////////////////////////////////////////////////////////////

    //! phi = mono o epi; the epi keeps the projected inputs in increasing
    //! order, the mono absorbs any permutation.
    inline std::pair<CubeMorphism, CubeMorphism>
    epi_mono_factorize(CubeMorphism const& phi) {
      std::vector<unsigned> kept;
      for (auto c : phi.outputs()) {
        if (c >= 2) {
          kept.push_back(c - 2);
        }
      }
      std::sort(kept.begin(), kept.end());
      std::vector<std::uint8_t> e, mo;
      for (unsigned i : kept) {
        e.push_back(CubeMorphism::proj(i));
      }
      for (auto c : phi.outputs()) {
        if (c < 2) {
          mo.push_back(c);
        } else {
          auto k = std::find(kept.begin(), kept.end(), unsigned(c - 2))
                   - kept.begin();
          mo.push_back(CubeMorphism::proj(static_cast<unsigned>(k)));
        }
      }
      unsigned p = static_cast<unsigned>(kept.size());
      return {CubeMorphism(phi.dom(), std::move(e)),
              CubeMorphism(p, std::move(mo))};
    }

    //! A generating morphism: coface, codegeneracy or principal
    //! transposition.  `n` is the dimension of the codomain.
    struct Generator {
      enum Type { face, codegeneracy, transposition } type;
      int      alpha = 0;
      unsigned i     = 0;
      unsigned n     = 0;

      CubeMorphism morphism() const {
        switch (type) {
          case face:
            return cube::face(alpha, i, n);
          case codegeneracy:
            return cube::codegeneracy(i, n);
          default:
            return cube::transposition(i, n);
        }
      }

      unsigned dom() const {
        switch (type) {
          case face:
            return n - 1;
          case codegeneracy:
            return n + 1;
          default:
            return n;
        }
      }
    };

    //! Generators g_1, ..., g_r with phi = g_r o ... o g_1: codegeneracies
    //! first, then transpositions, then cofaces.
    inline std::vector<Generator> decompose(CubeMorphism const& phi) {
      auto [e, mono] = epi_mono_factorize(phi);
      std::vector<Generator> gens;
      // codegeneracies, highest deleted coordinate first
      std::vector<bool> kept(phi.dom(), false);
      for (auto c : e.outputs()) {
        kept[c - 2] = true;
      }
      unsigned dim = phi.dom();
      for (unsigned j = phi.dom(); j-- > 0;) {
        if (!kept[j]) {
          gens.push_back({Generator::codegeneracy, 0, j + 1, dim - 1});
          --dim;
        }
      }
      // permutation part of the mono, by bubble sort
      std::vector<unsigned> s;
      for (auto c : mono.outputs()) {
        if (c >= 2) {
          s.push_back(c - 2);
        }
      }
      std::vector<unsigned> swaps;
      for (std::size_t pass = 0; pass < s.size(); ++pass) {
        for (std::size_t t = 0; t + 1 < s.size(); ++t) {
          if (s[t] > s[t + 1]) {
            std::swap(s[t], s[t + 1]);
            swaps.push_back(static_cast<unsigned>(t + 1));
          }
        }
      }
      for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
        gens.push_back({Generator::transposition, 0, *it, dim});
      }
      // cofaces in increasing position
      for (unsigned j = 0; j < mono.cod(); ++j) {
        if (mono.is_const(j)) {
          ++dim;
          gens.push_back({Generator::face, mono.output(j), j + 1, dim});
        }
      }
      return gens;
    }

    ////////////////////////////////////////////////////////////////////////
    // Function tables
    ////////////////////////////////////////////////////////////////////////

    struct FunctionTable {
      unsigned           dom = 0;
      unsigned           cod = 0;
      std::vector<Point> values;

      bool operator==(FunctionTable const& that) const {
        return dom == that.dom && cod == that.cod && values == that.values;
      }

      bool operator<(FunctionTable const& that) const {
        return std::tie(dom, cod, values)
               < std::tie(that.dom, that.cod, that.values);
      }
    };

    inline FunctionTable table(CubeMorphism const& phi) {
      FunctionTable t{phi.dom(), phi.cod(), {}};
      for (Point x = 0; x < (Point(1) << phi.dom()); ++x) {
        t.values.push_back(phi(x));
      }
      return t;
    }

    struct Recognition {
      std::optional<CubeMorphism> morphism;
      std::string                 witness;
    };

    inline std::string point_string(Point x, unsigned n) {
      std::string s = "(";
      for (unsigned i = 0; i < n; ++i) {
        s += (i ? "," : "") + std::to_string(coord(x, n, i));
      }
      return s + ")";
    }

    //! Recognizes interval-preserving lattice homomorphisms and returns
    //! their normal form, otherwise a witness of failure.  Throws if the
    //! table is not monotone.
    inline Recognition from_function(FunctionTable const& f) {
      Point size = Point(1) << f.dom;
      if (f.values.size() != size) {
        throw std::invalid_argument("from_function: table has wrong length");
      }
      for (Point v : f.values) {
        if (v >= (Point(1) << f.cod)) {
          throw std::invalid_argument("from_function: value out of range");
        }
      }
      auto ps = [&](Point x) { return point_string(x, f.dom); };
      for (Point x = 0; x < size; ++x) {
        for (Point y = 0; y < size; ++y) {
          if ((x & y) == x && (f.values[x] & f.values[y]) != f.values[x]) {
            throw std::invalid_argument("from_function: not monotone at "
                                        + ps(x) + " <= " + ps(y));
          }
        }
      }
      for (Point x = 0; x < size; ++x) {
        for (Point y = 0; y < size; ++y) {
          if (f.values[x | y] != (f.values[x] | f.values[y])) {
            return {std::nullopt,
                    "join not preserved on " + ps(x) + ", " + ps(y)};
          }
          if (f.values[x & y] != (f.values[x] & f.values[y])) {
            return {std::nullopt,
                    "meet not preserved on " + ps(x) + ", " + ps(y)};
          }
        }
      }
      for (Point a = 0; a < size; ++a) {
        for (Point b = 0; b < size; ++b) {
          if ((a & b) != a) {
            continue;
          }
          Point             lo = f.values[a], hi = f.values[b];
          std::vector<bool> img(std::size_t(1) << f.cod, false);
          for (Point z = 0; z < size; ++z) {
            if ((a & z) == a && (z & b) == z) {
              img[f.values[z]] = true;
            }
          }
          for (Point w = 0; w < img.size(); ++w) {
            bool in = (lo & w) == lo && (w & hi) == w;
            if (in != img[w]) {
              return {std::nullopt, "image of interval [" + ps(a) + ","
                                        + ps(b) + "] is not an interval"};
            }
          }
        }
      }
      std::vector<std::uint8_t> out(f.cod);
      Point                     bot = f.values[0], top = f.values[size - 1];
      for (unsigned j = 0; j < f.cod; ++j) {
        int lo = coord(bot, f.cod, j), hi = coord(top, f.cod, j);
        if (lo == hi) {
          out[j] = static_cast<std::uint8_t>(lo);
          continue;
        }
        int found = -1;
        for (unsigned i = 0; i < f.dom; ++i) {
          Point e = set_coord(0, f.dom, i, 1);
          if (coord(f.values[e], f.cod, j)) {
            found = static_cast<int>(i);
            break;
          }
        }
        if (found < 0) {
          throw Falsification("from_function: non-constant coordinate of a "
                              "lattice homomorphism is not a projection");
        }
        out[j] = CubeMorphism::proj(static_cast<unsigned>(found));
      }
      CubeMorphism phi;
      try {
        phi = CubeMorphism(f.dom, std::move(out));
      } catch (std::invalid_argument const&) {
        throw Falsification("from_function: interval-preserving lattice "
                            "homomorphism has a diagonal");
      }
      if (table(phi) != f) {
        throw Falsification("from_function: normal form does not "
                            "reproduce the table");
      }
      return {phi, ""};
    }

    //! Parses "2->3: [0, p1, p2]" (the "m->n:" prefix is optional when the
    //! domain is given separately).
    inline CubeMorphism parse(std::string const& text) {
      auto arrow = text.find("->");
      auto colon = text.find(':');
      if (arrow == std::string::npos || colon == std::string::npos) {
        throw std::invalid_argument("parse: expected \"m->n: [...]\"");
      }
      unsigned m  = static_cast<unsigned>(std::stoul(text.substr(0, arrow)));
      unsigned n  = static_cast<unsigned>(
          std::stoul(text.substr(arrow + 2, colon - arrow - 2)));
      auto     lb = text.find('[', colon), rb = text.find(']', colon);
      if (lb == std::string::npos || rb == std::string::npos) {
        throw std::invalid_argument("parse: missing brackets");
      }
      std::vector<std::uint8_t> out;
      std::string               tok;
      std::istringstream        is(text.substr(lb + 1, rb - lb - 1));
      while (std::getline(is, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (tok.empty()) {
          continue;
        }
        if (tok == "0" || tok == "1") {
          out.push_back(static_cast<std::uint8_t>(tok[0] - '0'));
        } else if (tok[0] == 'p') {
          unsigned i = static_cast<unsigned>(std::stoul(tok.substr(1)));
          if (i < 1) {
            throw std::invalid_argument("parse: projections are 1-based");
          }
          out.push_back(CubeMorphism::proj(i - 1));
        } else {
          throw std::invalid_argument("parse: bad output \"" + tok + "\"");
        }
      }
      if (out.size() != n) {
        throw std::invalid_argument("parse: expected " + std::to_string(n)
                                    + " outputs");
      }
      return CubeMorphism(m, std::move(out));
    }

  }  // namespace cube
}  // namespace dicube

#endif  // DICUBE_CUBE_HPP_
