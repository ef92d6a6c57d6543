// dicube - finite directed cubical homotopy
//
// Presentations of fundamental categories of cubical sets.
//
// Objects are vertices, generators the nondegenerate edges e with
// src = d_{-,1} e and tgt = d_{+,1} e, and each nondegenerate square theta
// (one per transposition orbit) contributes
//   d_{-,2}theta . d_{+,1}theta = d_{-,1}theta . d_{+,2}theta
// with words read left to right and degenerate edges dropped.

#ifndef DICUBE_T1_HPP_
#define DICUBE_T1_HPP_

#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <vector>     // for vector

#include "cat.hpp"
#include "cset.hpp"

namespace dicube {
  namespace t1 {

    //! With reversed = true the roles of the lower and upper faces are
    //! exchanged (used only as a regression probe on the face convention).
    inline cat::Presentation fundamental_presentation(CubicalSet const& C,
                                                      bool reversed = false) {
      if (C.trunc() < 2) {
        throw std::invalid_argument("fundamental_presentation: truncation "
                                    "below 2");
      }
      int                lo = reversed ? 1 : 0, hi = 1 - lo;
      cat::Presentation  P;
      P.objects = C.count(0);
      std::vector<Index> gen_of(C.count(1), UNSET);
      for (Index e : C.nondegenerate(1)) {
        gen_of[e] = static_cast<Index>(P.generators.size());
        P.generators.push_back({C.face(1, lo, 1, e), C.face(1, hi, 1, e),
                                "e" + std::to_string(e)});
      }
      auto word = [&](std::initializer_list<Index> edges) {
        std::vector<Index> w;
        for (Index e : edges) {
          if (gen_of[e] != UNSET) {
            w.push_back(gen_of[e]);
          }
        }
        return w;
      };
      for (Index t : C.nondegenerate_orbits(2)) {
        Index a = C.face(2, lo, 2, t), b = C.face(2, hi, 1, t);
        Index c = C.face(2, lo, 1, t), d = C.face(2, hi, 2, t);
        auto  lhs = word({a, b}), rhs = word({c, d});
        if (lhs == rhs) {
          continue;
        }
        Point s = reversed ? 3 : 0;
        Index src = C.act(cube::vertex(s, 2), t);
        Index tgt = C.act(cube::vertex(3 - s, 2), t);
        P.relations.push_back({lhs, rhs, src, tgt});
      }
      P.validate();
      return P;
    }

    inline std::size_t t1_functor_count(CubicalSet const& C, FinCat const& S,
                                        std::size_t budget = DEFAULT_BUDGET) {
      std::size_t count = 0;
      cat::for_each_functor(
          fundamental_presentation(C), S,
          [&](cat::Functor const&) {
            ++count;
            return true;
          },
          budget);
      return count;
    }

    //! Human-readable relation "e1 e2 = e3 e4".
    inline std::string relation_string(cat::Presentation const&           P,
                                       cat::Presentation::Relation const& r) {
      auto w = [&](std::vector<Index> const& word) {
        if (word.empty()) {
          return std::string("id");
        }
        std::string s;
        for (std::size_t i = 0; i < word.size(); ++i) {
          s += (i ? " " : "") + P.generators[word[i]].name;
        }
        return s;
      };
      return w(r.lhs) + " = " + w(r.rhs);
    }

    inline std::string to_dot(cat::Presentation const& P) {
      std::string s = "digraph T1 {\n";
      for (Index x = 0; x < P.objects; ++x) {
        s += "  v" + std::to_string(x) + ";\n";
      }
      for (auto const& g : P.generators) {
        s += "  v" + std::to_string(g.src) + " -> v" + std::to_string(g.tgt)
             + " [label=\"" + g.name + "\"];\n";
      }
      for (auto const& r : P.relations) {
        s += "  // " + relation_string(P, r) + "\n";
      }
      return s + "}\n";
    }

  }  // namespace t1
}  // namespace dicube

#endif  // DICUBE_T1_HPP_
