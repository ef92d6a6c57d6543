// dicube - finite directed cubical homotopy
//
// Closed stars in subdivisions, the containment of collapsed stars in
// sd_3-supports, and local lifts of stars of sd_9 C through representables.

#ifndef DICUBE_LIFT_HPP_
#define DICUBE_LIFT_HPP_

#include <optional>   // for optional
#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <vector>     // for vector

#include "cset.hpp"

namespace dicube {
  namespace cset {

    //! Closed stars of all vertices at once.
    inline std::vector<Subpresheaf> closed_stars(CubicalSet const& C) {
      std::vector<Subpresheaf> out(C.count(0), empty_sub(C));
      for (unsigned n = 0; n <= C.trunc(); ++n) {
        for (Index c = 0; c < C.count(n); ++c) {
          for (Index v : C.vertices(n, c)) {
            out[v].cells[n][c] = true;
          }
        }
      }
      for (auto& S : out) {
        close(C, S);
      }
      return out;
    }

    //! The minimal subpresheaf B of C with v a vertex of sd_3 B.
    inline Subpresheaf supp_sd3(CubicalSet const& C, Subdivision const& S,
                                Index v) {
      return carrier(C, S, 0, v);
    }

    //! Checks eps_C(Star(v)) within supp_sd3(v) for every vertex of sd_3 C;
    //! returns the first failing vertex, if any.
    inline std::optional<Index> collapse_star_violation(CubicalSet const& C,
                                                        Subdivision const& S,
                                                        CubicalFunction const& eps) {
      auto stars = closed_stars(S.set);
      for (Index v = 0; v < S.set.count(0); ++v) {
        auto img = image(C, eps, stars[v]);
        if (!img.subset_of(supp_sd3(C, S, v))) {
          return v;
        }
      }
      return std::nullopt;
    }

    //! Data for lifting a subpresheaf of sd_9 C = sd_3 sd_3 C.
    struct Nine {
      CubicalSet const* C;
      Subdivision       sd3;    // sd_3 C
      Subdivision       sd9;    // sd_3 sd_3 C
      CubicalFunction   eps3;   // sd_3 C -> C
      CubicalFunction   eps9;   // sd_9 C -> sd_3 C

      explicit Nine(CubicalSet const& base)
          : C(&base),
            sd3(subdivide(base, 2)),
            sd9(subdivide(sd3.set, 2)),
            eps3(epsilon(base, sd3)),
            eps9(epsilon(sd3.set, sd9)) {}

      Index eps2(unsigned n, Index c) const {
        return eps3(n, eps9(n, c));
      }
    };

    struct LocalLift {
      unsigned        n = 0;
      Restriction     domain;  // S as a cubical set
      CubicalSet      cube;    // representable(n)
      CubicalFunction up;      // S -> cube
      CubicalFunction down;    // cube -> C
    };

    //! Factors eps^2 restricted to S through a representable.
    inline LocalLift local_lift(Nine const& D, Subpresheaf const& S,
                                std::size_t budget = DEFAULT_BUDGET) {
      auto const& C  = *D.C;
      auto const& X  = D.sd9.set;
      auto const& Y  = D.sd3.set;
      unsigned    N  = C.trunc();
      if (S.size() == 0) {
        throw std::invalid_argument("local_lift: empty subpresheaf");
      }
      if (!is_subpresheaf(X, S)) {
        throw std::invalid_argument("local_lift: not a subpresheaf");
      }
      bool in_star = false;
      for (auto const& st : closed_stars(X)) {
        if (S.subset_of(st)) {
          in_star = true;
          break;
        }
      }
      if (!in_star) {
        throw std::invalid_argument("local_lift: not within a closed star");
      }
      // A = eps(S) in sd_3 C, and its minimal carrier
      auto A = image(Y, D.eps9, S);
      std::vector<Subpresheaf> carriers;
      for (unsigned m = 0; m <= N; ++m) {
        for (Index u = 0; u < Y.count(m); ++u) {
          if (!A.cells[m][u]) {
            continue;
          }
          auto K = carrier(C, D.sd3, m, u);
          bool dup = false;
          for (auto const& J : carriers) {
            dup |= J == K;
          }
          if (!dup) {
            carriers.push_back(std::move(K));
          }
        }
      }
      std::vector<Subpresheaf const*> minimal;
      for (auto const& K : carriers) {
        bool is_min = true;
        for (auto const& J : carriers) {
          if (!(J == K) && J.subset_of(K)) {
            is_min = false;
          }
        }
        if (is_min) {
          minimal.push_back(&K);
        }
      }
      if (minimal.size() != 1) {
        throw Falsification("local_lift: carriers of the collapsed star "
                            "have no unique minimal element");
      }
      Subpresheaf const& CS = *minimal.front();
      auto               B  = empty_sub(Y);
      for (unsigned m = 0; m <= N; ++m) {
        for (Index u = 0; u < Y.count(m); ++u) {
          B.cells[m][u] = A.cells[m][u] && carrier(C, D.sd3, m, u).subset_of(CS);
        }
      }
      if (!is_subpresheaf(Y, B)) {
        throw Falsification("local_lift: A meet sd_3 C_S is not a "
                            "subpresheaf");
      }
      // B is representable, generated by a top cell
      unsigned top = 0;
      Index    b   = UNSET;
      for (unsigned m = 0; m <= N; ++m) {
        for (Index u = 0; u < Y.count(m); ++u) {
          if (B.cells[m][u] && !Y.is_degenerate(m, u)) {
            if (b == UNSET || m > top) {
              top = m;
              b   = u;
            }
            break;
          }
        }
      }
      LocalLift L;
      L.n    = top;
      L.cube = representable(top, N);
      auto rB = restrict(Y, B);
      auto yb = yoneda(L.cube, Y, top, b);
      // inverse of the Yoneda map onto B
      std::vector<std::vector<Index>> inv(N + 1);
      for (unsigned m = 0; m <= N; ++m) {
        inv[m].assign(Y.count(m), UNSET);
        for (Index k = 0; k < L.cube.count(m); ++k) {
          Index u = yb(m, k);
          if (!B.cells[m][u] || inv[m][u] != UNSET) {
            throw Falsification("local_lift: B is not representable");
          }
          inv[m][u] = k;
        }
        for (Index u = 0; u < Y.count(m); ++u) {
          if (B.cells[m][u] && inv[m][u] == UNSET) {
            throw Falsification("local_lift: B is not representable");
          }
        }
      }
      // retraction A -> B over C
      auto             rA = restrict(Y, A);
      HomSearchOptions opt;
      opt.budget = budget;
      opt.fixed.resize(N + 1);
      for (unsigned m = 0; m <= N; ++m) {
        opt.fixed[m].assign(rA.set.count(m), UNSET);
        for (Index a = 0; a < rA.set.count(m); ++a) {
          Index u = rA.to_parent[m][a];
          if (B.cells[m][u]) {
            opt.fixed[m][a] = rB.from_parent[m][u];
          }
        }
      }
      opt.allowed = [&](unsigned m, Index a, Index bb) {
        return D.eps3(m, rA.to_parent[m][a]) == D.eps3(m, rB.to_parent[m][bb]);
      };
      std::optional<CubicalFunction> pi;
      enumerate_homs(rA.set, rB.set, opt, [&](CubicalFunction const& f) {
        pi = f;
        return false;
      });
      if (!pi) {
        throw Falsification("local_lift: no retraction onto B over C");
      }
      L.domain = restrict(X, S);
      L.up.map.resize(N + 1);
      for (unsigned m = 0; m <= N; ++m) {
        for (Index s : L.domain.to_parent[m]) {
          Index a = rA.from_parent[m][D.eps9(m, s)];
          Index r = rB.to_parent[m][(*pi)(m, a)];
          L.up.map[m].push_back(inv[m][r]);
        }
      }
      L.down = yoneda(L.cube, C, top, D.eps3(top, b));
      return L;
    }

    //! Empty string when up and down are cubical functions and
    //! down o up = eps^2 on S.
    inline std::string check_lift(Nine const& D, LocalLift const& L) {
      auto e = check_function(L.domain.set, L.cube, L.up);
      if (!e.empty()) {
        return "up: " + e;
      }
      e = check_function(L.cube, *D.C, L.down);
      if (!e.empty()) {
        return "down: " + e;
      }
      for (unsigned m = 0; m < L.up.map.size(); ++m) {
        for (Index s = 0; s < L.up.map[m].size(); ++s) {
          if (L.down(m, L.up(m, s)) != D.eps2(m, L.domain.to_parent[m][s])) {
            return "down o up differs from eps^2 in dimension "
                   + std::to_string(m);
          }
        }
      }
      return "";
    }

  }  // namespace cset
}  // namespace dicube

#endif  // DICUBE_LIFT_HPP_
