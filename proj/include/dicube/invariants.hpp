// dicube - finite directed cubical homotopy
//
// Directed invariants: path components, directed homotopy classes of maps
// into nerves (via functors out of the fundamental category modulo
// natural-transformation zig-zags), directed 1-cohomology, and the loop
// monoids tau_1, tau_2.

#ifndef DICUBE_INVARIANTS_HPP_
#define DICUBE_INVARIANTS_HPP_

#include <algorithm>      // for min
#include <functional>     // for function
#include <memory>         // for shared_ptr
#include <map>            // for map
#include <optional>       // for optional
#include <stdexcept>      // for invalid_argument
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "cat.hpp"
#include "cset.hpp"
#include "t1.hpp"

namespace dicube {
  namespace inv {

    struct Pi0 {
      std::size_t        count = 0;
      std::vector<Index> representative;
      std::vector<Index> class_of;
    };

    inline Pi0 pi0(CubicalSet const& C) {
      if (C.trunc() < 1) {
        throw std::invalid_argument("pi0: truncation below 1");
      }
      DisjointSets ds(C.count(0));
      for (Index e = 0; e < C.count(1); ++e) {
        auto [s, t] = C.endpoints(e);
        ds.unite(s, t);
      }
      auto p = Partition::from(ds);
      return {p.count(), p.representative, p.class_of};
    }

    ////////////////////////////////////////////////////////////////////////
    // Homotopy classes of functors
    ////////////////////////////////////////////////////////////////////////

    enum class Method { automatic, exhaustive, thin, groupoid };

    inline char const* to_string(Method m) {
      switch (m) {
        case Method::exhaustive:
          return "exhaustive";
        case Method::thin:
          return "thin";
        case Method::groupoid:
          return "groupoid";
        default:
          return "automatic";
      }
    }

    struct HomClasses {
      std::size_t               count = 0;
      Method                    method = Method::automatic;
      std::vector<cat::Functor> representatives;
      // classify(F) = index of the class of F among representatives
      std::function<Index(cat::Functor const&)> classify;
    };

    namespace detail {

      //! Spanning forest of the underlying graph of a presentation.
      struct Forest {
        std::vector<Index>              component;  // per object
        std::vector<Index>              roots;
        std::vector<bool>               tree;       // per generator
        std::vector<std::vector<Index>> order;      // BFS objects per comp.
        std::vector<Index>              parent_edge;
      };

      inline Forest spanning_forest(cat::Presentation const& P) {
        Forest F;
        F.component.assign(P.objects, UNSET);
        F.tree.assign(P.generators.size(), false);
        F.parent_edge.assign(P.objects, UNSET);
        std::vector<std::vector<Index>> inc(P.objects);
        for (Index e = 0; e < P.generators.size(); ++e) {
          inc[P.generators[e].src].push_back(e);
          inc[P.generators[e].tgt].push_back(e);
        }
        for (Index r = 0; r < P.objects; ++r) {
          if (F.component[r] != UNSET) {
            continue;
          }
          Index k = static_cast<Index>(F.roots.size());
          F.roots.push_back(r);
          F.order.push_back({r});
          F.component[r] = k;
          for (std::size_t i = 0; i < F.order[k].size(); ++i) {
            Index x = F.order[k][i];
            for (Index e : inc[x]) {
              Index y = P.generators[e].src == x ? P.generators[e].tgt
                                                 : P.generators[e].src;
              if (F.component[y] == UNSET) {
                F.component[y]   = k;
                F.tree[e]        = true;
                F.parent_edge[y] = e;
                F.order[k].push_back(y);
              }
            }
          }
        }
        return F;
      }

      inline HomClasses exhaustive(cat::Presentation const& P, FinCat const& S,
                                   std::size_t budget) {
        auto       Fs = cat::enumerate_functors(P, S, budget);
        auto       part = cat::functor_homotopy_classes(P, S, Fs, budget);
        HomClasses H;
        H.count  = part.count();
        H.method = Method::exhaustive;
        for (Index r : part.representative) {
          H.representatives.push_back(Fs[r]);
        }
        auto index = std::make_shared<std::map<cat::Functor, Index>>();
        for (Index i = 0; i < Fs.size(); ++i) {
          (*index)[Fs[i]] = part.class_of[i];
        }
        H.classify = [index](cat::Functor const& F) { return index->at(F); };
        return H;
      }

      //! In a thin target a transformation F => G exists iff each F(x)
      //! maps to G(x).
      inline HomClasses thin(cat::Presentation const& P, FinCat const& S,
                             std::size_t budget) {
        auto         Fs = cat::enumerate_functors(P, S, budget);
        Budget       B(budget, "thin homotopy classes");
        DisjointSets ds(Fs.size());
        auto         below = [&](cat::Functor const& F, cat::Functor const& G) {
          for (Index x = 0; x < P.objects; ++x) {
            if (S.hom(F.obj[x], G.obj[x]).empty()) {
              return false;
            }
          }
          return true;
        };
        for (std::size_t i = 0; i < Fs.size(); ++i) {
          for (std::size_t j = i + 1; j < Fs.size(); ++j) {
            B.charge();
            if (ds.find(i) != ds.find(j)
                && (below(Fs[i], Fs[j]) || below(Fs[j], Fs[i]))) {
              ds.unite(i, j);
            }
          }
        }
        auto       part = Partition::from(ds);
        HomClasses H;
        H.count  = part.count();
        H.method = Method::thin;
        for (Index r : part.representative) {
          H.representatives.push_back(Fs[r]);
        }
        auto index = std::make_shared<std::map<cat::Functor, Index>>();
        for (Index i = 0; i < Fs.size(); ++i) {
          (*index)[Fs[i]] = part.class_of[i];
        }
        H.classify = [index](cat::Functor const& F) { return index->at(F); };
        return H;
      }

      //! Groupoid targets: every class has a representative sending all
      //! spanning-tree edges to identities at a fixed object X per
      //! component; such representatives are unique up to simultaneous
      //! conjugation by Aut(X).
      inline HomClasses groupoid(cat::Presentation const& P, FinCat const& S,
                                 std::size_t budget) {
        auto forest = std::make_shared<Forest>(spanning_forest(P));
        auto const& Fo = *forest;
        std::size_t K  = Fo.roots.size();
        // iso-class representatives of objects
        auto iso_rep = std::make_shared<std::vector<Index>>(S.objects(), UNSET);
        std::vector<Index> reps;
        for (Index x = 0; x < S.objects(); ++x) {
          if ((*iso_rep)[x] != UNSET) {
            continue;
          }
          reps.push_back(x);
          for (Index y = 0; y < S.objects(); ++y) {
            if (!S.hom(x, y).empty()) {
              (*iso_rep)[y] = x;
            }
          }
        }
        // relations per component
        std::vector<std::vector<Index>> rels(K), gens(K);
        for (Index r = 0; r < P.relations.size(); ++r) {
          rels[Fo.component[P.relations[r].src]].push_back(r);
        }
        for (Index e = 0; e < P.generators.size(); ++e) {
          if (!Fo.tree[e]) {
            gens[Fo.component[P.generators[e].src]].push_back(e);
          }
        }
        // canonical form of a gauge-fixed assignment: min over conjugates
        auto canon = [&S](Index X, std::vector<Index> v) {
          auto const&        aut = S.hom(X, X);
          std::vector<Index> best = v;
          for (Index z : aut) {
            Index              zi = *S.inverse(z);
            std::vector<Index> w(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
              w[i] = S.compose(S.compose(zi, v[i]), z);
            }
            best = std::min(best, w);
          }
          return best;
        };
        // per component: list of (X, canonical assignment)
        using Local = std::pair<Index, std::vector<Index>>;
        std::vector<std::vector<Local>> local(K);
        Budget                          B(budget, "groupoid gauge search");
        for (std::size_t k = 0; k < K; ++k) {
          for (Index X : reps) {
            auto const&        aut = S.hom(X, X);
            std::vector<Index> val(gens[k].size(), UNSET);
            std::map<std::vector<Index>, bool> seen;
            // word value with tree edges as identities
            std::vector<Index> gpos(P.generators.size(), UNSET);
            for (Index i = 0; i < gens[k].size(); ++i) {
              gpos[gens[k][i]] = i;
            }
            // relations ready after assigning position i
            std::vector<std::vector<Index>> ready(gens[k].size() + 1);
            for (Index r : rels[k]) {
              std::size_t last = 0;
              for (auto const* w : {&P.relations[r].lhs, &P.relations[r].rhs}) {
                for (Index g : *w) {
                  if (!Fo.tree[g]) {
                    last = std::max<std::size_t>(last, gpos[g] + 1);
                  }
                }
              }
              ready[last].push_back(r);
            }
            auto eval = [&](std::vector<Index> const& w) {
              Index m = S.identity(X);
              for (Index g : w) {
                if (!Fo.tree[g]) {
                  m = S.compose(m, val[gpos[g]]);
                }
              }
              return m;
            };
            auto ok_at = [&](std::size_t i) {
              for (Index r : ready[i]) {
                if (eval(P.relations[r].lhs) != eval(P.relations[r].rhs)) {
                  return false;
                }
              }
              return true;
            };
            if (!ok_at(0)) {
              continue;
            }
            auto rec = [&](auto&& self, std::size_t i) -> void {
              if (i == val.size()) {
                seen[canon(X, val)] = true;
                return;
              }
              for (Index a : aut) {
                B.charge();
                val[i] = a;
                if (ok_at(i + 1)) {
                  self(self, i + 1);
                }
              }
              val[i] = UNSET;
            };
            rec(rec, 0);
            for (auto const& [v, _] : seen) {
              local[k].emplace_back(X, v);
            }
          }
        }
        HomClasses H;
        H.method = Method::groupoid;
        H.count  = 1;
        for (auto const& l : local) {
          H.count *= l.size();
        }
        // representatives in mixed-radix order (components last-fastest)
        auto build = [&P, &S, forest, gens](std::vector<Local const*> const& pick) {
          cat::Functor F{std::vector<Index>(P.objects),
                         std::vector<Index>(P.generators.size())};
          for (Index x = 0; x < P.objects; ++x) {
            F.obj[x] = pick[forest->component[x]]->first;
          }
          for (Index e = 0; e < P.generators.size(); ++e) {
            if (forest->tree[e]) {
              F.gen[e] = S.identity(F.obj[P.generators[e].src]);
            }
          }
          for (std::size_t k = 0; k < gens.size(); ++k) {
            for (std::size_t i = 0; i < gens[k].size(); ++i) {
              F.gen[gens[k][i]] = pick[k]->second[i];
            }
          }
          return F;
        };
        constexpr std::size_t MAX_REPS = 100000;
        if (H.count <= MAX_REPS) {
          std::vector<std::size_t>  idx(K, 0);
          std::vector<Local const*> pick(K);
          for (std::size_t c = 0; c < H.count; ++c) {
            std::size_t r = c;
            for (std::size_t k = K; k-- > 0;) {
              pick[k] = &local[k][r % local[k].size()];
              r /= local[k].size();
            }
            H.representatives.push_back(build(pick));
          }
        }
        auto lookup = std::make_shared<std::vector<std::map<Local, Index>>>(K);
        for (std::size_t k = 0; k < K; ++k) {
          for (Index i = 0; i < local[k].size(); ++i) {
            (*lookup)[k][local[k][i]] = i;
          }
        }
        auto sizes = std::make_shared<std::vector<std::size_t>>();
        for (auto const& l : local) {
          sizes->push_back(l.size());
        }
        H.classify = [&P, &S, forest, gens, iso_rep, lookup, sizes,
                      canon](cat::Functor const& F) -> Index {
          auto const&        Fo = *forest;
          std::vector<Index> u(P.objects, UNSET);
          std::size_t        code = 0;
          for (std::size_t k = 0; k < Fo.roots.size(); ++k) {
            Index r = Fo.roots[k];
            Index X = (*iso_rep)[F.obj[r]];
            u[r]    = S.hom(F.obj[r], X).front();
            for (Index y : Fo.order[k]) {
              if (y == r) {
                continue;
              }
              Index e = Fo.parent_edge[y];
              auto const& g = P.generators[e];
              // F(e);u_tgt = u_src;id
              if (g.tgt == y) {
                u[y] = S.compose(*S.inverse(F.gen[e]), u[g.src]);
              } else {
                u[y] = S.compose(F.gen[e], u[g.tgt]);
              }
            }
            std::vector<Index> v;
            for (Index e : gens[k]) {
              auto const& g = P.generators[e];
              v.push_back(S.compose(S.compose(*S.inverse(u[g.src]), F.gen[e]),
                                    u[g.tgt]));
            }
            auto it = (*lookup)[k].find({X, canon(X, v)});
            if (it == (*lookup)[k].end()) {
              throw Falsification("groupoid classes: functor not found");
            }
            code = code * (*sizes)[k] + it->second;
          }
          return static_cast<Index>(code);
        };
        return H;
      }

    }  // namespace detail

    //! Homotopy classes of functors P -> S.  The automatic method uses the
    //! groupoid gauge reduction for groupoid targets, pointwise comparison
    //! for thin targets, and pairwise transformation search otherwise.
    //! The returned classify function keeps P and S by reference.
    inline HomClasses functor_classes(cat::Presentation const& P,
                                      FinCat const&            S,
                                      Method m = Method::automatic,
                                      std::size_t budget = DEFAULT_BUDGET) {
      if (m == Method::automatic) {
        m = S.is_groupoid() ? Method::groupoid
            : S.is_thin()   ? Method::thin
                            : Method::exhaustive;
      }
      switch (m) {
        case Method::groupoid:
          if (!S.is_groupoid()) {
            throw std::invalid_argument("groupoid method needs a groupoid");
          }
          return detail::groupoid(P, S, budget);
        case Method::thin:
          if (!S.is_thin()) {
            throw std::invalid_argument("thin method needs a thin category");
          }
          return detail::thin(P, S, budget);
        default:
          return detail::exhaustive(P, S, budget);
      }
    }

    //! Classes of cubical functions B -> ner S under directed homotopy.
    struct MapClasses {
      cat::Presentation presentation;
      HomClasses        classes;
    };

    inline std::unique_ptr<MapClasses>
    hom_classes(CubicalSet const& B, FinCat const& S,
                Method m = Method::automatic,
                std::size_t budget = DEFAULT_BUDGET) {
      auto R          = std::make_unique<MapClasses>();
      R->presentation = t1::fundamental_presentation(B);
      R->classes      = functor_classes(R->presentation, S, m, budget);
      return R;
    }

    ////////////////////////////////////////////////////////////////////////
    // Directed 1-cohomology
    ////////////////////////////////////////////////////////////////////////

    struct H1 {
      FinMonoid                       coefficients;
      FinCat                          category;
      std::unique_ptr<MapClasses>     classes;
      std::optional<FinMonoid>        monoid;  // commutative coefficients
      std::size_t count() const {
        return classes->classes.count;
      }
    };

    inline std::unique_ptr<H1> h1(CubicalSet const& C, FinMonoid const& tau,
                                  Method      m      = Method::automatic,
                                  std::size_t budget = DEFAULT_BUDGET) {
      auto R          = std::make_unique<H1>();
      R->coefficients = tau;
      R->category     = cat::from_monoid(tau);
      R->classes      = hom_classes(C, R->category, m, budget);
      auto const& H   = R->classes->classes;
      if (tau.is_commutative() && H.representatives.size() == H.count) {
        std::size_t        k = H.count;
        std::vector<Index> t(k * k);
        auto               product = [&](cat::Functor const& F,
                               cat::Functor const& G) {
          cat::Functor P = F;
          for (std::size_t e = 0; e < F.gen.size(); ++e) {
            P.gen[e] = tau.mul(F.gen[e], G.gen[e]);
          }
          return P;
        };
        // a gauge-transformed copy of each representative, used to check
        // that the product is independent of the representative
        auto moved = [&](cat::Functor F, Index z) {
          auto const& P = R->classes->presentation;
          if (P.objects == 0) {
            return F;
          }
          // u = z at object 0 and identity elsewhere is invertible only for
          // units; skip otherwise
          for (std::size_t e = 0; e < F.gen.size(); ++e) {
            auto const& g = P.generators[e];
            Index       a = g.src == 0 ? z : tau.unit();
            Index       b = g.tgt == 0 ? z : tau.unit();
            // F'(e) = a^-1 F(e) b
            Index ainv = UNSET;
            for (Index y = 0; y < tau.size(); ++y) {
              if (tau.mul(a, y) == tau.unit()) {
                ainv = y;
              }
            }
            F.gen[e] = tau.mul(tau.mul(ainv, F.gen[e]), b);
          }
          return F;
        };
        std::vector<Index> units;
        for (Index z = 0; z < tau.size(); ++z) {
          for (Index y = 0; y < tau.size(); ++y) {
            if (tau.mul(z, y) == tau.unit()) {
              units.push_back(z);
              break;
            }
          }
        }
        for (Index i = 0; i < k; ++i) {
          for (Index j = 0; j < k; ++j) {
            Index c = H.classify(product(H.representatives[i],
                                         H.representatives[j]));
            for (Index z : units) {
              Index c2 = H.classify(product(moved(H.representatives[i], z),
                                            H.representatives[j]));
              if (c2 != c) {
                throw Falsification("h1: class product not well defined");
              }
            }
            t[i * k + j] = c;
          }
        }
        Index unit = UNSET;
        for (Index i = 0; i < k && unit == UNSET; ++i) {
          bool all = true;
          for (auto g : H.representatives[i].gen) {
            all &= g == tau.unit();
          }
          if (all) {
            unit = i;
          }
        }
        if (unit == UNSET) {
          cat::Functor U = H.representatives[0];
          std::fill(U.gen.begin(), U.gen.end(), tau.unit());
          unit = H.classify(U);
        }
        R->monoid = FinMonoid(k, unit, t, "H1");
      }
      return R;
    }

    ////////////////////////////////////////////////////////////////////////
    // Loops
    ////////////////////////////////////////////////////////////////////////

    struct Loops {
      unsigned                 n = 0;
      std::vector<Index>       loops;  // n-cells with boundary at v
      Partition                classes;
      std::optional<FinMonoid> monoid;  // n = 1, when well defined
      std::size_t              count() const {
        return classes.count();
      }
    };

    inline Loops loop_classes(CubicalSet const& C, Index v, unsigned n) {
      if (n < 1 || n > 2) {
        throw std::invalid_argument("loop_classes: degree must be 1 or 2");
      }
      if (C.trunc() < n + 1) {
        throw std::invalid_argument("loop_classes: truncation too small");
      }
      if (v >= C.count(0)) {
        throw std::invalid_argument("loop_classes: vertex out of range");
      }
      Loops L;
      L.n         = n;
      Index dn1   = C.degenerate_at(v, n - 1);
      Index dn    = C.degenerate_at(v, n);
      std::vector<Index> pos(C.count(n), UNSET);
      for (Index c = 0; c < C.count(n); ++c) {
        bool ok = true;
        for (unsigned i = 1; i <= n && ok; ++i) {
          ok = C.face(n, 0, i, c) == dn1 && C.face(n, 1, i, c) == dn1;
        }
        if (ok) {
          pos[c] = static_cast<Index>(L.loops.size());
          L.loops.push_back(c);
        }
      }
      DisjointSets ds(L.loops.size());
      for (Index h = 0; h < C.count(n + 1); ++h) {
        bool ok = true;
        for (unsigned i = 1; i <= n && ok; ++i) {
          ok = C.face(n + 1, 0, i, h) == dn && C.face(n + 1, 1, i, h) == dn;
        }
        if (!ok) {
          continue;
        }
        Index a = C.face(n + 1, 0, n + 1, h), b = C.face(n + 1, 1, n + 1, h);
        if (pos[a] == UNSET || pos[b] == UNSET) {
          throw Falsification("loop_classes: homotopy ends are not loops");
        }
        ds.unite(pos[a], pos[b]);
      }
      L.classes = Partition::from(ds);
      if (n == 1) {
        // [a].[b] = [c] when a square has bottom a, right b, left
        // degenerate at v and top c
        std::size_t        k = L.classes.count();
        std::vector<Index> t(k * k, UNSET);
        bool               ok = true;
        for (Index th = 0; th < C.count(2) && ok; ++th) {
          if (C.face(2, 0, 1, th) != dn) {
            continue;
          }
          Index a = C.face(2, 0, 2, th), b = C.face(2, 1, 1, th);
          Index c = C.face(2, 1, 2, th);
          if (pos[a] == UNSET || pos[b] == UNSET || pos[c] == UNSET) {
            continue;
          }
          Index x = L.classes.class_of[pos[a]], y = L.classes.class_of[pos[b]];
          Index z = L.classes.class_of[pos[c]];
          if (t[x * k + y] == UNSET) {
            t[x * k + y] = z;
          } else if (t[x * k + y] != z) {
            ok = false;
          }
        }
        for (auto x : t) {
          ok &= x != UNSET;
        }
        if (ok) {
          try {
            L.monoid = FinMonoid(k, L.classes.class_of[pos[dn]], t, "tau1");
          } catch (std::invalid_argument const&) {
            L.monoid.reset();
          }
        }
      }
      return L;
    }

    ////////////////////////////////////////////////////////////////////////
    // Monoid isomorphism
    ////////////////////////////////////////////////////////////////////////

    inline std::optional<std::vector<Index>>
    find_monoid_isomorphism(FinMonoid const& A, FinMonoid const& B) {
      std::size_t n = A.size();
      if (n != B.size()) {
        return std::nullopt;
      }
      std::vector<Index> f(n, UNSET);
      std::vector<bool>  used(n, false);
      auto rec = [&](auto&& self, Index x) -> bool {
        if (x == n) {
          return true;
        }
        for (Index y = 0; y < n; ++y) {
          if (used[y] || (x == A.unit()) != (y == B.unit())) {
            continue;
          }
          f[x]    = y;
          used[y] = true;
          bool ok = true;
          for (Index a = 0; a <= x && ok; ++a) {
            for (Index b = 0; b <= x && ok; ++b) {
              Index c = A.mul(a, b);
              if (c <= x) {
                ok = f[c] == B.mul(f[a], f[b]);
              }
            }
          }
          if (ok && self(self, x + 1)) {
            return true;
          }
          used[y] = false;
        }
        f[x] = UNSET;
        return false;
      };
      if (rec(rec, 0)) {
        return f;
      }
      return std::nullopt;
    }

    //! Direct product of monoids, element (a, b) = a * |N| + b.
    inline FinMonoid product(FinMonoid const& M, FinMonoid const& N) {
      std::size_t        k = M.size() * N.size();
      std::vector<Index> t(k * k);
      for (Index x = 0; x < k; ++x) {
        for (Index y = 0; y < k; ++y) {
          t[x * k + y] = static_cast<Index>(
              M.mul(x / N.size(), y / N.size()) * N.size()
              + N.mul(x % N.size(), y % N.size()));
        }
      }
      return FinMonoid(k, static_cast<Index>(M.unit() * N.size() + N.unit()),
                       t, M.name() + "x" + N.name());
    }

    //! {(a, b) : a^2 = b^2} as a submonoid of M x M (M commutative).
    inline FinMonoid square_fiber_product(FinMonoid const& M) {
      std::vector<std::pair<Index, Index>> el;
      for (Index a = 0; a < M.size(); ++a) {
        for (Index b = 0; b < M.size(); ++b) {
          if (M.mul(a, a) == M.mul(b, b)) {
            el.emplace_back(a, b);
          }
        }
      }
      std::size_t        k = el.size();
      std::vector<Index> t(k * k);
      Index              unit = 0;
      for (Index x = 0; x < k; ++x) {
        if (el[x] == std::make_pair(M.unit(), M.unit())) {
          unit = x;
        }
        for (Index y = 0; y < k; ++y) {
          std::pair<Index, Index> p{M.mul(el[x].first, el[y].first),
                                    M.mul(el[x].second, el[y].second)};
          t[x * k + y] = static_cast<Index>(
              std::find(el.begin(), el.end(), p) - el.begin());
        }
      }
      return FinMonoid(k, unit, t, M.name() + "x_2" + M.name());
    }

  }  // namespace inv
}  // namespace dicube

#endif  // DICUBE_INVARIANTS_HPP_
