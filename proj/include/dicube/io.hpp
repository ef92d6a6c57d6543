// dicube - finite directed cubical homotopy
//
// JSON and DOT import/export.
//
// lattice   {"size": n, "leq": [[bool, ...], ...]}
// cset      {"trunc": N, "cells": [c0, ..., cN],
//            "faces":   {"n": [[d-1, d+1, d-2, d+2, ...] per cell]},
//            "degens":  {"n": [[s1, ..., s_{n+1}] per cell]},
//            "transps": {"n": [[t1, ..., t_{n-1}] per cell]}}
// monoid    {"size": n, "unit": u, "table": [[...], ...]}
// category  {"objects": k, "src": [...], "tgt": [...], "identity": [...],
//            "compose": [[m or null, ...], ...]}

#ifndef DICUBE_IO_HPP_
#define DICUBE_IO_HPP_

#include <fstream>    // for ifstream
#include <sstream>    // for ostringstream
#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <vector>     // for vector

#include "json.hpp"

#include "cat.hpp"
#include "cset.hpp"
#include "lattice.hpp"

namespace dicube {
  namespace io {

    using json = nlohmann::json;

    inline json read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw std::invalid_argument("cannot open " + path);
      }
      try {
        return json::parse(in);
      } catch (json::exception const& e) {
        throw std::invalid_argument(path + ": " + e.what());
      }
    }

    // lattices

    inline json to_json(FiniteLattice const& L) {
      json leq = json::array();
      for (Element x = 0; x < L.size(); ++x) {
        json row = json::array();
        for (Element y = 0; y < L.size(); ++y) {
          row.push_back(bool(L.leq(x, y)));
        }
        leq.push_back(row);
      }
      return {{"size", L.size()}, {"leq", leq}};
    }

    inline FiniteLattice lattice_from_json(json const& j) {
      std::size_t       n = j.at("size").get<std::size_t>();
      auto const&       leq = j.at("leq");
      std::vector<bool> rel(n * n);
      if (leq.size() != n) {
        throw std::invalid_argument("lattice json: leq has wrong size");
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (leq[x].size() != n) {
          throw std::invalid_argument("lattice json: leq row has wrong size");
        }
        for (std::size_t y = 0; y < n; ++y) {
          rel[x * n + y] = leq[x][y].get<bool>();
        }
      }
      return FiniteLattice(Poset(n, std::move(rel)));
    }

    // cubical sets

    inline json to_json(CubicalSet const& C) {
      unsigned N = C.trunc();
      json     faces = json::object(), degens = json::object(),
           transps = json::object();
      for (unsigned n = 0; n <= N; ++n) {
        json f = json::array(), d = json::array(), t = json::array();
        for (Index c = 0; c < C.count(n); ++c) {
          json fc = json::array(), dc = json::array(), tc = json::array();
          for (unsigned i = 1; i <= n; ++i) {
            fc.push_back(C.face(n, 0, i, c));
            fc.push_back(C.face(n, 1, i, c));
          }
          for (unsigned i = 1; n < N && i <= n + 1; ++i) {
            dc.push_back(C.degen(n, i, c));
          }
          for (unsigned i = 1; i + 1 <= n; ++i) {
            tc.push_back(C.transp(n, i, c));
          }
          f.push_back(fc);
          d.push_back(dc);
          t.push_back(tc);
        }
        if (n >= 1) {
          faces[std::to_string(n)] = f;
        }
        if (n < N) {
          degens[std::to_string(n)] = d;
        }
        if (n >= 2) {
          transps[std::to_string(n)] = t;
        }
      }
      return {{"trunc", N},
              {"cells", C.counts()},
              {"faces", faces},
              {"degens", degens},
              {"transps", transps}};
    }

    //! Reads and validates; throws std::invalid_argument with the first
    //! violated identity.
    inline CubicalSet cset_from_json(json const& j) {
      unsigned   N      = j.at("trunc").get<unsigned>();
      auto       counts = j.at("cells").get<std::vector<std::size_t>>();
      CubicalSet C(N, counts);
      auto       table = [&](char const* key, unsigned n, std::size_t width)
          -> json const& {
        auto const& t = j.at(key).at(std::to_string(n));
        if (t.size() != C.count(n)) {
          throw std::invalid_argument(std::string("cset json: ") + key
                                      + " in dimension " + std::to_string(n)
                                      + " has wrong length");
        }
        for (auto const& row : t) {
          if (row.size() != width) {
            throw std::invalid_argument(std::string("cset json: ") + key
                                        + " row has wrong width");
          }
        }
        return t;
      };
      auto check = [&](Index v, unsigned n) {
        if (v >= C.count(n)) {
          throw std::invalid_argument("cset json: cell index out of range");
        }
        return v;
      };
      for (unsigned n = 0; n <= N; ++n) {
        if (n >= 1) {
          auto const& t = table("faces", n, 2 * n);
          for (Index c = 0; c < C.count(n); ++c) {
            for (unsigned i = 1; i <= n; ++i) {
              for (int a = 0; a < 2; ++a) {
                C.set_face(n, a, i, c,
                           check(t[c][2 * (i - 1) + a].get<Index>(), n - 1));
              }
            }
          }
        }
        if (n < N) {
          auto const& t = table("degens", n, n + 1);
          for (Index c = 0; c < C.count(n); ++c) {
            for (unsigned i = 1; i <= n + 1; ++i) {
              C.set_degen(n, i, c, check(t[c][i - 1].get<Index>(), n + 1));
            }
          }
        }
        if (n >= 2) {
          auto const& t = table("transps", n, n - 1);
          for (Index c = 0; c < C.count(n); ++c) {
            for (unsigned i = 1; i + 1 <= n; ++i) {
              C.set_transp(n, i, c, check(t[c][i - 1].get<Index>(), n));
            }
          }
        }
      }
      C.finalize();
      auto err = C.validate();
      if (!err.empty()) {
        throw std::invalid_argument("cset json: " + err);
      }
      return C;
    }

    //! The 1-skeleton with edges oriented from d- to d+; degenerate edges
    //! are omitted.
    inline std::string to_dot(CubicalSet const& C, std::string const& name = "C") {
      std::ostringstream os;
      os << "digraph " << name << " {\n";
      for (Index v = 0; v < C.count(0); ++v) {
        os << "  v" << v << ";\n";
      }
      if (C.trunc() >= 1) {
        for (Index e : C.nondegenerate(1)) {
          os << "  v" << C.face(1, 0, 1, e) << " -> v" << C.face(1, 1, 1, e)
             << " [label=\"e" << e << "\"];\n";
        }
      }
      os << "}\n";
      return os.str();
    }

    // monoids and categories

    inline json to_json(FinMonoid const& M) {
      json t = json::array();
      for (Index x = 0; x < M.size(); ++x) {
        json row = json::array();
        for (Index y = 0; y < M.size(); ++y) {
          row.push_back(M.mul(x, y));
        }
        t.push_back(row);
      }
      return {{"size", M.size()}, {"unit", M.unit()}, {"table", t}};
    }

    inline FinMonoid monoid_from_json(json const& j, std::string name = "") {
      std::size_t        n = j.at("size").get<std::size_t>();
      std::vector<Index> t;
      auto const&        rows = j.at("table");
      if (rows.size() != n) {
        throw std::invalid_argument("monoid json: table has wrong size");
      }
      for (auto const& row : rows) {
        if (row.size() != n) {
          throw std::invalid_argument("monoid json: row has wrong size");
        }
        for (auto const& v : row) {
          t.push_back(v.get<Index>());
        }
      }
      if (j.contains("name")) {
        name = j["name"].get<std::string>();
      }
      return FinMonoid(n, j.at("unit").get<Index>(), std::move(t),
                       std::move(name));
    }

    inline json to_json(FinCat const& S) {
      std::vector<Index> src, tgt, id;
      json               comp = json::array();
      for (Index f = 0; f < S.morphisms(); ++f) {
        src.push_back(S.src(f));
        tgt.push_back(S.tgt(f));
        json row = json::array();
        for (Index g = 0; g < S.morphisms(); ++g) {
          if (S.tgt(f) == S.src(g)) {
            row.push_back(S.compose(f, g));
          } else {
            row.push_back(nullptr);
          }
        }
        comp.push_back(row);
      }
      for (Index x = 0; x < S.objects(); ++x) {
        id.push_back(S.identity(x));
      }
      return {{"objects", S.objects()},
              {"src", src},
              {"tgt", tgt},
              {"identity", id},
              {"compose", comp}};
    }

    //! Accepts the category format or, when "table" is present, a monoid.
    inline FinCat category_from_json(json const& j, std::string name = "") {
      if (j.contains("table")) {
        return cat::from_monoid(monoid_from_json(j, name));
      }
      auto               src = j.at("src").get<std::vector<Index>>();
      auto               tgt = j.at("tgt").get<std::vector<Index>>();
      std::size_t        M   = src.size();
      std::vector<Index> comp;
      auto const&        rows = j.at("compose");
      if (rows.size() != M) {
        throw std::invalid_argument("category json: compose has wrong size");
      }
      for (auto const& row : rows) {
        if (row.size() != M) {
          throw std::invalid_argument("category json: row has wrong size");
        }
        for (auto const& v : row) {
          comp.push_back(v.is_null() ? UNSET : v.get<Index>());
        }
      }
      if (j.contains("name")) {
        name = j["name"].get<std::string>();
      }
      return FinCat(j.at("objects").get<std::size_t>(), std::move(src),
                    std::move(tgt), j.at("identity").get<std::vector<Index>>(),
                    std::move(comp), std::move(name));
    }

    // presentations

    inline json to_json(cat::Presentation const& P) {
      json gens = json::array(), rels = json::array();
      for (auto const& g : P.generators) {
        gens.push_back({{"name", g.name}, {"src", g.src}, {"tgt", g.tgt}});
      }
      for (auto const& r : P.relations) {
        rels.push_back(
            {{"lhs", r.lhs}, {"rhs", r.rhs}, {"src", r.src}, {"tgt", r.tgt}});
      }
      return {{"objects", P.objects}, {"generators", gens},
              {"relations", rels}};
    }

    inline json to_json(cat::Functor const& F) {
      return {{"objects", F.obj}, {"generators", F.gen}};
    }

  }  // namespace io
}  // namespace dicube

#endif  // DICUBE_IO_HPP_
