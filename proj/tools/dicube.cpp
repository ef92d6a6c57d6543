// dicube command-line interface.
//
// Every command prints a JSON report {command, inputs, result, timing_ms}
// unless a text or DOT format is requested.  Exit codes: 0 success,
// 1 verification failure, 2 usage or input error, 3 budget exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dicube/dicube.hpp"

using namespace dicube;
using json = nlohmann::json;

namespace {

  struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Config {
    unsigned    trunc  = 3;
    std::size_t budget = DEFAULT_BUDGET;
    std::string format = "json";
    std::string out;
    bool        timing = false;
    std::string seed   = "0";
  };

  struct Output {
    std::string text;
    int         code = 0;
  };

  bool file_exists(std::string const& path) {
    std::ifstream in(path);
    return bool(in);
  }

  CubicalSet load_space(std::string const& name, unsigned trunc) {
    if (auto C = spaces::builtin(name, trunc)) {
      return *C;
    }
    if (file_exists(name)) {
      return io::cset_from_json(io::read_file(name));
    }
    throw Usage("unknown space '" + name + "'");
  }

  FinMonoid load_monoid(std::string const& name) {
    if (auto M = cat::builtin_monoid(name)) {
      return *M;
    }
    if (file_exists(name)) {
      auto stem = name.substr(name.find_last_of('/') + 1);
      stem      = stem.substr(0, stem.find('.'));
      return io::monoid_from_json(io::read_file(name), stem);
    }
    throw Usage("unknown monoid '" + name + "'");
  }

  FinCat load_category(std::string const& name) {
    if (auto S = cat::builtin_category(name)) {
      return *S;
    }
    if (file_exists(name)) {
      auto stem = name.substr(name.find_last_of('/') + 1);
      stem      = stem.substr(0, stem.find('.'));
      return io::category_from_json(io::read_file(name), stem);
    }
    throw Usage("unknown category '" + name + "'");
  }

  std::optional<std::size_t> suffix_number(std::string const& s,
                                           std::string const& prefix) {
    if (s.size() <= prefix.size() || s.rfind(prefix, 0) != 0) {
      return std::nullopt;
    }
    auto rest = s.substr(prefix.size());
    if (rest.find_first_not_of("0123456789") != std::string::npos) {
      return std::nullopt;
    }
    return std::stoul(rest);
  }

  FiniteLattice load_lattice(std::string const& name) {
    if (name == "m3") {
      return lattice::m3();
    }
    if (name == "n5") {
      return lattice::n5();
    }
    if (auto k = suffix_number(name, "chain")) {
      return lattice::chain(*k);
    }
    if (auto n = suffix_number(name, "boolean")) {
      return lattice::boolean(*n);
    }
    if (auto k = suffix_number(name, "m")) {
      return lattice::m(*k);
    }
    if (file_exists(name)) {
      return io::lattice_from_json(io::read_file(name));
    }
    throw Usage("unknown lattice '" + name + "'");
  }

  json partition_json(Partition const& p) {
    return {{"class_count", p.count()},
            {"representatives", p.representative},
            {"class_of", p.class_of}};
  }

  json monoid_table(FinMonoid const& M) {
    return io::to_json(M);
  }

  std::string report(std::string const& command, json inputs, json result,
                     Config const& cfg, double ms) {
    json r{{"command", command},
           {"inputs", std::move(inputs)},
           {"result", std::move(result)},
           {"timing_ms", cfg.timing ? json(ms) : json(nullptr)}};
    return r.dump(2) + "\n";
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dicube: finite directed cubical homotopy"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  if (char const* env = std::getenv("DICUBE_BUDGET")) {
    cfg.budget = std::strtoull(env, nullptr, 10);
  }
  app.add_option("--trunc", cfg.trunc, "truncation dimension")
      ->check(CLI::Range(0u, 6u));
  app.add_option("--budget", cfg.budget, "enumeration budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json, text or dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--out", cfg.out, "write the report to a file");
  app.add_flag("--timing", cfg.timing, "record wall-clock time");
  app.add_option("--seed", cfg.seed, "accepted; no command uses randomness");

  std::function<Output()> action;
  std::string             command;

  // cube
  auto* cube_cmd = app.add_subcommand("cube", "symmetric cube category");
  cube_cmd->require_subcommand(1);
  unsigned    dom = 0, cod = 0;
  std::string klass, morph;
  auto* cube_enum = cube_cmd->add_subcommand("enumerate", "list normal forms");
  cube_enum->add_option("--dom", dom)->required();
  cube_enum->add_option("--cod", cod)->required();
  cube_enum->add_option("--class", klass)
      ->check(CLI::IsMember({"epi", "mono", "iso", "neither"}));
  cube_enum->callback([&] {
    command = "cube enumerate";
    action  = [&]() -> Output {
      json list = json::array();
      std::string text;
      for (auto const& phi : cube::enumerate(dom, cod)) {
        auto k = cube::to_string(cube::classify(phi));
        if (!klass.empty() && klass != k) {
          continue;
        }
        list.push_back(phi.to_string());
        text += phi.to_string() + "\n";
      }
      if (cfg.format == "text" || !app.get_option("--format")->count()) {
        return {text};
      }
      return {report(command, {{"dom", dom}, {"cod", cod}, {"class", klass}},
                     {{"count", list.size()}, {"morphisms", list}}, cfg, 0)};
    };
  });
  auto* cube_dec = cube_cmd->add_subcommand(
      "decompose", "factor into generators and into epi then mono");
  cube_dec->add_option("morphism", morph, "e.g. \"2->3: [0, p1, p2]\"")
      ->required();
  cube_dec->callback([&] {
    command = "cube decompose";
    action  = [&]() -> Output {
      CubeMorphism phi;
      try {
        phi = cube::parse(morph);
      } catch (std::invalid_argument const& e) {
        throw Usage(e.what());
      }
      json gens = json::array();
      for (auto const& g : cube::decompose(phi)) {
        char const* type = g.type == cube::Generator::face ? "face"
                           : g.type == cube::Generator::codegeneracy
                               ? "codegeneracy"
                               : "transposition";
        json j{{"type", type}, {"i", g.i}, {"n", g.n},
               {"morphism", g.morphism().to_string()}};
        if (g.type == cube::Generator::face) {
          j["alpha"] = g.alpha;
        }
        gens.push_back(j);
      }
      auto [epi, mono] = cube::epi_mono_factorize(phi);
      json result{{"class", cube::to_string(cube::classify(phi))},
                  {"generators", gens},
                  {"epi", epi.to_string()},
                  {"mono", mono.to_string()}};
      if (cfg.format == "text") {
        std::string t;
        for (auto const& g : gens) {
          t += g["morphism"].get<std::string>() + "\n";
        }
        return {t};
      }
      return {report(command, {{"morphism", morph}}, result, cfg, 0)};
    };
  });

  // lattice
  auto* lat_cmd = app.add_subcommand("lattice", "finite lattices");
  lat_cmd->require_subcommand(1);
  std::string lat_in;
  std::size_t lat_k = 2, lat_max = 8;
  auto*       lat_show = lat_cmd->add_subcommand("show", "JSON or DOT of a lattice");
  lat_show->add_option("lattice", lat_in, "name (chainK, booleanN, m3, n5, mK) or file")
      ->required();
  lat_show->callback([&] {
    command = "lattice show";
    action  = [&]() -> Output {
      auto L = load_lattice(lat_in);
      if (cfg.format == "dot") {
        return {lattice::to_dot(L)};
      }
      return {report(command, {{"lattice", lat_in}}, io::to_json(L), cfg, 0)};
    };
  });
  auto* lat_sd = lat_cmd->add_subcommand("sd", "edgewise subdivision sd_k");
  lat_sd->add_option("--k", lat_k, "subdivision factor (>= 1)")->required();
  lat_sd->add_option("lattice", lat_in)->required();
  lat_sd->callback([&] {
    command = "lattice sd";
    action  = [&]() -> Output {
      if (lat_k == 0) {
        throw Usage("--k must be at least 1");
      }
      auto S = lattice::subdivide_lattice(load_lattice(lat_in), lat_k - 1);
      if (cfg.format == "dot") {
        return {lattice::to_dot(S, "sd")};
      }
      return {report(command, {{"lattice", lat_in}, {"k", lat_k}},
                     io::to_json(S), cfg, 0)};
    };
  });
  auto* lat_prof = lat_cmd->add_subcommand("profile", "distributivity checks");
  lat_prof->add_option("lattice", lat_in)->required();
  lat_prof->callback([&] {
    command = "lattice profile";
    action  = [&]() -> Output {
      auto L = load_lattice(lat_in);
      auto p = lattice::distributivity_profile(L);
      return {report(command, {{"lattice", lat_in}},
                     {{"size", L.size()},
                      {"distributive_identity", p.distributive_identity},
                      {"cover_diamonds_boolean", p.cover_diamonds_boolean},
                      {"interval_hulls_boolean", p.interval_hulls_boolean},
                      {"modular", lattice::is_modular(L)}},
                     cfg, 0)};
    };
  });
  auto* lat_cat = lat_cmd->add_subcommand("catalog", "count lattices by size");
  lat_cat->add_option("--max", lat_max)->check(CLI::Range(1, 9));
  lat_cat->callback([&] {
    command = "lattice catalog";
    action  = [&]() -> Output {
      std::vector<std::size_t> all(lat_max + 1, 0), mod(lat_max + 1, 0),
          dis(lat_max + 1, 0);
      for (auto const& L : lattice::catalog(lat_max)) {
        ++all[L.size()];
        mod[L.size()] += lattice::is_modular(L);
        dis[L.size()] += L.is_distributive();
      }
      all.erase(all.begin());
      mod.erase(mod.begin());
      dis.erase(dis.begin());
      return {report(command, {{"max", lat_max}},
                     {{"lattices", all}, {"modular", mod}, {"distributive", dis}},
                     cfg, 0)};
    };
  });

  // cset
  auto* cs_cmd = app.add_subcommand("cset", "cubical sets");
  cs_cmd->require_subcommand(1);
  std::string shape, cs_in;
  unsigned    cs_k = 3;
  auto*       cs_make = cs_cmd->add_subcommand("make", "build a named space");
  cs_make->add_option("--shape", shape, "cube0..cube3, circle, torus, klein, sphere2, nerve:CAT, sdK:SPACE")
      ->required();
  auto summary = [](CubicalSet const& C) {
    return json{{"cells", C.counts()},
                {"nondegenerate", C.nondegenerate_counts()},
                {"nondegenerate_orbits", C.cube_counts()}};
  };
  cs_make->callback([&] {
    command = "cset make";
    action  = [&]() -> Output {
      auto C = load_space(shape, cfg.trunc);
      if (cfg.format == "dot") {
        return {io::to_dot(C)};
      }
      return {report(command, {{"shape", shape}, {"trunc", cfg.trunc}},
                     io::to_json(C), cfg, 0)};
    };
  });
  auto* cs_sd = cs_cmd->add_subcommand("sd", "edgewise subdivision sd_k");
  cs_sd->add_option("--k", cs_k)->check(CLI::Range(1u, 9u));
  cs_sd->add_option("space", cs_in)->required();
  cs_sd->callback([&] {
    command = "cset sd";
    action  = [&]() -> Output {
      auto C = load_space(cs_in, cfg.trunc);
      auto S = cset::subdivide(C, cs_k - 1);
      if (cfg.format == "dot") {
        return {io::to_dot(S.set, "sd")};
      }
      auto j       = io::to_json(S.set);
      j["summary"] = summary(S.set);
      return {report(command, {{"space", cs_in}, {"k", cs_k}}, j, cfg, 0)};
    };
  });
  auto* cs_val = cs_cmd->add_subcommand("validate", "check cubical identities");
  cs_val->add_option("space", cs_in)->required();
  cs_val->callback([&] {
    command = "cset validate";
    action  = [&]() -> Output {
      json result;
      int  code = 0;
      try {
        auto C = load_space(cs_in, cfg.trunc);
        auto e = C.validate();
        result = summary(C);
        result["valid"] = e.empty();
        if (!e.empty()) {
          result["error"] = e;
          code            = 1;
        }
      } catch (std::invalid_argument const& e) {
        result = {{"valid", false}, {"error", e.what()}};
        code   = 1;
      }
      return {report(command, {{"space", cs_in}}, result, cfg, 0), code};
    };
  });

  // cat
  auto* cat_cmd = app.add_subcommand("cat", "finite categories and monoids");
  cat_cmd->require_subcommand(1);
  std::string monoid_in, cat_in;
  auto*       cat_cls = cat_cmd->add_subcommand("classes", "conjugacy classes of a monoid");
  cat_cls->add_option("--monoid", monoid_in)->required();
  cat_cls->callback([&] {
    command = "cat classes";
    action  = [&]() -> Output {
      auto M = load_monoid(monoid_in);
      auto Q = cat::conjugacy_classes(M);
      auto r = partition_json(Q.partition);
      r["commutative"]  = M.is_commutative();
      r["cancellative"] = cat::is_cancellative(M).cancellative;
      if (Q.quotient) {
        r["quotient"] = monoid_table(*Q.quotient);
      }
      return {report(command, {{"monoid", monoid_in}}, r, cfg, 0)};
    };
  });
  auto* cat_ner = cat_cmd->add_subcommand("nerve", "cubical nerve of a category");
  cat_ner->add_option("--cat", cat_in)->required();
  cat_ner->callback([&] {
    command = "cat nerve";
    action  = [&]() -> Output {
      auto S = load_category(cat_in);
      auto C = cat::nerve(S, cfg.trunc);
      if (cfg.format == "dot") {
        return {io::to_dot(C, "nerve")};
      }
      auto j       = io::to_json(C);
      j["summary"] = summary(C);
      return {report(command, {{"cat", cat_in}, {"trunc", cfg.trunc}}, j, cfg,
                     0)};
    };
  });

  // t1
  auto* t1_cmd = app.add_subcommand("t1", "fundamental category presentations");
  t1_cmd->require_subcommand(1);
  std::string t1_in;
  bool        t1_dot = false;
  auto*       t1_pres = t1_cmd->add_subcommand("present", "generators and relations");
  t1_pres->add_option("space", t1_in)->required();
  t1_pres->add_flag("--dot", t1_dot);
  t1_pres->callback([&] {
    command = "t1 present";
    action  = [&]() -> Output {
      auto C = load_space(t1_in, cfg.trunc);
      auto P = t1::fundamental_presentation(C);
      if (t1_dot || cfg.format == "dot") {
        return {t1::to_dot(P)};
      }
      auto j     = io::to_json(P);
      json words = json::array();
      for (auto const& r : P.relations) {
        words.push_back(t1::relation_string(P, r));
      }
      j["relation_strings"] = words;
      return {report(command, {{"space", t1_in}, {"trunc", cfg.trunc}}, j, cfg,
                     0)};
    };
  });

  // inv
  auto* inv_cmd = app.add_subcommand("inv", "directed invariants");
  inv_cmd->require_subcommand(1);
  std::string space_in, b_in, s_in, method = "automatic";
  unsigned    tau_n = 1;
  Index       vertex = 0;
  auto*       inv_pi0 = inv_cmd->add_subcommand("pi0", "path components");
  inv_pi0->add_option("space", space_in)->required();
  inv_pi0->callback([&] {
    command = "inv pi0";
    action  = [&]() -> Output {
      auto C = load_space(space_in, cfg.trunc);
      auto p = inv::pi0(C);
      return {report(command, {{"space", space_in}},
                     {{"class_count", p.count},
                      {"representatives", p.representative},
                      {"class_of", p.class_of}},
                     cfg, 0)};
    };
  });
  auto method_of = [](std::string const& m) {
    return m == "exhaustive" ? inv::Method::exhaustive
           : m == "thin"     ? inv::Method::thin
           : m == "groupoid" ? inv::Method::groupoid
                             : inv::Method::automatic;
  };
  auto classes_json = [](inv::MapClasses const& R) {
    json reps = json::array();
    for (auto const& F : R.classes.representatives) {
      reps.push_back(io::to_json(F));
    }
    return json{{"class_count", R.classes.count},
                {"method", inv::to_string(R.classes.method)},
                {"presentation", io::to_json(R.presentation)},
                {"representatives", reps}};
  };
  auto* inv_h1 = inv_cmd->add_subcommand("h1", "directed 1-cohomology");
  inv_h1->add_option("--space", space_in)->required();
  inv_h1->add_option("--monoid", monoid_in)->required();
  inv_h1->add_option("--method", method)
      ->check(CLI::IsMember({"automatic", "exhaustive", "thin", "groupoid"}));
  inv_h1->callback([&] {
    command = "inv h1";
    action  = [&]() -> Output {
      auto C = load_space(space_in, cfg.trunc);
      auto M = load_monoid(monoid_in);
      auto H = inv::h1(C, M, method_of(method), cfg.budget);
      auto r = classes_json(*H->classes);
      if (H->monoid) {
        r["monoid"] = monoid_table(*H->monoid);
      }
      return {report(command,
                     {{"space", space_in}, {"monoid", monoid_in},
                      {"method", method}},
                     r, cfg, 0)};
    };
  });
  auto* inv_tau = inv_cmd->add_subcommand("tau", "homotopy monoids tau_n");
  inv_tau->add_option("--space", space_in)->required();
  inv_tau->add_option("--n", tau_n)->check(CLI::Range(1u, 2u));
  inv_tau->add_option("--vertex", vertex);
  inv_tau->callback([&] {
    command = "inv tau";
    action  = [&]() -> Output {
      auto C = load_space(space_in, cfg.trunc);
      auto L = inv::loop_classes(C, vertex, tau_n);
      json r{{"n", tau_n},
             {"loops", L.loops},
             {"class_count", L.count()},
             {"class_of", L.classes.class_of}};
      if (L.monoid) {
        r["monoid"] = monoid_table(*L.monoid);
      }
      return {report(command,
                     {{"space", space_in}, {"n", tau_n}, {"vertex", vertex}}, r,
                     cfg, 0)};
    };
  });
  auto* inv_hc = inv_cmd->add_subcommand("homclasses", "classes of maps B -> ner S");
  inv_hc->add_option("--b", b_in)->required();
  inv_hc->add_option("--s", s_in)->required();
  inv_hc->add_option("--method", method)
      ->check(CLI::IsMember({"automatic", "exhaustive", "thin", "groupoid"}));
  inv_hc->callback([&] {
    command = "inv homclasses";
    action  = [&]() -> Output {
      auto B = load_space(b_in, cfg.trunc);
      auto S = load_category(s_in);
      auto R = inv::hom_classes(B, S, method_of(method), cfg.budget);
      return {report(command, {{"b", b_in}, {"s", s_in}, {"method", method}},
                     classes_json(*R), cfg, 0)};
    };
  });

  // oracle
  auto* or_cmd = app.add_subcommand("oracle", "reference engines");
  or_cmd->require_subcommand(1);
  std::string suite = "all";
  auto*       or_check = or_cmd->add_subcommand("check", "agreement suites");
  or_check->add_option("--suite", suite)
      ->check(CLI::IsMember({"cube", "lattice", "homotopy", "all"}));
  // verify
  auto* ver_cmd = app.add_subcommand("verify", "acceptance suite");
  std::string ver_suite = "all";
  ver_cmd->add_option("--suite", ver_suite, "all or comma-separated ids");

  auto run_criteria = [&](std::vector<int> const& ids) -> Output {
    std::string text;
    json        list = json::array();
    int         code = 0;
    for (auto const& c : verify::criteria()) {
      if (std::find(ids.begin(), ids.end(), c.id) == ids.end()) {
        continue;
      }
      auto o = verify::run(c);
      std::ostringstream line;
      line << (o.passed ? "PASS" : "FAIL") << " criterion " << o.id << ": "
           << o.title << " (" << o.detail << ")";
      text += line.str() + "\n";
      json j{{"id", o.id}, {"title", o.title}, {"passed", o.passed},
             {"detail", o.detail}};
      if (cfg.timing) {
        j["seconds"] = o.seconds;
      }
      list.push_back(j);
      code |= o.passed ? 0 : 1;
    }
    if (cfg.format == "json" && app.get_option("--format")->count()) {
      return {report(command, {{"criteria", ids}}, {{"criteria", list}}, cfg,
                     0),
              code};
    }
    return {text, code};
  };
  or_check->callback([&] {
    command = "oracle check";
    action  = [&]() -> Output {
      std::vector<int> ids = suite == "cube"       ? std::vector<int>{1, 2}
                             : suite == "lattice"  ? std::vector<int>{9}
                             : suite == "homotopy" ? std::vector<int>{7}
                                                   : std::vector<int>{1, 2, 7, 9};
      return run_criteria(ids);
    };
  });
  ver_cmd->callback([&] {
    command = "verify";
    action  = [&]() -> Output {
      std::vector<int> ids;
      if (ver_suite == "all") {
        for (auto const& c : verify::criteria()) {
          ids.push_back(c.id);
        }
      } else {
        std::stringstream ss(ver_suite);
        std::string       tok;
        while (std::getline(ss, tok, ',')) {
          try {
            ids.push_back(std::stoi(tok));
          } catch (std::exception const&) {
            throw Usage("bad criterion id '" + tok + "'");
          }
        }
      }
      return run_criteria(ids);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  try {
    auto t0 = std::chrono::steady_clock::now();
    out     = action();
    if (cfg.timing && cfg.format == "json") {
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      auto j = json::parse(out.text);
      j["timing_ms"] = ms;
      out.text       = j.dump(2) + "\n";
    }
  } catch (BudgetExceeded const& e) {
    std::cerr << "dicube: " << e.what() << "\n";
    return 3;
  } catch (Usage const& e) {
    std::cerr << "dicube: " << e.what() << "\n";
    return 2;
  } catch (std::invalid_argument const& e) {
    std::cerr << "dicube: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "dicube: " << e.what() << "\n";
    return 1;
  }
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "dicube: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << out.text;
  } else {
    std::cout << out.text;
  }
  return out.code;
}
