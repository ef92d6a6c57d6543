// dicube - finite directed cubical homotopy
//
// Named spaces: point, cube0..cube3, circle, torus, klein, sphere2,
// nerve:<category>, sd<k>:<space>.

#ifndef DICUBE_SPACES_HPP_
#define DICUBE_SPACES_HPP_

#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "cat.hpp"
#include "cset.hpp"

namespace dicube {
  namespace spaces {

    inline std::vector<std::string> builtin_names() {
      return {"point", "cube0", "cube1", "cube2",  "cube3",
              "circle", "torus", "klein", "sphere2"};
    }

    inline std::optional<CubicalSet> builtin(std::string const& name,
                                             unsigned           N = 3) {
      if (name == "point") {
        return cset::point(N);
      }
      if (name.size() == 5 && name.rfind("cube", 0) == 0 && name[4] >= '0'
          && name[4] <= '3') {
        unsigned k = unsigned(name[4] - '0');
        if (k > N) {
          return std::nullopt;
        }
        return cset::representable(k, N);
      }
      if (name == "circle") {
        return cset::circle(N);
      }
      if (name == "torus") {
        return cset::torus(N);
      }
      if (name == "klein") {
        return cset::klein(N);
      }
      if (name == "sphere2") {
        return cset::sphere(2, N);
      }
      if (name.rfind("nerve:", 0) == 0) {
        if (auto S = cat::builtin_category(name.substr(6))) {
          return cat::nerve(*S, N);
        }
        return std::nullopt;
      }
      if (name.size() > 3 && name[0] == 's' && name[1] == 'd') {
        auto colon = name.find(':');
        if (colon == std::string::npos || colon < 3) {
          return std::nullopt;
        }
        unsigned k = std::stoul(name.substr(2, colon - 2));
        if (k == 0) {
          return std::nullopt;
        }
        if (auto C = builtin(name.substr(colon + 1), N)) {
          return cset::subdivide(*C, k - 1).set;
        }
      }
      return std::nullopt;
    }

  }  // namespace spaces
}  // namespace dicube

#endif  // DICUBE_SPACES_HPP_
