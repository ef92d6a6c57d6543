// Runs every acceptance criterion and prints one line per criterion.

#include <cstdio>

#include "dicube/verify.hpp"

int main() {
  int failed = 0;
  for (auto const& c : dicube::verify::criteria()) {
    auto o = dicube::verify::run(c);
    std::printf("%s criterion %d: %s (%s) [%.2fs]\n", o.passed ? "PASS" : "FAIL",
                o.id, o.title.c_str(), o.detail.c_str(), o.seconds);
    failed += !o.passed;
  }
  std::printf("%d/%zu criteria passed\n",
              int(dicube::verify::criteria().size()) - failed,
              dicube::verify::criteria().size());
  return failed == 0 ? 0 : 1;
}
