// Small walk through the library: approximations of a fuzzy set, covering
// reduction, and compression of a system before computing its reducts.

#include <iostream>

#include "fcov/fcov.hpp"

int main() {
  using namespace fcov;

  Universe u({"a", "b", "c", "d", "e"});
  auto price = make_covering(u, {{"cheap", make_fuzzy_set(u, {"1", "1", "0.5", "0", "0"})},
                                 {"fair", make_fuzzy_set(u, {"0.5", "0.5", "1", "1", "0.5"})},
                                 {"dear", make_fuzzy_set(u, {"0", "0", "0.5", "1", "1"})}});
  auto quality = make_covering(u, {{"poor", make_fuzzy_set(u, {"1", "1", "0", "0", "0.5"})},
                                   {"good", make_fuzzy_set(u, {"0", "0", "1", "1", "0.5"})},
                                   {"any", make_fuzzy_set(u, {"1", "1", "1", "1", "0.5"})}});

  FuzzySet wanted = make_fuzzy_set(u, {"1", "1", "0.8", "0.4", "0"});
  ApproxPair p = approximate(price, wanted);
  std::cout << "X       " << to_string(wanted) << "\n"
            << "lower   " << to_string(p.lower) << "\n"
            << "upper   " << to_string(p.upper) << "\n"
            << "rough   " << roughness(price, wanted) << "\n";

  FuzzyCovering red = reduce_covering(quality);
  std::cout << "quality keeps " << red.size() << " of " << quality.size() << " members after reduction\n";

  FuzzyCoveringSystem s(u, {{"price", price}, {"quality", quality}});
  CompressionResult r = build_homomorphism(s);
  std::cout << "compressed " << u.size() << " objects to " << r.image.universe().size() << ": " << to_string(r.blocks)
            << "\n";

  ReductReport rep = reduct_report(r.image);
  std::cout << "reducts:";
  for (const auto& red_names : rep.reducts) {
    std::cout << " {";
    for (std::size_t i = 0; i < red_names.size(); ++i) std::cout << (i ? "," : "") << red_names[i];
    std::cout << "}";
  }
  std::cout << "\n";
}
