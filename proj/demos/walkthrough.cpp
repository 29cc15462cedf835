// Walkthrough of the library: word operations, a bounded closure, its
// classification and the relation of one generator.

#include <iostream>

#include "colpart/colpart.hpp"

using namespace colpart;

int main() {
  auto const p = parse("AaBBCcA");
  auto const q = parse("AabCBcd");
  std::cout << "p = " << render(p) << ", q = " << render(q) << "\n";
  std::cout << "p (x) q     = " << render(tensor(p, q)) << "\n";
  std::cout << "contract 2  = " << render(contract(p, 2)) << "\n";
  std::cout << "reflect     = " << render(reflect(p)) << "\n";
  std::cout << "rotate      = " << render(rotate(p)) << "\n";
  std::cout << "c(p)        = " << color_sum(p).c << "\n\n";

  std::vector<Partition> const gens{named::s(1), named::fourblock_wbwb(),
                                    named::singletons_wb(), named::glob_pair()};
  auto const cat = generate_closure(gens, 4, 8);
  std::cout << "closure of a, aAaA, aB, aaBB up to length 4: "
            << cat.element_count(4) << " elements\n";
  std::cout << classify(cat).to_text() << "\n";

  std::cout << to_rel(emit(named::glob_pair(), 3));
  return 0;
}
