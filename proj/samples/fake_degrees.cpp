// Fake degrees and elliptic fake degrees of a small Weyl group.
//   sample_fake_degrees [type]    default B3

#include <iostream>

#include "ellq/elliptic.hpp"

using namespace ellq;

int main(int argc, char** argv)
{
  std::string type = argc > 1 ? argv[1] : "B3";
  auto w = weylGroup(type);
  std::cout << w->name() << ", |W| = " << w->order() << ", " << w->ellipticClasses().size() << " elliptic classes\n\n";
  for (int i = 0; i < w->numIrreps(); ++i) {
    ClassFunction chi = w->irreducible(i);
    std::cout << w->labels()[i] << "\n  f = " << fakeDegree(*w, chi) << "\n  F = " << ellipticFakeDegree(*w, chi)
              << "\n";
  }
  std::cout << "\nsign from the exponents: " << sgnFakeDegree(*w->exponents()) << "\n";
  auto r = independenceCheck(*w);
  std::cout << "1/det(1-qw) on elliptic classes: rank " << r.rank << " of " << r.ellipticCount << "\n";
}
