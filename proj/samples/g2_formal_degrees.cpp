// Formal degrees of the unipotent discrete series of G2 from elliptic fake degrees and
// the Fourier matrix of S3, next to the product formula and the affine side.

#include <iostream>

#include "ellq/affine.hpp"
#include "ellq/unipotent.hpp"

using namespace ellq;

int main()
{
  FormalTable t = formalTable("g2-formal");
  std::cout << "finite side, Gamma = " << t.gamma << "\n";
  for (const auto& r : t.rows) {
    std::cout << "  " << r.entry << "\n    Fourier  " << r.fourier;
    if (r.product) std::cout << "\n    product  " << *r.product;
    std::cout << "\n    table    " << r.printed << "   [" << r.status << "]\n";
  }

  G2AffineReport a = g2AffineReport();
  std::cout << "\naffine side\n";
  for (std::size_t i = 0; i < a.classes.size(); ++i)
    std::cout << "  " << a.classes[i].name << "  mu = " << a.classes[i].mu << "  nu = " << a.nu[i] << "\n";
  for (std::size_t i = 0; i < a.formal.size(); ++i)
    std::cout << "  v" << i + 1 << " " << a.vLabels[i] << ": " << a.formal[i] << "\n";
}
