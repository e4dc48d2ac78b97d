// Prints the first exceptional Laguerre polynomials of a pair, their weight,
// and whether the weight is integrable.
#include <iostream>

#include "exlag/exlag.hpp"

int main(int argc, char** argv) {
  using namespace exlag;
  const PairF F = argc > 1 ? pair_from_string(argv[1]) : PairF({1, 2}, {3});
  const BigRational alpha = argc > 2 ? BigRational::parse(argv[2]) : BigRational(1, 3);

  std::cout << "F = " << F.to_string() << ", alpha = " << alpha << ", u_F = " << pair_uf(F) << "\n";
  const auto w = weight(F, alpha);
  std::cout << "Omega = " << w.omega << "\n";
  std::cout << "weight exponent = " << w.exponent << "\n";
  for (long n : sigma_prefix(F, 4)) std::cout << "n = " << n << ": " << exceptional_poly(n, F, alpha) << "\n";

  const long roots = sturm_nonneg_roots(w.omega);
  const bool adm = is_admissible_segments(AdmissibilityInstance(alpha + BigRational(1), F));
  std::cout << "roots of Omega in [0, inf): " << roots << "; (alpha + 1, F) admissible: " << (adm ? "yes" : "no") << "\n";
  if (roots == 0) {
    ExceptionalFamily fam(F, alpha);
    const long n = fam.sigma().prefix(1).front();
    auto g = real_axis_gram(fam, n, n, 1e-11);
    std::cout << "norm of the first polynomial: " << g.numeric.real() << " (closed form " << g.closed_form.real() << ")\n";
  }
}
