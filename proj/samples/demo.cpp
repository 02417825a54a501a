// Tour of the library: split quaternions, a spinbasis, self-dual forms,
// the canonical connection of su(2) x su(2), and its Einstein metrics.

#include <iostream>
#include <random>

#include "aqlab/fourdim.hpp"
#include "aqlab/gxg.hpp"
#include "aqlab/piaq.hpp"
#include "aqlab/spinor.hpp"

using namespace aqlab;

int main() {
  const Alpha split = Alpha::plus;

  // zero divisors appear once i^2 = +1
  const QuaternionA q{1, 1, 1, 1, split};
  std::cout << "|1+i+j+k|^2 over split quaternions: " << qnormsq(q) << "\n";
  std::cout << "i*j = " << qmul(QuaternionA::i(split), QuaternionA::j(split)) << "\n";

  std::mt19937_64 rng(7);
  const IQBasis B = random_iq_basis(split, rng);
  const SpinbasisResult sb = spinbasis(B);
  const SpinMatrix Pi = inverse(sb.change);
  std::cout << "spinbasis orientation " << sb.sign << ", residual "
            << distance(Pi * spin_matrix(B.j2) * sb.change, pauli(split)[1]) << "\n";

  const Metric4 g{split};
  const AQBasis4 aq = canonical_aq_basis(g);
  std::cout << "J3^2 + id = 0: " << ((aq.J3 * aq.J3 + Endo4::Identity()).norm() < 1e-14) << "\n";

  const DoubledModel D = DoubledModel::killing(catalog::su2());
  const PiAQModel M = PiAQModel::from_doubled(D);
  std::cout << "doubled su2: semiholonomic " << is_semiholonomic(M) << ", three-web " << is_three_web(M)
            << ", integrable " << is_integrable(M) << "\n";

  for (const EinsteinPoint& p : classify_einstein(D))
    std::cout << "Einstein at (" << p.lambda << ", " << p.mu << "), r = " << p.eps << " id\n";

  const MetricFamily nk(D, 0.0, -0.5);
  const HermitianClasses h = nk.hermitian_class_checks();
  std::cout << "(0, -1/2): nearly Kaehler " << h.nearly_kahler << ", quasi Kaehler " << h.quasi_kahler << "\n";
  return 0;
}
