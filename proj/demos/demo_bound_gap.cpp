// Tabulates both pgfs and their gap across [0,1], then prints the exact
// rational values at a few hand-checkable points.

#include <gwnb/gwnb.hpp>

#include <cstdio>

int main() {
  using gwnb::BigRat;

  const auto p = gwnb::make_params(2, 0.5);
  std::printf("r=%d zeta=%.2f: phi_FL(x) <= phi_NB(x) on [0,1]\n\n", p.r, p.zeta);
  std::printf("%8s %12s %12s %12s\n", "x", "phi_NB", "phi_FL", "gap");
  for (int i = 0; i <= 20; ++i) {
    const double x = i / 20.0;
    const double nb = gwnb::phi_nb(p, x);
    const double fl = gwnb::phi_fl(p, x);
    std::printf("%8.3f %12.8f %12.8f %12.3e\n", x, nb, fl, nb - fl);
  }

  const auto q = gwnb::make_params(2, BigRat(1, 2));
  std::printf("\nexact values at r=2, zeta=1/2:\n");
  std::printf("  phi_NB(0) = %s\n", gwnb::phi_nb(q, BigRat(0)).str().c_str());
  std::printf("  phi_FL(0) = %s\n", gwnb::phi_fl(q, BigRat(0)).str().c_str());
  std::printf("  gap(0)    = %s\n", gwnb::exact_gap(q, BigRat(0)).str().c_str());
  std::printf("  gap(1/4)  = %s   (equality: x = zeta^r)\n", gwnb::exact_gap(q, BigRat(1, 4)).str().c_str());
  std::printf("  gap(1/3)  = %s\n", gwnb::exact_gap(q, BigRat(1, 3)).str().c_str());
  return 0;
}
