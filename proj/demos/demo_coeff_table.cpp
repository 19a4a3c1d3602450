// Prints the coefficient triangle of the reduced gap polynomial for one r and
// confirms the three independent routes to it agree entry by entry.

#include <gwnb/gwnb.hpp>

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
  int r = 6;
  if (argc > 1) r = std::atoi(argv[1]);
  if (r < 2) {
    std::fprintf(stderr, "usage: %s [r >= 2]\n", argv[0]);
    return 2;
  }

  const auto closed = gwnb::build_closed_table(r);
  const auto summed = gwnb::oracle_expand_summation(r);
  const auto gap = gwnb::oracle_expand_gap(r);

  std::printf("cgt(r=%d, k, n), rows k = 1..%d, columns n = 0..2r-3-k\n\n", r, r - 1);
  for (int k = 1; k <= r - 1; ++k) {
    std::printf("k=%2d:", k);
    for (int n = 0; n <= 2 * r - 3 - k; ++n) std::printf(" %6s", closed.at(k, n).str().c_str());
    std::printf("\n");
  }

  bool ok = closed.entries == summed.entries && closed.entries == gap.entries;
  std::printf("\nclosed form == summation == polynomial expansion: %s\n", ok ? "yes" : "NO");
  std::printf("edges: cgt(r,k,0) = k and cgt(r,k,2r-3-k) = binom(r-2,k-1)\n");
  return ok ? 0 : 1;
}
