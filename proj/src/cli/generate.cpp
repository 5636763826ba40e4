#include <random>
#include <set>

#include "mcmd/cli.hpp"

namespace mcmd::cli {

Instance generate_random(std::size_t n, Profile profile, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };

  std::vector<Disk> disks;
  disks.reserve(n);
  std::set<std::uint64_t> used;
  for (std::size_t k = 0; k < n; ++k) {
    Disk d;
    d.id = static_cast<DiskId>(k + 1);
    if (profile == Profile::kCollinear) {
      std::uint64_t x;
      do {
        x = pick(0, 6 * n + 4);
      } while (!used.insert(x).second);
      d.centre = {make_rational(static_cast<long>(x), 4), Rational(0)};
    } else {
      d.centre = {make_rational(static_cast<long>(pick(0, 32)), 4),
                  make_rational(static_cast<long>(pick(0, 32)), 4)};
    }
    d.radius = make_rational(static_cast<long>(pick(1, 8)), 4);
    disks.push_back(std::move(d));
  }
  return Instance(std::move(disks));
}

}  // namespace mcmd::cli
