#include "mcmd/reductions.hpp"

namespace mcmd::reductions {

Instance reduce_partition(const PartitionInput& input) {
  if (input.values.empty()) throw Error(ErrorCode::kMalformed, "partition needs at least one value");
  if (input.e <= 0 || input.e >= 1) throw Error(ErrorCode::kOutOfRange, "e must lie in (0, 1)");
  long total = 0;
  for (long a : input.values) {
    if (a <= 0) throw Error(ErrorCode::kMalformed, "partition values must be positive");
    total += a;
  }
  const Rational s(total);
  const Rational cap = Rational(5, 2) * s + input.e;
  std::vector<Disk> disks{
      {1, {0, 0}, 2 * s},
      {2, {3 * s, 0}, 2 * s},
      {3, {0, cap}, s},
      {4, {3 * s, cap}, s},
  };
  const Point mid{Rational(3, 2) * s, 0};
  for (long a : input.values)
    disks.push_back({static_cast<DiskId>(disks.size() + 1), mid, Rational(a)});
  return Instance(std::move(disks));
}

}  // namespace mcmd::reductions
