#include "mcmd/reductions.hpp"

namespace mcmd::reductions {

EqualizedInstance equalize_radii(const Instance& instance, const Rational& r) {
  if (r <= 0) throw Error(ErrorCode::kNotMultiple, "target radius must be positive");
  EqualizedInstance out;
  std::vector<Disk> disks;
  for (const auto& d : instance.disks()) {
    Rational k = d.radius / r;
    if (k.get_den() != 1)
      throw Error(ErrorCode::kNotMultiple, "radius of disk " + std::to_string(d.id) +
                                               " is not a multiple of " + format_rational(r));
    for (long copy = k.get_num().get_si(); copy > 0; --copy) {
      disks.push_back({static_cast<DiskId>(disks.size() + 1), d.centre, r});
      out.origin.push_back(d.id);
    }
  }
  out.instance = Instance(std::move(disks));
  return out;
}

}  // namespace mcmd::reductions
