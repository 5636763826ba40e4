#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "mcmd/core.hpp"

namespace fixtures {

using mcmd::Instance;

// (x, y, r) triples as rational strings; ids follow list order.
inline Instance make_instance(const std::vector<std::tuple<std::string, std::string, std::string>>& rows) {
  std::vector<mcmd::Disk> disks;
  for (const auto& [x, y, r] : rows)
    disks.push_back({static_cast<mcmd::DiskId>(disks.size() + 1),
                     {mcmd::parse_rational(x), mcmd::parse_rational(y)},
                     mcmd::parse_rational(r)});
  return Instance(std::move(disks));
}

// Best proper cardinality four: only d3 merges (into d2). Merging
// everything into d1 is also proper.
inline Instance best_four() {
  return make_instance({{"3/2", "-7/2", "4"},
                        {"-7/2", "-2", "3"},
                        {"-2", "-3", "2"},
                        {"7/2", "0", "1"},
                        {"3/2", "1/2", "3/2"}});
}

inline mcmd::Assignment best_four_phi() { return mcmd::Assignment({1, 2, 2, 4, 5}); }

// Two large overlapping disks with small ones between and beside them. No
// proper assignment exists; the unordered relaxation admits one.
inline Instance no_proper() {
  return make_instance({{"0", "0", "7/2"},
                        {"4", "0", "7/2"},
                        {"2", "0", "1/4"},
                        {"-3", "0", "1/4"},
                        {"7", "0", "1/4"}});
}

inline mcmd::Assignment no_proper_relaxed_phi() { return mcmd::Assignment({1, 2, 1, 1, 2}); }

}  // namespace fixtures
