#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mcmd/core.hpp"

namespace mcmd::cli {

enum class Profile { kCollinear, kPlanar };

// Deterministic random instance. Collinear: distinct centres on y = 0 at
// multiples of 1/4. Planar: centres in [0, 8] x [0, 8] on the same lattice.
// Radii are multiples of 1/4 in [1/4, 2] for both.
Instance generate_random(std::size_t n, Profile profile, std::uint64_t seed);

// Runs the command-line front end. Returns the process exit status:
// 0 success, 1 usage error, 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcmd::cli
