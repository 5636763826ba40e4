#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mcmd/core.hpp"

namespace mcmd::solvers {

enum class SolveStatus { kFeasible, kInfeasible };

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::size_t best_cardinality = 0;  // meaningful iff feasible
  Assignment assignment;             // meaningful iff feasible

  bool feasible() const { return status == SolveStatus::kFeasible; }
};

inline constexpr std::size_t kDefaultMaxN = 9;

// Exhaustive oracle over every idempotent map. Returns the lexicographically
// smallest target vector among those of maximum cardinality.
SolveResult solve_exact_mcmd(const Instance& instance,
                             DisjointnessMode mode = DisjointnessMode::kMax,
                             std::size_t max_n = kDefaultMaxN);

// Same enumeration, accepting uproper assignments.
SolveResult solve_exact_rmcmd(const Instance& instance,
                              DisjointnessMode mode = DisjointnessMode::kMax,
                              std::size_t max_n = kDefaultMaxN);

// Backtracking enumeration of every proper assignment, built from (selected
// disk, merged prefix length) choices. Exhaustive and exact, but prunes dead
// branches, so it reaches gadget-sized instances the idempotent-map oracle
// cannot. The visitor returns false to stop early. Returns the number of
// assignments visited.
std::size_t enumerate_proper(const Instance& instance, DisjointnessMode mode,
                             const std::function<bool(const Assignment&)>& visit);

// ---------------------------------------------------------------------------
// Collinear centres

// Disks ordered along their common line. Positions are 1-based: order[p - 1]
// is the id of the p-th disk from the left; ties in position keep id order.
struct CollinearOrder {
  std::vector<DiskId> order;
  std::vector<std::size_t> position;  // position[id], index 0 unused
  std::vector<Rational> projection;   // projection[id] along the line direction
};

std::optional<CollinearOrder> collinearity_check(const Instance& instance);

// Positions (not ids) of the merge window of a disk with its first j
// neighbours: a..b spans the merged disks and the owner, A..B spans every
// centre strictly inside the owner at its final aggregate radius.
struct MergeWindow {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t A = 0;
  std::size_t B = 0;
  Rational radius;   // aggregate radius after the merge
  bool contiguous = true;  // merged disks plus owner fill a..b exactly

  friend bool operator==(const MergeWindow&, const MergeWindow&) = default;
};

// `i` is a position in `order`. Returns nothing when some disk of the prefix
// is not strictly inside the owner at the radius accumulated before it.
std::optional<MergeWindow> merge_prefix_feasible(const Instance& instance,
                                                 const CollinearOrder& order, std::size_t i,
                                                 std::size_t j);

// M(x, y, z): best cardinality of a proper assignment of the first x disks
// whose right-most selected disk is y and whose right-most covered centre is
// z. All indices are positions.
class DPTable {
 public:
  struct Entry {
    std::optional<int> value;  // nullopt is minus infinity
    std::size_t merge_count = 0;
    std::optional<std::pair<std::size_t, std::size_t>> predecessor;  // (t, k)
  };

  explicit DPTable(std::size_t n = 0) : n_(n), entries_(n * n * n) {}

  std::size_t n() const { return n_; }
  const Entry& at(std::size_t x, std::size_t y, std::size_t z) const { return entries_[index(x, y, z)]; }
  Entry& at(std::size_t x, std::size_t y, std::size_t z) { return entries_[index(x, y, z)]; }
  std::size_t finite_entries() const;

  friend bool operator==(const DPTable& a, const DPTable& b);

 private:
  std::size_t index(std::size_t x, std::size_t y, std::size_t z) const;

  std::size_t n_;
  std::vector<Entry> entries_;
};

struct DPStats {
  std::uint64_t windows = 0;      // (i, j) pairs examined
  std::uint64_t transitions = 0;  // (t, k) candidates examined
};

struct CollinearSolution {
  SolveResult result;
  DPTable table;
  DPStats stats;
};

// Throws Error(kNotCollinear) when the centres do not share a line.
CollinearSolution solve_collinear(const Instance& instance,
                                  DisjointnessMode mode = DisjointnessMode::kMax);

}  // namespace mcmd::solvers
