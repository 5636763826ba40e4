#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mcmd/error.hpp"
#include "mcmd/rational.hpp"

namespace mcmd {

// Disk ids are 1-based throughout the library; index 0 is never a disk.
using DiskId = int;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

Rational squared_distance(const Point& a, const Point& b);

struct Disk {
  DiskId id = 0;
  Point centre;
  Rational radius;

  friend bool operator==(const Disk&, const Disk&) = default;
};

// An immutable, validated set of disks with their neighbour orderings
// precomputed. delta(i) lists every other disk by increasing squared centre
// distance from disk i, ties by ascending id.
class Instance {
 public:
  Instance() = default;

  // Disks must carry ids 1..n in order and positive radii.
  explicit Instance(std::vector<Disk> disks);

  std::size_t size() const { return disks_.size(); }
  bool empty() const { return disks_.empty(); }

  const std::vector<Disk>& disks() const { return disks_; }
  const Disk& disk(DiskId id) const;
  const Rational& radius(DiskId id) const { return disk(id).radius; }
  const Point& centre(DiskId id) const { return disk(id).centre; }

  std::span<const DiskId> delta(DiskId id) const;
  // Position of `other` inside delta(id), 0-based.
  std::size_t delta_rank(DiskId id, DiskId other) const;
  const Rational& sq_dist(DiskId a, DiskId b) const;

  bool contains(DiskId id) const { return id >= 1 && static_cast<std::size_t>(id) <= size(); }

  friend bool operator==(const Instance& a, const Instance& b) { return a.disks_ == b.disks_; }

 private:
  std::size_t at(DiskId a, DiskId b) const { return (a - 1) * size() + (b - 1); }

  std::vector<Disk> disks_;
  std::vector<Rational> sq_dist_;
  std::vector<DiskId> delta_;          // n rows of n-1 ids
  std::vector<std::size_t> rank_;      // rank_[at(i, j)] = position of j in delta(i)
};

// Total self-map on disk ids. It is a proper "assignment" only when
// idempotent; the verifiers report non-idempotent maps rather than
// rejecting them at construction.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<DiskId> targets) : target_(std::move(targets)) {}

  static Assignment identity(std::size_t n);

  std::size_t size() const { return target_.size(); }
  DiskId target(DiskId id) const { return target_.at(id - 1); }
  void set_target(DiskId id, DiskId to) { target_.at(id - 1) = to; }
  bool selected(DiskId id) const { return target(id) == id; }
  bool is_idempotent() const;
  const std::vector<DiskId>& targets() const { return target_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<DiskId> target_;
};

enum class DisjointnessMode {
  // Selected disks may overlap but none may contain another's centre.
  kMax,
  // Selected disks must be interior-disjoint.
  kSum,
};

const char* to_string(DisjointnessMode mode);

enum class ViolationKind { kNotIdempotent, kOrder, kReach, kDisjoint };

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<DiskId> disks;
  std::string detail;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    ok = false;
    violations.push_back(std::move(v));
  }
  std::string summary() const;
};

std::vector<DiskId> neighbor_sequence(const Instance& instance, DiskId i);

// r_i(phi): radius of selected disk i plus every disk merged into it.
Rational aggregate_radius(const Instance& instance, const Assignment& assignment, DiskId i);

// r_i(j): radius of disk i after merging the first j disks of delta(i).
Rational prefix_aggregate_radius(const Instance& instance, DiskId i, std::size_t j);

// True when `centre_sq_dist` satisfies the disjointness rule for two selected
// disks with aggregate radii ra and rb.
bool centre_disjoint(const Rational& centre_sq_dist, const Rational& ra, const Rational& rb,
                     DisjointnessMode mode);

VerificationReport verify_proper(const Instance& instance, const Assignment& assignment,
                                 DisjointnessMode mode = DisjointnessMode::kMax);

VerificationReport verify_uproper(const Instance& instance, const Assignment& assignment,
                                  DisjointnessMode mode = DisjointnessMode::kMax);

std::size_t cardinality(const Assignment& assignment);

}  // namespace mcmd
