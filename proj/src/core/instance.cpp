#include <algorithm>
#include <numeric>
#include <string>

#include "mcmd/core.hpp"

namespace mcmd {

Rational squared_distance(const Point& a, const Point& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Instance::Instance(std::vector<Disk> disks) : disks_(std::move(disks)) {
  const std::size_t n = disks_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Disk& d = disks_[k];
    if (d.id != static_cast<DiskId>(k + 1)) {
      throw Error(ErrorCode::kGappedId, "disk at position " + std::to_string(k + 1) +
                                            " has id " + std::to_string(d.id));
    }
    if (d.radius <= 0) {
      throw Error(ErrorCode::kNonPositiveRadius,
                  "disk " + std::to_string(d.id) + " has non-positive radius");
    }
  }

  sq_dist_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Rational d = squared_distance(disks_[a].centre, disks_[b].centre);
      sq_dist_[a * n + b] = d;
      sq_dist_[b * n + a] = d;
    }
  }

  delta_.reserve(n * (n > 0 ? n - 1 : 0));
  rank_.assign(n * n, 0);
  std::vector<DiskId> row;
  for (std::size_t a = 0; a < n; ++a) {
    row.clear();
    for (std::size_t b = 0; b < n; ++b) {
      if (b != a) row.push_back(static_cast<DiskId>(b + 1));
    }
    std::sort(row.begin(), row.end(), [&](DiskId u, DiskId v) {
      const Rational& du = sq_dist_[a * n + (u - 1)];
      const Rational& dv = sq_dist_[a * n + (v - 1)];
      if (du != dv) return du < dv;
      return u < v;
    });
    for (std::size_t r = 0; r < row.size(); ++r) rank_[a * n + (row[r] - 1)] = r;
    delta_.insert(delta_.end(), row.begin(), row.end());
  }
}

const Disk& Instance::disk(DiskId id) const {
  if (!contains(id)) throw Error(ErrorCode::kOutOfRange, "disk id out of range: " + std::to_string(id));
  return disks_[id - 1];
}

std::span<const DiskId> Instance::delta(DiskId id) const {
  if (!contains(id)) throw Error(ErrorCode::kOutOfRange, "disk id out of range: " + std::to_string(id));
  const std::size_t w = size() - 1;
  return std::span<const DiskId>(delta_).subspan((id - 1) * w, w);
}

std::size_t Instance::delta_rank(DiskId id, DiskId other) const { return rank_[at(id, other)]; }

const Rational& Instance::sq_dist(DiskId a, DiskId b) const { return sq_dist_[at(a, b)]; }

Assignment Assignment::identity(std::size_t n) {
  std::vector<DiskId> t(n);
  std::iota(t.begin(), t.end(), 1);
  return Assignment(std::move(t));
}

bool Assignment::is_idempotent() const {
  const auto n = static_cast<DiskId>(size());
  for (DiskId t : target_) {
    if (t < 1 || t > n || target(t) != t) return false;
  }
  return true;
}

std::size_t cardinality(const Assignment& assignment) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    if (assignment.selected(static_cast<DiskId>(k + 1))) ++count;
  }
  return count;
}

std::vector<DiskId> neighbor_sequence(const Instance& instance, DiskId i) {
  auto d = instance.delta(i);
  return {d.begin(), d.end()};
}

Rational aggregate_radius(const Instance& instance, const Assignment& assignment, DiskId i) {
  if (!instance.contains(i) || assignment.size() != instance.size()) {
    throw Error(ErrorCode::kOutOfRange, "disk id out of range: " + std::to_string(i));
  }
  if (!assignment.selected(i)) {
    throw Error(ErrorCode::kNotSelected, "disk " + std::to_string(i) + " is not selected");
  }
  Rational total = 0;
  for (const Disk& d : instance.disks()) {
    if (assignment.target(d.id) == i) total += d.radius;
  }
  return total;
}

Rational prefix_aggregate_radius(const Instance& instance, DiskId i, std::size_t j) {
  auto seq = instance.delta(i);
  if (j > seq.size()) {
    throw Error(ErrorCode::kOutOfRange, "prefix length " + std::to_string(j) + " exceeds " +
                                            std::to_string(seq.size()));
  }
  Rational total = instance.radius(i);
  for (std::size_t k = 0; k < j; ++k) total += instance.radius(seq[k]);
  return total;
}

}  // namespace mcmd
