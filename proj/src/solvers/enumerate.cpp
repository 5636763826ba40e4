#include <algorithm>
#include <numeric>

#include "mcmd/solvers.hpp"

namespace mcmd::solvers {
namespace {

// Every proper assignment is a set of (owner, prefix length) blocks that
// partition the disks. The search always covers the first uncovered disk in
// a fixed order (large radii first), so each assignment is produced once.
class ProperEnumerator {
 public:
  ProperEnumerator(const Instance& instance, DisjointnessMode mode,
                   const std::function<bool(const Assignment&)>& visit)
      : inst_(instance), mode_(mode), visit_(visit), n_(instance.size()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 1);
    std::stable_sort(order_.begin(), order_.end(), [&](DiskId a, DiskId b) {
      return inst_.radius(a) > inst_.radius(b);
    });
    max_prefix_.assign(n_ + 1, 0);
    radius_.assign(n_ + 1, {});
    for (std::size_t i = 1; i <= n_; ++i) {
      const auto id = static_cast<DiskId>(i);
      auto seq = inst_.delta(id);
      Rational r = inst_.radius(id);
      radius_[i].push_back(r);
      std::size_t j = 0;
      while (j < seq.size() && inst_.sq_dist(id, seq[j]) < r * r) {
        r += inst_.radius(seq[j]);
        radius_[i].push_back(r);
        ++j;
      }
      max_prefix_[i] = j;
    }
    target_.assign(n_, 0);
  }

  std::size_t run() {
    if (n_ == 0) {
      ++count_;
      visit_(Assignment());
      return count_;
    }
    search();
    return count_;
  }

 private:
  bool covered(DiskId id) const { return target_[id - 1] != 0; }

  bool prefix_free(DiskId owner, std::size_t j) const {
    auto seq = inst_.delta(owner);
    for (std::size_t k = 0; k < j; ++k) {
      if (covered(seq[k])) return false;
    }
    return true;
  }

  bool compatible(DiskId owner, const Rational& r) const {
    for (std::size_t s = 0; s < selected_.size(); ++s) {
      if (!centre_disjoint(inst_.sq_dist(owner, selected_[s]), r, selected_radius_[s], mode_)) {
        return false;
      }
    }
    return true;
  }

  // Can `v` still be covered by some block, given the current partial state?
  bool coverable(DiskId v) const {
    if (compatible(v, radius_[v][0])) return true;
    for (std::size_t w = 1; w <= n_; ++w) {
      const auto owner = static_cast<DiskId>(w);
      if (owner == v || covered(owner)) continue;
      const std::size_t need = inst_.delta_rank(owner, v) + 1;
      if (need <= max_prefix_[w] && prefix_free(owner, need)) return true;
    }
    return false;
  }

  void place(DiskId owner, std::size_t j) {
    target_[owner - 1] = owner;
    auto seq = inst_.delta(owner);
    for (std::size_t k = 0; k < j; ++k) target_[seq[k] - 1] = owner;
    selected_.push_back(owner);
    selected_radius_.push_back(radius_[owner][j]);
  }

  void unplace(DiskId owner, std::size_t j) {
    target_[owner - 1] = 0;
    auto seq = inst_.delta(owner);
    for (std::size_t k = 0; k < j; ++k) target_[seq[k] - 1] = 0;
    selected_.pop_back();
    selected_radius_.pop_back();
  }

  bool consistent() const {
    for (DiskId v : order_) {
      if (!covered(v) && !coverable(v)) return false;
    }
    return true;
  }

  void try_block(DiskId owner, std::size_t j) {
    if (!prefix_free(owner, j) || !compatible(owner, radius_[owner][j])) return;
    place(owner, j);
    if (consistent()) search();
    unplace(owner, j);
  }

  void search() {
    if (stop_) return;
    DiskId u = 0;
    for (DiskId v : order_) {
      if (!covered(v)) {
        u = v;
        break;
      }
    }
    if (u == 0) {
      ++count_;
      if (!visit_(Assignment(target_))) stop_ = true;
      return;
    }
    for (std::size_t j = 0; j <= max_prefix_[u] && !stop_; ++j) try_block(u, j);
    for (std::size_t w = 1; w <= n_ && !stop_; ++w) {
      const auto owner = static_cast<DiskId>(w);
      if (owner == u || covered(owner)) continue;
      for (std::size_t j = inst_.delta_rank(owner, u) + 1; j <= max_prefix_[w] && !stop_; ++j) {
        try_block(owner, j);
      }
    }
  }

  const Instance& inst_;
  DisjointnessMode mode_;
  const std::function<bool(const Assignment&)>& visit_;
  std::size_t n_;
  std::vector<DiskId> order_;
  std::vector<std::size_t> max_prefix_;
  std::vector<std::vector<Rational>> radius_;
  std::vector<DiskId> target_;
  std::vector<DiskId> selected_;
  std::vector<Rational> selected_radius_;
  std::size_t count_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t enumerate_proper(const Instance& instance, DisjointnessMode mode,
                             const std::function<bool(const Assignment&)>& visit) {
  ProperEnumerator e(instance, mode, visit);
  return e.run();
}

}  // namespace mcmd::solvers
