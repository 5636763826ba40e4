#include <stdexcept>
#include <string>

#include "mcmd/solvers.hpp"

namespace mcmd::solvers {
namespace {

// Precomputed proper-assignment predicate. reach_[i][j] says the first j
// neighbours of i can be merged in order; disjoint_ caches the pairwise
// centre-disjointness of two selected disks given their prefix lengths.
class ProperPredicate {
 public:
  ProperPredicate(const Instance& instance, DisjointnessMode mode)
      : inst_(instance), n_(instance.size()) {
    reach_.assign(n_ + 1, std::vector<char>(n_, 0));
    radius_.assign(n_ + 1, std::vector<Rational>(n_));
    for (std::size_t i = 1; i <= n_; ++i) {
      const auto id = static_cast<DiskId>(i);
      auto seq = inst_.delta(id);
      Rational r = inst_.radius(id);
      bool ok = true;
      for (std::size_t j = 0; j < n_; ++j) {
        radius_[i][j] = r;
        reach_[i][j] = ok;
        if (j < seq.size()) {
          ok = ok && inst_.sq_dist(id, seq[j]) < r * r;
          r += inst_.radius(seq[j]);
        }
      }
    }
    disjoint_.assign(n_ * n_ * n_ * n_, 0);
    for (std::size_t a = 1; a <= n_; ++a) {
      for (std::size_t b = 1; b <= n_; ++b) {
        if (a == b) continue;
        const Rational& d2 = inst_.sq_dist(static_cast<DiskId>(a), static_cast<DiskId>(b));
        for (std::size_t ja = 0; ja < n_; ++ja) {
          for (std::size_t jb = 0; jb < n_; ++jb) {
            disjoint_[key(a, ja, b, jb)] = centre_disjoint(d2, radius_[a][ja], radius_[b][jb], mode);
          }
        }
      }
    }
  }

  bool operator()(const std::vector<DiskId>& t) {
    count_.assign(n_ + 1, 0);
    for (std::size_t v = 1; v <= n_; ++v) {
      if (t[v - 1] != static_cast<DiskId>(v)) ++count_[t[v - 1]];
    }
    for (std::size_t v = 1; v <= n_; ++v) {
      const DiskId owner = t[v - 1];
      if (owner == static_cast<DiskId>(v)) {
        if (!reach_[v][count_[v]]) return false;
      } else if (inst_.delta_rank(owner, static_cast<DiskId>(v)) >= count_[owner]) {
        return false;
      }
    }
    for (std::size_t a = 1; a <= n_; ++a) {
      if (t[a - 1] != static_cast<DiskId>(a)) continue;
      for (std::size_t b = a + 1; b <= n_; ++b) {
        if (t[b - 1] != static_cast<DiskId>(b)) continue;
        if (!disjoint_[key(a, count_[a], b, count_[b])]) return false;
      }
    }
    return true;
  }

 private:
  std::size_t key(std::size_t a, std::size_t ja, std::size_t b, std::size_t jb) const {
    return (((a - 1) * n_ + ja) * n_ + (b - 1)) * n_ + jb;
  }

  const Instance& inst_;
  std::size_t n_;
  std::vector<std::vector<char>> reach_;
  std::vector<std::vector<Rational>> radius_;
  std::vector<char> disjoint_;
  std::vector<std::size_t> count_;
};

class UproperPredicate {
 public:
  UproperPredicate(const Instance& instance, DisjointnessMode mode)
      : inst_(instance), mode_(mode), n_(instance.size()) {}

  bool operator()(const std::vector<DiskId>& t) {
    agg_.assign(n_ + 1, Rational(0));
    for (std::size_t i = 1; i <= n_; ++i) {
      const auto id = static_cast<DiskId>(i);
      if (t[i - 1] != id) continue;
      Rational r = inst_.radius(id);
      for (DiskId m : inst_.delta(id)) {
        if (t[m - 1] != id) continue;
        if (inst_.sq_dist(id, m) > r * r) return false;
        r += inst_.radius(m);
      }
      agg_[i] = r;
    }
    for (std::size_t a = 1; a <= n_; ++a) {
      if (t[a - 1] != static_cast<DiskId>(a)) continue;
      for (std::size_t b = a + 1; b <= n_; ++b) {
        if (t[b - 1] != static_cast<DiskId>(b)) continue;
        if (!centre_disjoint(inst_.sq_dist(static_cast<DiskId>(a), static_cast<DiskId>(b)),
                             agg_[a], agg_[b], mode_)) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  const Instance& inst_;
  DisjointnessMode mode_;
  std::size_t n_;
  std::vector<Rational> agg_;
};

// Walks idempotent maps in lexicographic order of the target vector, keeping
// the first map found at each new best cardinality. Branches that cannot beat
// the current best are cut; any map they could produce at equal cardinality
// is lexicographically larger than the incumbent.
template <typename Accept>
class IdempotentSearch {
 public:
  IdempotentSearch(std::size_t n, Accept& accept)
      : n_(n), accept_(accept), target_(n, 0), required_(n + 1, 0) {}

  void run() { visit(1, 0); }

  bool found() const { return found_; }
  std::size_t best() const { return best_; }
  const std::vector<DiskId>& best_map() const { return best_map_; }

 private:
  void visit(std::size_t pos, std::size_t selected) {
    if (pos > n_) {
      if ((!found_ || selected > best_) && accept_(target_)) {
        found_ = true;
        best_ = selected;
        best_map_ = target_;
      }
      return;
    }
    if (found_ && selected + (n_ - pos + 1) <= best_) return;
    for (std::size_t v = 1; v <= n_; ++v) {
      if (v == pos) {
        target_[pos - 1] = static_cast<DiskId>(v);
        visit(pos + 1, selected + 1);
        continue;
      }
      // pos maps elsewhere: pos must not be an image, v must be a fixed point.
      if (required_[pos]) continue;
      if (v < pos && target_[v - 1] != static_cast<DiskId>(v)) continue;
      target_[pos - 1] = static_cast<DiskId>(v);
      ++required_[v];
      visit(pos + 1, selected);
      --required_[v];
    }
  }

  std::size_t n_;
  Accept& accept_;
  std::vector<DiskId> target_;
  std::vector<int> required_;
  bool found_ = false;
  std::size_t best_ = 0;
  std::vector<DiskId> best_map_;
};

void check_size(const Instance& instance, std::size_t max_n) {
  if (instance.size() > max_n) {
    throw Error(ErrorCode::kTooLarge, "exact solver limited to " + std::to_string(max_n) +
                                          " disks, got " + std::to_string(instance.size()));
  }
}

template <typename Accept>
SolveResult run_oracle(const Instance& instance, Accept& accept) {
  SolveResult result;
  if (instance.empty()) {
    result.status = SolveStatus::kFeasible;
    return result;
  }
  IdempotentSearch<Accept> search(instance.size(), accept);
  search.run();
  if (search.found()) {
    result.status = SolveStatus::kFeasible;
    result.best_cardinality = search.best();
    result.assignment = Assignment(search.best_map());
  }
  return result;
}

}  // namespace

SolveResult solve_exact_mcmd(const Instance& instance, DisjointnessMode mode, std::size_t max_n) {
  check_size(instance, max_n);
  ProperPredicate accept(instance, mode);
  SolveResult result = run_oracle(instance, accept);
  if (result.feasible() && !verify_proper(instance, result.assignment, mode).ok) {
    throw std::logic_error("exact solver produced an assignment the verifier rejects");
  }
  return result;
}

SolveResult solve_exact_rmcmd(const Instance& instance, DisjointnessMode mode, std::size_t max_n) {
  check_size(instance, max_n);
  UproperPredicate accept(instance, mode);
  SolveResult result = run_oracle(instance, accept);
  if (result.feasible() && !verify_uproper(instance, result.assignment, mode).ok) {
    throw std::logic_error("exact solver produced an assignment the verifier rejects");
  }
  return result;
}

}  // namespace mcmd::solvers
