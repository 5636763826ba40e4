#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mcmd/solvers.hpp"

namespace mcmd::solvers {

std::optional<CollinearOrder> collinearity_check(const Instance& instance) {
  const std::size_t n = instance.size();
  CollinearOrder out;
  out.position.assign(n + 1, 0);
  out.projection.assign(n + 1, Rational(0));
  if (n == 0) return out;

  const Point& origin = instance.centre(1);
  std::optional<Point> direction;
  for (const Disk& d : instance.disks()) {
    if (d.centre != origin) {
      direction = Point{d.centre.x - origin.x, d.centre.y - origin.y};
      // Orient along increasing x, or increasing y on a vertical line.
      if (direction->x < 0 || (direction->x == 0 && direction->y < 0))
        direction = Point{-direction->x, -direction->y};
      break;
    }
  }
  for (const Disk& d : instance.disks()) {
    Rational dx = d.centre.x - origin.x;
    Rational dy = d.centre.y - origin.y;
    if (direction) {
      if (dx * direction->y != dy * direction->x) return std::nullopt;
      out.projection[d.id] = dx * direction->x + dy * direction->y;
    }
  }
  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), 1);
  std::stable_sort(out.order.begin(), out.order.end(), [&](DiskId a, DiskId b) {
    return out.projection[a] < out.projection[b];
  });
  for (std::size_t p = 0; p < n; ++p) out.position[out.order[p]] = p + 1;
  return out;
}

std::optional<MergeWindow> merge_prefix_feasible(const Instance& instance,
                                                 const CollinearOrder& order, std::size_t i,
                                                 std::size_t j) {
  const std::size_t n = instance.size();
  if (i < 1 || i > n || j + 1 > std::max<std::size_t>(n, 1)) {
    throw Error(ErrorCode::kOutOfRange, "merge window (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ") out of range");
  }
  const DiskId owner = order.order[i - 1];
  auto seq = instance.delta(owner);
  MergeWindow w;
  w.a = w.b = i;
  Rational r = instance.radius(owner);
  for (std::size_t k = 0; k < j; ++k) {
    if (!(instance.sq_dist(owner, seq[k]) < r * r)) return std::nullopt;
    r += instance.radius(seq[k]);
    const std::size_t p = order.position[seq[k]];
    w.a = std::min(w.a, p);
    w.b = std::max(w.b, p);
  }
  w.radius = r;
  w.contiguous = (w.b - w.a) == j;
  const Rational r2 = r * r;
  auto inside = [&](std::size_t p) { return instance.sq_dist(owner, order.order[p - 1]) < r2; };
  w.A = i;
  while (w.A > 1 && inside(w.A - 1)) --w.A;
  w.B = i;
  while (w.B < n && inside(w.B + 1)) ++w.B;
  return w;
}

std::size_t DPTable::index(std::size_t x, std::size_t y, std::size_t z) const {
  if (x < 1 || y < 1 || z < 1 || x > n_ || y > n_ || z > n_) {
    throw Error(ErrorCode::kOutOfRange, "DP index out of range");
  }
  return ((x - 1) * n_ + (y - 1)) * n_ + (z - 1);
}

std::size_t DPTable::finite_entries() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const Entry& e) { return e.value.has_value(); }));
}

bool operator==(const DPTable& a, const DPTable& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    const auto& x = a.entries_[k];
    const auto& y = b.entries_[k];
    if (x.value != y.value || x.merge_count != y.merge_count || x.predecessor != y.predecessor) {
      return false;
    }
  }
  return true;
}

namespace {

struct Cell {
  std::optional<int> value;
  std::optional<std::pair<std::size_t, std::size_t>> predecessor;
};

}  // namespace

CollinearSolution solve_collinear(const Instance& instance, DisjointnessMode mode) {
  const std::size_t n = instance.size();
  auto line = collinearity_check(instance);
  if (!line) throw Error(ErrorCode::kNotCollinear, "disk centres are not collinear");

  CollinearSolution out;
  out.table = DPTable(n);
  if (n == 0) {
    out.result.status = SolveStatus::kFeasible;
    return out;
  }

  // windows[i][j] for every position i and prefix length j.
  std::vector<std::vector<std::optional<MergeWindow>>> windows(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    windows[i].resize(n);
    bool blocked = false;
    for (std::size_t j = 0; j < n; ++j) {
      windows[i][j] = merge_prefix_feasible(instance, *line, i, j);
      if (blocked && windows[i][j]) {
        throw std::logic_error("merge feasibility is not monotone in the prefix length");
      }
      blocked = blocked || !windows[i][j];
    }
  }

  auto id_at = [&](std::size_t p) { return line->order[p - 1]; };
  std::vector<std::vector<Cell>> best(n + 1, std::vector<Cell>(n));
  DPTable& M = out.table;

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& win = windows[i][j];
      if (!win) break;  // no larger prefix can be merged either
      ++out.stats.windows;
      if (!win->contiguous) continue;

      Cell cell;
      if (win->a == 1) {
        cell.value = 1;
      } else {
        for (std::size_t t = 1; t < win->A; ++t) {
          for (std::size_t k = 0; k + 2 <= n; ++k) {
            ++out.stats.transitions;
            const auto& prev = windows[t][k];
            if (!prev || !prev->contiguous) continue;
            if (prev->b != win->a - 1) continue;  // d_f must be d_(a-1)
            std::optional<int> value;
            std::pair<std::size_t, std::size_t> pred;
            if (mode == DisjointnessMode::kMax) {
              if (prev->B >= i) continue;  // d_t would contain the centre of d_i
              const auto& entry = M.at(win->a - 1, t, prev->B);
              value = entry.value;
              pred = {t, entry.merge_count};
            } else {
              if (!centre_disjoint(instance.sq_dist(id_at(t), id_at(i)), prev->radius, win->radius,
                                   mode)) {
                continue;
              }
              value = best[t][k].value;
              pred = {t, k};
            }
            if (value && (!cell.value || *value + 1 > *cell.value)) {
              cell.value = *value + 1;
              cell.predecessor = pred;
            }
          }
        }
      }
      if (!cell.value) continue;
      best[i][j] = cell;
      auto& entry = M.at(win->b, i, win->B);
      if (!entry.value || *cell.value > *entry.value) {
        entry.value = cell.value;
        entry.merge_count = j;
        entry.predecessor = cell.predecessor;
      }
    }
  }

  std::optional<int> answer;
  std::size_t last = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& e = M.at(n, i, n);
    if (e.value && (!answer || *e.value > *answer)) {
      answer = e.value;
      last = i;
    }
  }
  if (!answer) return out;

  std::vector<DiskId> target(n, 0);
  std::size_t pos = last;
  std::size_t count = M.at(n, last, n).merge_count;
  while (true) {
    const DiskId owner = id_at(pos);
    target[owner - 1] = owner;
    auto seq = instance.delta(owner);
    for (std::size_t k = 0; k < count; ++k) target[seq[k] - 1] = owner;
    const auto& pred = best[pos][count].predecessor;
    if (!pred) break;
    pos = pred->first;
    count = pred->second;
  }
  out.result.status = SolveStatus::kFeasible;
  out.result.best_cardinality = static_cast<std::size_t>(*answer);
  out.result.assignment = Assignment(std::move(target));
  if (!verify_proper(instance, out.result.assignment, mode).ok ||
      cardinality(out.result.assignment) != out.result.best_cardinality) {
    throw std::logic_error("collinear solver reconstructed an invalid assignment");
  }
  return out;
}

}  // namespace mcmd::solvers
