#include <algorithm>
#include <sstream>

#include "mcmd/core.hpp"

namespace mcmd {

const char* to_string(DisjointnessMode mode) {
  return mode == DisjointnessMode::kMax ? "max" : "sum";
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNotIdempotent: return "NOT_IDEMPOTENT";
    case ViolationKind::kOrder: return "ORDER_VIOLATION";
    case ViolationKind::kReach: return "REACH_VIOLATION";
    case ViolationKind::kDisjoint: return "DISJOINT_VIOLATION";
  }
  return "UNKNOWN";
}

std::string VerificationReport::summary() const {
  if (ok) return "OK";
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << to_string(v.kind) << " [";
    for (std::size_t k = 0; k < v.disks.size(); ++k) out << (k ? "," : "") << v.disks[k];
    out << "] " << v.detail << "\n";
  }
  return out.str();
}

bool centre_disjoint(const Rational& centre_sq_dist, const Rational& ra, const Rational& rb,
                     DisjointnessMode mode) {
  Rational limit = mode == DisjointnessMode::kMax ? (ra < rb ? rb : ra) : ra + rb;
  return centre_sq_dist >= limit * limit;
}

namespace {

void check_shape(const Instance& instance, const Assignment& assignment) {
  if (assignment.size() != instance.size()) {
    throw Error(ErrorCode::kIdMismatch, "assignment covers " + std::to_string(assignment.size()) +
                                            " ids, instance has " +
                                            std::to_string(instance.size()));
  }
  const auto n = static_cast<DiskId>(instance.size());
  for (DiskId t : assignment.targets()) {
    if (t < 1 || t > n) {
      throw Error(ErrorCode::kIdMismatch, "assignment targets unknown id " + std::to_string(t));
    }
  }
}

bool report_idempotence(const Assignment& assignment, VerificationReport& report) {
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    const auto id = static_cast<DiskId>(k + 1);
    const DiskId t = assignment.target(id);
    if (assignment.target(t) != t) {
      report.add({ViolationKind::kNotIdempotent, {id, t},
                  "disk " + std::to_string(id) + " maps to merged disk " + std::to_string(t)});
    }
  }
  return report.ok;
}

// Members merged into each selected disk, in delta order of that disk.
std::vector<std::vector<DiskId>> merged_sets(const Instance& instance,
                                              const Assignment& assignment) {
  std::vector<std::vector<DiskId>> sets(instance.size() + 1);
  for (std::size_t k = 0; k < instance.size(); ++k) {
    const auto id = static_cast<DiskId>(k + 1);
    const DiskId t = assignment.target(id);
    if (t != id) sets[t].push_back(id);
  }
  for (std::size_t i = 1; i < sets.size(); ++i) {
    auto& s = sets[i];
    const auto owner = static_cast<DiskId>(i);
    std::sort(s.begin(), s.end(), [&](DiskId a, DiskId b) {
      return instance.delta_rank(owner, a) < instance.delta_rank(owner, b);
    });
  }
  return sets;
}

void check_reach(const Instance& instance, DiskId owner, const std::vector<DiskId>& members,
                 bool strict, VerificationReport& report) {
  Rational reach = instance.radius(owner);
  for (DiskId m : members) {
    const Rational& d2 = instance.sq_dist(owner, m);
    const Rational r2 = reach * reach;
    const bool inside = strict ? d2 < r2 : d2 <= r2;
    if (!inside) {
      report.add({ViolationKind::kReach, {owner, m},
                  "disk " + std::to_string(owner) + " does not reach the centre of " +
                      std::to_string(m) + " at radius " + format_rational(reach)});
    }
    reach += instance.radius(m);
  }
}

void check_disjoint(const Instance& instance, const Assignment& assignment,
                    const std::vector<std::vector<DiskId>>& sets, DisjointnessMode mode,
                    VerificationReport& report) {
  std::vector<DiskId> selected;
  std::vector<Rational> agg;
  for (std::size_t k = 0; k < instance.size(); ++k) {
    const auto id = static_cast<DiskId>(k + 1);
    if (!assignment.selected(id)) continue;
    Rational r = instance.radius(id);
    for (DiskId m : sets[id]) r += instance.radius(m);
    selected.push_back(id);
    agg.push_back(r);
  }
  for (std::size_t a = 0; a < selected.size(); ++a) {
    for (std::size_t b = a + 1; b < selected.size(); ++b) {
      if (!centre_disjoint(instance.sq_dist(selected[a], selected[b]), agg[a], agg[b], mode)) {
        report.add({ViolationKind::kDisjoint, {selected[a], selected[b]},
                    "selected disks " + std::to_string(selected[a]) + " and " +
                        std::to_string(selected[b]) + " are not centre-disjoint (" +
                        to_string(mode) + ")"});
      }
    }
  }
}

}  // namespace

VerificationReport verify_proper(const Instance& instance, const Assignment& assignment,
                                 DisjointnessMode mode) {
  check_shape(instance, assignment);
  VerificationReport report;
  if (!report_idempotence(assignment, report)) return report;

  const auto sets = merged_sets(instance, assignment);
  for (std::size_t k = 0; k < instance.size(); ++k) {
    const auto id = static_cast<DiskId>(k + 1);
    if (!assignment.selected(id)) continue;
    const auto& members = sets[id];
    auto seq = instance.delta(id);
    for (std::size_t p = 0; p < members.size(); ++p) {
      if (seq[p] != members[p]) {
        // The merged set is not the first |members| entries of delta(id).
        report.add({ViolationKind::kOrder, {id, seq[p]},
                    "disk " + std::to_string(seq[p]) + " is closer to " + std::to_string(id) +
                        " than a merged disk but is not merged with it"});
        break;
      }
    }
    check_reach(instance, id, members, /*strict=*/true, report);
  }
  check_disjoint(instance, assignment, sets, mode, report);
  return report;
}

VerificationReport verify_uproper(const Instance& instance, const Assignment& assignment,
                                  DisjointnessMode mode) {
  check_shape(instance, assignment);
  VerificationReport report;
  if (!report_idempotence(assignment, report)) return report;

  const auto sets = merged_sets(instance, assignment);
  for (std::size_t k = 0; k < instance.size(); ++k) {
    const auto id = static_cast<DiskId>(k + 1);
    if (assignment.selected(id)) check_reach(instance, id, sets[id], /*strict=*/false, report);
  }
  check_disjoint(instance, assignment, sets, mode, report);
  return report;
}

}  // namespace mcmd
