#include <algorithm>
#include <stdexcept>

#include "mcmd/reductions.hpp"

namespace mcmd::reductions {

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

Point pt(long xn, long xd, long yn, long yd) { return {q(xn, xd), q(yn, yd)}; }

Point rotate(const Point& p, int quarter_turns) {
  Point r = p;
  for (int k = 0; k < quarter_turns; ++k) r = {-r.y, r.x};
  return r;
}

bool is_integer(const Rational& v) { return v.get_den() == 1; }

void check_pose(const Pose& pose) {
  if (pose.quarter_turns < 0 || pose.quarter_turns > 3)
    throw Error(ErrorCode::kInvalidPose, "quarter_turns must be 0..3");
  if (!is_integer(pose.translation.x) || !is_integer(pose.translation.y))
    throw Error(ErrorCode::kInvalidPose, "translation must be a lattice point");
}

struct LocalPort {
  const char* name;
  Point point;
  Point outward;
  std::size_t owner;
  bool optional;
};

struct Template {
  std::vector<Disk> sdisks;
  std::vector<Point> internal;
  std::vector<LocalPort> ports;
};

Disk sdisk(Point c, Rational r) { return Disk{0, std::move(c), std::move(r)}; }

const Point kWest{-1, 0}, kEast{1, 0}, kNorth{0, 1}, kSouth{0, -1};

Template local_template(GadgetKind kind) {
  Template t;
  switch (kind) {
    case GadgetKind::kInput:
      t.sdisks = {sdisk(pt(-1, 4, 1, 10), q(2, 5))};
      t.ports = {{"out", pt(0, 1, 0, 1), kEast, 0, false}};
      break;
    case GadgetKind::kCopy4:
      // Each sdisk sees m4 first, then its port, then m3.
      t.sdisks = {sdisk(pt(1, 4, 1, 10), q(2, 5)), sdisk(pt(3, 4, 1, 10), q(2, 5))};
      t.internal = {pt(1, 2, 1, 10), pt(1, 2, -1, 10)};
      t.ports = {{"in", pt(0, 1, 0, 1), kWest, 0, false}, {"out", pt(1, 1, 0, 1), kEast, 1, false}};
      break;
    case GadgetKind::kCopy6:
      t.sdisks = {sdisk(pt(-29, 20, 1, 10), q(3, 4)), sdisk(pt(0, 1, 0, 1), q(11, 10))};
      t.internal = {pt(-19, 20, 1, 10), pt(-19, 20, -9, 20)};
      t.ports = {{"in", pt(-2, 1, 0, 1), kWest, 0, false},
                 {"east", pt(1, 1, 0, 1), kEast, 1, true},
                 {"north", pt(0, 1, 1, 1), kNorth, 1, true},
                 {"south", pt(0, 1, -1, 1), kSouth, 1, true}};
      break;
    case GadgetKind::kDisjunction:
      t.sdisks = {sdisk(pt(-21, 20, 0, 1), q(11, 10)), sdisk(pt(0, 1, -21, 20), q(11, 10)),
                  sdisk(pt(21, 20, 0, 1), q(11, 10))};
      t.internal = {pt(0, 1, 0, 1)};
      t.ports = {{"west", pt(-2, 1, 0, 1), kWest, 0, true},
                 {"south", pt(0, 1, -2, 1), kSouth, 1, true},
                 {"east", pt(2, 1, 0, 1), kEast, 2, true}};
      break;
    case GadgetKind::kNot:
      // s1 holds both ports; s2 takes m3 and m4 when s1 lets them go.
      t.sdisks = {sdisk(pt(1, 2, 1, 5), q(13, 20)), sdisk(pt(1, 2, -3, 5), q(3, 5))};
      t.internal = {pt(1, 2, -1, 4), pt(1, 4, -3, 10)};
      t.ports = {{"in", pt(0, 1, 0, 1), kWest, 0, false}, {"out", pt(1, 1, 0, 1), kEast, 0, false}};
      break;
  }
  return t;
}

// Absorber sdisk just outside a port, shaped like the facing sdisk of a
// neighbouring Copy gadget.
Disk absorber_for(const Point& port, const Point& outward) {
  Point perp = rotate(outward, 1);
  return sdisk({port.x + q(1, 4) * outward.x + q(1, 10) * perp.x,
                port.y + q(1, 4) * outward.y + q(1, 10) * perp.y},
               q(2, 5));
}

}  // namespace

const char* to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kInput: return "input";
    case GadgetKind::kCopy4: return "copy4";
    case GadgetKind::kCopy6: return "copy6";
    case GadgetKind::kDisjunction: return "disjunction";
    case GadgetKind::kNot: return "not";
  }
  return "?";
}

Point Pose::apply(const Point& local) const {
  Point p{local.x, mirror ? Rational(-local.y) : local.y};
  p = rotate(p, quarter_turns);
  return {p.x + translation.x, p.y + translation.y};
}

Gadget build_gadget(GadgetKind kind, const Pose& pose, const std::vector<std::string>& keep) {
  check_pose(pose);
  Template t = local_template(kind);
  auto kept = [&](const std::string& name) {
    return keep.empty() || std::find(keep.begin(), keep.end(), name) != keep.end();
  };
  for (const auto& name : keep) {
    bool known = name == "absorber" && kind == GadgetKind::kInput;
    for (const auto& p : t.ports) known = known || (p.optional && name == p.name);
    if (!known)
      throw Error(ErrorCode::kInvalidPose,
                  std::string("gadget ") + to_string(kind) + " has no optional part " + name);
  }

  Gadget g;
  g.kind = kind;
  g.pose = pose;
  auto place = [&](const Point& p) { return pose.apply(p); };
  auto turn = [&](const Point& d) {
    return rotate(Point{d.x, pose.mirror ? Rational(-d.y) : d.y}, pose.quarter_turns);
  };

  if (kind == GadgetKind::kDisjunction) {
    // Dropping a port drops the sdisk that serves it.
    for (const auto& p : t.ports) {
      if (!kept(p.name)) continue;
      g.ports.push_back({p.name, place(p.point), turn(p.outward), g.sdisks.size()});
      const Disk& s = t.sdisks[p.owner];
      g.sdisks.push_back({0, place(s.centre), s.radius});
    }
    if (g.ports.empty()) throw Error(ErrorCode::kInvalidPose, "disjunction needs a port");
  } else {
    for (const auto& s : t.sdisks) g.sdisks.push_back({0, place(s.centre), s.radius});
    for (const auto& p : t.ports)
      if (!p.optional || kept(p.name))
        g.ports.push_back({p.name, place(p.point), turn(p.outward), p.owner});
    if (kind == GadgetKind::kInput && !keep.empty() && kept("absorber"))
      g.sdisks.push_back(absorber_for(g.ports[0].point, g.ports[0].outward));
  }
  for (const auto& m : t.internal) g.internal_mdisks.push_back(place(m));
  return g;
}

Rational choose_mdisk_radius(const std::vector<Disk>& sdisks, const std::vector<Point>& mdisks) {
  if (mdisks.empty()) return q(1);
  std::vector<const Point*> centres;
  for (const auto& s : sdisks) centres.push_back(&s.centre);
  for (const auto& m : mdisks) centres.push_back(&m);

  bool found = false;
  Rational clearance;
  for (const auto& s : sdisks) {
    const Rational r2 = s.radius * s.radius;
    for (const Point* p : centres) {
      if (p == &s.centre) continue;
      Rational d2 = squared_distance(s.centre, *p);
      if (d2 < r2) continue;
      if (d2 == r2) throw std::logic_error("a centre lies on an sdisk boundary");
      Integer scale = 1000000;
      Rational gap = sqrt_lower_bound(d2, scale) - s.radius;
      while (gap <= 0) {
        scale *= 1000;
        gap = sqrt_lower_bound(d2, scale) - s.radius;
      }
      if (!found || gap < clearance) clearance = gap;
      found = true;
    }
  }
  if (!found) return q(1, 10);
  Rational eps = clearance / Rational(4 * static_cast<long>(mdisks.size()));
  eps.canonicalize();
  return eps;
}

GadgetHarness build_gadget_harness(GadgetKind kind, const std::vector<std::string>& keep) {
  Gadget g = build_gadget(kind, Pose{}, keep);
  std::vector<Disk> sdisks = g.sdisks;
  for (const auto& p : g.ports) sdisks.push_back(absorber_for(p.point, p.outward));
  std::vector<Point> mdisks = g.internal_mdisks;
  for (const auto& p : g.ports) mdisks.push_back(p.point);
  Rational eps = choose_mdisk_radius(sdisks, mdisks);

  std::vector<Disk> disks;
  for (auto& s : sdisks) disks.push_back({static_cast<DiskId>(disks.size() + 1), s.centre, s.radius});
  for (auto& m : mdisks) disks.push_back({static_cast<DiskId>(disks.size() + 1), m, eps});

  GadgetHarness h;
  const DiskId first_port = static_cast<DiskId>(sdisks.size() + g.internal_mdisks.size() + 1);
  for (std::size_t k = 0; k < g.ports.size(); ++k) {
    h.port_mdisks.push_back(first_port + static_cast<DiskId>(k));
    h.port_owner.push_back(static_cast<DiskId>(g.ports[k].owner + 1));
  }
  h.instance = Instance(std::move(disks));
  return h;
}

}  // namespace mcmd::reductions
