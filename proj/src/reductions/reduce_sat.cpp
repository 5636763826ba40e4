#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mcmd/reductions.hpp"

namespace mcmd::reductions {

namespace {

struct PortSignal {
  int variable = 0;
  bool inverted = false;
  bool input = false;  // this gadget is the downstream end of the wire
};

using PortSignals = std::map<std::string, PortSignal>;

class Builder {
 public:
  explicit Builder(ReductionArtifact& out) : out_(out) {}

  std::size_t place(GadgetKind kind, const Pose& pose, const std::vector<std::string>& keep,
                    std::string provenance, const PortSignals& signals) {
    Gadget g = build_gadget(kind, pose, keep);
    PlacedGadget placed;
    placed.kind = kind;
    placed.pose = pose;
    placed.provenance = std::move(provenance);
    for (const auto& s : g.sdisks) {
      placed.sdisks.push_back(add(s.centre, s.radius));
      sdisks_.push_back(s);
    }
    for (const auto& m : g.internal_mdisks) placed.internal_mdisks.push_back(add_mdisk(m));
    for (const auto& p : g.ports) {
      const PortSignal& sig = signals.at(p.name);
      Wire& w = wire_at(p.point, sig);
      DiskId owner = placed.sdisks[p.owner];
      (sig.input ? w.downstream_owner : w.upstream_owner) = owner;
      // A lone Input hands its port to its absorber when the value is one.
      if (kind == GadgetKind::kInput && placed.sdisks.size() == 2)
        w.downstream_owner = placed.sdisks[1];
      placed.ports.push_back({p.name, w.mdisk, owner, p.outward});
    }
    out_.gadgets.push_back(std::move(placed));
    return out_.gadgets.size() - 1;
  }

  void finish() {
    for (const auto& w : out_.wires)
      if (w.upstream_owner == 0 || w.downstream_owner == 0)
        throw std::logic_error("dangling port in the sat construction");
    Rational eps = choose_mdisk_radius(sdisks_, mdisk_centres_);
    for (DiskId id : mdisk_ids_) disks_[id - 1].radius = eps;
    out_.instance = Instance(std::move(disks_));
  }

 private:
  DiskId add(const Point& c, const Rational& r) {
    DiskId id = static_cast<DiskId>(disks_.size() + 1);
    disks_.push_back({id, c, r});
    return id;
  }

  DiskId add_mdisk(const Point& c) {
    DiskId id = add(c, Rational(1));
    mdisk_ids_.push_back(id);
    mdisk_centres_.push_back(c);
    return id;
  }

  Wire& wire_at(const Point& p, const PortSignal& sig) {
    auto key = std::make_pair(p.x, p.y);
    auto it = wires_.find(key);
    if (it != wires_.end()) {
      Wire& w = out_.wires[it->second];
      if (w.variable != sig.variable || w.inverted != sig.inverted)
        throw std::logic_error("joined ports carry different signals");
      return w;
    }
    out_.wires.push_back({add_mdisk(p), 0, 0, sig.variable, sig.inverted});
    wires_.emplace(key, out_.wires.size() - 1);
    return out_.wires.back();
  }

  ReductionArtifact& out_;
  std::vector<Disk> disks_;
  std::vector<Disk> sdisks_;
  std::vector<DiskId> mdisk_ids_;
  std::vector<Point> mdisk_centres_;
  std::map<std::pair<Rational, Rational>, std::size_t> wires_;
};

Pose at(long x, long y, int turns = 0) { return Pose{{Rational(x), Rational(y)}, turns, false}; }

PortSignals edge(int v, bool inv) { return {{"in", {v, inv, true}}, {"out", {v, inv, false}}}; }

long as_long(const Rational& r) {
  if (r.get_den() != 1) throw Error(ErrorCode::kInvalidRepresentation, "representation is not grid-embedded");
  return r.get_num().get_si();
}

struct Leg {
  long column;
  int clause;
  long row;
};

}  // namespace

ReductionArtifact reduce_sat(const MonotoneFormula& formula, const RectilinearRep& rep) {
  validate(formula, rep);
  constexpr long K = 4;

  ReductionArtifact art;
  art.formula = formula;
  art.grid_scale = K;
  Builder b(art);
  const int nv = formula.num_variables;
  art.port_map.assign(nv, 0);
  art.input_sdisk.assign(nv, 0);

  std::vector<std::vector<Leg>> legs(nv);
  for (std::size_t c = 0; c < formula.clauses.size(); ++c)
    for (std::size_t l = 0; l < rep.legs[c].size(); ++l)
      legs[formula.clauses[c].literals[l] - 1].push_back(
          {as_long(rep.legs[c][l]), static_cast<int>(c), rep.clause_segments[c].row});

  // Copy4 chain with its in-ports at from, from+step, ..., to (empty if to
  // lies behind from). Turns follow the step direction.
  auto copies = [&](long from, long to, long step, long fixed, bool vertical, int v, bool inv,
                    const std::string& prov) {
    const int turns = vertical ? (step > 0 ? 1 : 3) : (step > 0 ? 0 : 2);
    for (long t = from; step > 0 ? t <= to : t >= to; t += step)
      b.place(GadgetKind::kCopy4, vertical ? at(fixed, t, turns) : at(t, fixed, turns), {}, prov,
              edge(v, inv));
  };

  for (int v = 1; v <= nv; ++v) {
    const std::string name = "v" + std::to_string(v);
    auto& vl = legs[v - 1];
    auto record_input = [&](std::size_t g) {
      art.port_map[v - 1] = art.gadgets[g].ports[0].mdisk;
      art.input_sdisk[v - 1] = art.gadgets[g].sdisks[0];
    };
    if (vl.empty()) {
      long col = as_long(rep.variable_segments[v - 1].lo);
      record_input(b.place(GadgetKind::kInput, at(K * col, 0), {"absorber"}, name + " input",
                           {{"out", {v, false, false}}}));
      continue;
    }
    std::sort(vl.begin(), vl.end(), [](const Leg& a, const Leg& c) { return a.column < c.column; });
    std::vector<long> cols;
    for (const auto& l : vl)
      if (cols.empty() || cols.back() != l.column) cols.push_back(l.column);

    record_input(b.place(GadgetKind::kInput, at(K * cols[0] - 2, 0), {}, name + " input",
                         {{"out", {v, false, false}}}));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const long x = K * cols[k];
      std::vector<std::string> keep;
      if (k + 1 < cols.size()) keep.push_back("east");
      for (const auto& l : vl) {
        if (l.column != cols[k]) continue;
        keep.push_back(l.row > 0 ? "north" : "south");
      }
      PortSignals sig{{"in", {v, false, true}}};
      for (const auto& o : keep) sig[o] = {v, false, false};
      b.place(GadgetKind::kCopy6, at(x, 0), keep,
              name + " junction at column " + std::to_string(cols[k]), sig);
      if (k + 1 < cols.size())
        copies(x + 1, K * cols[k + 1] - 3, 1, 0, false, v, false, name + " axis chain");
    }
    for (const auto& l : vl) {
      const long x = K * l.column;
      const std::string prov = "clause " + std::to_string(l.clause + 1) + " leg " + name;
      if (l.row > 0) {
        copies(1, K * l.row - 3, 1, x, true, v, false, prov);
      } else {
        b.place(GadgetKind::kNot, at(x, -1, 3), {}, prov + " negation",
                {{"in", {v, false, true}}, {"out", {v, true, false}}});
        copies(-2, -(K * -l.row - 3), -1, x, true, v, true, prov);
      }
    }
  }

  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    const auto& clause = formula.clauses[c];
    const bool pos = clause.polarity == Polarity::kPositive;
    const long Y = K * rep.clause_segments[c].row;
    const std::string prov = "clause " + std::to_string(c + 1);

    std::vector<std::pair<long, int>> order;  // (column, variable)
    for (std::size_t l = 0; l < clause.literals.size(); ++l)
      order.emplace_back(as_long(rep.legs[c][l]), clause.literals[l]);
    std::sort(order.begin(), order.end());
    const bool inv = !pos;

    // Disjunction sits on the middle leg, or the rightmost of two.
    const std::size_t mid = order.size() == 3 ? 1 : order.size() - 1;
    const long xm = K * order[mid].first;
    const std::string west_local = pos ? "west" : "east";
    const std::string east_local = pos ? "east" : "west";
    PortSignals dsig{{"south", {order[mid].second, inv, true}}};
    std::vector<std::string> dkeep{"south"};

    if (mid >= 1) {
      const auto [col, var] = order[0];
      const long x = K * col;
      const std::string out = pos ? "south" : "north";
      b.place(GadgetKind::kCopy6, at(x, Y, pos ? 1 : 3), {out}, prov + " west end",
              {{"in", {var, inv, true}}, {out, {var, inv, false}}});
      copies(x + 1, xm - 3, 1, Y, false, var, inv, prov + " west chain");
      dsig[west_local] = {var, inv, true};
      dkeep.push_back(west_local);
    }
    if (mid + 1 < order.size()) {
      const auto [col, var] = order[mid + 1];
      const long x = K * col;
      const std::string out = pos ? "north" : "south";
      b.place(GadgetKind::kCopy6, at(x, Y, pos ? 1 : 3), {out}, prov + " east end",
              {{"in", {var, inv, true}}, {out, {var, inv, false}}});
      copies(x - 1, xm + 3, -1, Y, false, var, inv, prov + " east chain");
      dsig[east_local] = {var, inv, true};
      dkeep.push_back(east_local);
    }
    b.place(GadgetKind::kDisjunction, at(xm, Y, pos ? 0 : 2), dkeep, prov + " disjunction", dsig);
  }

  b.finish();
  return art;
}

Assignment build_assignment_from_sat(const ReductionArtifact& artifact,
                                     const std::vector<bool>& values) {
  if (values.size() != static_cast<std::size_t>(artifact.formula.num_variables))
    throw Error(ErrorCode::kIdMismatch, "value count does not match variable count");

  std::map<DiskId, bool> signal;  // wire mdisk -> value on the wire
  std::map<DiskId, const Wire*> wire_of;
  Assignment phi = Assignment::identity(artifact.instance.size());
  for (const auto& w : artifact.wires) {
    bool s = values[w.variable - 1] != w.inverted;
    signal[w.mdisk] = s;
    wire_of[w.mdisk] = &w;
    phi.set_target(w.mdisk, s ? w.downstream_owner : w.upstream_owner);
  }

  for (const auto& g : artifact.gadgets) {
    auto held_by_me = [&](const PlacedPort& p) {
      const Wire& w = *wire_of.at(p.mdisk);
      return signal.at(p.mdisk) ? w.downstream_owner == p.owner : w.upstream_owner == p.owner;
    };
    DiskId sink = 0;
    switch (g.kind) {
      case GadgetKind::kInput:
        break;
      case GadgetKind::kCopy4:
      case GadgetKind::kCopy6:
      case GadgetKind::kNot:
        // The input side keeps the internal mdisks iff it holds its port.
        sink = held_by_me(g.ports[0]) ? g.sdisks[0] : g.sdisks[1];
        break;
      case GadgetKind::kDisjunction:
        for (const auto& p : g.ports)
          if (held_by_me(p)) {
            sink = p.owner;
            break;
          }
        if (sink == 0) throw Error(ErrorCode::kUnsatisfied, g.provenance + " has no true literal");
        break;
    }
    for (DiskId m : g.internal_mdisks) phi.set_target(m, sink);
  }
  return phi;
}

std::vector<bool> extract_sat_assignment(const ReductionArtifact& artifact,
                                         const Assignment& assignment) {
  auto report = verify_proper(artifact.instance, assignment, DisjointnessMode::kMax);
  if (!report.ok) throw Error(ErrorCode::kVerificationFailed, report.summary());
  std::vector<bool> values(artifact.formula.num_variables);
  for (std::size_t v = 0; v < values.size(); ++v)
    values[v] = assignment.target(artifact.port_map[v]) != artifact.input_sdisk[v];
  return values;
}

std::map<GadgetKind, std::size_t> gadget_counts(const ReductionArtifact& artifact) {
  std::map<GadgetKind, std::size_t> out;
  for (const auto& g : artifact.gadgets) ++out[g.kind];
  return out;
}

SubsetHarness build_subset_harness(const ReductionArtifact& artifact,
                                   const std::vector<std::size_t>& gadgets) {
  const Instance& inst = artifact.instance;
  std::vector<DiskId> sdisk_ids, mdisk_ids;
  std::set<DiskId> inside;
  for (std::size_t g : gadgets) {
    const auto& pg = artifact.gadgets.at(g);
    sdisk_ids.insert(sdisk_ids.end(), pg.sdisks.begin(), pg.sdisks.end());
    mdisk_ids.insert(mdisk_ids.end(), pg.internal_mdisks.begin(), pg.internal_mdisks.end());
    inside.insert(pg.sdisks.begin(), pg.sdisks.end());
  }
  std::map<DiskId, const Wire*> wire_of;
  for (const auto& w : artifact.wires) wire_of[w.mdisk] = &w;

  std::vector<Disk> absorbers;
  std::set<DiskId> ports;
  for (std::size_t g : gadgets) {
    for (const auto& p : artifact.gadgets[g].ports) {
      if (!ports.insert(p.mdisk).second) continue;
      mdisk_ids.push_back(p.mdisk);
      const Wire& w = *wire_of.at(p.mdisk);
      if (inside.count(w.upstream_owner) && inside.count(w.downstream_owner)) continue;
      const Point& c = inst.centre(p.mdisk);
      const Point perp{-p.outward.y, p.outward.x};
      absorbers.push_back({0,
                           {c.x + Rational(1, 4) * p.outward.x + Rational(1, 10) * perp.x,
                            c.y + Rational(1, 4) * p.outward.y + Rational(1, 10) * perp.y},
                           Rational(2, 5)});
    }
  }

  std::vector<Disk> sdisks = absorbers;
  for (DiskId id : sdisk_ids) sdisks.push_back(inst.disk(id));
  std::vector<Point> mcentres;
  for (DiskId id : mdisk_ids) mcentres.push_back(inst.centre(id));
  const Rational eps = choose_mdisk_radius(sdisks, mcentres);

  SubsetHarness h;
  std::vector<Disk> disks;
  auto add = [&](const Point& c, const Rational& r, DiskId from) {
    disks.push_back({static_cast<DiskId>(disks.size() + 1), c, r});
    h.origin.push_back(from);
  };
  for (DiskId id : sdisk_ids) add(inst.centre(id), inst.radius(id), id);
  for (const auto& a : absorbers) add(a.centre, a.radius, 0);
  for (DiskId id : mdisk_ids) add(inst.centre(id), eps, id);
  h.instance = Instance(std::move(disks));
  return h;
}

}  // namespace mcmd::reductions
