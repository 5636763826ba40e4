#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcmd/core.hpp"

namespace mcmd::reductions {

// ---------------------------------------------------------------------------
// Planar monotone 3-SAT

enum class Polarity { kPositive, kNegative };

struct Clause {
  Polarity polarity = Polarity::kPositive;
  std::vector<int> literals;  // 1-based variable indices
};

struct MonotoneFormula {
  int num_variables = 0;
  std::vector<Clause> clauses;

  // Throws Error(kMalformed) on out-of-range or repeated variables, or
  // clauses with no literals or more than three.
  void validate() const;
  // values[v - 1] is the value of variable v.
  bool satisfied_by(const std::vector<bool>& values) const;
};

// Every satisfying assignment, by exhaustive search (num_variables <= 20).
std::vector<std::vector<bool>> satisfying_assignments(const MonotoneFormula& formula);

struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct ClauseSegment {
  Interval span;
  long row = 0;  // > 0 above the variable axis, < 0 below

  friend bool operator==(const ClauseSegment&, const ClauseSegment&) = default;
};

// Monotone rectilinear drawing: variables are disjoint segments on the
// x-axis, clauses are horizontal segments at non-zero rows, and legs[c][l] is
// the x-coordinate of the vertical edge joining clause c to its l-th literal.
struct RectilinearRep {
  std::vector<Interval> variable_segments;
  std::vector<ClauseSegment> clause_segments;
  std::vector<std::vector<Rational>> legs;

  friend bool operator==(const RectilinearRep&, const RectilinearRep&) = default;
};

// Geometric validity: disjoint variables, legs inside their clause span and
// on some variable, and no crossings. Throws Error(kInvalidRepresentation).
void validate(const RectilinearRep& rep);
// Also checks that the drawing matches the formula.
void validate(const MonotoneFormula& formula, const RectilinearRep& rep);

struct GridExtent {
  long rows = 0;
  long columns = 0;
};

// Bounding grid of an integer drawing: rows counts the axis plus every row
// between the lowest and highest clause, columns spans all used x-positions.
GridExtent grid_extent(const RectilinearRep& rep);

// Compresses clause rows to consecutive integers on each side of the axis
// and every vertical line to consecutive integer columns, preserving the
// left-to-right and bottom-to-top orders. Variables without legs each get a
// column of their own.
RectilinearRep grid_embed(const RectilinearRep& rep);

// ---------------------------------------------------------------------------
// Gadgets

enum class GadgetKind { kInput, kCopy4, kCopy6, kDisjunction, kNot };

const char* to_string(GadgetKind kind);

// Local frame -> plane: optional reflection of local y, then quarter_turns
// counter-clockwise rotations, then translation. Translations must be integer
// so ports land on lattice points.
struct Pose {
  Point translation;
  int quarter_turns = 0;
  bool mirror = false;

  Point apply(const Point& local) const;
};

struct GadgetPort {
  std::string name;
  Point point;
  Point outward;     // unit axis direction pointing away from the gadget
  std::size_t owner;  // index into Gadget::sdisks that holds the port when merged in
};

// Disks carry id 0 until the gadget is placed into an instance. Port mdisks
// are not stored here; they are created (and shared) at assembly time.
struct Gadget {
  GadgetKind kind = GadgetKind::kInput;
  Pose pose;
  std::vector<Disk> sdisks;
  std::vector<Point> internal_mdisks;
  std::vector<GadgetPort> ports;
};

// Port names per kind, in canonical order:
//   Input: out                 Copy4, Not: in, out
//   Copy6: in, east, north, south (outputs may be dropped)
//   Disjunction: west, south, east (any may be dropped, at least one kept)
// `keep` lists the optional ports to retain; empty keeps all.
// Input gadgets take "absorber" in `keep` to add an sdisk outside the port.
Gadget build_gadget(GadgetKind kind, const Pose& pose, const std::vector<std::string>& keep = {});

// A gadget with one absorber sdisk outside each port, so "merged out" is
// realizable. port_mdisks[k] is the id of port k's mdisk, port_owner[k] the
// gadget sdisk that takes it when merged in.
struct GadgetHarness {
  Instance instance;
  std::vector<DiskId> port_mdisks;
  std::vector<DiskId> port_owner;
};

GadgetHarness build_gadget_harness(GadgetKind kind, const std::vector<std::string>& keep = {});

// mdisk radius for a set of sdisks and mdisk centres: a rational lower bound
// of the smallest clearance between an sdisk boundary and any centre outside
// it, divided by four times the mdisk count.
Rational choose_mdisk_radius(const std::vector<Disk>& sdisks, const std::vector<Point>& mdisks);

// ---------------------------------------------------------------------------
// Planar monotone 3-SAT reduction

struct PlacedPort {
  std::string name;
  DiskId mdisk = 0;
  DiskId owner = 0;  // sdisk of this gadget holding the port when merged in
  Point outward;
};

struct PlacedGadget {
  GadgetKind kind = GadgetKind::kInput;
  Pose pose;
  std::vector<DiskId> sdisks;
  std::vector<DiskId> internal_mdisks;
  std::vector<PlacedPort> ports;
  std::string provenance;
};

// A shared mdisk between two gadgets. It carries `variable`'s value,
// negated when `inverted`; value one means the downstream gadget holds it.
struct Wire {
  DiskId mdisk = 0;
  DiskId upstream_owner = 0;
  DiskId downstream_owner = 0;
  int variable = 0;
  bool inverted = false;
};

struct ReductionArtifact {
  Instance instance;
  MonotoneFormula formula;
  std::vector<DiskId> port_map;      // port_map[v - 1]: Input mdisk of variable v
  std::vector<DiskId> input_sdisk;   // input_sdisk[v - 1]: Input gadget's own sdisk
  std::vector<PlacedGadget> gadgets;
  std::vector<Wire> wires;
  long grid_scale = 4;               // plane units per grid unit
};

// rep must be grid-embedded (integer rows and columns) and match the formula.
ReductionArtifact reduce_sat(const MonotoneFormula& formula, const RectilinearRep& rep);

// Propagates the variable values through every gadget. Throws
// Error(kUnsatisfied) when a clause gadget receives no true literal.
Assignment build_assignment_from_sat(const ReductionArtifact& artifact,
                                     const std::vector<bool>& values);

// Reads variable values back from a proper assignment: one iff the Input
// mdisk is merged out. Throws Error(kVerificationFailed) if the assignment
// is not proper.
std::vector<bool> extract_sat_assignment(const ReductionArtifact& artifact,
                                         const Assignment& assignment);

std::map<GadgetKind, std::size_t> gadget_counts(const ReductionArtifact& artifact);

// A few placed gadgets cut out of a reduction, with an absorber outside
// every port whose other end lies outside the subset. origin maps harness
// ids back to artifact ids (0 for absorbers).
struct SubsetHarness {
  Instance instance;
  std::vector<DiskId> origin;
};

SubsetHarness build_subset_harness(const ReductionArtifact& artifact,
                                   const std::vector<std::size_t>& gadgets);

struct Fixture {
  std::string name;
  MonotoneFormula formula;
  RectilinearRep rep;
};

// Small formulas with hand-made (not yet grid-embedded) drawings.
std::vector<Fixture> builtin_fixtures();

// ---------------------------------------------------------------------------
// Equal radii

struct EqualizedInstance {
  Instance instance;
  std::vector<DiskId> origin;  // origin[new_id - 1] = original id
};

// Replaces each disk of radius k*r by k concentric disks of radius r. New ids
// follow the original order, so each group is contiguous.
EqualizedInstance equalize_radii(const Instance& instance, const Rational& r);

// ---------------------------------------------------------------------------
// Partition

struct PartitionInput {
  std::vector<long> values;
  Rational e = make_rational(1, 4);
};

// Disks 1-4 are the two large disks and the two caps above them; disk 4 + k
// carries values[k - 1].
Instance reduce_partition(const PartitionInput& input);

}  // namespace mcmd::reductions
