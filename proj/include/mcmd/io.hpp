#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mcmd/core.hpp"
#include "mcmd/reductions.hpp"

namespace mcmd::io {

inline constexpr int kVersion = 1;

struct InstanceDocument {
  Instance instance;
  nlohmann::json metadata;  // null when absent

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

// {"version":1,"disks":[{"id":1,"x":"0","y":"0","r":"1"}],"metadata":{...}}
// Coordinates are rational strings; plain JSON integers are accepted too.
InstanceDocument parse_instance_document(std::string_view text);
Instance parse_instance(std::string_view text);

// Canonical text: sorted keys, lowest-terms rationals, trailing newline.
std::string serialize_instance(const Instance& instance, const nlohmann::json& metadata = nullptr);
std::string serialize_instance(const InstanceDocument& doc);

// {"version":1,"target":{"1":"1","2":"1"}}
Assignment parse_assignment(std::string_view text);
std::string serialize_assignment(const Assignment& assignment);

// {"version":1,"num_variables":3,"clauses":[{"polarity":"positive","literals":[1,2,3]}]}
reductions::MonotoneFormula parse_formula(std::string_view text);
std::string serialize_formula(const reductions::MonotoneFormula& formula);

// {"version":1,"variables":[{"lo":"0","hi":"2"}],
//  "clauses":[{"lo":"0","hi":"2","row":1,"legs":["0","1","2"]}]}
reductions::RectilinearRep parse_rep(std::string_view text);
std::string serialize_rep(const reductions::RectilinearRep& rep);

// Instance document whose metadata lists every gadget with its provenance,
// the wires and the Input port of each variable.
std::string serialize_artifact(const reductions::ReductionArtifact& artifact);

struct SvgOptions {
  Rational scale = 40;  // pixels per unit
  bool labels = true;
  DisjointnessMode mode = DisjointnessMode::kMax;
  bool relaxed = false;  // check the assignment as uproper instead of proper
};

// Circles per disk, y pointing up. With an assignment, every selected disk
// that absorbed others gets a dashed aggregate circle, and each merged disk a
// segment to its target. Throws Error(kVerificationFailed) on a bad assignment.
std::string render_svg(const Instance& instance, const std::optional<Assignment>& assignment,
                       const SvgOptions& options = {});

}  // namespace mcmd::io
