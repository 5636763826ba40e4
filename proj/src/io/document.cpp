#include <algorithm>
#include <map>

#include "mcmd/io.hpp"

namespace mcmd::io {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kMalformed, what); }

json parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("document must be an object");
  auto v = doc.find("version");
  if (v == doc.end() || !v->is_number_integer() || v->get<int>() != kVersion)
    malformed("unsupported or missing version");
  return doc;
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) malformed("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

Rational rational(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw Error(ErrorCode::kBadRational, "rationals must be strings such as \"3\" or \"-1/2\"");
}

long integer(const json& value, const char* what) {
  if (!value.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return value.get<long>();
}

DiskId id_value(const json& value) {
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), ::isdigit))
      malformed("disk id \"" + s + "\" is not a positive integer");
    return std::stoi(s);
  }
  return static_cast<DiskId>(integer(value, "disk id"));
}

std::string text(const Rational& q) { return format_rational(q); }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

}  // namespace

InstanceDocument parse_instance_document(std::string_view input) {
  return guarded([&] {
    json doc = parse_json(input);
    const json& list = field(doc, "disks");
    if (!list.is_array()) malformed("\"disks\" must be an array");

    std::map<DiskId, Disk> by_id;
    for (const auto& item : list) {
      Disk d;
      d.id = id_value(field(item, "id"));
      d.centre = {rational(field(item, "x")), rational(field(item, "y"))};
      d.radius = rational(field(item, "r"));
      if (d.radius <= 0)
        throw Error(ErrorCode::kNonPositiveRadius, "disk " + std::to_string(d.id) + " has radius <= 0");
      if (!by_id.emplace(d.id, d).second)
        throw Error(ErrorCode::kDuplicateId, "disk id " + std::to_string(d.id) + " repeats");
    }
    std::vector<Disk> disks;
    for (auto& [id, d] : by_id) {
      if (id != static_cast<DiskId>(disks.size() + 1))
        throw Error(ErrorCode::kGappedId, "disk ids must be 1..n, missing " +
                                              std::to_string(disks.size() + 1));
      disks.push_back(std::move(d));
    }
    InstanceDocument out{Instance(std::move(disks)), nullptr};
    if (auto it = doc.find("metadata"); it != doc.end()) out.metadata = *it;
    return out;
  });
}

Instance parse_instance(std::string_view text) { return parse_instance_document(text).instance; }

std::string serialize_instance(const Instance& instance, const json& metadata) {
  json disks = json::array();
  for (const auto& d : instance.disks())
    disks.push_back({{"id", d.id}, {"x", text(d.centre.x)}, {"y", text(d.centre.y)}, {"r", text(d.radius)}});
  json doc{{"version", kVersion}, {"disks", std::move(disks)}};
  if (!metadata.is_null()) doc["metadata"] = metadata;
  return dump(doc);
}

std::string serialize_instance(const InstanceDocument& doc) {
  return serialize_instance(doc.instance, doc.metadata);
}

Assignment parse_assignment(std::string_view input) {
  return guarded([&] {
    json doc = parse_json(input);
    const json& target = field(doc, "target");
    if (!target.is_object()) malformed("\"target\" must be an object");
    std::vector<DiskId> targets(target.size(), 0);
    for (const auto& [key, value] : target.items()) {
      DiskId from = id_value(json(key));
      if (from < 1 || static_cast<std::size_t>(from) > targets.size())
        throw Error(ErrorCode::kGappedId, "assignment ids must be 1..n, got " + key);
      DiskId to = id_value(value);
      if (to < 1 || static_cast<std::size_t>(to) > targets.size())
        throw Error(ErrorCode::kOutOfRange, "disk " + key + " maps outside 1..n");
      targets[from - 1] = to;
    }
    return Assignment(std::move(targets));
  });
}

std::string serialize_assignment(const Assignment& assignment) {
  json target = json::object();
  for (std::size_t k = 0; k < assignment.size(); ++k)
    target[std::to_string(k + 1)] = std::to_string(assignment.targets()[k]);
  return dump({{"version", kVersion}, {"target", std::move(target)}});
}

reductions::MonotoneFormula parse_formula(std::string_view input) {
  return guarded([&] {
    json doc = parse_json(input);
    reductions::MonotoneFormula f;
    f.num_variables = static_cast<int>(integer(field(doc, "num_variables"), "num_variables"));
    for (const auto& c : field(doc, "clauses")) {
      reductions::Clause clause;
      const auto pol = field(c, "polarity").get<std::string>();
      if (pol == "positive") clause.polarity = reductions::Polarity::kPositive;
      else if (pol == "negative") clause.polarity = reductions::Polarity::kNegative;
      else malformed("polarity must be \"positive\" or \"negative\"");
      for (const auto& v : field(c, "literals")) clause.literals.push_back(static_cast<int>(integer(v, "literal")));
      f.clauses.push_back(std::move(clause));
    }
    f.validate();
    return f;
  });
}

std::string serialize_formula(const reductions::MonotoneFormula& formula) {
  json clauses = json::array();
  for (const auto& c : formula.clauses)
    clauses.push_back({{"polarity", c.polarity == reductions::Polarity::kPositive ? "positive" : "negative"},
                       {"literals", c.literals}});
  return dump({{"version", kVersion}, {"num_variables", formula.num_variables}, {"clauses", clauses}});
}

reductions::RectilinearRep parse_rep(std::string_view input) {
  return guarded([&] {
    json doc = parse_json(input);
    reductions::RectilinearRep rep;
    for (const auto& v : field(doc, "variables"))
      rep.variable_segments.push_back({rational(field(v, "lo")), rational(field(v, "hi"))});
    for (const auto& c : field(doc, "clauses")) {
      rep.clause_segments.push_back({{rational(field(c, "lo")), rational(field(c, "hi"))},
                                     integer(field(c, "row"), "row")});
      std::vector<Rational> legs;
      for (const auto& x : field(c, "legs")) legs.push_back(rational(x));
      rep.legs.push_back(std::move(legs));
    }
    return rep;
  });
}

std::string serialize_rep(const reductions::RectilinearRep& rep) {
  json vars = json::array(), clauses = json::array();
  for (const auto& v : rep.variable_segments) vars.push_back({{"lo", text(v.lo)}, {"hi", text(v.hi)}});
  for (std::size_t c = 0; c < rep.clause_segments.size(); ++c) {
    json legs = json::array();
    for (const auto& x : rep.legs[c]) legs.push_back(text(x));
    const auto& seg = rep.clause_segments[c];
    clauses.push_back({{"lo", text(seg.span.lo)}, {"hi", text(seg.span.hi)}, {"row", seg.row}, {"legs", legs}});
  }
  return dump({{"version", kVersion}, {"variables", vars}, {"clauses", clauses}});
}

std::string serialize_artifact(const reductions::ReductionArtifact& artifact) {
  json gadgets = json::array();
  for (const auto& g : artifact.gadgets) {
    json ports = json::array();
    for (const auto& p : g.ports) ports.push_back({{"name", p.name}, {"mdisk", p.mdisk}, {"owner", p.owner}});
    gadgets.push_back({{"kind", reductions::to_string(g.kind)},
                       {"provenance", g.provenance},
                       {"pose",
                        {{"x", text(g.pose.translation.x)},
                         {"y", text(g.pose.translation.y)},
                         {"quarter_turns", g.pose.quarter_turns},
                         {"mirror", g.pose.mirror}}},
                       {"sdisks", g.sdisks},
                       {"internal_mdisks", g.internal_mdisks},
                       {"ports", ports}});
  }
  json wires = json::array();
  for (const auto& w : artifact.wires)
    wires.push_back({{"mdisk", w.mdisk},
                     {"upstream", w.upstream_owner},
                     {"downstream", w.downstream_owner},
                     {"variable", w.variable},
                     {"inverted", w.inverted}});
  json port_map = json::object(), input_sdisk = json::object();
  for (std::size_t v = 0; v < artifact.port_map.size(); ++v) {
    port_map[std::to_string(v + 1)] = artifact.port_map[v];
    input_sdisk[std::to_string(v + 1)] = artifact.input_sdisk[v];
  }
  json meta{{"kind", "sat-reduction"},
            {"grid_scale", artifact.grid_scale},
            {"formula", json::parse(serialize_formula(artifact.formula))},
            {"port_map", port_map},
            {"input_sdisk", input_sdisk},
            {"gadgets", gadgets},
            {"wires", wires}};
  return serialize_instance(artifact.instance, meta);
}

}  // namespace mcmd::io
