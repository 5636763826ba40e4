#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcmd/cli.hpp"
#include "mcmd/io.hpp"
#include "mcmd/reductions.hpp"
#include "mcmd/solvers.hpp"

namespace mcmd::cli {

namespace {

using nlohmann::json;

// Thrown for bad arguments detected after CLI11 has parsed them.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

DisjointnessMode mode_of(const std::string& name) {
  return name == "sum" ? DisjointnessMode::kSum : DisjointnessMode::kMax;
}

Rational rational_arg(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw UsageError(std::string(flag) + " expects a rational such as 3 or 1/2");
  }
}

std::vector<long> csv_values(const std::string& text) {
  std::vector<long> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("--values expects integers such as 3,1,2");
    values.push_back(v);
  }
  return values;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mergeable disks: solvers, verifiers and reductions"};
  app.require_subcommand(1);
  app.fallthrough();  // --mode may follow the subcommand
  std::string mode = "max";
  app.add_option("--mode", mode, "Disjointness rule for selected disks")
      ->check(CLI::IsMember({"max", "sum"}))
      ->capture_default_str();

  std::string input, second, output;

  auto* solve = app.add_subcommand("solve", "Maximum-cardinality assignment");
  bool collinear = false, exact = false, relaxed = false;
  std::size_t max_n = solvers::kDefaultMaxN;
  auto* c_flag = solve->add_flag("--collinear", collinear, "Dynamic program for collinear centres");
  solve->add_flag("--exact", exact, "Exhaustive search")->excludes(c_flag);
  solve->add_flag("--relaxed", relaxed, "Allow unordered merging (exact only)");
  solve->add_option("--max-n", max_n, "Size limit for --exact")->capture_default_str();
  solve->add_option("IN", input, "Instance document")->required();
  solve->add_option("-o,--output", output, "Write the assignment document here");

  auto* verify = app.add_subcommand("verify", "Check an assignment");
  verify->add_flag("--relaxed", relaxed, "Check the unordered relaxation");
  verify->add_option("INSTANCE", input)->required();
  verify->add_option("ASSIGNMENT", second)->required();

  auto* reduce = app.add_subcommand("reduce", "Build hardness-reduction instances");
  reduce->require_subcommand(1);
  reduce->fallthrough();
  auto* sat = reduce->add_subcommand("sat", "Planar monotone 3-SAT to mergeable disks");
  sat->add_option("FORMULA", input)->required();
  sat->add_option("REP", second)->required();
  sat->add_option("-o,--output", output);
  auto* partition = reduce->add_subcommand("partition", "Partition to the relaxed problem");
  std::string values_csv, e_text = "1/4";
  partition->add_option("--values", values_csv, "Comma-separated positive integers")->required();
  partition->add_option("--e", e_text, "Cap offset, 0 < e < 1")->capture_default_str();
  partition->add_option("-o,--output", output);

  auto* equalize = app.add_subcommand("equalize", "Split disks into concentric copies of radius r");
  std::string r_text;
  equalize->add_option("--r", r_text)->required();
  equalize->add_option("IN", input)->required();
  equalize->add_option("-o,--output", output);

  auto* render = app.add_subcommand("render", "Draw an instance as SVG");
  std::string scale_text = "40";
  bool no_labels = false;
  render->add_option("IN", input)->required();
  render->add_option("ASSIGNMENT", second);
  render->add_option("-o,--output", output)->required();
  render->add_option("--scale", scale_text, "Pixels per unit")->capture_default_str();
  render->add_flag("--no-labels", no_labels);
  render->add_flag("--relaxed", relaxed);

  auto* gen = app.add_subcommand("gen", "Random instance");
  std::size_t n = 0;
  std::string profile = "collinear";
  std::uint64_t seed = 0;
  gen->add_option("--n", n)->required();
  gen->add_option("--profile", profile)->check(CLI::IsMember({"collinear", "planar"}))->capture_default_str();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("-o,--output", output);

  std::vector<std::string> argv_store{"mcmd"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  const DisjointnessMode dmode = mode_of(mode);
  try {
    if (*solve) {
      if (collinear == exact) throw UsageError("choose exactly one of --collinear and --exact");
      if (collinear && relaxed) throw UsageError("--relaxed needs --exact");
      Instance inst = io::parse_instance(read_file(input));
      json report;
      solvers::SolveResult result;
      if (collinear) {
        auto sol = solvers::solve_collinear(inst, dmode);
        result = sol.result;
        report["windows"] = sol.stats.windows;
        report["transitions"] = sol.stats.transitions;
      } else {
        result = relaxed ? solvers::solve_exact_rmcmd(inst, dmode, max_n)
                         : solvers::solve_exact_mcmd(inst, dmode, max_n);
      }
      report["status"] = result.feasible() ? "FEASIBLE" : "INFEASIBLE";
      report["mode"] = mode;
      if (result.feasible()) {
        report["cardinality"] = result.best_cardinality;
        if (output.empty()) report["assignment"] = json::parse(io::serialize_assignment(result.assignment));
        else emit(io::serialize_assignment(result.assignment), output, out);
      }
      out << report.dump() << "\n";
      return 0;
    }
    if (*verify) {
      Instance inst = io::parse_instance(read_file(input));
      Assignment phi = io::parse_assignment(read_file(second));
      auto rep = relaxed ? verify_uproper(inst, phi, dmode) : verify_proper(inst, phi, dmode);
      if (rep.ok) {
        out << "OK cardinality " << cardinality(phi) << "\n";
        return 0;
      }
      out << "FAIL\n" << rep.summary() << "\n";
      return 2;
    }
    if (*sat) {
      auto formula = io::parse_formula(read_file(input));
      auto rep = reductions::grid_embed(io::parse_rep(read_file(second)));
      auto art = reductions::reduce_sat(formula, rep);
      emit(io::serialize_artifact(art), output, out);
      if (!output.empty())
        out << json{{"disks", art.instance.size()}, {"gadgets", art.gadgets.size()}}.dump() << "\n";
      return 0;
    }
    if (*partition) {
      reductions::PartitionInput pin{csv_values(values_csv), rational_arg(e_text, "--e")};
      Instance inst = reductions::reduce_partition(pin);
      json meta{{"kind", "partition-reduction"}, {"values", pin.values}, {"e", format_rational(pin.e)}};
      emit(io::serialize_instance(inst, meta), output, out);
      return 0;
    }
    if (*equalize) {
      Instance inst = io::parse_instance(read_file(input));
      auto eq = reductions::equalize_radii(inst, rational_arg(r_text, "--r"));
      emit(io::serialize_instance(eq.instance, json{{"origin", eq.origin}}), output, out);
      return 0;
    }
    if (*render) {
      Instance inst = io::parse_instance(read_file(input));
      std::optional<Assignment> phi;
      if (!second.empty()) phi = io::parse_assignment(read_file(second));
      io::SvgOptions opts;
      opts.scale = rational_arg(scale_text, "--scale");
      if (opts.scale <= 0) throw UsageError("--scale must be positive");
      opts.labels = !no_labels;
      opts.mode = dmode;
      opts.relaxed = relaxed;
      try {
        emit(io::render_svg(inst, phi, opts), output, out);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kVerificationFailed) throw;
        err << "assignment does not verify: " << e.what() << "\n";
        return 2;
      }
      return 0;
    }
    if (*gen) {
      Instance inst = generate_random(n, profile == "planar" ? Profile::kPlanar : Profile::kCollinear, seed);
      emit(io::serialize_instance(inst), output, out);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace mcmd::cli
